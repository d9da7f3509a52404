// Command-line front end: instance generation, single-instance analysis,
// grid experiments and objective-space scatter plots.
//
// Exit codes: 0 success, 1 generic failure, 2 correlation bound violation,
// 3 search space over the enumeration guard, 4 resume configuration
// mismatch, 5 plot requested for a non-two-objective instance.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rhomnk/analysis.hpp"
#include "rhomnk/common.hpp"
#include "rhomnk/experiment.hpp"
#include "rhomnk/parallel.hpp"
#include "rhomnk/svg_plot.hpp"

namespace fs = std::filesystem;
using namespace rhomnk;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitRhoBound = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitResumeMismatch = 4;
constexpr int kExitPlotObjectives = 5;

int workers_from_env(int requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("RHOMNK_WORKERS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return 0;
}

struct GenerateArgs {
  int m = 2, n = 18, k = 4;
  double rho = 0.0;
  std::string model = "random";
  uint64_t seed = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& args) {
  InstanceParams params;
  params.m = args.m;
  params.n = args.n;
  params.k = args.k;
  params.link_model = link_model_from_string(args.model);
  params.seed = args.seed;
  try {
    params.correlation = uniform_rho_matrix(args.rho, args.m);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRhoBound;
  }
  const Instance inst = generate_instance(params);
  write_instance_file(inst, args.out);
  std::cout << "wrote " << args.out << ": " << describe_params(params) << '\n';
  return 0;
}

struct AnalyzeArgs {
  std::string instance_path;
  std::string out_dir;
  bool plot = false;
  int workers = 0;
  int baseline_repeats = 30;
  double sample_fraction = 0.10;
};

int cmd_analyze(const AnalyzeArgs& args) {
  const Instance inst = read_instance_file(args.instance_path);
  if (args.plot && inst.params.m != 2) {
    std::cerr << "error: 2-objective plots only (instance has m=" << inst.params.m << ")\n";
    return kExitPlotObjectives;
  }
  AnalysisOptions options;
  options.workers = workers_from_env(args.workers);
  options.baseline_repeats = args.baseline_repeats;

  ObjectiveTable table;
  try {
    table = enumerate(inst, options.workers);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  }
  const AnalysisResult result = analyze_table(inst.params, table, options);
  const std::string digest =
      hex_digest(fnv1a64(analysis_config_string(inst.params, options)));

  fs::create_directories(args.out_dir);
  {
    std::ofstream out(fs::path(args.out_dir) / "efficient.csv", std::ios::binary);
    write_efficient_csv(result, digest, out);
  }
  {
    std::ofstream out(fs::path(args.out_dir) / "report.json", std::ios::binary);
    write_report_json(result, digest, out);
  }
  if (args.plot) {
    const uint64_t count = static_cast<uint64_t>(
        args.sample_fraction * static_cast<double>(table.rows()));
    RandomStream stream(inst.params.seed, "plot-sample", 0);
    const auto sample = random_solution_sample(count, inst.params.n, stream);
    std::ofstream out(fs::path(args.out_dir) / "objspace.svg", std::ios::binary);
    write_objective_scatter_svg(table, result.eff, result.sup, sample,
                                describe_params(inst.params), digest, out);
  }
  std::cout << "analyzed " << args.instance_path << ": " << result.eff.size()
            << " efficient, " << result.sup.size() << " supported, "
            << result.conn.component_sizes.size() << " components\n";
  return 0;
}

struct ExperimentArgs {
  std::vector<double> rho;
  std::vector<int> m;
  std::vector<int> k;
  int n = 18;
  std::string model = "random";
  int replicates = 30;
  uint64_t seed = 0;
  std::string out_dir;
  int workers = 0;
  int baseline_repeats = 30;
};

int cmd_experiment(const ExperimentArgs& args) {
  ExperimentConfig config;
  config.grid.rho = args.rho;
  config.grid.m = args.m;
  config.grid.k = args.k;
  config.grid.n = args.n;
  config.grid.model = link_model_from_string(args.model);
  config.replicates = args.replicates;
  config.master_seed = args.seed;
  config.workers = workers_from_env(args.workers);
  config.baseline_repeats = args.baseline_repeats;
  try {
    run_experiment(config, args.out_dir, std::cerr);
  } catch (const ResumeMismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResumeMismatch;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRhoBound;
  }
  return 0;
}

struct PlotArgs {
  std::string instance_path;
  std::string out;
  double sample_fraction = 0.10;
  int workers = 0;
};

int cmd_plot(const PlotArgs& args) {
  const Instance inst = read_instance_file(args.instance_path);
  if (inst.params.m != 2) {
    std::cerr << "error: 2-objective plots only (instance has m=" << inst.params.m << ")\n";
    return kExitPlotObjectives;
  }
  ObjectiveTable table;
  try {
    table = enumerate(inst, workers_from_env(args.workers));
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  }
  const EfficientSet eff = efficient_set(table);
  const SupportedSet sup = supported_set(eff);
  const uint64_t count =
      static_cast<uint64_t>(args.sample_fraction * static_cast<double>(table.rows()));
  RandomStream stream(inst.params.seed, "plot-sample", 0);
  const auto sample = random_solution_sample(count, inst.params.n, stream);
  AnalysisOptions options;
  const std::string digest =
      hex_digest(fnv1a64(analysis_config_string(inst.params, options)));
  std::ofstream out(args.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + args.out);
  write_objective_scatter_svg(table, eff, sup, sample, describe_params(inst.params),
                              digest, out);
  std::cout << "wrote " << args.out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rho-MNK landscape generator and analysis toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "generate an instance file");
  generate->add_option("--m", gen.m, "number of objectives")->capture_default_str();
  generate->add_option("--n", gen.n, "bit-string length")->capture_default_str();
  generate->add_option("--k", gen.k, "epistatic links per bit")->capture_default_str();
  generate->add_option("--rho", gen.rho, "objective correlation")->capture_default_str();
  generate->add_option("--model", gen.model, "link model: adjacent|random")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "instance seed")->capture_default_str();
  generate->add_option("--out", gen.out, "output instance file")->required();

  AnalyzeArgs ana;
  auto* analyze = app.add_subcommand("analyze", "enumerate and analyze an instance");
  analyze->add_option("--instance", ana.instance_path, "instance file")->required();
  analyze->add_option("--out-dir", ana.out_dir, "output directory")->required();
  analyze->add_flag("--plot", ana.plot, "also write objspace.svg (m=2 only)");
  analyze->add_option("--workers", ana.workers, "worker threads (0 = all)")
      ->capture_default_str();
  analyze->add_option("--baseline-repeats", ana.baseline_repeats,
                      "random-baseline repeats")
      ->capture_default_str();
  analyze->add_option("--sample-fraction", ana.sample_fraction,
                      "plot sample fraction of the search space")
      ->capture_default_str();

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "run a parameter grid");
  experiment->add_option("--rho", exp.rho, "correlation values")->required()->delimiter(',');
  experiment->add_option("--m", exp.m, "objective counts")->required()->delimiter(',');
  experiment->add_option("--k", exp.k, "epistatic link counts")->required()->delimiter(',');
  experiment->add_option("--n", exp.n, "bit-string length")->capture_default_str();
  experiment->add_option("--model", exp.model, "link model: adjacent|random")
      ->capture_default_str();
  experiment->add_option("--replicates", exp.replicates, "replicates per combination")
      ->capture_default_str();
  experiment->add_option("--seed", exp.seed, "master seed")->capture_default_str();
  experiment->add_option("--out-dir", exp.out_dir, "output directory")->required();
  experiment->add_option("--workers", exp.workers, "worker threads (0 = all)")
      ->capture_default_str();
  experiment->add_option("--baseline-repeats", exp.baseline_repeats,
                         "random-baseline repeats")
      ->capture_default_str();

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("plot", "objective-space scatter (m=2 only)");
  plot_cmd->add_option("--instance", plot.instance_path, "instance file")->required();
  plot_cmd->add_option("--out", plot.out, "output SVG file")->required();
  plot_cmd->add_option("--sample-fraction", plot.sample_fraction,
                       "sample fraction of the search space")
      ->capture_default_str();
  plot_cmd->add_option("--workers", plot.workers, "worker threads (0 = all)")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (analyze->parsed()) return cmd_analyze(ana);
    if (experiment->parsed()) return cmd_experiment(exp);
    if (plot_cmd->parsed()) return cmd_plot(plot);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
