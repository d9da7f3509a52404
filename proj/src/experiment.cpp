#include "rhomnk/experiment.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rhomnk/common.hpp"

namespace rhomnk {

namespace {

constexpr std::string_view kResultColumns =
    "rho,m,n,k,replicate,seed,n_efficient,prop_efficient,n_supported,"
    "supported_over_efficient,largest_component_ratio,n_components,minimal_connect_k,"
    "mean_spearman,mean_pearson,baseline_largest_ratio";

std::string join_reals(const std::vector<double>& values) {
  std::string s;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += format_real(values[i]);
  }
  return s;
}

std::string join_ints(const std::vector<int>& values) {
  std::string s;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  for (;;) {
    const size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

std::string experiment_config_string(const ExperimentConfig& config) {
  std::string s(kToolName);
  s += " ";
  s += kToolVersion;
  s += "|experiment|n=" + std::to_string(config.grid.n);
  s += "|m=" + join_ints(config.grid.m);
  s += "|k=" + join_ints(config.grid.k);
  s += "|rho=" + join_reals(config.grid.rho);
  s += "|model=" + to_string(config.grid.model);
  s += "|replicates=" + std::to_string(config.replicates);
  s += "|master_seed=" + std::to_string(config.master_seed);
  s += "|baseline_repeats=" + std::to_string(config.baseline_repeats);
  return s;
}

std::string experiment_config_digest(const ExperimentConfig& config) {
  return hex_digest(fnv1a64(experiment_config_string(config)));
}

std::string results_csv_header(const ExperimentConfig& config, const std::string& digest) {
  std::string s = "# ";
  s += kToolName;
  s += ' ';
  s += kToolVersion;
  s += "\n# config ";
  s += digest;
  s += "\n# ";
  s += experiment_config_string(config);
  s += '\n';
  s += kResultColumns;
  s += '\n';
  return s;
}

std::string format_result_row(const GridResultRow& row) {
  std::string s;
  s += format_real(row.rho);
  s += ',' + std::to_string(row.m);
  s += ',' + std::to_string(row.n);
  s += ',' + std::to_string(row.k);
  s += ',' + std::to_string(row.replicate);
  s += ',' + std::to_string(row.seed);
  s += ',' + std::to_string(row.n_efficient);
  s += ',' + format_real(row.prop_efficient);
  s += ',' + std::to_string(row.n_supported);
  s += ',' + format_real(row.supported_over_efficient);
  s += ',' + format_real(row.largest_component_ratio);
  s += ',' + std::to_string(row.n_components);
  s += ',' + std::to_string(row.minimal_connect_k);
  s += ',' + format_real(row.mean_spearman);
  s += ',' + format_real(row.mean_pearson);
  s += ',' + format_real(row.baseline_largest_ratio);
  return s;
}

std::vector<GridResultRow> read_results_csv(std::istream& in, std::string* digest_out) {
  std::vector<GridResultRow> rows;
  std::string line;
  bool saw_columns = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (digest_out && line.rfind("# config ", 0) == 0) {
        *digest_out = line.substr(9);
      }
      continue;
    }
    if (!saw_columns) {
      saw_columns = true;  // column header line
      continue;
    }
    const auto fields = split_csv(line);
    if (fields.size() != 16) break;  // partial trailing line
    GridResultRow row;
    try {
      row.rho = parse_real(fields[0]);
      row.m = static_cast<int>(parse_i64(fields[1]));
      row.n = static_cast<int>(parse_i64(fields[2]));
      row.k = static_cast<int>(parse_i64(fields[3]));
      row.replicate = static_cast<int>(parse_i64(fields[4]));
      row.seed = parse_u64(fields[5]);
      row.n_efficient = parse_u64(fields[6]);
      row.prop_efficient = parse_real(fields[7]);
      row.n_supported = parse_u64(fields[8]);
      row.supported_over_efficient = parse_real(fields[9]);
      row.largest_component_ratio = parse_real(fields[10]);
      row.n_components = parse_u64(fields[11]);
      row.minimal_connect_k = static_cast<int>(parse_i64(fields[12]));
      row.mean_spearman = parse_real(fields[13]);
      row.mean_pearson = parse_real(fields[14]);
      row.baseline_largest_ratio = parse_real(fields[15]);
    } catch (const std::invalid_argument&) {
      break;  // partial trailing line
    }
    rows.push_back(row);
  }
  return rows;
}

void write_aggregate_csv(std::span<const AggregateRow> rows, const ExperimentConfig& config,
                         const std::string& digest, std::ostream& out) {
  out << "# " << kToolName << ' ' << kToolVersion << '\n';
  out << "# config " << digest << '\n';
  out << "# " << experiment_config_string(config) << '\n';
  out << "rho,m,n,k,replicates";
  const char* measures[] = {"n_efficient",
                            "prop_efficient",
                            "n_supported",
                            "supported_over_efficient",
                            "largest_component_ratio",
                            "n_components",
                            "minimal_connect_k",
                            "mean_spearman",
                            "mean_pearson",
                            "baseline_largest_ratio"};
  for (const char* name : measures) out << ',' << name << "_mean," << name << "_sd";
  out << '\n';
  for (const auto& row : rows) {
    out << format_real(row.rho) << ',' << row.m << ',' << row.n << ',' << row.k << ','
        << row.replicates;
    const Stat* stats[] = {&row.n_efficient,
                           &row.prop_efficient,
                           &row.n_supported,
                           &row.supported_over_efficient,
                           &row.largest_component_ratio,
                           &row.n_components,
                           &row.minimal_connect_k,
                           &row.mean_spearman,
                           &row.mean_pearson,
                           &row.baseline_largest_ratio};
    for (const Stat* s : stats) out << ',' << format_real(s->mean) << ',' << format_real(s->sd);
    out << '\n';
  }
}

void run_experiment(const ExperimentConfig& config, const std::string& out_dir,
                    std::ostream& log) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const fs::path results_path = fs::path(out_dir) / "results.csv";
  const fs::path aggregate_path = fs::path(out_dir) / "aggregate.csv";
  const std::string digest = experiment_config_digest(config);
  const size_t total = grid_row_count(config.grid, config.replicates);

  std::vector<GridResultRow> done;
  if (fs::exists(results_path)) {
    std::ifstream in(results_path, std::ios::binary);
    std::string found_digest;
    done = read_results_csv(in, &found_digest);
    if (found_digest != digest) {
      throw ResumeMismatchError("results.csv in " + out_dir +
                                " was produced by a different configuration (config " +
                                found_digest + ", expected " + digest + ")");
    }
    if (done.size() > total) {
      throw ResumeMismatchError("results.csv has more rows than the configuration defines");
    }
    log << "resuming: " << done.size() << " of " << total << " rows already complete\n";
  }

  // rewrite header plus the complete rows, dropping any partial trailing line
  {
    std::ofstream out(results_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + results_path.string());
    out << results_csv_header(config, digest);
    for (const auto& row : done) out << format_result_row(row) << '\n';
  }

  if (done.size() < total) {
    std::ofstream out(results_path, std::ios::binary | std::ios::app);
    GridOptions options;
    options.workers = config.workers;
    options.baseline_repeats = config.baseline_repeats;
    options.start_row = done.size();
    options.log = &log;
    options.sink = [&](const GridResultRow& row) {
      out << format_result_row(row) << '\n';
      out.flush();
      done.push_back(row);
    };
    run_grid(config.grid, config.replicates, config.master_seed, options);
  }

  const std::vector<AggregateRow> agg = aggregate(done);
  std::ofstream out(aggregate_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + aggregate_path.string());
  write_aggregate_csv(agg, config, digest, out);
  log << "experiment complete: " << done.size() << " rows, "
      << agg.size() << " parameter combinations\n";
}

}  // namespace rhomnk
