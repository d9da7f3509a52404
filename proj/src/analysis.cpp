#include "rhomnk/analysis.hpp"

#include <ostream>

#include "json.hpp"
#include "rhomnk/common.hpp"
#include "rhomnk/parallel.hpp"

namespace rhomnk {

AnalysisResult analyze_table(const InstanceParams& params, const ObjectiveTable& table,
                             const AnalysisOptions& options) {
  AnalysisResult result;
  result.params = params;
  result.n_solutions = table.rows();
  result.eff = efficient_set(table);
  result.sup = supported_set(result.eff, SupportMethod::automatic,
                             resolve_workers(options.workers));
  RandomStream baseline_stream(params.seed, "baseline", 0);
  result.conn = analyze_connectedness(result.eff.solutions, params.n,
                                      options.baseline_repeats, baseline_stream);
  if (params.m >= 2) result.corr = objective_correlation_report(table);
  return result;
}

AnalysisResult analyze_instance(const Instance& inst, const AnalysisOptions& options) {
  return analyze_table(inst.params, enumerate(inst, options.workers), options);
}

std::string describe_params(const InstanceParams& params) {
  std::string s = "m=" + std::to_string(params.m) + " n=" + std::to_string(params.n) +
                  " k=" + std::to_string(params.k) + " model=" + to_string(params.link_model) +
                  " seed=" + std::to_string(params.seed);
  // constant-correlation matrices are the common case; echo rho when it applies
  bool constant = true;
  const double off = params.m >= 2 ? params.correlation.at(0, 1) : 0.0;
  for (int i = 0; i < params.m && constant; ++i) {
    for (int j = 0; j < params.m && constant; ++j) {
      if (i != j && params.correlation.at(i, j) != off) constant = false;
    }
  }
  if (params.m >= 2 && constant) s += " rho=" + format_real(off);
  return s;
}

std::string analysis_config_string(const InstanceParams& params,
                                   const AnalysisOptions& options) {
  std::string s(kToolName);
  s += " ";
  s += kToolVersion;
  s += "|analyze|" + describe_params(params) + "|C=";
  for (double v : params.correlation.entries) {
    s += format_real(v);
    s += ',';
  }
  s += "|baseline_repeats=" + std::to_string(options.baseline_repeats);
  return s;
}

std::string solution_bits(Solution x, int n) {
  std::string bits(static_cast<size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((x >> i) & 1u) bits[static_cast<size_t>(n - 1 - i)] = '1';
  }
  return bits;
}

void write_efficient_csv(const AnalysisResult& result, const std::string& digest,
                         std::ostream& out) {
  const int m = result.params.m;
  out << "# " << kToolName << ' ' << kToolVersion << '\n';
  out << "# config " << digest << '\n';
  out << "# instance " << describe_params(result.params) << '\n';
  out << "solution,bits";
  for (int j = 0; j < m; ++j) out << ",f" << (j + 1);
  out << ",supported";
  for (int j = 0; j < m; ++j) out << ",lambda" << (j + 1);
  out << '\n';

  // supported positions are ascending, walk them alongside the efficient set
  size_t sup_cursor = 0;
  for (size_t i = 0; i < result.eff.size(); ++i) {
    const bool is_supported = sup_cursor < result.sup.size() &&
                              result.sup.eff_positions[sup_cursor] == i;
    out << result.eff.solutions[i] << ','
        << solution_bits(result.eff.solutions[i], result.params.n);
    for (double v : result.eff.objective(i)) out << ',' << format_real(v);
    out << ',' << (is_supported ? 1 : 0);
    for (int j = 0; j < m; ++j) {
      out << ',';
      if (is_supported) out << format_real(result.sup.witness(sup_cursor)[j]);
    }
    out << '\n';
    if (is_supported) ++sup_cursor;
  }
}

void write_report_json(const AnalysisResult& result, const std::string& digest,
                       std::ostream& out) {
  using json = nlohmann::ordered_json;
  const auto& p = result.params;

  json matrix = json::array();
  for (int i = 0; i < p.m; ++i) {
    json row = json::array();
    for (int j = 0; j < p.m; ++j) row.push_back(p.correlation.at(i, j));
    matrix.push_back(std::move(row));
  }

  json report{
      {"tool", kToolName},
      {"version", kToolVersion},
      {"config_digest", digest},
      {"instance",
       {{"m", p.m},
        {"n", p.n},
        {"k", p.k},
        {"model", to_string(p.link_model)},
        {"seed", p.seed},
        {"correlation", std::move(matrix)}}},
      {"n_solutions", result.n_solutions},
      {"efficient",
       {{"count", result.eff.size()},
        {"proportion",
         static_cast<double>(result.eff.size()) / static_cast<double>(result.n_solutions)}}},
      {"supported",
       {{"count", result.sup.size()},
        {"over_efficient",
         static_cast<double>(result.sup.size()) / static_cast<double>(result.eff.size())}}},
  };

  json conn{
      {"distance_threshold", result.conn.distance_threshold},
      {"n_components", result.conn.component_sizes.size()},
      {"component_sizes", result.conn.component_sizes},
      {"largest_component_ratio", result.conn.largest_component_ratio},
      {"baseline_largest_ratio", result.conn.baseline_largest_ratio},
  };
  if (result.conn.minimal_connect_skipped) {
    conn["minimal_connect_k"] = nullptr;
    conn["minimal_connect_skipped"] = "size";
  } else {
    conn["minimal_connect_k"] = result.conn.minimal_connect_k;
  }
  report["connectedness"] = std::move(conn);

  if (result.corr) {
    auto to_matrix = [&](const std::vector<double>& flat) {
      json rows = json::array();
      for (int i = 0; i < p.m; ++i) {
        json row = json::array();
        for (int j = 0; j < p.m; ++j) row.push_back(flat[static_cast<size_t>(i) * p.m + j]);
        rows.push_back(std::move(row));
      }
      return rows;
    };
    report["correlation"] = json{
        {"pearson", to_matrix(result.corr->pearson_matrix)},
        {"spearman", to_matrix(result.corr->spearman_matrix)},
        {"mean_pearson", result.corr->mean_pearson},
        {"mean_spearman", result.corr->mean_spearman},
    };
  } else {
    report["correlation"] = nullptr;
  }

  out << report.dump(2) << '\n';
}

}  // namespace rhomnk
