#include "rhomnk/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>

#include "rhomnk/common.hpp"
#include "rhomnk/parallel.hpp"

namespace rhomnk {

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("pearson: length mismatch");
  const size_t n = xs.size();
  if (n < 2) throw std::invalid_argument("pearson: need at least 2 observations");
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw std::invalid_argument("pearson: zero variance input");
  }
  return sxy / (std::sqrt(sxx) * std::sqrt(syy));
}

std::vector<double> fractional_ranks(std::span<const double> xs) {
  const size_t n = xs.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j < n && xs[order[j]] == xs[order[i]]) ++j;
    const double rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
    for (size_t t = i; t < j; ++t) ranks[order[t]] = rank;
    i = j;
  }
  return ranks;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("spearman: length mismatch");
  const auto rx = fractional_ranks(xs);
  const auto ry = fractional_ranks(ys);
  return pearson(rx, ry);
}

CorrelationReport objective_correlation_report(const ObjectiveTable& table) {
  const int m = table.m;
  if (m < 2) {
    throw std::invalid_argument("objective_correlation_report: needs m >= 2");
  }
  const uint64_t rows = table.rows();
  std::vector<std::vector<double>> cols(m, std::vector<double>(rows));
  for (uint64_t r = 0; r < rows; ++r) {
    const double* p = table.values.data() + r * static_cast<uint64_t>(m);
    for (int j = 0; j < m; ++j) cols[j][r] = p[j];
  }
  std::vector<std::vector<double>> ranks(m);
  for (int j = 0; j < m; ++j) ranks[j] = fractional_ranks(cols[j]);

  CorrelationReport report;
  report.m = m;
  report.pearson_matrix.assign(static_cast<size_t>(m) * m, 1.0);
  report.spearman_matrix.assign(static_cast<size_t>(m) * m, 1.0);
  double sum_p = 0.0, sum_s = 0.0;
  int pairs = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const double p = pearson(cols[i], cols[j]);
      const double s = pearson(ranks[i], ranks[j]);
      report.pearson_matrix[static_cast<size_t>(i) * m + j] = p;
      report.pearson_matrix[static_cast<size_t>(j) * m + i] = p;
      report.spearman_matrix[static_cast<size_t>(i) * m + j] = s;
      report.spearman_matrix[static_cast<size_t>(j) * m + i] = s;
      sum_p += p;
      sum_s += s;
      ++pairs;
    }
  }
  report.mean_pearson = sum_p / pairs;
  report.mean_spearman = sum_s / pairs;
  return report;
}

std::string grid_task_key(double rho, int m, int n, int k, LinkModel model, int replicate) {
  return "rho=" + format_real(rho) + ";m=" + std::to_string(m) + ";n=" + std::to_string(n) +
         ";k=" + std::to_string(k) + ";model=" + to_string(model) +
         ";rep=" + std::to_string(replicate);
}

namespace {

struct GridTask {
  double rho;
  int m, k, replicate;
};

void validate_grid(const GridSpec& grid, int replicates) {
  if (replicates < 1) throw std::invalid_argument("run_grid: replicates must be >= 1");
  if (grid.rho.empty() || grid.m.empty() || grid.k.empty()) {
    throw std::invalid_argument("run_grid: empty parameter grid");
  }
  if (grid.n < 1 || grid.n > kMaxEnumerationBits) {
    throw std::invalid_argument("run_grid: n out of range");
  }
  for (double rho : grid.rho) {
    if (!(rho >= -1.0 && rho <= 1.0)) {
      throw std::invalid_argument("run_grid: rho outside [-1, 1]");
    }
  }
  for (int m : grid.m) {
    if (m < 2) throw std::invalid_argument("run_grid: m must be >= 2");
  }
  for (int k : grid.k) {
    if (k < 0 || k > grid.n - 1) {
      throw std::invalid_argument("run_grid: k must lie in [0, n-1]");
    }
  }
}

bool rho_feasible(double rho, int m) { return rho > -1.0 / (m - 1); }

std::vector<GridTask> build_tasks(const GridSpec& grid, int replicates, std::ostream* log) {
  std::vector<GridTask> tasks;
  for (int m : grid.m) {
    for (double rho : grid.rho) {
      if (!rho_feasible(rho, m)) {
        if (log) {
          *log << "skipping rho=" << format_real(rho) << " m=" << m
               << " (rho must exceed -1/(m-1) = " << format_real(-1.0 / (m - 1)) << ")\n";
        }
        continue;
      }
      for (int k : grid.k) {
        for (int rep = 0; rep < replicates; ++rep) {
          tasks.push_back({rho, m, k, rep});
        }
      }
    }
  }
  if (tasks.empty()) {
    throw std::invalid_argument("run_grid: no feasible parameter combination");
  }
  return tasks;
}

GridResultRow compute_row(const GridTask& task, const GridSpec& grid, uint64_t master_seed,
                          int baseline_repeats) {
  const std::string key =
      grid_task_key(task.rho, task.m, grid.n, task.k, grid.model, task.replicate);
  const uint64_t seed = RandomStream::derive_seed(master_seed, key, 0);

  InstanceParams params;
  params.m = task.m;
  params.n = grid.n;
  params.k = task.k;
  params.link_model = grid.model;
  params.correlation = uniform_rho_matrix(task.rho, task.m);
  params.seed = seed;

  const Instance inst = generate_instance(params);
  const ObjectiveTable table = enumerate(inst, 1);
  const EfficientSet eff = efficient_set(table);
  const SupportedSet sup = supported_set(eff);
  RandomStream baseline_stream(seed, "baseline", 0);
  const ConnectednessReport conn =
      analyze_connectedness(eff.solutions, grid.n, baseline_repeats, baseline_stream);
  const CorrelationReport corr = objective_correlation_report(table);

  GridResultRow row;
  row.rho = task.rho;
  row.m = task.m;
  row.n = grid.n;
  row.k = task.k;
  row.replicate = task.replicate;
  row.seed = seed;
  row.n_efficient = eff.size();
  row.prop_efficient = static_cast<double>(eff.size()) / static_cast<double>(table.rows());
  row.n_supported = sup.size();
  row.supported_over_efficient =
      static_cast<double>(sup.size()) / static_cast<double>(eff.size());
  row.largest_component_ratio = conn.largest_component_ratio;
  row.n_components = conn.component_sizes.size();
  row.minimal_connect_k = conn.minimal_connect_k;
  row.mean_spearman = corr.mean_spearman;
  row.mean_pearson = corr.mean_pearson;
  row.baseline_largest_ratio = conn.baseline_largest_ratio;
  return row;
}

}  // namespace

size_t grid_row_count(const GridSpec& grid, int replicates) {
  validate_grid(grid, replicates);
  size_t count = 0;
  for (int m : grid.m) {
    for (double rho : grid.rho) {
      if (rho_feasible(rho, m)) count += grid.k.size() * static_cast<size_t>(replicates);
    }
  }
  if (count == 0) {
    throw std::invalid_argument("run_grid: no feasible parameter combination");
  }
  return count;
}

std::vector<GridResultRow> run_grid(const GridSpec& grid, int replicates,
                                    uint64_t master_seed, const GridOptions& options) {
  validate_grid(grid, replicates);
  const std::vector<GridTask> tasks = build_tasks(grid, replicates, options.log);
  const size_t start = std::min(options.start_row, tasks.size());
  const size_t pending = tasks.size() - start;

  std::vector<GridResultRow> rows(pending);
  std::vector<char> ready(pending, 0);
  std::mutex flush_mutex;
  size_t next_flush = 0;

  parallel_tasks(pending, options.workers, [&](size_t i) {
    GridResultRow row =
        compute_row(tasks[start + i], grid, master_seed, options.baseline_repeats);
    std::lock_guard lock(flush_mutex);
    rows[i] = std::move(row);
    ready[i] = 1;
    if (options.sink) {
      while (next_flush < pending && ready[next_flush]) {
        options.sink(rows[next_flush]);
        ++next_flush;
      }
    }
  });
  return rows;
}

std::vector<AggregateRow> aggregate(std::span<const GridResultRow> rows) {
  if (rows.empty()) return {};

  struct Key {
    double rho;
    int m, n, k;
    bool operator==(const Key&) const = default;
  };
  std::vector<Key> order;
  std::vector<std::vector<const GridResultRow*>> groups;
  for (const auto& row : rows) {
    const Key key{row.rho, row.m, row.n, row.k};
    size_t g = 0;
    for (; g < order.size(); ++g) {
      if (order[g] == key) break;
    }
    if (g == order.size()) {
      order.push_back(key);
      groups.emplace_back();
    }
    groups[g].push_back(&row);
  }

  auto reduce = [](const std::vector<const GridResultRow*>& group,
                   const std::function<double(const GridResultRow&)>& get) {
    Stat s;
    const double n = static_cast<double>(group.size());
    for (const auto* row : group) s.mean += get(*row);
    s.mean /= n;
    if (group.size() > 1) {
      double acc = 0.0;
      for (const auto* row : group) {
        const double d = get(*row) - s.mean;
        acc += d * d;
      }
      s.sd = std::sqrt(acc / (n - 1.0));
    }
    return s;
  };

  std::vector<AggregateRow> result;
  result.reserve(order.size());
  for (size_t g = 0; g < order.size(); ++g) {
    AggregateRow out;
    out.rho = order[g].rho;
    out.m = order[g].m;
    out.n = order[g].n;
    out.k = order[g].k;
    out.replicates = groups[g].size();
    out.n_efficient = reduce(groups[g], [](const GridResultRow& r) {
      return static_cast<double>(r.n_efficient);
    });
    out.prop_efficient =
        reduce(groups[g], [](const GridResultRow& r) { return r.prop_efficient; });
    out.n_supported = reduce(groups[g], [](const GridResultRow& r) {
      return static_cast<double>(r.n_supported);
    });
    out.supported_over_efficient =
        reduce(groups[g], [](const GridResultRow& r) { return r.supported_over_efficient; });
    out.largest_component_ratio =
        reduce(groups[g], [](const GridResultRow& r) { return r.largest_component_ratio; });
    out.n_components = reduce(groups[g], [](const GridResultRow& r) {
      return static_cast<double>(r.n_components);
    });
    out.minimal_connect_k = reduce(groups[g], [](const GridResultRow& r) {
      return static_cast<double>(r.minimal_connect_k);
    });
    out.mean_spearman =
        reduce(groups[g], [](const GridResultRow& r) { return r.mean_spearman; });
    out.mean_pearson =
        reduce(groups[g], [](const GridResultRow& r) { return r.mean_pearson; });
    out.baseline_largest_ratio =
        reduce(groups[g], [](const GridResultRow& r) { return r.baseline_largest_ratio; });
    result.push_back(std::move(out));
  }
  return result;
}

}  // namespace rhomnk
