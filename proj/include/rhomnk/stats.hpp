#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "rhomnk/efficient_graph.hpp"
#include "rhomnk/pareto.hpp"

namespace rhomnk {

/// Sample Pearson correlation; throws on length < 2, length mismatch, or
/// zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Average ranks (1-based); tied values share the mean of their rank range.
std::vector<double> fractional_ranks(std::span<const double> xs);

/// Spearman rank correlation: Pearson of the fractional ranks.
double spearman(std::span<const double> xs, std::span<const double> ys);

/// Pairwise correlations between objective columns over the full table.
struct CorrelationReport {
  int m = 0;
  std::vector<double> pearson_matrix;   // m*m, unit diagonal
  std::vector<double> spearman_matrix;  // m*m, unit diagonal
  double mean_pearson = 0.0;            // mean over the upper triangle
  double mean_spearman = 0.0;

  double pearson_at(int i, int j) const { return pearson_matrix[static_cast<size_t>(i) * m + j]; }
  double spearman_at(int i, int j) const { return spearman_matrix[static_cast<size_t>(i) * m + j]; }
};

CorrelationReport objective_correlation_report(const ObjectiveTable& table);

struct GridSpec {
  std::vector<double> rho;
  std::vector<int> m;
  std::vector<int> k;
  int n = 18;
  LinkModel model = LinkModel::random;
};

/// One generate/enumerate/analyze pipeline run.
struct GridResultRow {
  double rho = 0.0;
  int m = 0, n = 0, k = 0;
  int replicate = 0;
  uint64_t seed = 0;
  uint64_t n_efficient = 0;
  double prop_efficient = 0.0;
  uint64_t n_supported = 0;
  double supported_over_efficient = 0.0;
  double largest_component_ratio = 0.0;
  uint64_t n_components = 0;
  int minimal_connect_k = 0;
  double mean_spearman = 0.0;
  double mean_pearson = 0.0;
  double baseline_largest_ratio = 0.0;
};

struct GridOptions {
  int workers = 0;
  int baseline_repeats = 30;
  size_t start_row = 0;  // rows before this are assumed done and are skipped
  // invoked in canonical row order as rows complete, from any worker thread
  // but never concurrently
  std::function<void(const GridResultRow&)> sink;
  std::ostream* log = nullptr;  // skipped (rho, m) combinations are noted here
};

/// All (m, rho, k, replicate) tasks in canonical nesting order, skipping
/// (rho, m) pairs outside the admissible correlation range. Each row's
/// instance seed is derive_seed(master_seed, canonical parameter key, 0).
std::vector<GridResultRow> run_grid(const GridSpec& grid, int replicates,
                                    uint64_t master_seed, const GridOptions& options = {});

size_t grid_row_count(const GridSpec& grid, int replicates);

/// Canonical textual key of one grid task; the seed-derivation input.
std::string grid_task_key(double rho, int m, int n, int k, LinkModel model, int replicate);

struct Stat {
  double mean = 0.0;
  double sd = 0.0;  // unbiased; 0 for groups of one
};

struct AggregateRow {
  double rho = 0.0;
  int m = 0, n = 0, k = 0;
  size_t replicates = 0;
  Stat n_efficient, prop_efficient, n_supported, supported_over_efficient,
      largest_component_ratio, n_components, minimal_connect_k, mean_spearman,
      mean_pearson, baseline_largest_ratio;
};

/// Group rows by (rho, m, n, k) in first-appearance order and reduce every
/// numeric column to mean and unbiased standard deviation.
std::vector<AggregateRow> aggregate(std::span<const GridResultRow> rows);

}  // namespace rhomnk
