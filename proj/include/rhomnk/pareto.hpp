#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rhomnk/enumeration.hpp"

namespace rhomnk {

/// Pareto dominance, maximization: a >= b on every coordinate and > on at
/// least one.
bool dominates(std::span<const double> a, std::span<const double> b);

/// The non-dominated rows of an objective table. Duplicate objective vectors
/// never dominate each other, so all copies are retained.
struct EfficientSet {
  int m = 0;
  std::vector<Solution> solutions;   // ascending
  std::vector<double> objectives;    // |solutions| rows of m values

  size_t size() const { return solutions.size(); }
  std::span<const double> objective(size_t i) const {
    return {objectives.data() + i * static_cast<size_t>(m), static_cast<size_t>(m)};
  }
};

EfficientSet efficient_set(const ObjectiveTable& table);

/// Weight floor standing in for strict positivity of the aggregation weights.
inline constexpr double kMinWeight = 1e-6;

/// Slack allowed when checking the weighted-sum inequality system.
inline constexpr double kSupportTol = 1e-9;

/// Members of the efficient set that maximize some weighted sum of the
/// objectives (weights >= kMinWeight, summing to 1), together with one
/// witness weight vector each. Membership on convex-hull facets counts.
struct SupportedSet {
  int m = 0;
  std::vector<Solution> solutions;     // ascending, subset of the efficient set
  std::vector<size_t> eff_positions;   // positions within the EfficientSet
  std::vector<double> witnesses;       // |solutions| rows of m weights

  size_t size() const { return solutions.size(); }
  std::span<const double> witness(size_t i) const {
    return {witnesses.data() + i * static_cast<size_t>(m), static_cast<size_t>(m)};
  }
};

enum class SupportMethod {
  automatic,    // hull2d when m == 2, feasibility otherwise
  feasibility,  // per-candidate linear-feasibility solve
  hull2d,       // upper-convex-hull fast path (m == 2 only)
};

SupportedSet supported_set(const EfficientSet& eff,
                           SupportMethod method = SupportMethod::automatic,
                           int workers = 1);

double weighted_sum(std::span<const double> lambda, std::span<const double> v);

}  // namespace rhomnk
