#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "rhomnk/pareto.hpp"

namespace rhomnk {

/// Two-objective scatter of the search space on [0,1]^2: the random sample
/// in green, efficient points in red above it, supported points in blue on
/// top. Requires table.m == 2.
void write_objective_scatter_svg(const ObjectiveTable& table, const EfficientSet& eff,
                                 const SupportedSet& sup, std::span<const Solution> sample,
                                 const std::string& caption, const std::string& digest,
                                 std::ostream& out);

}  // namespace rhomnk
