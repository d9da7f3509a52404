#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rhomnk/landscape.hpp"

namespace rhomnk {

/// Objective vectors of the whole search space: row index == solution value.
struct ObjectiveTable {
  int n = 0;
  int m = 0;
  std::vector<double> values;  // 2^n rows, m columns, row-major

  uint64_t rows() const { return uint64_t{1} << n; }
  std::span<const double> row(uint64_t i) const {
    return {values.data() + i * static_cast<uint64_t>(m), static_cast<size_t>(m)};
  }

  bool operator==(const ObjectiveTable&) const = default;
};

/// Largest n accepted by enumerate(); beyond this the table would not fit in
/// desk-scale memory and the call fails with a capacity error.
inline constexpr int kMaxEnumerationBits = 28;

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluates every solution. The result is bit-identical for any worker
/// count: the row space is partitioned into disjoint chunks and each row is
/// written exactly once. workers == 0 uses all hardware threads.
ObjectiveTable enumerate(const Instance& inst, int workers = 0);

/// `count` distinct solutions drawn uniformly from {0,1}^n, ascending order.
std::vector<Solution> random_solution_sample(uint64_t count, int n, RandomStream& stream);

// Binary dump: "OBJTAB 1 <n> <m>\n" then 2^n * m little-endian IEEE-754
// doubles, row-major.
void write_objective_table(const ObjectiveTable& table, std::ostream& out);
ObjectiveTable read_objective_table(std::istream& in);

}  // namespace rhomnk
