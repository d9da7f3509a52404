#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rhomnk/corrgen.hpp"

namespace rhomnk {

/// A solution is an n-bit string packed into an integer; bit i of the
/// integer is x_i.
using Solution = uint64_t;

enum class LinkModel { adjacent, random };

std::string to_string(LinkModel model);
LinkModel link_model_from_string(std::string_view s);

struct InstanceParams {
  int m = 2;
  int n = 18;
  int k = 4;
  LinkModel link_model = LinkModel::random;
  CorrelationMatrix correlation;
  uint64_t seed = 0;

  bool operator==(const InstanceParams&) const = default;
};

/// m >= 1, 1 <= n <= 63, 0 <= k <= n-1, correlation of dimension m and
/// factorizable. Throws on violation.
void validate_params(const InstanceParams& params);

/// The k epistatic partners of each bit, shared by all objectives.
class EpistaticLinks {
 public:
  EpistaticLinks() = default;
  EpistaticLinks(int n, int k, std::vector<uint32_t> flat);

  int n() const { return n_; }
  int k() const { return k_; }
  std::span<const uint32_t> of_bit(int bit) const {
    return {flat_.data() + static_cast<size_t>(bit) * k_, static_cast<size_t>(k_)};
  }

  bool operator==(const EpistaticLinks&) const = default;

 private:
  int n_ = 0, k_ = 0;
  std::vector<uint32_t> flat_;  // n rows of k indices
};

/// Per-bit fitness component tables: 2^(k+1) rows of m values in [0, 1).
class ComponentTable {
 public:
  ComponentTable() = default;
  ComponentTable(int n, int k, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  uint32_t rows_per_bit() const { return rows_; }

  const double* row(int bit, uint32_t row_index) const {
    return values_.data() + (static_cast<size_t>(bit) * rows_ + row_index) * m_;
  }
  double* row(int bit, uint32_t row_index) {
    return values_.data() + (static_cast<size_t>(bit) * rows_ + row_index) * m_;
  }
  double at(int bit, uint32_t row_index, int obj) const { return row(bit, row_index)[obj]; }

  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  bool operator==(const ComponentTable&) const = default;

 private:
  int n_ = 0, m_ = 0;
  uint32_t rows_ = 0;
  std::vector<double> values_;
};

/// A fully specified landscape. Treated as immutable once built; safe to
/// share read-only across threads.
struct Instance {
  InstanceParams params;
  EpistaticLinks links;
  ComponentTable tables;

  bool operator==(const Instance&) const = default;
};

EpistaticLinks build_links(const InstanceParams& params);

/// Deterministic in params.seed: same params give bit-identical instances.
Instance generate_instance(const InstanceParams& params);

/// Row index of the component table consulted for `bit`: the bit's own
/// allele is the most significant position, followed by the linked alleles
/// in stored order.
inline uint32_t component_row_index(Solution x, int bit, const EpistaticLinks& links) {
  uint32_t row = static_cast<uint32_t>((x >> bit) & 1u);
  for (uint32_t l : links.of_bit(bit)) {
    row = (row << 1) | static_cast<uint32_t>((x >> l) & 1u);
  }
  return row;
}

/// f_j(x) = mean over bits of the selected component values, summed in
/// ascending bit order.
inline void evaluate(const Instance& inst, Solution x, std::span<double> out) {
  const int n = inst.params.n;
  const int m = inst.params.m;
  for (int j = 0; j < m; ++j) out[j] = 0.0;
  for (int i = 0; i < n; ++i) {
    const double* y = inst.tables.row(i, component_row_index(x, i, inst.links));
    for (int j = 0; j < m; ++j) out[j] += y[j];
  }
  for (int j = 0; j < m; ++j) out[j] /= n;
}

std::vector<double> evaluate(const Instance& inst, Solution x);

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

// Text instance format, version 1. LF line endings, '.' decimal separator,
// reals carry up to 17 significant digits so values round-trip bit-exactly.
void write_instance(const Instance& inst, std::ostream& out);
void write_instance_file(const Instance& inst, const std::string& path);
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);

}  // namespace rhomnk
