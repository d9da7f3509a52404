#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhomnk/rng.hpp"

namespace rhomnk {

/// Target correlation matrix of the uniform tuples: symmetric, unit diagonal,
/// entries in [-1, 1].
struct CorrelationMatrix {
  int m = 0;
  std::vector<double> entries;  // row-major, m*m

  double at(int r, int c) const { return entries[static_cast<size_t>(r) * m + c]; }
  double& at(int r, int c) { return entries[static_cast<size_t>(r) * m + c]; }

  bool operator==(const CorrelationMatrix&) const = default;
};

class NotPositiveDefiniteError : public std::runtime_error {
 public:
  NotPositiveDefiniteError(int pivot_index, const std::string& what)
      : std::runtime_error(what), pivot_index_(pivot_index) {}
  int pivot_index() const { return pivot_index_; }

 private:
  int pivot_index_;
};

/// Constant-correlation matrix: 1 on the diagonal, rho everywhere else.
/// For m >= 2 the admissible range is the open-below interval
/// (-1/(m-1), 1]; values at or below the lower bound are rejected.
CorrelationMatrix uniform_rho_matrix(double rho, int m);

/// Structural checks (shape, symmetry, unit diagonal, entry range) plus a
/// factorization of the transformed normal correlation. Throws
/// std::invalid_argument or NotPositiveDefiniteError.
void validate_correlation_matrix(const CorrelationMatrix& c);

/// Entrywise map r = 2 sin(pi c / 6) from the uniform-tuple correlation to
/// the normal correlation that induces it. Entries of exactly +-1 map to
/// exactly +-1 (the closed form is exact there) and the diagonal stays 1.
CorrelationMatrix hotelling_normal_correlation(const CorrelationMatrix& c);

struct CholeskyFactor {
  int m = 0;
  std::vector<double> lower;  // row-major, lower triangular

  double at(int r, int c) const { return lower[static_cast<size_t>(r) * m + c]; }
};

/// Cholesky factorization of a symmetric matrix, tolerant of exact rank
/// deficiency: a pivot within +-1e-12 of zero is taken as a zero pivot and
/// the rest of its column must be consistent (reproducible from the previous
/// columns), otherwise the matrix is rejected. A pivot below -1e-12 is
/// rejected outright. The thrown error names the failing pivot index.
CholeskyFactor cholesky_factor(const std::vector<double>& sym, int m);
CholeskyFactor cholesky_factor(const CorrelationMatrix& r);

/// Standard normal CDF. Absolute error <= 1e-12 for |z| <= 8, and the
/// reflection Phi(-z) == 1 - Phi(z) holds bitwise: the kernel is evaluated
/// on |z| only and the negative branch returns the exact complement
/// (1 - p is exact for p in [0.5, 1]).
double standard_normal_cdf(double z);

/// One tuple of m uniforms on [0,1) with correlation matrix c, where l is the
/// factor of hotelling_normal_correlation(c): draw m independent standard
/// normals, correlate through l, map through the normal CDF.
void sample_correlated_uniform_tuple(const CholeskyFactor& l, RandomStream& stream,
                                     std::span<double> out);
std::vector<double> sample_correlated_uniform_tuple(const CholeskyFactor& l,
                                                    RandomStream& stream);

}  // namespace rhomnk
