#include "rhomnk/corrgen.hpp"

#include <cmath>
#include <numbers>

#include "rhomnk/common.hpp"

namespace rhomnk {

namespace {
constexpr double kPivotTol = 1e-12;
constexpr double kConsistencyTol = 1e-9;
}  // namespace

CorrelationMatrix uniform_rho_matrix(double rho, int m) {
  if (m < 1) throw std::invalid_argument("uniform_rho_matrix: m must be >= 1");
  if (!(rho >= -1.0 && rho <= 1.0)) {
    throw std::invalid_argument("uniform_rho_matrix: rho must lie in [-1, 1], got " +
                                format_real(rho));
  }
  if (m >= 2) {
    const double lower = -1.0 / (m - 1);
    if (!(rho > lower)) {
      throw std::domain_error("uniform_rho_matrix: for m = " + std::to_string(m) +
                              " the correlation must lie in the open interval (" +
                              format_real(lower) + ", 1]; got " + format_real(rho));
    }
  }
  CorrelationMatrix c;
  c.m = m;
  c.entries.assign(static_cast<size_t>(m) * m, rho);
  for (int i = 0; i < m; ++i) c.at(i, i) = 1.0;
  return c;
}

void validate_correlation_matrix(const CorrelationMatrix& c) {
  if (c.m < 1) throw std::invalid_argument("correlation matrix: m must be >= 1");
  if (c.entries.size() != static_cast<size_t>(c.m) * c.m) {
    throw std::invalid_argument("correlation matrix: entry count does not match m");
  }
  for (int i = 0; i < c.m; ++i) {
    if (c.at(i, i) != 1.0) {
      throw std::invalid_argument("correlation matrix: diagonal entry " +
                                  std::to_string(i) + " is not 1");
    }
    for (int j = 0; j < c.m; ++j) {
      const double v = c.at(i, j);
      if (!(v >= -1.0 && v <= 1.0)) {
        throw std::invalid_argument("correlation matrix: entry (" + std::to_string(i) +
                                    "," + std::to_string(j) + ") outside [-1, 1]");
      }
      if (c.at(i, j) != c.at(j, i)) {
        throw std::invalid_argument("correlation matrix: not symmetric at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  // positive definiteness is gated on the matrix that actually gets factorized
  cholesky_factor(hotelling_normal_correlation(c));
}

CorrelationMatrix hotelling_normal_correlation(const CorrelationMatrix& c) {
  CorrelationMatrix r;
  r.m = c.m;
  r.entries.resize(c.entries.size());
  for (int i = 0; i < c.m; ++i) {
    for (int j = 0; j < c.m; ++j) {
      const double v = c.at(i, j);
      double t;
      if (i == j) {
        t = 1.0;
      } else if (v == 1.0 || v == -1.0) {
        t = v;  // 2 sin(+-pi/6) is exactly +-1
      } else {
        t = 2.0 * std::sin(std::numbers::pi * v / 6.0);
      }
      r.at(i, j) = t;
    }
  }
  return r;
}

CholeskyFactor cholesky_factor(const std::vector<double>& sym, int m) {
  if (m < 1 || sym.size() != static_cast<size_t>(m) * m) {
    throw std::invalid_argument("cholesky_factor: bad dimensions");
  }
  CholeskyFactor f;
  f.m = m;
  f.lower.assign(static_cast<size_t>(m) * m, 0.0);
  auto a = [&](int i, int j) { return sym[static_cast<size_t>(i) * m + j]; };
  auto l = [&](int i, int j) -> double& { return f.lower[static_cast<size_t>(i) * m + j]; };

  for (int j = 0; j < m; ++j) {
    double d = a(j, j);
    for (int t = 0; t < j; ++t) d -= l(j, t) * l(j, t);
    if (d < -kPivotTol) {
      throw NotPositiveDefiniteError(
          j, "matrix is not positive semi-definite: pivot " + std::to_string(j) +
                 " is " + format_real(d));
    }
    const bool zero_pivot = d <= kPivotTol;
    l(j, j) = zero_pivot ? 0.0 : std::sqrt(d);
    for (int i = j + 1; i < m; ++i) {
      double s = a(i, j);
      for (int t = 0; t < j; ++t) s -= l(i, t) * l(j, t);
      if (zero_pivot) {
        if (std::fabs(s) > kConsistencyTol) {
          throw NotPositiveDefiniteError(
              j, "matrix is not positive semi-definite: zero pivot " +
                     std::to_string(j) + " with inconsistent column residual " +
                     format_real(s));
        }
        l(i, j) = 0.0;
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return f;
}

CholeskyFactor cholesky_factor(const CorrelationMatrix& r) {
  return cholesky_factor(r.entries, r.m);
}

double standard_normal_cdf(double z) {
  const double p = 0.5 + 0.5 * std::erf(std::fabs(z) * 0.70710678118654752440);
  return z >= 0.0 ? p : 1.0 - p;
}

void sample_correlated_uniform_tuple(const CholeskyFactor& l, RandomStream& stream,
                                     std::span<double> out) {
  const int m = l.m;
  if (static_cast<int>(out.size()) != m) {
    throw std::invalid_argument("sample_correlated_uniform_tuple: output size mismatch");
  }
  for (int i = 0; i < m; ++i) out[i] = stream.next_normal();
  // rows combined high-to-low so out[] can hold both the raw and the
  // correlated normals (row i only reads indices <= i)
  for (int i = m - 1; i >= 0; --i) {
    double acc = 0.0;
    for (int j = 0; j <= i; ++j) acc += l.at(i, j) * out[j];
    out[i] = standard_normal_cdf(acc);
  }
}

std::vector<double> sample_correlated_uniform_tuple(const CholeskyFactor& l,
                                                    RandomStream& stream) {
  std::vector<double> out(l.m);
  sample_correlated_uniform_tuple(l, stream, out);
  return out;
}

}  // namespace rhomnk
