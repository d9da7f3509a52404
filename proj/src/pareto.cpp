#include "rhomnk/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rhomnk/parallel.hpp"

namespace rhomnk {

namespace {

inline bool dominates_raw(const double* a, const double* b, int m) {
  bool strict = false;
  for (int j = 0; j < m; ++j) {
    if (a[j] < b[j]) return false;
    if (a[j] > b[j]) strict = true;
  }
  return strict;
}

// ---------------------------------------------------------------------------
// Dense primal simplex for tiny LPs: max c.x  s.t.  A x <= b, x >= 0, b >= 0.
// The all-slack basis is feasible, so no phase 1 is needed. Bland's rule.
// ---------------------------------------------------------------------------
struct SimplexResult {
  bool ok = false;
  double value = 0.0;
  std::vector<double> x;
};

SimplexResult simplex_maximize(const std::vector<double>& a, int rows, int cols,
                               const std::vector<double>& b, const std::vector<double>& c) {
  constexpr double kTol = 1e-11;
  const int width = cols + rows + 1;
  std::vector<double> t(static_cast<size_t>(rows + 1) * width, 0.0);
  auto cell = [&](int r, int j) -> double& { return t[static_cast<size_t>(r) * width + j]; };

  for (int r = 0; r < rows; ++r) {
    for (int j = 0; j < cols; ++j) cell(r, j) = a[static_cast<size_t>(r) * cols + j];
    cell(r, cols + r) = 1.0;
    cell(r, width - 1) = b[r];
  }
  for (int j = 0; j < cols; ++j) cell(rows, j) = -c[j];

  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = cols + r;

  const int max_iter = 200 * (rows + cols) + 1000;
  for (int iter = 0; iter < max_iter; ++iter) {
    int enter = -1;
    for (int j = 0; j < width - 1; ++j) {
      if (cell(rows, j) < -kTol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) {
      SimplexResult res;
      res.ok = true;
      res.value = cell(rows, width - 1);
      res.x.assign(cols, 0.0);
      for (int r = 0; r < rows; ++r) {
        if (basis[r] < cols) res.x[basis[r]] = cell(r, width - 1);
      }
      return res;
    }
    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < rows; ++r) {
      if (cell(r, enter) > kTol) {
        const double ratio = cell(r, width - 1) / cell(r, enter);
        if (leave < 0 || ratio < best_ratio - kTol ||
            (ratio < best_ratio + kTol && basis[r] < basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) return {};  // unbounded; cannot happen for the bounded programs built here

    const double pivot = cell(leave, enter);
    for (int j = 0; j < width; ++j) cell(leave, j) /= pivot;
    for (int r = 0; r <= rows; ++r) {
      if (r == leave) continue;
      const double f = cell(r, enter);
      if (f == 0.0) continue;
      for (int j = 0; j < width; ++j) cell(r, j) -= f * cell(leave, j);
    }
    basis[leave] = enter;
  }
  return {};  // iteration cap; treated as a solve failure
}

// ---------------------------------------------------------------------------
// Per-candidate feasibility: does some lambda (lambda_i >= kMinWeight,
// sum 1) make the candidate maximize the weighted sum over the whole
// efficient set? Solved as max-margin over the weight simplex:
//
//   max t   s.t.  lambda . (f(x) - f(y)) >= t  for all active y
//
// with lambda = kMinWeight + mu, mu >= 0, sum mu = 1 - m*kMinWeight, the
// last mu eliminated through the simplex equality and t shifted by +2 to
// keep every right-hand side positive. Constraints are generated lazily:
// solve on an active subset, scan the full set for the worst violator, add
// it, repeat. The relaxation value only shrinks, so a subset optimum below
// the tolerance already proves the candidate unsupported.
// ---------------------------------------------------------------------------
struct SupportScratch {
  std::vector<size_t> active;
  std::vector<double> a, b, c, lambda;
};

// enforce the floor exactly; drift is at rounding scale and is taken from
// the largest coordinate
void fix_weight_floor(std::vector<double>& lambda) {
  const size_t m = lambda.size();
  size_t largest = 0;
  for (size_t i = 1; i < m; ++i) {
    if (lambda[i] > lambda[largest]) largest = i;
  }
  for (size_t i = 0; i < m; ++i) {
    if (lambda[i] < kMinWeight) {
      lambda[largest] -= kMinWeight - lambda[i];
      lambda[i] = kMinWeight;
    }
  }
}

bool lp_supported(const EfficientSet& eff, size_t cand,
                  const std::vector<size_t>& initial_active, SupportScratch& scratch,
                  std::vector<double>& witness_out) {
  const int m = eff.m;
  if (m == 1) {
    witness_out.assign(1, 1.0);
    return true;
  }
  const std::span<const double> fx = eff.objective(cand);
  const double budget = 1.0 - m * kMinWeight;
  const int cols = m;  // mu_0 .. mu_{m-2}, tau

  auto& active = scratch.active;
  active = initial_active;

  const int max_rounds = 200;
  for (int round = 0; round < max_rounds; ++round) {
    const int rows = static_cast<int>(active.size()) + 1;
    auto& a = scratch.a;
    auto& b = scratch.b;
    auto& c = scratch.c;
    a.assign(static_cast<size_t>(rows) * cols, 0.0);
    b.assign(rows, 0.0);
    c.assign(cols, 0.0);
    c[cols - 1] = 1.0;

    for (int r = 0; r < rows - 1; ++r) {
      const std::span<const double> fy = eff.objective(active[r]);
      const double d_last = fx[m - 1] - fy[m - 1];
      double d_sum = d_last;
      for (int i = 0; i < m - 1; ++i) {
        const double d_i = fx[i] - fy[i];
        d_sum += d_i;
        a[static_cast<size_t>(r) * cols + i] = d_last - d_i;
      }
      a[static_cast<size_t>(r) * cols + (cols - 1)] = 1.0;
      b[r] = 2.0 + kMinWeight * d_sum + budget * d_last;
    }
    for (int i = 0; i < m - 1; ++i) a[static_cast<size_t>(rows - 1) * cols + i] = 1.0;
    b[rows - 1] = budget;

    const SimplexResult sol = simplex_maximize(a, rows, cols, b, c);
    if (!sol.ok) return false;
    const double t_star = sol.value - 2.0;
    if (t_star < -kSupportTol) return false;

    auto& lambda = scratch.lambda;
    lambda.assign(m, kMinWeight);
    double mu_sum = 0.0;
    for (int i = 0; i < m - 1; ++i) {
      lambda[i] += sol.x[i];
      mu_sum += sol.x[i];
    }
    lambda[m - 1] += budget - mu_sum;

    double worst = std::numeric_limits<double>::infinity();
    size_t worst_pos = 0;
    for (size_t y = 0; y < eff.size(); ++y) {
      const std::span<const double> fy = eff.objective(y);
      double margin = 0.0;
      for (int i = 0; i < m; ++i) margin += lambda[i] * (fx[i] - fy[i]);
      if (margin < worst) {
        worst = margin;
        worst_pos = y;
      }
    }
    if (worst >= -kSupportTol) {
      fix_weight_floor(lambda);
      witness_out = lambda;
      return true;
    }
    if (std::find(active.begin(), active.end(), worst_pos) != active.end()) {
      return false;  // stalled on an already-active cut
    }
    active.push_back(worst_pos);
  }
  return false;
}

std::vector<size_t> per_objective_argmax(const EfficientSet& eff) {
  std::vector<size_t> result;
  for (int j = 0; j < eff.m; ++j) {
    size_t best = 0;
    for (size_t i = 1; i < eff.size(); ++i) {
      if (eff.objective(i)[j] > eff.objective(best)[j]) best = i;
    }
    if (std::find(result.begin(), result.end(), best) == result.end()) {
      result.push_back(best);
    }
  }
  return result;
}

SupportedSet assemble(const EfficientSet& eff, const std::vector<char>& supported,
                      const std::vector<std::vector<double>>& witnesses) {
  SupportedSet out;
  out.m = eff.m;
  for (size_t i = 0; i < eff.size(); ++i) {
    if (!supported[i]) continue;
    out.solutions.push_back(eff.solutions[i]);
    out.eff_positions.push_back(i);
    out.witnesses.insert(out.witnesses.end(), witnesses[i].begin(), witnesses[i].end());
  }
  return out;
}

SupportedSet supported_feasibility(const EfficientSet& eff, int workers) {
  const std::vector<size_t> initial = per_objective_argmax(eff);
  std::vector<char> supported(eff.size(), 0);
  std::vector<std::vector<double>> witnesses(eff.size());
  parallel_tasks(eff.size(), workers, [&](size_t i) {
    thread_local SupportScratch scratch;
    std::vector<double> w;
    if (lp_supported(eff, i, initial, scratch, w)) {
      supported[i] = 1;
      witnesses[i] = std::move(w);
    }
  });
  return assemble(eff, supported, witnesses);
}

// ---------------------------------------------------------------------------
// m == 2 fast path. The supported members of a two-objective efficient set
// lie on the upper convex hull of its image. Points within a vertical band
// of the hull are confirmed with their facet weights (falling back to the
// feasibility solve when the quick witness is inconclusive); points below
// the band cannot reach the tolerance for any floored weight vector, since
// their margin is at most -(kMinWeight * band).
// ---------------------------------------------------------------------------
constexpr double kHullBand = 1e-3;

inline double cross(double ox, double oy, double ax, double ay, double bx, double by) {
  return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

SupportedSet supported_hull2d(const EfficientSet& eff) {
  const size_t count = eff.size();

  // positions grouped by identical objective vector, ascending f1
  std::vector<size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    const auto px = eff.objective(x);
    const auto py = eff.objective(y);
    if (px[0] != py[0]) return px[0] < py[0];
    if (px[1] != py[1]) return px[1] < py[1];
    return x < y;
  });
  std::vector<double> ux, uy;                // unique objective vectors
  std::vector<std::vector<size_t>> members;  // eff positions per unique vector
  for (size_t pos : order) {
    const auto p = eff.objective(pos);
    if (!ux.empty() && ux.back() == p[0] && uy.back() == p[1]) {
      members.back().push_back(pos);
    } else {
      ux.push_back(p[0]);
      uy.push_back(p[1]);
      members.push_back({pos});
    }
  }
  const size_t uniq = ux.size();

  std::vector<char> supported(count, 0);
  std::vector<std::vector<double>> witnesses(count);

  if (uniq == 1) {
    for (size_t i = 0; i < count; ++i) {
      supported[i] = 1;
      witnesses[i] = {0.5, 0.5};
    }
    return assemble(eff, supported, witnesses);
  }

  // upper hull, strictly convex vertices (collinear points are dropped here
  // and recovered by the band test below)
  std::vector<size_t> hull;
  for (size_t u = 0; u < uniq; ++u) {
    while (hull.size() >= 2 &&
           cross(ux[hull[hull.size() - 2]], uy[hull[hull.size() - 2]],
                 ux[hull.back()], uy[hull.back()], ux[u], uy[u]) >= 0.0) {
      hull.pop_back();
    }
    hull.push_back(u);
  }

  std::vector<size_t> vertex_rank(uniq, static_cast<size_t>(-1));
  for (size_t h = 0; h < hull.size(); ++h) vertex_rank[hull[h]] = h;

  const std::vector<size_t> initial = per_objective_argmax(eff);
  SupportScratch scratch;

  for (size_t u = 0; u < uniq; ++u) {
    size_t facet = 0;  // hull segment (hull[facet], hull[facet+1])
    bool candidate = false;
    if (vertex_rank[u] != static_cast<size_t>(-1)) {
      candidate = true;
      facet = vertex_rank[u] + 1 < hull.size() ? vertex_rank[u] : vertex_rank[u] - 1;
    } else {
      // vertical deviation from the covering hull segment
      size_t lo = 0, hi = hull.size() - 1;
      while (hi - lo > 1) {
        const size_t mid = (lo + hi) / 2;
        (ux[hull[mid]] <= ux[u] ? lo : hi) = mid;
      }
      facet = lo;
      const double ax = ux[hull[lo]], ay = uy[hull[lo]];
      const double bx = ux[hull[lo + 1]], by = uy[hull[lo + 1]];
      const double seg_y = ay + (by - ay) * (ux[u] - ax) / (bx - ax);
      candidate = uy[u] - seg_y >= -kHullBand;
    }

    if (!candidate) continue;

    const double ax = ux[hull[facet]], ay = uy[hull[facet]];
    const double bx = ux[hull[facet + 1]], by = uy[hull[facet + 1]];
    std::vector<double> lambda(2);
    const double raw0 = ay - by;
    const double raw1 = bx - ax;
    lambda[0] = raw0 / (raw0 + raw1);
    lambda[0] = std::clamp(lambda[0], kMinWeight, 1.0 - kMinWeight);
    lambda[1] = 1.0 - lambda[0];

    double worst = std::numeric_limits<double>::infinity();
    for (size_t v = 0; v < uniq; ++v) {
      const double margin = lambda[0] * (ux[u] - ux[v]) + lambda[1] * (uy[u] - uy[v]);
      worst = std::min(worst, margin);
    }
    bool ok = worst >= -kSupportTol;
    if (!ok) {
      ok = lp_supported(eff, members[u].front(), initial, scratch, lambda);
    }
    if (ok) {
      for (size_t pos : members[u]) {
        supported[pos] = 1;
        witnesses[pos] = lambda;
      }
    }
  }
  return assemble(eff, supported, witnesses);
}

}  // namespace

bool dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dominates: dimension mismatch");
  }
  return dominates_raw(a.data(), b.data(), static_cast<int>(a.size()));
}

EfficientSet efficient_set(const ObjectiveTable& table) {
  const int m = table.m;
  if (m < 1 || table.values.empty()) {
    throw std::invalid_argument("efficient_set: empty objective table");
  }
  const uint64_t rows = table.rows();
  const double* v = table.values.data();

  // Lexicographically descending order: a point can only be dominated by an
  // earlier point, and archive members can never be dominated later, so one
  // forward pass with an append-only archive yields exactly the maxima.
  std::vector<uint64_t> order(rows);
  std::iota(order.begin(), order.end(), uint64_t{0});
  std::sort(order.begin(), order.end(), [&](uint64_t x, uint64_t y) {
    const double* a = v + x * static_cast<uint64_t>(m);
    const double* b = v + y * static_cast<uint64_t>(m);
    for (int j = 0; j < m; ++j) {
      if (a[j] != b[j]) return a[j] > b[j];
    }
    return x < y;
  });

  std::vector<uint64_t> archive;
  for (uint64_t idx : order) {
    const double* p = v + idx * static_cast<uint64_t>(m);
    bool dominated = false;
    for (uint64_t keeper : archive) {
      if (dominates_raw(v + keeper * static_cast<uint64_t>(m), p, m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) archive.push_back(idx);
  }
  std::sort(archive.begin(), archive.end());

  EfficientSet eff;
  eff.m = m;
  eff.solutions = std::move(archive);
  eff.objectives.reserve(eff.solutions.size() * static_cast<size_t>(m));
  for (uint64_t idx : eff.solutions) {
    const double* p = v + idx * static_cast<uint64_t>(m);
    eff.objectives.insert(eff.objectives.end(), p, p + m);
  }
  return eff;
}

SupportedSet supported_set(const EfficientSet& eff, SupportMethod method, int workers) {
  if (eff.size() == 0) {
    throw std::invalid_argument("supported_set: empty efficient set");
  }
  if (eff.m == 1) {
    SupportedSet out;
    out.m = 1;
    out.solutions = eff.solutions;
    out.eff_positions.resize(eff.size());
    std::iota(out.eff_positions.begin(), out.eff_positions.end(), size_t{0});
    out.witnesses.assign(eff.size(), 1.0);
    return out;
  }
  if (method == SupportMethod::hull2d && eff.m != 2) {
    throw std::invalid_argument("supported_set: hull2d requires m == 2");
  }
  if (method == SupportMethod::automatic) {
    method = eff.m == 2 ? SupportMethod::hull2d : SupportMethod::feasibility;
  }
  return method == SupportMethod::hull2d ? supported_hull2d(eff)
                                         : supported_feasibility(eff, workers);
}

double weighted_sum(std::span<const double> lambda, std::span<const double> v) {
  if (lambda.size() != v.size()) {
    throw std::invalid_argument("weighted_sum: dimension mismatch");
  }
  double acc = 0.0;
  for (size_t i = 0; i < lambda.size(); ++i) acc += lambda[i] * v[i];
  return acc;
}

}  // namespace rhomnk
