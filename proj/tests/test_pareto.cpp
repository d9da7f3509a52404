#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "rhomnk/pareto.hpp"

using namespace rhomnk;

namespace {

// table with an artificial row set (row count must be a power of two)
ObjectiveTable make_table(int m, const std::vector<std::vector<double>>& rows) {
  ObjectiveTable table;
  table.m = m;
  int n = 0;
  while ((size_t{1} << n) < rows.size()) ++n;
  REQUIRE((size_t{1} << n) == rows.size());
  table.n = n;
  for (const auto& row : rows) {
    REQUIRE(row.size() == static_cast<size_t>(m));
    table.values.insert(table.values.end(), row.begin(), row.end());
  }
  return table;
}

InstanceParams make_params(int m, int n, int k, double rho, uint64_t seed) {
  InstanceParams p;
  p.m = m;
  p.n = n;
  p.k = k;
  p.link_model = LinkModel::random;
  p.correlation = uniform_rho_matrix(rho, m);
  p.seed = seed;
  return p;
}

void check_witnesses(const EfficientSet& eff, const SupportedSet& sup) {
  for (size_t s = 0; s < sup.size(); ++s) {
    const auto lambda = sup.witness(s);
    double total = 0.0;
    for (double l : lambda) {
      CHECK(l >= kMinWeight - 1e-12);
      total += l;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    const auto fx = eff.objective(sup.eff_positions[s]);
    for (size_t y = 0; y < eff.size(); ++y) {
      CHECK(weighted_sum(lambda, fx) >= weighted_sum(lambda, eff.objective(y)) - 1e-9);
    }
  }
}

}  // namespace

TEST_CASE("dominance examples") {
  const std::vector<double> a{0.5, 0.5}, b{0.5, 0.4}, c{0.6, 0.2}, d{0.2, 0.6};
  CHECK(dominates(a, b));
  CHECK_FALSE(dominates(b, a));
  CHECK_FALSE(dominates(a, a));
  CHECK_FALSE(dominates(c, d));
  CHECK_FALSE(dominates(d, c));
  CHECK_THROWS_AS(dominates(a, std::vector<double>{0.1}), std::invalid_argument);
}

TEST_CASE("efficient set keeps exactly the maxima") {
  const ObjectiveTable table =
      make_table(2, {{1.0, 0.0}, {0.0, 1.0}, {0.4, 0.4}, {0.3, 0.3}});
  const EfficientSet eff = efficient_set(table);
  CHECK(eff.solutions == std::vector<Solution>{0, 1, 2});
}

TEST_CASE("duplicate maxima are all retained") {
  const ObjectiveTable table = make_table(1, {{0.2}, {0.9}, {0.9}, {0.1}});
  const EfficientSet eff = efficient_set(table);
  CHECK(eff.solutions == std::vector<Solution>{1, 2});
}

TEST_CASE("fully correlated objectives reduce to single-objective maximization") {
  const Instance inst = generate_instance(make_params(2, 12, 3, 1.0, 23));
  const ObjectiveTable table = enumerate(inst, 1);
  const EfficientSet eff = efficient_set(table);
  double best = 0.0;
  for (uint64_t r = 0; r < table.rows(); ++r) best = std::max(best, table.row(r)[0]);
  uint64_t maximizers = 0;
  for (uint64_t r = 0; r < table.rows(); ++r) maximizers += table.row(r)[0] == best;
  CHECK(eff.size() == maximizers);
  CHECK(table.row(eff.solutions.front())[0] == best);
}

TEST_CASE("anti-correlated pair makes every solution efficient") {
  InstanceParams p;
  p.m = 2;
  p.n = 10;
  p.k = 3;
  p.link_model = LinkModel::random;
  p.correlation.m = 2;
  p.correlation.entries = {1.0, -1.0, -1.0, 1.0};
  p.seed = 17;
  const ObjectiveTable table = enumerate(generate_instance(p), 1);
  const EfficientSet eff = efficient_set(table);
  CHECK(eff.size() == 1024);
  CHECK(oracles::naive_efficient_set(table).size() == 1024);
}

TEST_CASE("production efficient set equals the naive oracle") {
  RandomStream pick(2024, "oracle-grid");
  const int ms[] = {2, 3, 5};
  for (int trial = 0; trial < 30; ++trial) {
    const int m = ms[trial % 3];
    const int n = 6 + static_cast<int>(pick.next_below(7));  // 6..12
    const int k = static_cast<int>(pick.next_below(4));
    const double lower = -1.0 / (m - 1);
    const double rho = lower + (1.0 - lower) * (0.05 + 0.9 * pick.next_unit());
    const Instance inst = generate_instance(make_params(m, n, k, rho, 1000 + trial));
    const ObjectiveTable table = enumerate(inst, 1);
    CHECK(efficient_set(table).solutions == oracles::naive_efficient_set(table));
  }
}

TEST_CASE("supported subset drops interior points") {
  const ObjectiveTable table =
      make_table(2, {{1.0, 0.0}, {0.0, 1.0}, {0.4, 0.4}, {0.3, 0.3}});
  const EfficientSet eff = efficient_set(table);
  for (auto method : {SupportMethod::hull2d, SupportMethod::feasibility}) {
    const SupportedSet sup = supported_set(eff, method);
    CHECK(sup.solutions == std::vector<Solution>{0, 1});
    check_witnesses(eff, sup);
  }
}

TEST_CASE("points on a hull facet are supported") {
  const ObjectiveTable table =
      make_table(2, {{1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5}, {0.0, 0.0}});
  const EfficientSet eff = efficient_set(table);
  CHECK(eff.size() == 3);
  for (auto method : {SupportMethod::hull2d, SupportMethod::feasibility}) {
    const SupportedSet sup = supported_set(eff, method);
    CHECK(sup.solutions == std::vector<Solution>{0, 1, 2});
    check_witnesses(eff, sup);
    // the facet witness of (0.5, 0.5) is the balanced weight vector
    CHECK(sup.witness(2)[0] == doctest::Approx(0.5).epsilon(1e-9));
  }
}

TEST_CASE("a singleton efficient set is supported") {
  const ObjectiveTable table =
      make_table(2, {{0.5, 0.5}, {0.4, 0.4}, {0.3, 0.3}, {0.2, 0.2}});
  const EfficientSet eff = efficient_set(table);
  CHECK(eff.size() == 1);
  const SupportedSet sup = supported_set(eff);
  CHECK(sup.size() == 1);
  check_witnesses(eff, sup);
}

TEST_CASE("single-objective efficient sets are entirely supported") {
  const ObjectiveTable table = make_table(1, {{0.2}, {0.9}, {0.9}, {0.1}});
  const EfficientSet eff = efficient_set(table);
  const SupportedSet sup = supported_set(eff);
  CHECK(sup.solutions == eff.solutions);
  CHECK(sup.witness(0)[0] == 1.0);
}

TEST_CASE("hull fast path agrees with the feasibility test") {
  RandomStream pick(77, "hull-agreement");
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 8 + static_cast<int>(pick.next_below(5));  // 8..12
    const int k = static_cast<int>(pick.next_below(5));
    const double rho = -0.95 + 1.9 * pick.next_unit();
    const Instance inst = generate_instance(make_params(2, n, k, rho, 4000 + trial));
    const EfficientSet eff = efficient_set(enumerate(inst, 1));
    const SupportedSet hull = supported_set(eff, SupportMethod::hull2d);
    const SupportedSet lp = supported_set(eff, SupportMethod::feasibility);
    CHECK(hull.solutions == lp.solutions);
    check_witnesses(eff, hull);
    check_witnesses(eff, lp);
  }
}

TEST_CASE("witnesses are valid on higher-dimensional instances") {
  RandomStream pick(31, "witness-check");
  for (int trial = 0; trial < 8; ++trial) {
    const int m = trial % 2 ? 3 : 5;
    const double lower = -1.0 / (m - 1);
    const double rho = lower + (1.0 - lower) * (0.1 + 0.8 * pick.next_unit());
    const Instance inst = generate_instance(make_params(m, 9, 2, rho, 600 + trial));
    const EfficientSet eff = efficient_set(enumerate(inst, 1));
    const SupportedSet sup = supported_set(eff, SupportMethod::feasibility, 2);
    CHECK(sup.size() >= 1);
    CHECK(sup.size() <= eff.size());
    check_witnesses(eff, sup);
    // per-objective best members always admit a near-axis weight vector
    for (int j = 0; j < m; ++j) {
      size_t best = 0;
      for (size_t i = 1; i < eff.size(); ++i) {
        if (eff.objective(i)[j] > eff.objective(best)[j]) best = i;
      }
      CHECK(std::find(sup.eff_positions.begin(), sup.eff_positions.end(), best) !=
            sup.eff_positions.end());
    }
  }
}

TEST_CASE("weighted sums") {
  CHECK(weighted_sum(std::vector<double>{0.5, 0.5}, std::vector<double>{0.4, 0.8}) ==
        doctest::Approx(0.6).epsilon(1e-15));
  CHECK(weighted_sum(std::vector<double>{1.0}, std::vector<double>{0.37}) == 0.37);
  CHECK(weighted_sum(std::vector<double>{0.25, 0.75}, std::vector<double>{1.0, 0.0}) == 0.25);
  CHECK_THROWS_AS(weighted_sum(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}),
                  std::invalid_argument);
}
