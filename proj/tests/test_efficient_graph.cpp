#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "rhomnk/efficient_graph.hpp"

using namespace rhomnk;

namespace {

// pairwise union-find reference, independent of the neighbor-probing path
std::vector<size_t> pairwise_components(std::span<const Solution> nodes, int k) {
  const size_t count = nodes.size();
  std::vector<size_t> parent(count);
  for (size_t i = 0; i < count; ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = i + 1; j < count; ++j) {
      if (hamming_distance(nodes[i], nodes[j]) <= k) parent[find(i)] = find(j);
    }
  }
  std::vector<size_t> sizes;
  std::vector<size_t> label(count, SIZE_MAX);
  for (size_t i = 0; i < count; ++i) {
    const size_t root = find(i);
    if (label[root] == SIZE_MAX) {
      label[root] = sizes.size();
      sizes.push_back(0);
    }
    ++sizes[label[root]];
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

}  // namespace

TEST_CASE("hamming distances") {
  CHECK(hamming_distance(0b0110, 0b0101) == 2);
  CHECK(hamming_distance(0b1011, 0b1011) == 0);
  const Solution x = 0b101010101010101010;
  CHECK(hamming_distance(x, ~x & ((Solution{1} << 18) - 1)) == 18);
}

TEST_CASE("component examples") {
  const std::vector<Solution> nodes{0b000, 0b001, 0b110};
  CHECK(components_at_distance(nodes, 3, 1) == std::vector<size_t>{2, 1});
  CHECK(components_at_distance(nodes, 3, 3) == std::vector<size_t>{3});

  const std::vector<Solution> chain{0b000, 0b011, 0b111};
  CHECK(components_at_distance(chain, 3, 1) == std::vector<size_t>{2, 1});

  CHECK_THROWS_AS(components_at_distance(std::vector<Solution>{}, 3, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(components_at_distance(nodes, 3, 0), std::invalid_argument);
}

TEST_CASE("largest component ratio") {
  const std::vector<Solution> nodes{0b000, 0b001, 0b110};
  CHECK(largest_component_ratio(nodes, 3, 1) == doctest::Approx(2.0 / 3.0));
  CHECK(largest_component_ratio(std::vector<Solution>{0b0101}, 4, 1) == 1.0);
}

TEST_CASE("minimal connection distance on a hand case") {
  CHECK(minimal_connection_distance(std::vector<Solution>{0b000, 0b011, 0b111}) == 2);
  CHECK(minimal_connection_distance(std::vector<Solution>{0b1010}) == 0);
}

TEST_CASE("neighbor probing matches the pairwise scan at k=1") {
  RandomStream pick(5, "probe-check");
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(pick.next_below(9));
    const uint64_t count =
        1 + pick.next_below(std::min<uint64_t>(200, uint64_t{1} << n));
    RandomStream sampler(100 + trial, "probe-nodes");
    const auto nodes = random_solution_sample(count, n, sampler);
    CHECK(components_at_distance(nodes, n, 1) == pairwise_components(nodes, 1));
  }
}

TEST_CASE("minimal connection distance equals the threshold-search oracle") {
  RandomStream pick(6, "mst-check");
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(pick.next_below(9));  // 4..12
    const uint64_t count =
        1 + pick.next_below(std::min<uint64_t>(200, uint64_t{1} << n));
    RandomStream sampler(200 + trial, "mst-nodes");
    const auto nodes = random_solution_sample(count, n, sampler);
    const int k = minimal_connection_distance(nodes);
    CHECK(k == oracles::minimal_connect_by_threshold(nodes, n));
    if (k >= 1) CHECK(components_at_distance(nodes, n, k).size() == 1);
    if (k >= 2) CHECK(components_at_distance(nodes, n, k - 1).size() >= 2);
  }
}

TEST_CASE("component counts shrink and ratios grow with k") {
  RandomStream sampler(9, "monotone-nodes");
  const auto nodes = random_solution_sample(150, 10, sampler);
  size_t prev_components = SIZE_MAX;
  double prev_ratio = 0.0;
  for (int k = 1; k <= 10; ++k) {
    const auto sizes = components_at_distance(nodes, 10, k);
    CHECK(sizes.size() <= prev_components);
    const double ratio = largest_component_ratio(nodes, 10, k);
    CHECK(ratio >= prev_ratio);
    prev_components = sizes.size();
    prev_ratio = ratio;
  }
  CHECK(prev_components == 1);
}

TEST_CASE("random baseline degenerate cases") {
  RandomStream a(3, "baseline");
  CHECK(random_baseline_largest_ratio(uint64_t{1} << 6, 6, 3, a) == 1.0);
  RandomStream b(3, "baseline");
  CHECK(random_baseline_largest_ratio(1, 18, 5, b) == 1.0);
}

TEST_CASE("sparse random node sets are nearly edgeless") {
  RandomStream stream(4, "baseline-sparse");
  CHECK(random_baseline_largest_ratio(100, 18, 30, stream) < 0.05);
}

TEST_CASE("connectedness report ties the pieces together") {
  RandomStream sampler(12, "report-nodes");
  const auto nodes = random_solution_sample(64, 8, sampler);
  RandomStream baseline(12, "baseline");
  const ConnectednessReport report = analyze_connectedness(nodes, 8, 5, baseline);
  CHECK(report.n_nodes == 64);
  size_t total = 0;
  for (size_t s : report.component_sizes) total += s;
  CHECK(total == 64);
  CHECK(report.largest_component_ratio ==
        doctest::Approx(static_cast<double>(report.component_sizes.front()) / 64.0));
  CHECK(report.minimal_connect_k >= 1);
  CHECK(report.minimal_connect_k <= 8);
  CHECK_FALSE(report.minimal_connect_skipped);

  RandomStream baseline2(12, "baseline");
  const ConnectednessReport skipped = analyze_connectedness(nodes, 8, 5, baseline2, 10);
  CHECK(skipped.minimal_connect_skipped);
  CHECK(skipped.minimal_connect_k == -1);
  CHECK(skipped.largest_component_ratio == report.largest_component_ratio);
}
