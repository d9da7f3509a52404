#include "rhomnk/efficient_graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace rhomnk {

namespace {

struct UnionFind {
  std::vector<uint32_t> parent;
  std::vector<uint32_t> size;

  explicit UnionFind(size_t n) : parent(n), size(n, 1) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<uint32_t>(i);
  }

  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

std::vector<size_t> component_sizes(UnionFind& uf) {
  std::vector<size_t> sizes;
  for (uint32_t i = 0; i < uf.parent.size(); ++i) {
    if (uf.find(i) == i) sizes.push_back(uf.size[i]);
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

}  // namespace

std::vector<size_t> components_at_distance(std::span<const Solution> nodes, int n_bits,
                                           int k) {
  if (nodes.empty()) throw std::invalid_argument("components_at_distance: empty node list");
  if (k < 1) throw std::invalid_argument("components_at_distance: k must be >= 1");
  const size_t count = nodes.size();
  UnionFind uf(count);

  if (k == 1) {
    // probe the n_bits neighbors of each node instead of the O(n^2) pair scan
    std::unordered_map<Solution, uint32_t> index;
    index.reserve(count * 2);
    for (size_t i = 0; i < count; ++i) index.emplace(nodes[i], static_cast<uint32_t>(i));
    for (size_t i = 0; i < count; ++i) {
      for (int b = 0; b < n_bits; ++b) {
        const auto it = index.find(nodes[i] ^ (Solution{1} << b));
        if (it != index.end()) uf.unite(static_cast<uint32_t>(i), it->second);
      }
    }
  } else {
    for (size_t i = 0; i < count; ++i) {
      for (size_t j = i + 1; j < count; ++j) {
        if (hamming_distance(nodes[i], nodes[j]) <= k) {
          uf.unite(static_cast<uint32_t>(i), static_cast<uint32_t>(j));
        }
      }
    }
  }
  return component_sizes(uf);
}

double largest_component_ratio(std::span<const Solution> nodes, int n_bits, int k) {
  const auto sizes = components_at_distance(nodes, n_bits, k);
  return static_cast<double>(sizes.front()) / static_cast<double>(nodes.size());
}

int minimal_connection_distance(std::span<const Solution> nodes) {
  if (nodes.empty()) {
    throw std::invalid_argument("minimal_connection_distance: empty node list");
  }
  const size_t count = nodes.size();
  if (count == 1) return 0;

  // Prim with a dense distance array; the answer is the largest edge pulled
  // into the tree (bottleneck property of the MST).
  std::vector<int> best(count, std::numeric_limits<int>::max());
  std::vector<char> in_tree(count, 0);
  best[0] = 0;
  int bottleneck = 0;
  for (size_t added = 0; added < count; ++added) {
    size_t u = count;
    for (size_t i = 0; i < count; ++i) {
      if (!in_tree[i] && (u == count || best[i] < best[u])) u = i;
    }
    in_tree[u] = 1;
    bottleneck = std::max(bottleneck, best[u]);
    for (size_t i = 0; i < count; ++i) {
      if (!in_tree[i]) best[i] = std::min(best[i], hamming_distance(nodes[u], nodes[i]));
    }
  }
  return bottleneck;
}

double random_baseline_largest_ratio(uint64_t size, int n_bits, int repeats,
                                     RandomStream& stream) {
  if (size < 1) throw std::invalid_argument("random_baseline_largest_ratio: size must be >= 1");
  if (repeats < 1) {
    throw std::invalid_argument("random_baseline_largest_ratio: repeats must be >= 1");
  }
  double acc = 0.0;
  for (int r = 0; r < repeats; ++r) {
    const std::vector<Solution> nodes = random_solution_sample(size, n_bits, stream);
    acc += largest_component_ratio(nodes, n_bits, 1);
  }
  return acc / repeats;
}

ConnectednessReport analyze_connectedness(std::span<const Solution> nodes, int n_bits,
                                          int baseline_repeats,
                                          RandomStream& baseline_stream,
                                          size_t pairwise_limit) {
  ConnectednessReport report;
  report.n_nodes = nodes.size();
  report.distance_threshold = 1;
  report.component_sizes = components_at_distance(nodes, n_bits, 1);
  report.largest_component_ratio =
      static_cast<double>(report.component_sizes.front()) / static_cast<double>(nodes.size());
  if (nodes.size() > pairwise_limit) {
    report.minimal_connect_skipped = true;
    report.minimal_connect_k = -1;
  } else {
    report.minimal_connect_k = minimal_connection_distance(nodes);
  }
  report.baseline_largest_ratio =
      random_baseline_largest_ratio(nodes.size(), n_bits, baseline_repeats, baseline_stream);
  return report;
}

}  // namespace rhomnk
