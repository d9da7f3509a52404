#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rhomnk/enumeration.hpp"

namespace rhomnk {

inline int hamming_distance(Solution a, Solution b) {
  return static_cast<int>(__builtin_popcountll(a ^ b));
}

/// Connected component sizes (descending) of the graph whose edges join
/// nodes at Hamming distance <= k. Nodes must be distinct.
std::vector<size_t> components_at_distance(std::span<const Solution> nodes, int n_bits,
                                           int k);

double largest_component_ratio(std::span<const Solution> nodes, int n_bits, int k = 1);

/// Smallest k at which the node set becomes one component: the bottleneck
/// edge weight of a minimum spanning tree under Hamming distance. 0 for a
/// singleton.
int minimal_connection_distance(std::span<const Solution> nodes);

/// Mean over `repeats` of the largest-component ratio (k = 1) of `size`
/// distinct uniform solutions.
double random_baseline_largest_ratio(uint64_t size, int n_bits, int repeats,
                                     RandomStream& stream);

struct ConnectednessReport {
  size_t n_nodes = 0;
  int distance_threshold = 1;
  std::vector<size_t> component_sizes;  // descending
  double largest_component_ratio = 0.0;
  int minimal_connect_k = 0;            // -1 when skipped
  double baseline_largest_ratio = 0.0;
  bool minimal_connect_skipped = false;
};

/// Full connectedness summary of a node set. Node sets larger than
/// `pairwise_limit` skip the O(n^2) minimal-connection statistic instead of
/// approximating it; the k=1 component structure is cheap and always
/// computed.
ConnectednessReport analyze_connectedness(std::span<const Solution> nodes, int n_bits,
                                          int baseline_repeats, RandomStream& baseline_stream,
                                          size_t pairwise_limit = 100000);

}  // namespace rhomnk
