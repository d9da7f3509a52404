#include "rhomnk/landscape.hpp"

#include <numeric>

namespace rhomnk {

std::string to_string(LinkModel model) {
  return model == LinkModel::adjacent ? "adjacent" : "random";
}

LinkModel link_model_from_string(std::string_view s) {
  if (s == "adjacent") return LinkModel::adjacent;
  if (s == "random") return LinkModel::random;
  throw std::invalid_argument("unknown link model: '" + std::string(s) + "'");
}

void validate_params(const InstanceParams& params) {
  if (params.m < 1) throw std::invalid_argument("params: m must be >= 1");
  if (params.n < 1 || params.n > 63) {
    throw std::invalid_argument("params: n must lie in [1, 63]");
  }
  if (params.k < 0 || params.k > params.n - 1) {
    throw std::invalid_argument("params: k must lie in [0, n-1], got k=" +
                                std::to_string(params.k) + " with n=" +
                                std::to_string(params.n));
  }
  if (params.correlation.m != params.m) {
    throw std::invalid_argument("params: correlation matrix dimension does not match m");
  }
  validate_correlation_matrix(params.correlation);
}

EpistaticLinks::EpistaticLinks(int n, int k, std::vector<uint32_t> flat)
    : n_(n), k_(k), flat_(std::move(flat)) {
  if (flat_.size() != static_cast<size_t>(n) * k) {
    throw std::invalid_argument("EpistaticLinks: flat size mismatch");
  }
}

ComponentTable::ComponentTable(int n, int k, int m)
    : n_(n), m_(m), rows_(1u << (k + 1)) {
  values_.assign(static_cast<size_t>(n) * rows_ * m, 0.0);
}

EpistaticLinks build_links(const InstanceParams& params) {
  if (params.k > params.n - 1) {
    throw std::invalid_argument("build_links: k must be <= n-1");
  }
  const int n = params.n;
  const int k = params.k;
  std::vector<uint32_t> flat(static_cast<size_t>(n) * k);

  if (params.link_model == LinkModel::adjacent) {
    // the k successors of each bit, with periodic boundaries
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < k; ++j) {
        flat[static_cast<size_t>(i) * k + j] = static_cast<uint32_t>((i + 1 + j) % n);
      }
    }
  } else {
    // partial Fisher-Yates over the other n-1 bits, one sub-stream per bit
    std::vector<uint32_t> candidates(n - 1);
    for (int i = 0; i < n; ++i) {
      int w = 0;
      for (int b = 0; b < n; ++b) {
        if (b != i) candidates[w++] = static_cast<uint32_t>(b);
      }
      RandomStream stream(params.seed, "links", static_cast<uint64_t>(i));
      for (int t = 0; t < k; ++t) {
        const uint64_t pick = t + stream.next_below(static_cast<uint64_t>(n - 1 - t));
        std::swap(candidates[t], candidates[pick]);
        flat[static_cast<size_t>(i) * k + t] = candidates[t];
      }
    }
  }
  return EpistaticLinks(n, k, std::move(flat));
}

Instance generate_instance(const InstanceParams& params) {
  validate_params(params);
  EpistaticLinks links = build_links(params);
  const CholeskyFactor factor =
      cholesky_factor(hotelling_normal_correlation(params.correlation));

  ComponentTable tables(params.n, params.k, params.m);
  const uint32_t rows = tables.rows_per_bit();
  for (int bit = 0; bit < params.n; ++bit) {
    RandomStream stream(params.seed, "tables", static_cast<uint64_t>(bit));
    for (uint32_t r = 0; r < rows; ++r) {
      sample_correlated_uniform_tuple(factor, stream,
                                      {tables.row(bit, r), static_cast<size_t>(params.m)});
    }
  }
  return Instance{params, std::move(links), std::move(tables)};
}

std::vector<double> evaluate(const Instance& inst, Solution x) {
  std::vector<double> out(inst.params.m);
  evaluate(inst, x, out);
  return out;
}

}  // namespace rhomnk
