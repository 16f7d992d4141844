#include "rainbow/gnp.hpp"

#include <stdexcept>

#include "rainbow/rng.hpp"

namespace rainbow {

Graph gnp_generate(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gnp_generate: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("gnp_generate: p must lie in [0, 1]");

  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  // One draw per pair, in canonical (u, v) order, even for p = 0 or 1: the
  // stream position of every pair is part of the format.
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.next_unit() < p) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace rainbow
