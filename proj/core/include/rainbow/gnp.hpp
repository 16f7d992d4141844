#pragma once

#include <cstdint>

#include "rainbow/graph.hpp"

namespace rainbow {

// Samples an Erdos-Renyi G(n,p) graph: each unordered pair {u,v} becomes an
// edge independently with probability p. One SplitMix64 draw is consumed per
// pair, in lexicographic (u,v) order with u < v, so a given (n, p, seed)
// triple produces bit-identical graphs on every platform.
// Requires n >= 1 and p in [0, 1].
Graph gnp_generate(int n, double p, std::uint64_t seed);

}  // namespace rainbow
