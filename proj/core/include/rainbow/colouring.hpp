#pragma once
// Edge colourings and rainbow path oracles.
//
// A path is rainbow when no edge colour repeats along it. Reachability works
// on (vertex, used-colour-mask) states: a state extends along any incident
// edge whose colour is not yet in the mask. Any walk found this way shortcuts
// to a simple path over a subset of its edges, so existence over these states
// coincides with existence over simple paths.

#include <cstdint>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

using Colour = int;
using ColourMask = std::uint64_t;  // bit i set = colour i already used

// Hard cap for the mask-based reachability searches.
inline constexpr int kColourMaskCap = 64;
// Up to this many colours (and while n * 2^k stays small) the sweep keeps a
// dense visited table; past it, a per-vertex hash set with the same pruning.
// The sparse fallback is exponential in the worst case, but large k only
// shows up on near-trees where few masks are reachable.
inline constexpr int kDenseColourCap = 20;

// Total assignment of one colour in [0, k) to every edge, stored in the
// graph's edge order. The graph must outlive the colouring.
class EdgeColouring {
 public:
  EdgeColouring(const Graph& g, int k, std::vector<Colour> colours);

  const Graph& graph() const { return *g_; }
  int colour_count() const { return k_; }
  Colour colour_of(int edge_index) const { return colours_[edge_index]; }
  const std::vector<Colour>& colours() const { return colours_; }

  // Value comparison of (k, assignment); only meaningful for colourings of
  // the same graph.
  friend bool operator==(const EdgeColouring& a, const EdgeColouring& b) {
    return a.k_ == b.k_ && a.colours_ == b.colours_;
  }

 private:
  const Graph* g_;
  int k_;
  std::vector<Colour> colours_;
};

// Pairwise internally disjoint rainbow paths sharing the endpoints u, v.
struct RainbowPathSet {
  VertexId u = 0;
  VertexId v = 0;
  std::vector<Path> paths;

  int size() const { return static_cast<int>(paths.size()); }
};

// Uniform colour per edge, consumed in edge-list order from one SplitMix64
// stream; (graph, k, seed) pins the result. Requires k >= 1.
EdgeColouring random_colouring(const Graph& g, int k, std::uint64_t seed);

// Requires the path to be valid in c's graph.
bool is_rainbow_path(const EdgeColouring& c, const Path& path);

// All vertices joined to source by some rainbow path (source included).
// Throws CapExceeded when c has more than kColourMaskCap colours.
std::vector<bool> rainbow_reachable_from(const EdgeColouring& c,
                                         VertexId source);

// Requires u != v. Throws CapExceeded as above.
bool rainbow_path_exists(const EdgeColouring& c, VertexId u, VertexId v);

// True iff every vertex pair is joined by a rainbow path. False for any
// disconnected graph on n >= 2 vertices; true for n <= 1.
bool is_rainbow_colouring(const EdgeColouring& c);

// Rainbow paths of length exactly r from u to v, lexicographic by vertex
// sequence, truncated after `limit`. Requires u != v, r >= 1, limit >= 1.
std::vector<Path> enumerate_rainbow_r_paths(const EdgeColouring& c, VertexId u,
                                            VertexId v, int r, int limit);

// Greedy scan keeping each path whose inner vertices avoid every previously
// kept one; stops after cap paths. Deterministic lower bound on the largest
// internally disjoint subset.
std::vector<Path> greedy_disjoint_paths(const std::vector<Path>& paths,
                                        int cap);

// Greedy internally disjoint packing of rainbow r-paths joining u and v, fed
// by the lexicographic enumeration truncated at `limit` (pass limit < 0 for
// the default 10 * cap). Equals greedy_disjoint_paths applied to
// enumerate_rainbow_r_paths, but stops enumerating once cap paths are kept.
RainbowPathSet independent_rainbow_packing(const EdgeColouring& c, VertexId u,
                                           VertexId v, int r, int cap,
                                           int limit = -1);

}  // namespace rainbow
