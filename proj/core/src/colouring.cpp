#include "rainbow/colouring.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <unordered_set>

#include "rainbow/rng.hpp"

namespace rainbow {

EdgeColouring::EdgeColouring(const Graph& g, int k, std::vector<Colour> colours)
    : g_(&g), k_(k), colours_(std::move(colours)) {
  if (k < 0) throw std::invalid_argument("colour count must be >= 0");
  if (static_cast<int>(colours_.size()) != g.edge_count())
    throw std::invalid_argument("colouring must assign every edge exactly once");
  for (Colour col : colours_)
    if (col < 0 || col >= k)
      throw std::invalid_argument("edge colour outside [0, k)");
}

EdgeColouring random_colouring(const Graph& g, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("random_colouring: k must be >= 1");
  SplitMix64 rng(seed);
  std::vector<Colour> colours(static_cast<std::size_t>(g.edge_count()));
  for (auto& col : colours)
    col = static_cast<Colour>(rng.next_below(static_cast<std::uint64_t>(k)));
  return {g, k, std::move(colours)};
}

bool is_rainbow_path(const EdgeColouring& c, const Path& path) {
  if (!path.is_valid(c.graph()))
    throw std::invalid_argument("is_rainbow_path: path not valid in graph");
  const int len = path.length();
  if (len > c.colour_count()) return false;  // pigeonhole
  if (c.colour_count() <= kColourMaskCap) {
    ColourMask mask = 0;
    for (int i = 0; i < len; ++i) {
      const int e = c.graph().edge_index(path.vertices[static_cast<std::size_t>(i)],
                                         path.vertices[static_cast<std::size_t>(i) + 1]);
      const ColourMask bit = ColourMask{1} << c.colour_of(e);
      if (mask & bit) return false;
      mask |= bit;
    }
    return true;
  }
  std::vector<Colour> seen;
  seen.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    const int e = c.graph().edge_index(path.vertices[static_cast<std::size_t>(i)],
                                       path.vertices[static_cast<std::size_t>(i) + 1]);
    const Colour col = c.colour_of(e);
    if (std::find(seen.begin(), seen.end(), col) != seen.end()) return false;
    seen.push_back(col);
  }
  return true;
}

namespace {

// Shared sweep behind the reachability oracles. Stops early once `target`
// (when >= 0) is reached.
std::vector<bool> sweep_reachable(const EdgeColouring& c, VertexId source,
                                  VertexId target) {
  const Graph& g = c.graph();
  const int n = g.vertex_count();
  const int k = c.colour_count();
  if (k > kColourMaskCap) throw CapExceeded(k);
  if (source < 0 || source >= n)
    throw std::invalid_argument("source vertex out of range");

  std::vector<bool> reached(static_cast<std::size_t>(n), false);
  reached[static_cast<std::size_t>(source)] = true;
  if (n <= 1 || g.edge_count() == 0 || source == target) return reached;

  const bool dense =
      k <= kDenseColourCap &&
      (static_cast<std::uint64_t>(n) << k) <= (std::uint64_t{1} << 26);
  std::vector<bool> visited_dense;
  std::vector<std::unordered_set<ColourMask>> visited_sparse;
  if (dense)
    visited_dense.assign(static_cast<std::size_t>(n) << k, false);
  else
    visited_sparse.assign(static_cast<std::size_t>(n), {});

  auto first_visit = [&](VertexId v, ColourMask mask) -> bool {
    if (dense) {
      const std::size_t idx = (static_cast<std::size_t>(v) << k) | mask;
      if (visited_dense[idx]) return false;
      visited_dense[idx] = true;
      return true;
    }
    return visited_sparse[static_cast<std::size_t>(v)].insert(mask).second;
  };

  struct State {
    VertexId v;
    ColourMask mask;
  };
  std::vector<State> queue;
  queue.push_back({source, 0});
  first_visit(source, 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const State s = queue[head];
    for (const Neighbour& nb : g.neighbours(s.v)) {
      const ColourMask bit = ColourMask{1} << c.colour_of(nb.edge);
      if (s.mask & bit) continue;
      if (!reached[static_cast<std::size_t>(nb.to)]) {
        reached[static_cast<std::size_t>(nb.to)] = true;
        if (nb.to == target) return reached;
      }
      const ColourMask next = s.mask | bit;
      if (first_visit(nb.to, next)) queue.push_back({nb.to, next});
    }
  }
  return reached;
}

}  // namespace

std::vector<bool> rainbow_reachable_from(const EdgeColouring& c,
                                         VertexId source) {
  return sweep_reachable(c, source, -1);
}

bool rainbow_path_exists(const EdgeColouring& c, VertexId u, VertexId v) {
  if (u == v)
    throw std::invalid_argument("rainbow_path_exists: endpoints must differ");
  return sweep_reachable(c, u, v)[static_cast<std::size_t>(v)];
}

bool is_rainbow_colouring(const EdgeColouring& c) {
  const int n = c.graph().vertex_count();
  if (n <= 1) return true;
  for (VertexId u = 0; u + 1 < n; ++u) {
    const auto reached = rainbow_reachable_from(c, u);
    for (VertexId v = u + 1; v < n; ++v)
      if (!reached[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

namespace {

// Lexicographic DFS over rainbow paths of exact length; prunes on repeated
// colours as it extends. Sink returning false aborts the search.
template <typename Sink>
class RainbowPathSearch {
 public:
  RainbowPathSearch(const EdgeColouring& c, VertexId u, VertexId v, Sink& sink)
      : c_(c),
        g_(c.graph()),
        target_(v),
        sink_(sink),
        use_mask_(c.colour_count() <= kColourMaskCap),
        on_path_(static_cast<std::size_t>(g_.vertex_count()), false) {
    current_.push_back(u);
    on_path_[static_cast<std::size_t>(u)] = true;
  }

  bool run(int remaining) {
    for (const Neighbour& nb : g_.neighbours(current_.back())) {
      const Colour col = c_.colour_of(nb.edge);
      if (!colour_free(col)) continue;
      if (nb.to == target_) {
        if (remaining == 1) {
          current_.push_back(target_);
          const bool keep_going = sink_(current_);
          current_.pop_back();
          if (!keep_going) return false;
        }
        continue;
      }
      if (remaining == 1) continue;
      if (on_path_[static_cast<std::size_t>(nb.to)]) continue;
      current_.push_back(nb.to);
      on_path_[static_cast<std::size_t>(nb.to)] = true;
      take_colour(col);
      const bool keep_going = run(remaining - 1);
      release_colour(col);
      on_path_[static_cast<std::size_t>(nb.to)] = false;
      current_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

 private:
  bool colour_free(Colour col) const {
    if (use_mask_) return (mask_ & (ColourMask{1} << col)) == 0;
    return std::find(used_.begin(), used_.end(), col) == used_.end();
  }
  void take_colour(Colour col) {
    if (use_mask_)
      mask_ |= ColourMask{1} << col;
    else
      used_.push_back(col);
  }
  void release_colour(Colour col) {
    if (use_mask_)
      mask_ &= ~(ColourMask{1} << col);
    else
      used_.pop_back();
  }

  const EdgeColouring& c_;
  const Graph& g_;
  VertexId target_;
  Sink& sink_;
  bool use_mask_;
  ColourMask mask_ = 0;
  std::vector<Colour> used_;
  std::vector<VertexId> current_;
  std::vector<bool> on_path_;
};

void check_pair_args(const Graph& g, VertexId u, VertexId v, int r) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("endpoint out of range");
  if (u == v) throw std::invalid_argument("endpoints must differ");
  if (r < 1) throw std::invalid_argument("path length must be >= 1");
}

}  // namespace

std::vector<Path> enumerate_rainbow_r_paths(const EdgeColouring& c, VertexId u,
                                            VertexId v, int r, int limit) {
  check_pair_args(c.graph(), u, v, r);
  if (limit < 1) throw std::invalid_argument("limit must be >= 1");
  std::vector<Path> out;
  if (r > c.colour_count()) return out;  // pigeonhole: no rainbow path this long
  auto sink = [&](const std::vector<VertexId>& verts) {
    out.push_back(Path{verts});
    return static_cast<int>(out.size()) < limit;
  };
  RainbowPathSearch<decltype(sink)> search(c, u, v, sink);
  search.run(r);
  return out;
}

std::vector<Path> greedy_disjoint_paths(const std::vector<Path>& paths,
                                        int cap) {
  std::vector<Path> kept;
  if (cap <= 0) return kept;
  VertexId max_vertex = -1;
  for (const Path& p : paths)
    for (VertexId v : p.vertices) max_vertex = std::max(max_vertex, v);
  std::vector<bool> interior_used(static_cast<std::size_t>(max_vertex) + 1,
                                  false);
  for (const Path& p : paths) {
    bool free = true;
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
      if (interior_used[static_cast<std::size_t>(p.vertices[i])]) {
        free = false;
        break;
      }
    if (!free) continue;
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
      interior_used[static_cast<std::size_t>(p.vertices[i])] = true;
    kept.push_back(p);
    if (static_cast<int>(kept.size()) >= cap) break;
  }
  return kept;
}

RainbowPathSet independent_rainbow_packing(const EdgeColouring& c, VertexId u,
                                           VertexId v, int r, int cap,
                                           int limit) {
  check_pair_args(c.graph(), u, v, r);
  if (cap < 0) throw std::invalid_argument("cap must be >= 0");
  if (limit < 0) limit = cap > INT_MAX / 10 ? INT_MAX : 10 * cap;

  RainbowPathSet set{u, v, {}};
  if (cap == 0 || limit == 0 || r > c.colour_count()) return set;

  // Fused greedy over the lexicographic enumeration: identical output to
  // enumerating `limit` paths first, but stops as soon as cap paths stick.
  std::vector<bool> interior_used(
      static_cast<std::size_t>(c.graph().vertex_count()), false);
  int enumerated = 0;
  auto sink = [&](const std::vector<VertexId>& verts) {
    ++enumerated;
    bool free = true;
    for (std::size_t i = 1; i + 1 < verts.size(); ++i)
      if (interior_used[static_cast<std::size_t>(verts[i])]) {
        free = false;
        break;
      }
    if (free) {
      for (std::size_t i = 1; i + 1 < verts.size(); ++i)
        interior_used[static_cast<std::size_t>(verts[i])] = true;
      set.paths.push_back(Path{verts});
    }
    return set.size() < cap && enumerated < limit;
  };
  RainbowPathSearch<decltype(sink)> search(c, u, v, sink);
  search.run(r);
  return set;
}

}  // namespace rainbow
