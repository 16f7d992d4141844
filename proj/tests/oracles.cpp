#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace oracle {

using rainbow::Colour;
using rainbow::Edge;
using rainbow::EdgeColouring;
using rainbow::Graph;
using rainbow::Path;
using rainbow::VertexId;

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

namespace {

bool mask_graph_connected(int n, const std::vector<std::pair<int, int>>& pairs,
                          std::uint32_t mask) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (mask >> i & 1u) {
      adj[static_cast<std::size_t>(pairs[i].first)].push_back(pairs[i].second);
      adj[static_cast<std::size_t>(pairs[i].second)].push_back(pairs[i].first);
    }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

}  // namespace

std::vector<Graph> all_connected_graphs(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("all_connected_graphs: need 1 <= n <= 6");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  const std::uint32_t top = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < top; ++mask) {
    if (!mask_graph_connected(n, pairs, mask)) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1u) edges.push_back({pairs[i].first, pairs[i].second});
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

std::vector<std::vector<VertexId>> all_simple_paths(const Graph& g, VertexId u,
                                                    VertexId v) {
  std::vector<std::vector<VertexId>> found;
  std::vector<VertexId> current{u};
  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
  used[static_cast<std::size_t>(u)] = true;
  std::function<void()> extend = [&] {
    const VertexId last = current.back();
    for (const auto& nb : g.neighbours(last)) {
      if (nb.to == v) {
        current.push_back(v);
        found.push_back(current);
        current.pop_back();
        continue;
      }
      if (used[static_cast<std::size_t>(nb.to)]) continue;
      used[static_cast<std::size_t>(nb.to)] = true;
      current.push_back(nb.to);
      extend();
      current.pop_back();
      used[static_cast<std::size_t>(nb.to)] = false;
    }
  };
  extend();
  return found;
}

bool path_is_rainbow(const EdgeColouring& c,
                     const std::vector<VertexId>& vertices) {
  std::vector<Colour> seen;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const int e = c.graph().edge_index(vertices[i], vertices[i + 1]);
    if (e < 0) throw std::invalid_argument("path_is_rainbow: not a path");
    const Colour col = c.colour_of(e);
    if (std::find(seen.begin(), seen.end(), col) != seen.end()) return false;
    seen.push_back(col);
  }
  return true;
}

bool rainbow_path_exists(const EdgeColouring& c, VertexId u, VertexId v) {
  for (const auto& path : all_simple_paths(c.graph(), u, v))
    if (path_is_rainbow(c, path)) return true;
  return false;
}

long long count_k_paths(const Graph& g, VertexId u, VertexId v, int k) {
  long long count = 0;
  for (const auto& path : all_simple_paths(g, u, v))
    if (static_cast<int>(path.size()) == k + 1) ++count;
  return count;
}

long long count_rainbow_k_paths(const EdgeColouring& c, VertexId u, VertexId v,
                                int k) {
  long long count = 0;
  for (const auto& path : all_simple_paths(c.graph(), u, v))
    if (static_cast<int>(path.size()) == k + 1 && path_is_rainbow(c, path))
      ++count;
  return count;
}

namespace {

bool internally_disjoint(const Path& a, const Path& b) {
  for (std::size_t i = 1; i + 1 < a.vertices.size(); ++i)
    for (std::size_t j = 1; j + 1 < b.vertices.size(); ++j)
      if (a.vertices[i] == b.vertices[j]) return false;
  return true;
}

int best_subset(const std::vector<Path>& paths, std::size_t from,
                std::vector<const Path*>& chosen) {
  if (from == paths.size()) return static_cast<int>(chosen.size());
  int best = best_subset(paths, from + 1, chosen);
  bool fits = true;
  for (const Path* p : chosen)
    if (!internally_disjoint(*p, paths[from])) {
      fits = false;
      break;
    }
  if (fits) {
    chosen.push_back(&paths[from]);
    best = std::max(best, best_subset(paths, from + 1, chosen));
    chosen.pop_back();
  }
  return best;
}

}  // namespace

int max_independent_subset(const std::vector<Path>& paths) {
  if (paths.size() > 22)
    throw std::invalid_argument("max_independent_subset: list too long");
  std::vector<const Path*> chosen;
  return best_subset(paths, 0, chosen);
}

int rc_naive(const Graph& g, int k_max) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  for (int k = 1; k <= k_max; ++k) {
    bool found = false;
    for_each_assignment(g.edge_count(), k, [&](const std::vector<Colour>& a) {
      if (found) return;
      const EdgeColouring c(g, k, a);
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
          if (!oracle::rainbow_path_exists(c, u, v)) return;
      found = true;
    });
    if (found) return k;
  }
  return -1;
}

std::uint64_t partition_count(int m, int k_max) {
  if (m == 0) return 1;
  // Stirling recurrence S(i, j) = j S(i-1, j) + S(i-1, j-1).
  std::vector<std::uint64_t> prev(static_cast<std::size_t>(m) + 1, 0);
  std::vector<std::uint64_t> cur(static_cast<std::size_t>(m) + 1, 0);
  prev[0] = 1;
  for (int i = 1; i <= m; ++i) {
    std::fill(cur.begin(), cur.end(), 0);
    for (int j = 1; j <= i; ++j)
      cur[static_cast<std::size_t>(j)] =
          static_cast<std::uint64_t>(j) * prev[static_cast<std::size_t>(j)] +
          prev[static_cast<std::size_t>(j - 1)];
    std::swap(prev, cur);
  }
  std::uint64_t total = 0;
  for (int j = 1; j <= std::min(m, k_max); ++j)
    total += prev[static_cast<std::size_t>(j)];
  return total;
}

}  // namespace oracle
