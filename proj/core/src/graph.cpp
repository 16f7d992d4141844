#include "rainbow/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rainbow {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  for (auto& e : edges) {
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n)
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) +
                                  ") outside vertex range [0," +
                                  std::to_string(n) + ")");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge in edge list");

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges_[static_cast<std::size_t>(i)];
    g.adj_[static_cast<std::size_t>(e.u)].push_back({e.v, i});
    g.adj_[static_cast<std::size_t>(e.v)].push_back({e.u, i});
  }
  for (auto& list : g.adj_)
    std::sort(list.begin(), list.end(),
              [](const Neighbour& a, const Neighbour& b) { return a.to < b.to; });
  return g;
}

int Graph::edge_index(VertexId u, VertexId v) const {
  if (u == v) return -1;
  if (u > v) std::swap(u, v);
  const Edge probe{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
  if (it == edges_.end() || !(*it == probe)) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool Path::is_valid(const Graph& g) const {
  if (vertices.empty()) return false;
  std::vector<VertexId> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  if (sorted.front() < 0 || sorted.back() >= g.vertex_count()) return false;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
  return true;
}

std::vector<int> bfs_distances(const Graph& g, VertexId source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  dist[static_cast<std::size_t>(source)] = 0;
  std::vector<VertexId> queue;
  queue.reserve(static_cast<std::size_t>(g.vertex_count()));
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    const int dx = dist[static_cast<std::size_t>(x)];
    for (const Neighbour& nb : g.neighbours(x)) {
      if (dist[static_cast<std::size_t>(nb.to)] == -1) {
        dist[static_cast<std::size_t>(nb.to)] = dx + 1;
        queue.push_back(nb.to);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::optional<int> diameter(const Graph& g) {
  if (g.vertex_count() <= 1) return 0;
  int best = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    const auto dist = bfs_distances(g, s);
    for (int d : dist) {
      if (d == -1) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

namespace {

struct KPathSearch {
  const Graph& g;
  VertexId target;
  int k;
  int limit;
  std::vector<Path>& out;
  std::vector<VertexId> current;
  std::vector<bool> on_path;

  KPathSearch(const Graph& graph, VertexId u, VertexId v, int k_, int limit_,
              std::vector<Path>& sink)
      : g(graph),
        target(v),
        k(k_),
        limit(limit_),
        out(sink),
        on_path(static_cast<std::size_t>(graph.vertex_count()), false) {
    current.reserve(static_cast<std::size_t>(k_) + 1);
    current.push_back(u);
    on_path[static_cast<std::size_t>(u)] = true;
  }

  // Sorted adjacency makes the emission order lexicographic in the vertex
  // sequence. The target may only appear as the final vertex.
  bool run(int remaining) {
    for (const Neighbour& nb : g.neighbours(current.back())) {
      if (nb.to == target) {
        if (remaining == 1) {
          current.push_back(target);
          out.push_back(Path{current});
          current.pop_back();
          if (static_cast<int>(out.size()) >= limit) return false;
        }
        continue;
      }
      if (remaining == 1) continue;
      if (on_path[static_cast<std::size_t>(nb.to)]) continue;
      current.push_back(nb.to);
      on_path[static_cast<std::size_t>(nb.to)] = true;
      const bool keep_going = run(remaining - 1);
      on_path[static_cast<std::size_t>(nb.to)] = false;
      current.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<Path> enumerate_k_paths(const Graph& g, VertexId u, VertexId v,
                                    int k, int limit) {
  if (u == v) throw std::invalid_argument("path endpoints must differ");
  if (k < 1) throw std::invalid_argument("path length must be >= 1");
  if (limit < 1) throw std::invalid_argument("limit must be >= 1");
  std::vector<Path> out;
  KPathSearch search(g, u, v, k, limit, out);
  search.run(k);
  return out;
}

}  // namespace rainbow
