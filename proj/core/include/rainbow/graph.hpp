#pragma once
// Simple undirected graphs on vertex set {0..n-1}: a lexicographically sorted
// edge list plus per-vertex adjacency. Immutable once built, so everything
// downstream (colourings, searches) can hold references without copies.

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace rainbow {

using VertexId = int;

struct Edge {
  VertexId u = 0;  // canonical orientation: u < v
  VertexId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Adjacency entry: neighbour plus the index of the connecting edge in the
// edge list, so per-edge attributes (colours, flags) are one array lookup.
struct Neighbour {
  VertexId to = 0;
  int edge = 0;
};

class Graph {
 public:
  Graph() = default;

  // Edges may arrive in either orientation; they are canonicalised to u < v
  // and sorted. Throws std::invalid_argument on self-loops, duplicates or
  // endpoints outside [0, n).
  static Graph from_edges(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  std::span<const Neighbour> neighbours(VertexId v) const {
    return {adj_[v].data(), adj_[v].size()};
  }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(VertexId u, VertexId v) const { return edge_index(u, v) >= 0; }
  // Position of {u, v} in the edge list, -1 if absent. Orientation-agnostic.
  int edge_index(VertexId u, VertexId v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbour>> adj_;
};

// A path is its vertex sequence: all vertices distinct, consecutive ones
// adjacent. Length is the edge count.
struct Path {
  std::vector<VertexId> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool is_valid(const Graph& g) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

// BFS distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, VertexId source);

// Graphs with n <= 1 count as connected.
bool is_connected(const Graph& g);

// Largest pairwise distance; std::nullopt when the graph is disconnected
// (the diameter is unbounded). Graphs with n <= 1 have diameter 0.
std::optional<int> diameter(const Graph& g);

// All simple paths from u to v with exactly k edges, in lexicographic order
// of their vertex sequences, truncated after `limit` paths.
// Requires u != v, k >= 1, limit >= 1.
std::vector<Path> enumerate_k_paths(const Graph& g, VertexId u, VertexId v,
                                    int k, int limit);

}  // namespace rainbow
