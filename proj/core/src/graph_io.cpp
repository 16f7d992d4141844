#include "rainbow/graph_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rainbow {

void write_graph(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_graph(g, out);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

Graph read_graph(std::istream& in) {
  int n = 0;
  int m = 0;
  if (!(in >> n >> m)) throw std::runtime_error("graph header: expected \"n m\"");
  if (n < 0 || m < 0) throw std::runtime_error("graph header: negative counts");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Edge e;
    if (!(in >> e.u >> e.v))
      throw std::runtime_error("graph edge " + std::to_string(i) +
                               ": expected \"u v\"");
    if (e.u >= e.v)
      throw std::runtime_error("graph edge " + std::to_string(i) +
                               ": endpoints must satisfy u < v");
    if (e.u < 0 || e.v >= n)
      throw std::runtime_error("graph edge " + std::to_string(i) +
                               ": endpoint outside [0, n)");
    if (!edges.empty() && !(edges.back() < e))
      throw std::runtime_error("graph edge " + std::to_string(i) +
                               ": edges must be sorted lexicographically");
    edges.push_back(e);
  }
  std::string rest;
  if (in >> rest)
    throw std::runtime_error("graph file: trailing content \"" + rest + "\"");
  return Graph::from_edges(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return read_graph(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace rainbow
