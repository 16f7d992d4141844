#include "rainbow/colouring_io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace rainbow {

void write_colouring(const EdgeColouring& c, std::ostream& out) {
  const Graph& g = c.graph();
  out << c.colour_count() << ' ' << g.edge_count() << '\n';
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    out << e.u << ' ' << e.v << ' ' << c.colour_of(i) << '\n';
  }
}

void write_colouring_file(const EdgeColouring& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_colouring(c, out);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

EdgeColouring read_colouring(std::istream& in, const Graph& g) {
  int k = 0;
  int m = 0;
  if (!(in >> k >> m))
    throw std::runtime_error("colouring header: expected \"k m\"");
  if (k < 0) throw std::runtime_error("colouring header: negative colour count");
  if (m != g.edge_count())
    throw std::runtime_error("colouring edge count " + std::to_string(m) +
                             " does not match graph (" +
                             std::to_string(g.edge_count()) + ")");
  std::vector<Colour> colours(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    VertexId u = 0;
    VertexId v = 0;
    Colour col = 0;
    if (!(in >> u >> v >> col))
      throw std::runtime_error("colouring line " + std::to_string(i) +
                               ": expected \"u v c\"");
    const Edge& e = g.edge(i);
    if (u != e.u || v != e.v)
      throw std::runtime_error("colouring line " + std::to_string(i) +
                               ": edge does not match the graph's edge order");
    if (col < 0 || col >= k)
      throw std::runtime_error("colouring line " + std::to_string(i) +
                               ": colour outside [0, k)");
    colours[static_cast<std::size_t>(i)] = col;
  }
  std::string rest;
  if (in >> rest)
    throw std::runtime_error("colouring file: trailing content \"" + rest + "\"");
  return {g, k, std::move(colours)};
}

EdgeColouring read_colouring_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return read_colouring(in, g);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace rainbow
