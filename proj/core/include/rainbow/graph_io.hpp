#pragma once
// Graph text format. First line "n m", then one line "u v" per edge with
// 0-based endpoints, u < v, edges sorted lexicographically. write_graph
// emits exactly this shape, and read_graph rejects anything else, so
// write(read(x)) == x byte for byte.

#include <iosfwd>
#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

void write_graph(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);

// Throws std::runtime_error naming the offending line or file on bad input.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

}  // namespace rainbow
