#pragma once
// Colouring text format. First line "k m", then one line "u v c" per edge in
// the graph's edge order. Reading validates the edges against the graph the
// colouring is being bound to.

#include <iosfwd>
#include <string>

#include "rainbow/colouring.hpp"

namespace rainbow {

void write_colouring(const EdgeColouring& c, std::ostream& out);
void write_colouring_file(const EdgeColouring& c, const std::string& path);

// Throws std::runtime_error when the text does not match g's edge list.
EdgeColouring read_colouring(std::istream& in, const Graph& g);
EdgeColouring read_colouring_file(const std::string& path, const Graph& g);

}  // namespace rainbow
