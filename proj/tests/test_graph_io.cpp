#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/gnp.hpp"
#include "rainbow/graph_io.hpp"

using rainbow::Graph;

namespace {

std::string graph_text(const Graph& g) {
  std::ostringstream out;
  rainbow::write_graph(g, out);
  return out.str();
}

Graph graph_from(const std::string& text) {
  std::istringstream in(text);
  return rainbow::read_graph(in);
}

}  // namespace

TEST_SUITE("graph_io") {
  TEST_CASE("write emits the exact format") {
    CHECK(graph_text(oracle::path_graph(4)) == "4 3\n0 1\n1 2\n2 3\n");
    CHECK(graph_text(Graph::from_edges(3, {})) == "3 0\n");
  }

  TEST_CASE("read then write round-trips bytes") {
    const std::string text = "5 4\n0 1\n0 4\n1 2\n2 3\n";
    CHECK(graph_text(graph_from(text)) == text);
  }

  TEST_CASE("write then read round-trips generated graphs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Graph g = rainbow::gnp_generate(25, 0.3, seed);
      const Graph back = graph_from(graph_text(g));
      CHECK(back.vertex_count() == g.vertex_count());
      CHECK(back.edges() == g.edges());
    }
  }

  TEST_CASE("read rejects malformed input") {
    CHECK_THROWS_AS(graph_from(""), std::runtime_error);
    CHECK_THROWS_AS(graph_from("2\n"), std::runtime_error);
    CHECK_THROWS_AS(graph_from("3 1\n"), std::runtime_error);        // missing edge
    CHECK_THROWS_AS(graph_from("3 1\n1 0\n"), std::runtime_error);   // u >= v
    CHECK_THROWS_AS(graph_from("3 1\n1 1\n"), std::runtime_error);   // loop
    CHECK_THROWS_AS(graph_from("3 2\n0 1\n0 1\n"), std::runtime_error);
    CHECK_THROWS_AS(graph_from("3 2\n0 2\n0 1\n"), std::runtime_error);  // order
    CHECK_THROWS_AS(graph_from("3 1\n0 3\n"), std::runtime_error);   // range
    CHECK_THROWS_AS(graph_from("3 1\n0 1\n0 2\n"), std::runtime_error);  // extra
    CHECK_THROWS_AS(graph_from("-1 0\n"), std::runtime_error);
  }

  TEST_CASE("file round-trip and error context") {
    const std::string path = "graph_io_test.tmp";
    const Graph g = oracle::cycle_graph(5);
    rainbow::write_graph_file(g, path);
    const Graph back = rainbow::read_graph_file(path);
    CHECK(back.edges() == g.edges());
    std::remove(path.c_str());

    try {
      rainbow::read_graph_file("does_not_exist.graph");
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find("does_not_exist.graph") !=
            std::string::npos);
    }
  }
}
