#include <algorithm>
#include <span>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/colouring.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/rc_exact.hpp"

using rainbow::Colour;
using rainbow::Graph;
using rainbow::RcResult;

namespace {

void check_witness(const Graph& g, const RcResult& result) {
  REQUIRE(result.value.has_value());
  REQUIRE(result.witness.has_value());
  CHECK(result.witness->colour_count() == *result.value);
  Colour max_used = -1;
  for (int e = 0; e < g.edge_count(); ++e)
    max_used = std::max(max_used, result.witness->colour_of(e));
  CHECK(max_used == *result.value - 1);
  CHECK(rainbow::is_rainbow_colouring(*result.witness));
  CHECK(result.exhausted_below);
}

}  // namespace

TEST_SUITE("rc_exact") {
  TEST_CASE("complete graphs need one colour") {
    for (int n = 2; n <= 5; ++n) {
      const Graph g = oracle::complete_graph(n);
      const RcResult result = rainbow::rc_exact(g);
      CHECK(result.value == 1);
      check_witness(g, result);
    }
  }

  TEST_CASE("path graphs need a colour per edge") {
    for (int n = 2; n <= 6; ++n) {
      const Graph g = oracle::path_graph(n);
      const RcResult result = rainbow::rc_exact(g);
      CHECK(result.value == n - 1);
      check_witness(g, result);
    }
  }

  TEST_CASE("six-cycle needs three colours") {
    const Graph g = oracle::cycle_graph(6);
    const RcResult result = rainbow::rc_exact(g);
    CHECK(result.value == 3);
    check_witness(g, result);
  }

  TEST_CASE("degenerate graphs") {
    const RcResult single = rainbow::rc_exact(Graph::from_edges(1, {}));
    CHECK(single.value == 0);
    REQUIRE(single.witness.has_value());
    CHECK(rainbow::is_rainbow_colouring(*single.witness));

    const RcResult split =
        rainbow::rc_exact(Graph::from_edges(4, {{0, 1}, {2, 3}}));
    CHECK_FALSE(split.value.has_value());
    CHECK_FALSE(split.witness.has_value());
  }

  TEST_CASE("agrees with the assignment-exhausting oracle") {
    const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(*rainbow::rc_exact(star).value == oracle::rc_naive(star, 3));
    CHECK(*rainbow::rc_exact(oracle::path_graph(4)).value ==
          oracle::rc_naive(oracle::path_graph(4), 3));
    CHECK(*rainbow::rc_exact(oracle::cycle_graph(5)).value ==
          oracle::rc_naive(oracle::cycle_graph(5), 3));
    CHECK(*rainbow::rc_exact(oracle::cycle_graph(6)).value ==
          oracle::rc_naive(oracle::cycle_graph(6), 3));
    CHECK(*rainbow::rc_exact(oracle::complete_graph(4)).value ==
          oracle::rc_naive(oracle::complete_graph(4), 2));
  }

  TEST_CASE("bounded by diameter and edge count on all small graphs") {
    for (int n = 1; n <= 5; ++n) {
      for (const Graph& g : oracle::all_connected_graphs(n)) {
        const RcResult result = rainbow::rc_exact(g);
        REQUIRE(result.value.has_value());
        CHECK(*result.value >= *rainbow::diameter(g));
        CHECK(*result.value <= g.edge_count());
        if (n >= 2) check_witness(g, result);
      }
    }
  }

  TEST_CASE("restricted growth enumeration counts set partitions") {
    for (int m = 0; m <= 6; ++m) {
      for (int k = 1; k <= m + 1; ++k) {
        std::uint64_t leaves = rainbow::for_each_restricted_growth(
            m, k, 1'000'000,
            [](std::span<const Colour>, int) { return true; });
        CHECK(leaves == oracle::partition_count(m, k));
      }
    }
    // Full Bell numbers once k is unrestricted.
    CHECK(oracle::partition_count(5, 5) == 52);
    CHECK(oracle::partition_count(6, 6) == 203);
  }

  TEST_CASE("budget exhaustion carries the leaf count") {
    const Graph g = oracle::cycle_graph(6);
    try {
      rainbow::rc_exact(g, 10);
      FAIL("expected BudgetExhausted");
    } catch (const rainbow::BudgetExhausted& e) {
      CHECK(e.nodes_explored == 10);
    }
  }

  TEST_CASE("trivial upper bound") {
    CHECK(rainbow::rc_upper_bound_trivial(oracle::path_graph(4)) == 3);
    CHECK(rainbow::rc_upper_bound_trivial(oracle::complete_graph(4)) == 6);
    CHECK_FALSE(rainbow::rc_upper_bound_trivial(Graph::from_edges(2, {}))
                    .has_value());
  }
}
