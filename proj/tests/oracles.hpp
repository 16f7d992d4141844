#pragma once
// Brute-force reference implementations the tests compare the library
// against. Everything here favours the most literal definition over speed:
// raw recursion over vertex sequences, no masks, no pruning beyond
// simplicity. Usable up to ~7 vertices.

#include <cstdint>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/graph.hpp"

namespace oracle {

rainbow::Graph path_graph(int n);
rainbow::Graph cycle_graph(int n);
rainbow::Graph complete_graph(int n);

// Every connected simple graph on exactly n labelled vertices, by walking
// all 2^C(n,2) edge subsets. n <= 6 keeps this a few tens of thousands.
std::vector<rainbow::Graph> all_connected_graphs(int n);

// All simple paths from u to v as raw vertex sequences, any length >= 1.
std::vector<std::vector<rainbow::VertexId>> all_simple_paths(
    const rainbow::Graph& g, rainbow::VertexId u, rainbow::VertexId v);

bool path_is_rainbow(const rainbow::EdgeColouring& c,
                     const std::vector<rainbow::VertexId>& vertices);

// Literal reading of the definition: some simple path joining u and v has
// pairwise distinct edge colours.
bool rainbow_path_exists(const rainbow::EdgeColouring& c, rainbow::VertexId u,
                         rainbow::VertexId v);

long long count_k_paths(const rainbow::Graph& g, rainbow::VertexId u,
                        rainbow::VertexId v, int k);

long long count_rainbow_k_paths(const rainbow::EdgeColouring& c,
                                rainbow::VertexId u, rainbow::VertexId v,
                                int k);

// Exact maximum internally disjoint subset by branching over the path list.
// Exponential; keep the list small (<= ~20 paths).
int max_independent_subset(const std::vector<rainbow::Path>& paths);

// Smallest k such that some assignment of k colours (all k^m of them, no
// canonical-form shortcut) makes every pair rainbow-connected per the
// brute-force oracle above. Searches k = 1..k_max; -1 when none works.
int rc_naive(const rainbow::Graph& g, int k_max);

// Number of set partitions of m items into at most k_max blocks.
std::uint64_t partition_count(int m, int k_max);

// Calls fn once per colour assignment in {0..k-1}^m, lexicographic.
template <typename Fn>
void for_each_assignment(int m, int k, Fn&& fn) {
  std::vector<rainbow::Colour> colours(static_cast<std::size_t>(m), 0);
  while (true) {
    fn(colours);
    int i = m - 1;
    while (i >= 0 && colours[static_cast<std::size_t>(i)] == k - 1) {
      colours[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++colours[static_cast<std::size_t>(i)];
  }
}

}  // namespace oracle
