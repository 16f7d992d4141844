#pragma once
// Exact rainbow connection number by exhaustive search. Colourings are
// enumerated as restricted growth strings (canonical up to renaming the
// colours), with the palette size k stepping up from the diameter lower
// bound. Desk scale only: leaf counts grow like Bell numbers.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>

#include "rainbow/colouring.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

inline constexpr std::uint64_t kDefaultRcBudget = 100'000'000;

struct RcResult {
  std::optional<int> value;              // nullopt: disconnected, rc unbounded
  std::optional<EdgeColouring> witness;  // rainbow, uses exactly *value colours
  std::uint64_t nodes_explored = 0;      // restricted growth leaves visited
  bool exhausted_below = false;  // every palette below *value fully enumerated
};

// Enumerates every restricted growth assignment of m items with at most k
// colours: item i may take colours 0..min(k-1, 1 + max colour used before i).
// Calls sink(assignment, max_colour_used) at each complete assignment; a
// false return stops the enumeration. Returns the number of complete
// assignments visited, throwing BudgetExhausted once that passes `budget`.
template <typename Sink>
std::uint64_t for_each_restricted_growth(int m, int k, std::uint64_t budget,
                                         Sink&& sink) {
  std::vector<Colour> colours(static_cast<std::size_t>(std::max(m, 0)));
  std::uint64_t leaves = 0;
  bool stop = false;
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (stop) return;
    if (i == m) {
      if (leaves == budget) throw BudgetExhausted(leaves);
      ++leaves;
      if (!sink(std::span<const Colour>(colours), max_used)) stop = true;
      return;
    }
    const int top = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= top && !stop; ++c) {
      colours[static_cast<std::size_t>(i)] = c;
      self(self, i + 1, std::max(max_used, c));
    }
  };
  rec(rec, 0, -1);
  return leaves;
}

// Throws BudgetExhausted (with the cumulative leaf count) when the search
// outgrows the budget before finding the minimum.
RcResult rc_exact(const Graph& g, std::uint64_t budget = kDefaultRcBudget);

// Edge count for connected graphs (colour every edge differently), nullopt
// otherwise.
std::optional<int> rc_upper_bound_trivial(const Graph& g);

}  // namespace rainbow
