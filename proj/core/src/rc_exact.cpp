#include "rainbow/rc_exact.hpp"

#include <stdexcept>
#include <vector>

namespace rainbow {

RcResult rc_exact(const Graph& g, std::uint64_t budget) {
  if (!is_connected(g)) return {std::nullopt, std::nullopt, 0, false};

  const int m = g.edge_count();
  const int lo = *diameter(g);
  std::uint64_t total = 0;

  for (int k = lo;; ++k) {
    std::optional<EdgeColouring> witness;
    try {
      total += for_each_restricted_growth(
          m, k, budget - total,
          [&](std::span<const Colour> cols, int max_used) {
            // Leaves using fewer than k colours were already covered at a
            // smaller palette (or sit below the diameter bound), so only
            // assignments spending the whole palette are tested here.
            if (max_used != k - 1) return true;
            EdgeColouring candidate(g, k,
                                    std::vector<Colour>(cols.begin(), cols.end()));
            if (is_rainbow_colouring(candidate)) {
              witness = std::move(candidate);
              return false;
            }
            return true;
          });
    } catch (const BudgetExhausted& e) {
      throw BudgetExhausted(total + e.nodes_explored);
    }
    if (witness) {
      // Reaching palette k means every smaller palette was fully enumerated
      // without a rainbow colouring, so k is the exact minimum.
      return {k, std::move(witness), total, true};
    }
    if (k >= m)
      throw std::logic_error(
          "rc_exact: all-distinct colouring rejected on a connected graph");
  }
}

std::optional<int> rc_upper_bound_trivial(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  return g.edge_count();
}

}  // namespace rainbow
