#pragma once
// Random-colour-then-repair. Colour the edges uniformly at random, find every
// vertex pair joined by too few independent rainbow r-paths, then walk those
// pairs in lexicographic order handing each one a freshly recoloured rainbow
// r-path whose edges become immutable (flagged) from then on. A final machine
// verification decides whether the result certifies rc <= r.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/colouring.hpp"

namespace rainbow {

struct ProofConstants {
  int r = 0;
  double epsilon = 0.0;
  std::int64_t L = 0;  // ceil(17 r / (epsilon (r - 1)))
  std::int64_t K = 0;  // r L
  std::int64_t S = 0;  // 2 L r^2 + 2
};

// Throws std::domain_error for r < 3 or epsilon <= 0.
ProofConstants proof_constants(int r, double epsilon);

struct DangerousPair {
  VertexId u = 0;
  VertexId v = 0;
  int packing_size = 0;  // greedy packing size, <= the report's threshold

  friend bool operator==(const DangerousPair&, const DangerousPair&) = default;
};

struct DangerReport {
  int k_threshold = 0;
  std::vector<DangerousPair> pairs;  // lexicographic by (u, v)
};

// A pair is dangerous when the greedy packing of independent rainbow r-paths
// joining it has size <= k_threshold. Every unordered pair is examined, so
// pairs with no r-path at all (distance > r included) show up with packing 0.
// Requires r >= 2, k_threshold >= 0.
DangerReport detect_dangerous_pairs(const EdgeColouring& c, int r,
                                    int k_threshold);

// Set of edge indices that repair has frozen. Only ever grows within a run.
class FlagSet {
 public:
  FlagSet() = default;
  explicit FlagSet(int edge_count)
      : bits_(static_cast<std::size_t>(edge_count), false) {}

  bool contains(int edge) const { return bits_[static_cast<std::size_t>(edge)]; }
  void insert(int edge) {
    auto i = static_cast<std::size_t>(edge);
    if (!bits_[i]) {
      bits_[i] = true;
      ++count_;
    }
  }
  int size() const { return count_; }
  std::vector<int> sorted_indices() const;

 private:
  std::vector<bool> bits_;
  int count_ = 0;
};

struct PathSelection {
  std::optional<Path> path;  // first pool path free of flagged edges
  int pool_count = 0;        // pool size built; 0 = no r-path joins the pair
};

// Builds a pool of up to pool_size internally disjoint r-paths joining u and
// v (plain paths; recolouring restores rainbowness afterwards) by a greedy
// pass over the lexicographic enumeration truncated at 10 * pool_size, then
// returns the first pool path containing no flagged edge.
// Requires u != v, r >= 1, pool_size >= 1.
PathSelection select_unflagged_path(const EdgeColouring& c, VertexId u,
                                    VertexId v, int r, const FlagSet& flags,
                                    int pool_size);

// Copy of c with the edges along `path` recoloured 0, 1, 2, ... in path order
// starting from the lower-indexed endpoint. Throws PathTooLong when the path
// has more edges than c has colours.
EdgeColouring recolour_to_rainbow(const EdgeColouring& c, const Path& path);

enum class RepairStatus { Success, NoUnflaggedPath, NotVerified };
const char* to_string(RepairStatus status);

// A dangerous pair the loop could not hand a path.
struct PairFailure {
  VertexId u = 0;
  VertexId v = 0;
  int pool_count = 0;  // 0 together with distance > r: no r-path can exist
  int distance = -1;   // graph distance, -1 when unreachable
};

struct RepairedPath {
  VertexId u = 0;
  VertexId v = 0;
  Path path;
};

struct RepairOutcome {
  EdgeColouring colouring;  // final colouring
  DangerReport report;      // detection result on the initial colouring
  std::vector<RepairedPath> repaired_paths;
  FlagSet flags;
  std::vector<PairFailure> unrepaired;  // dangerous pairs that got no path
  // Pairs with no rainbow path in the final colouring.
  std::vector<std::pair<VertexId, VertexId>> broken_pairs;
  bool verified = false;  // final colouring passed is_rainbow_colouring
  RepairStatus status = RepairStatus::Success;
  // First failure that blocks Success: a pool exhausted by flags, or an empty
  // pool for a pair at distance > r (no r-path can ever exist). Empty pools
  // for pairs at distance <= r merely skip: such pairs carry no repairable
  // r-path but are routinely covered by shorter rainbow paths, and the final
  // verification has the last word on them.
  std::optional<PairFailure> first_blocking_failure;
  int iterations = 1;
};

// status == Success iff no blocking failure occurred and the final colouring
// verified. The repaired paths stay rainbow in the final colouring: a path is
// only selected when none of its edges are flagged, and its edges are flagged
// the moment it is recoloured.
RepairOutcome repair_colouring(const Graph& g, const EdgeColouring& initial,
                               int k_threshold, int pool_size);

// Convenience overload: initial colouring = random_colouring(g, r, seed).
RepairOutcome repair_colouring(const Graph& g, std::uint64_t seed, int r,
                               int k_threshold, int pool_size);

// Heuristic extension past the single-pass procedure: while the outcome is
// NotVerified and iterations remain, run further repair passes over the
// currently broken pairs (every such pair has packing 0 by definition), with
// colouring and flags carried over. The detection report stays the one from
// the first pass.
RepairOutcome repair_colouring_iterated(const Graph& g, std::uint64_t seed,
                                        int r, int k_threshold, int pool_size,
                                        int max_iterations);

}  // namespace rainbow
