#include "rainbow/repair.hpp"

#include <climits>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

ProofConstants proof_constants(int r, double epsilon) {
  if (r < 3) throw std::domain_error("proof_constants: r must be >= 3");
  if (!(epsilon > 0.0))
    throw std::domain_error("proof_constants: epsilon must be > 0");
  ProofConstants pc;
  pc.r = r;
  pc.epsilon = epsilon;
  pc.L = static_cast<std::int64_t>(std::ceil(17.0 * r / (epsilon * (r - 1))));
  pc.K = static_cast<std::int64_t>(r) * pc.L;
  pc.S = 2 * pc.L * static_cast<std::int64_t>(r) * r + 2;
  return pc;
}

DangerReport detect_dangerous_pairs(const EdgeColouring& c, int r,
                                    int k_threshold) {
  if (r < 2) throw std::invalid_argument("danger detection needs r >= 2");
  if (k_threshold < 0)
    throw std::invalid_argument("k_threshold must be >= 0");
  const int n = c.graph().vertex_count();
  DangerReport report{k_threshold, {}};
  // A packing one larger than the threshold already clears the pair, so the
  // search never has to prove anything beyond k_threshold + 1.
  for (VertexId u = 0; u + 1 < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const auto packing =
          independent_rainbow_packing(c, u, v, r, k_threshold + 1);
      if (packing.size() <= k_threshold)
        report.pairs.push_back({u, v, packing.size()});
    }
  }
  return report;
}

std::vector<int> FlagSet::sorted_indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<int>(i));
  return out;
}

PathSelection select_unflagged_path(const EdgeColouring& c, VertexId u,
                                    VertexId v, int r, const FlagSet& flags,
                                    int pool_size) {
  if (pool_size < 1) throw std::invalid_argument("pool_size must be >= 1");
  const int limit = pool_size > INT_MAX / 10 ? INT_MAX : 10 * pool_size;
  auto pool = greedy_disjoint_paths(
      enumerate_k_paths(c.graph(), u, v, r, limit), pool_size);

  PathSelection sel{std::nullopt, static_cast<int>(pool.size())};
  for (Path& p : pool) {
    bool clean = true;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      const int e = c.graph().edge_index(p.vertices[i], p.vertices[i + 1]);
      if (flags.contains(e)) {
        clean = false;
        break;
      }
    }
    if (clean) {
      sel.path = std::move(p);
      break;
    }
  }
  return sel;
}

EdgeColouring recolour_to_rainbow(const EdgeColouring& c, const Path& path) {
  if (!path.is_valid(c.graph()))
    throw std::invalid_argument("recolour_to_rainbow: path not valid in graph");
  const int len = path.length();
  if (len > c.colour_count())
    throw PathTooLong("path of length " + std::to_string(len) +
                      " cannot be rainbow with " +
                      std::to_string(c.colour_count()) + " colours");
  auto colours = c.colours();
  const bool forward = path.vertices.front() <= path.vertices.back();
  for (int j = 0; j < len; ++j) {
    const int e = c.graph().edge_index(path.vertices[static_cast<std::size_t>(j)],
                                       path.vertices[static_cast<std::size_t>(j) + 1]);
    colours[static_cast<std::size_t>(e)] = forward ? j : len - 1 - j;
  }
  return {c.graph(), c.colour_count(), std::move(colours)};
}

const char* to_string(RepairStatus status) {
  switch (status) {
    case RepairStatus::Success:
      return "Success";
    case RepairStatus::NoUnflaggedPath:
      return "NoUnflaggedPath";
    case RepairStatus::NotVerified:
      return "NotVerified";
  }
  return "?";
}

namespace {

struct RepairLoop {
  const Graph& g;
  EdgeColouring colouring;
  int r;
  int pool_size;
  FlagSet flags;
  std::vector<RepairedPath> repaired;
  std::vector<PairFailure> unrepaired;
  std::optional<PairFailure> first_blocking;
  std::vector<std::vector<int>> dist_memo;

  RepairLoop(const Graph& graph, EdgeColouring initial, int r_, int pool)
      : g(graph),
        colouring(std::move(initial)),
        r(r_),
        pool_size(pool),
        flags(graph.edge_count()),
        dist_memo(static_cast<std::size_t>(graph.vertex_count())) {}

  int distance(VertexId u, VertexId v) {
    auto& row = dist_memo[static_cast<std::size_t>(u)];
    if (row.empty()) row = bfs_distances(g, u);
    return row[static_cast<std::size_t>(v)];
  }

  void repair_pair(VertexId u, VertexId v) {
    auto sel = select_unflagged_path(colouring, u, v, r, flags, pool_size);
    if (sel.path) {
      colouring = recolour_to_rainbow(colouring, *sel.path);
      const auto& verts = sel.path->vertices;
      for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        flags.insert(g.edge_index(verts[i], verts[i + 1]));
      repaired.push_back({u, v, std::move(*sel.path)});
      return;
    }
    PairFailure f{u, v, sel.pool_count, distance(u, v)};
    // An empty pool for a pair within distance r is not fatal by itself:
    // shorter rainbow paths routinely cover such pairs, and verification
    // settles it. An exhausted (flagged-out) pool, or an empty pool across a
    // distance the palette cannot bridge, blocks Success.
    const bool blocking =
        f.pool_count > 0 || f.distance == -1 || f.distance > r;
    if (blocking && !first_blocking) first_blocking = f;
    unrepaired.push_back(f);
  }

  std::vector<std::pair<VertexId, VertexId>> broken_pairs() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    const int n = g.vertex_count();
    for (VertexId u = 0; u + 1 < n; ++u) {
      const auto reached = rainbow_reachable_from(colouring, u);
      for (VertexId v = u + 1; v < n; ++v)
        if (!reached[static_cast<std::size_t>(v)]) out.emplace_back(u, v);
    }
    return out;
  }
};

RepairOutcome run_repair(const Graph& g, EdgeColouring initial,
                         int k_threshold, int pool_size, int max_iterations) {
  if (&initial.graph() != &g)
    throw std::invalid_argument("colouring is bound to a different graph");
  const int r = initial.colour_count();
  if (r < 2) throw std::invalid_argument("repair needs r >= 2");
  if (max_iterations < 1)
    throw std::invalid_argument("iteration limit must be >= 1");

  DangerReport report = detect_dangerous_pairs(initial, r, k_threshold);
  RepairLoop loop(g, std::move(initial), r, pool_size);
  for (const DangerousPair& dp : report.pairs) loop.repair_pair(dp.u, dp.v);

  auto broken = loop.broken_pairs();
  int iterations = 1;
  while (!loop.first_blocking && !broken.empty() &&
         iterations < max_iterations) {
    ++iterations;
    for (const auto& [u, v] : broken) loop.repair_pair(u, v);
    broken = loop.broken_pairs();
  }

  const bool verified = broken.empty();
  const RepairStatus status = loop.first_blocking
                                  ? RepairStatus::NoUnflaggedPath
                                  : (verified ? RepairStatus::Success
                                              : RepairStatus::NotVerified);
  return RepairOutcome{std::move(loop.colouring),
                       std::move(report),
                       std::move(loop.repaired),
                       std::move(loop.flags),
                       std::move(loop.unrepaired),
                       std::move(broken),
                       verified,
                       status,
                       loop.first_blocking,
                       iterations};
}

}  // namespace

RepairOutcome repair_colouring(const Graph& g, const EdgeColouring& initial,
                               int k_threshold, int pool_size) {
  return run_repair(g, initial, k_threshold, pool_size, 1);
}

RepairOutcome repair_colouring(const Graph& g, std::uint64_t seed, int r,
                               int k_threshold, int pool_size) {
  return run_repair(g, random_colouring(g, r, seed), k_threshold, pool_size, 1);
}

RepairOutcome repair_colouring_iterated(const Graph& g, std::uint64_t seed,
                                        int r, int k_threshold, int pool_size,
                                        int max_iterations) {
  return run_repair(g, random_colouring(g, r, seed), k_threshold, pool_size,
                    max_iterations);
}

}  // namespace rainbow
