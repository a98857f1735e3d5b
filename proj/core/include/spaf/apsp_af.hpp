#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spaf/graph.hpp"
#include "spaf/matrix.hpp"
#include "spaf/staircase.hpp"

namespace spaf {

using StaircaseMatrix = Matrix<FlowStaircase>;

/// One distance matrix per flow rank; element k holds rank k + 1. Entry
/// (i,j) of rank f is the shortest known length of an i->j path whose every
/// edge has rank >= f.
using DistMatrixSet = std::vector<DistanceMatrix>;

/// Horizon r for the acceleration phase: ceil(sqrt(d)) clamped to [1, n-1].
/// With naive products the acceleration phase costs r n^3 and cruising
/// d n^3 / r, which this balances. Requires n >= 2.
Length choose_r(std::size_t n, std::size_t d);

struct AccelerationResult {
  /// Exact staircase steps for lengths <= r.
  StaircaseMatrix seed;
  /// Max bottleneck over paths of length <= r.
  CapacityMatrix reach;
};

/// Computes C^l = C * C^(l-1) for l = 1..r and appends (l, c^l(i,j)) whenever
/// the bottleneck improves on C^(l-1). Requires 1 <= r <= n-1.
AccelerationResult acceleration_phase(const CapacityMatrix& c, Length r);

/// Expands each seed staircase over all d ranks: the length for rank f is the
/// shortest step whose flow is >= f.
DistMatrixSet init_cruising(const StaircaseMatrix& seed, std::size_t flow_count);

struct CruisingStats {
  /// Horizon at the start of each round: r, ceil(3r/2), ...
  std::vector<Length> horizons;
  std::size_t rounds() const { return horizons.size(); }
};

/// Repeated squaring with bridging sets until the horizon reaches n.
///
/// In a round with horizon l, row i of each matrix picks the smallest group
/// of equal entries with value in [ceil(l/2), l] (smallest value on ties) as
/// its bridging set S_i, and entry (i,j) takes min over k in S_i of
/// d(i,k) + d(k,j) if that is at most ceil(3l/2). Entries exact up to l
/// before the round are exact up to ceil(3l/2) after it.
///
/// Flow ranks are independent within a round; `threads` > 1 spreads them
/// over worker threads with identical results.
CruisingStats cruising_phase(DistMatrixSet& dist, std::size_t n, Length r, unsigned threads = 1);

/// One cruising round at `horizon` over every flow rank.
void cruising_round(DistMatrixSet& dist, Length horizon, unsigned threads = 1);

/// Scans ranks ascending per pair and extends the seed with replace-or-append.
StaircaseMatrix finalize(const DistMatrixSet& dist, StaircaseMatrix seed);

struct ApspAfOptions {
  std::optional<Length> r;
  unsigned threads = 1;
};

struct ApspAfStats {
  Length r = 0;
  CruisingStats cruising;
  double acceleration_seconds = 0;
  double cruising_seconds = 0;
  double finalize_seconds = 0;
};

struct ApspAfResult {
  std::size_t n = 0;
  FlowRank flow_rank;
  /// (i,j) for 0-indexed vertices; diagonal and unreachable pairs are empty.
  StaircaseMatrix staircases;
  ApspAfStats stats;
};

/// All-pairs shortest paths for all flows: acceleration up to r, cruising to
/// n, finalization. Throws std::invalid_argument for r outside [1, n-1].
ApspAfResult apsp_af(const Graph& g, const ApspAfOptions& options = {});

std::optional<StairStep> query_apsp(const ApspAfResult& res, Vertex i, Vertex j,
                                    const Capacity& demand);

/// Quickest i->j path carrying `demand`, rebuilt greedily from the
/// staircases: from each vertex step to the smallest-id out-neighbour whose
/// edge carries the resolved flow and whose remaining distance is one less.
/// Edges are read off length-1 staircase steps, so no graph is needed.
/// Returns nullopt when query_apsp does; throws std::logic_error if the
/// staircases are inconsistent.
std::optional<std::vector<Vertex>> path_apsp(const ApspAfResult& res, Vertex i, Vertex j,
                                             const Capacity& demand);

}  // namespace spaf
