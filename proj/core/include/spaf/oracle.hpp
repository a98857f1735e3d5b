#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "spaf/apsp_af.hpp"
#include "spaf/graph.hpp"

namespace spaf {

// Brute-force references. They share only the Graph type with the solvers and
// build their staircases without FlowStaircase::record.

/// For every maximal flow ascending, BFS from every source over the edges
/// that carry it. Intended for n up to ~64.
ApspAfResult oracle_apsp_af_bfs(const Graph& g);

inline constexpr std::size_t kEnumerationLimit = 8;

/// Exhaustive simple-path enumeration; the staircase is the Pareto frontier
/// of (length, path bottleneck). Throws std::invalid_argument for
/// n > kEnumerationLimit.
ApspAfResult oracle_apsp_af_enum(const Graph& g);

/// BFS distance matrix over the edges of rank >= min_rank (0 = all edges).
DistanceMatrix bfs_distances(const Graph& g, Rank min_rank = 0);

struct Divergence {
  Vertex i;
  Vertex j;
  std::string detail;
};

struct ComparisonReport {
  bool equal = true;
  std::optional<Divergence> first_divergence;
};

/// Exact staircase comparison in (i,j) order. Throws std::invalid_argument
/// when the vertex counts differ.
ComparisonReport compare(const ApspAfResult& a, const ApspAfResult& b);

/// "((1,2),(2,9))" with flows printed as capacity literals.
std::string format_staircase(const FlowStaircase& t, const FlowRank& flows);

/// Fixed verification corpus: n in [2,9], edge count uniform in
/// [n-1, n(n-1)], capacities from {1,2,4,8,9}.
Graph corpus_graph(std::uint64_t seed);

inline constexpr std::uint64_t kCorpusFirstSeed = 1;
inline constexpr std::uint64_t kCorpusLastSeed = 500;

}  // namespace spaf
