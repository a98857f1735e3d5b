#pragma once

#include <cstddef>
#include <optional>

#include "spaf/graph.hpp"

namespace spaf {

enum class BottleneckStatus {
  kFound,
  /// Some ordered pair has no path at any capacity.
  kNotStronglyConnected,
  /// Fewer than two vertices; no ordered pair exists.
  kDegenerate,
};

struct BottleneckResult {
  BottleneckStatus status = BottleneckStatus::kDegenerate;
  /// Rank into the graph's FlowRank; set iff status == kFound.
  std::optional<Rank> rank;
  /// Number of reachability closures computed.
  std::size_t probe_count = 0;
};

/// True iff the subgraph of edges with rank >= threshold is strongly
/// connected. One Boolean closure.
bool strongly_connected_at(const Graph& g, Rank threshold);

/// Largest capacity t such that the edges with capacity >= t form a strongly
/// connected graph. Binary search over distinct-capacity ranks, so at most
/// ceil(log2 d) + 1 probes.
BottleneckResult network_bottleneck(const Graph& g);

/// Minimum over i != j of the (max,min) closure.
BottleneckResult network_bottleneck_oracle(const Graph& g);

}  // namespace spaf
