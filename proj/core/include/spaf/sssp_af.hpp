#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "spaf/graph.hpp"
#include "spaf/staircase.hpp"

namespace spaf {

/// Emitted whenever a vertex is (re)attached to the shortest-path tree.
struct AttachEvent {
  Rank flow;  // current maximal flow
  Vertex vertex;
  Vertex parent;
  Length depth;
  Rank bottleneck;
  Length previous_depth;       // depth of the previous attachment, 0 if none
  Rank previous_bottleneck;    // bottleneck of the previous attachment
};

struct SsspAfStats {
  std::size_t iterations = 0;
  /// In-edges examined while trying to attach popped vertices.
  std::size_t edge_inspections = 0;
  /// Most pops of a single vertex from the depth buckets.
  std::size_t max_pops_per_vertex = 0;
  /// False if any tentative depth ever decreased.
  bool depth_monotone = true;
};

struct SsspAfResult {
  Vertex source = 0;
  FlowRank flow_rank;
  /// Indexed by vertex; the source's staircase is empty.
  std::vector<FlowStaircase> staircases;
  /// Per vertex: (depth, parent) for every attachment, ascending by depth.
  std::vector<std::vector<std::pair<Length, Vertex>>> parent_at;
  SsspAfStats stats;
};

/// Single-source shortest paths for all flows.
///
/// Keeps one shortest-path tree alive across maximal flows taken in
/// ascending order. At each flow the vertices whose tree bottleneck falls
/// below it are cut and retried one level deeper; depth buckets are then
/// drained from shallow to deep, re-attaching each vertex under the
/// in-neighbour one level up that gives the widest bottleneck (smallest id on
/// ties). A vertex only ever moves deeper, so it is popped at most once per
/// depth and the total edge work is O(mn).
///
/// Throws std::out_of_range if source is not a vertex.
SsspAfResult sssp_af(const Graph& g, Vertex source,
                     const std::function<void(const AttachEvent&)>& on_attach = {});

/// Shortest step at v whose flow covers `demand`.
std::optional<StairStep> query_sssp(const SsspAfResult& res, Vertex v, const Capacity& demand);

/// Walks the recorded parents from (v, length) back to the source.
/// Throws std::invalid_argument if no attachment of v at that depth exists.
std::vector<Vertex> path_sssp(const SsspAfResult& res, Vertex v, Length length);

}  // namespace spaf
