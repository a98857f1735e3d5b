#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "spaf/graph.hpp"
#include "spaf/staircase.hpp"

namespace spaf::test {

struct E {
  Vertex u;  // 1-indexed
  Vertex v;  // 1-indexed
  std::string cap;
};

inline Graph make_graph(std::size_t n, const std::vector<E>& edges) {
  std::vector<EdgeSpec> specs;
  for (const auto& e : edges) specs.push_back({e.u - 1, e.v - 1, Capacity::parse(e.cap)});
  return Graph(n, std::move(specs));
}

inline Rank rank_of(const Graph& g, const std::string& cap) {
  return *g.flow_rank().rank_of(Capacity::parse(cap));
}

/// Staircase given as (length, capacity literal) pairs over g's ranks.
inline FlowStaircase stairs(const Graph& g, const std::vector<std::pair<Length, std::string>>& steps) {
  std::vector<StairStep> out;
  for (const auto& [len, cap] : steps) out.push_back({len, rank_of(g, cap)});
  return FlowStaircase(std::move(out));
}

inline Graph single_edge() { return make_graph(2, {{1, 2, "5"}}); }

/// Direct narrow edge versus a wider two-hop detour.
inline Graph diamond() { return make_graph(3, {{1, 2, "2"}, {1, 3, "9"}, {3, 2, "9"}}); }

/// Eight vertices, capacities {2,4,8,9,10}. The cap >= 9 edges form the
/// Hamiltonian cycle 1-4-3-2-5-6-7-8-1 whose two weakest edges are 2->5 and
/// 7->8, so the network bottleneck is 9. From vertex 4 to 7 the quickest
/// paths are ((1,2),(2,4),(3,8),(5,9)); from source 1, vertex 7 hangs under 4
/// at depth 2 with bottleneck 2 until flow 4 moves it under 6 at depth 3 with
/// bottleneck 8.
inline Graph reference_network() {
  return make_graph(8, {{1, 4, "10"}, {4, 3, "10"}, {3, 2, "10"}, {2, 5, "9"}, {5, 6, "10"},
                        {6, 7, "10"}, {7, 8, "9"}, {8, 1, "10"}, {4, 7, "2"}, {4, 5, "4"},
                        {1, 3, "8"}, {3, 6, "8"}, {5, 7, "4"}});
}

}  // namespace spaf::test
