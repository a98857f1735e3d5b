#include "spaf/bottleneck.hpp"

#include <algorithm>

#include "spaf/semiring.hpp"

namespace spaf {

bool strongly_connected_at(const Graph& g, Rank threshold) {
  const std::size_t n = g.vertex_count();
  BoolMatrix b(n, 0);
  for (const auto& e : g.edges()) {
    if (e.rank >= threshold) b(e.from, e.to) = 1;
  }
  const BoolMatrix closure = bool_closure(b);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!closure(i, j)) return false;
    }
  }
  return true;
}

BottleneckResult network_bottleneck(const Graph& g) {
  BottleneckResult result;
  if (g.vertex_count() < 2) return result;

  // Invariant: rank `lo` is feasible (0 stands for "none yet"), every rank
  // above `hi` is infeasible.
  Rank lo = 0;
  Rank hi = static_cast<Rank>(g.flow_rank().size());
  while (lo < hi) {
    const Rank mid = lo + (hi - lo + 1) / 2;
    ++result.probe_count;
    if (strongly_connected_at(g, mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (lo == 0) {
    result.status = BottleneckStatus::kNotStronglyConnected;
  } else {
    result.status = BottleneckStatus::kFound;
    result.rank = lo;
  }
  return result;
}

BottleneckResult network_bottleneck_oracle(const Graph& g) {
  BottleneckResult result;
  const std::size_t n = g.vertex_count();
  if (n < 2) return result;

  const CapacityMatrix closure = maxmin_closure(capacity_matrix(g));
  result.probe_count = 1;
  Rank lowest = kInfiniteFlow;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) lowest = std::min(lowest, closure(i, j));
    }
  }
  if (lowest == kNoFlow) {
    result.status = BottleneckStatus::kNotStronglyConnected;
  } else {
    result.status = BottleneckStatus::kFound;
    result.rank = lowest;
  }
  return result;
}

}  // namespace spaf
