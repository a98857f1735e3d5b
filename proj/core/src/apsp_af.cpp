#include "spaf/apsp_af.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "spaf/semiring.hpp"

namespace spaf {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

RowIndexSets bridging_sets(const DistanceMatrix& dist, Length horizon) {
  const std::size_t n = dist.size();
  const Length lo = (horizon + 1) / 2;
  const Length hi = horizon;
  RowIndexSets sets(n);
  std::vector<std::size_t> counts(hi - lo + 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(counts.begin(), counts.end(), 0);
    auto row = dist.row(i);
    for (Length v : row) {
      if (v >= lo && v <= hi) ++counts[v - lo];
    }
    std::size_t best = 0;
    Length chosen = kUnreachable;
    for (Length v = lo; v <= hi; ++v) {
      const std::size_t c = counts[v - lo];
      if (c > 0 && (chosen == kUnreachable || c < best)) {
        best = c;
        chosen = v;
      }
    }
    if (chosen == kUnreachable) continue;
    sets[i].reserve(best);
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == chosen) sets[i].push_back(static_cast<std::uint32_t>(j));
    }
  }
  return sets;
}

void cruise_one(DistanceMatrix& dist, Length horizon, Length next_horizon) {
  const RowIndexSets sets = bridging_sets(dist, horizon);
  const DistanceMatrix bridged = minplus_product(dist, dist, &sets);
  const std::size_t n = dist.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Length m = bridged(i, j);
      if (i != j && m <= next_horizon && m < dist(i, j)) dist(i, j) = m;
    }
  }
}

}  // namespace

Length choose_r(std::size_t n, std::size_t d) {
  if (n < 2) throw std::invalid_argument("choose_r requires n >= 2");
  std::size_t root = 0;
  while (root * root < d) ++root;
  return static_cast<Length>(std::clamp<std::size_t>(root, 1, n - 1));
}

AccelerationResult acceleration_phase(const CapacityMatrix& c, Length r) {
  const std::size_t n = c.size();
  if (r < 1 || r + 1 > n) throw std::invalid_argument("r must lie in [1, n-1]");

  AccelerationResult out{StaircaseMatrix(n, FlowStaircase{}), capacity_identity(n)};
  for (Length len = 1; len <= r; ++len) {
    // C on the left, so the witness of each entry is its first hop.
    CapacityMatrix next = maxmin_product(c, out.reach).value;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && next(i, j) > out.reach(i, j)) out.seed(i, j).append(len, next(i, j));
      }
    }
    out.reach = std::move(next);
  }
  return out;
}

DistMatrixSet init_cruising(const StaircaseMatrix& seed, std::size_t flow_count) {
  const std::size_t n = seed.size();
  DistMatrixSet dist(flow_count, distance_identity(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const FlowStaircase& t = seed(i, j);
      if (t.empty()) continue;
      for (std::size_t k = 0; k < flow_count; ++k) {
        dist[k](i, j) = t.length_for(static_cast<Rank>(k + 1));
      }
    }
  }
  return dist;
}

void cruising_round(DistMatrixSet& dist, Length horizon, unsigned threads) {
  const Length next = horizon + (horizon + 1) / 2;
  const unsigned workers =
      std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(dist.size())));
  if (workers == 1) {
    for (auto& m : dist) cruise_one(m, horizon, next);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = cursor++; k < dist.size(); k = cursor++) cruise_one(dist[k], horizon, next);
    });
  }
}

CruisingStats cruising_phase(DistMatrixSet& dist, std::size_t n, Length r, unsigned threads) {
  CruisingStats stats;
  // ceil(3l/2) = l + ceil(l/2)
  for (Length horizon = r; horizon < n; horizon += (horizon + 1) / 2) {
    stats.horizons.push_back(horizon);
    cruising_round(dist, horizon, threads);
  }
  return stats;
}

StaircaseMatrix finalize(const DistMatrixSet& dist, StaircaseMatrix seed) {
  const std::size_t n = seed.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      FlowStaircase& t = seed(i, j);
      for (std::size_t k = 0; k < dist.size(); ++k) {
        const Length len = dist[k](i, j);
        if (len != kUnreachable) t.record(len, static_cast<Rank>(k + 1));
      }
    }
  }
  return seed;
}

ApspAfResult apsp_af(const Graph& g, const ApspAfOptions& options) {
  const std::size_t n = g.vertex_count();
  ApspAfResult res;
  res.n = n;
  res.flow_rank = g.flow_rank();
  if (n < 2) {
    res.staircases = StaircaseMatrix(n, FlowStaircase{});
    return res;
  }

  const Length r = options.r.value_or(choose_r(n, g.flow_rank().size()));
  res.stats.r = r;

  auto t0 = std::chrono::steady_clock::now();
  AccelerationResult accel = acceleration_phase(capacity_matrix(g), r);
  res.stats.acceleration_seconds = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  DistMatrixSet dist = init_cruising(accel.seed, g.flow_rank().size());
  res.stats.cruising = cruising_phase(dist, n, r, options.threads);
  res.stats.cruising_seconds = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  res.staircases = finalize(dist, std::move(accel.seed));
  res.stats.finalize_seconds = seconds_since(t0);
  return res;
}

std::optional<StairStep> query_apsp(const ApspAfResult& res, Vertex i, Vertex j,
                                    const Capacity& demand) {
  if (i >= res.n || j >= res.n) throw std::out_of_range("vertex out of range");
  const auto rank = res.flow_rank.ceil_rank(demand);
  if (!rank) return std::nullopt;
  return res.staircases(i, j).lookup(*rank);
}

std::optional<std::vector<Vertex>> path_apsp(const ApspAfResult& res, Vertex i, Vertex j,
                                             const Capacity& demand) {
  const auto step = query_apsp(res, i, j, demand);
  if (!step) return std::nullopt;
  const Rank flow = step->flow;

  auto edge_carries = [&](Vertex u, Vertex v) {
    const FlowStaircase& t = res.staircases(u, v);
    return !t.empty() && t.front().length == 1 && t.front().flow >= flow;
  };

  std::vector<Vertex> path{i};
  Vertex w = i;
  for (Length budget = step->length; budget > 0; --budget) {
    Vertex next = kNoVertex;
    for (Vertex u = 0; u < res.n && next == kNoVertex; ++u) {
      if (u == w || !edge_carries(w, u)) continue;
      const bool fits = budget == 1 ? u == j
                                    : u != j && res.staircases(u, j).length_for(flow) == budget - 1;
      if (fits) next = u;
    }
    if (next == kNoVertex) throw std::logic_error("inconsistent staircases during path rebuild");
    path.push_back(next);
    w = next;
  }
  return path;
}

}  // namespace spaf
