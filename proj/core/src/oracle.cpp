#include "spaf/oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <random>
#include <stdexcept>

#include "spaf/random.hpp"

namespace spaf {

DistanceMatrix bfs_distances(const Graph& g, Rank min_rank) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix dist(n, kUnreachable);
  std::deque<Vertex> frontier;
  for (Vertex s = 0; s < n; ++s) {
    auto row = dist.row(s);
    row[s] = 0;
    frontier.assign(1, s);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop_front();
      for (const Arc& arc : g.out_arcs(u)) {
        if (arc.rank < min_rank || row[arc.head] != kUnreachable) continue;
        row[arc.head] = row[u] + 1;
        frontier.push_back(arc.head);
      }
    }
  }
  return dist;
}

ApspAfResult oracle_apsp_af_bfs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t d = g.flow_rank().size();
  std::vector<DistanceMatrix> per_flow;
  per_flow.reserve(d);
  for (Rank f = 1; f <= d; ++f) per_flow.push_back(bfs_distances(g, f));

  ApspAfResult res;
  res.n = n;
  res.flow_rank = g.flow_rank();
  res.staircases = StaircaseMatrix(n, FlowStaircase{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<StairStep> steps;
      for (Rank f = 1; f <= d; ++f) {
        const Length len = per_flow[f - 1](i, j);
        if (len == kUnreachable) break;  // fewer edges at every larger flow
        if (!steps.empty() && steps.back().length == len) {
          steps.back().flow = f;
        } else {
          steps.push_back({len, f});
        }
      }
      res.staircases(i, j) = FlowStaircase(std::move(steps));
    }
  }
  return res;
}

ApspAfResult oracle_apsp_af_enum(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kEnumerationLimit) throw std::invalid_argument("enumeration oracle limited to n <= 8");

  ApspAfResult res;
  res.n = n;
  res.flow_rank = g.flow_rank();
  res.staircases = StaircaseMatrix(n, FlowStaircase{});

  for (Vertex s = 0; s < n; ++s) {
    // widest[j][len]: best bottleneck over simple s->j paths with len edges
    std::vector<std::array<Rank, kEnumerationLimit>> widest(n);
    for (auto& w : widest) w.fill(kNoFlow);
    std::vector<bool> on_path(n, false);

    auto extend = [&](auto&& self, Vertex u, Length len, Rank width) -> void {
      on_path[u] = true;
      for (const Arc& arc : g.out_arcs(u)) {
        if (on_path[arc.head]) continue;
        const Rank w = std::min(width, arc.rank);
        widest[arc.head][len + 1] = std::max(widest[arc.head][len + 1], w);
        self(self, arc.head, len + 1, w);
      }
      on_path[u] = false;
    };
    extend(extend, s, 0, kInfiniteFlow);

    for (Vertex j = 0; j < n; ++j) {
      if (j == s) continue;
      std::vector<StairStep> frontier;
      for (Length len = 1; len < n; ++len) {
        const Rank w = widest[j][len];
        if (w != kNoFlow && (frontier.empty() || w > frontier.back().flow)) frontier.push_back({len, w});
      }
      res.staircases(s, j) = FlowStaircase(std::move(frontier));
    }
  }
  return res;
}

std::string format_staircase(const FlowStaircase& t, const FlowRank& flows) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    const StairStep& s = t.steps()[k];
    if (k) out += ",";
    out += "(" + std::to_string(s.length) + "," + flows.value(s.flow).literal() + ")";
  }
  return out + ")";
}

ComparisonReport compare(const ApspAfResult& a, const ApspAfResult& b) {
  if (a.n != b.n) throw std::invalid_argument("results have different vertex counts");
  ComparisonReport report;
  const bool same_flows = std::equal(a.flow_rank.values().begin(), a.flow_rank.values().end(),
                                     b.flow_rank.values().begin(), b.flow_rank.values().end());
  if (!same_flows) {
    report.equal = false;
    report.first_divergence = Divergence{0, 0, "flow value lists differ"};
    return report;
  }
  for (Vertex i = 0; i < a.n; ++i) {
    for (Vertex j = 0; j < a.n; ++j) {
      if (a.staircases(i, j) == b.staircases(i, j)) continue;
      report.equal = false;
      report.first_divergence =
          Divergence{i, j, format_staircase(a.staircases(i, j), a.flow_rank) + " vs " +
                               format_staircase(b.staircases(i, j), b.flow_rank)};
      return report;
    }
  }
  return report;
}

Graph corpus_graph(std::uint64_t seed) {
  static const std::array<Capacity, 5> pool = {Capacity::parse("1"), Capacity::parse("2"),
                                               Capacity::parse("4"), Capacity::parse("8"),
                                               Capacity::parse("9")};
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t n = 2 + uniform_below(rng, 8);
  const std::size_t lo = n - 1;
  const std::size_t hi = n * (n - 1);
  const std::size_t m = lo + uniform_below(rng, hi - lo + 1);
  return generate_random(n, m, pool, seed);
}

}  // namespace spaf
