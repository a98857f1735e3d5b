#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "spaf/oracle.hpp"
#include "spaf/sssp_af.hpp"

namespace spaf {
namespace {

using test::stairs;

TEST(SsspAf, SingleEdge) {
  const Graph g = test::single_edge();
  const SsspAfResult res = sssp_af(g, 0);
  EXPECT_EQ(res.staircases[1], stairs(g, {{1, "5"}}));
  EXPECT_TRUE(res.staircases[0].empty());
  EXPECT_EQ(path_sssp(res, 1, 1), (std::vector<Vertex>{0, 1}));
}

TEST(SsspAf, DiamondPrefersWiderDetourForLargeFlows) {
  const Graph g = test::diamond();
  const SsspAfResult res = sssp_af(g, 0);
  EXPECT_EQ(res.staircases[1], stairs(g, {{1, "2"}, {2, "9"}}));
  EXPECT_EQ(path_sssp(res, 1, 2), (std::vector<Vertex>{0, 2, 1}));
  EXPECT_EQ(path_sssp(res, 1, 1), (std::vector<Vertex>{0, 1}));
}

TEST(SsspAf, ReferenceTraceAtFlowFour) {
  const Graph g = test::reference_network();
  std::vector<AttachEvent> events;
  const SsspAfResult res = sssp_af(g, 0, [&](const AttachEvent& e) { events.push_back(e); });

  const Rank four = test::rank_of(g, "4");
  std::vector<AttachEvent> at_four;
  for (const auto& e : events)
    if (e.flow == four && e.vertex == 6) at_four.push_back(e);
  ASSERT_EQ(at_four.size(), 1u);
  const AttachEvent& e = at_four[0];
  EXPECT_EQ(e.parent, 5u);  // vertex 7 moves under vertex 6
  EXPECT_EQ(e.previous_depth, 2u);
  EXPECT_EQ(e.depth, 3u);
  EXPECT_EQ(g.flow_rank().value(e.previous_bottleneck).literal(), "2");
  EXPECT_EQ(g.flow_rank().value(e.bottleneck).literal(), "8");

  EXPECT_EQ(path_sssp(res, 6, 2), (std::vector<Vertex>{0, 3, 6}));
  EXPECT_EQ(path_sssp(res, 6, 3), (std::vector<Vertex>{0, 2, 5, 6}));
}

TEST(SsspAf, Queries) {
  const Graph g = test::diamond();
  const SsspAfResult res = sssp_af(g, 0);
  auto q = [&](const char* demand) { return query_sssp(res, 1, Capacity::parse(demand)); };
  EXPECT_EQ(q("2"), (StairStep{1, test::rank_of(g, "2")}));
  EXPECT_EQ(q("3"), (StairStep{2, test::rank_of(g, "9")}));
  EXPECT_EQ(q("10"), std::nullopt);
  EXPECT_EQ(query_sssp(res, 0, Capacity::parse("1")), std::nullopt);
  EXPECT_THROW(query_sssp(res, 3, Capacity::parse("1")), std::out_of_range);
}

TEST(SsspAf, Errors) {
  const Graph g = test::diamond();
  EXPECT_THROW(sssp_af(g, 3), std::out_of_range);
  const SsspAfResult res = sssp_af(g, 0);
  EXPECT_THROW(path_sssp(res, 1, 3), std::invalid_argument);
  EXPECT_THROW(path_sssp(res, 7, 1), std::out_of_range);
}

TEST(SsspAf, EdgelessAndTrivialGraphs) {
  const Graph g(4, {});
  const SsspAfResult res = sssp_af(g, 2);
  for (const auto& t : res.staircases) EXPECT_TRUE(t.empty());
  EXPECT_EQ(sssp_af(Graph(1, {}), 0).staircases.size(), 1u);
}

// Exact agreement with per-threshold BFS plus the instrumentation bounds.
TEST(SsspAf, CorpusMatchesThresholdBfs) {
  for (std::uint64_t seed = kCorpusFirstSeed; seed <= 200; ++seed) {
    const Graph g = corpus_graph(seed);
    const std::size_t n = g.vertex_count();
    std::vector<DistanceMatrix> bfs;
    for (Rank f = 1; f <= g.flow_rank().size(); ++f) bfs.push_back(bfs_distances(g, f));

    for (Vertex s = 0; s < n; ++s) {
      const SsspAfResult res = sssp_af(g, s);
      EXPECT_LE(res.stats.edge_inspections, g.edge_count() * (n - 1));
      EXPECT_LE(res.stats.max_pops_per_vertex, n - 1);
      EXPECT_TRUE(res.stats.depth_monotone);
      for (Vertex v = 0; v < n; ++v) {
        const FlowStaircase& t = res.staircases[v];
        ASSERT_TRUE(is_double_monotone(t.steps()));
        for (Rank f = 1; f <= g.flow_rank().size(); ++f) {
          ASSERT_EQ(v == s ? kUnreachable : t.length_for(f), v == s ? kUnreachable : bfs[f - 1](s, v))
              << "seed " << seed << " s " << s << " v " << v << " f " << f;
        }
        for (const StairStep& step : t.steps()) {
          const auto path = path_sssp(res, v, step.length);
          ASSERT_EQ(path.size(), step.length + 1);
          Rank width = kInfiniteFlow;
          for (std::size_t k = 1; k < path.size(); ++k) {
            const Rank r = g.rank_between(path[k - 1], path[k]);
            ASSERT_NE(r, kNoFlow);
            width = std::min(width, r);
          }
          EXPECT_EQ(width, step.flow);
        }
      }
    }
  }
}

}  // namespace
}  // namespace spaf
