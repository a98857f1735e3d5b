#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "spaf/bottleneck.hpp"
#include "spaf/oracle.hpp"

namespace spaf {
namespace {

using test::make_graph;

std::string value_of(const Graph& g, const BottleneckResult& r) {
  if (r.status != BottleneckStatus::kFound) return "NONE";
  return g.flow_rank().value(*r.rank).literal();
}

TEST(NetworkBottleneck, TwoCycle) {
  const Graph g = make_graph(2, {{1, 2, "3"}, {2, 1, "7"}});
  EXPECT_EQ(value_of(g, network_bottleneck(g)), "3");
  EXPECT_EQ(value_of(g, network_bottleneck_oracle(g)), "3");
}

TEST(NetworkBottleneck, ReferenceNetworkIsNine) {
  const Graph g = test::reference_network();
  const BottleneckResult r = network_bottleneck(g);
  EXPECT_EQ(value_of(g, r), "9");
  EXPECT_EQ(value_of(g, network_bottleneck_oracle(g)), "9");
  // Raising the threshold past 9 drops exactly e(2,5) and e(7,8) from the
  // strongly connected cycle.
  EXPECT_TRUE(strongly_connected_at(g, test::rank_of(g, "9")));
  EXPECT_FALSE(strongly_connected_at(g, test::rank_of(g, "10")));
}

TEST(NetworkBottleneck, DirectedCycleOracle) {
  const Graph g = make_graph(3, {{1, 2, "4"}, {2, 3, "6"}, {3, 1, "2"}});
  EXPECT_EQ(value_of(g, network_bottleneck_oracle(g)), "2");
  EXPECT_EQ(value_of(g, network_bottleneck(g)), "2");
}

TEST(NetworkBottleneck, NotStronglyConnected) {
  const Graph g = test::single_edge();
  EXPECT_EQ(network_bottleneck(g).status, BottleneckStatus::kNotStronglyConnected);
  EXPECT_EQ(network_bottleneck_oracle(g).status, BottleneckStatus::kNotStronglyConnected);
  EXPECT_EQ(network_bottleneck(Graph(3, {})).status, BottleneckStatus::kNotStronglyConnected);
  EXPECT_EQ(network_bottleneck(Graph(3, {})).probe_count, 0u);
}

TEST(NetworkBottleneck, DegenerateBelowTwoVertices) {
  EXPECT_EQ(network_bottleneck(Graph(1, {})).status, BottleneckStatus::kDegenerate);
  EXPECT_EQ(network_bottleneck(Graph(0, {})).status, BottleneckStatus::kDegenerate);
  EXPECT_EQ(network_bottleneck_oracle(Graph(1, {})).status, BottleneckStatus::kDegenerate);
}

TEST(NetworkBottleneck, AgreesWithClosureOracleWithinProbeBudget) {
  const std::vector<Capacity> pool = {Capacity::parse("1"), Capacity::parse("3"), Capacity::parse("4"),
                                      Capacity::parse("6"), Capacity::parse("7"), Capacity::parse("11"),
                                      Capacity::parse("12"), Capacity::parse("20")};
  std::size_t strongly = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const std::size_t m = std::min(n * (n - 1), n + seed % (n * n));
    const Graph g = generate_random(n, m, pool, seed);
    const BottleneckResult fast = network_bottleneck(g);
    const BottleneckResult slow = network_bottleneck_oracle(g);
    ASSERT_EQ(fast.status, slow.status) << seed;
    ASSERT_EQ(fast.rank, slow.rank) << seed;
    const std::size_t d = g.flow_rank().size();
    if (d > 0) {
      EXPECT_LE(fast.probe_count, std::ceil(std::log2(double(d))) + 1);
    }
    if (fast.status == BottleneckStatus::kFound) {
      ++strongly;
      // Monotone probe: feasible at every lower threshold, infeasible above.
      for (Rank t = 1; t <= d; ++t) EXPECT_EQ(strongly_connected_at(g, t), t <= *fast.rank);
    }
  }
  EXPECT_GT(strongly, 50u);
}

}  // namespace
}  // namespace spaf
