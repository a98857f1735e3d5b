#include <gtest/gtest.h>

#include <array>

#include "fixtures.hpp"
#include "spaf/graph.hpp"

namespace spaf {
namespace {

using test::make_graph;

std::vector<Capacity> caps(std::initializer_list<const char*> literals) {
  std::vector<Capacity> out;
  for (const char* l : literals) out.push_back(Capacity::parse(l));
  return out;
}

TEST(ParseGraph, SmallestGraph) {
  const Graph g = parse_graph_text("p 2 1\ne 1 2 5");
  ASSERT_EQ(g.vertex_count(), 2u);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges()[0].from, 0u);
  EXPECT_EQ(g.edges()[0].to, 1u);
  EXPECT_EQ(g.edges()[0].capacity, Capacity::parse("5"));
}

TEST(ParseGraph, ParallelEdgesCollapseToMax) {
  const Graph g = parse_graph_text("p 3 2\ne 1 2 5\ne 1 2 7");
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges()[0].capacity.literal(), "7");
}

TEST(ParseGraph, SelfLoopsDroppedAndCommentsSkipped) {
  const Graph g = parse_graph_text("# header\np 3 2\n\ne 2 2 4\n# mid\ne 3 1 1.5\n");
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges()[0].from, 2u);
}

TEST(ParseGraph, ErrorsNameTheLine) {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("p 2 1\ne 1 2 0"), 2u);
  EXPECT_EQ(line_of("p 2 1\n# c\ne 1 3 4"), 3u);
  EXPECT_EQ(line_of("p 2 1\ne 1 2 x"), 2u);
  EXPECT_EQ(line_of("e 1 2 4"), 1u);
  EXPECT_EQ(line_of("p 2 2\ne 1 2 4\ne 2 1 4\ne 1 2 4"), 4u);
  EXPECT_EQ(line_of("p 2 x"), 1u);
  EXPECT_EQ(line_of("q 1 2"), 1u);

  try {
    parse_graph_text("p 2 1\ne 1 2 0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("non-positive capacity"), std::string::npos);
  }
  EXPECT_THROW(parse_graph_text("p 2 2\ne 1 2 4"), ParseError);
  EXPECT_THROW(parse_graph_text(""), ParseError);
}

TEST(GenerateRandom, ForcedCompleteGraph) {
  const auto pool = caps({"1"});
  const Graph g = generate_random(2, 2, pool, 0);
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(serialize_graph_text(g), "p 2 2\ne 1 2 1\ne 2 1 1\n");
}

TEST(GenerateRandom, DeterministicInSeed) {
  const auto pool = caps({"1", "2", "5", "9"});
  const Graph a = generate_random(5, 10, pool, 7);
  const Graph b = generate_random(5, 10, pool, 7);
  EXPECT_EQ(serialize_graph_text(a), serialize_graph_text(b));
  EXPECT_EQ(a.edge_count(), 10u);
  EXPECT_LE(a.flow_rank().size(), pool.size());
  EXPECT_NE(serialize_graph_text(a), serialize_graph_text(generate_random(5, 10, pool, 8)));
}

TEST(GenerateRandom, RejectsTooManyEdges) {
  const auto pool = caps({"1"});
  EXPECT_THROW(generate_random(5, 25, pool, 1), std::invalid_argument);
  EXPECT_THROW(generate_random(5, 3, std::span<const Capacity>{}, 1), std::invalid_argument);
}

TEST(GenerateRandom, PairsAreRoughlyUniform) {
  // Each of the 12 ordered pairs of K4 should appear in about half of the
  // 6-edge samples.
  const auto pool = caps({"1"});
  std::array<int, 16> hits{};
  const int trials = 4000;
  for (int s = 0; s < trials; ++s) {
    const Graph g = generate_random(4, 6, pool, s);
    for (const auto& e : g.edges()) ++hits[e.from * 4 + e.to];
  }
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) {
      if (u == v) continue;
      EXPECT_NEAR(hits[u * 4 + v] / double(trials), 0.5, 0.05);
    }
  }
}

TEST(CapacityMatrix, Examples) {
  const CapacityMatrix one = capacity_matrix(make_graph(2, {{1, 2, "5"}}));
  EXPECT_EQ(one(0, 0), kInfiniteFlow);
  EXPECT_EQ(one(0, 1), 1u);  // rank of 5
  EXPECT_EQ(one(1, 0), kNoFlow);
  EXPECT_EQ(one(1, 1), kInfiniteFlow);

  const CapacityMatrix empty = capacity_matrix(Graph(3, {}));
  EXPECT_EQ(empty, capacity_identity(3));

  const Graph both = make_graph(2, {{1, 2, "5"}, {2, 1, "3"}});
  const CapacityMatrix c = capacity_matrix(both);
  EXPECT_EQ(both.flow_rank().value(c(0, 1)).literal(), "5");
  EXPECT_EQ(both.flow_rank().value(c(1, 0)).literal(), "3");
}

TEST(DistinctCapacities, Examples) {
  const Graph a = make_graph(3, {{1, 2, "5"}, {2, 3, "5"}, {3, 1, "3"}});
  ASSERT_EQ(distinct_capacities(a).size(), 2u);
  EXPECT_EQ(distinct_capacities(a).value(1).literal(), "3");
  EXPECT_EQ(distinct_capacities(a).value(2).literal(), "5");

  EXPECT_TRUE(distinct_capacities(Graph(4, {})).empty());

  const Graph b =
      make_graph(4, {{1, 2, "2"}, {2, 3, "4"}, {3, 4, "8"}, {4, 1, "9"}, {1, 3, "2"}});
  std::vector<std::string> seen;
  for (const auto& c : distinct_capacities(b).values()) seen.push_back(c.literal());
  EXPECT_EQ(seen, (std::vector<std::string>{"2", "4", "8", "9"}));
}

TEST(FlowRank, CeilRankAndEqualLiterals) {
  const Graph g = make_graph(3, {{1, 2, "5"}, {2, 3, "5.0"}, {3, 1, "2"}});
  const FlowRank& fr = g.flow_rank();
  ASSERT_EQ(fr.size(), 2u);
  EXPECT_EQ(fr.value(2).literal(), "5");  // first edge in (u,v) order
  EXPECT_EQ(fr.ceil_rank(Capacity::parse("1")), 1u);
  EXPECT_EQ(fr.ceil_rank(Capacity::parse("2")), 1u);
  EXPECT_EQ(fr.ceil_rank(Capacity::parse("2.01")), 2u);
  EXPECT_EQ(fr.ceil_rank(Capacity::parse("5.01")), std::nullopt);
  EXPECT_EQ(fr.rank_of(Capacity::parse("3")), std::nullopt);
}

TEST(Graph, AdjacencySortedAndRanksMatch) {
  const Graph g = test::reference_network();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto out = g.out_arcs(v);
    for (std::size_t k = 1; k < out.size(); ++k) EXPECT_LT(out[k - 1].head, out[k].head);
    for (const Arc& a : out) EXPECT_EQ(g.rank_between(v, a.head), a.rank);
    auto in = g.in_arcs(v);
    for (std::size_t k = 1; k < in.size(); ++k) EXPECT_LT(in[k - 1].head, in[k].head);
  }
  EXPECT_EQ(g.rank_between(0, 1), kNoFlow);
  EXPECT_THROW(Graph(2, {{0, 2, Capacity::parse("1")}}), std::out_of_range);
}

// Round trip and matrix/rank invariants over random graphs.
TEST(GraphProperties, RoundTripAndInvariants) {
  const auto pool = caps({"1", "2.5", "4", "8", "9", "0.125"});
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 9;
    const std::size_t m = (seed * 7) % (n * (n - 1) + 1);
    const Graph g = generate_random(n, m, pool, seed);
    const std::string text = serialize_graph_text(g);
    EXPECT_EQ(serialize_graph_text(parse_graph_text(text)), text);

    const CapacityMatrix c = capacity_matrix(g);
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) {
        if (i != j) {
          EXPECT_EQ(c(i, j) > 0, g.rank_between(i, j) != kNoFlow);
        }
      }
    }
    EXPECT_LE(g.flow_rank().size(), g.edge_count());
  }
}

}  // namespace
}  // namespace spaf
