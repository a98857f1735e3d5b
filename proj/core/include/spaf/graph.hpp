#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spaf/capacity.hpp"
#include "spaf/matrix.hpp"

namespace spaf {

/// 0-indexed vertex id. Files, JSON and the CLI use 1-indexed ids.
using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Bijection between the distinct capacities of a graph and ranks 1..d.
class FlowRank {
 public:
  FlowRank() = default;
  /// Values in any order; duplicates keep the first literal seen.
  explicit FlowRank(std::vector<Capacity> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  /// Ascending distinct values; values()[k - 1] has rank k.
  std::span<const Capacity> values() const { return values_; }
  const Capacity& value(Rank r) const { return values_.at(r - 1); }

  std::optional<Rank> rank_of(const Capacity& c) const;
  /// Smallest rank whose value is >= demand, or nullopt when demand exceeds
  /// every value.
  std::optional<Rank> ceil_rank(const Capacity& demand) const;

 private:
  std::vector<Capacity> values_;
};

struct Edge {
  Vertex from;
  Vertex to;
  Capacity capacity;
  Rank rank;
};

struct Arc {
  Vertex head;  // the other endpoint
  Rank rank;
};

/// Unparsed edge as supplied by a reader or generator (0-indexed).
struct EdgeSpec {
  Vertex from;
  Vertex to;
  Capacity capacity;
};

/// Directed unit-cost graph with positive capacities. Immutable.
///
/// Self-loops are dropped and parallel edges collapse to their maximum
/// capacity. Edges are kept sorted by (from, to); adjacency lists are sorted
/// by neighbour id.
class Graph {
 public:
  Graph() = default;
  /// Throws std::out_of_range for an endpoint >= n.
  Graph(std::size_t n, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const FlowRank& flow_rank() const { return flow_rank_; }

  std::span<const Arc> out_arcs(Vertex v) const {
    return {out_arcs_.data() + out_offset_[v], out_offset_[v + 1] - out_offset_[v]};
  }
  std::span<const Arc> in_arcs(Vertex v) const {
    return {in_arcs_.data() + in_offset_[v], in_offset_[v + 1] - in_offset_[v]};
  }

  /// Rank of edge (u,v), kNoFlow if absent.
  Rank rank_between(Vertex u, Vertex v) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  FlowRank flow_rank_;
  std::vector<Arc> out_arcs_, in_arcs_;
  std::vector<std::size_t> out_offset_{0}, in_offset_{0};
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the "p n m" / "e u v cap" text format. Throws ParseError.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
/// Writes the text format with edges sorted by (u,v).
void serialize_graph(const Graph& g, std::ostream& out);
std::string serialize_graph_text(const Graph& g);

/// m distinct ordered pairs chosen uniformly, capacities drawn uniformly from
/// cap_pool. Deterministic in seed. Throws std::invalid_argument when
/// m > n(n-1) or the pool is empty.
Graph generate_random(std::size_t n, std::size_t m, std::span<const Capacity> cap_pool,
                      std::uint64_t seed);

/// cap(i,j) ranks, kInfiniteFlow diagonal, kNoFlow elsewhere.
CapacityMatrix capacity_matrix(const Graph& g);

inline const FlowRank& distinct_capacities(const Graph& g) { return g.flow_rank(); }

}  // namespace spaf
