#include "spaf/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "spaf/random.hpp"

namespace spaf {

FlowRank::FlowRank(std::vector<Capacity> values) {
  std::stable_sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  values_ = std::move(values);
}

std::optional<Rank> FlowRank::rank_of(const Capacity& c) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), c);
  if (it == values_.end() || !(*it == c)) return std::nullopt;
  return static_cast<Rank>(it - values_.begin() + 1);
}

std::optional<Rank> FlowRank::ceil_rank(const Capacity& demand) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), demand);
  if (it == values_.end()) return std::nullopt;
  return static_cast<Rank>(it - values_.begin() + 1);
}

Graph::Graph(std::size_t n, std::vector<EdgeSpec> specs) : n_(n) {
  std::map<std::pair<Vertex, Vertex>, Capacity> kept;
  for (auto& e : specs) {
    if (e.from >= n || e.to >= n) throw std::out_of_range("vertex out of range");
    if (e.from == e.to) continue;
    auto [it, inserted] = kept.try_emplace({e.from, e.to}, e.capacity);
    if (!inserted && it->second < e.capacity) it->second = e.capacity;
  }

  std::vector<Capacity> caps;
  caps.reserve(kept.size());
  for (const auto& [key, cap] : kept) caps.push_back(cap);
  flow_rank_ = FlowRank(std::move(caps));

  edges_.reserve(kept.size());
  for (const auto& [key, cap] : kept) {
    edges_.push_back({key.first, key.second, cap, *flow_rank_.rank_of(cap)});
  }

  std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
  for (const auto& e : edges_) {
    ++out_deg[e.from];
    ++in_deg[e.to];
  }
  out_offset_.assign(n + 1, 0);
  in_offset_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    out_offset_[v + 1] = out_offset_[v] + out_deg[v];
    in_offset_[v + 1] = in_offset_[v] + in_deg[v];
  }
  out_arcs_.resize(edges_.size());
  in_arcs_.resize(edges_.size());
  std::vector<std::size_t> out_fill(out_offset_.begin(), out_offset_.end() - 1);
  std::vector<std::size_t> in_fill(in_offset_.begin(), in_offset_.end() - 1);
  // edges_ is sorted by (from, to), so both lists come out sorted by neighbour
  for (const auto& e : edges_) {
    out_arcs_[out_fill[e.from]++] = {e.to, e.rank};
    in_arcs_[in_fill[e.to]++] = {e.from, e.rank};
  }
}

Rank Graph::rank_between(Vertex u, Vertex v) const {
  auto arcs = out_arcs(u);
  auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                             [](const Arc& a, Vertex x) { return a.head < x; });
  return (it != arcs.end() && it->head == v) ? it->rank : kNoFlow;
}

namespace {

std::size_t parse_count(const std::string& token, std::size_t line, const char* what) {
  if (token.empty() || !std::all_of(token.begin(), token.end(),
                                    [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, std::string("malformed ") + what + " '" + token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw ParseError(line, std::string(what) + " too large");
  }
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<EdgeSpec> specs;

  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::istringstream tokens(text);
    std::string kind;
    if (!(tokens >> kind) || kind[0] == '#') continue;

    std::vector<std::string> fields;
    for (std::string f; tokens >> f;) fields.push_back(f);

    if (kind == "p") {
      if (have_header) throw ParseError(line_no, "duplicate problem line");
      if (fields.size() != 2) throw ParseError(line_no, "expected 'p <n> <m>'");
      n = parse_count(fields[0], line_no, "vertex count");
      m = parse_count(fields[1], line_no, "edge count");
      have_header = true;
    } else if (kind == "e") {
      if (!have_header) throw ParseError(line_no, "edge before problem line");
      if (fields.size() != 3) throw ParseError(line_no, "expected 'e <u> <v> <cap>'");
      if (specs.size() == m) throw ParseError(line_no, "more edges than declared");
      const std::size_t u = parse_count(fields[0], line_no, "vertex");
      const std::size_t v = parse_count(fields[1], line_no, "vertex");
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "vertex out of range");
      try {
        specs.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1),
                         Capacity::parse(fields[2])});
      } catch (const std::domain_error&) {
        throw ParseError(line_no, "non-positive capacity '" + fields[2] + "'");
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else {
      throw ParseError(line_no, "unknown line type '" + kind + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing problem line");
  if (specs.size() != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(specs.size()));
  }
  return Graph(n, std::move(specs));
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

void serialize_graph(const Graph& g, std::ostream& out) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    out << "e " << e.from + 1 << ' ' << e.to + 1 << ' ' << e.capacity.literal() << '\n';
  }
}

std::string serialize_graph_text(const Graph& g) {
  std::ostringstream out;
  serialize_graph(g, out);
  return out.str();
}

Graph generate_random(std::size_t n, std::size_t m, std::span<const Capacity> cap_pool,
                      std::uint64_t seed) {
  const std::uint64_t pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1);
  if (m > pairs) throw std::invalid_argument("edge count exceeds n(n-1)");
  if (m > 0 && cap_pool.empty()) throw std::invalid_argument("empty capacity pool");

  std::mt19937_64 rng(seed);
  // Floyd's sampling: a uniform m-subset of the n(n-1) ordered pairs.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  for (std::uint64_t j = pairs - m; j < pairs; ++j) {
    const std::uint64_t t = uniform_below(rng, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> picked(chosen.begin(), chosen.end());
  std::sort(picked.begin(), picked.end());

  std::vector<EdgeSpec> specs;
  specs.reserve(m);
  for (std::uint64_t idx : picked) {
    const auto u = static_cast<Vertex>(idx / (n - 1));
    const auto r = static_cast<Vertex>(idx % (n - 1));
    const Vertex v = r < u ? r : r + 1;
    specs.push_back({u, v, cap_pool[uniform_below(rng, cap_pool.size())]});
  }
  return Graph(n, std::move(specs));
}

CapacityMatrix capacity_matrix(const Graph& g) {
  CapacityMatrix c = capacity_identity(g.vertex_count());
  for (const auto& e : g.edges()) c(e.from, e.to) = e.rank;
  return c;
}

}  // namespace spaf
