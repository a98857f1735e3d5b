#include "spaf/sssp_af.hpp"

#include <algorithm>
#include <stdexcept>

namespace spaf {

namespace {

class SptState {
 public:
  SptState(const Graph& g, Vertex source, const std::function<void(const AttachEvent&)>& on_attach)
      : g_(g),
        n_(g.vertex_count()),
        source_(source),
        on_attach_(on_attach),
        bottleneck_(n_, kNoFlow),
        depth_(n_, 0),
        parent_(n_, kNoVertex),
        attached_(n_, false),
        retired_(n_, false),
        pops_(n_, 0),
        buckets_(n_) {
    bottleneck_[source] = kInfiniteFlow;
    attached_[source] = true;
    result_.source = source;
    result_.flow_rank = g.flow_rank();
    result_.staircases.resize(n_);
    result_.parent_at.resize(n_);
  }

  SsspAfResult run() {
    const auto d = static_cast<Rank>(g_.flow_rank().size());
    for (Rank f = 1; f <= d; ++f) {
      ++result_.stats.iterations;
      cut_below(f);
      drain(f);
      snapshot(f);
    }
    result_.stats.max_pops_per_vertex = n_ ? *std::max_element(pops_.begin(), pops_.end()) : 0;
    return std::move(result_);
  }

 private:
  // Every vertex whose bottleneck is below f loses its place (before the
  // first flow that is every vertex but the source). A cut vertex's whole
  // subtree goes with it: bottlenecks never increase down the tree.
  void cut_below(Rank f) {
    for (Vertex v = 0; v < n_; ++v) {
      if (v == source_ || retired_[v] || (attached_[v] && bottleneck_[v] >= f)) continue;
      attached_[v] = false;
      parent_[v] = kNoVertex;
      deepen(v);
    }
  }

  void drain(Rank f) {
    for (Length level = 1; level < n_; ++level) {
      auto& bucket = buckets_[level];
      // deepen() only pushes to deeper buckets, so this one cannot grow.
      for (Vertex v : bucket) {
        ++pops_[v];
        if (!try_attach(v, level, f)) deepen(v);
      }
      bucket.clear();
    }
  }

  bool try_attach(Vertex v, Length level, Rank f) {
    Vertex best_parent = kNoVertex;
    Rank best = kNoFlow;
    for (const Arc& arc : g_.in_arcs(v)) {
      ++result_.stats.edge_inspections;
      const Vertex u = arc.head;
      if (!attached_[u] || depth_[u] + 1 != level) continue;
      const Rank width = std::min(arc.rank, bottleneck_[u]);
      // in_arcs is sorted by id, so strict > keeps the smallest id on ties
      if (width >= f && width > best) {
        best = width;
        best_parent = u;
      }
    }
    if (best_parent == kNoVertex) return false;

    if (on_attach_) {
      on_attach_({f, v, best_parent, level, best, last_depth_or_zero(v), bottleneck_[v]});
    }
    attached_[v] = true;
    parent_[v] = best_parent;
    bottleneck_[v] = best;
    result_.parent_at[v].emplace_back(level, best_parent);
    return true;
  }

  Length last_depth_or_zero(Vertex v) const {
    const auto& hist = result_.parent_at[v];
    return hist.empty() ? 0 : hist.back().first;
  }

  // One level deeper; past n-1 the vertex is unreachable at this flow and at
  // every larger one.
  void deepen(Vertex v) {
    const Length next = depth_[v] + 1;
    if (next <= depth_[v]) result_.stats.depth_monotone = false;
    depth_[v] = next;
    if (next >= n_) {
      retired_[v] = true;
      return;
    }
    buckets_[next].push_back(v);
  }

  void snapshot(Rank f) {
    for (Vertex v = 0; v < n_; ++v) {
      if (v != source_ && attached_[v]) result_.staircases[v].record(depth_[v], f);
    }
  }

  const Graph& g_;
  const Vertex n_;
  const Vertex source_;
  const std::function<void(const AttachEvent&)>& on_attach_;
  std::vector<Rank> bottleneck_;
  std::vector<Length> depth_;
  std::vector<Vertex> parent_;
  std::vector<bool> attached_;
  std::vector<bool> retired_;
  std::vector<std::size_t> pops_;
  std::vector<std::vector<Vertex>> buckets_;
  SsspAfResult result_;
};

}  // namespace

SsspAfResult sssp_af(const Graph& g, Vertex source,
                     const std::function<void(const AttachEvent&)>& on_attach) {
  if (source >= g.vertex_count()) throw std::out_of_range("source vertex out of range");
  return SptState(g, source, on_attach).run();
}

std::optional<StairStep> query_sssp(const SsspAfResult& res, Vertex v, const Capacity& demand) {
  if (v >= res.staircases.size()) throw std::out_of_range("vertex out of range");
  const auto rank = res.flow_rank.ceil_rank(demand);
  if (!rank) return std::nullopt;
  return res.staircases[v].lookup(*rank);
}

std::vector<Vertex> path_sssp(const SsspAfResult& res, Vertex v, Length length) {
  if (v >= res.parent_at.size()) throw std::out_of_range("vertex out of range");
  std::vector<Vertex> path{v};
  Vertex w = v;
  for (Length k = length; k > 0; --k) {
    const auto& hist = res.parent_at[w];
    auto it = std::lower_bound(hist.begin(), hist.end(), k,
                               [](const auto& entry, Length depth) { return entry.first < depth; });
    if (it == hist.end() || it->first != k) {
      throw std::invalid_argument("no recorded attachment at depth " + std::to_string(k));
    }
    w = it->second;
    path.push_back(w);
  }
  if (w != res.source) throw std::invalid_argument("parent chain does not reach the source");
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace spaf
