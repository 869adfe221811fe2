#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "rydmwis/common.hpp"

namespace rydmwis {

/// Vertex-weighted undirected graph, vertices 0..n-1. Sized for exact
/// enumeration work (adjacency kept as 64-bit masks), not for big instances.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::vector<double> weights)
      : weight_(std::move(weights)), adj_(weight_.size(), 0) {
    if (weight_.size() > kMaxVertices)
      throw size_error("WeightedGraph: more than 64 vertices");
  }

  static constexpr std::size_t kMaxVertices = 64;

  int size() const { return static_cast<int>(weight_.size()); }
  double weight(int v) const { return weight_[v]; }
  const std::vector<double>& weights() const { return weight_; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }

  void add_edge(int u, int v) {
    if (u == v) throw input_error("WeightedGraph: self loop");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
      for (int v = u + 1; v < size(); ++v)
        if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  bool is_independent(std::uint64_t set) const {
    for (std::uint64_t rest = set; rest;) {
      const int v = lowest(rest);
      rest &= rest - 1;
      if (adj_[v] & set) return false;
    }
    return true;
  }

  /// Canonical set weight: always summed in ascending vertex order so that
  /// different code paths produce bit-identical doubles.
  double set_weight(std::uint64_t set) const {
    double w = 0.0;
    for (std::uint64_t rest = set; rest;) {
      const int v = lowest(rest);
      rest &= rest - 1;
      w += weight_[v];
    }
    return w;
  }

  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  static int lowest(std::uint64_t mask) { return __builtin_ctzll(mask); }

 private:
  std::vector<double> weight_;
  std::vector<std::uint64_t> adj_;
};

/// Calls `emit` exactly once for every independent set (the empty set
/// included). Sets are produced as vertex bitmasks in lexicographic order of
/// their ascending member lists.
inline void enumerate_independent_sets(const WeightedGraph& g,
                                       const std::function<void(std::uint64_t)>& emit,
                                       int vertex_cap = 40) {
  if (g.size() > vertex_cap)
    throw size_error("enumerate_independent_sets: graph exceeds vertex cap " +
                     std::to_string(vertex_cap));
  const std::uint64_t all =
      g.size() == 64 ? ~std::uint64_t{0} : (WeightedGraph::bit(g.size()) - 1);

  // Iterative DFS; each frame extends the current set with vertices above the
  // last chosen one.
  struct Frame {
    std::uint64_t chosen, cand;
  };
  std::vector<Frame> stack;
  stack.push_back({0, all});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    emit(f.chosen);
    std::uint64_t cand = f.cand;
    while (cand) {
      const int v = WeightedGraph::lowest(cand);
      cand &= cand - 1;  // v handled; remaining candidates are all > v
      stack.push_back({f.chosen | WeightedGraph::bit(v), cand & ~g.neighbors(v)});
    }
  }
}

inline std::uint64_t count_independent_sets(const WeightedGraph& g, int vertex_cap = 40) {
  std::uint64_t n = 0;
  enumerate_independent_sets(g, [&](std::uint64_t) { ++n; }, vertex_cap);
  return n;
}

struct MwisResult {
  double max_weight = 0.0;
  std::vector<std::uint64_t> maximizers;  // every set attaining max_weight
};

/// Exact MWIS by branch and bound. Branches on the lowest-index candidate so
/// partial weights accumulate in canonical order; prunes with the residual
/// weight bound after seeding the incumbent with a greedy solution. Returns
/// the complete set of maximizers.
inline MwisResult mwis_solve(const WeightedGraph& g) {
  for (int v = 0; v < g.size(); ++v)
    if (!(g.weight(v) > 0.0))
      throw parameter_error("mwis_solve: non-positive vertex weight");

  MwisResult best;
  best.max_weight = 0.0;
  best.maximizers = {0};
  if (g.size() == 0) return best;

  // Greedy incumbent (weight-descending) to tighten pruning early on.
  {
    std::vector<int> order(g.size());
    for (int v = 0; v < g.size(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.weight(a) > g.weight(b); });
    std::uint64_t greedy = 0;
    for (int v : order)
      if (!(g.neighbors(v) & greedy)) greedy |= WeightedGraph::bit(v);
    best.max_weight = g.set_weight(greedy);
    best.maximizers = {greedy};
  }

  const std::uint64_t all =
      g.size() == 64 ? ~std::uint64_t{0} : (WeightedGraph::bit(g.size()) - 1);

  // Suffix sums over candidate masks would be cheaper, but graphs here are
  // tiny; recompute the residual bound directly.
  std::function<void(std::uint64_t, std::uint64_t, double)> rec =
      [&](std::uint64_t chosen, std::uint64_t cand, double w) {
        double bound = w;
        for (std::uint64_t rest = cand; rest;) {
          const int v = WeightedGraph::lowest(rest);
          rest &= rest - 1;
          bound += g.weight(v);
        }
        if (bound < best.max_weight) return;
        if (!cand) {
          if (w > best.max_weight) {
            best.max_weight = w;
            best.maximizers.clear();
            best.maximizers.push_back(chosen);
          } else if (w == best.max_weight) {
            if (std::find(best.maximizers.begin(), best.maximizers.end(), chosen) ==
                best.maximizers.end())
              best.maximizers.push_back(chosen);
          }
          return;
        }
        const int v = WeightedGraph::lowest(cand);
        const std::uint64_t rest = cand & (cand - 1);
        rec(chosen | WeightedGraph::bit(v), rest & ~g.neighbors(v), w + g.weight(v));
        rec(chosen, rest, w);
      };
  rec(0, all, 0.0);

  std::sort(best.maximizers.begin(), best.maximizers.end());
  return best;
}

}  // namespace rydmwis
