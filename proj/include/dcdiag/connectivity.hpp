// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dcdiag/budget.hpp"
#include "dcdiag/graph.hpp"

namespace dcdiag {

/// A complete graph has no vertex cut.
class CompleteGraphError : public std::domain_error {
 public:
  CompleteGraphError() : std::domain_error("complete graph: no vertex cut exists") {}
};

namespace detail {

/// Unit-capacity residual network for local vertex connectivity. Vertex v is
/// split into in-node 2v and out-node 2v+1 joined by a capacity-1 arc.
class SplitFlowNetwork {
 public:
  explicit SplitFlowNetwork(const Graph& g) : node_count_(2 * g.vertex_count()), head_(node_count_, -1) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      add_arc(2 * v, 2 * v + 1, 1);
      for (Vertex w : g.neighbors(v)) add_arc(2 * v + 1, 2 * w, 1);
    }
    base_cap_ = cap_;
  }

  /// Max number of internally vertex-disjoint s-t paths (s, t non-adjacent).
  std::size_t local_connectivity(Vertex s, Vertex t) {
    cap_ = base_cap_;
    const int source = static_cast<int>(2 * s + 1);
    const int sink = static_cast<int>(2 * t);
    std::size_t flow = 0;
    std::vector<int> parent_arc(node_count_);
    std::vector<int> queue(node_count_);
    while (true) {
      std::fill(parent_arc.begin(), parent_arc.end(), -2);
      parent_arc[source] = -1;
      std::size_t qh = 0, qt = 0;
      queue[qt++] = source;
      while (qh < qt && parent_arc[sink] == -2) {
        int x = queue[qh++];
        for (int a = head_[x]; a != -1; a = next_[a]) {
          int y = to_[a];
          if (cap_[a] > 0 && parent_arc[y] == -2) {
            parent_arc[y] = a;
            queue[qt++] = y;
          }
        }
      }
      if (parent_arc[sink] == -2) return flow;
      for (int y = sink; y != source;) {
        int a = parent_arc[y];
        --cap_[a];
        ++cap_[a ^ 1];
        y = to_[a ^ 1];
      }
      ++flow;
    }
  }

 private:
  void add_arc(int from, int to, int cap) {
    to_.push_back(to), cap_.push_back(cap), next_.push_back(head_[from]), head_[from] = static_cast<int>(to_.size() - 1);
    to_.push_back(from), cap_.push_back(0), next_.push_back(head_[to]), head_[to] = static_cast<int>(to_.size() - 1);
  }

  std::size_t node_count_;
  std::vector<int> head_;
  std::vector<int> to_, next_;
  std::vector<int> cap_, base_cap_;
};

}  // namespace detail

/// Vertex connectivity kappa(G) via vertex-split max-flow (Even's scheme:
/// some vertex among the first kappa+1 survives any minimum cut).
/// Returns 0 for a disconnected graph; throws CompleteGraphError for K_n.
inline std::size_t min_vertex_cut_size(const Graph& g) {
  const auto n = g.vertex_count();
  if (n == 0 || !is_connected_graph(g)) return 0;
  if (g.edge_count() * 2 == n * (n - 1)) throw CompleteGraphError();
  detail::SplitFlowNetwork net(g);
  std::size_t best = g.min_degree();
  for (Vertex i = 0; i < n && i <= best; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (j != i && !g.has_edge(i, j)) best = std::min(best, net.local_connectivity(i, j));
  return best;
}

/// Every vertex set of size kappa whose removal disconnects G, in
/// lexicographic order. Refuses (BudgetExceeded) when C(|V|, kappa) is over
/// budget.
inline std::vector<VertexSet> enumerate_minimum_cuts(const Graph& g, std::size_t kappa, Budget budget = {}) {
  budget.require(binomial(g.vertex_count(), kappa), "enumerate_minimum_cuts");
  std::vector<VertexSet> cuts;
  SurvivalProbe probe(g);
  for_each_combination(g.vertex_count(), kappa, [&](std::span<const Vertex> s) {
    probe.remove(s);
    if (probe.component_count(1) >= 2) cuts.push_back(VertexSet::from_sorted({s.begin(), s.end()}));
    return true;
  });
  return cuts;
}

}  // namespace dcdiag
