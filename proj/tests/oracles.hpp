// SPDX-License-Identifier: Apache-2.0
// Brute-force reference implementations. They share nothing with the library
// beyond Graph itself: plain adjacency matrices, bitmask subsets and the
// textbook definitions.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "dcdiag/graph.hpp"

namespace oracle {

using Mask = std::uint64_t;

struct Dense {
  int n = 0;
  std::vector<std::vector<bool>> adj;

  explicit Dense(const dcdiag::Graph& g) : n(static_cast<int>(g.vertex_count())), adj(n, std::vector<bool>(n)) {
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  }
};

inline bool in(Mask m, int v) { return (m >> v) & 1U; }

inline std::vector<int> members(const std::vector<bool>& s) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (s[i]) out.push_back(i);
  return out;
}

/// Component count of G - removed by repeated BFS over the matrix.
inline int components(const Dense& d, const std::vector<bool>& removed) {
  std::vector<bool> seen(d.n, false);
  int count = 0;
  for (int s = 0; s < d.n; ++s) {
    if (removed[s] || seen[s]) continue;
    ++count;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w = 0; w < d.n; ++w)
        if (d.adj[v][w] && !removed[w] && !seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
  }
  return count;
}

inline std::vector<std::vector<int>> component_sets(const Dense& d, const std::vector<bool>& removed) {
  std::vector<int> label(d.n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < d.n; ++s) {
    if (removed[s] || label[s] >= 0) continue;
    out.emplace_back();
    std::vector<int> stack{s};
    label[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w = 0; w < d.n; ++w)
        if (d.adj[v][w] && !removed[w] && label[w] < 0) {
          label[w] = label[s];
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool good(const Dense& d, const std::vector<bool>& f, int g) {
  for (int v = 0; v < d.n; ++v) {
    if (f[v]) continue;
    int keep = 0;
    for (int w = 0; w < d.n; ++w) keep += d.adj[v][w] && !f[w];
    if (keep < g) return false;
  }
  return true;
}

/// Calls fn(subset) for every subset of {0..n-1} with size in [lo, hi].
template <class Fn>
void subsets(int n, int lo, int hi, Fn&& fn) {
  for (int size = lo; size <= std::min(hi, n); ++size) {
    std::vector<bool> sel(n, false);
    std::fill(sel.end() - size, sel.end(), true);
    do {
      fn(sel);
    } while (std::next_permutation(sel.begin(), sel.end()));
  }
}

/// Smallest g-good-neighbor cut by trying every subset.
inline std::optional<int> kappa_g(const Dense& d, int g, int max_size) {
  std::optional<int> best;
  subsets(d.n, 0, max_size, [&](const std::vector<bool>& f) {
    if (best) return;
    if (components(d, f) >= 2 && good(d, f, g)) best = static_cast<int>(members(f).size());
  });
  return best;
}

enum class Model { pmc, mm };

/// Distinguishability by definition: the pair is indistinguishable iff some
/// syndrome is compatible with both, i.e. every test whose tester lies
/// outside F1 u F2 is forced to the same value by F1 and by F2.
inline bool indistinguishable(const Dense& d, Mask f1, Mask f2, Model model) {
  const Mask both = f1 | f2;
  for (int w = 0; w < d.n; ++w) {
    if (in(both, w)) continue;
    for (int u = 0; u < d.n; ++u) {
      if (!d.adj[w][u]) continue;
      if (model == Model::pmc) {
        if (in(f1, u) != in(f2, u)) return false;
        continue;
      }
      for (int v = u + 1; v < d.n; ++v) {
        if (!d.adj[w][v]) continue;
        bool o1 = in(f1, u) || in(f1, v);
        bool o2 = in(f2, u) || in(f2, v);
        if (o1 != o2) return false;
      }
    }
  }
  return true;
}

inline std::vector<Mask> good_sets(const Dense& d, int g, int max_size) {
  std::vector<Mask> out;
  subsets(d.n, 0, max_size, [&](const std::vector<bool>& f) {
    if (!good(d, f, g)) return;
    Mask m = 0;
    for (int i = 0; i < d.n; ++i)
      if (f[i]) m |= Mask{1} << i;
    out.push_back(m);
  });
  return out;
}

/// Whether some indistinguishable pair of g-good sets with sizes <= t exists.
inline bool has_indistinguishable_pair(const Dense& d, int g, int t, Model model) {
  auto sets = good_sets(d, g, t);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (indistinguishable(d, sets[i], sets[j], model)) return true;
  return false;
}

/// t_g by definition: the largest t with no indistinguishable pair, searched
/// up to t_max (returns t_max when none is found).
inline int tg(const Dense& d, int g, int t_max, Model model) {
  auto sets = good_sets(d, g, t_max);
  int best = t_max;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (indistinguishable(d, sets[i], sets[j], model)) {
        int size = std::max(__builtin_popcountll(sets[i]), __builtin_popcountll(sets[j]));
        best = std::min(best, size - 1);
      }
  return best;
}

/// Erdos-Renyi graph with a fixed seed.
inline dcdiag::Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  dcdiag::GraphBuilder b(n);
  for (dcdiag::Vertex u = 0; u < n; ++u)
    for (dcdiag::Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

inline dcdiag::Graph path_graph(std::size_t n) {
  dcdiag::GraphBuilder b(n);
  for (dcdiag::Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

inline dcdiag::VertexSet to_set(Mask m) {
  std::vector<dcdiag::Vertex> out;
  for (dcdiag::Vertex v = 0; v < 64; ++v)
    if (in(m, static_cast<int>(v))) out.push_back(v);
  return dcdiag::VertexSet(std::move(out));
}

inline Mask to_mask(const dcdiag::VertexSet& s) {
  Mask m = 0;
  for (auto v : s) m |= Mask{1} << v;
  return m;
}

}  // namespace oracle

namespace dcdiag {

// Readable gtest failure messages.
inline void PrintTo(const VertexSet& s, std::ostream* os) {
  *os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) *os << (i ? "," : "") << s[i];
  *os << '}';
}

}  // namespace dcdiag
