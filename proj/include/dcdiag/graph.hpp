// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcdiag {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : ids_(ids) { normalize(); }
  explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) { normalize(); }
  explicit VertexSet(std::span<const Vertex> ids) : ids_(ids.begin(), ids.end()) { normalize(); }

  /// Caller guarantees the input is strictly increasing.
  static VertexSet from_sorted(std::vector<Vertex> ids) {
    VertexSet s;
    s.ids_ = std::move(ids);
    return s;
  }

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  Vertex front() const { return ids_.front(); }
  Vertex back() const { return ids_.back(); }
  bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
  std::span<const Vertex> view() const noexcept { return ids_; }
  const std::vector<Vertex>& ids() const noexcept { return ids_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.ids_ <=> b.ids_; }

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<Vertex> ids_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

inline VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

/// Immutable undirected simple graph on vertices 0..n-1, stored as sorted
/// adjacency lists in CSR form. Build one with GraphBuilder.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex u) const {
    check(u);
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }

  std::size_t degree(Vertex u) const {
    check(u);
    return offsets_[u + 1] - offsets_[u];
  }

  bool has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    check(v);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::size_t min_degree() const {
    std::size_t d = vertex_count() == 0 ? 0 : SIZE_MAX;
    for (Vertex u = 0; u < vertex_count(); ++u) d = std::min(d, degree(u));
    return d;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (Vertex u = 0; u < vertex_count(); ++u) d = std::max(d, degree(u));
    return d;
  }

  /// The common degree if the graph is regular.
  std::optional<std::size_t> regular_degree() const {
    if (vertex_count() == 0) return std::nullopt;
    auto d = degree(0);
    for (Vertex u = 1; u < vertex_count(); ++u)
      if (degree(u) != d) return std::nullopt;
    return d;
  }

  bool is_complete() const {
    auto d = regular_degree();
    return d && *d + 1 == vertex_count();
  }

  /// Edges (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < vertex_count(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool has_labels() const noexcept { return !labels_.empty(); }

  std::string_view label(Vertex u) const {
    check(u);
    return labels_.empty() ? std::string_view{} : std::string_view{labels_[u]};
  }

  std::optional<Vertex> find_label(std::string_view label) const {
    for (Vertex u = 0; u < labels_.size(); ++u)
      if (labels_[u] == label) return u;
    return std::nullopt;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  void check(Vertex u) const {
    if (u >= vertex_count())
      throw std::out_of_range("vertex id " + std::to_string(u) + " out of range [0," +
                              std::to_string(vertex_count()) + ")");
  }

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<std::string> labels_;
};

/// Accumulates edges, then freezes them into a Graph. Duplicate edges are
/// merged; self-loops are rejected.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t vertex_count) : lists_(vertex_count) {}

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    if (u >= lists_.size() || v >= lists_.size())
      throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    lists_[u].push_back(v);
    lists_[v].push_back(u);
    return *this;
  }

  GraphBuilder& set_label(Vertex u, std::string label) {
    if (u >= lists_.size()) throw std::out_of_range("label vertex out of range");
    if (labels_.empty()) labels_.resize(lists_.size());
    labels_[u] = std::move(label);
    return *this;
  }

  Graph build() && {
    Graph g;
    g.offsets_.reserve(lists_.size() + 1);
    g.offsets_.push_back(0);
    for (auto& nb : lists_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      g.adjacency_.insert(g.adjacency_.end(), nb.begin(), nb.end());
      g.offsets_.push_back(g.adjacency_.size());
    }
    g.labels_ = std::move(labels_);
    return g;
  }

 private:
  std::vector<std::vector<Vertex>> lists_;
  std::vector<std::string> labels_;
};

inline Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph cycle_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) b.add_edge(u, static_cast<Vertex>((u + 1) % n));
  return std::move(b).build();
}

inline void check_ids(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.back() >= g.vertex_count())
    throw std::out_of_range("vertex id " + std::to_string(s.back()) + " out of range [0," +
                            std::to_string(g.vertex_count()) + ")");
}

inline VertexSet neighbors(const Graph& g, Vertex u) {
  auto nb = g.neighbors(u);
  return VertexSet::from_sorted({nb.begin(), nb.end()});
}

/// N(U): the union of neighborhoods of U, minus U itself.
inline VertexSet neighborhood_of_set(const Graph& g, const VertexSet& u) {
  check_ids(g, u);
  std::vector<Vertex> out;
  for (Vertex v : u)
    for (Vertex w : g.neighbors(v))
      if (!u.contains(w)) out.push_back(w);
  return VertexSet(std::move(out));
}

/// Number of edges of g with both endpoints in s.
inline std::size_t induced_edge_count(const Graph& g, const VertexSet& s) {
  std::size_t e = 0;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (v < w && s.contains(w)) ++e;
  return e;
}

/// Simple graphs only: size m plus C(m,2) internal edges means K_m.
inline bool induces_clique(const Graph& g, const VertexSet& s) {
  return induced_edge_count(g, s) == s.size() * (s.size() - (s.empty() ? 0 : 1)) / 2;
}

enum class SurvivalClass {
  connected,
  big_plus_singleton,
  big_plus_edge,
  big_plus_two_singletons,
  other,
};

inline constexpr std::string_view to_string(SurvivalClass c) {
  switch (c) {
    case SurvivalClass::connected: return "connected";
    case SurvivalClass::big_plus_singleton: return "big-plus-singleton";
    case SurvivalClass::big_plus_edge: return "big-plus-edge";
    case SurvivalClass::big_plus_two_singletons: return "big-plus-two-singletons";
    case SurvivalClass::other: return "other";
  }
  return "other";
}

inline constexpr std::size_t kSurvivalClassCount = 5;

/// Classifies by component sizes sorted descending. Only the non-largest
/// components matter, so two equal edges count as big-plus-edge.
inline SurvivalClass classify_sizes(std::span<const std::size_t> sizes_desc) {
  if (sizes_desc.size() == 1) return SurvivalClass::connected;
  if (sizes_desc.size() == 2) {
    if (sizes_desc[1] == 1) return SurvivalClass::big_plus_singleton;
    if (sizes_desc[1] == 2) return SurvivalClass::big_plus_edge;
  }
  if (sizes_desc.size() == 3 && sizes_desc[1] == 1 && sizes_desc[2] == 1)
    return SurvivalClass::big_plus_two_singletons;
  return SurvivalClass::other;
}

struct ComponentReport {
  /// Sorted by size descending, ties by smallest vertex id.
  std::vector<VertexSet> components;
  SurvivalClass classification = SurvivalClass::other;

  bool disconnected() const noexcept { return components.size() >= 2; }
};

/// Reusable scratch space for repeated "remove F, inspect G-F" queries in
/// exhaustive loops. Not thread-safe; use one per thread.
class SurvivalProbe {
 public:
  explicit SurvivalProbe(const Graph& g)
      : g_(&g),
        min_degree_(g.min_degree()),
        removed_(g.vertex_count(), 0),
        seen_(g.vertex_count(), 0),
        queue_(g.vertex_count()) {}

  SurvivalProbe(const SurvivalProbe&) = delete;
  SurvivalProbe& operator=(const SurvivalProbe&) = delete;

  const Graph& graph() const noexcept { return *g_; }

  void remove(std::span<const Vertex> f) {
    bump(removed_epoch_, removed_);
    for (Vertex v : f) removed_[v] = removed_epoch_;
  }

  bool is_removed(Vertex v) const { return removed_[v] == removed_epoch_; }

  /// Every surviving vertex adjacent to F keeps >= g surviving neighbors.
  /// Vertices far from F keep their full degree, so only N(F) is inspected,
  /// plus a global min-degree check.
  bool is_good(std::span<const Vertex> f, std::size_t g) {
    remove(f);
    if (g == 0) return true;
    if (min_degree_ < g) {
      for (Vertex v = 0; v < g_->vertex_count(); ++v)
        if (!is_removed(v) && surviving_degree(v) < g) return false;
      return true;
    }
    for (Vertex x : f)
      for (Vertex v : g_->neighbors(x))
        if (!is_removed(v) && surviving_degree(v) < g) return false;
    return true;
  }

  std::size_t surviving_degree(Vertex v) const {
    std::size_t d = 0;
    for (Vertex w : g_->neighbors(v)) d += !is_removed(w);
    return d;
  }

  /// Number of components of G-F (F from the last remove()). Stops once more
  /// than `limit` components are found.
  std::size_t component_count(std::size_t limit = SIZE_MAX) {
    bump(seen_epoch_, seen_);
    std::size_t count = 0;
    for (Vertex s = 0; s < g_->vertex_count(); ++s) {
      if (is_removed(s) || seen_[s] == seen_epoch_) continue;
      if (++count > limit) return count;
      flood(s);
    }
    return count;
  }

  /// Components of G-F in order of their smallest vertex, each in BFS order.
  std::vector<std::vector<Vertex>> components() {
    bump(seen_epoch_, seen_);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g_->vertex_count(); ++s) {
      if (is_removed(s) || seen_[s] == seen_epoch_) continue;
      std::size_t n = flood(s);
      out.emplace_back(queue_.begin(), queue_.begin() + static_cast<std::ptrdiff_t>(n));
    }
    return out;
  }

 private:
  static void bump(std::uint32_t& epoch, std::vector<std::uint32_t>& marks) {
    if (++epoch == 0) {
      std::fill(marks.begin(), marks.end(), 0);
      epoch = 1;
    }
  }

  std::size_t flood(Vertex s) {
    std::size_t head = 0, tail = 0;
    queue_[tail++] = s;
    seen_[s] = seen_epoch_;
    while (head < tail) {
      Vertex v = queue_[head++];
      for (Vertex w : g_->neighbors(v)) {
        if (is_removed(w) || seen_[w] == seen_epoch_) continue;
        seen_[w] = seen_epoch_;
        queue_[tail++] = w;
      }
    }
    return tail;
  }

  const Graph* g_;
  std::size_t min_degree_;
  std::vector<std::uint32_t> removed_;
  std::vector<std::uint32_t> seen_;
  std::vector<Vertex> queue_;
  std::uint32_t removed_epoch_ = 0;
  std::uint32_t seen_epoch_ = 0;
};

/// Partition of V minus `removed` into maximal connected sets.
inline ComponentReport connected_components(const Graph& g, const VertexSet& removed) {
  check_ids(g, removed);
  SurvivalProbe probe(g);
  probe.remove(removed.view());
  ComponentReport r;
  for (auto& c : probe.components()) r.components.emplace_back(std::move(c));
  std::sort(r.components.begin(), r.components.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  std::vector<std::size_t> sizes;
  for (const auto& c : r.components) sizes.push_back(c.size());
  r.classification = classify_sizes(sizes);
  return r;
}

inline bool is_connected_graph(const Graph& g) {
  return g.vertex_count() > 0 && connected_components(g, {}).components.size() == 1;
}

}  // namespace dcdiag
