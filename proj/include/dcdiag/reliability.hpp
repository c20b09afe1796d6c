// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcdiag/budget.hpp"
#include "dcdiag/connectivity.hpp"
#include "dcdiag/graph.hpp"
#include "dcdiag/topology.hpp"

namespace dcdiag {

/// Vertices hypothesised faulty, together with the good-neighbor level g.
struct FaultSet {
  VertexSet vertices;
  std::size_t g = 0;
};

/// Every vertex outside F keeps at least g neighbors outside F.
inline bool is_g_good_neighbor_set(const Graph& graph, const FaultSet& f) {
  check_ids(graph, f.vertices);
  SurvivalProbe probe(graph);
  return probe.is_good(f.vertices.view(), f.g);
}

struct CutReport {
  VertexSet cut;
  std::size_t size = 0;
  bool is_g_good_neighbor_cut = false;
  ComponentReport components;
  /// First component (in report order) inducing K_{g+1}.
  std::optional<VertexSet> witness_component;
};

inline std::optional<VertexSet> find_clique_component(const Graph& graph, const ComponentReport& c, std::size_t order) {
  for (const auto& comp : c.components)
    if (comp.size() == order && induces_clique(graph, comp)) return comp;
  return std::nullopt;
}

inline CutReport is_g_good_neighbor_cut(const Graph& graph, const FaultSet& f) {
  CutReport r;
  r.cut = f.vertices;
  r.size = f.vertices.size();
  r.components = connected_components(graph, f.vertices);
  r.is_g_good_neighbor_cut = r.components.disconnected() && is_g_good_neighbor_set(graph, f);
  r.witness_component = find_clique_component(graph, r.components, f.g + 1);
  return r;
}

/// Lexicographically first gn-good-neighbor cut of minimum size <= max_size,
/// by exhaustive size-ascending search. Each size level is checked against
/// the budget before it is enumerated.
inline std::optional<VertexSet> find_min_good_neighbor_cut(const Graph& graph, std::size_t gn, std::size_t max_size,
                                                           Budget budget = {}) {
  SurvivalProbe probe(graph);
  std::uint64_t examined = 0;
  std::optional<VertexSet> found;
  for (std::size_t s = 0; s <= max_size && s <= graph.vertex_count() && !found; ++s) {
    examined = saturating_add(examined, binomial(graph.vertex_count(), s));
    budget.require(examined, "rg_connectivity_exact");
    for_each_combination(graph.vertex_count(), s, [&](std::span<const Vertex> f) {
      if (!probe.is_good(f, gn)) return true;
      if (probe.component_count(1) < 2) return true;
      found = VertexSet::from_sorted({f.begin(), f.end()});
      return false;
    });
  }
  return found;
}

/// kappa^gn(G) if some gn-good-neighbor cut has size <= max_size.
inline std::optional<std::size_t> rg_connectivity_exact(const Graph& graph, std::size_t gn, std::size_t max_size,
                                                        Budget budget = {}) {
  auto cut = find_min_good_neighbor_cut(graph, gn, max_size, budget);
  if (!cut) return std::nullopt;
  return cut->size();
}

/// A clique A of order g+1 and its neighborhood N(A), the candidate minimum
/// g-good-neighbor cut.
struct ConstructedCut {
  VertexSet clique;
  VertexSet cut;
};

namespace detail {

inline ConstructedCut cut_around(const Graph& graph, std::vector<Vertex> clique) {
  ConstructedCut c;
  c.clique = VertexSet(std::move(clique));
  c.cut = neighborhood_of_set(graph, c.clique);
  return c;
}

inline void require_range(bool ok, const std::string& who, const std::string& rule) {
  if (!ok) throw std::invalid_argument(who + " requires " + rule);
}

}  // namespace detail

/// A = gn+1 vertices of the base clique 0..0x (x = 0..gn), cut = N(A) of size
/// (gn+1)(k-1)+n.
inline ConstructedCut construct_dcell_cut(const Graph& dcell, int k, int n, int gn) {
  detail::require_range(k >= 1 && n >= 2 && gn >= 1 && gn <= n - 1, "construct_dcell_cut",
                        "k >= 1, n >= 2, 1 <= g <= n-1");
  if (dcell.vertex_count() != dcell_order(k, n)) throw std::invalid_argument("graph is not D_{k,n}");
  std::vector<Vertex> a;
  for (int x = 0; x <= gn; ++x) {
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(k) + 1, 0);
    digits.back() = static_cast<std::uint64_t>(x);
    a.push_back(static_cast<Vertex>(dcell_vertex_id(DCellLabel(digits, n))));
  }
  return detail::cut_around(dcell, std::move(a));
}

inline ConstructedCut construct_dcell_cut(int k, int n, int gn) {
  detail::require_range(k >= 1 && n >= 2 && gn >= 1 && gn <= n - 1, "construct_dcell_cut",
                        "k >= 1, n >= 2, 1 <= g <= n-1");
  return construct_dcell_cut(build_dcell(k, n), k, n, gn);
}

/// A = the gn+1 smallest vertices of the unswap clique K^alpha_{n-k+1},
/// alpha = 2 3 ... k; |N(A)| = n + gn(k-2) - 1.
inline ConstructedCut construct_nkstar_cut(const Graph& star, int n, int k, int gn) {
  detail::require_range(k >= 2 && k <= n - 1 && gn >= 0 && gn <= n - k, "construct_nkstar_cut",
                        "2 <= k <= n-1, 0 <= g <= n-k");
  if (star.vertex_count() != arrangement_count(n, k)) throw std::invalid_argument("graph is not S_{n,k}");
  std::vector<int> p(static_cast<std::size_t>(k));
  for (int i = 1; i < k; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Vertex> clique;
  for (int s = 1; s <= n; ++s) {
    if (s >= 2 && s <= k) continue;
    p[0] = s;
    clique.push_back(static_cast<Vertex>(ArrangementLabel(p, n).rank()));
  }
  std::sort(clique.begin(), clique.end());
  clique.resize(static_cast<std::size_t>(gn) + 1);
  return detail::cut_around(star, std::move(clique));
}

inline ConstructedCut construct_nkstar_cut(int n, int k, int gn) {
  detail::require_range(k >= 2 && k <= n - 1 && gn >= 0 && gn <= n - k, "construct_nkstar_cut",
                        "2 <= k <= n-1, 0 <= g <= n-k");
  return construct_nkstar_cut(build_nk_star(n, k), n, k, gn);
}

/// A = the gn+1 smallest vertices of the cluster 1 2 ... (k-1) q (a
/// K_{n-k+1}); |N(A)| = [(gn+1)k - gn](n-k) - gn.
inline ConstructedCut construct_arrangement_cut(const Graph& arr, int n, int k, int gn) {
  detail::require_range(k >= 3 && k <= n - 1 && gn >= 1 && gn <= std::min(k - 2, n - k), "construct_arrangement_cut",
                        "3 <= k <= n-1, 1 <= g <= min(k-2, n-k)");
  if (arr.vertex_count() != arrangement_count(n, k)) throw std::invalid_argument("graph is not A_{n,k}");
  std::vector<int> p(static_cast<std::size_t>(k));
  for (int i = 0; i + 1 < k; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Vertex> clique;
  for (int s = k; s <= n; ++s) {
    p.back() = s;
    clique.push_back(static_cast<Vertex>(ArrangementLabel(p, n).rank()));
  }
  std::sort(clique.begin(), clique.end());
  clique.resize(static_cast<std::size_t>(gn) + 1);
  return detail::cut_around(arr, std::move(clique));
}

inline ConstructedCut construct_arrangement_cut(int n, int k, int gn) {
  detail::require_range(k >= 3 && k <= n - 1 && gn >= 1 && gn <= std::min(k - 2, n - k), "construct_arrangement_cut",
                        "3 <= k <= n-1, 1 <= g <= min(k-2, n-k)");
  return construct_arrangement_cut(build_arrangement(n, k), n, k, gn);
}

enum class SuperClass { tightly_super, loosely_super, not_super };

inline constexpr std::string_view to_string(SuperClass c) {
  switch (c) {
    case SuperClass::tightly_super: return "tightly-super";
    case SuperClass::loosely_super: return "loosely-super";
    case SuperClass::not_super: return "not-super";
  }
  return "?";
}

struct SuperConnectivityVerdict {
  std::size_t kappa = 0;
  SuperClass classification = SuperClass::not_super;
  std::size_t minimum_cut_count = 0;
  /// First minimum cut that is not N(v) for any v (not-super), or that leaves
  /// more than a singleton (loosely-super).
  std::optional<CutReport> counterexample;
};

/// Examines every minimum vertex cut. Tightly super: each leaves exactly two
/// components, one a single vertex. Loosely super: each equals N(v).
inline SuperConnectivityVerdict classify_super_connectivity(const Graph& graph, std::size_t kappa, Budget budget = {}) {
  SuperConnectivityVerdict v;
  v.kappa = kappa;
  auto cuts = enumerate_minimum_cuts(graph, kappa, budget);
  v.minimum_cut_count = cuts.size();
  std::optional<CutReport> first_not_tight, first_not_loose;
  for (const auto& cut : cuts) {
    auto report = is_g_good_neighbor_cut(graph, {cut, 0});
    const auto& comps = report.components.components;
    const bool tight = comps.size() == 2 && comps.back().size() == 1;
    bool loose = false;
    for (const auto& comp : comps)
      if (comp.size() == 1 && neighbors(graph, comp.front()) == cut) loose = true;
    if (!loose && !first_not_loose) first_not_loose = report;
    if (!tight && !first_not_tight) first_not_tight = report;
  }
  if (first_not_loose) {
    v.classification = SuperClass::not_super;
    v.counterexample = std::move(first_not_loose);
  } else if (first_not_tight) {
    v.classification = SuperClass::loosely_super;
    v.counterexample = std::move(first_not_tight);
  } else {
    v.classification = SuperClass::tightly_super;
  }
  return v;
}

/// Per fault-set size statistics of G-F.
struct CensusRow {
  std::size_t fault_size = 0;
  std::uint64_t subsets = 0;
  std::array<std::uint64_t, kSurvivalClassCount> counts{};
  std::uint64_t disconnected = 0;
  /// Two-component cases whose smaller side is K_t, keyed by t.
  std::map<std::size_t, std::uint64_t> small_side_clique;
  /// Two-component cases whose smaller side is not a clique.
  std::uint64_t small_side_not_clique = 0;
  /// big-plus-edge cases, and how many of them have F = N(edge).
  std::uint64_t edge_cases = 0;
  std::uint64_t edge_cases_cut_is_neighborhood = 0;

  std::uint64_t count(SurvivalClass c) const { return counts[static_cast<std::size_t>(c)]; }
};

struct SurvivalCensus {
  std::vector<CensusRow> rows;
  /// Up to `max_examples` fault sets per offending category, in search order.
  std::vector<VertexSet> other_examples;
  std::vector<VertexSet> edge_not_neighborhood_examples;

  std::uint64_t total(SurvivalClass c) const {
    std::uint64_t t = 0;
    for (const auto& r : rows) t += r.count(c);
    return t;
  }
};

/// Classifies G-F for every F with |F| <= max_fault.
inline SurvivalCensus survival_structure_census(const Graph& graph, std::size_t max_fault, Budget budget = {},
                                                std::size_t max_examples = 16) {
  budget.require(subsets_up_to(graph.vertex_count(), 0, max_fault), "survival_structure_census");
  SurvivalCensus census;
  SurvivalProbe probe(graph);
  for (std::size_t s = 0; s <= max_fault && s <= graph.vertex_count(); ++s) {
    CensusRow row;
    row.fault_size = s;
    for_each_combination(graph.vertex_count(), s, [&](std::span<const Vertex> f) {
      ++row.subsets;
      probe.remove(f);
      auto comps = probe.components();
      std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
      });
      std::vector<std::size_t> sizes;
      for (const auto& c : comps) sizes.push_back(c.size());
      auto cls = comps.empty() ? SurvivalClass::other : classify_sizes(sizes);
      ++row.counts[static_cast<std::size_t>(cls)];
      if (comps.size() >= 2) ++row.disconnected;
      if (cls == SurvivalClass::other && census.other_examples.size() < max_examples)
        census.other_examples.push_back(VertexSet::from_sorted({f.begin(), f.end()}));
      if (comps.size() == 2) {
        VertexSet small(comps[1]);
        if (induces_clique(graph, small))
          ++row.small_side_clique[small.size()];
        else
          ++row.small_side_not_clique;
        if (cls == SurvivalClass::big_plus_edge) {
          ++row.edge_cases;
          if (neighborhood_of_set(graph, small) == VertexSet(f))
            ++row.edge_cases_cut_is_neighborhood;
          else if (census.edge_not_neighborhood_examples.size() < max_examples)
            census.edge_not_neighborhood_examples.push_back(VertexSet::from_sorted({f.begin(), f.end()}));
        }
      }
      return true;
    });
    census.rows.push_back(std::move(row));
  }
  return census;
}

}  // namespace dcdiag
