// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "dcdiag/reliability.hpp"

namespace dcdiag {

/// Hypotheses under which t_g(G) = kappa^g(G) + g for an n-regular G:
///   (1) some minimum g-good-neighbor cut T leaves exactly two components,
///       one of them K_{g+1} (and g+1 <= m <= n-1 for the clique order m);
///   (2) |V| >= 2 kappa^g + 3 kappa^1 + 2g - n - 1;
///   (3) for |F| <= kappa^1, G-F is connected, or big+singleton, or
///       big+edge, or big+two singletons.
struct Theorem1Report {
  std::size_t g = 0;
  std::size_t degree = 0;
  std::size_t vertex_count = 0;
  std::optional<std::size_t> kappa_g;
  std::optional<std::size_t> kappa_1;

  struct {
    bool holds = false;
    bool clique_order_ok = false;
    std::optional<VertexSet> cut;
    std::optional<VertexSet> clique;
    std::uint64_t cuts_examined = 0;
  } condition1;

  struct {
    bool holds = false;
    long long bound = 0;
  } condition2;

  struct {
    bool holds = false;
    std::uint64_t other_cases = 0;
    std::optional<VertexSet> example;
  } condition3;

  bool all_hold() const { return condition1.holds && condition2.holds && condition3.holds; }
  /// PMC needs only (1) and (2).
  bool pmc_hypotheses_hold() const { return condition1.holds && condition2.holds; }
};

/// Rejects non-regular graphs. kappa_g / kappa_1 may be absent when G has no
/// such cut; the affected conditions then fail.
inline Theorem1Report verify_theorem1_conditions(const Graph& graph, std::size_t gn, std::optional<std::size_t> kappa_g,
                                                 std::optional<std::size_t> kappa_1, Budget budget = {}) {
  auto degree = graph.regular_degree();
  if (!degree) throw std::invalid_argument("verify_theorem1_conditions requires a regular graph");
  Theorem1Report r;
  r.g = gn;
  r.degree = *degree;
  r.vertex_count = graph.vertex_count();
  r.kappa_g = kappa_g;
  r.kappa_1 = kappa_1;

  if (kappa_g) {
    r.condition1.clique_order_ok = gn + 2 <= r.degree;
    budget.require(binomial(graph.vertex_count(), *kappa_g), "theorem1 condition (1)");
    SurvivalProbe probe(graph);
    for_each_combination(graph.vertex_count(), *kappa_g, [&](std::span<const Vertex> t) {
      ++r.condition1.cuts_examined;
      if (!probe.is_good(t, gn)) return true;
      auto comps = probe.components();
      if (comps.size() != 2) return true;
      for (auto& c : comps) {
        VertexSet comp(c);
        if (comp.size() == gn + 1 && induces_clique(graph, comp)) {
          r.condition1.cut = VertexSet::from_sorted({t.begin(), t.end()});
          r.condition1.clique = comp;
          return false;
        }
      }
      return true;
    });
    r.condition1.holds = r.condition1.cut.has_value() && r.condition1.clique_order_ok;
  }

  if (kappa_g && kappa_1) {
    r.condition2.bound = 2 * static_cast<long long>(*kappa_g) + 3 * static_cast<long long>(*kappa_1) +
                         2 * static_cast<long long>(gn) - static_cast<long long>(r.degree) - 1;
    r.condition2.holds = static_cast<long long>(graph.vertex_count()) >= r.condition2.bound;

    auto census = survival_structure_census(graph, *kappa_1, budget, 1);
    r.condition3.other_cases = census.total(SurvivalClass::other);
    r.condition3.holds = r.condition3.other_cases == 0;
    if (!census.other_examples.empty()) r.condition3.example = census.other_examples.front();
  }
  return r;
}

/// Computes kappa^g and kappa^1 exhaustively (sizes up to max_cut_size) and
/// then checks the three conditions.
inline Theorem1Report verify_theorem1_conditions(const Graph& graph, std::size_t gn, std::size_t max_cut_size,
                                                 Budget budget = {}) {
  auto kg = rg_connectivity_exact(graph, gn, max_cut_size, budget);
  auto k1 = gn == 1 ? kg : rg_connectivity_exact(graph, 1, max_cut_size, budget);
  return verify_theorem1_conditions(graph, gn, kg, k1, budget);
}

}  // namespace dcdiag
