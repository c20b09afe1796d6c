// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dcdiag/closed_form.hpp"
#include "dcdiag/diagnosability.hpp"
#include "dcdiag/graph_io.hpp"
#include "dcdiag/reliability.hpp"
#include "dcdiag/theorem1.hpp"

namespace dcdiag {

enum class Quantity { kappa_g, t_g };

inline constexpr std::string_view to_string(Quantity q) { return q == Quantity::kappa_g ? "kappa_g" : "t_g"; }

/// One (family, n, k, g, quantity) entry of a report grid.
struct ReportCell {
  TopologyParams params;
  std::size_t g = 0;
  Quantity quantity = Quantity::kappa_g;
  std::optional<std::size_t> closed_form;
  /// Violated range constraint when closed_form is absent ("n/a").
  std::string constraint;
  std::optional<std::size_t> measured;
  /// closed-form, exhaustive, construction, or sampled(N).
  std::string provenance;
  bool match = false;
  std::string note;

  bool applicable() const { return closed_form.has_value(); }
};

struct ReportOptions {
  /// Exhaustive searches run only when their subset count stays below this.
  std::uint64_t exhaustive_limit = 2'000'000;
  std::uint64_t samples = 20'000;
  std::uint64_t seed = kDefaultSeed;
  Budget budget{};
};

namespace detail {

inline std::optional<ConstructedCut> construct_cut_for(const Graph& g, const TopologyParams& p, std::size_t gn) {
  const auto r = p.resolved();
  const int ig = static_cast<int>(gn);
  try {
    switch (r.family) {
      case Family::dcell: return construct_dcell_cut(g, r.k, r.n, ig);
      case Family::nk_star: return construct_nkstar_cut(g, r.n, r.k, ig);
      case Family::arrangement: return construct_arrangement_cut(g, r.n, r.k, ig);
      default: break;
    }
  } catch (const std::invalid_argument&) {
  }
  return std::nullopt;
}

/// Exactly two components after removal, one of them A = K_{g+1}.
inline bool construction_verified(const Graph& g, const ConstructedCut& c, std::size_t gn) {
  auto report = is_g_good_neighbor_cut(g, {c.cut, gn});
  if (!report.is_g_good_neighbor_cut || report.components.components.size() != 2) return false;
  if (c.clique.size() != gn + 1 || !induces_clique(g, c.clique)) return false;
  for (const auto& comp : report.components.components)
    if (comp == c.clique) return true;
  return false;
}

inline void measure_kappa(ReportCell& cell, const Graph& g, const ReportOptions& opt) {
  const auto target = *cell.closed_form;
  const auto n = g.vertex_count();
  if (subsets_up_to(n, 0, target) <= opt.exhaustive_limit) {
    cell.provenance = "exhaustive";
    auto found = rg_connectivity_exact(g, cell.g, target, opt.budget);
    cell.measured = found;
    if (!found) cell.note = "no g-good-neighbor cut of size <= closed form";
    cell.match = found == target;
    return;
  }
  if (cell.g == 0) {
    cell.provenance = "exhaustive";
    cell.note = "max-flow";
    cell.measured = min_vertex_cut_size(g);
    cell.match = cell.measured == target;
    return;
  }
  cell.provenance = "construction";
  auto c = construct_cut_for(g, cell.params, cell.g);
  if (!c) {
    cell.note = "no construction for these parameters";
    return;
  }
  cell.measured = c->cut.size();
  if (!construction_verified(g, *c, cell.g)) cell.note = "constructed set is not a verified g-good-neighbor cut";
  cell.match = cell.note.empty() && cell.measured == target;
}

inline void measure_tg(ReportCell& cell, const Graph& g, const ReportOptions& opt) {
  const auto t = *cell.closed_form;
  auto witness = find_clique_witness(g, cell.g, opt.budget);
  std::optional<IndistinguishablePair> upper;
  if (witness) upper = classify_pair(g, witness->f1, witness->f2);
  const bool upper_ok = upper && upper->max_size() == t + 1 && upper->pmc_indistinguishable &&
                        upper->mm_indistinguishable;

  VerdictOptions v;
  v.samples = opt.samples;
  v.seed = opt.seed;
  v.budget = opt.budget;
  v.mode = subsets_up_to(g.vertex_count(), 0, t - 1) <= opt.exhaustive_limit ? SearchMode::exhaustive
                                                                               : SearchMode::sampled;
  auto verdict = tg_verdict(g, cell.g, t, v);
  cell.provenance = v.mode == SearchMode::exhaustive ? "exhaustive" : "sampled(" + std::to_string(v.samples) + ")";
  if (verdict.refuted()) {
    cell.measured = verdict.refuted_at->max_size() - 1;
    cell.note = "indistinguishable pair found (" + verdict.refuted_by + "); value is an upper bound";
    return;
  }
  if (!upper_ok) {
    cell.note = "no clique witness of size t+1";
    return;
  }
  cell.measured = t;
  cell.match = true;
}

}  // namespace detail

/// Fills every cell of the grid. Cells outside the closed form's range are
/// reported with the violated constraint and count as matching.
inline std::vector<ReportCell> report_tables(Family family, const std::vector<int>& ns, const std::vector<int>& ks,
                                             const std::vector<std::size_t>& gs, const ReportOptions& opt = {}) {
  const bool uses_k = family == Family::dcell || family == Family::nk_star || family == Family::arrangement;
  const std::vector<int> k_values = uses_k ? ks : std::vector<int>{0};
  std::vector<ReportCell> cells;
  for (int n : ns) {
    for (int k : k_values) {
      TopologyParams p{family, n, k};
      std::optional<Graph> graph;
      for (std::size_t g : gs) {
        for (auto q : {Quantity::kappa_g, Quantity::t_g}) {
          ReportCell cell;
          cell.params = p;
          cell.g = g;
          cell.quantity = q;
          auto violation = q == Quantity::kappa_g ? kappa_g_range_violation(p, g) : tg_range_violation(p, g);
          if (!violation) {
            try {
              p.validate();
            } catch (const std::invalid_argument& e) {
              violation = e.what();
            }
          }
          if (violation) {
            cell.constraint = *violation;
            cell.provenance = "closed-form";
            cell.match = true;
            cells.push_back(std::move(cell));
            continue;
          }
          cell.closed_form = q == Quantity::kappa_g ? kappa_g_closed_form(p, g) : closed_form_tg(p, g);
          if (!graph) graph = build_named(p, opt.budget);
          if (q == Quantity::kappa_g)
            detail::measure_kappa(cell, *graph, opt);
          else
            detail::measure_tg(cell, *graph, opt);
          cells.push_back(std::move(cell));
        }
      }
    }
  }
  return cells;
}

inline bool all_match(const std::vector<ReportCell>& cells) {
  for (const auto& c : cells)
    if (!c.match) return false;
  return true;
}

inline json to_json(const ReportCell& c) {
  json j;
  j["family"] = std::string(to_string(c.params.family));
  j["graph"] = c.params.describe();
  j["n"] = c.params.n;
  j["k"] = c.params.k;
  j["g"] = c.g;
  j["quantity"] = std::string(to_string(c.quantity));
  j["closed_form"] = c.closed_form ? json(*c.closed_form) : json("n/a");
  if (!c.constraint.empty()) j["constraint"] = c.constraint;
  j["measured"] = c.measured ? json(*c.measured) : json(nullptr);
  j["provenance"] = c.provenance;
  j["match"] = c.match;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline json report_to_json(const std::vector<ReportCell>& cells) {
  json rows = json::array();
  for (const auto& c : cells) rows.push_back(to_json(c));
  return json{{"all_match", all_match(cells)}, {"cells", std::move(rows)}};
}

inline std::string report_to_markdown(const std::vector<ReportCell>& cells) {
  std::ostringstream out;
  out << "| graph | g | quantity | closed form | measured | provenance | match |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const auto& c : cells) {
    out << "| " << c.params.describe() << " | " << c.g << " | " << to_string(c.quantity) << " | ";
    if (c.closed_form)
      out << *c.closed_form;
    else
      out << "n/a (" << c.constraint << ")";
    out << " | ";
    if (c.measured)
      out << *c.measured;
    else
      out << "-";
    out << " | " << c.provenance << " | " << (c.match ? "yes" : "NO") << " |\n";
  }
  return out.str();
}

inline json to_json(const CutReport& r) {
  json comps = json::array();
  for (const auto& c : r.components.components) comps.push_back(to_json(c));
  json j{{"cut", to_json(r.cut)},
         {"size", r.size},
         {"is_g_good_neighbor_cut", r.is_g_good_neighbor_cut},
         {"classification", std::string(to_string(r.components.classification))},
         {"components", std::move(comps)}};
  j["witness_component"] = r.witness_component ? to_json(*r.witness_component) : json(nullptr);
  return j;
}

inline json to_json(const SuperConnectivityVerdict& v) {
  json j{{"kappa", v.kappa},
         {"classification", std::string(to_string(v.classification))},
         {"minimum_cut_count", v.minimum_cut_count}};
  j["counterexample"] = v.counterexample ? to_json(*v.counterexample) : json(nullptr);
  return j;
}

inline json to_json(const SurvivalCensus& c) {
  json rows = json::array();
  for (const auto& r : c.rows) {
    json counts = json::object();
    for (std::size_t i = 0; i < kSurvivalClassCount; ++i)
      counts[std::string(to_string(static_cast<SurvivalClass>(i)))] = r.counts[i];
    json cliques = json::object();
    for (auto [t, n] : r.small_side_clique) cliques[std::to_string(t)] = n;
    rows.push_back({{"fault_size", r.fault_size},
                    {"subsets", r.subsets},
                    {"counts", std::move(counts)},
                    {"disconnected", r.disconnected},
                    {"small_side_clique", std::move(cliques)},
                    {"small_side_not_clique", r.small_side_not_clique},
                    {"edge_cases", r.edge_cases},
                    {"edge_cases_cut_is_neighborhood", r.edge_cases_cut_is_neighborhood}});
  }
  json other = json::array();
  for (const auto& f : c.other_examples) other.push_back(to_json(f));
  return json{{"rows", std::move(rows)}, {"other_examples", std::move(other)}};
}

inline json to_json(const IndistinguishablePair& p) {
  return json{{"f1", to_json(p.f1)},
              {"f2", to_json(p.f2)},
              {"pmc_indistinguishable", p.pmc_indistinguishable},
              {"mm_indistinguishable", p.mm_indistinguishable}};
}

inline json to_json(const DiagnosabilityVerdict& v) {
  json j{{"g", v.g}, {"t_claim", v.t_claim}, {"search_mode", std::string(to_string(v.search_mode))},
         {"samples", v.samples}, {"refuted", v.refuted()}};
  j["witness_pair"] = v.witness_pair ? to_json(*v.witness_pair) : json(nullptr);
  j["refuted_at"] = v.refuted_at ? to_json(*v.refuted_at) : json(nullptr);
  if (v.refuted()) j["refuted_by"] = v.refuted_by;
  return j;
}

inline json to_json(const Theorem1Report& r) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); };
  json j{{"g", r.g}, {"degree", r.degree}, {"vertex_count", r.vertex_count}};
  j["kappa_g"] = opt(r.kappa_g);
  j["kappa_1"] = opt(r.kappa_1);
  j["condition1"] = {{"holds", r.condition1.holds},
                     {"clique_order_ok", r.condition1.clique_order_ok},
                     {"cut", r.condition1.cut ? to_json(*r.condition1.cut) : json(nullptr)},
                     {"clique", r.condition1.clique ? to_json(*r.condition1.clique) : json(nullptr)}};
  j["condition2"] = {{"holds", r.condition2.holds}, {"bound", r.condition2.bound}};
  j["condition3"] = {{"holds", r.condition3.holds},
                     {"other_cases", r.condition3.other_cases},
                     {"example", r.condition3.example ? to_json(*r.condition3.example) : json(nullptr)}};
  j["all_hold"] = r.all_hold();
  return j;
}

inline json to_json(const DiagnosisResult& r) {
  json cands = json::array();
  for (const auto& c : r.candidates) cands.push_back(to_json(c));
  return json{{"outcome", std::string(to_string(r.outcome))}, {"candidates", std::move(cands)}, {"nodes", r.nodes}};
}

}  // namespace dcdiag
