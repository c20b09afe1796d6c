// SPDX-License-Identifier: Apache-2.0
// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Time limits and sample counts are fixed below.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dcdiag/dcdiag.hpp"

using namespace dcdiag;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr std::uint64_t kVerdictSamples = 100'000;
constexpr int kDiagnosisTrials = 100;
constexpr std::uint64_t kConstructionMaxVertices = 500;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  /// Records a failed check; the first few explain the FAIL line.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass || detail.tellp() < 400) detail << (detail.tellp() > 0 ? "; " : "") << what;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

std::string str(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void criterion1(Outcome& o) {
  const std::vector<std::tuple<int, int, std::uint64_t>> orders{{1, 2, 6}, {2, 2, 42}, {1, 3, 12}, {2, 3, 156}};
  for (auto [k, n, want] : orders) {
    const auto got = dcell_order(k, n);
    o.require(got == want, "t(" + std::to_string(k) + "," + std::to_string(n) + ")=" + std::to_string(got));
    auto g = build_dcell(k, n);
    o.require(g.vertex_count() == want, "built order");
    o.require(g.regular_degree() == static_cast<std::size_t>(n + k - 1), "D" + std::to_string(k) +
                                                                              std::to_string(n) + " not (n+k-1)-regular");
    const double bound = std::pow(n + 0.5, std::pow(2.0, k)) - 0.5;
    o.require(static_cast<double>(got) >= bound, "order bound");
  }
  o.detail << "4 orders exact, regular, bound holds";
}

void criterion2(Outcome& o) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}}) {
    auto report = validate_dcell_structure(build_dcell(k, n), k, n);
    std::string why;
    for (const auto& v : report.violations) why += v + " ";
    o.require(report.ok, "D" + std::to_string(k) + std::to_string(n) + ": " + why);
  }
  if (o.pass) o.detail << "5 instances valid";
}

void criterion3(Outcome& o) {
  struct Case {
    std::string name;
    Graph g;
    std::size_t want;
  };
  std::vector<Case> cases;
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 2}})
    cases.push_back({"D" + std::to_string(k) + std::to_string(n), build_dcell(k, n), static_cast<std::size_t>(n + k - 1)});
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}})
    cases.push_back({"S" + std::to_string(n) + std::to_string(k), build_nk_star(n, k), static_cast<std::size_t>(n - 1)});
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 3}})
    cases.push_back({"A" + std::to_string(n) + std::to_string(k), build_arrangement(n, k),
                     static_cast<std::size_t>(k * (n - k))});
  for (const auto& c : cases) {
    const auto got = min_vertex_cut_size(c.g);
    o.require(got == c.want, c.name + " kappa=" + std::to_string(got) + " want " + std::to_string(c.want));
    o.detail << (o.detail.tellp() > 0 ? " " : "") << c.name << "=" << got;
  }
}

void criterion4(Outcome& o) {
  struct Case {
    std::string name;
    Graph g;
    std::size_t gn, want;
  };
  std::vector<Case> cases{
      {"D12 g=1", build_dcell(1, 2), 1, 2},
      {"D13 g=1", build_dcell(1, 3), 1, 3},
      {"D13 g=2", build_dcell(1, 3), 2, 3},
      {"D22 g=1", build_dcell(2, 2), 1, 4},
      {"S53 g=1", build_nk_star(5, 3), 1, 5},
  };
  for (const auto& c : cases) {
    auto got = rg_connectivity_exact(c.g, c.gn, c.want);
    o.require(got == c.want, c.name + " got " + (got ? std::to_string(*got) : "none"));
    o.detail << (o.detail.tellp() > 0 ? " " : "") << c.name << ":" << (got ? std::to_string(*got) : "none");
  }
}

void criterion5(Outcome& o) {
  int checked = 0;
  auto verify = [&](const std::string& name, const Graph& g, const ConstructedCut& c, std::size_t gn,
                    std::size_t want) {
    ++checked;
    o.require(c.cut.size() == want, name + " size " + std::to_string(c.cut.size()) + " want " + std::to_string(want));
    o.require(detail::construction_verified(g, c, gn), name + " not a verified two-component K_{g+1} cut");
  };
  for (int k = 1; k <= 3; ++k) {
    for (int n = 2;; ++n) {
      std::uint64_t order = 0;
      try {
        order = dcell_order(k, n);
      } catch (const std::overflow_error&) {
        break;
      }
      if (order > kConstructionMaxVertices) break;
      auto g = build_dcell(k, n);
      for (int gn = 1; gn <= n - 1; ++gn)
        verify("D" + std::to_string(k) + "," + std::to_string(n) + " g=" + std::to_string(gn), g,
               construct_dcell_cut(g, k, n, gn), static_cast<std::size_t>(gn),
               kappa_g_closed_form({Family::dcell, n, k}, static_cast<std::size_t>(gn)));
    }
  }
  for (int n = 3; n <= 8; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      if (arrangement_count(n, k) > kConstructionMaxVertices) continue;
      auto star = build_nk_star(n, k);
      for (int gn = 0; gn <= n - k; ++gn)
        verify("S" + std::to_string(n) + "," + std::to_string(k) + " g=" + std::to_string(gn), star,
               construct_nkstar_cut(star, n, k, gn), static_cast<std::size_t>(gn),
               kappa_g_closed_form({Family::nk_star, n, k}, static_cast<std::size_t>(gn)));
      if (k < 3) continue;
      auto arr = build_arrangement(n, k);
      for (int gn = 1; gn <= std::min(k - 2, n - k); ++gn)
        verify("A" + std::to_string(n) + "," + std::to_string(k) + " g=" + std::to_string(gn), arr,
               construct_arrangement_cut(arr, n, k, gn), static_cast<std::size_t>(gn),
               kappa_g_closed_form({Family::arrangement, n, k}, static_cast<std::size_t>(gn)));
    }
  }
  o.detail << checked << " constructions checked";
}

void criterion6(Outcome& o) {
  auto d22 = classify_super_connectivity(build_dcell(2, 2), 3);
  o.require(d22.minimum_cut_count == 42, "D22 minimum cuts " + std::to_string(d22.minimum_cut_count));
  o.require(d22.classification == SuperClass::tightly_super,
            "D22 classified " + std::string(to_string(d22.classification)));
  o.detail << "D22 " << to_string(d22.classification) << " (C(42,3)=" << binomial(42, 3) << " subsets)";
  for (int n : {3, 4}) {
    auto g = build_dcell(1, n);
    auto v = classify_super_connectivity(g, min_vertex_cut_size(g));
    bool ok = v.counterexample.has_value();
    std::size_t t = 0;
    if (ok) {
      const auto& small = v.counterexample->components.components.back();
      t = small.size();
      ok = t >= 2 && induces_clique(g, small);
    }
    o.require(ok, "D1" + std::to_string(n) + " has no K_t (t>=2) small side");
    o.detail << "; D1" << n << " " << to_string(v.classification) << " with K_" << t;
  }
}

void criterion7(Outcome& o) {
  auto d22 = survival_structure_census(build_dcell(2, 2), 4);
  std::uint64_t subsets = 0;
  for (const auto& r : d22.rows) subsets += r.subsets;
  o.require(subsets == subsets_up_to(42, 0, 4), "D22 subset count");
  o.require(d22.total(SurvivalClass::other) == 0,
            "D22 other=" + std::to_string(d22.total(SurvivalClass::other)));
  auto s43 = survival_structure_census(build_nk_star(4, 3), 4);
  o.require(s43.total(SurvivalClass::other) == 0, "S43 other=" + std::to_string(s43.total(SurvivalClass::other)));
  const auto& row4 = s43.rows.at(4);
  o.require(row4.edge_cases > 0, "S43 has no edge component at |F|=4");
  o.require(row4.edge_cases == row4.edge_cases_cut_is_neighborhood, "S43 edge component with F != N(edge)");
  for (std::size_t s = 0; s < 4; ++s)
    o.require(s43.rows.at(s).edge_cases == 0, "S43 edge component below |F|=4");
  o.detail << "D22 " << subsets << " subsets, other=0; S43 edge cases at |F|=4: " << row4.edge_cases
           << ", all F=N(edge)";
}

void criterion8(Outcome& o) {
  struct Case {
    std::string name;
    Graph g;
    ConstructedCut c;
    std::size_t kappa;
  };
  auto d22 = build_dcell(2, 2);
  auto s53 = build_nk_star(5, 3);
  auto a53 = build_arrangement(5, 3);
  std::vector<Case> cases{
      {"D22", d22, construct_dcell_cut(d22, 2, 2, 1), kappa_g_closed_form({Family::dcell, 2, 2}, 1)},
      {"S53", s53, construct_nkstar_cut(s53, 5, 3, 1), kappa_g_closed_form({Family::nk_star, 5, 3}, 1)},
      {"A53", a53, construct_arrangement_cut(a53, 5, 3, 1), kappa_g_closed_form({Family::arrangement, 5, 3}, 1)},
  };
  for (const auto& c : cases) {
    auto w = tg_witness(c.g, 1, c.c.clique);
    o.require(!pmc_distinguishable(c.g, w.f1, w.f2), c.name + " PMC distinguishable");
    o.require(!mm_distinguishable(c.g, w.f1, w.f2), c.name + " MM distinguishable");
    o.require(is_g_good_neighbor_set(c.g, {w.f1, 1}) && is_g_good_neighbor_set(c.g, {w.f2, 1}),
              c.name + " witness not 1-good");
    o.require(w.f1.size() == c.kappa && w.f2.size() == c.kappa + 2, c.name + " sizes");
    o.detail << (o.detail.tellp() > 0 ? "; " : "") << c.name << " |F1|=" << w.f1.size() << " |F2|=" << w.f2.size();
  }
}

void criterion9(Outcome& o) {
  struct Case {
    std::string name;
    Graph g;
    std::size_t t;
  };
  std::vector<Case> cases{
      {"D22", build_dcell(2, 2), closed_form_tg({Family::dcell, 2, 2}, 1)},
      {"S43", build_nk_star(4, 3), closed_form_tg({Family::star, 4, 0}, 1)},
      // 2[(g+1)(n-2)-g] at n=4, g=1
      {"A42", build_arrangement(4, 2), 6},
  };
  VerdictOptions opt;
  opt.mode = SearchMode::sampled;
  opt.samples = kVerdictSamples;
  opt.seed = kSeed;
  for (const auto& c : cases) {
    auto v = tg_verdict(c.g, 1, c.t, opt);
    std::string line = c.name + " t=" + std::to_string(c.t) + ": ";
    if (v.refuted()) {
      line += "refuted by " + v.refuted_by + " " + str(v.refuted_at->f1) + " vs " + str(v.refuted_at->f2);
    } else {
      line += "no refutation in " + std::to_string(v.samples) + " samples";
    }
    o.require(!v.refuted(), line);
    auto above = tg_verdict(c.g, 1, c.t + 1, opt);
    const bool witness_refutes = above.refuted() && above.refuted_by == "witness";
    o.require(witness_refutes, c.name + " t=" + std::to_string(c.t + 1) + " not refuted by the witness");
    std::cout << "  info " << line << "; t=" << c.t + 1 << (witness_refutes ? " refuted by witness" : " NOT refuted by witness")
              << "\n";
    for (Model m : {Model::pmc, Model::mm}) {
      if (subsets_up_to(c.g.vertex_count(), 0, c.t) > 5'000'000) continue;
      auto exact = exact_tg(c.g, 1, m, c.t + 1);
      std::cout << "  info " << c.name << " exhaustive t_1 under " << to_string(m) << ": "
                << (exact.tg ? std::to_string(*exact.tg) : ">= " + std::to_string(c.t + 1)) << "\n";
    }
  }
  if (o.pass) o.detail << "3 instances, zero refutations; witnesses refute t+1";
}

void criterion10(Outcome& o) {
  auto g = build_dcell(2, 2);
  const std::size_t t = closed_form_tg({Family::dcell, 2, 2}, 1);
  std::mt19937_64 rng(kSeed);
  SurvivalProbe probe(g);
  int unique = 0;
  for (int trial = 0; trial < kDiagnosisTrials; ++trial) {
    VertexSet f;
    do {
      std::vector<Vertex> pool(g.vertex_count());
      for (Vertex v = 0; v < g.vertex_count(); ++v) pool[v] = v;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(rng() % (t + 1));
      f = VertexSet(pool);
    } while (!probe.is_good(f.view(), 1));
    for (Model m : {Model::pmc, Model::mm}) {
      auto sigma = generate_syndrome(g, {f, 1}, m, {AdversaryPolicy::hostile, std::nullopt, rng()});
      auto r = diagnose_by_consistency(g, sigma, 1, t, m);
      const bool ok = r.outcome == DiagnosisOutcome::unique && r.candidates.front() == f;
      o.require(ok, "trial " + std::to_string(trial) + " " + std::string(to_string(m)) + " F=" + str(f) + " -> " +
                        std::string(to_string(r.outcome)));
      unique += ok;
    }
  }
  auto c = construct_dcell_cut(g, 2, 2, 1);
  auto w = tg_witness(g, 1, c.clique);
  for (Model m : {Model::pmc, Model::mm}) {
    auto sigma = generate_syndrome(g, {w.f1, 1}, m, {AdversaryPolicy::hostile, w.f2, kSeed});
    auto r = diagnose_by_consistency(g, sigma, 1, t + 1, m);
    std::vector<VertexSet> want{w.f1, w.f2};
    std::sort(want.begin(), want.end());
    o.require(r.outcome == DiagnosisOutcome::ambiguous && r.candidates == want,
              "witness syndrome " + std::string(to_string(m)) + " -> " + std::string(to_string(r.outcome)));
  }
  o.detail << unique << "/" << 2 * kDiagnosisTrials << " unique and correct; witness syndrome ambiguous under both";
}

void criterion11(Outcome& o) {
  int cells = 0;
  for (auto family : {Family::dcell, Family::nk_star, Family::arrangement, Family::star, Family::alt_group_network,
                      Family::alt_group_graph}) {
    for (int n = 2; n <= 16; ++n) {
      for (int k = 0; k <= 15; ++k) {
        for (std::size_t g = 0; g <= 8; ++g) {
          TopologyParams p{family, n, k};
          if (kappa_g_range_violation(p, g) || tg_range_violation(p, g)) continue;
          ++cells;
          o.require(closed_form_tg(p, g) == kappa_g_closed_form(p, g) + g, p.describe() + " g=" + std::to_string(g));
        }
      }
    }
  }
  o.detail << cells << " in-range cells";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "orders and regularity", 1, criterion1},
      {2, "DCell structure", 10, criterion2},
      {3, "vertex connectivity", 30, criterion3},
      {4, "kappa^g exhaustive vs formula", 600, criterion4},
      {5, "cut constructions", 60, criterion5},
      {6, "super-connectivity", 60, criterion6},
      {7, "survival census", 600, criterion7},
      {8, "clique witness pairs", 10, criterion8},
      {9, "t_g verdicts", 900, criterion9},
      {10, "diagnosis round-trip", 900, criterion10},
      {11, "formula consistency", 1, criterion11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) o.require(false, "time limit exceeded");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", seconds, c.limit_seconds);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << timing
              << "): " << o.detail.str() << std::endl;
    failed += !o.pass;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
