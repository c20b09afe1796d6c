// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dcdiag/graph.hpp"
#include "dcdiag/reliability.hpp"

namespace dcdiag {

enum class Model { pmc, mm };

inline constexpr std::string_view to_string(Model m) { return m == Model::pmc ? "pmc" : "mm"; }

inline std::optional<Model> parse_model(std::string_view s) {
  if (s == "pmc" || s == "PMC") return Model::pmc;
  if (s == "mm" || s == "MM") return Model::mm;
  return std::nullopt;
}

/// One test. PMC: `tester` tests `u` (and v == u). MM: comparator `tester`
/// compares its neighbors u < v.
struct Test {
  Vertex tester = 0;
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Test&, const Test&) = default;
};

/// The full test set in canonical (lexicographic) order.
/// PMC: every ordered adjacent pair. MM: every comparator w with every
/// unordered pair of distinct neighbors.
inline std::vector<Test> build_tests(const Graph& g, Model model) {
  std::vector<Test> tests;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    auto nb = g.neighbors(w);
    if (model == Model::pmc) {
      for (Vertex u : nb) tests.push_back({w, u, u});
    } else {
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) tests.push_back({w, nb[i], nb[j]});
    }
  }
  return tests;
}

/// Outcomes stored densely over build_tests(g, model) order. 1 = "faulty" /
/// "mismatch".
struct Syndrome {
  Model model = Model::pmc;
  std::vector<std::uint8_t> outcomes;

  friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

enum class AdversaryPolicy { all_zero, all_one, seeded_random, hostile };

inline constexpr std::string_view to_string(AdversaryPolicy p) {
  switch (p) {
    case AdversaryPolicy::all_zero: return "all-zero";
    case AdversaryPolicy::all_one: return "all-one";
    case AdversaryPolicy::seeded_random: return "seeded-random";
    case AdversaryPolicy::hostile: return "hostile";
  }
  return "?";
}

inline std::optional<AdversaryPolicy> parse_adversary(std::string_view s) {
  for (auto p : {AdversaryPolicy::all_zero, AdversaryPolicy::all_one, AdversaryPolicy::seeded_random,
                 AdversaryPolicy::hostile})
    if (to_string(p) == s) return p;
  return std::nullopt;
}

/// How faulty testers answer. `hostile` answers as a fault-free tester would
/// if `target` were the fault set; without a target it inverts the truth.
struct Adversary {
  AdversaryPolicy policy = AdversaryPolicy::all_zero;
  std::optional<VertexSet> target;
  std::uint64_t seed = 0;
};

namespace detail {

inline std::uint8_t forced_outcome(const Test& t, Model model, const std::vector<std::uint8_t>& in) {
  if (model == Model::pmc) return in[t.u];
  return static_cast<std::uint8_t>(in[t.u] | in[t.v]);
}

inline std::vector<std::uint8_t> membership(const Graph& g, const VertexSet& s) {
  check_ids(g, s);
  std::vector<std::uint8_t> in(g.vertex_count(), 0);
  for (Vertex v : s) in[v] = 1;
  return in;
}

}  // namespace detail

/// Fault-free testers report the truth about F; faulty testers follow the
/// adversary policy.
inline Syndrome generate_syndrome(const Graph& g, const FaultSet& f, Model model, const Adversary& adversary = {}) {
  const auto in = detail::membership(g, f.vertices);
  std::vector<std::uint8_t> target_in;
  if (adversary.target) target_in = detail::membership(g, *adversary.target);
  std::mt19937_64 rng(adversary.seed);

  Syndrome s;
  s.model = model;
  for (const auto& t : build_tests(g, model)) {
    const auto truth = detail::forced_outcome(t, model, in);
    std::uint8_t bit = truth;
    if (in[t.tester]) {
      switch (adversary.policy) {
        case AdversaryPolicy::all_zero: bit = 0; break;
        case AdversaryPolicy::all_one: bit = 1; break;
        case AdversaryPolicy::seeded_random: bit = static_cast<std::uint8_t>(rng() >> 63); break;
        case AdversaryPolicy::hostile:
          bit = adversary.target ? detail::forced_outcome(t, model, target_in) : static_cast<std::uint8_t>(!truth);
          break;
      }
    }
    s.outcomes.push_back(bit);
  }
  return s;
}

/// F is compatible with sigma iff every test whose tester is outside F shows
/// the outcome F forces. Tests run by members of F are unconstrained.
inline bool is_compatible(const Graph& g, const FaultSet& f, const Syndrome& sigma, Model model) {
  if (sigma.model != model) throw std::invalid_argument("syndrome model does not match");
  const auto tests = build_tests(g, model);
  if (tests.size() != sigma.outcomes.size())
    throw std::invalid_argument("syndrome has " + std::to_string(sigma.outcomes.size()) + " outcomes, test set has " +
                                std::to_string(tests.size()));
  const auto in = detail::membership(g, f.vertices);
  for (std::size_t i = 0; i < tests.size(); ++i)
    if (!in[tests[i].tester] && sigma.outcomes[i] != detail::forced_outcome(tests[i], model, in)) return false;
  return true;
}

/// Reusable membership buffers for repeated distinguishability checks.
class DistinguishabilityChecker {
 public:
  explicit DistinguishabilityChecker(const Graph& g) : g_(&g), mark_(g.vertex_count(), 0) {}

  /// PMC: some edge joins a vertex outside F1 u F2 to F1 delta F2.
  bool pmc(const VertexSet& f1, const VertexSet& f2) {
    mark(f1, f2);
    bool found = false;
    for (Vertex x = 0; x < g_->vertex_count() && !found; ++x) {
      if (mark_[x] != 3 && mark_[x] != 0) {
        for (Vertex y : g_->neighbors(x))
          if (mark_[y] == 0) {
            found = true;
            break;
          }
      }
    }
    unmark(f1, f2);
    return found;
  }

  /// MM: a fault-free pivot sees (1) a vertex of F1 delta F2 and another
  /// fault-free vertex, or (2) two vertices of F1\F2, or (3) two of F2\F1.
  bool mm(const VertexSet& f1, const VertexSet& f2) {
    mark(f1, f2);
    bool found = false;
    for (Vertex w = 0; w < g_->vertex_count() && !found; ++w) {
      if (mark_[w] != 0) continue;
      std::size_t only1 = 0, only2 = 0, clean = 0;
      for (Vertex y : g_->neighbors(w)) {
        switch (mark_[y]) {
          case 0: ++clean; break;
          case 1: ++only1; break;
          case 2: ++only2; break;
          default: break;
        }
      }
      if ((only1 + only2 > 0 && clean > 0) || only1 >= 2 || only2 >= 2) found = true;
    }
    unmark(f1, f2);
    return found;
  }

  bool distinguishable(const VertexSet& f1, const VertexSet& f2, Model model) {
    return model == Model::pmc ? pmc(f1, f2) : mm(f1, f2);
  }

 private:
  void mark(const VertexSet& f1, const VertexSet& f2) {
    check_ids(*g_, f1);
    check_ids(*g_, f2);
    for (Vertex v : f1) mark_[v] |= 1;
    for (Vertex v : f2) mark_[v] |= 2;
  }
  void unmark(const VertexSet& f1, const VertexSet& f2) {
    for (Vertex v : f1) mark_[v] = 0;
    for (Vertex v : f2) mark_[v] = 0;
  }

  const Graph* g_;
  std::vector<std::uint8_t> mark_;
};

inline void require_distinct(const VertexSet& f1, const VertexSet& f2) {
  if (f1 == f2) throw std::invalid_argument("distinguishability needs two distinct fault sets");
}

inline bool pmc_distinguishable(const Graph& g, const VertexSet& f1, const VertexSet& f2) {
  require_distinct(f1, f2);
  return DistinguishabilityChecker(g).pmc(f1, f2);
}

inline bool mm_distinguishable(const Graph& g, const VertexSet& f1, const VertexSet& f2) {
  require_distinct(f1, f2);
  return DistinguishabilityChecker(g).mm(f1, f2);
}

struct WitnessPair {
  VertexSet f1;  // N(A)
  VertexSet f2;  // N(A) u A
};

/// F1 = N(A), F2 = N(A) u A for a clique A = K_{g+1} whose neighborhood is a
/// g-good-neighbor cut. Throws std::invalid_argument when A does not qualify.
inline WitnessPair tg_witness(const Graph& g, std::size_t gn, const VertexSet& a) {
  check_ids(g, a);
  if (a.size() != gn + 1 || !induces_clique(g, a))
    throw std::invalid_argument("tg_witness: A must induce K_{g+1} (|A| = " + std::to_string(a.size()) +
                                ", g = " + std::to_string(gn) + ")");
  WitnessPair w{neighborhood_of_set(g, a), {}};
  auto cut = is_g_good_neighbor_cut(g, {w.f1, gn});
  if (!cut.is_g_good_neighbor_cut) throw std::invalid_argument("tg_witness: N(A) is not a g-good-neighbor cut");
  w.f2 = set_union(w.f1, a);
  if (!is_g_good_neighbor_set(g, {w.f2, gn}))
    throw std::invalid_argument("tg_witness: N(A) u A is not a g-good-neighbor set");
  return w;
}

}  // namespace dcdiag
