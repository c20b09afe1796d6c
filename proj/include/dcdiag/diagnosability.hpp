// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dcdiag/budget.hpp"
#include "dcdiag/diagnosis.hpp"
#include "dcdiag/graph.hpp"

namespace dcdiag {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Two distinct g-good-neighbor sets and the models under which no syndrome
/// separates them.
struct IndistinguishablePair {
  VertexSet f1;
  VertexSet f2;
  bool pmc_indistinguishable = false;
  bool mm_indistinguishable = false;

  std::size_t max_size() const { return std::max(f1.size(), f2.size()); }
};

inline IndistinguishablePair classify_pair(const Graph& g, VertexSet f1, VertexSet f2) {
  DistinguishabilityChecker check(g);
  IndistinguishablePair p{std::move(f1), std::move(f2), false, false};
  p.pmc_indistinguishable = !check.pmc(p.f1, p.f2);
  p.mm_indistinguishable = !check.mm(p.f1, p.f2);
  return p;
}

namespace detail {

/// Exact search for an indistinguishable pair of g-good-neighbor sets of size
/// <= t. Writes F1 = I u A, F2 = I u B with I = F1 n F2 and enumerates the
/// core I (|I| <= t-1) instead of the pairs themselves.
///
/// PMC: no surviving vertex touches A u B, so A u B is a union of components
/// of G - I. MM: additionally let S0 be the survivors adjacent to A u B. Each
/// has no other surviving neighbor and at most one neighbor in each of A and
/// B, so S0 is independent, every member has degree <= 2 in G - I, and
/// A u B u S0 is again a union of components of G - I. Both conditions are
/// also sufficient, which makes the search exact.
class PairSearch {
 public:
  PairSearch(const Graph& g, std::size_t gn, Model model, Budget budget)
      : g_(g), gn_(gn), model_(model), budget_(budget), probe_(g), state_(g.vertex_count(), kOut),
        to_a_(g.vertex_count(), 0), to_b_(g.vertex_count(), 0), degree_(g.vertex_count(), 0) {}

  std::optional<IndistinguishablePair> run(std::size_t t) {
    if (t == 0) return std::nullopt;
    const auto n = g_.vertex_count();
    std::uint64_t cores = 0;
    for (std::size_t s = 0; s < t && s <= n; ++s) {
      cores = saturating_add(cores, binomial(n, s));
      budget_.require(cores, "exhaustive pair search (cores)");
      m_ = t - s;
      bool found = !for_each_combination(n, s, [&](std::span<const Vertex> core) { return !try_core(core); });
      if (found) return result_;
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  enum : std::uint8_t { kOut = 0, kA = 1, kB = 2, kS0 = 3, kFree = 4 };

  struct Piece {
    std::vector<Vertex> vertices;  // BFS order
    std::size_t rigid = 0;         // vertices that cannot join S0
  };

  bool try_core(std::span<const Vertex> core) {
    core_.assign(core.begin(), core.end());
    probe_.remove(core);
    pieces_.clear();
    const std::size_t limit = 2 * m_;
    for (auto& comp : probe_.components()) {
      Piece p;
      for (Vertex v : comp) {
        degree_[v] = probe_.surviving_degree(v);
        if (model_ == Model::pmc || degree_[v] > 2) ++p.rigid;
      }
      const std::size_t cap = model_ == Model::pmc ? limit : limit * (1 + g_.max_degree());
      if (p.rigid <= limit && comp.size() <= cap) {
        p.vertices = std::move(comp);
        pieces_.push_back(std::move(p));
      }
    }
    chosen_.clear();
    return choose(0, 0);
  }

  bool choose(std::size_t next, std::size_t rigid) {
    if (!chosen_.empty() && assign_pieces()) return true;
    for (std::size_t i = next; i < pieces_.size(); ++i) {
      if (chosen_.size() + 1 > 2 * m_) break;
      if (rigid + pieces_[i].rigid > 2 * m_) continue;
      chosen_.push_back(i);
      if (choose(i + 1, rigid + pieces_[i].rigid)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  bool assign_pieces() {
    order_.clear();
    piece_end_.clear();
    for (auto i : chosen_) {
      for (Vertex v : pieces_[i].vertices) {
        order_.push_back(v);
        state_[v] = kFree;
      }
      piece_end_.push_back(order_.size());
    }
    a_count_ = b_count_ = 0;
    piece_delta_ = 0;
    bool found = assign(0, 0);
    for (Vertex v : order_) {
      state_[v] = kOut;
      to_a_[v] = to_b_[v] = 0;
    }
    return found;
  }

  bool assign(std::size_t pos, std::size_t piece) {
    budget_.require(++nodes_, "exhaustive pair search (nodes)");
    if (piece < piece_end_.size() && pos == piece_end_[piece]) {
      if (piece_delta_ == 0) return false;
      piece_delta_ = 0;
      const bool r = assign(pos, piece + 1);
      piece_delta_ = 0;
      return r;
    }
    if (pos == order_.size()) return leaf();
    const Vertex v = order_[pos];
    const std::size_t saved = piece_delta_;

    for (std::uint8_t s : {kA, kB, kS0}) {
      if (s == kA && a_count_ >= m_) continue;
      // Symmetry: the first vertex placed in A u B goes to A.
      if (s == kB && (b_count_ >= m_ || a_count_ + b_count_ == 0)) continue;
      if (s == kS0 && (model_ == Model::pmc || degree_[v] > 2 || !s0_ok(v))) continue;
      if (s != kS0 && !delta_ok(v, s)) continue;
      place(v, s, +1);
      if (s != kS0) ++piece_delta_;
      if (assign(pos + 1, piece)) return true;
      piece_delta_ = saved;
      place(v, s, -1);
    }
    return false;
  }

  bool s0_ok(Vertex v) const {
    std::size_t a = 0, b = 0;
    for (Vertex w : g_.neighbors(v)) {
      if (state_[w] == kS0) return false;
      a += state_[w] == kA;
      b += state_[w] == kB;
    }
    return a <= 1 && b <= 1;
  }

  bool delta_ok(Vertex v, std::uint8_t s) const {
    for (Vertex w : g_.neighbors(v))
      if (state_[w] == kS0 && (s == kA ? to_a_[w] : to_b_[w]) >= 1) return false;
    return true;
  }

  void place(Vertex v, std::uint8_t s, int dir) {
    state_[v] = dir > 0 ? s : static_cast<std::uint8_t>(kFree);
    auto bump = [dir](std::size_t& c) { dir > 0 ? ++c : --c; };
    if (s == kA) bump(a_count_);
    if (s == kB) bump(b_count_);
    if (s == kS0) {
      if (dir > 0) {
        to_a_[v] = to_b_[v] = 0;
        for (Vertex w : g_.neighbors(v)) {
          to_a_[v] += state_[w] == kA;
          to_b_[v] += state_[w] == kB;
        }
      }
      return;
    }
    for (Vertex w : g_.neighbors(v)) {
      if (state_[w] != kS0) continue;
      auto& c = s == kA ? to_a_[w] : to_b_[w];
      c = static_cast<std::uint8_t>(c + dir);
    }
  }

  bool leaf() {
    std::vector<Vertex> f1 = core_, f2 = core_;
    for (Vertex v : order_) {
      if (state_[v] == kA) f1.push_back(v);
      if (state_[v] == kB) f2.push_back(v);
    }
    VertexSet s1(std::move(f1)), s2(std::move(f2));
    if (!probe_good(s1) || !probe_good(s2)) return false;
    result_ = classify_pair(g_, std::move(s1), std::move(s2));
    return true;
  }

  bool probe_good(const VertexSet& f) { return probe_.is_good(f.view(), gn_); }

  const Graph& g_;
  std::size_t gn_;
  Model model_;
  Budget budget_;
  SurvivalProbe probe_;
  std::size_t m_ = 0;
  std::vector<Vertex> core_;
  std::vector<Piece> pieces_;
  std::vector<std::size_t> chosen_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> piece_end_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint8_t> to_a_, to_b_;
  std::vector<std::size_t> degree_;
  std::size_t a_count_ = 0, b_count_ = 0, piece_delta_ = 0;
  std::uint64_t nodes_ = 0;
  IndistinguishablePair result_;
};

}  // namespace detail

/// First indistinguishable pair (under `model`) of gn-good-neighbor sets with
/// both sizes <= t, or nullopt when every such pair is distinguishable.
inline std::optional<IndistinguishablePair> find_indistinguishable_pair(const Graph& g, std::size_t gn, std::size_t t,
                                                                        Model model, Budget budget = {}) {
  return detail::PairSearch(g, gn, model, budget).run(t);
}

struct ExactDiagnosability {
  /// Largest t with no indistinguishable pair; nullopt if none was found up
  /// to t_max (then t_g >= t_max).
  std::optional<std::size_t> tg;
  std::optional<IndistinguishablePair> first_pair;
};

inline ExactDiagnosability exact_tg(const Graph& g, std::size_t gn, Model model, std::size_t t_max,
                                    Budget budget = {}) {
  ExactDiagnosability r;
  for (std::size_t t = 1; t <= t_max; ++t) {
    if (auto p = find_indistinguishable_pair(g, gn, t, model, budget)) {
      r.tg = t - 1;
      r.first_pair = std::move(p);
      return r;
    }
  }
  return r;
}

/// Cliques A = K_{gn+1} with N(A) a gn-good-neighbor cut and N(A) u A
/// gn-good-neighbor; returns the pair with the smallest |N(A)| (ties by the
/// lexicographically least A).
inline std::optional<WitnessPair> find_clique_witness(const Graph& g, std::size_t gn, Budget budget = {}) {
  std::optional<WitnessPair> best;
  std::optional<VertexSet> best_a;
  std::uint64_t visited = 0;
  SurvivalProbe probe(g);
  std::vector<Vertex> clique;

  auto consider = [&] {
    VertexSet a(clique);
    auto cut = neighborhood_of_set(g, a);
    if (best && cut.size() >= best->f1.size()) return;
    if (!probe.is_good(cut.view(), gn) || probe.component_count(1) < 2) return;
    auto f2 = set_union(cut, a);
    if (!probe.is_good(f2.view(), gn)) return;
    best = WitnessPair{std::move(cut), std::move(f2)};
    best_a = std::move(a);
  };

  auto extend = [&](auto&& self, std::vector<Vertex>& candidates) -> void {
    budget.require(++visited, "clique witness search");
    if (clique.size() == gn + 1) {
      consider();
      return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      Vertex v = candidates[i];
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
      clique.push_back(v);
      self(self, next);
      clique.pop_back();
    }
  };

  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
  extend(extend, all);
  return best;
}

enum class SearchMode { exhaustive, sampled };

inline constexpr std::string_view to_string(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "sampled"; }

inline std::optional<SearchMode> parse_search_mode(std::string_view s) {
  if (s == "exhaustive") return SearchMode::exhaustive;
  if (s == "sampled") return SearchMode::sampled;
  return std::nullopt;
}

struct VerdictOptions {
  SearchMode mode = SearchMode::sampled;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = kDefaultSeed;
  std::vector<Model> models{Model::pmc, Model::mm};
  Budget budget{};
};

struct DiagnosabilityVerdict {
  std::size_t g = 0;
  std::size_t t_claim = 0;
  /// Indistinguishable pair whose larger set has size t_claim + 1.
  std::optional<IndistinguishablePair> witness_pair;
  /// Indistinguishable pair with both sizes <= t_claim.
  std::optional<IndistinguishablePair> refuted_at;
  /// "witness", "exhaustive" or "sampled".
  std::string refuted_by;
  SearchMode search_mode = SearchMode::sampled;
  std::uint64_t samples = 0;
  std::uint64_t rejected_draws = 0;

  bool refuted() const { return refuted_at.has_value(); }
};

namespace detail {

/// Uniform integer in [0, bound) by rejection, so that results do not depend
/// on the standard library's distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

class PairSampler {
 public:
  PairSampler(const Graph& g, std::size_t gn, std::size_t t, std::uint64_t seed)
      : g_(g), gn_(gn), t_(t), rng_(seed), probe_(g), pool_(g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) pool_[v] = v;
  }

  /// Uniform size in [0, t], then a uniform subset of that size, redrawn until
  /// it is gn-good-neighbor.
  VertexSet draw() {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      const auto size = uniform_below(rng_, std::min(t_, g_.vertex_count()) + 1);
      for (std::size_t i = 0; i < size; ++i)
        std::swap(pool_[i], pool_[i + uniform_below(rng_, pool_.size() - i)]);
      VertexSet f(std::span<const Vertex>(pool_.data(), size));
      if (probe_.is_good(f.view(), gn_)) return f;
      ++rejected_;
    }
    return {};
  }

  /// Half the time an independent draw; otherwise a few toggles of vertices in
  /// the closed neighborhood of `base`, which is where indistinguishable
  /// partners live.
  VertexSet partner(const VertexSet& base) {
    if (rng_() >> 63) return draw();
    auto around = set_union(base, neighborhood_of_set(g_, base));
    if (around.empty()) return draw();
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      std::vector<Vertex> f(base.begin(), base.end());
      const auto toggles = 1 + uniform_below(rng_, 3);
      for (std::uint64_t i = 0; i < toggles; ++i) {
        Vertex v = around[uniform_below(rng_, around.size())];
        auto it = std::lower_bound(f.begin(), f.end(), v);
        if (it != f.end() && *it == v)
          f.erase(it);
        else
          f.insert(it, v);
      }
      auto cand = VertexSet::from_sorted(std::move(f));
      if (cand.size() <= t_ && cand != base && probe_.is_good(cand.view(), gn_)) return cand;
      ++rejected_;
    }
    return draw();
  }

  std::uint64_t rejected() const noexcept { return rejected_; }

 private:
  static constexpr int kMaxAttempts = 10'000;

  const Graph& g_;
  std::size_t gn_;
  std::size_t t_;
  std::mt19937_64 rng_;
  SurvivalProbe probe_;
  std::vector<Vertex> pool_;
  std::uint64_t rejected_ = 0;
};

}  // namespace detail

/// Checks the claim t_g(G) >= t_claim. The clique witness is always
/// examined: it refutes the claim when |N(A) u A| <= t_claim and is recorded
/// as witness_pair when it has size t_claim + 1. Then either the exact pair
/// search or `samples` seeded random pairs are checked under every model in
/// options.models.
inline DiagnosabilityVerdict tg_verdict(const Graph& g, std::size_t gn, std::size_t t_claim,
                                        const VerdictOptions& options = {}) {
  DiagnosabilityVerdict v;
  v.g = gn;
  v.t_claim = t_claim;
  v.search_mode = options.mode;

  if (auto w = find_clique_witness(g, gn, options.budget)) {
    auto pair = classify_pair(g, w->f1, w->f2);
    if (pair.max_size() <= t_claim) {
      v.refuted_at = pair;
      v.refuted_by = "witness";
    } else if (pair.max_size() == t_claim + 1) {
      v.witness_pair = pair;
    }
  }
  if (v.refuted()) return v;

  if (options.mode == SearchMode::exhaustive) {
    for (Model m : options.models) {
      if (auto p = find_indistinguishable_pair(g, gn, t_claim, m, options.budget)) {
        v.refuted_at = std::move(p);
        v.refuted_by = "exhaustive";
        return v;
      }
    }
    return v;
  }

  detail::PairSampler sampler(g, gn, t_claim, options.seed);
  DistinguishabilityChecker check(g);
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    auto f1 = sampler.draw();
    auto f2 = sampler.partner(f1);
    ++v.samples;
    if (f1 == f2) continue;
    for (Model m : options.models) {
      if (!check.distinguishable(f1, f2, m)) {
        v.refuted_at = classify_pair(g, std::move(f1), std::move(f2));
        v.refuted_by = "sampled";
        v.rejected_draws = sampler.rejected();
        return v;
      }
    }
  }
  v.rejected_draws = sampler.rejected();
  return v;
}

enum class DiagnosisOutcome { unique, ambiguous, none };

inline constexpr std::string_view to_string(DiagnosisOutcome o) {
  switch (o) {
    case DiagnosisOutcome::unique: return "unique";
    case DiagnosisOutcome::ambiguous: return "ambiguous";
    case DiagnosisOutcome::none: return "none";
  }
  return "?";
}

struct DiagnosisResult {
  DiagnosisOutcome outcome = DiagnosisOutcome::none;
  /// Every compatible gn-good-neighbor set of size <= t, sorted.
  std::vector<VertexSet> candidates;
  std::uint64_t nodes = 0;
};

namespace detail {

/// Backtracking over in/out decisions in BFS order. A test is checked as soon
/// as its tester and testee(s) are decided, so every test read as 1 by a
/// fault-free tester forces its testee into F at once.
class ConsistencySearch {
 public:
  ConsistencySearch(const Graph& g, const Syndrome& sigma, std::size_t gn, std::size_t t, Budget budget)
      : g_(g), sigma_(sigma), gn_(gn), t_(t), budget_(budget), probe_(g) {
    tests_ = build_tests(g, sigma.model);
    if (tests_.size() != sigma.outcomes.size())
      throw std::invalid_argument("syndrome has " + std::to_string(sigma.outcomes.size()) +
                                  " outcomes, test set has " + std::to_string(tests_.size()));
    bfs_order();
    std::vector<std::size_t> pos(g.vertex_count());
    for (std::size_t i = 0; i < order_.size(); ++i) pos[order_[i]] = i;
    due_.resize(order_.size());
    for (std::size_t i = 0; i < tests_.size(); ++i) {
      const auto& x = tests_[i];
      due_[std::max({pos[x.tester], pos[x.u], pos[x.v]})].push_back(i);
    }
    in_.assign(g.vertex_count(), 0);
  }

  DiagnosisResult run() {
    DiagnosisResult r;
    descend(0, 0, r);
    std::sort(r.candidates.begin(), r.candidates.end());
    r.outcome = r.candidates.empty()       ? DiagnosisOutcome::none
                : r.candidates.size() == 1 ? DiagnosisOutcome::unique
                                           : DiagnosisOutcome::ambiguous;
    return r;
  }

 private:
  void bfs_order() {
    std::vector<bool> seen(g_.vertex_count(), false);
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::size_t head = order_.size();
      order_.push_back(s);
      while (head < order_.size()) {
        Vertex v = order_[head++];
        for (Vertex w : g_.neighbors(v))
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
          }
      }
    }
  }

  bool consistent(std::size_t pos) const {
    for (auto i : due_[pos]) {
      const auto& x = tests_[i];
      if (!in_[x.tester] && sigma_.outcomes[i] != forced_outcome(x, sigma_.model, in_)) return false;
    }
    return true;
  }

  void descend(std::size_t pos, std::size_t faults, DiagnosisResult& r) {
    budget_.require(++r.nodes, "diagnose_by_consistency");
    if (pos == order_.size()) {
      std::vector<Vertex> f;
      for (Vertex v = 0; v < g_.vertex_count(); ++v)
        if (in_[v]) f.push_back(v);
      if (probe_.is_good(f, gn_)) r.candidates.push_back(VertexSet::from_sorted(std::move(f)));
      return;
    }
    const Vertex v = order_[pos];
    in_[v] = 0;
    if (consistent(pos)) descend(pos + 1, faults, r);
    if (faults < t_) {
      in_[v] = 1;
      if (consistent(pos)) descend(pos + 1, faults + 1, r);
    }
    in_[v] = 0;
  }

  const Graph& g_;
  const Syndrome& sigma_;
  std::size_t gn_;
  std::size_t t_;
  Budget budget_;
  SurvivalProbe probe_;
  std::vector<Test> tests_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> due_;
  std::vector<std::uint8_t> in_;
};

}  // namespace detail

/// All gn-good-neighbor sets F with |F| <= t compatible with sigma.
inline DiagnosisResult diagnose_by_consistency(const Graph& g, const Syndrome& sigma, std::size_t gn, std::size_t t,
                                               Model model, Budget budget = {}) {
  if (sigma.model != model) throw std::invalid_argument("syndrome model does not match");
  return detail::ConsistencySearch(g, sigma, gn, t, budget).run();
}

}  // namespace dcdiag
