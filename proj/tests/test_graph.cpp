// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "dcdiag/budget.hpp"
#include "dcdiag/connectivity.hpp"
#include "dcdiag/dcell.hpp"
#include "dcdiag/graph.hpp"
#include "dcdiag/permutation_graphs.hpp"
#include "oracles.hpp"

using namespace dcdiag;

namespace {

Graph k4_minus_edge() {
  GraphBuilder b(4);
  b.add_edge(0, 1).add_edge(0, 2).add_edge(0, 3).add_edge(1, 2).add_edge(1, 3);
  return std::move(b).build();
}

/// kappa by brute force: the smallest S with G - S disconnected.
std::size_t brute_kappa(const Graph& g) {
  oracle::Dense d(g);
  std::optional<std::size_t> best;
  oracle::subsets(d.n, 0, d.n - 2, [&](const std::vector<bool>& s) {
    if (!best && oracle::components(d, s) >= 2) best = oracle::members(s).size();
  });
  return *best;
}

}  // namespace

TEST(VertexSet, NormalizesAndCompares) {
  VertexSet s{5, 1, 3, 1};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.ids(), (std::vector<Vertex>{1, 3, 5}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(set_union(s, {2, 3}), (VertexSet{1, 2, 3, 5}));
  EXPECT_EQ(set_intersection(s, {3, 4, 5}), (VertexSet{3, 5}));
  EXPECT_EQ(set_difference(s, {1}), (VertexSet{3, 5}));
  EXPECT_EQ(symmetric_difference(s, {1, 2}), (VertexSet{2, 3, 5}));
}

TEST(Graph, BuilderRejectsSelfLoopsAndBadIds) {
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(b.add_edge(0, 3), std::out_of_range);
}

TEST(Graph, BuilderDeduplicates) {
  GraphBuilder b(3);
  b.add_edge(0, 1).add_edge(1, 0).add_edge(0, 1);
  auto g = std::move(b).build();
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.degree(0), 1u);
}

TEST(Neighbors, Examples) {
  EXPECT_EQ(neighbors(complete_graph(3), 0), (VertexSet{1, 2}));
  EXPECT_EQ(neighbors(cycle_graph(6), 0), (VertexSet{1, 5}));
  auto d12 = build_dcell(1, 2);
  auto n00 = neighbors(d12, *d12.find_label("0,0"));
  EXPECT_EQ(n00, (VertexSet{*d12.find_label("0,1"), *d12.find_label("1,0")}));
  EXPECT_THROW(neighbors(cycle_graph(6), 6), std::out_of_range);
}

TEST(Neighbors, SymmetricAndLoopFree) {
  for (const auto& g : {build_dcell(2, 2), build_nk_star(5, 3), build_arrangement(5, 2), oracle::random_graph(30, 0.2, 3)}) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      auto nb = g.neighbors(u);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
      for (Vertex v : nb) {
        EXPECT_NE(u, v);
        EXPECT_TRUE(g.has_edge(v, u));
      }
    }
  }
}

TEST(NeighborhoodOfSet, Examples) {
  EXPECT_EQ(neighborhood_of_set(complete_graph(4), {0, 1}), (VertexSet{2, 3}));
  EXPECT_EQ(neighborhood_of_set(cycle_graph(6), {0}), (VertexSet{1, 5}));
  EXPECT_EQ(neighborhood_of_set(cycle_graph(6), {0, 1}), (VertexSet{2, 5}));
  EXPECT_THROW(neighborhood_of_set(cycle_graph(6), {9}), std::out_of_range);
}

TEST(Components, CycleExamples) {
  auto c6 = cycle_graph(6);
  auto whole = connected_components(c6, {});
  ASSERT_EQ(whole.components.size(), 1u);
  EXPECT_EQ(whole.components[0].size(), 6u);
  EXPECT_EQ(whole.classification, SurvivalClass::connected);

  auto halves = connected_components(c6, {0, 3});
  ASSERT_EQ(halves.components.size(), 2u);
  EXPECT_EQ(halves.components[0], (VertexSet{1, 2}));
  EXPECT_EQ(halves.components[1], (VertexSet{4, 5}));
  EXPECT_EQ(halves.classification, SurvivalClass::big_plus_edge);

  auto single = connected_components(c6, {0, 2});
  ASSERT_EQ(single.components.size(), 2u);
  EXPECT_EQ(single.components[0], (VertexSet{3, 4, 5}));
  EXPECT_EQ(single.components[1], (VertexSet{1}));
  EXPECT_EQ(single.classification, SurvivalClass::big_plus_singleton);
}

TEST(Components, Taxonomy) {
  const std::vector<std::size_t> two_singletons{5, 1, 1}, three_parts{5, 2, 1}, two_big{5, 3};
  EXPECT_EQ(classify_sizes(two_singletons), SurvivalClass::big_plus_two_singletons);
  EXPECT_EQ(classify_sizes(three_parts), SurvivalClass::other);
  EXPECT_EQ(classify_sizes(two_big), SurvivalClass::other);
}

TEST(Components, PartitionProperty) {
  std::mt19937_64 rng(12);
  auto g = oracle::random_graph(25, 0.12, 9);
  oracle::Dense d(g);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vertex> removed;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (rng() % 4 == 0) removed.push_back(v);
    VertexSet f(removed);
    auto report = connected_components(g, f);
    std::vector<bool> mask(g.vertex_count(), false);
    for (Vertex v : f) mask[v] = true;
    auto expect = oracle::component_sets(d, mask);
    ASSERT_EQ(report.components.size(), expect.size());
    std::size_t covered = 0;
    for (std::size_t i = 0; i < report.components.size(); ++i) {
      if (i > 0) {
        EXPECT_GE(report.components[i - 1].size(), report.components[i].size());
      }
      covered += report.components[i].size();
      std::vector<int> ids(report.components[i].begin(), report.components[i].end());
      EXPECT_NE(std::find(expect.begin(), expect.end(), ids), expect.end());
    }
    EXPECT_EQ(covered + f.size(), g.vertex_count());
  }
}

TEST(MinVertexCut, Examples) {
  EXPECT_EQ(min_vertex_cut_size(cycle_graph(6)), 2u);
  EXPECT_EQ(min_vertex_cut_size(build_dcell(2, 2)), 3u);
  EXPECT_EQ(min_vertex_cut_size(build_nk_star(4, 3)), 3u);
  EXPECT_THROW(min_vertex_cut_size(complete_graph(5)), CompleteGraphError);
  GraphBuilder b(4);
  b.add_edge(0, 1).add_edge(2, 3);
  EXPECT_EQ(min_vertex_cut_size(std::move(b).build()), 0u);
}

TEST(MinVertexCut, MatchesBruteForceAndMinDegree) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto g = oracle::random_graph(9, 0.45, seed);
    if (g.is_complete() || !is_connected_graph(g)) continue;
    const auto kappa = min_vertex_cut_size(g);
    EXPECT_EQ(kappa, brute_kappa(g)) << "seed " << seed;
    EXPECT_LE(kappa, g.min_degree());
  }
}

TEST(MinimumCuts, CycleHasNineNonAdjacentPairs) {
  auto cuts = enumerate_minimum_cuts(cycle_graph(6), 2);
  ASSERT_EQ(cuts.size(), 9u);
  for (const auto& c : cuts) {
    const int diff = static_cast<int>(c[1]) - static_cast<int>(c[0]);
    EXPECT_TRUE(diff % 6 != 1 && diff % 6 != 5);
  }
  EXPECT_TRUE(std::is_sorted(cuts.begin(), cuts.end()));
}

TEST(MinimumCuts, K4MinusEdge) {
  auto cuts = enumerate_minimum_cuts(k4_minus_edge(), 2);
  ASSERT_EQ(cuts.size(), 1u);
  EXPECT_EQ(cuts[0], (VertexSet{0, 1}));
}

TEST(MinimumCuts, DCell22AreVertexNeighborhoods) {
  auto g = build_dcell(2, 2);
  auto cuts = enumerate_minimum_cuts(g, 3);
  ASSERT_EQ(cuts.size(), 42u);
  std::set<VertexSet> neighborhoods;
  for (Vertex v = 0; v < g.vertex_count(); ++v) neighborhoods.insert(neighbors(g, v));
  for (const auto& c : cuts) EXPECT_TRUE(neighborhoods.count(c));
}

TEST(MinimumCuts, EveryCutDisconnectsNoSmallerSetDoes) {
  auto g = build_dcell(1, 3);
  const auto kappa = min_vertex_cut_size(g);
  for (const auto& c : enumerate_minimum_cuts(g, kappa)) EXPECT_TRUE(connected_components(g, c).disconnected());
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Vertex> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(kappa - 1);
    EXPECT_FALSE(connected_components(g, VertexSet(all)).disconnected());
  }
}

TEST(MinimumCuts, BudgetRefusesInsteadOfTruncating) {
  EXPECT_THROW(enumerate_minimum_cuts(build_dcell(2, 2), 3, Budget{1000}), BudgetExceeded);
}

TEST(Budget, BinomialAndSubsetCounts) {
  EXPECT_EQ(binomial(42, 3), 11480u);
  EXPECT_EQ(binomial(5, 7), 0u);
  EXPECT_EQ(binomial(200, 100), std::numeric_limits<std::uint64_t>::max());
  EXPECT_EQ(subsets_up_to(6, 0, 6), 64u);
  EXPECT_EQ(binomial(60, 30), 118264581564861424ULL);
}

TEST(Budget, CombinationsAreLexicographic) {
  std::vector<std::vector<Vertex>> seen;
  for_each_combination(5, 3, [&](std::span<const Vertex> c) {
    seen.emplace_back(c.begin(), c.end());
    return true;
  });
  EXPECT_EQ(seen.size(), 10u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(seen.front(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(seen.back(), (std::vector<Vertex>{2, 3, 4}));
}
