// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dcdiag/dcell.hpp"
#include "dcdiag/permutation_graphs.hpp"

namespace dcdiag {

enum class Family { dcell, nk_star, arrangement, star, alt_group_network, alt_group_graph };

inline constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::dcell: return "dcell";
    case Family::nk_star: return "nk-star";
    case Family::arrangement: return "arrangement";
    case Family::star: return "star";
    case Family::alt_group_network: return "alt-group-network";
    case Family::alt_group_graph: return "alt-group-graph";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (auto f : {Family::dcell, Family::nk_star, Family::arrangement, Family::star, Family::alt_group_network,
                 Family::alt_group_graph})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

/// Family plus its integer parameters. k is ignored by the single-parameter
/// families (star, alt-group-*).
struct TopologyParams {
  Family family = Family::dcell;
  int n = 2;
  int k = 1;

  /// Throws std::invalid_argument naming the violated range.
  void validate() const {
    auto bad = [&](const std::string& rule) {
      throw std::invalid_argument(std::string(to_string(family)) + " requires " + rule + " (got n=" +
                                  std::to_string(n) + ", k=" + std::to_string(k) + ")");
    };
    switch (family) {
      case Family::dcell:
        if (k < 0 || n < 2) bad("k >= 0 and n >= 2");
        break;
      case Family::nk_star:
      case Family::arrangement:
        if (k < 1 || k > n - 1) bad("1 <= k <= n-1");
        break;
      case Family::star:
        if (n < 2) bad("n >= 2");
        break;
      case Family::alt_group_network:
      case Family::alt_group_graph:
        if (n < 3) bad("n >= 3");
        break;
    }
  }

  /// The (family, n, k) actually built: star / alt-group-* resolve to their
  /// permutation-family realisation.
  TopologyParams resolved() const {
    switch (family) {
      case Family::star: return {Family::nk_star, n, n - 1};
      case Family::alt_group_network: return {Family::nk_star, n, n - 2};
      case Family::alt_group_graph: return {Family::arrangement, n, n - 2};
      default: return *this;
    }
  }

  std::string describe() const {
    switch (family) {
      case Family::dcell: return "D_{" + std::to_string(k) + "," + std::to_string(n) + "}";
      case Family::nk_star: return "S_{" + std::to_string(n) + "," + std::to_string(k) + "}";
      case Family::arrangement: return "A_{" + std::to_string(n) + "," + std::to_string(k) + "}";
      case Family::star: return "S_" + std::to_string(n);
      case Family::alt_group_network: return "AN_" + std::to_string(n);
      case Family::alt_group_graph: return "AG_" + std::to_string(n);
    }
    return "?";
  }
};

/// star(n) = S_{n,n-1}; alt-group-network(n) = S_{n,n-2};
/// alt-group-graph(n) = A_{n,n-2}.
inline Graph build_named(const TopologyParams& params, Budget budget = {}) {
  params.validate();
  auto r = params.resolved();
  switch (r.family) {
    case Family::dcell: return build_dcell(r.k, r.n, budget);
    case Family::nk_star: return build_nk_star(r.n, r.k, budget);
    case Family::arrangement: return build_arrangement(r.n, r.k, budget);
    default: break;
  }
  throw std::logic_error("unresolved family");
}

}  // namespace dcdiag
