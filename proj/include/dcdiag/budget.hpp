// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcdiag/graph.hpp"

namespace dcdiag {

/// Raised when an exhaustive search would examine more candidates than the
/// caller allowed. Searches never truncate silently.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t needed, std::uint64_t cap)
      : std::runtime_error(what + ": needs " + std::to_string(needed) +
                           " candidates, budget is " + std::to_string(cap)),
        needed_(needed),
        cap_(cap) {}

  std::uint64_t needed() const noexcept { return needed_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t needed_;
  std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Cap on the number of candidates (subsets, search nodes, samples) one call
/// may examine.
struct Budget {
  std::uint64_t max_candidates = kDefaultBudget;

  void require(std::uint64_t needed, const std::string& what) const {
    if (needed > max_candidates) throw BudgetExceeded(what, needed, max_candidates);
  }
};

/// Binomial coefficient, saturating at uint64 max.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n-k+i) is divisible by i; cancel the gcd first to stay exact.
    const std::uint64_t d = std::gcd(r, i);
    const std::uint64_t factor = (n - k + i) / (i / d);
    r /= d;
    if (r > kMax / factor) return kMax;
    r *= factor;
  }
  return r;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

/// Number of subsets of an n-set with size in [lo, hi].
inline std::uint64_t subsets_up_to(std::uint64_t n, std::uint64_t lo, std::uint64_t hi) {
  std::uint64_t total = 0;
  for (std::uint64_t s = lo; s <= hi && s <= n; ++s) total = saturating_add(total, binomial(n, s));
  return total;
}

/// Visits every r-subset of {0..n-1} in lexicographic order of the sorted id
/// tuple. The visitor returns false to stop early; the function returns false
/// iff it was stopped.
template <class Visitor>
bool for_each_combination(std::size_t n, std::size_t r, Visitor&& visit) {
  if (r > n) return true;
  std::vector<Vertex> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = static_cast<Vertex>(i);
  while (true) {
    if (!visit(std::span<const Vertex>(c))) return false;
    // advance: rightmost position that can still move
    std::size_t i = r;
    while (i > 0 && c[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return true;
    ++c[i - 1];
    for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

/// Size-ascending, then lexicographic, over all subsets with size in [lo, hi].
template <class Visitor>
bool for_each_subset(std::size_t n, std::size_t lo, std::size_t hi, Visitor&& visit) {
  for (std::size_t s = lo; s <= hi && s <= n; ++s)
    if (!for_each_combination(n, s, visit)) return false;
  return true;
}

}  // namespace dcdiag
