// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcdiag/budget.hpp"
#include "dcdiag/graph.hpp"

namespace dcdiag {

/// Number of k-arrangements of [n]: n!/(n-k)!.
inline std::uint64_t arrangement_count(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("arrangement_count requires 0 <= k <= n");
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) {
    auto factor = static_cast<std::uint64_t>(n - i);
    if (c > UINT64_MAX / factor) throw std::overflow_error("arrangement count overflows 64 bits");
    c *= factor;
  }
  return c;
}

/// p_1 ... p_k: pairwise distinct symbols from [n] = {1..n}.
class ArrangementLabel {
 public:
  ArrangementLabel(std::vector<int> symbols, int n) : p_(std::move(symbols)), n_(n) {
    if (p_.empty() || static_cast<int>(p_.size()) > n_)
      throw std::invalid_argument("arrangement length must be in [1, n]");
    std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
    for (int s : p_) {
      if (s < 1 || s > n_) throw std::invalid_argument("arrangement symbol " + std::to_string(s) + " outside [1,n]");
      if (used[static_cast<std::size_t>(s)]) throw std::invalid_argument("arrangement repeats symbol " + std::to_string(s));
      used[static_cast<std::size_t>(s)] = true;
    }
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(p_.size()); }
  /// 1-based position, as in p_1 ... p_k.
  int at(int position) const { return p_.at(static_cast<std::size_t>(position - 1)); }
  const std::vector<int>& symbols() const noexcept { return p_; }

  bool uses(int symbol) const { return std::find(p_.begin(), p_.end(), symbol) != p_.end(); }

  /// Lexicographic rank among all k-arrangements of [n].
  std::uint64_t rank() const {
    std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
    std::uint64_t r = 0;
    for (int i = 0; i < k(); ++i) {
      int smaller = 0;
      for (int s = 1; s < p_[static_cast<std::size_t>(i)]; ++s) smaller += !used[static_cast<std::size_t>(s)];
      r += static_cast<std::uint64_t>(smaller) * arrangement_count(n_ - i - 1, k() - i - 1);
      used[static_cast<std::size_t>(p_[static_cast<std::size_t>(i)])] = true;
    }
    return r;
  }

  static ArrangementLabel unrank(std::uint64_t r, int n, int k) {
    if (r >= arrangement_count(n, k)) throw std::out_of_range("arrangement rank out of range");
    std::vector<int> free(static_cast<std::size_t>(n));
    std::iota(free.begin(), free.end(), 1);
    std::vector<int> p;
    for (int i = 0; i < k; ++i) {
      auto block = arrangement_count(n - i - 1, k - i - 1);
      auto idx = static_cast<std::size_t>(r / block);
      r %= block;
      p.push_back(free[idx]);
      free.erase(free.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return ArrangementLabel(std::move(p), n);
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(p_[i]);
    }
    return s;
  }

  friend bool operator==(const ArrangementLabel&, const ArrangementLabel&) = default;

 private:
  std::vector<int> p_;
  int n_;
};

namespace detail {

inline void check_nk(int n, int k, const char* who) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument(std::string(who) + " requires 1 <= k <= n-1 (got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
}

template <class Neighbors>
Graph build_arrangement_family(int n, int k, Budget budget, Neighbors&& for_each_neighbor) {
  const auto order = arrangement_count(n, k);
  budget.require(order, "arrangement family vertex count");
  if (order > UINT32_MAX) throw std::overflow_error("graph too large for 32-bit ids");
  GraphBuilder b(order);
  for (std::uint64_t id = 0; id < order; ++id) {
    auto p = ArrangementLabel::unrank(id, n, k);
    auto symbols = p.symbols();
    for_each_neighbor(symbols, [&](const std::vector<int>& q) {
      auto other = ArrangementLabel(q, n).rank();
      if (other > id) b.add_edge(static_cast<Vertex>(id), static_cast<Vertex>(other));
    });
    b.set_label(static_cast<Vertex>(id), p.to_string());
  }
  return std::move(b).build();
}

}  // namespace detail

/// (n,k)-star S_{n,k}: swap-edges exchange p_1 with p_i (2 <= i <= k);
/// unswap-edges replace p_1 by an unused symbol.
inline Graph build_nk_star(int n, int k, Budget budget = {}) {
  detail::check_nk(n, k, "build_nk_star");
  return detail::build_arrangement_family(n, k, budget, [n, k](std::vector<int>& p, auto&& emit) {
    for (int i = 1; i < k; ++i) {
      std::swap(p[0], p[static_cast<std::size_t>(i)]);
      emit(p);
      std::swap(p[0], p[static_cast<std::size_t>(i)]);
    }
    const int first = p[0];
    for (int s = 1; s <= n; ++s) {
      if (std::find(p.begin(), p.end(), s) != p.end()) continue;
      p[0] = s;
      emit(p);
      p[0] = first;
    }
  });
}

/// (n,k)-arrangement graph A_{n,k}: adjacent iff labels differ in exactly one
/// position.
inline Graph build_arrangement(int n, int k, Budget budget = {}) {
  detail::check_nk(n, k, "build_arrangement");
  return detail::build_arrangement_family(n, k, budget, [n, k](std::vector<int>& p, auto&& emit) {
    for (int i = 0; i < k; ++i) {
      const int keep = p[static_cast<std::size_t>(i)];
      for (int s = 1; s <= n; ++s) {
        if (std::find(p.begin(), p.end(), s) != p.end()) continue;
        p[static_cast<std::size_t>(i)] = s;
        emit(p);
        p[static_cast<std::size_t>(i)] = keep;
      }
    }
  });
}

}  // namespace dcdiag
