// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcdiag/budget.hpp"
#include "dcdiag/graph.hpp"

namespace dcdiag {

/// t_{k,n}: order of D_{k,n}. t_{0,n} = n, t_{i,n} = t_{i-1,n} (t_{i-1,n} + 1).
/// Throws std::overflow_error when the value does not fit in 64 bits.
inline std::uint64_t dcell_order(int k, int n) {
  if (k < 0 || n < 2) throw std::invalid_argument("dcell_order requires k >= 0 and n >= 2");
  std::uint64_t t = static_cast<std::uint64_t>(n);
  for (int i = 1; i <= k; ++i) {
    if (t > std::numeric_limits<std::uint64_t>::max() / (t + 1))
      throw std::overflow_error("dcell_order(" + std::to_string(k) + "," + std::to_string(n) + ") overflows 64 bits");
    t *= t + 1;
  }
  return t;
}

/// Vertex label u_k ... u_1 u_0 of D_{k,n}. u_0 indexes a vertex of the base
/// clique D_{0,n}; u_i (i >= 1) indexes one of the t_{i-1,n} + 1 copies of
/// D_{i-1,n}.
class DCellLabel {
 public:
  /// Digits most significant first: {u_k, ..., u_0}.
  DCellLabel(std::vector<std::uint64_t> digits_msb_first, int n) : digits_(std::move(digits_msb_first)), n_(n) {
    if (digits_.empty()) throw std::invalid_argument("DCell label needs at least one digit");
    validate();
  }

  int k() const noexcept { return static_cast<int>(digits_.size()) - 1; }
  int n() const noexcept { return n_; }

  /// u_i, i in [0, k].
  std::uint64_t digit(int i) const {
    if (i < 0 || i > k()) throw std::out_of_range("DCell digit position " + std::to_string(i));
    return digits_[digits_.size() - 1 - static_cast<std::size_t>(i)];
  }

  const std::vector<std::uint64_t>& digits() const noexcept { return digits_; }

  /// "u_k,...,u_0"
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(digits_[i]);
    }
    return s;
  }

  static DCellLabel parse(const std::string& text, int n) {
    std::vector<std::uint64_t> digits;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      auto piece = text.substr(pos, comma - pos);
      if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed DCell label '" + text + "'");
      digits.push_back(std::stoull(piece));
      pos = comma + 1;
    }
    return DCellLabel(std::move(digits), n);
  }

  friend bool operator==(const DCellLabel&, const DCellLabel&) = default;

 private:
  void validate() const {
    if (n_ < 2) throw std::invalid_argument("DCell requires n >= 2");
    if (digit(0) >= static_cast<std::uint64_t>(n_))
      throw std::invalid_argument("DCell digit u_0 = " + std::to_string(digit(0)) + " outside [0," +
                                  std::to_string(n_ - 1) + "]");
    for (int i = 1; i <= k(); ++i) {
      auto hi = dcell_order(i - 1, n_);
      if (digit(i) > hi)
        throw std::invalid_argument("DCell digit u_" + std::to_string(i) + " = " + std::to_string(digit(i)) +
                                    " outside [0," + std::to_string(hi) + "]");
    }
  }

  std::vector<std::uint64_t> digits_;
  int n_;
};

/// Mixed-radix rank of the suffix u_{below_position-2} ... u_0, i.e.
/// u_0 + sum_{j=1}^{below_position-2} u_j t_{j-1,n}. below_position = k+2
/// ranks the whole label (this is the vertex id); below_position = 1 ranks the
/// empty suffix (0).
inline std::uint64_t dcell_uid(const DCellLabel& label, int below_position) {
  if (below_position < 1 || below_position > label.k() + 2)
    throw std::invalid_argument("dcell_uid below_position " + std::to_string(below_position) + " outside [1," +
                                std::to_string(label.k() + 2) + "]");
  if (below_position == 1) return 0;
  std::uint64_t r = label.digit(0);
  for (int j = 1; j <= below_position - 2; ++j) r += label.digit(j) * dcell_order(j - 1, label.n());
  return r;
}

inline std::uint64_t dcell_vertex_id(const DCellLabel& label) { return dcell_uid(label, label.k() + 2); }

namespace detail {

inline std::vector<std::uint64_t> dcell_orders(int k, int n) {
  std::vector<std::uint64_t> t(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) t[static_cast<std::size_t>(i)] = dcell_order(i, n);
  return t;
}

}  // namespace detail

inline DCellLabel dcell_label_of(std::uint64_t id, int k, int n) {
  auto t = detail::dcell_orders(k, n);
  if (id >= t.back()) throw std::out_of_range("DCell id " + std::to_string(id) + " out of range");
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(k) + 1);
  for (int i = k; i >= 1; --i) {
    digits[static_cast<std::size_t>(k - i)] = id / t[static_cast<std::size_t>(i - 1)];
    id %= t[static_cast<std::size_t>(i - 1)];
  }
  digits.back() = id;
  return DCellLabel(std::move(digits), n);
}

/// Literal adjacency test: some level l has equal digits above position l-1,
/// different digits at l-1, and (for l > 1) the linking equations
///   u_{l-1} = uid(v below l),  v_{l-1} = uid(u below l) + 1
/// for the orientation with u_{l-1} < v_{l-1}. Level 1 is the base clique.
inline bool dcell_adjacent(const DCellLabel& a, const DCellLabel& b) {
  if (a.k() != b.k() || a.n() != b.n()) throw std::invalid_argument("labels from different DCells");
  int p = a.k();
  while (p >= 0 && a.digit(p) == b.digit(p)) --p;
  if (p < 0) return false;
  if (p == 0) return true;
  const DCellLabel& u = a.digit(p) < b.digit(p) ? a : b;
  const DCellLabel& v = a.digit(p) < b.digit(p) ? b : a;
  const int level = p + 1;
  return u.digit(p) == dcell_uid(v, level) && v.digit(p) == dcell_uid(u, level) + 1;
}

/// D_{k,n}. Vertex ids are full-label ranks; labels are "u_k,...,u_0".
inline Graph build_dcell(int k, int n, Budget budget = {}) {
  if (k < 0 || n < 2) throw std::invalid_argument("build_dcell requires k >= 0 and n >= 2");
  auto t = detail::dcell_orders(k, n);
  const std::uint64_t order = t.back();
  budget.require(order, "build_dcell vertex count");
  if (order > std::numeric_limits<Vertex>::max()) throw std::overflow_error("DCell too large for 32-bit ids");

  GraphBuilder b(order);
  for (std::uint64_t id = 0; id < order; ++id) {
    const auto u = static_cast<Vertex>(id);
    // base clique D_{0,n}: same digits above position 0
    const std::uint64_t base = id - id % static_cast<std::uint64_t>(n);
    for (std::uint64_t x = base; x < base + static_cast<std::uint64_t>(n); ++x)
      if (x > id) b.add_edge(u, static_cast<Vertex>(x));
    // level p link: copy c of D_{p-1,n}, suffix rank r. Copies i < j are
    // joined by [i, j-1] -- [j, i].
    for (int p = 1; p <= k; ++p) {
      const std::uint64_t block = t[static_cast<std::size_t>(p - 1)];
      const std::uint64_t c = (id % t[static_cast<std::size_t>(p)]) / block;
      const std::uint64_t r = id % block;
      const std::uint64_t higher = id - id % t[static_cast<std::size_t>(p)];
      if (r >= c) {
        const std::uint64_t partner = higher + (r + 1) * block + c;
        b.add_edge(u, static_cast<Vertex>(partner));
      }
    }
    b.set_label(u, dcell_label_of(id, k, n).to_string());
  }
  return std::move(b).build();
}

struct DCellStructureReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string clause) {
    ok = false;
    if (std::find(violations.begin(), violations.end(), clause) == violations.end())
      violations.push_back(std::move(clause));
  }
};

/// Checks the level-k decomposition of a D_{k,n} (k >= 1): (n+k-1)-regular,
/// exactly one edge between every pair of copies of D_{k-1,n}, external
/// degree exactly 1, and distinct extra neighbors within a copy.
inline DCellStructureReport validate_dcell_structure(const Graph& g, int k, int n) {
  if (k < 1) throw std::invalid_argument("validate_dcell_structure requires k >= 1");
  DCellStructureReport report;
  const auto order = dcell_order(k, n);
  if (g.vertex_count() != order) {
    report.fail("vertex count t_{k,n}");
    return report;
  }
  const std::uint64_t block = dcell_order(k - 1, n);
  const std::uint64_t copies = block + 1;
  auto copy_of = [&](Vertex v) { return v / block; };

  const auto degree = static_cast<std::size_t>(n + k - 1);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != degree) report.fail("regularity n+k-1");

  std::vector<std::uint32_t> between(copies * copies, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::size_t external = 0;
    for (Vertex w : g.neighbors(v)) {
      if (copy_of(w) == copy_of(v)) continue;
      ++external;
      if (v < w) ++between[copy_of(v) * copies + copy_of(w)];
    }
    if (external != 1) report.fail("external degree exactly 1");
  }
  for (std::uint64_t i = 0; i < copies; ++i)
    for (std::uint64_t j = i + 1; j < copies; ++j)
      if (between[i * copies + j] != 1) report.fail("one edge between copies");

  // distinct extra neighbors: within copy i, no outside vertex is the extra
  // neighbor of two different members
  for (std::uint64_t i = 0; i < copies; ++i) {
    std::vector<Vertex> extras;
    for (Vertex v = static_cast<Vertex>(i * block); v < (i + 1) * block; ++v)
      for (Vertex w : g.neighbors(v))
        if (copy_of(w) != i) extras.push_back(w);
    std::sort(extras.begin(), extras.end());
    if (std::adjacent_find(extras.begin(), extras.end()) != extras.end()) report.fail("distinct extra neighbors");
  }
  return report;
}

}  // namespace dcdiag
