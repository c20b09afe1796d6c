// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "dcdiag/topology.hpp"

namespace dcdiag {

/// A closed form was asked for outside the range where it is known to hold.
class ClosedFormRangeError : public std::invalid_argument {
 public:
  ClosedFormRangeError(const std::string& formula, const std::string& constraint)
      : std::invalid_argument(formula + " requires " + constraint), constraint_(constraint) {}
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

namespace detail {

struct FormulaValue {
  std::optional<long long> value;
  std::string constraint;  // set whenever the parameters are out of range
};

inline FormulaValue kappa_g_formula(const TopologyParams& p, long long g) {
  const long long n = p.n, k = p.k;
  switch (p.family) {
    case Family::dcell:
      if (k >= 1 && n >= 2 && g >= 0 && g <= n - 1) return {(g + 1) * (k - 1) + n, {}};
      return {std::nullopt, "k >= 1, n >= 2, 0 <= g <= n-1"};
    case Family::nk_star:
      if (k >= 2 && k <= n - 1 && g >= 0 && g <= n - k) return {n + g * (k - 2) - 1, {}};
      return {std::nullopt, "2 <= k <= n-1, 0 <= g <= n-k"};
    case Family::arrangement:
      if (k >= 3 && k <= n - 1 && g >= 1 && g <= std::min(k - 2, n - k))
        return {((g + 1) * k - g) * (n - k) - g, {}};
      return {std::nullopt, "3 <= k <= n-1, 1 <= g <= min(k-2, n-k)"};
    case Family::star:
      if (n >= 3 && g >= 0 && g <= 1) return {n + g * (n - 3) - 1, {}};
      return {std::nullopt, "n >= 3, 0 <= g <= 1"};
    case Family::alt_group_network:
      if (n >= 4 && g >= 0 && g <= 2) return {n + g * (n - 4) - 1, {}};
      return {std::nullopt, "n >= 4, 0 <= g <= 2"};
    case Family::alt_group_graph:
      if (n >= 5 && g >= 1 && g <= std::min(n - 4, 2LL)) return {((g + 1) * (n - 2) - g) * 2 - g, {}};
      return {std::nullopt, "n >= 5, 1 <= g <= min(n-4, 2)"};
  }
  return {std::nullopt, "known family"};
}

inline FormulaValue tg_formula(const TopologyParams& p, long long g) {
  const long long n = p.n, k = p.k;
  switch (p.family) {
    case Family::dcell:
      if (k >= 2 && n >= 2 && g >= 1 && g <= n - 1) return {(g + 1) * (k - 1) + n + g, {}};
      return {std::nullopt, "k >= 2, n >= 2, 1 <= g <= n-1"};
    case Family::nk_star:
      if (k >= 3 && k <= n - 1 && g >= 1 && g <= n - k) return {n + g * (k - 1) - 1, {}};
      return {std::nullopt, "3 <= k <= n-1, 1 <= g <= n-k"};
    case Family::arrangement:
      if (k >= 3 && k <= n - 1 && g >= 1 && g <= std::min(k - 2, n - k)) return {((g + 1) * k - g) * (n - k), {}};
      return {std::nullopt, "3 <= k <= n-1, 1 <= g <= min(k-2, n-k)"};
    case Family::star:
      if (n >= 4 && g == 1) return {2 * n - 3, {}};
      return {std::nullopt, "n >= 4, g = 1"};
    case Family::alt_group_network:
      // S_{n,n-2} value; see README for why this is not n+g(n-2)-1.
      if (n >= 5 && g >= 1 && g <= 2) return {n + g * (n - 3) - 1, {}};
      return {std::nullopt, "n >= 5, 1 <= g <= 2"};
    case Family::alt_group_graph:
      if (n >= 5 && g >= 1 && g <= std::min(n - 4, 2LL)) return {2 * ((g + 1) * (n - 2) - g), {}};
      return {std::nullopt, "n >= 5, 1 <= g <= min(n-4, 2)"};
  }
  return {std::nullopt, "known family"};
}

inline std::size_t unwrap(const FormulaValue& v, const TopologyParams& p, const char* what) {
  if (!v.value) throw ClosedFormRangeError(std::string(what) + "(" + p.describe() + ")", v.constraint);
  return static_cast<std::size_t>(*v.value);
}

}  // namespace detail

/// kappa^g for the named family, or ClosedFormRangeError.
inline std::size_t kappa_g_closed_form(const TopologyParams& p, std::size_t g) {
  return detail::unwrap(detail::kappa_g_formula(p, static_cast<long long>(g)), p, "kappa^g");
}

/// t_g under both PMC and MM for the named family, or ClosedFormRangeError.
inline std::size_t closed_form_tg(const TopologyParams& p, std::size_t g) {
  return detail::unwrap(detail::tg_formula(p, static_cast<long long>(g)), p, "t_g");
}

/// Violated constraint for kappa^g, or nullopt when in range.
inline std::optional<std::string> kappa_g_range_violation(const TopologyParams& p, std::size_t g) {
  auto v = detail::kappa_g_formula(p, static_cast<long long>(g));
  if (v.value) return std::nullopt;
  return v.constraint;
}

inline std::optional<std::string> tg_range_violation(const TopologyParams& p, std::size_t g) {
  auto v = detail::tg_formula(p, static_cast<long long>(g));
  if (v.value) return std::nullopt;
  return v.constraint;
}

}  // namespace dcdiag
