/*
   Copyright 2026 the deutsch-paths authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DEUTSCH_CLOSED_FORMS_HPP
#define DEUTSCH_CLOSED_FORMS_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "deutsch/rational.hpp"
#include "deutsch/series.hpp"
#include "deutsch/slices.hpp"
#include "deutsch/tpoly.hpp"

namespace deutsch::closedforms {

/// The two kernel roots as power series in z. u1 itself has a simple pole at
/// z = 0, so everything here works with w_i = z * u_i instead. The labeling
/// is pinned by the constant terms: w1(0) = 1 (so 1/w1 is the closed-path
/// series) and w2(0) = 0.
template <CoefficientRing R>
struct KernelRoots {
  Series<R> w1;
  Series<R> w2;
};

namespace detail {

inline Series<Rational> zpoly(std::initializer_list<long> coeffs, int order) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Series<Rational>(std::move(c), order);
}

inline Series<TPoly> zpoly_t(std::vector<TPoly> coeffs, int order) {
  return Series<TPoly>(std::move(coeffs), order);
}

/// First index at which two equally truncated series differ.
template <CoefficientRing R>
int first_difference(const Series<R>& a, const Series<R>& b) {
  for (int n = 0; n <= a.order() && n <= b.order(); ++n) {
    if (!(a[n] == b[n])) return n;
  }
  return -1;
}

template <CoefficientRing R>
void require_equal(const Series<R>& a, const Series<R>& b, const std::string& what) {
  if (a == b) return;
  const int n = first_difference(a, b);
  throw std::logic_error(what + ": computation routes disagree at z^" + std::to_string(n));
}

}  // namespace detail

/// Radicand of the kernel roots: 1 - 2z - 3z^2 = (1 - 3z)(1 + z).
inline Series<Rational> discriminant(int order) {
  return detail::zpoly({1, -2, -3}, order);
}

inline Series<Rational> sqrt_discriminant(int order) { return sqrt(discriminant(order)); }

inline KernelRoots<Rational> kernel_roots(int order) {
  const Series<Rational> r = sqrt_discriminant(order);
  const Series<Rational> lead = detail::zpoly({1, 1}, order);
  const Rational half(1, 2);
  return {(lead + r) * half, (lead - r) * half};
}

/// Closed paths via the radical form (1 + z - sqrt(1-2z-3z^2)) / (2z(1+z)).
inline Series<Rational> phi0_radical(int order) {
  const Series<Rational> num = detail::zpoly({1, 1}, order + 1) - sqrt_discriminant(order + 1);
  return num.shifted_down(1) / detail::zpoly({2, 2}, order);
}

/// Closed paths as the reciprocal kernel root 1/(z u1) = 1/w1.
inline Series<Rational> phi0_from_root(int order) {
  return Series<Rational>::constant(1, order) / kernel_roots(order).w1;
}

/// The Motzkin substitution series v(z) = z M(z); v(0) = 0.
inline Series<Rational> v_series(int order) {
  const Series<Rational> num = detail::zpoly({1, -1}, order + 1) - sqrt_discriminant(order + 1);
  return num.shifted_down(1) * Rational(1, 2);
}

/// Closed paths through the v-substitution: (1 + v + v^2)/(1 + v) at v = v(z).
inline Series<Rational> phi0_v_form(int order) {
  const Series<Rational> in_v = detail::zpoly({1, 1, 1}, order) / detail::zpoly({1, 1}, order);
  return compose(in_v, v_series(order));
}

/// Closed Deutsch paths by length (the Riordan numbers). Cross-checked
/// between the radical form and the reciprocal root.
inline Series<Rational> phi0(int order) {
  Series<Rational> a = phi0_radical(order);
  detail::require_equal(a, phi0_from_root(order), "phi0");
  return a;
}

/// Paths ending with a down-run (plus the empty path), split by end level:
/// level 0 is 1/w1 and level j >= 1 is z^j (w1^-(j+1) - w1^-j).
inline LevelSeries<Rational> phi_levels(int order) {
  const Series<Rational> inv_w1 =
      Series<Rational>::constant(1, order) / kernel_roots(order).w1;
  LevelSeries<Rational> out;
  out.levels.reserve(static_cast<size_t>(order) + 1);
  out.levels.push_back(inv_w1);
  Series<Rational> power = inv_w1;  // (1/w1)^(j) while handling level j
  for (int j = 1; j <= order; ++j) {
    const Series<Rational> next = power * inv_w1;  // (1/w1)^(j+1)
    out.levels.push_back((next - power).shifted_up(j));
    power = next;
  }
  return out;
}

/// Motzkin numbers via (1 - z - sqrt(1-2z-3z^2)) / (2 z^2).
inline Series<Rational> motzkin(int order) {
  const Series<Rational> num = detail::zpoly({1, -1}, order + 2) - sqrt_discriminant(order + 2);
  return num.shifted_down(2) * Rational(1, 2);
}

/// Open Deutsch paths (any end level): the level sum times 1/(1-z) for a
/// trailing run of up-steps. Coincides with the Motzkin series.
inline Series<Rational> open_paths(int order) {
  const LevelSeries<Rational> levels = phi_levels(order);
  Series<Rational> total(order);
  for (const auto& s : levels.levels) total += s;
  return total / detail::zpoly({1, -1}, order);
}

/// First-return block of the Stanley decomposition: nonempty closed paths
/// that touch the x-axis only at their endpoints and whose final down-run
/// starts at an odd level. Equals z^2 / (1 - z^2 (1+z)^2 / w1^2).
inline Series<Rational> stanley_block(int order) {
  const Series<Rational> w1 = kernel_roots(order).w1;
  const Series<Rational> zp = detail::zpoly({0, 1, 1}, order);  // z(1+z)
  const Series<Rational> ratio = (zp * zp) / (w1 * w1);
  const Series<Rational> one = Series<Rational>::constant(1, order);
  return (one / (one - ratio)).shifted_up(2);
}

inline Series<Rational> stanley_sequence_form(int order) {
  const Series<Rational> one = Series<Rational>::constant(1, order);
  return one / (one - stanley_block(order));
}

inline Series<Rational> stanley_radical(int order) {
  return (detail::zpoly({3, 1}, order) - sqrt_discriminant(order)) / detail::zpoly({2, 2}, order);
}

inline Series<Rational> stanley_v_form(int order) {
  const Series<Rational> in_v =
      detail::zpoly({1, 2, 2}, order) / detail::zpoly({1, 2, 1}, order);
  return compose(in_v, v_series(order));
}

/// Closed paths in which every maximal down-run to the x-axis starts at an
/// odd level. Computed by all three routes, which must agree exactly.
inline Series<Rational> stanley_series(int order) {
  Series<Rational> seq = stanley_sequence_form(order);
  detail::require_equal(seq, stanley_radical(order), "stanley_series(radical)");
  detail::require_equal(seq, stanley_v_form(order), "stanley_series(v)");
  return seq;
}

/// Radicand of the marked kernel roots; reduces to 1 - 2z - 3z^2 at t = 1.
inline Series<TPoly> discriminant_marked(int order) {
  return detail::zpoly_t(
      {TPoly(1), TPoly(-2), TPoly(std::vector<Rational>{-1, -2}),
       TPoly(std::vector<Rational>{-2, 2}), TPoly(std::vector<Rational>{-3, 2, 1})},
      order);
}

namespace detail {

// 1 + z + (1-t) z^2: the numerator polynomial of both marked roots.
inline Series<TPoly> marked_root_numerator(int order) {
  return zpoly_t({TPoly(1), TPoly(1), TPoly(std::vector<Rational>{1, -1})}, order);
}

// 1 + (1-t) z^2: the factor kappa with w_i = z u_i = (num +- sqrt) / (2 kappa).
inline Series<TPoly> marked_kappa(int order) {
  return zpoly_t({TPoly(1), TPoly(0), TPoly(std::vector<Rational>{1, -1})}, order);
}

}  // namespace detail

inline KernelRoots<TPoly> kernel_roots_marked(int order) {
  const Series<TPoly> r = sqrt(discriminant_marked(order));
  const Series<TPoly> num = detail::marked_root_numerator(order);
  const Series<TPoly> two_kappa = detail::marked_kappa(order) * TPoly(2);
  return {(num + r) / two_kappa, (num - r) / two_kappa};
}

/// Residual of the marked kernel quadratic at w: z kappa w^2 - num z w +
/// (1+z) z^2. Identically zero for both marked roots.
inline Series<TPoly> marked_kernel_residual(const Series<TPoly>& w) {
  const int order = w.order();
  const Series<TPoly> a = detail::marked_kappa(order).shifted_up(1);
  const Series<TPoly> b = -detail::marked_root_numerator(order);
  const Series<TPoly> c = detail::zpoly_t({TPoly(1), TPoly(1)}, order).shifted_up(2);
  return a * w * w + b * w.shifted_up(1) + c;
}

inline Series<TPoly> phi0_t_radical(int order) {
  const Series<TPoly> num =
      detail::marked_root_numerator(order + 1) - sqrt(discriminant_marked(order + 1));
  // 2 (1+z) kappa = 2 + 2z + 2(1-t) z^2 + 2(1-t) z^3
  const Series<TPoly> den = detail::zpoly_t(
      {TPoly(2), TPoly(2), TPoly(std::vector<Rational>{2, -2}),
       TPoly(std::vector<Rational>{2, -2})},
      order);
  return num.shifted_down(1) / den;
}

inline Series<TPoly> phi0_t_from_root(int order) {
  // Only w1 is needed here; skip the second root division.
  const Series<TPoly> w1 =
      (detail::marked_root_numerator(order) + sqrt(discriminant_marked(order))) /
      (detail::marked_kappa(order) * TPoly(2));
  return Series<TPoly>::constant(TPoly(1), order) / (detail::marked_kappa(order) * w1);
}

/// Closed paths with every up-run of length one marked by t. Both routes are
/// computed and must agree; each z^n coefficient has t-degree at most n/2
/// (a marked up-run consumes one up- and at least one down-step).
inline Series<TPoly> phi0_t(int order) {
  Series<TPoly> a = phi0_t_radical(order);
  detail::require_equal(a, phi0_t_from_root(order), "phi0_t");
  for (int n = 0; n <= order; ++n) {
    if (a[n].degree() > n / 2) {
      throw std::logic_error("phi0_t: marker degree exceeds n/2 at z^" + std::to_string(n));
    }
  }
  return a;
}

inline Series<Rational> mean_numerator_derivative(int order) {
  return map_coeffs(phi0_t(order), [](const TPoly& p) { return p.derivative_at_one(); });
}

/// d/dt at t=1 through the v-substitution: v^2 / ((1-v)(1+v)^2(1+v+v^2)).
inline Series<Rational> mean_numerator_v_form(int order) {
  const Series<Rational> one_minus = detail::zpoly({1, -1}, order);
  const Series<Rational> one_plus_sq = detail::zpoly({1, 2, 1}, order);
  const Series<Rational> cyclic = detail::zpoly({1, 1, 1}, order);
  const Series<Rational> in_v =
      Series<Rational>::monomial(1, 2, order) / (one_minus * one_plus_sq * cyclic);
  return compose(in_v, v_series(order));
}

/// Total number of marked up-runs over all closed paths of each length.
/// Both computation routes must agree exactly.
inline Series<Rational> mean_numerator(int order) {
  Series<Rational> d = mean_numerator_derivative(order);
  detail::require_equal(d, mean_numerator_v_form(order), "mean_numerator");
  return d;
}

}  // namespace deutsch::closedforms

#endif  // DEUTSCH_CLOSED_FORMS_HPP
