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

#ifndef DEUTSCH_ASYMPTOTICS_HPP
#define DEUTSCH_ASYMPTOTICS_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "deutsch/closed_forms.hpp"
#include "deutsch/rational.hpp"
#include "deutsch/series.hpp"

namespace deutsch::asymptotics {

/// Thrown when a report is requested beyond the precomputed series order.
struct OrderTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact series shared by all reports: total closed-path counts and the
/// marked-up-run weighted counts.
struct SeriesContext {
  Series<Rational> total;
  Series<Rational> weighted;

  int order() const { return std::min(total.order(), weighted.order()); }
};

/// Route agreement for the weighted series is verified up to this order; at
/// larger truncations only the v-substitution route is computed, since the
/// marker-polynomial pipeline grows two orders of magnitude more expensive.
inline constexpr int kWeightedCrossCheckOrder = 200;

inline SeriesContext make_context(int order) {
  SeriesContext ctx{closedforms::phi0(order), closedforms::mean_numerator_v_form(order)};
  const int check = std::min(order, kWeightedCrossCheckOrder);
  closedforms::detail::require_equal(ctx.weighted.truncated(check),
                                     closedforms::mean_numerator_derivative(check),
                                     "asymptotics context");
  return ctx;
}

/// Natural log of a positive rational, safe for values far beyond double range.
inline double log_value(const Rational& q) {
  if (q.sign() <= 0) throw std::domain_error("log_value: argument must be positive");
  signed long num_exp = 0;
  signed long den_exp = 0;
  const mpz_class num = q.numerator();
  const mpz_class den = q.denominator();
  const double num_d = mpz_get_d_2exp(&num_exp, num.get_mpz_t());
  const double den_d = mpz_get_d_2exp(&den_exp, den.get_mpz_t());
  return std::log(num_d) - std::log(den_d) +
         std::numbers::ln2 * static_cast<double>(num_exp - den_exp);
}

/// Exact coefficients and their leading-order growth predictions for one n.
/// Exact values come straight from the series; floating point enters only in
/// the comparison fields. Relative errors are computed in log space, so they
/// stay meaningful when 3^n overflows a double.
struct AsymptoticReport {
  int n = 0;
  Rational exact_total;
  Rational exact_weighted;
  Rational mean_exact;

  double mean = 0;                 // exact_weighted / exact_total
  double predicted_mean = 0;       // 2n/27
  double total_prediction = 0;     // (3 sqrt(3)/8) 3^n / (sqrt(pi) n^(3/2))
  double weighted_prediction = 0;  // (sqrt(3)/36) 3^n / sqrt(pi n)

  double mean_rel_err = 0;      // |mean / predicted_mean - 1|
  double total_rel_err = 0;     // |exact_total / total_prediction - 1|
  double weighted_rel_err = 0;  // |exact_weighted / weighted_prediction - 1|
};

inline AsymptoticReport report(int n, const SeriesContext& ctx) {
  if (n < 2) throw std::invalid_argument("asymptotics report: n must be >= 2");
  if (n > ctx.order()) {
    throw OrderTooSmall("asymptotics report: series computed only to order " +
                        std::to_string(ctx.order()) + ", requested n = " + std::to_string(n));
  }

  AsymptoticReport r;
  r.n = n;
  r.exact_total = ctx.total[n];
  r.exact_weighted = ctx.weighted[n];
  r.mean_exact = r.exact_weighted / r.exact_total;
  r.mean = r.mean_exact.to_double();
  r.predicted_mean = 2.0 * n / 27.0;

  const double ln3 = std::log(3.0);
  const double ln_pi = std::log(std::numbers::pi);
  const double ln_n = std::log(static_cast<double>(n));
  const double ln_total_pred =
      std::log(3.0 * std::sqrt(3.0) / 8.0) + n * ln3 - 0.5 * ln_pi - 1.5 * ln_n;
  const double ln_weighted_pred =
      std::log(std::sqrt(3.0) / 36.0) + n * ln3 - 0.5 * (ln_pi + ln_n);

  r.total_prediction = std::exp(ln_total_pred);
  r.weighted_prediction = std::exp(ln_weighted_pred);
  r.mean_rel_err = std::fabs(r.mean / r.predicted_mean - 1.0);
  r.total_rel_err = std::fabs(std::exp(log_value(r.exact_total) - ln_total_pred) - 1.0);
  // A zero coefficient against a positive prediction is a full miss.
  r.weighted_rel_err =
      r.exact_weighted.is_zero()
          ? 1.0
          : std::fabs(std::exp(log_value(r.exact_weighted) - ln_weighted_pred) - 1.0);
  return r;
}

inline std::vector<AsymptoticReport> trend(const std::vector<int>& ns, const SeriesContext& ctx) {
  std::vector<AsymptoticReport> out;
  out.reserve(ns.size());
  for (int n : ns) out.push_back(report(n, ctx));
  return out;
}

}  // namespace deutsch::asymptotics

#endif  // DEUTSCH_ASYMPTOTICS_HPP
