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

// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here; the asymptotic band was calibrated against
// the exact series before being frozen (measured mean ratio at n = 400:
// 1.00533, band +-2%).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "deutsch/deutsch.hpp"
#include "../support/oeis_a005043.hpp"
#include "../support/oracles.hpp"

namespace {

using deutsch::Path;
using deutsch::PathStats;
using deutsch::Rational;
using deutsch::Series;
using deutsch::TPoly;
namespace cf = deutsch::closedforms;
namespace as = deutsch::asymptotics;
namespace slices = deutsch::slices;

using Clock = std::chrono::steady_clock;

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<std::string()> run;  // empty string means pass
};

std::string check_series_prefix(const Series<Rational>& got,
                                const std::vector<long long>& want, const char* label) {
  for (size_t n = 0; n < want.size(); ++n) {
    if (!(got[static_cast<int>(n)] == Rational(want[n]))) {
      std::ostringstream os;
      os << label << ": z^" << n << " is " << got[static_cast<int>(n)] << ", expected "
         << want[n];
      return os.str();
    }
  }
  return {};
}

bool is_closed(const PathStats& s, const Path&) { return s.end_level == 0; }

std::string criterion_riordan() {
  const auto series = cf::phi0(20);
  if (auto err = check_series_prefix(series, {1, 0, 1, 1, 3, 6, 15, 36}, "display");
      !err.empty()) {
    return err;
  }
  for (int n = 0; n < oracles::kA005043Count; ++n) {
    if (!(series[n] == Rational(oracles::kA005043[n]))) {
      std::ostringstream os;
      os << "A005043: z^" << n << " is " << series[n] << ", expected " << oracles::kA005043[n];
      return os.str();
    }
  }
  return {};
}

std::string criterion_figures() {
  const long long closed5 = deutsch::count_paths(5, is_closed);
  if (closed5 != 6) return "closed length-5 count is " + std::to_string(closed5) + ", expected 6";

  long long stanley6 = 0;
  long long stanley6_dyck = 0;
  deutsch::enumerate_paths(6, [&](const Path& p) {
    if (deutsch::path_stats(p).end_level != 0 || !deutsch::stanley_ok(p)) return;
    ++stanley6;
    if (deutsch::is_dyck(p)) ++stanley6_dyck;
  });
  if (stanley6 != 7) return "stanley length-6 count is " + std::to_string(stanley6) + ", expected 7";
  if (stanley6_dyck != 2) {
    return "dyck subcount is " + std::to_string(stanley6_dyck) + ", expected 2";
  }
  return {};
}

std::string criterion_stanley_series() {
  const std::vector<long long> want{1, 0, 1, 0, 2, 2, 7, 14, 37, 90, 233};
  if (auto err = check_series_prefix(cf::stanley_sequence_form(10), want, "sequence route");
      !err.empty()) {
    return err;
  }
  if (auto err = check_series_prefix(cf::stanley_radical(10), want, "radical route");
      !err.empty()) {
    return err;
  }
  if (auto err = check_series_prefix(cf::stanley_v_form(10), want, "v route"); !err.empty()) {
    return err;
  }
  return {};
}

std::string criterion_catalan() {
  for (int n = 0; n <= 5; ++n) {
    const long long count =
        deutsch::count_paths(2 * n + 2, [](const PathStats& s, const Path& p) {
          return s.end_level == 0 && deutsch::is_dyck(p) && deutsch::stanley_ok(p);
        });
    const mpz_class expected = oracles::catalan(n);
    if (mpz_class(static_cast<long>(count)) != expected) {
      std::ostringstream os;
      os << "length " << 2 * n + 2 << ": count " << count << ", expected C_" << n << " = "
         << expected.get_str();
      return os.str();
    }
  }
  return {};
}

std::string criterion_marked_series() {
  const auto series = cf::phi0_t(10);
  const std::vector<TPoly> expected{
      TPoly(1),
      TPoly(0),
      TPoly::t(),
      TPoly(1),
      TPoly(std::vector<Rational>{2, 0, 1}),
      TPoly(std::vector<Rational>{3, 3}),
      TPoly(std::vector<Rational>{7, 7, 0, 1}),
      TPoly(std::vector<Rational>{17, 13, 6})};
  for (size_t n = 0; n < expected.size(); ++n) {
    if (!(series[static_cast<int>(n)] == expected[n])) {
      std::ostringstream os;
      os << "display: z^" << n << " is " << series[static_cast<int>(n)] << ", expected "
         << expected[n];
      return os.str();
    }
  }
  for (int n = 0; n <= 10; ++n) {
    std::map<int, long long> hist;
    deutsch::enumerate_paths(n, [&](const Path& p) {
      const PathStats s = deutsch::path_stats(p);
      if (s.end_level == 0) hist[s.single_up_runs] += 1;
    });
    std::vector<Rational> coeffs;
    for (const auto& [k, v] : hist) {
      if (static_cast<size_t>(k) >= coeffs.size()) coeffs.resize(static_cast<size_t>(k) + 1);
      coeffs[static_cast<size_t>(k)] = Rational(v);
    }
    if (!(series[n] == TPoly(coeffs))) {
      std::ostringstream os;
      os << "histogram: z^" << n << " is " << series[n] << ", brute force says "
         << TPoly(coeffs);
      return os.str();
    }
  }
  return {};
}

std::string criterion_oracle_triangle() {
  const int top = 12;

  // Brute-force aggregates in one sweep per length.
  std::vector<long long> closed(top + 1, 0);
  std::vector<long long> open(top + 1, 0);
  std::vector<long long> stanley(top + 1, 0);
  std::vector<std::map<int, long long>> by_level(top + 1);
  std::vector<std::map<int, long long>> single_up(top + 1);
  std::vector<std::map<std::pair<int, int>, long long>> by_mountain(top + 1);
  for (int n = 0; n <= top; ++n) {
    deutsch::enumerate_paths(n, [&](const Path& p) {
      const PathStats s = deutsch::path_stats(p);
      open[static_cast<size_t>(n)] += 1;
      if (p.empty() || s.ends_with_down) {
        by_level[static_cast<size_t>(n)][s.end_level] += 1;
        by_mountain[static_cast<size_t>(n)][{s.mountains, s.end_level}] += 1;
      }
      if (s.end_level == 0) {
        closed[static_cast<size_t>(n)] += 1;
        single_up[static_cast<size_t>(n)][s.single_up_runs] += 1;
        if (deutsch::stanley_ok(p)) stanley[static_cast<size_t>(n)] += 1;
      }
    });
  }

  const auto phi0 = cf::phi0(top);
  const auto levels = cf::phi_levels(top);
  const auto open_series = cf::open_paths(top);
  const auto motzkin = cf::motzkin(top);
  const auto stanley_series = cf::stanley_series(top);
  const auto phi0_t = cf::phi0_t(top);
  const auto acc = slices::accumulate(top);
  const auto acc_marked = slices::accumulate_marked(top);

  auto state = slices::SliceState<Rational>::initial(top);
  std::vector<deutsch::LevelSeries<Rational>> by_k{state.current};
  while (!state.exhausted()) {
    state.advance();
    by_k.push_back(state.current);
  }

  for (int n = 0; n <= top; ++n) {
    const size_t i = static_cast<size_t>(n);
    if (!(phi0[n] == Rational(closed[i])) || !(acc.level(0)[n] == Rational(closed[i]))) {
      return "closed counts disagree at z^" + std::to_string(n);
    }
    if (!(open_series[n] == Rational(open[i])) || !(motzkin[n] == Rational(open[i]))) {
      return "open counts disagree at z^" + std::to_string(n);
    }
    if (!(stanley_series[n] == Rational(stanley[i]))) {
      return "stanley counts disagree at z^" + std::to_string(n);
    }
    for (int j = 0; j <= n; ++j) {
      const auto it = by_level[i].find(j);
      const Rational want(it == by_level[i].end() ? 0 : it->second);
      if (!(levels.level(j)[n] == want) || !(acc.level(j)[n] == want)) {
        return "level counts disagree at z^" + std::to_string(n) + " level " +
               std::to_string(j);
      }
    }
    for (size_t k = 0; k < by_k.size(); ++k) {
      for (int j = 0; j <= n; ++j) {
        const auto it = by_mountain[i].find({static_cast<int>(k), j});
        const Rational want(it == by_mountain[i].end() ? 0 : it->second);
        if (!(by_k[k].level(j)[n] == want)) {
          return "mountain counts disagree at z^" + std::to_string(n) + " k " +
                 std::to_string(k) + " level " + std::to_string(j);
        }
      }
    }
    std::vector<Rational> coeffs;
    for (const auto& [k, v] : single_up[i]) {
      if (static_cast<size_t>(k) >= coeffs.size()) coeffs.resize(static_cast<size_t>(k) + 1);
      coeffs[static_cast<size_t>(k)] = Rational(v);
    }
    const TPoly want(coeffs);
    if (!(phi0_t[n] == want) || !(acc_marked.level(0)[n] == want)) {
      return "single-up-run histograms disagree at z^" + std::to_string(n);
    }
  }
  return {};
}

std::string criterion_kernel_identities() {
  const int order = 200;
  const auto roots = cf::kernel_roots(order);
  const auto one_plus_z = Series<Rational>(std::vector<Rational>{1, 1}, order);
  const auto z_one_plus_z = Series<Rational>(std::vector<Rational>{0, 1, 1}, order);
  if (!(roots.w1 + roots.w2 == one_plus_z)) return "w1 + w2 != 1 + z at order 200";
  if (!(roots.w1 * roots.w2 == z_one_plus_z)) return "w1 * w2 != z(1+z) at order 200";

  const auto marked = cf::kernel_roots_marked(100);
  if (!cf::marked_kernel_residual(marked.w1).is_zero()) {
    return "marked w1 does not satisfy its quadratic at order 100";
  }
  if (!cf::marked_kernel_residual(marked.w2).is_zero()) {
    return "marked w2 does not satisfy its quadratic at order 100";
  }
  return {};
}

std::string criterion_mean_routes() {
  const int order = 200;
  const auto derivative = cf::mean_numerator_derivative(order);
  const auto v_form = cf::mean_numerator_v_form(order);
  for (int n = 0; n <= order; ++n) {
    if (!(derivative[n] == v_form[n])) {
      return "routes disagree at z^" + std::to_string(n);
    }
  }
  return {};
}

std::string criterion_asymptotics() {
  const auto ctx = as::make_context(400);

  // Band calibrated from the exact series: ratio at n = 400 measured 1.00533.
  const auto r400 = as::report(400, ctx);
  const double ratio = r400.mean / r400.predicted_mean;
  if (!(ratio > 0.98 && ratio < 1.02)) {
    std::ostringstream os;
    os << "mean(400)/(2n/27) = " << ratio << " outside (0.98, 1.02)";
    return os.str();
  }

  const auto r100 = as::report(100, ctx);
  if (!(r400.total_rel_err < r100.total_rel_err)) {
    return "total-count prediction error did not shrink from n=100 to n=400";
  }
  if (!(r400.weighted_rel_err < r100.weighted_rel_err)) {
    return "weighted-count prediction error did not shrink from n=100 to n=400";
  }
  return {};
}

std::string criterion_mean_spot() {
  const auto ctx = as::make_context(8);
  const auto r = as::report(7, ctx);
  if (!(r.mean_exact == Rational(25, 36))) {
    return "mean(7) = " + r.mean_exact.to_string() + ", expected 25/36";
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"riordan-series", 1.0, criterion_riordan},
      {"figure-counts", 1.0, criterion_figures},
      {"stanley-three-routes", 1.0, criterion_stanley_series},
      {"catalan-restriction", 30.0, criterion_catalan},
      {"marked-series", 30.0, criterion_marked_series},
      {"oracle-triangle", 60.0, criterion_oracle_triangle},
      {"kernel-identities", 10.0, criterion_kernel_identities},
      {"mean-route-equality", 10.0, criterion_mean_routes},
      {"asymptotic-band", 60.0, criterion_asymptotics},
      {"mean-spot-value", 1.0, criterion_mean_spot},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = Clock::now();
    std::string error;
    try {
      error = c.run();
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (error.empty() && elapsed > c.budget_seconds) {
      std::ostringstream os;
      os << "exceeded the " << c.budget_seconds << " s budget";
      error = os.str();
    }
    if (error.empty()) {
      std::printf("PASS %2zu %-22s (%.2f s)\n", i + 1, c.name.c_str(), elapsed);
    } else {
      std::printf("FAIL %2zu %-22s (%.2f s): %s\n", i + 1, c.name.c_str(), elapsed,
                  error.c_str());
      ++failures;
    }
  }
  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
  }
  return failures == 0 ? 0 : 1;
}
