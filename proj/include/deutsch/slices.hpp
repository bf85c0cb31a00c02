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

#ifndef DEUTSCH_SLICES_HPP
#define DEUTSCH_SLICES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "deutsch/rational.hpp"
#include "deutsch/series.hpp"
#include "deutsch/tpoly.hpp"

namespace deutsch {

/// Thrown by down_run_weights for a nonpositive total drop.
struct BadDrop : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The truncated bivariate series F(z, u): one Series per end level j,
/// all with the same order N. Levels run 0..N; a path of n steps cannot end
/// above level n, so the coefficient of z^n at level j vanishes for j > n.
template <CoefficientRing R>
struct LevelSeries {
  std::vector<Series<R>> levels;

  int order() const { return levels.empty() ? -1 : levels.front().order(); }
  int top_level() const { return static_cast<int>(levels.size()) - 1; }

  const Series<R>& level(int j) const {
    if (j < 0 || j > top_level()) throw std::out_of_range("LevelSeries: level out of range");
    return levels[static_cast<size_t>(j)];
  }

  friend bool operator==(const LevelSeries&, const LevelSeries&) = default;
};

namespace slices {

/// State containing 1 at level 0: the empty path, zero mountains.
template <CoefficientRing R>
LevelSeries<R> empty_path_state(int order) {
  LevelSeries<R> state;
  state.levels.assign(static_cast<size_t>(order) + 1, Series<R>(order));
  state.levels[0] = Series<R>::constant(R(1), order);
  return state;
}

/// Generating series of maximal down-runs with a fixed total drop:
/// z(1+z)^(drop-1). The z^n coefficient counts the ways to fall `drop`
/// levels in exactly n down-steps.
inline Series<Rational> down_run_weights(int drop, int order) {
  if (drop < 1) throw BadDrop("down_run_weights: drop must be >= 1");
  Series<Rational> out(order);
  std::vector<Rational> coeffs(static_cast<size_t>(order) + 1, Rational(0));
  for (int n = 1; n <= order && n <= drop; ++n) {
    coeffs[static_cast<size_t>(n)] = Rational(binomial(drop - 1, n - 1));
  }
  return Series<Rational>(std::move(coeffs), order);
}

template <CoefficientRing R>
std::optional<int> min_degree(const LevelSeries<R>& f) {
  std::optional<int> best;
  for (const auto& s : f.levels) {
    const auto d = s.min_degree();
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

template <CoefficientRing R>
Series<R> level_sum(const LevelSeries<R>& f) {
  Series<R> total(f.order());
  for (const auto& s : f.levels) total += s;
  return total;
}

/// Appends one mountain to every path of `f`: from end level i, climb to a
/// peak p > i (weight z^(p-i)) and take one maximal down-run to a landing
/// level j < p (weight z(1+z)^(p-1-j)). When `single_up_mark` is set, the
/// contributions whose up-run has length exactly one (p = i+1) carry that
/// factor.
///
/// Evaluated with two linear sweeps instead of the literal triple loop:
///   A[p] = sum_{i<p} F_i z^(p-i)  via  A[p] = z (A[p-1] + F_{p-1}),
///   G[j] = z A[j+1] + (1+z) G[j+1]  downward from the top level.
template <CoefficientRing R>
LevelSeries<R> next_slice(const LevelSeries<R>& f,
                          const std::optional<R>& single_up_mark = std::nullopt) {
  const int n = f.order();
  const int top = f.top_level();

  // a[p] = marked-or-not sum over start levels i < p of F_i z^(p-i).
  std::vector<Series<R>> a(static_cast<size_t>(top) + 1, Series<R>(n));
  Series<R> two_plus(n);   // A2[p]: contributions with p - i >= 2
  Series<R> prev_one(n);   // A1[p-1] = z F_{p-2}
  for (int p = 1; p <= top; ++p) {
    Series<R> one = f.level(p - 1).shifted_up(1);  // A1[p] = z F_{p-1}
    two_plus = (two_plus + prev_one).shifted_up(1);
    a[static_cast<size_t>(p)] =
        single_up_mark ? two_plus + one * (*single_up_mark) : two_plus + one;
    prev_one = std::move(one);
  }

  LevelSeries<R> g;
  g.levels.assign(static_cast<size_t>(top) + 1, Series<R>(n));
  Series<R> b(n);  // B[top] = 0: no peak above the top level contributes
  for (int j = top - 1; j >= 0; --j) {
    b = a[static_cast<size_t>(j + 1)].shifted_up(1) + b + b.shifted_up(1);
    g.levels[static_cast<size_t>(j)] = b;
  }
  return g;
}

/// The slice iteration: current = F_k, accumulated = sum of F_0..F_k.
/// Each slice adds at least one up- and one down-step, so the minimal degree
/// of `current` grows by at least 2 per step and the accumulation converges
/// at any fixed truncation order.
template <CoefficientRing R>
struct SliceState {
  LevelSeries<R> current;
  LevelSeries<R> accumulated;
  int k = 0;

  static SliceState initial(int order) {
    auto base = empty_path_state<R>(order);
    return SliceState{base, base, 0};
  }

  // All of F_k's mass lives beyond the truncation order once the stored
  // coefficients are identically zero.
  bool exhausted() const { return !min_degree(current).has_value(); }

  void advance(const std::optional<R>& single_up_mark = std::nullopt) {
    current = next_slice(current, single_up_mark);
    for (size_t j = 0; j < accumulated.levels.size(); ++j) {
      accumulated.levels[j] += current.levels[j];
    }
    ++k;
  }
};

template <CoefficientRing R>
LevelSeries<R> accumulate_with_mark(int order, const std::optional<R>& single_up_mark) {
  auto state = SliceState<R>::initial(order);
  while (!state.exhausted()) state.advance(single_up_mark);
  return state.accumulated;
}

/// Paths ending with a down-run (plus the empty path), by end level.
inline LevelSeries<Rational> accumulate(int order) {
  return accumulate_with_mark<Rational>(order, std::nullopt);
}

/// Same, with every up-run of length one marked by t.
inline LevelSeries<TPoly> accumulate_marked(int order) {
  return accumulate_with_mark<TPoly>(order, TPoly::t());
}

}  // namespace slices
}  // namespace deutsch

#endif  // DEUTSCH_SLICES_HPP
