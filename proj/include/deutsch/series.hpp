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

#ifndef DEUTSCH_SERIES_HPP
#define DEUTSCH_SERIES_HPP

#include <concepts>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace deutsch {

/// Thrown by division when the constant term of the divisor is not a unit.
struct NonInvertibleLeadingCoefficient : std::domain_error {
  using std::domain_error::domain_error;
};

/// Thrown by sqrt when the constant term is not 1.
struct BadConstantTerm : std::domain_error {
  using std::domain_error::domain_error;
};

/// Thrown by compose when the inner series has a nonzero constant term.
struct NonzeroInnerConstant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Commutative ring with exact arithmetic and a unit test for constants.
template <typename R>
concept CoefficientRing =
    std::regular<R> && std::constructible_from<R, int> &&
    requires(const R& a, const R& b) {
      { a + b } -> std::convertible_to<R>;
      { a - b } -> std::convertible_to<R>;
      { a * b } -> std::convertible_to<R>;
      { -a } -> std::convertible_to<R>;
      { is_invertible(a) } -> std::convertible_to<bool>;
      { inverse(a) } -> std::convertible_to<R>;
    };

// Customization points for the convolution inner loops. Rings may provide
// cheaper overloads (Rational and TPoly do); these defaults work for any
// CoefficientRing.
template <typename R>
bool ring_is_zero(const R& a) {
  return a == R(0);
}
template <typename R>
void fused_add_mul(R& acc, const R& x, const R& y) {
  acc = acc + x * y;
}
template <typename R>
void fused_sub_mul(R& acc, const R& x, const R& y) {
  acc = acc - x * y;
}

/// Truncated formal power series in z over R. A value of order N carries the
/// coefficients of z^0 .. z^N, all exact. Binary operations truncate to the
/// minimum of the operand orders; no operation ever produces an inexact
/// coefficient within the stated order.
template <CoefficientRing R>
class Series {
 public:
  explicit Series(int order) : c_(checked_size(order), R(0)) {}

  Series(std::vector<R> coeffs, int order) : c_(std::move(coeffs)) {
    c_.resize(checked_size(order), R(0));
  }

  static Series constant(const R& value, int order) {
    Series s(order);
    s.c_[0] = value;
    return s;
  }

  /// value * z^power, silently zero when power exceeds the order.
  static Series monomial(const R& value, int power, int order) {
    Series s(order);
    if (power >= 0 && power <= order) s.c_[static_cast<size_t>(power)] = value;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const R& operator[](int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("Series: coefficient index out of range");
    return c_[static_cast<size_t>(n)];
  }

  const std::vector<R>& coefficients() const { return c_; }

  bool is_zero() const { return !min_degree().has_value(); }

  /// Index of the first nonzero coefficient, or nullopt for the zero series.
  std::optional<int> min_degree() const {
    for (size_t n = 0; n < c_.size(); ++n) {
      if (!ring_is_zero(c_[n])) return static_cast<int>(n);
    }
    return std::nullopt;
  }

  Series truncated(int new_order) const {
    if (new_order > order()) throw std::logic_error("Series: cannot extend truncation order");
    return Series(std::vector<R>(c_.begin(), c_.begin() + new_order + 1), new_order);
  }

  /// z^k * this, keeping the same order (top k coefficients fall off the end).
  Series shifted_up(int k) const {
    if (k < 0) throw std::logic_error("Series: negative shift");
    Series out(order());
    for (int n = order(); n >= k; --n) out.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n - k)];
    return out;
  }

  /// this / z^k; the first k coefficients must be zero. Order drops by k.
  Series shifted_down(int k) const {
    if (k < 0 || k > order()) throw std::logic_error("Series: bad down-shift");
    for (int n = 0; n < k; ++n) {
      if (!(c_[static_cast<size_t>(n)] == R(0))) {
        throw std::logic_error("Series: down-shift across a nonzero coefficient");
      }
    }
    return Series(std::vector<R>(c_.begin() + k, c_.end()), order() - k);
  }

  Series operator-() const {
    Series out(order());
    for (size_t n = 0; n < c_.size(); ++n) out.c_[n] = -c_[n];
    return out;
  }

  friend Series operator+(const Series& a, const Series& b) {
    const int m = std::min(a.order(), b.order());
    Series out(m);
    for (int n = 0; n <= m; ++n) {
      out.c_[static_cast<size_t>(n)] = a.c_[static_cast<size_t>(n)] + b.c_[static_cast<size_t>(n)];
    }
    return out;
  }

  friend Series operator-(const Series& a, const Series& b) {
    const int m = std::min(a.order(), b.order());
    Series out(m);
    for (int n = 0; n <= m; ++n) {
      out.c_[static_cast<size_t>(n)] = a.c_[static_cast<size_t>(n)] - b.c_[static_cast<size_t>(n)];
    }
    return out;
  }

  /// Cauchy product, truncated at the minimum order.
  friend Series operator*(const Series& a, const Series& b) {
    const int m = std::min(a.order(), b.order());
    Series out(m);
    for (int i = 0; i <= m; ++i) {
      if (ring_is_zero(a.c_[static_cast<size_t>(i)])) continue;
      for (int j = 0; i + j <= m; ++j) {
        fused_add_mul(out.c_[static_cast<size_t>(i + j)], a.c_[static_cast<size_t>(i)],
                      b.c_[static_cast<size_t>(j)]);
      }
    }
    return out;
  }

  friend Series operator*(const Series& a, const R& s) {
    Series out(a.order());
    for (size_t n = 0; n < a.c_.size(); ++n) out.c_[n] = a.c_[n] * s;
    return out;
  }
  friend Series operator*(const R& s, const Series& a) { return a * s; }

  /// Long division; requires an invertible constant term in the divisor.
  friend Series operator/(const Series& a, const Series& b) {
    if (!is_invertible(b.c_[0])) {
      throw NonInvertibleLeadingCoefficient("Series: divisor constant term is not invertible");
    }
    const R inv0 = inverse(b.c_[0]);
    const int m = std::min(a.order(), b.order());
    Series q(m);
    for (int n = 0; n <= m; ++n) {
      R acc = a.c_[static_cast<size_t>(n)];
      for (int k = 1; k <= n; ++k) {
        if (ring_is_zero(b.c_[static_cast<size_t>(k)])) continue;
        fused_sub_mul(acc, b.c_[static_cast<size_t>(k)], q.c_[static_cast<size_t>(n - k)]);
      }
      q.c_[static_cast<size_t>(n)] = acc * inv0;
    }
    return q;
  }

  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  /// Exact equality of order and every coefficient.
  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  static size_t checked_size(int order) {
    if (order < 0) throw std::logic_error("Series: order must be >= 0");
    return static_cast<size_t>(order) + 1;
  }

  std::vector<R> c_;

  template <CoefficientRing S>
  friend Series<S> sqrt(const Series<S>& a);
};

/// Square root with constant term 1, by the coefficient recurrence s*s = a.
template <CoefficientRing R>
Series<R> sqrt(const Series<R>& a) {
  if (!(a.c_[0] == R(1))) throw BadConstantTerm("Series: sqrt requires constant term 1");
  const R half = inverse(R(2));
  const int m = a.order();
  Series<R> s(m);
  s.c_[0] = R(1);
  // The convolution is symmetric in k <-> n-k; walking half of it with
  // doubled coefficients saves half the ring multiplications.
  std::vector<R> doubled(static_cast<size_t>(m) + 1, R(0));
  doubled[0] = R(2);
  for (int n = 1; n <= m; ++n) {
    R acc = a.c_[static_cast<size_t>(n)];
    for (int k = 1; 2 * k < n; ++k) {
      fused_sub_mul(acc, doubled[static_cast<size_t>(k)], s.c_[static_cast<size_t>(n - k)]);
    }
    if (n % 2 == 0) {
      const R& mid = s.c_[static_cast<size_t>(n / 2)];
      fused_sub_mul(acc, mid, mid);
    }
    s.c_[static_cast<size_t>(n)] = acc * half;
    doubled[static_cast<size_t>(n)] =
        s.c_[static_cast<size_t>(n)] + s.c_[static_cast<size_t>(n)];
  }
  return s;
}

/// f(g(z)) by Horner evaluation; requires g(0) = 0.
template <CoefficientRing R>
Series<R> compose(const Series<R>& f, const Series<R>& g) {
  if (!(g[0] == R(0))) throw NonzeroInnerConstant("Series: compose requires inner constant term 0");
  const int m = std::min(f.order(), g.order());
  const Series<R> inner = g.order() == m ? g : g.truncated(m);
  Series<R> acc = Series<R>::constant(f[m], m);
  for (int n = m - 1; n >= 0; --n) {
    acc = acc * inner + Series<R>::constant(f[n], m);
  }
  return acc;
}

/// Applies fn to every coefficient (e.g. evaluate-at-t=1 on TPoly entries).
template <CoefficientRing R, typename Fn>
auto map_coeffs(const Series<R>& f, Fn&& fn) {
  using S = std::remove_cvref_t<std::invoke_result_t<Fn&, const R&>>;
  std::vector<S> out;
  out.reserve(static_cast<size_t>(f.order()) + 1);
  for (int n = 0; n <= f.order(); ++n) out.push_back(fn(f[n]));
  return Series<S>(std::move(out), f.order());
}

template <CoefficientRing R>
std::ostream& operator<<(std::ostream& os, const Series<R>& s)
  requires requires(std::ostream& o, const R& r) { o << r; }
{
  os << "[";
  for (int n = 0; n <= s.order(); ++n) {
    if (n > 0) os << ", ";
    os << s[n];
  }
  return os << "] + O(z^" << s.order() + 1 << ")";
}

}  // namespace deutsch

#endif  // DEUTSCH_SERIES_HPP
