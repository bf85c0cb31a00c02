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

#ifndef DEUTSCH_TPOLY_HPP
#define DEUTSCH_TPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "deutsch/rational.hpp"

namespace deutsch {

/// Dense polynomial in the marker variable t with Rational coefficients.
/// Canonical form: no trailing zero coefficients; the zero polynomial is
/// the empty list (degree -1).
class TPoly {
 public:
  TPoly() = default;
  TPoly(long constant) : TPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  TPoly(Rational constant) {                           // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  explicit TPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// The marker itself.
  static TPoly t() { return TPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of t^k (zero outside the stored range).
  Rational at(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= c_.size()) return Rational(0);
    return c_[static_cast<size_t>(k)];
  }
  Rational constant_term() const { return at(0); }

  Rational evaluated_at_one() const {
    Rational sum;
    for (const auto& c : c_) sum += c;
    return sum;
  }

  /// d/dt evaluated at t = 1, i.e. sum of k * c_k.
  Rational derivative_at_one() const {
    Rational sum;
    for (size_t k = 1; k < c_.size(); ++k) sum += Rational(static_cast<long>(k)) * c_[k];
    return sum;
  }

  friend TPoly operator+(const TPoly& a, const TPoly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < out.size(); ++k) {
      out[k] = a.at(static_cast<int>(k)) + b.at(static_cast<int>(k));
    }
    return TPoly(std::move(out));
  }
  friend TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }
  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      for (size_t j = 0; j < b.c_.size(); ++j) {
        out[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return TPoly(std::move(out));
  }
  friend TPoly operator*(const TPoly& a, const Rational& s) {
    std::vector<Rational> out(a.c_.size());
    for (size_t k = 0; k < a.c_.size(); ++k) out[k] = a.c_[k] * s;
    return TPoly(std::move(out));
  }
  friend TPoly operator*(const Rational& s, const TPoly& a) { return a * s; }
  TPoly operator-() const {
    std::vector<Rational> out(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) out[k] = -c_[k];
    return TPoly(std::move(out));
  }

  TPoly& operator+=(const TPoly& o) { return *this = *this + o; }
  TPoly& operator-=(const TPoly& o) { return *this = *this - o; }
  TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

  /// In-place *this += a * b, accumulating directly into the coefficient
  /// store. Series convolutions spend nearly all their time here.
  void add_product(const TPoly& a, const TPoly& b) { fma_impl(a, b, /*negate=*/false); }
  void sub_product(const TPoly& a, const TPoly& b) { fma_impl(a, b, /*negate=*/true); }

  friend bool operator==(const TPoly& a, const TPoly& b) = default;

  /// Canonical rendering in ascending powers of t, e.g. "17+13t+6t^2".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      std::string term;
      if (k == 0) {
        term = c_[k].to_string();
      } else {
        if (c_[k] == Rational(1)) {
          term = "";
        } else if (c_[k] == Rational(-1)) {
          term = "-";
        } else {
          term = c_[k].to_string();
        }
        term += "t";
        if (k > 1) term += "^" + std::to_string(k);
      }
      if (!out.empty() && term.front() != '-') out += "+";
      out += term;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  void fma_impl(const TPoly& a, const TPoly& b, bool negate) {
    if (a.is_zero() || b.is_zero()) return;
    const size_t need = a.c_.size() + b.c_.size() - 1;
    if (c_.size() < need) c_.resize(need);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (negate) {
          c_[i + j].sub_mul(a.c_[i], b.c_[j]);
        } else {
          c_[i + j].add_mul(a.c_[i], b.c_[j]);
        }
      }
    }
    trim();
  }

  std::vector<Rational> c_;
};

/// Units of the polynomial ring are the nonzero constants.
inline bool is_invertible(const TPoly& p) { return p.is_constant() && !p.is_zero(); }

inline TPoly inverse(const TPoly& p) {
  if (!is_invertible(p)) throw std::domain_error("TPoly: only nonzero constants are invertible");
  return TPoly(inverse(p.constant_term()));
}

inline bool ring_is_zero(const TPoly& p) { return p.is_zero(); }
inline void fused_add_mul(TPoly& acc, const TPoly& x, const TPoly& y) { acc.add_product(x, y); }
inline void fused_sub_mul(TPoly& acc, const TPoly& x, const TPoly& y) { acc.sub_product(x, y); }

}  // namespace deutsch

#endif  // DEUTSCH_TPOLY_HPP
