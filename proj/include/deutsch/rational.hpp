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

#ifndef DEUTSCH_RATIONAL_HPP
#define DEUTSCH_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace deutsch {

/// Exact rational scalar. Canonical form at all times: lowest terms,
/// denominator > 0. All arithmetic is exact; there is no rounding anywhere.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long value) : q_(value) {}                  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& value) : q_(value) {}      // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : q_(num, den) { canonicalize_checked(); }
  Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) { canonicalize_checked(); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const { return q_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_canonical(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_canonical(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_canonical(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return from_canonical(mpq_class(a.q_ / b.q_));
  }
  Rational operator-() const { return from_canonical(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  /// In-place *this += x * y without a per-call GMP allocation; the hot
  /// operation of every series convolution.
  void add_mul(const Rational& x, const Rational& y) {
    mpq_class& s = scratch();
    mpq_mul(s.get_mpq_t(), x.q_.get_mpq_t(), y.q_.get_mpq_t());
    q_ += s;
  }
  void sub_mul(const Rational& x, const Rational& y) {
    mpq_class& s = scratch();
    mpq_mul(s.get_mpq_t(), x.q_.get_mpq_t(), y.q_.get_mpq_t());
    q_ -= s;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  static Rational from_canonical(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  static mpq_class& scratch() {
    static thread_local mpq_class s;
    return s;
  }

  void canonicalize_checked() {
    if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }

  mpq_class q_;
};

inline bool is_invertible(const Rational& r) { return !r.is_zero(); }

inline Rational inverse(const Rational& r) {
  if (r.is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(1) / r;
}

inline bool ring_is_zero(const Rational& r) { return r.is_zero(); }
inline void fused_add_mul(Rational& acc, const Rational& x, const Rational& y) {
  acc.add_mul(x, y);
}
inline void fused_sub_mul(Rational& acc, const Rational& x, const Rational& y) {
  acc.sub_mul(x, y);
}

/// Exact binomial coefficient; zero outside 0 <= k <= n.
inline mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return mpz_class(0);
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

}  // namespace deutsch

#endif  // DEUTSCH_RATIONAL_HPP
