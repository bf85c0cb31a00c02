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

// Test-only oracles, deliberately independent of the library code paths
// they are used to check.

#ifndef DEUTSCH_TESTS_ORACLES_HPP
#define DEUTSCH_TESTS_ORACLES_HPP

#include <gmpxx.h>

namespace oracles {

/// Closed Motzkin paths of the given length: steps +1, 0, -1, never below
/// the x-axis, ending at 0. Plain recursive count.
inline long long motzkin_brute(int length) {
  struct Counter {
    long long count(int remaining, int level) const {
      if (remaining == 0) return level == 0 ? 1 : 0;
      long long total = count(remaining - 1, level + 1);
      total += count(remaining - 1, level);
      if (level > 0) total += count(remaining - 1, level - 1);
      return total;
    }
  };
  return Counter{}.count(length, 0);
}

/// Catalan number from the closed formula binom(2n, n) / (n + 1).
inline mpz_class catalan(int n) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * n),
               static_cast<unsigned long>(n));
  mpz_class result;
  mpz_divexact_ui(result.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return result;
}

}  // namespace oracles

#endif  // DEUTSCH_TESTS_ORACLES_HPP
