// Copyright 2026 The gaussfold authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAUSSFOLD_NUMERIC_HPP_
#define GAUSSFOLD_NUMERIC_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace gaussfold {

using Complex = std::complex<double>;

/// Integer power of a complex base with 0^0 = 1.
inline Complex pow_int(Complex base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow_int: negative exponent");
  Complex result(1.0, 0.0);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

/// Factorial as a double. Exact integers up to 20!, log-gamma above that.
inline double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  static const double table[21] = {
      1., 1., 2., 6., 24., 120., 720., 5040., 40320., 362880., 3628800.,
      39916800., 479001600., 6227020800., 87178291200., 1307674368000.,
      20922789888000., 355687428096000., 6402373705728000.,
      121645100408832000., 2432902008176640000.};
  if (n <= 20) return table[n];
  return std::exp(std::lgamma(static_cast<double>(n) + 1.0));
}

inline double log_factorial(int n) {
  if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

/// Binomial coefficient as a double; exact for small arguments, log-gamma
/// based for large ones.
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n <= 20) return factorial(n) / (factorial(k) * factorial(n - k));
  return std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k));
}

/// Exact binomial coefficient in 64-bit arithmetic. Throws std::overflow_error
/// instead of wrapping.
inline std::uint64_t binomial_exact(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
#if !defined(__SIZEOF_INT128__)
#error "binomial_exact requires 128-bit intermediates"
#endif
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    // result *= (n - k + i) / i; after each step result equals
    // C(n - k + i, i), so the division is exact.
    result *= static_cast<std::uint64_t>(n - k + i);
    result /= static_cast<std::uint64_t>(i);
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("binomial_exact: 64-bit overflow at C(" +
                                std::to_string(n) + "," + std::to_string(k) +
                                ")");
    }
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace gaussfold

#endif  // GAUSSFOLD_NUMERIC_HPP_
