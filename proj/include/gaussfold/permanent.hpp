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

#ifndef GAUSSFOLD_PERMANENT_HPP_
#define GAUSSFOLD_PERMANENT_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gaussfold/numeric.hpp"

namespace gaussfold {

/// Permanent by the definition sum over all n! permutations. Exponentially
/// slower than Ryser; kept as an independent oracle for tests.
inline Complex permanent_definition_sum(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("permanent_definition_sum: non-square matrix");
  }
  const int n = static_cast<int>(a.rows());
  if (n == 0) return Complex(1.0, 0.0);
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Complex sum(0.0, 0.0);
  do {
    Complex prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) prod *= a(i, perm[static_cast<size_t>(i)]);
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// Matrix permanent. Direct expansion for n <= 3, Ryser's inclusion-exclusion
/// formula with Gray-code column updates (O(2^n n)) above.
inline Complex permanent(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("permanent: non-square matrix");
  }
  const int n = static_cast<int>(a.rows());
  if (n == 0) return Complex(1.0, 0.0);
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) + a(0, 1) * a(1, 0);
  if (n == 3) {
    return a(0, 0) * (a(1, 1) * a(2, 2) + a(1, 2) * a(2, 1)) +
           a(0, 1) * (a(1, 0) * a(2, 2) + a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) + a(1, 1) * a(2, 0));
  }
  if (n > 62) {
    throw std::invalid_argument("permanent: dimension too large for Ryser");
  }

  // Ryser: per(A) = (-1)^n sum_{S != 0} (-1)^|S| prod_i sum_{j in S} A_ij.
  // Subsets are visited in Gray-code order so each step updates the row sums
  // by a single column.
  Eigen::VectorXcd row_sums = Eigen::VectorXcd::Zero(n);
  Complex total(0.0, 0.0);
  std::uint64_t gray = 0;
  const std::uint64_t count = (std::uint64_t{1} << n);
  for (std::uint64_t index = 1; index < count; ++index) {
    const std::uint64_t next_gray = index ^ (index >> 1);
    const std::uint64_t changed = gray ^ next_gray;
    const int col = std::countr_zero(changed);
    if (next_gray & changed) {
      row_sums += a.col(col);
    } else {
      row_sums -= a.col(col);
    }
    gray = next_gray;
    Complex prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) prod *= row_sums(i);
    const int bits = std::popcount(gray);
    total += ((n - bits) % 2 == 0) ? prod : -prod;
  }
  return total;
}

}  // namespace gaussfold

#endif  // GAUSSFOLD_PERMANENT_HPP_
