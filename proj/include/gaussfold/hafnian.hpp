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

#ifndef GAUSSFOLD_HAFNIAN_HPP_
#define GAUSSFOLD_HAFNIAN_HPP_

#include <Eigen/Dense>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "gaussfold/numeric.hpp"

namespace gaussfold {

namespace detail {

inline Eigen::MatrixXcd checked_symmetric(const Eigen::MatrixXcd& x) {
  if (x.rows() != x.cols()) {
    throw std::invalid_argument("hafnian: non-square matrix");
  }
  if (x.rows() % 2 != 0) {
    throw std::invalid_argument("hafnian: odd dimension");
  }
  if (x.rows() == 0) return x;
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  if ((x - x.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("hafnian: matrix is not symmetric");
  }
  return 0.5 * (x + x.transpose());
}

inline Complex hafnian_memoized(const Eigen::MatrixXcd& x, std::uint64_t active,
                                std::unordered_map<std::uint64_t, Complex>& memo) {
  if (active == 0) return Complex(1.0, 0.0);
  auto it = memo.find(active);
  if (it != memo.end()) return it->second;
  const int i = std::countr_zero(active);
  const std::uint64_t without_i = active & (active - 1);
  Complex sum(0.0, 0.0);
  std::uint64_t rest = without_i;
  while (rest != 0) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    sum += x(i, j) *
           hafnian_memoized(x, without_i & ~(std::uint64_t{1} << j), memo);
  }
  memo.emplace(active, sum);
  return sum;
}

inline Complex hafnian_walk_matchings(const Eigen::MatrixXcd& x,
                                      std::uint64_t active) {
  if (active == 0) return Complex(1.0, 0.0);
  const int i = std::countr_zero(active);
  const std::uint64_t without_i = active & (active - 1);
  Complex sum(0.0, 0.0);
  std::uint64_t rest = without_i;
  while (rest != 0) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    sum += x(i, j) *
           hafnian_walk_matchings(x, without_i & ~(std::uint64_t{1} << j));
  }
  return sum;
}

}  // namespace detail

/// Hafnian by literal enumeration of the canonical perfect matchings: the
/// lowest active index is paired with every partner in turn, giving
/// (2K-1)!! product terms. Independent reference for tests.
inline Complex hafnian_definition_sum(const Eigen::MatrixXcd& x) {
  const Eigen::MatrixXcd sym = detail::checked_symmetric(x);
  if (sym.rows() > 20) {
    throw std::invalid_argument("hafnian_definition_sum: dimension too large");
  }
  if (sym.rows() == 0) return Complex(1.0, 0.0);
  const std::uint64_t all = (std::uint64_t{1} << sym.rows()) - 1;
  return detail::hafnian_walk_matchings(sym, all);
}

/// Hafnian of a 2K x 2K complex symmetric matrix: the sum over perfect
/// matchings of the products of paired entries. Computed by recursion over
/// index subsets with memoization. Haf of the empty matrix is 1.
inline Complex hafnian(const Eigen::MatrixXcd& x) {
  const Eigen::MatrixXcd sym = detail::checked_symmetric(x);
  if (sym.rows() > 40) {
    throw std::invalid_argument("hafnian: dimension too large for desk scale");
  }
  if (sym.rows() == 0) return Complex(1.0, 0.0);
  const std::uint64_t all = (std::uint64_t{1} << sym.rows()) - 1;
  std::unordered_map<std::uint64_t, Complex> memo;
  return detail::hafnian_memoized(sym, all, memo);
}

}  // namespace gaussfold

#endif  // GAUSSFOLD_HAFNIAN_HPP_
