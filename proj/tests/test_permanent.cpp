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

#include "gaussfold/permanent.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "gaussfold/rng.hpp"

using namespace gaussfold;
using Catch::Matchers::WithinAbs;

TEST_CASE("permanent small explicit cases") {
  Eigen::MatrixXcd one(1, 1);
  one << Complex(2.0, -1.0);
  CHECK(permanent(one) == Complex(2.0, -1.0));

  Eigen::MatrixXcd two(2, 2);
  two << Complex(1.0, 0.0), Complex(2.0, 0.0), Complex(3.0, 0.0),
      Complex(4.0, 0.0);
  CHECK(permanent(two) == Complex(1.0 * 4.0 + 2.0 * 3.0, 0.0));

  CHECK(permanent(Eigen::MatrixXcd::Ones(3, 3)) == Complex(6.0, 0.0));
  CHECK(permanent(Eigen::MatrixXcd(0, 0)) == Complex(1.0, 0.0));

  Eigen::MatrixXcd rect(2, 3);
  CHECK_THROWS_AS(permanent(rect), std::invalid_argument);
}

TEST_CASE("Ryser agrees with the definition sum on random matrices") {
  Rng rng(20260811);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      Eigen::MatrixXcd a(n, n);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) a(r, c) = rng.complex_normal();
      }
      const Complex fast = permanent(a);
      const Complex slow = permanent_definition_sum(a);
      CHECK_THAT(std::abs(fast - slow), WithinAbs(0.0, 1e-10));
    }
  }
}

TEST_CASE("permanent of all-ones is the factorial") {
  CHECK_THAT(std::abs(permanent(Eigen::MatrixXcd::Ones(6, 6)) -
                      Complex(720.0, 0.0)),
             WithinAbs(0.0, 1e-9));
}
