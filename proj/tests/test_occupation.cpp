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

#include "gaussfold/occupation.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <set>

using namespace gaussfold;

TEST_CASE("pattern construction rejects negative counts") {
  CHECK_THROWS_AS(OccupationPattern({1, -1}), std::invalid_argument);
  CHECK(OccupationPattern({1, 0, 2}).total() == 3);
  CHECK(OccupationPattern::zeros(4).total() == 0);
}

TEST_CASE("enumerate_shell small cases") {
  const auto shell22 = enumerate_shell(2, 2);
  REQUIRE(shell22.size() == 3);
  CHECK(shell22[0] == OccupationPattern({2, 0}));
  CHECK(shell22[1] == OccupationPattern({1, 1}));
  CHECK(shell22[2] == OccupationPattern({0, 2}));

  const auto shell13 = enumerate_shell(1, 3);
  REQUIRE(shell13.size() == 1);
  CHECK(shell13[0] == OccupationPattern({3}));

  CHECK(enumerate_shell(4, 3).size() == 20);
}

TEST_CASE("shell cardinality matches enumeration") {
  CHECK(shell_cardinality(2, 2) == 3);
  CHECK(shell_cardinality(4, 3) == 20);
  for (int modes : {1, 2, 3, 5}) {
    CHECK(shell_cardinality(modes, 0) == 1);
  }
  for (int modes : {1, 2, 3, 4}) {
    for (int n = 0; n <= 5; ++n) {
      const auto shell = enumerate_shell(modes, n);
      CHECK(shell.size() == shell_cardinality(modes, n));
      // All distinct, all with the right total, in canonical order.
      std::set<std::vector<int>> seen;
      for (size_t i = 0; i < shell.size(); ++i) {
        CHECK(shell[i].total() == n);
        CHECK(seen.insert(shell[i].counts()).second);
        if (i > 0) CHECK(canonical_pattern_less(shell[i - 1], shell[i]));
      }
    }
  }
}

TEST_CASE("shell cardinality overflow is reported") {
  CHECK_THROWS_AS(shell_cardinality(40, 60), std::overflow_error);
}

TEST_CASE("concat appends modes and adds photons") {
  const OccupationPattern a({1, 2});
  const OccupationPattern b({0, 3, 1});
  const OccupationPattern ab = concat(a, b);
  CHECK(ab.modes() == 5);
  CHECK(ab.total() == a.total() + b.total());
  CHECK(ab == OccupationPattern({1, 2, 0, 3, 1}));
}
