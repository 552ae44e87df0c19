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

#include "gaussfold/squeezers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gaussfold;
using Catch::Matchers::WithinAbs;

TEST_CASE("dual squeezer vacuum and pair-creation elements") {
  const double t = 0.7;
  // <0,0|TS|0,0> = sqrt(t) = 1/cosh(r) with cosh^2(r) = 1/t.
  CHECK_THAT(ts_element_dual(t, {0, 0}, {0, 0}).real(),
             WithinAbs(std::sqrt(t), 1e-15));
  // Pair creation has magnitude tanh(r)/cosh(r) = sqrt(t (1 - t)).
  CHECK_THAT(std::abs(ts_element_dual(t, {1, 1}, {0, 0})),
             WithinAbs(std::sqrt(t * (1.0 - t)), 1e-15));
  // The difference of photon numbers is conserved exactly.
  CHECK(ts_element_dual(t, {1, 0}, {0, 0}) == Complex(0.0, 0.0));
  CHECK(ts_element_dual(t, {2, 1}, {0, 1}) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(ts_element_dual(0.0, {0, 0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("generator oracle basics") {
  // r = 0 is the identity.
  CHECK_THAT(ts_element_oracle(0.0, {2, 1}, {2, 1}, 20).real(),
             WithinAbs(1.0, 1e-14));
  CHECK_THAT(std::abs(ts_element_oracle(0.0, {2, 1}, {1, 0}, 20)),
             WithinAbs(0.0, 1e-14));
  // Difference-violating indices vanish.
  CHECK(ts_element_oracle(0.4, {1, 0}, {0, 0}, 20) == Complex(0.0, 0.0));
  // Cutoff too small for the requested indices is rejected.
  CHECK_THROWS_AS(ts_element_oracle(0.4, {25, 25}, {0, 0}, 20),
                  std::invalid_argument);
}

TEST_CASE("duality against the exponentiated generator") {
  // The dual of the real beam splitter is the squeezer of degree
  // -arccosh(1/sqrt(t)); vacuum elements agree for either sign.
  for (double t : {0.3, 0.5, 0.9}) {
    const double r = std::acosh(1.0 / std::sqrt(t));
    CHECK_THAT(std::abs(ts_element_dual(t, {0, 0}, {0, 0}) -
                        ts_element_oracle(r, {0, 0}, {0, 0}, 40)),
               WithinAbs(0.0, 1e-12));
    double worst = 0.0;
    for (int o1 = 0; o1 <= 3; ++o1) {
      for (int o2 = 0; o2 <= 3; ++o2) {
        for (int i1 = 0; i1 <= 3; ++i1) {
          for (int i2 = 0; i2 <= 3; ++i2) {
            const Complex dual = ts_element_dual(t, {o1, o2}, {i1, i2});
            const Complex oracle =
                ts_element_oracle(-r, {o1, o2}, {i1, i2}, 40);
            worst = std::max(worst, std::abs(dual - oracle));
          }
        }
      }
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("oracle converges with the cutoff margin") {
  const double r = 0.8;
  const Complex coarse = ts_element_oracle(r, {3, 3}, {1, 1}, 25);
  const Complex fine = ts_element_oracle(r, {3, 3}, {1, 1}, 60);
  CHECK_THAT(std::abs(coarse - fine), WithinAbs(0.0, 1e-12));
}

TEST_CASE("single-mode squeezer elements") {
  // r = 0 is a Kronecker delta.
  CHECK(ss_element(0.0, 2, 2) == Complex(1.0, 0.0));
  CHECK(ss_element(0.0, 2, 0) == Complex(0.0, 0.0));
  // Parity conservation of a quadratic generator.
  CHECK(ss_element(0.6, 1, 2) == Complex(0.0, 0.0));
  CHECK(ss_element(0.6, 3, 0) == Complex(0.0, 0.0));
  // Vacuum element, checked against the generator oracle.
  const double r = 0.6;
  CHECK_THAT(ss_element(r, 0, 0).real(),
             WithinAbs(1.0 / std::sqrt(std::cosh(r)), 1e-12));
  for (int out : {0, 1, 2, 3, 4}) {
    for (int inp : {0, 1, 2, 3, 4}) {
      CHECK_THAT(std::abs(ss_element(r, out, inp) -
                          ss_element_oracle(r, out, inp, 60)),
                 WithinAbs(0.0, 1e-10));
      CHECK_THAT(std::abs(ss_element(-r, out, inp) -
                          ss_element_oracle(-r, out, inp, 60)),
                 WithinAbs(0.0, 1e-10));
    }
  }
}

TEST_CASE("sandwich factors carry opposite squeezing signs") {
  const double g = 2.0;
  const double r0 = std::acosh(std::sqrt(g));
  const SqueezerFactorPair factors = ts_sandwich_factors(g, 4);
  for (int out : {0, 1, 2, 3, 4}) {
    for (int inp : {0, 1, 2, 3, 4}) {
      CHECK_THAT(std::abs(factors.first(out, inp) -
                          ss_element_oracle(-r0, out, inp, 60).real()),
                 WithinAbs(0.0, 1e-10));
      CHECK_THAT(std::abs(factors.second(out, inp) -
                          ss_element_oracle(r0, out, inp, 60).real()),
                 WithinAbs(0.0, 1e-10));
    }
  }
  // The two assignments genuinely differ: pair creation flips sign.
  CHECK(std::abs(factors.first(2, 0) - factors.second(2, 0)) > 0.1);
}

TEST_CASE("squeezer parameter conversions") {
  const double t = 0.4;
  const double xi = xi_from_transmissivity(t);
  const double g = gain_from_transmissivity(t);
  const double r = squeezing_from_xi(xi);
  CHECK_THAT(std::tanh(r), WithinAbs(xi, 1e-15));
  CHECK_THAT(std::cosh(r) * std::cosh(r), WithinAbs(g, 1e-12));
  CHECK_THAT(squeezing_from_gain(g), WithinAbs(r, 1e-12));
  CHECK_THROWS_AS(SqueezerParam::BeamSplitter(1.2), std::invalid_argument);
  CHECK_THROWS_AS(SqueezerParam::TwoModeSqueezer(0.5), std::invalid_argument);
}

TEST_CASE("tms state values") {
  CHECK(tms_state(0.0, 4).amplitude({0, 0}) == Complex(1.0, 0.0));
  CHECK(tms_state(0.0, 4).size() == 1);
  const FockAmplitudeMap tms = tms_state(0.5, 8);
  CHECK_THAT(tms.amplitude({2, 2}).real(),
             WithinAbs(std::sqrt(0.75) * 0.25, 1e-12));
  CHECK(tms.amplitude({2, 1}) == Complex(0.0, 0.0));
  CHECK_THAT(tms.norm_squared(), WithinAbs(1.0 - std::pow(0.5, 18), 1e-13));
}
