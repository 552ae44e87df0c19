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

#include "gaussfold/passive.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "gaussfold/matrix_io.hpp"
#include "gaussfold/rng.hpp"

using namespace gaussfold;
using Catch::Matchers::WithinAbs;

namespace {

FockAmplitudeMap random_state(int modes, int photons, int cutoff, Rng& rng) {
  FockAmplitudeMap state(modes, cutoff);
  for (const auto& pattern : enumerate_shell(modes, photons)) {
    if (pattern.max_count() > cutoff) continue;
    state.set_amplitude(pattern, rng.complex_normal());
  }
  const double norm = state.norm();
  state.scale(Complex(1.0 / norm, 0.0));
  return state;
}

}  // namespace

TEST_CASE("unitarity is validated at construction") {
  Eigen::MatrixXcd bad(2, 2);
  bad << 1.0, 0.0, 0.0, 2.0;
  CHECK_THROWS_AS(PassiveUnitary(bad), std::invalid_argument);
  CHECK_NOTHROW(PassiveUnitary(beam_splitter_matrix(0.3)));
}

TEST_CASE("beam splitter element examples") {
  const double t = 0.7;
  CHECK_THAT(std::abs(bs_element(t, {1, 0}, {1, 0}) - Complex(std::sqrt(t))),
             WithinAbs(0.0, 1e-15));
  // Two photons bunching on a balanced splitter.
  const Complex bunch = bs_element(0.5, {1, 1}, {2, 0});
  CHECK_THAT(std::abs(bunch),
             WithinAbs(std::sqrt(2.0) * std::sqrt(0.5 * 0.5), 1e-14));
  // Photon-number conservation gives exact zeros.
  CHECK(bs_element(t, {1, 0}, {2, 0}) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(bs_element(0.0, {1, 0}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(bs_element(1.5, {1, 0}, {1, 0}), std::invalid_argument);
}

TEST_CASE("interferometer element on the identity") {
  const PassiveUnitary id = PassiveUnitary::identity(3);
  CHECK(interferometer_element(id, {2, 1, 0}, {2, 1, 0}) == Complex(1.0, 0.0));
  CHECK(interferometer_element(id, {2, 1, 0}, {1, 2, 0}) == Complex(0.0, 0.0));
  CHECK(interferometer_element(id, {1, 0, 0}, {2, 0, 0}) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(interferometer_element(id, {1, 0}, {1, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("two independent element routes agree on a beam splitter") {
  // bs_element uses the binomial sum, interferometer_element the permanent.
  for (double t : {0.3, 0.5, 0.9}) {
    const PassiveUnitary u(beam_splitter_matrix(t));
    for (int o1 = 0; o1 <= 4; ++o1) {
      for (int o2 = 0; o2 <= 4; ++o2) {
        for (int i1 = 0; i1 <= 4; ++i1) {
          for (int i2 = 0; i2 <= 4; ++i2) {
            const Complex a = bs_element(t, {o1, o2}, {i1, i2});
            const Complex b =
                interferometer_element(u, {o1, o2}, {i1, i2});
            CHECK_THAT(std::abs(a - b), WithinAbs(0.0, 1e-12));
          }
        }
      }
    }
  }
}

TEST_CASE("general two-mode element matches the permanent route") {
  Rng rng(77);
  const PassiveUnitary u = random_unitary(2, 1234);
  const Eigen::Matrix2cd u2 = u.matrix();
  for (int o1 = 0; o1 <= 3; ++o1) {
    for (int o2 = 0; o2 <= 3; ++o2) {
      for (int i1 = 0; i1 <= 3; ++i1) {
        for (int i2 = 0; i2 <= 3; ++i2) {
          const Complex a = two_mode_element(u2, o1, o2, i1, i2);
          const Complex b = interferometer_element(u, {o1, o2}, {i1, i2});
          CHECK_THAT(std::abs(a - b), WithinAbs(0.0, 1e-12));
        }
      }
    }
  }
}

TEST_CASE("apply_passive preserves vacuum and identity") {
  const PassiveUnitary u = random_unitary(3, 9);
  const FockAmplitudeMap vac = FockAmplitudeMap::vacuum(3, 2);
  CHECK(apply_passive(u, vac).amplitude(OccupationPattern::zeros(3)) ==
        Complex(1.0, 0.0));

  Rng rng(5);
  const FockAmplitudeMap state = random_state(3, 3, 3, rng);
  const FockAmplitudeMap same =
      apply_passive(PassiveUnitary::identity(3), state);
  for (const auto& [pattern, amp] : state.entries()) {
    CHECK_THAT(std::abs(same.amplitude(pattern) - amp), WithinAbs(0.0, 1e-14));
  }
}

TEST_CASE("apply_passive conserves photon number and norm") {
  Rng rng(17);
  const PassiveUnitary u = random_unitary(3, 42);
  const FockAmplitudeMap state = random_state(3, 3, 3, rng);
  const FockAmplitudeMap out = apply_passive(u, state);
  for (const auto& [pattern, amp] : out.entries()) {
    CHECK(pattern.total() == 3);
  }
  CHECK_THAT(out.norm_squared(), WithinAbs(1.0, 1e-10));
  // Streaming path gives the same result as the dense path.
  const FockAmplitudeMap streamed = apply_passive(u, state, 1);
  for (const auto& [pattern, amp] : out.entries()) {
    CHECK_THAT(std::abs(streamed.amplitude(pattern) - amp),
               WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("composition order: applying V then U equals applying U*V") {
  Rng rng(23);
  const PassiveUnitary u = random_unitary(3, 100);
  const PassiveUnitary v = random_unitary(3, 200);
  const PassiveUnitary uv(u.matrix() * v.matrix());
  const FockAmplitudeMap state = random_state(3, 2, 2, rng);
  const FockAmplitudeMap two_steps = apply_passive(u, apply_passive(v, state));
  const FockAmplitudeMap one_step = apply_passive(uv, state);
  for (const auto& [pattern, amp] : one_step.entries()) {
    CHECK_THAT(std::abs(two_steps.amplitude(pattern) - amp),
               WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("Fock sector matrices of a passive circuit are unitary") {
  for (int modes : {2, 3}) {
    const PassiveUnitary u = random_unitary(modes, 300 + modes);
    for (int n = 0; n <= 4; ++n) {
      const auto shell = enumerate_shell(modes, n);
      if (shell.size() > 100) continue;
      Eigen::MatrixXcd block(shell.size(), shell.size());
      for (size_t r = 0; r < shell.size(); ++r) {
        for (size_t c = 0; c < shell.size(); ++c) {
          block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
              interferometer_element(u, shell[r], shell[c]);
        }
      }
      const double defect =
          (block * block.adjoint() -
           Eigen::MatrixXcd::Identity(block.rows(), block.cols()))
              .cwiseAbs()
              .maxCoeff();
      CHECK(defect < 1e-10);
    }
  }
}

TEST_CASE("two-mode gate and subset application agree with embeddings") {
  Rng rng(31);
  const PassiveUnitary u2 = random_unitary(2, 400);
  const FockAmplitudeMap state = random_state(4, 3, 3, rng);

  const FockAmplitudeMap via_gate =
      apply_two_mode_gate(state, u2.matrix(), 1, 3);
  const PassiveUnitary embedded(embed_mode_matrix(u2.matrix(), {1, 3}, 4));
  const FockAmplitudeMap via_full = apply_passive(embedded, state);
  for (const auto& [pattern, amp] : via_full.entries()) {
    CHECK_THAT(std::abs(via_gate.amplitude(pattern) - amp),
               WithinAbs(0.0, 1e-12));
  }

  const PassiveUnitary u3 = random_unitary(3, 500);
  const FockAmplitudeMap via_subset =
      apply_passive_on(state, u3.matrix(), {0, 2, 3});
  const PassiveUnitary embedded3(embed_mode_matrix(u3.matrix(), {0, 2, 3}, 4));
  const FockAmplitudeMap via_full3 = apply_passive(embedded3, state);
  for (const auto& [pattern, amp] : via_full3.entries()) {
    CHECK_THAT(std::abs(via_subset.amplitude(pattern) - amp),
               WithinAbs(0.0, 1e-12));
  }
}
