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

#include "gaussfold/symplectic.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "gaussfold/matrix_io.hpp"
#include "gaussfold/rng.hpp"

using namespace gaussfold;
using Catch::Matchers::WithinAbs;

namespace {

SymplecticMatrix random_composed(int modes, int primitives, Rng& rng) {
  SymplecticMatrix s = SymplecticMatrix::identity(modes);
  for (int i = 0; i < primitives; ++i) {
    const int kind = static_cast<int>(rng.uniform_below(3));
    if (kind == 0 && modes >= 2) {
      const double t = 0.2 + 0.79 * rng.uniform();
      const int a = static_cast<int>(rng.uniform_below(modes));
      const int b =
          (a + 1 + static_cast<int>(rng.uniform_below(modes - 1))) % modes;
      s = compose(embed_symplectic(
                      symplectic_primitive(SqueezerParam::BeamSplitter(t)),
                      {a, b}, modes),
                  s);
    } else if (kind == 1 && modes >= 2) {
      const double g = 1.0 + 1.5 * rng.uniform();
      const int a = static_cast<int>(rng.uniform_below(modes));
      const int b =
          (a + 1 + static_cast<int>(rng.uniform_below(modes - 1))) % modes;
      s = compose(embed_symplectic(
                      symplectic_primitive(SqueezerParam::TwoModeSqueezer(g)),
                      {a, b}, modes),
                  s);
    } else {
      const double r = -1.0 + 2.0 * rng.uniform();
      const int a = static_cast<int>(rng.uniform_below(modes));
      s = compose(
          embed_symplectic(
              symplectic_primitive(SqueezerParam::SingleModeSqueezer(r)), {a},
              modes),
          s);
    }
  }
  return s;
}

}  // namespace

TEST_CASE("primitive matrices satisfy the symplectic invariant") {
  // t = 1 and g = 1 are identities.
  CHECK((symplectic_primitive(SqueezerParam::BeamSplitter(1.0)).matrix() -
         Eigen::MatrixXcd::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  CHECK((symplectic_primitive(SqueezerParam::TwoModeSqueezer(1.0)).matrix() -
         Eigen::MatrixXcd::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  // Construction itself validates S Sigma S+ = Sigma.
  CHECK_NOTHROW(symplectic_primitive(SqueezerParam::SingleModeSqueezer(0.3)));
  CHECK_NOTHROW(symplectic_primitive(SqueezerParam::TwoModeSqueezer(2.5)));

  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int modes = 2 + static_cast<int>(rng.uniform_below(3));
    CHECK_NOTHROW(random_composed(modes, 5, rng));
  }
}

TEST_CASE("non-symplectic matrices are rejected") {
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(4, 4);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(SymplecticMatrix(bad), std::invalid_argument);
}

TEST_CASE("covariance evolution") {
  const CovarianceMatrix vac = CovarianceMatrix::vacuum(1);
  const SymplecticMatrix id = SymplecticMatrix::identity(1);
  CHECK((evolve_covariance(id, vac).matrix() - vac.matrix())
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  const double r = 0.45;
  const SymplecticMatrix squeezer =
      symplectic_primitive(SqueezerParam::SingleModeSqueezer(r));
  const CovarianceMatrix squeezed = evolve_covariance(squeezer, vac);
  CHECK_THAT(squeezed.matrix()(0, 0).real(),
             WithinAbs(0.5 * std::cosh(2.0 * r), 1e-13));
  CHECK_THAT(squeezed.matrix()(0, 1).real(),
             WithinAbs(0.5 * std::sinh(2.0 * r), 1e-13));

  // Evolving by S then S^{-1} is the identity map.
  const SymplecticMatrix inverse =
      symplectic_primitive(SqueezerParam::SingleModeSqueezer(-r));
  const CovarianceMatrix back = evolve_covariance(inverse, squeezed);
  CHECK((back.matrix() - vac.matrix()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("takagi factorization on random symmetric matrices") {
  Rng rng(12345);
  for (int n : {1, 2, 3, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      Eigen::MatrixXcd a(n, n);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) a(r, c) = rng.complex_normal();
      }
      a = ((a + a.transpose()) * 0.5).eval();
      const TakagiFactors factors = takagi(a);
      const Eigen::MatrixXcd rebuilt =
          factors.u * factors.values.asDiagonal() * factors.u.transpose();
      CHECK((rebuilt - a).cwiseAbs().maxCoeff() < 1e-10);
      CHECK((factors.u * factors.u.adjoint() -
             Eigen::MatrixXcd::Identity(n, n))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
      CHECK(factors.values.minCoeff() >= 0.0);
    }
  }
  // Rank-deficient symmetric input exercises the kernel path.
  Eigen::MatrixXcd rank1 = Eigen::MatrixXcd::Zero(3, 3);
  Eigen::VectorXcd v(3);
  v << Complex(1.0, 0.5), Complex(0.0, -1.0), Complex(0.25, 0.0);
  rank1 = v * v.transpose();
  const TakagiFactors factors = takagi(rank1);
  CHECK((factors.u * factors.values.asDiagonal() * factors.u.transpose() -
         rank1)
            .cwiseAbs()
            .maxCoeff() < 1e-10);
}

TEST_CASE("bloch-messiah canonical cases") {
  const BlochMessiahFactors id = bloch_messiah(SymplecticMatrix::identity(3));
  for (double r : id.r_list) CHECK_THAT(r, WithinAbs(0.0, 1e-12));

  const BlochMessiahFactors single =
      bloch_messiah(symplectic_primitive(SqueezerParam::SingleModeSqueezer(0.7)));
  REQUIRE(single.r_list.size() == 1);
  CHECK_THAT(single.r_list[0], WithinAbs(0.7, 1e-12));
  CHECK(is_passive(single.s1));
  CHECK(is_passive(single.s2));

  // A negative squeezing degree is absorbed into the passive phases.
  const BlochMessiahFactors negative = bloch_messiah(
      symplectic_primitive(SqueezerParam::SingleModeSqueezer(-0.7)));
  CHECK_THAT(negative.r_list[0], WithinAbs(0.7, 1e-12));
}

TEST_CASE("bloch-messiah round trip on random compositions") {
  Rng rng(777);
  for (int modes : {2, 3, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      const SymplecticMatrix s = random_composed(modes, 6, rng);
      const BlochMessiahFactors factors = bloch_messiah(s);
      CHECK(factors.reconstruction_residual < 1e-10);
      CHECK(is_passive(factors.s1));
      CHECK(is_passive(factors.s2));
      for (size_t j = 1; j < factors.r_list.size(); ++j) {
        CHECK(factors.r_list[j - 1] >= factors.r_list[j] - 1e-12);
      }
      for (double r : factors.r_list) CHECK(r >= 0.0);
    }
  }
}

TEST_CASE("bloch-messiah handles degenerate squeezing") {
  // Two equal squeezers conjugated by random passive circuits: the cosh
  // spectrum is fully degenerate.
  const double r = 0.55;
  Eigen::MatrixXcd layer = Eigen::MatrixXcd::Zero(4, 4);
  layer(0, 0) = std::cosh(r);
  layer(0, 2) = std::sinh(r);
  layer(1, 1) = std::cosh(r);
  layer(1, 3) = std::sinh(r);
  layer(2, 0) = std::sinh(r);
  layer(2, 2) = std::cosh(r);
  layer(3, 1) = std::sinh(r);
  layer(3, 3) = std::cosh(r);
  const SymplecticMatrix left = passive_symplectic(random_unitary(2, 5).matrix());
  const SymplecticMatrix right =
      passive_symplectic(random_unitary(2, 6).matrix());
  const SymplecticMatrix s =
      compose(left, compose(SymplecticMatrix(layer), right));
  const BlochMessiahFactors factors = bloch_messiah(s);
  CHECK(factors.reconstruction_residual < 1e-10);
  CHECK_THAT(factors.r_list[0], WithinAbs(r, 1e-10));
  CHECK_THAT(factors.r_list[1], WithinAbs(r, 1e-10));
}

TEST_CASE("bloch-messiah rejects structureless input") {
  // Symplectic w.r.t. the metric but without the conjugate block pairing.
  Eigen::MatrixXcd odd = Eigen::MatrixXcd::Identity(4, 4);
  odd(0, 0) = Complex(0.0, 1.0);
  odd(2, 2) = Complex(0.0, 1.0);  // not conj of the (0,0) block
  // S Sigma S+ still holds for this diagonal phase matrix.
  const SymplecticMatrix s{odd};
  CHECK_THROWS_AS(bloch_messiah(s), std::invalid_argument);
}
