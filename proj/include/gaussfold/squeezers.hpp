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

#ifndef GAUSSFOLD_SQUEEZERS_HPP_
#define GAUSSFOLD_SQUEEZERS_HPP_

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "gaussfold/fock_state.hpp"
#include "gaussfold/passive.hpp"

namespace gaussfold {

/// Parameter of one Gaussian primitive. Exactly one of transmissivity t,
/// gain g and squeezing degree r is stored, according to the kind; the
/// conversions xi = sqrt(1-t) = tanh(r) and g = 1/t = cosh^2(r) relate them.
struct SqueezerParam {
  enum class Kind { kBeamSplitter, kTwoModeSqueezer, kSingleModeSqueezer };

  Kind kind;
  double value;

  static SqueezerParam BeamSplitter(double t) {
    if (!(t > 0.0) || t > 1.0) {
      throw std::invalid_argument("SqueezerParam: t must be in (0,1]");
    }
    return {Kind::kBeamSplitter, t};
  }
  static SqueezerParam TwoModeSqueezer(double g) {
    if (!(g >= 1.0)) {
      throw std::invalid_argument("SqueezerParam: gain must be >= 1");
    }
    return {Kind::kTwoModeSqueezer, g};
  }
  static SqueezerParam SingleModeSqueezer(double r) {
    return {Kind::kSingleModeSqueezer, r};
  }
};

inline double xi_from_transmissivity(double t) { return std::sqrt(1.0 - t); }
inline double gain_from_transmissivity(double t) { return 1.0 / t; }
inline double squeezing_from_gain(double g) { return std::acosh(std::sqrt(g)); }
inline double squeezing_from_xi(double xi) { return std::atanh(xi); }

/// Two-mode-squeezer Fock element of gain 1/t, obtained from the beam
/// splitter of transmissivity t by partial time reversal:
///   <out| TS(1/t) |in> = sqrt(t) * <in1, out2| BS(t) |out1, in2>.
/// The element is real and vanishes unless out1 - out2 = in1 - in2. The sign
/// convention is inherited from the real beam-splitter matrix; this dual
/// squeezer equals exp(-r (a1+ a2+ - a1 a2)) with r = arccosh(1/sqrt(t)).
inline Complex ts_element_dual(double t, const OccupationPattern& out,
                               const OccupationPattern& inp) {
  if (out.modes() != 2 || inp.modes() != 2) {
    throw std::invalid_argument("ts_element_dual: patterns must have 2 modes");
  }
  if (!(t > 0.0) || t > 1.0) {
    throw std::invalid_argument("ts_element_dual: t must be in (0,1]");
  }
  if (out[0] - out[1] != inp[0] - inp[1]) return Complex(0.0, 0.0);
  return std::sqrt(t) *
         bs_element(t, OccupationPattern{inp[0], out[1]},
                    OccupationPattern{out[0], inp[1]});
}

namespace detail {

/// exp(A) for a real antisymmetric matrix via the Hermitian matrix iA.
inline Eigen::MatrixXd expm_antisymmetric(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXcd h = Complex(0.0, 1.0) * a.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases(k) = std::exp(Complex(0.0, -es.eigenvalues()(k)));
  }
  Eigen::MatrixXcd result = es.eigenvectors() * phases.asDiagonal() *
                            es.eigenvectors().adjoint();
  return result.real();
}

}  // namespace detail

/// Matrix element of exp(r (a1+ a2+ - a1 a2)) on a two-mode Fock space with
/// per-mode cutoff `oracle_cutoff`, by numerically exponentiating the
/// truncated generator. The generator conserves n1 - n2, so each difference
/// block is a ladder that is exponentiated on its own. The truncation error
/// decays with the cutoff margin above the requested indices; a margin of a
/// few tens of photons makes results stable to well below 1e-12.
inline Complex ts_element_oracle(double r, const OccupationPattern& out,
                                 const OccupationPattern& inp,
                                 int oracle_cutoff) {
  if (out.modes() != 2 || inp.modes() != 2) {
    throw std::invalid_argument("ts_element_oracle: patterns must have 2 modes");
  }
  const int needed = std::max(out.max_count(), inp.max_count());
  if (oracle_cutoff < needed) {
    throw std::invalid_argument(
        "ts_element_oracle: cutoff too small for the requested indices");
  }
  if (out[0] - out[1] != inp[0] - inp[1]) return Complex(0.0, 0.0);

  const int d = out[0] - out[1];
  const int up = std::max(d, 0);    // offset of mode 1 along the ladder
  const int dn = std::max(-d, 0);   // offset of mode 2
  const int size = oracle_cutoff - std::abs(d) + 1;
  Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(size, size);
  for (int j = 0; j + 1 < size; ++j) {
    const double c =
        r * std::sqrt(static_cast<double>(j + up + 1) *
                      static_cast<double>(j + dn + 1));
    gen(j + 1, j) = c;
    gen(j, j + 1) = -c;
  }
  const Eigen::MatrixXd expm = detail::expm_antisymmetric(gen);
  const int j_out = std::min(out[0], out[1]);
  const int j_in = std::min(inp[0], inp[1]);
  return Complex(expm(j_out, j_in), 0.0);
}

/// Matrix element of the single-mode squeezer exp(r (a+^2 - a^2) / 2) on a
/// Fock space truncated at `oracle_cutoff`, by generator exponentiation on
/// the parity ladder.
inline Complex ss_element_oracle(double r, int out, int inp,
                                 int oracle_cutoff) {
  if (out < 0 || inp < 0) {
    throw std::invalid_argument("ss_element_oracle: negative index");
  }
  if (oracle_cutoff < std::max(out, inp)) {
    throw std::invalid_argument(
        "ss_element_oracle: cutoff too small for the requested indices");
  }
  if ((out - inp) % 2 != 0) return Complex(0.0, 0.0);

  const int parity = inp % 2;
  const int size = (oracle_cutoff - parity) / 2 + 1;
  Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(size, size);
  for (int j = 0; j + 1 < size; ++j) {
    const int n = 2 * j + parity;
    const double c = 0.5 * r *
                     std::sqrt(static_cast<double>(n + 1) *
                               static_cast<double>(n + 2));
    gen(j + 1, j) = c;
    gen(j, j + 1) = -c;
  }
  const Eigen::MatrixXd expm = detail::expm_antisymmetric(gen);
  return Complex(expm((out - parity) / 2, (inp - parity) / 2), 0.0);
}

/// <out| U_BS(1/2) TS(g) U_BS(1/2)^T |in> on two modes, as an exact finite
/// sum: the beam splitters conserve photon number, so the intermediate
/// closure sums run over single shells.
inline Complex ts_sandwich_element(double g, int out1, int out2, int in1,
                                   int in2) {
  if (!(g >= 1.0)) {
    throw std::invalid_argument("ts_sandwich_element: gain must be >= 1");
  }
  if (out1 < 0 || out2 < 0 || in1 < 0 || in2 < 0) {
    throw std::invalid_argument("ts_sandwich_element: negative index");
  }
  const double t = 1.0 / g;
  const Eigen::Matrix2cd bs = balanced_beam_splitter_matrix();
  const Eigen::Matrix2cd bs_t = bs.transpose();
  Complex sum(0.0, 0.0);
  for (int u1 = 0; u1 <= out1 + out2; ++u1) {
    const int u2 = out1 + out2 - u1;
    const Complex left = two_mode_element(bs, out1, out2, u1, u2);
    if (left == Complex(0.0, 0.0)) continue;
    for (int v1 = 0; v1 <= in1 + in2; ++v1) {
      const int v2 = in1 + in2 - v1;
      if (u1 - u2 != v1 - v2) continue;
      const Complex mid = ts_element_dual(t, OccupationPattern{u1, u2},
                                          OccupationPattern{v1, v2});
      if (mid == Complex(0.0, 0.0)) continue;
      sum += left * mid * two_mode_element(bs_t, v1, v2, in1, in2);
    }
  }
  return sum;
}

/// Fock matrices of the two single-mode squeezers hidden in the sandwich
/// U_BS TS(g) U_BS^T. With the library's conventions the first mode carries
/// squeezing degree -arccosh(sqrt(g)) and the second +arccosh(sqrt(g)).
struct SqueezerFactorPair {
  Eigen::MatrixXd first;   // mode 1, degree -arccosh(sqrt(g))
  Eigen::MatrixXd second;  // mode 2, degree +arccosh(sqrt(g))
};

inline constexpr double kFactorizationTolerance = 1e-10;

/// Extracts the tensor factors of the sandwich on indices up to n_max and
/// verifies the factorization. A residual above kFactorizationTolerance is an
/// internal-consistency failure and throws.
inline SqueezerFactorPair ts_sandwich_factors(double g, int n_max) {
  const int dim = n_max + 1;
  // T[(o1,o2),(i1,i2)] laid out as dim^2 x dim^2.
  Eigen::MatrixXd sandwich(dim * dim, dim * dim);
  for (int o1 = 0; o1 < dim; ++o1) {
    for (int o2 = 0; o2 < dim; ++o2) {
      for (int i1 = 0; i1 < dim; ++i1) {
        for (int i2 = 0; i2 < dim; ++i2) {
          sandwich(o1 * dim + o2, i1 * dim + i2) =
              ts_sandwich_element(g, o1, o2, i1, i2).real();
        }
      }
    }
  }
  const double vacuum = sandwich(0, 0);  // F1(0,0) * F2(0,0) = 1/cosh(r)
  if (!(vacuum > 0.0)) {
    throw std::runtime_error("ts_sandwich_factors: non-positive vacuum element");
  }
  const double f00 = std::sqrt(vacuum);
  SqueezerFactorPair factors;
  factors.first.resize(dim, dim);
  factors.second.resize(dim, dim);
  for (int o = 0; o < dim; ++o) {
    for (int i = 0; i < dim; ++i) {
      factors.first(o, i) = sandwich(o * dim + 0, i * dim + 0) / f00;
      factors.second(o, i) = sandwich(0 * dim + o, 0 * dim + i) / f00;
    }
  }
  double residual = 0.0;
  for (int o1 = 0; o1 < dim; ++o1) {
    for (int o2 = 0; o2 < dim; ++o2) {
      for (int i1 = 0; i1 < dim; ++i1) {
        for (int i2 = 0; i2 < dim; ++i2) {
          const double product =
              factors.first(o1, i1) * factors.second(o2, i2);
          residual = std::max(
              residual,
              std::abs(sandwich(o1 * dim + o2, i1 * dim + i2) - product));
        }
      }
    }
  }
  if (residual > kFactorizationTolerance) {
    throw std::runtime_error(
        "ts_sandwich_factors: tensor factorization failed, residual " +
        std::to_string(residual));
  }
  return factors;
}

/// Single-mode squeezer Fock element of degree r, extracted from the
/// two-mode sandwich with gain cosh^2(r). Zero when out and inp have
/// different parity.
inline Complex ss_element(double r, int out, int inp) {
  if (out < 0 || inp < 0) {
    throw std::invalid_argument("ss_element: negative index");
  }
  if ((out - inp) % 2 != 0) return Complex(0.0, 0.0);
  if (r == 0.0) return Complex(out == inp ? 1.0 : 0.0, 0.0);
  const double g = std::cosh(r) * std::cosh(r);
  const SqueezerFactorPair factors = ts_sandwich_factors(g, std::max(out, inp));
  const double value =
      (r < 0.0) ? factors.first(out, inp) : factors.second(out, inp);
  return Complex(value, 0.0);
}

/// Two-mode squeezed vacuum of parameter xi: amplitudes
/// sqrt(1 - xi^2) xi^n on |n, n> for n <= cutoff, giving squared norm
/// 1 - xi^(2 cutoff + 2).
inline FockAmplitudeMap tms_state(double xi, int cutoff) {
  if (!(xi >= 0.0) || xi >= 1.0) {
    throw std::invalid_argument("tms_state: xi must be in [0,1)");
  }
  FockAmplitudeMap state(2, cutoff);
  const double front = std::sqrt(1.0 - xi * xi);
  double amp = front;
  for (int n = 0; n <= cutoff; ++n) {
    state.set_amplitude(OccupationPattern{n, n}, Complex(amp, 0.0));
    amp *= xi;
  }
  return state;
}

}  // namespace gaussfold

#endif  // GAUSSFOLD_SQUEEZERS_HPP_
