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

#ifndef GAUSSFOLD_SYMPLECTIC_HPP_
#define GAUSSFOLD_SYMPLECTIC_HPP_

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gaussfold/numeric.hpp"
#include "gaussfold/squeezers.hpp"

namespace gaussfold {

inline constexpr double kSymplecticTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kPhysicalityTolerance = 1e-10;

/// diag(I_M, -I_M), the metric preserved by symplectic matrices in the
/// (a_1..a_M, a_1+..a_M+) ordering.
inline Eigen::MatrixXcd symplectic_metric(int modes) {
  Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Identity(2 * modes, 2 * modes);
  sigma.bottomRightCorner(modes, modes) *= -1.0;
  return sigma;
}

/// Phase-space representation of a Gaussian unitary: a 2M x 2M matrix S with
/// S Sigma S+ = Sigma, basis ordered (a_1..a_M, a_1+..a_M+).
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(Eigen::MatrixXcd s) : s_(std::move(s)) {
    if (s_.rows() != s_.cols() || s_.rows() < 2 || s_.rows() % 2 != 0) {
      throw std::invalid_argument(
          "SymplecticMatrix: needs a square 2M x 2M matrix");
    }
    const int m = modes();
    const Eigen::MatrixXcd sigma = symplectic_metric(m);
    const double defect =
        (s_ * sigma * s_.adjoint() - sigma).cwiseAbs().maxCoeff();
    if (defect > kSymplecticTolerance) {
      throw std::invalid_argument(
          "SymplecticMatrix: S Sigma S+ != Sigma (max defect " +
          std::to_string(defect) + ")");
    }
  }

  static SymplecticMatrix identity(int modes) {
    return SymplecticMatrix(
        Eigen::MatrixXcd::Identity(2 * modes, 2 * modes));
  }

  int modes() const { return static_cast<int>(s_.rows()) / 2; }
  const Eigen::MatrixXcd& matrix() const { return s_; }

 private:
  Eigen::MatrixXcd s_;
};

/// Covariance matrix of a zero-displacement M-mode Gaussian state in the
/// (a, a+) ordering; Hermitian, with sigma + Sigma/2 >= 0.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Eigen::MatrixXcd sigma) : sigma_(std::move(sigma)) {
    if (sigma_.rows() != sigma_.cols() || sigma_.rows() < 2 ||
        sigma_.rows() % 2 != 0) {
      throw std::invalid_argument(
          "CovarianceMatrix: needs a square 2M x 2M matrix");
    }
    if ((sigma_ - sigma_.adjoint()).cwiseAbs().maxCoeff() >
        kHermitianTolerance) {
      throw std::invalid_argument("CovarianceMatrix: matrix is not Hermitian");
    }
    const Eigen::MatrixXcd test =
        sigma_ + 0.5 * symplectic_metric(modes());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        Eigen::MatrixXcd(0.5 * (test + test.adjoint())));
    if (es.eigenvalues().minCoeff() < -kPhysicalityTolerance) {
      throw std::invalid_argument(
          "CovarianceMatrix: sigma + Sigma/2 has eigenvalue " +
          std::to_string(es.eigenvalues().minCoeff()));
    }
  }

  static CovarianceMatrix vacuum(int modes) {
    return CovarianceMatrix(
        0.5 * Eigen::MatrixXcd::Identity(2 * modes, 2 * modes));
  }

  int modes() const { return static_cast<int>(sigma_.rows()) / 2; }
  const Eigen::MatrixXcd& matrix() const { return sigma_; }

 private:
  Eigen::MatrixXcd sigma_;
};

/// The phase-space matrix of one primitive: S_BS and S_TS act on two modes,
/// S_SS on one.
inline SymplecticMatrix symplectic_primitive(const SqueezerParam& param) {
  switch (param.kind) {
    case SqueezerParam::Kind::kBeamSplitter: {
      const Eigen::Matrix2cd u = beam_splitter_matrix(param.value);
      Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(4, 4);
      s.topLeftCorner(2, 2) = u;
      s.bottomRightCorner(2, 2) = u;
      return SymplecticMatrix(s);
    }
    case SqueezerParam::Kind::kTwoModeSqueezer: {
      const double g = param.value;
      const double c = std::sqrt(g);
      const double s1 = std::sqrt(g - 1.0);
      Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(4, 4);
      s(0, 0) = c;
      s(0, 3) = s1;
      s(1, 1) = c;
      s(1, 2) = s1;
      s(2, 1) = s1;
      s(2, 2) = c;
      s(3, 0) = s1;
      s(3, 3) = c;
      return SymplecticMatrix(s);
    }
    case SqueezerParam::Kind::kSingleModeSqueezer: {
      const double r = param.value;
      Eigen::MatrixXcd s(2, 2);
      s << std::cosh(r), std::sinh(r), std::sinh(r), std::cosh(r);
      return SymplecticMatrix(s);
    }
  }
  throw std::logic_error("symplectic_primitive: unreachable");
}

/// Symplectic representation diag(U, conj(U)) of a passive circuit.
inline SymplecticMatrix passive_symplectic(const Eigen::MatrixXcd& u) {
  const int m = static_cast<int>(u.rows());
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  s.topLeftCorner(m, m) = u;
  s.bottomRightCorner(m, m) = u.conjugate();
  return SymplecticMatrix(s);
}

/// Embeds a k-mode symplectic at the listed modes of an M-mode identity.
inline SymplecticMatrix embed_symplectic(const SymplecticMatrix& s,
                                         const std::vector<int>& modes,
                                         int total_modes) {
  const int k = s.modes();
  if (static_cast<int>(modes.size()) != k) {
    throw std::invalid_argument("embed_symplectic: mode list size mismatch");
  }
  Eigen::MatrixXcd result =
      Eigen::MatrixXcd::Identity(2 * total_modes, 2 * total_modes);
  auto global = [&](int local) {
    // local index in (a_1..a_k, a_1+..a_k+) -> global in the 2M ordering.
    return local < k ? modes[static_cast<size_t>(local)]
                     : total_modes + modes[static_cast<size_t>(local - k)];
  };
  for (int r = 0; r < 2 * k; ++r) {
    for (int c = 0; c < 2 * k; ++c) {
      result(global(r), global(c)) = s.matrix()(r, c);
    }
  }
  return SymplecticMatrix(result);
}

inline SymplecticMatrix compose(const SymplecticMatrix& after,
                                const SymplecticMatrix& before) {
  return SymplecticMatrix(after.matrix() * before.matrix());
}

/// sigma_out = S sigma_in S+.
inline CovarianceMatrix evolve_covariance(const SymplecticMatrix& s,
                                          const CovarianceMatrix& sigma) {
  if (s.modes() != sigma.modes()) {
    throw std::invalid_argument("evolve_covariance: dimension mismatch");
  }
  Eigen::MatrixXcd out = s.matrix() * sigma.matrix() * s.matrix().adjoint();
  return CovarianceMatrix(0.5 * (out + out.adjoint()));
}

/// Takagi factorization A = U diag(s) U^T of a complex symmetric matrix,
/// via the real symmetric embedding B = [[Re A, Im A], [Im A, -Re A]]: an
/// eigenpair B [x; y] = s [x; y] with s >= 0 yields a Takagi column
/// u = x + i y with A conj(u) = s u.
struct TakagiFactors {
  Eigen::MatrixXcd u;
  Eigen::VectorXd values;  // non-negative, descending
};

inline TakagiFactors takagi(const Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("takagi: non-square input");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw std::invalid_argument("takagi: input is not symmetric");
  }
  Eigen::MatrixXd b(2 * n, 2 * n);
  b.topLeftCorner(n, n) = a.real();
  b.topRightCorner(n, n) = a.imag();
  b.bottomLeftCorner(n, n) = a.imag();
  b.bottomRightCorner(n, n) = -a.real();
  b = 0.5 * (b + b.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);

  // Eigenvalues come in +/- pairs. Positive pairs map directly onto Takagi
  // columns; the (even-dimensional) kernel collapses two real eigenvectors
  // onto one complex column, so it is filled by Gram-Schmidt.
  const double zero_tol = 1e-10 * scale;
  TakagiFactors factors;
  factors.u.resize(n, n);
  factors.values.resize(n);
  Eigen::Index col = 0;
  for (Eigen::Index k = 2 * n - 1; k >= 0 && col < n; --k) {
    const double value = es.eigenvalues()(k);
    if (value <= zero_tol) break;
    Eigen::VectorXd x = es.eigenvectors().col(k).head(n);
    Eigen::VectorXd y = es.eigenvectors().col(k).tail(n);
    factors.u.col(col) = x + Complex(0.0, 1.0) * y;
    factors.values(col) = value;
    ++col;
  }
  for (Eigen::Index k = 0; k < 2 * n && col < n; ++k) {
    if (std::abs(es.eigenvalues()(k)) > zero_tol) continue;
    Eigen::VectorXcd u = es.eigenvectors().col(k).head(n) +
                         Complex(0.0, 1.0) * es.eigenvectors().col(k).tail(n);
    for (Eigen::Index c = 0; c < col; ++c) {
      u -= factors.u.col(c) * factors.u.col(c).dot(u);
    }
    if (u.norm() > 1e-6) {
      u.normalize();
      factors.u.col(col) = u;
      factors.values(col) = 0.0;
      ++col;
    }
  }
  if (col != n) throw std::runtime_error("takagi: failed to build a basis");
  return factors;
}

/// Bloch-Messiah factors of a Gaussian transformation: passive circuits S1
/// and S2 around a layer of single-mode squeezers of degrees r_list.
struct BlochMessiahFactors {
  SymplecticMatrix s1;
  std::vector<double> r_list;  // non-negative, descending
  SymplecticMatrix s2;
  double reconstruction_residual = 0.0;

  Eigen::MatrixXcd squeezer_layer() const {
    const int m = s1.modes();
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
    for (int j = 0; j < m; ++j) {
      const double c = std::cosh(r_list[static_cast<size_t>(j)]);
      const double s = std::sinh(r_list[static_cast<size_t>(j)]);
      d(j, j) = c;
      d(j, m + j) = s;
      d(m + j, j) = s;
      d(m + j, m + j) = c;
    }
    return d;
  }
};

/// Tests that a symplectic is passive: zero off-diagonal M x M blocks and a
/// unitary top-left block.
inline bool is_passive(const SymplecticMatrix& s, double tol = 1e-10) {
  const int m = s.modes();
  const Eigen::MatrixXcd& mat = s.matrix();
  if (mat.topRightCorner(m, m).cwiseAbs().maxCoeff() > tol) return false;
  if (mat.bottomLeftCorner(m, m).cwiseAbs().maxCoeff() > tol) return false;
  const Eigen::MatrixXcd u = mat.topLeftCorner(m, m);
  return (u * u.adjoint() - Eigen::MatrixXcd::Identity(m, m))
             .cwiseAbs()
             .maxCoeff() <= tol;
}

/// Bloch-Messiah decomposition S = S1 [sum of S_SS(r_j)] S2 with passive S1,
/// S2 and non-negative descending squeezing degrees (signs are absorbed into
/// the passive factors' phases).
///
/// Construction: the Bogoliubov blocks S = [[E, F], [conj F, conj E]] satisfy
/// E = U cosh(R) V+ and F = U sinh(R) V^T for unitary U, V. The SVD of E
/// fixes U, V up to degenerate-subspace freedom; inside each degenerate
/// group, Q = U+ F conj(V) equals sinh(r) B B^T for a unitary block B, which
/// a Takagi factorization recovers.
inline BlochMessiahFactors bloch_messiah(const SymplecticMatrix& s) {
  const int m = s.modes();
  const Eigen::MatrixXcd e = s.matrix().topLeftCorner(m, m);
  const Eigen::MatrixXcd f = s.matrix().topRightCorner(m, m);
  const double structure =
      std::max((s.matrix().bottomLeftCorner(m, m) - f.conjugate())
                   .cwiseAbs()
                   .maxCoeff(),
               (s.matrix().bottomRightCorner(m, m) - e.conjugate())
                   .cwiseAbs()
                   .maxCoeff());
  if (structure > kSymplecticTolerance) {
    throw std::invalid_argument(
        "bloch_messiah: input lacks the Bogoliubov block structure");
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      e, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXcd u = svd.matrixU();
  Eigen::MatrixXcd v = svd.matrixV();
  Eigen::VectorXd cosh_r = svd.singularValues();  // descending, >= 1

  // Fix the degenerate-subspace freedom group by group.
  const double group_tol = 1e-8 * std::max(1.0, cosh_r(0));
  int start = 0;
  while (start < m) {
    int stop = start + 1;
    while (stop < m && std::abs(cosh_r(stop) - cosh_r(start)) <= group_tol) {
      ++stop;
    }
    const int size = stop - start;
    const double sinh_r =
        std::sqrt(std::max(cosh_r(start) * cosh_r(start) - 1.0, 0.0));
    if (sinh_r > 1e-10) {
      // Q = U+ F conj(V) restricted to the group equals sinh(r) W W^T; the
      // gauge U -> U W, V -> V W leaves E = U cosh(R) V+ invariant and turns
      // the group's F block into U sinh(R) V^T.
      const Eigen::MatrixXcd q = u.middleCols(start, size).adjoint() * f *
                                 v.middleCols(start, size).conjugate();
      const TakagiFactors tak = takagi(q);
      u.middleCols(start, size) = (u.middleCols(start, size) * tak.u).eval();
      v.middleCols(start, size) = (v.middleCols(start, size) * tak.u).eval();
    }
    start = stop;
  }

  // The squeezing degrees come from Q = U+ F conj(V), which is diag(sinh r)
  // in the fixed bases. Reading sinh off Q avoids the acosh noise blow-up
  // near unit singular values (the singular values only order the modes).
  std::vector<double> r_list(static_cast<size_t>(m));
  {
    const Eigen::MatrixXcd q_diag = u.adjoint() * f * v.conjugate();
    for (int j = 0; j < m; ++j) {
      r_list[static_cast<size_t>(j)] =
          std::asinh(std::max(q_diag(j, j).real(), 0.0));
    }
  }

  // Deterministic sign/phase canonicalization of the paired columns. Columns
  // with squeezing keep Q real, so only sign flips are allowed there; zero
  // squeezing columns admit a full phase.
  for (int j = 0; j < m; ++j) {
    int lead = 0;
    while (lead < m && std::abs(u(lead, j)) < 1e-12) ++lead;
    if (lead == m) continue;
    const Complex z = u(lead, j);
    Complex phase;
    if (r_list[static_cast<size_t>(j)] > 1e-10) {
      const bool flip =
          (std::abs(z.real()) > 1e-12) ? (z.real() < 0.0) : (z.imag() < 0.0);
      phase = flip ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
    } else {
      phase = std::conj(z) / std::abs(z);
    }
    u.col(j) *= phase;
    v.col(j) *= phase;
  }

  BlochMessiahFactors factors{passive_symplectic(u),
                              std::move(r_list),
                              passive_symplectic(v.adjoint()),
                              0.0};
  const Eigen::MatrixXcd rebuilt = factors.s1.matrix() *
                                   factors.squeezer_layer() *
                                   factors.s2.matrix();
  factors.reconstruction_residual =
      (rebuilt - s.matrix()).cwiseAbs().maxCoeff();
  if (factors.reconstruction_residual > kSymplecticTolerance) {
    throw std::runtime_error(
        "bloch_messiah: reconstruction residual " +
        std::to_string(factors.reconstruction_residual) +
        " exceeds tolerance");
  }
  return factors;
}

}  // namespace gaussfold

#endif  // GAUSSFOLD_SYMPLECTIC_HPP_
