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

#ifndef GAUSSFOLD_GAUSSIAN_PROB_HPP_
#define GAUSSFOLD_GAUSSIAN_PROB_HPP_

#include <Eigen/Dense>
#include <Eigen/LU>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gaussfold/hafnian.hpp"
#include "gaussfold/occupation.hpp"
#include "gaussfold/passive.hpp"
#include "gaussfold/symplectic.hpp"

namespace gaussfold {

/// Covariance matrix of the M lower-arm modes after the coupling layer:
/// one 4x4 block per source pair, cosh(2r)/2 on the diagonal and
/// sqrt(1 - t_j) sinh(2r)/2 on the anti-diagonal corners, with tanh(r) = xi.
/// Block j covers modes (2j, 2j+1); at t_j = 1 it reduces to M thermal
/// states.
inline CovarianceMatrix sigma_b(double xi, const std::vector<double>& t_list) {
  if (!(xi >= 0.0) || xi >= 1.0) {
    throw std::invalid_argument("sigma_b: xi must be in [0,1)");
  }
  for (double t : t_list) {
    if (!(t > 0.0) || t > 1.0) {
      throw std::invalid_argument("sigma_b: transmissivities must be in (0,1]");
    }
  }
  const int m = 2 * static_cast<int>(t_list.size());
  if (m == 0) throw std::invalid_argument("sigma_b: empty transmissivity list");
  const double r = std::atanh(xi);
  const double diag = 0.5 * std::cosh(2.0 * r);
  Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  sigma.topLeftCorner(m, m).diagonal().setConstant(diag);
  sigma.bottomRightCorner(m, m).diagonal().setConstant(diag);
  for (size_t j = 0; j < t_list.size(); ++j) {
    const double corner =
        0.5 * std::sqrt(1.0 - t_list[j]) * std::sinh(2.0 * r);
    const int l1 = static_cast<int>(2 * j);
    const int l2 = l1 + 1;
    sigma(l1, m + l2) = corner;
    sigma(l2, m + l1) = corner;
    sigma(m + l2, l1) = corner;
    sigma(m + l1, l2) = corner;
  }
  return CovarianceMatrix(sigma);
}

/// sigma_out + I/2 for the lower-arm state evolved through the passive
/// circuit W_B, the matrix entering the hafnian probability formula.
inline Eigen::MatrixXcd sigma_tilde_out(double xi,
                                        const std::vector<double>& t_list,
                                        const PassiveUnitary& w_b) {
  const CovarianceMatrix sb = sigma_b(xi, t_list);
  if (w_b.dimension() != sb.modes()) {
    throw std::invalid_argument("sigma_tilde_out: W_B dimension mismatch");
  }
  const SymplecticMatrix s = passive_symplectic(w_b.matrix());
  const CovarianceMatrix out = evolve_covariance(s, sb);
  return out.matrix() +
         0.5 * Eigen::MatrixXcd::Identity(2 * sb.modes(), 2 * sb.modes());
}

/// Photon-counting probability of pattern m on the lower-arm Gaussian state:
///   p(m) = Haf(A_m) / (m_1! ... m_M! sqrt(det sigma_tilde)),
/// with A = [[0,I],[I,0]] (I - sigma_tilde^{-1}) and A_m obtained by
/// repeating rows/columns i and i+M of A m_i times (deleting them when
/// m_i = 0).
inline double marginal_probability(const OccupationPattern& m_pattern,
                                   double xi,
                                   const std::vector<double>& t_list,
                                   const PassiveUnitary& w_b) {
  const int m = w_b.dimension();
  if (m_pattern.modes() != m) {
    throw std::invalid_argument("marginal_probability: pattern length mismatch");
  }
  const Eigen::MatrixXcd sigma_tilde = sigma_tilde_out(xi, t_list, w_b);

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(sigma_tilde);
  const Eigen::VectorXcd diag = lu.matrixLU().diagonal();
  double min_pivot = diag.cwiseAbs().minCoeff();
  double max_pivot = diag.cwiseAbs().maxCoeff();
  if (min_pivot <= 0.0 || max_pivot / min_pivot > 1e12) {
    throw std::runtime_error(
        "marginal_probability: sigma_tilde_out is singular or "
        "ill-conditioned (pivot ratio " +
        std::to_string(max_pivot / std::max(min_pivot, 1e-300)) + ")");
  }
  const double det = lu.determinant().real();
  if (!(det > 0.0)) {
    throw std::runtime_error("marginal_probability: non-positive determinant");
  }
  const Eigen::MatrixXcd inv =
      lu.solve(Eigen::MatrixXcd::Identity(2 * m, 2 * m));

  Eigen::MatrixXcd x_swap = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  x_swap.topRightCorner(m, m).setIdentity();
  x_swap.bottomLeftCorner(m, m).setIdentity();
  const Eigen::MatrixXcd a =
      x_swap * (Eigen::MatrixXcd::Identity(2 * m, 2 * m) - inv);

  std::vector<int> index;
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m_pattern[i]; ++k) index.push_back(i);
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m_pattern[i]; ++k) index.push_back(m + i);
  }
  const int dim = static_cast<int>(index.size());
  Eigen::MatrixXcd a_m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      a_m(r, c) = a(index[static_cast<size_t>(r)],
                    index[static_cast<size_t>(c)]);
    }
  }
  a_m = 0.5 * (a_m + a_m.transpose()).eval();

  double denom = std::sqrt(det);
  for (int i = 0; i < m; ++i) denom *= factorial(m_pattern[i]);
  return hafnian(a_m).real() / denom;
}

}  // namespace gaussfold

#endif  // GAUSSFOLD_GAUSSIAN_PROB_HPP_
