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

#ifndef GAUSSFOLD_PASSIVE_HPP_
#define GAUSSFOLD_PASSIVE_HPP_

#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <vector>

#include "gaussfold/fock_state.hpp"
#include "gaussfold/numeric.hpp"
#include "gaussfold/occupation.hpp"
#include "gaussfold/permanent.hpp"

namespace gaussfold {

/// Per-entry tolerance for the unitarity check at construction.
inline constexpr double kUnitarityTolerance = 1e-12;

/// An M-mode linear-optical (photon-number-conserving) transformation,
/// described by its M x M mode matrix. The Fock-space action is
///   <out| U |in> = per(U_{out,in}) / sqrt(prod out_i! prod in_j!),
/// where U_{out,in} repeats row r out_r times and column c in_c times.
/// Composition of circuits corresponds to the matrix product in the same
/// order: U followed after V is U * V.
class PassiveUnitary {
 public:
  explicit PassiveUnitary(Eigen::MatrixXcd matrix) : u_(std::move(matrix)) {
    if (u_.rows() != u_.cols() || u_.rows() < 1) {
      throw std::invalid_argument("PassiveUnitary: matrix must be square");
    }
    const Eigen::MatrixXcd defect =
        u_ * u_.adjoint() -
        Eigen::MatrixXcd::Identity(u_.rows(), u_.cols());
    if (defect.cwiseAbs().maxCoeff() > kUnitarityTolerance) {
      throw std::invalid_argument(
          "PassiveUnitary: matrix is not unitary (max defect " +
          std::to_string(defect.cwiseAbs().maxCoeff()) + ")");
    }
  }

  static PassiveUnitary identity(int dimension) {
    return PassiveUnitary(Eigen::MatrixXcd::Identity(dimension, dimension));
  }

  int dimension() const { return static_cast<int>(u_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return u_; }

  PassiveUnitary transpose() const {
    return PassiveUnitary(u_.transpose());
  }

 private:
  Eigen::MatrixXcd u_;
};

/// The beam-splitter mode matrix of transmissivity t,
///   [  sqrt(t)    sqrt(1-t) ]
///   [ -sqrt(1-t)  sqrt(t)   ].
/// This real convention is the single source of truth for every beam-splitter
/// phase in the library.
inline Eigen::Matrix2cd beam_splitter_matrix(double t) {
  if (!(t > 0.0) || t > 1.0) {
    throw std::invalid_argument("beam_splitter_matrix: t must be in (0,1]");
  }
  const double c = std::sqrt(t);
  const double s = std::sqrt(1.0 - t);
  Eigen::Matrix2cd u;
  u << c, s, -s, c;
  return u;
}

inline Eigen::Matrix2cd balanced_beam_splitter_matrix() {
  return beam_splitter_matrix(0.5);
}

/// Fock matrix element of an arbitrary 2x2 mode matrix via the binomial
/// single sum (no permanent). Exactly zero when photon number is not
/// conserved.
inline Complex two_mode_element(const Eigen::Matrix2cd& u, int out1, int out2,
                                int in1, int in2) {
  if (out1 < 0 || out2 < 0 || in1 < 0 || in2 < 0) {
    throw std::invalid_argument("two_mode_element: negative photon count");
  }
  if (out1 + out2 != in1 + in2) return Complex(0.0, 0.0);
  const int lo = std::max(0, out1 - in2);
  const int hi = std::min(in1, out1);
  Complex sum(0.0, 0.0);
  for (int l = lo; l <= hi; ++l) {
    Complex term = binomial(in1, l) * binomial(in2, out1 - l);
    term *= pow_int(u(0, 0), l);
    term *= pow_int(u(0, 1), out1 - l);
    term *= pow_int(u(1, 0), in1 - l);
    term *= pow_int(u(1, 1), in2 - out1 + l);
    sum += term;
  }
  const double scale = std::exp(
      0.5 * (log_factorial(out1) + log_factorial(out2) - log_factorial(in1) -
             log_factorial(in2)));
  return sum * scale;
}

/// <out| U_BS(t) |in> for two-mode patterns, using the closed-form sum.
inline Complex bs_element(double t, const OccupationPattern& out,
                          const OccupationPattern& inp) {
  if (out.modes() != 2 || inp.modes() != 2) {
    throw std::invalid_argument("bs_element: patterns must have two modes");
  }
  return two_mode_element(beam_splitter_matrix(t), out[0], out[1], inp[0],
                          inp[1]);
}

/// Fock matrix element of an M-mode passive circuit via the permanent of the
/// row/column-repeated mode matrix. Returns exact zero (not an error) when
/// the photon totals differ.
inline Complex interferometer_element(const Eigen::MatrixXcd& u,
                                      const OccupationPattern& out,
                                      const OccupationPattern& inp) {
  const int m = static_cast<int>(u.rows());
  if (out.modes() != m || inp.modes() != m) {
    throw std::invalid_argument(
        "interferometer_element: pattern length does not match circuit size");
  }
  const int n = out.total();
  if (n != inp.total()) return Complex(0.0, 0.0);
  if (n == 0) return Complex(1.0, 0.0);

  Eigen::MatrixXcd sub(n, n);
  double log_norm = 0.0;
  int row = 0;
  for (int r = 0; r < m; ++r) {
    log_norm += log_factorial(out[r]);
    for (int c = 0; c < out[r]; ++c) {
      int col = 0;
      for (int cc = 0; cc < m; ++cc) {
        for (int k = 0; k < inp[cc]; ++k) sub(row, col++) = u(r, cc);
      }
      ++row;
    }
  }
  for (int c = 0; c < m; ++c) log_norm += log_factorial(inp[c]);
  return permanent(sub) * std::exp(-0.5 * log_norm);
}

inline Complex interferometer_element(const PassiveUnitary& u,
                                      const OccupationPattern& out,
                                      const OccupationPattern& inp) {
  return interferometer_element(u.matrix(), out, inp);
}

/// Default sector-dimension guard for apply_passive.
inline constexpr int kDefaultDenseSectorLimit = 5000;

/// Evolves a state through an M-mode passive circuit. The map is applied
/// block-wise per total-photon sector; photon number is conserved exactly.
/// Sectors up to `dense_sector_limit` basis states are materialized as a
/// dense matrix over the state's support, larger ones stream entry by entry.
inline FockAmplitudeMap apply_passive(
    const PassiveUnitary& u, const FockAmplitudeMap& state,
    int dense_sector_limit = kDefaultDenseSectorLimit) {
  const int m = u.dimension();
  if (state.modes() != m) {
    throw std::invalid_argument("apply_passive: mode-count mismatch");
  }

  // Group the support by photon total.
  std::map<int, std::vector<std::pair<OccupationPattern, Complex>>> sectors;
  int max_total = 0;
  for (const auto& [pattern, amp] : state.entries()) {
    const int n = pattern.total();
    sectors[n].emplace_back(pattern, amp);
    max_total = std::max(max_total, n);
  }

  FockAmplitudeMap result(m, std::max(state.cutoff(), max_total),
                          state.drop_tolerance());
  for (const auto& [n, support] : sectors) {
    const std::vector<OccupationPattern> shell = enumerate_shell(m, n);
    const bool dense = shell.size() <= static_cast<size_t>(dense_sector_limit);
    if (dense) {
      Eigen::MatrixXcd block(static_cast<Eigen::Index>(shell.size()),
                             static_cast<Eigen::Index>(support.size()));
      for (size_t col = 0; col < support.size(); ++col) {
        for (size_t row = 0; row < shell.size(); ++row) {
          block(static_cast<Eigen::Index>(row),
                static_cast<Eigen::Index>(col)) =
              interferometer_element(u, shell[row], support[col].first);
        }
      }
      Eigen::VectorXcd in(static_cast<Eigen::Index>(support.size()));
      for (size_t col = 0; col < support.size(); ++col) {
        in(static_cast<Eigen::Index>(col)) = support[col].second;
      }
      Eigen::VectorXcd out = block * in;
      for (size_t row = 0; row < shell.size(); ++row) {
        result.add_amplitude(shell[row],
                             out(static_cast<Eigen::Index>(row)));
      }
    } else {
      for (const auto& [pattern, amp] : support) {
        for (const auto& target : shell) {
          result.add_amplitude(target,
                               amp * interferometer_element(u, target, pattern));
        }
      }
    }
  }
  return result;
}

/// Applies a 2x2 mode matrix to modes (a, b) of a wider state, using the
/// closed-form two-mode element.
inline FockAmplitudeMap apply_two_mode_gate(const FockAmplitudeMap& state,
                                            const Eigen::Matrix2cd& u, int a,
                                            int b) {
  if (a == b || a < 0 || b < 0 || a >= state.modes() || b >= state.modes()) {
    throw std::invalid_argument("apply_two_mode_gate: bad mode indices");
  }
  int max_pair_total = 0;
  for (const auto& [pattern, amp] : state.entries()) {
    max_pair_total = std::max(max_pair_total, pattern[a] + pattern[b]);
  }
  FockAmplitudeMap result(state.modes(),
                          std::max(state.cutoff(), max_pair_total),
                          state.drop_tolerance());
  for (const auto& [pattern, amp] : state.entries()) {
    const int n = pattern[a] + pattern[b];
    std::vector<int> counts = pattern.counts();
    for (int oa = 0; oa <= n; ++oa) {
      const Complex elem = two_mode_element(u, oa, n - oa, pattern[a],
                                            pattern[b]);
      if (elem == Complex(0.0, 0.0)) continue;
      counts[static_cast<size_t>(a)] = oa;
      counts[static_cast<size_t>(b)] = n - oa;
      result.add_amplitude(OccupationPattern(counts), amp * elem);
    }
  }
  return result;
}

/// Applies an m-mode passive circuit to the listed modes of a wider state.
/// Streams entry by entry; the restricted input columns are cached since many
/// support patterns share them.
inline FockAmplitudeMap apply_passive_on(const FockAmplitudeMap& state,
                                         const Eigen::MatrixXcd& u,
                                         const std::vector<int>& modes) {
  const int m = static_cast<int>(u.rows());
  if (static_cast<int>(modes.size()) != m) {
    throw std::invalid_argument("apply_passive_on: mode list size mismatch");
  }
  for (int idx : modes) {
    if (idx < 0 || idx >= state.modes()) {
      throw std::invalid_argument("apply_passive_on: mode index out of range");
    }
  }
  if (m == 2) {
    Eigen::Matrix2cd u2 = u;
    return apply_two_mode_gate(state, u2, modes[0], modes[1]);
  }

  std::map<int, std::vector<OccupationPattern>> shells;
  std::map<OccupationPattern, std::vector<Complex>, CanonicalPatternLess>
      column_cache;

  int max_total = 0;
  for (const auto& [pattern, amp] : state.entries()) {
    int n = 0;
    for (int idx : modes) n += pattern[idx];
    max_total = std::max(max_total, n);
  }
  FockAmplitudeMap result(state.modes(), std::max(state.cutoff(), max_total),
                          state.drop_tolerance());

  for (const auto& [pattern, amp] : state.entries()) {
    std::vector<int> sel(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) sel[static_cast<size_t>(i)] = pattern[modes[i]];
    OccupationPattern restricted{std::vector<int>(sel)};
    const int n = restricted.total();
    auto shell_it = shells.find(n);
    if (shell_it == shells.end()) {
      shell_it = shells.emplace(n, enumerate_shell(m, n)).first;
    }
    const auto& shell = shell_it->second;
    auto col_it = column_cache.find(restricted);
    if (col_it == column_cache.end()) {
      std::vector<Complex> col(shell.size());
      for (size_t r = 0; r < shell.size(); ++r) {
        col[r] = interferometer_element(u, shell[r], restricted);
      }
      col_it = column_cache.emplace(restricted, std::move(col)).first;
    }
    std::vector<int> counts = pattern.counts();
    for (size_t r = 0; r < shell.size(); ++r) {
      if (col_it->second[r] == Complex(0.0, 0.0)) continue;
      for (int i = 0; i < m; ++i) {
        counts[static_cast<size_t>(modes[i])] = shell[r][i];
      }
      result.add_amplitude(OccupationPattern(counts),
                           amp * col_it->second[r]);
    }
  }
  return result;
}

/// Embeds an m-mode matrix into an identity on `total` modes at the listed
/// positions.
inline Eigen::MatrixXcd embed_mode_matrix(const Eigen::MatrixXcd& u,
                                          const std::vector<int>& modes,
                                          int total) {
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(total, total);
  const int m = static_cast<int>(u.rows());
  if (static_cast<int>(modes.size()) != m) {
    throw std::invalid_argument("embed_mode_matrix: mode list size mismatch");
  }
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      result(modes[static_cast<size_t>(r)], modes[static_cast<size_t>(c)]) =
          u(r, c);
    }
  }
  return result;
}

}  // namespace gaussfold

#endif  // GAUSSFOLD_PASSIVE_HPP_
