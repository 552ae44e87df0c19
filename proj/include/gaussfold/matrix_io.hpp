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

#ifndef GAUSSFOLD_MATRIX_IO_HPP_
#define GAUSSFOLD_MATRIX_IO_HPP_

#include <Eigen/Dense>
#include <Eigen/QR>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gaussfold/passive.hpp"
#include "gaussfold/rng.hpp"

namespace gaussfold {

// Matrix file format: first line the dimension M, then M rows of M
// whitespace-separated re,im pairs.

inline Eigen::MatrixXcd load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_matrix: cannot open " + path);
  int dim = 0;
  if (!(in >> dim) || dim < 1) {
    throw std::runtime_error("load_matrix: bad dimension line in " + path);
  }
  Eigen::MatrixXcd matrix(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      std::string token;
      if (!(in >> token)) {
        throw std::runtime_error("load_matrix: truncated matrix in " + path);
      }
      const size_t comma = token.find(',');
      if (comma == std::string::npos) {
        throw std::runtime_error("load_matrix: entry '" + token +
                                 "' is not a re,im pair in " + path);
      }
      try {
        size_t used = 0;
        const double re = std::stod(token.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(token);
        const std::string im_part = token.substr(comma + 1);
        const double im = std::stod(im_part, &used);
        if (used != im_part.size()) throw std::invalid_argument(token);
        matrix(r, c) = Complex(re, im);
      } catch (const std::exception&) {
        throw std::runtime_error("load_matrix: cannot parse entry '" + token +
                                 "' in " + path);
      }
    }
  }
  return matrix;
}

inline void save_matrix(const std::string& path,
                        const Eigen::MatrixXcd& matrix) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_matrix: cannot open " + path);
  out << matrix.rows() << "\n";
  out << std::setprecision(17);
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
      if (c > 0) out << ' ';
      out << matrix(r, c).real() << ',' << matrix(r, c).imag();
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("save_matrix: write failed for " + path);
}

/// Loads a mode matrix and validates unitarity.
inline PassiveUnitary load_passive_unitary(const std::string& path) {
  try {
    return PassiveUnitary(load_matrix(path));
  } catch (const std::invalid_argument& error) {
    throw std::runtime_error("load_passive_unitary: " + path + ": " +
                             error.what());
  }
}

/// Haar-like random unitary: QR of a complex Gaussian matrix with the R
/// diagonal phases absorbed.
inline PassiveUnitary random_unitary(int dimension, std::uint64_t seed) {
  Rng rng(seed, 0x72616e64);
  Eigen::MatrixXcd gauss(dimension, dimension);
  for (int r = 0; r < dimension; ++r) {
    for (int c = 0; c < dimension; ++c) gauss(r, c) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gauss);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r_mat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < dimension; ++c) {
    const Complex d = r_mat(c, c);
    const double mag = std::abs(d);
    q.col(c) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
  }
  return PassiveUnitary(q);
}

inline PassiveUnitary dft_unitary(int dimension) {
  Eigen::MatrixXcd u(dimension, dimension);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dimension));
  for (int r = 0; r < dimension; ++r) {
    for (int c = 0; c < dimension; ++c) {
      const double angle = 2.0 * 3.14159265358979323846 * r * c / dimension;
      u(r, c) = scale * Complex(std::cos(angle), std::sin(angle));
    }
  }
  return PassiveUnitary(u);
}

/// Named presets used by configs: "identity", "dft", "random:<seed>".
inline PassiveUnitary unitary_preset(const std::string& name, int dimension) {
  if (name == "identity") return PassiveUnitary::identity(dimension);
  if (name == "dft") return dft_unitary(dimension);
  if (name.rfind("random:", 0) == 0) {
    const std::string seed_text = name.substr(7);
    try {
      size_t used = 0;
      const std::uint64_t seed = std::stoull(seed_text, &used);
      if (used != seed_text.size()) throw std::invalid_argument(seed_text);
      return random_unitary(dimension, seed);
    } catch (const std::exception&) {
      throw std::runtime_error("unitary_preset: bad seed in '" + name + "'");
    }
  }
  throw std::runtime_error("unitary_preset: unknown preset '" + name + "'");
}

}  // namespace gaussfold

#endif  // GAUSSFOLD_MATRIX_IO_HPP_
