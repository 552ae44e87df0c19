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

#ifndef GAUSSFOLD_FOCK_STATE_HPP_
#define GAUSSFOLD_FOCK_STATE_HPP_

#include <cmath>
#include <map>
#include <stdexcept>

#include "gaussfold/numeric.hpp"
#include "gaussfold/occupation.hpp"

namespace gaussfold {

/// Default magnitude below which stored amplitudes are dropped. Together with
/// the per-mode Fock cutoff this is the only source of silent truncation in
/// the library.
inline constexpr double kDefaultDropTolerance = 1e-15;

/// Sparse complex amplitudes over occupation patterns with an explicit
/// per-mode cutoff. Patterns that are not stored read as amplitude zero.
class FockAmplitudeMap {
 public:
  using EntryMap = std::map<OccupationPattern, Complex, CanonicalPatternLess>;

  FockAmplitudeMap(int modes, int cutoff,
                   double drop_tolerance = kDefaultDropTolerance)
      : modes_(modes), cutoff_(cutoff), drop_tolerance_(drop_tolerance) {
    if (modes_ < 1) throw std::invalid_argument("FockAmplitudeMap: modes < 1");
    if (cutoff_ < 0) {
      throw std::invalid_argument("FockAmplitudeMap: negative cutoff");
    }
  }

  static FockAmplitudeMap vacuum(int modes, int cutoff) {
    FockAmplitudeMap state(modes, cutoff);
    state.set_amplitude(OccupationPattern::zeros(modes), Complex(1.0, 0.0));
    return state;
  }

  /// A unit basis state on the given pattern.
  static FockAmplitudeMap basis_state(const OccupationPattern& pattern,
                                      int cutoff) {
    FockAmplitudeMap state(pattern.modes(), cutoff);
    state.set_amplitude(pattern, Complex(1.0, 0.0));
    return state;
  }

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  double drop_tolerance() const { return drop_tolerance_; }
  size_t size() const { return entries_.size(); }
  const EntryMap& entries() const { return entries_; }

  Complex amplitude(const OccupationPattern& pattern) const {
    auto it = entries_.find(pattern);
    return it == entries_.end() ? Complex(0.0, 0.0) : it->second;
  }

  void set_amplitude(const OccupationPattern& pattern, Complex value) {
    check_pattern(pattern);
    if (std::abs(value) <= drop_tolerance_) {
      entries_.erase(pattern);
    } else {
      entries_[pattern] = value;
    }
  }

  void add_amplitude(const OccupationPattern& pattern, Complex value) {
    check_pattern(pattern);
    auto it = entries_.find(pattern);
    Complex sum = (it == entries_.end() ? value : it->second + value);
    if (std::abs(sum) <= drop_tolerance_) {
      if (it != entries_.end()) entries_.erase(it);
    } else if (it == entries_.end()) {
      entries_.emplace(pattern, sum);
    } else {
      it->second = sum;
    }
  }

  double norm_squared() const {
    double n2 = 0.0;
    for (const auto& [pattern, amp] : entries_) n2 += std::norm(amp);
    return n2;
  }

  double norm() const { return std::sqrt(norm_squared()); }

  void scale(Complex factor) {
    for (auto& [pattern, amp] : entries_) amp *= factor;
  }

 private:
  void check_pattern(const OccupationPattern& pattern) const {
    if (pattern.modes() != modes_) {
      throw std::invalid_argument("FockAmplitudeMap: pattern has " +
                                  std::to_string(pattern.modes()) +
                                  " modes, state has " +
                                  std::to_string(modes_));
    }
    if (pattern.max_count() > cutoff_) {
      throw std::invalid_argument(
          "FockAmplitudeMap: pattern exceeds per-mode cutoff " +
          std::to_string(cutoff_));
    }
  }

  int modes_;
  int cutoff_;
  double drop_tolerance_;
  EntryMap entries_;
};

/// <a|b> = sum over patterns of conj(a[p]) * b[p].
inline Complex inner_product(const FockAmplitudeMap& a,
                             const FockAmplitudeMap& b) {
  if (a.modes() != b.modes()) {
    throw std::invalid_argument("inner_product: mode-count mismatch");
  }
  const FockAmplitudeMap& small = a.size() <= b.size() ? a : b;
  const FockAmplitudeMap& large = a.size() <= b.size() ? b : a;
  const bool small_is_a = (&small == &a);
  Complex result(0.0, 0.0);
  for (const auto& [pattern, amp] : small.entries()) {
    Complex other = large.amplitude(pattern);
    result += small_is_a ? std::conj(amp) * other : std::conj(other) * amp;
  }
  return result;
}

/// Tensor product: patterns concatenate, amplitudes multiply.
inline FockAmplitudeMap tensor(const FockAmplitudeMap& a,
                               const FockAmplitudeMap& b) {
  FockAmplitudeMap result(a.modes() + b.modes(),
                          std::max(a.cutoff(), b.cutoff()),
                          std::min(a.drop_tolerance(), b.drop_tolerance()));
  for (const auto& [pa, va] : a.entries()) {
    for (const auto& [pb, vb] : b.entries()) {
      result.set_amplitude(concat(pa, pb), va * vb);
    }
  }
  return result;
}

}  // namespace gaussfold

#endif  // GAUSSFOLD_FOCK_STATE_HPP_
