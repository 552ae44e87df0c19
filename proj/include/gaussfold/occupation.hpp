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

#ifndef GAUSSFOLD_OCCUPATION_HPP_
#define GAUSSFOLD_OCCUPATION_HPP_

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaussfold/numeric.hpp"

namespace gaussfold {

/// A photon-count vector over optical modes. Entries are non-negative;
/// the value is immutable once constructed.
class OccupationPattern {
 public:
  OccupationPattern() = default;

  explicit OccupationPattern(std::vector<int> counts)
      : counts_(std::move(counts)) {
    for (int c : counts_) {
      if (c < 0) {
        throw std::invalid_argument("OccupationPattern: negative count");
      }
    }
  }

  OccupationPattern(std::initializer_list<int> counts)
      : OccupationPattern(std::vector<int>(counts)) {}

  static OccupationPattern zeros(int modes) {
    if (modes < 0) throw std::invalid_argument("zeros: negative mode count");
    return OccupationPattern(std::vector<int>(modes, 0));
  }

  int modes() const { return static_cast<int>(counts_.size()); }
  int operator[](int i) const { return counts_[static_cast<size_t>(i)]; }
  const std::vector<int>& counts() const { return counts_; }

  int total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

  int max_count() const {
    int m = 0;
    for (int c : counts_) m = std::max(m, c);
    return m;
  }

  auto begin() const { return counts_.begin(); }
  auto end() const { return counts_.end(); }

  bool operator==(const OccupationPattern& other) const {
    return counts_ == other.counts_;
  }
  bool operator!=(const OccupationPattern& other) const {
    return !(*this == other);
  }

  std::string to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < counts_.size(); ++i) {
      if (i > 0) os << ',';
      os << counts_[i];
    }
    return os.str();
  }

 private:
  std::vector<int> counts_;
};

/// Canonical pattern order: at the first differing mode, the larger count
/// sorts first. enumerate_shell emits shells in exactly this order, and every
/// distribution in the library is indexed by it.
inline bool canonical_pattern_less(const OccupationPattern& a,
                                   const OccupationPattern& b) {
  if (a.modes() != b.modes()) return a.modes() < b.modes();
  for (int i = 0; i < a.modes(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

struct CanonicalPatternLess {
  bool operator()(const OccupationPattern& a,
                  const OccupationPattern& b) const {
    return canonical_pattern_less(a, b);
  }
};

/// Concatenates two patterns (mode lists are appended).
inline OccupationPattern concat(const OccupationPattern& a,
                                const OccupationPattern& b) {
  std::vector<int> counts;
  counts.reserve(static_cast<size_t>(a.modes() + b.modes()));
  counts.insert(counts.end(), a.begin(), a.end());
  counts.insert(counts.end(), b.begin(), b.end());
  return OccupationPattern(std::move(counts));
}

/// Number of patterns of `modes` modes with a fixed photon total,
/// C(total + modes - 1, total). Throws std::overflow_error if the count does
/// not fit in 64 bits.
inline std::uint64_t shell_cardinality(int modes, int total_photons) {
  if (modes < 1) throw std::invalid_argument("shell_cardinality: modes < 1");
  if (total_photons < 0) {
    throw std::invalid_argument("shell_cardinality: negative photon number");
  }
  return binomial_exact(total_photons + modes - 1, total_photons);
}

/// All patterns of `modes` modes with the given photon total, in canonical
/// order, starting from (N, 0, ..., 0).
inline std::vector<OccupationPattern> enumerate_shell(int modes,
                                                      int total_photons) {
  if (modes < 1) throw std::invalid_argument("enumerate_shell: modes < 1");
  if (total_photons < 0) {
    throw std::invalid_argument("enumerate_shell: negative photon number");
  }
  std::vector<OccupationPattern> shell;
  shell.reserve(static_cast<size_t>(shell_cardinality(modes, total_photons)));
  std::vector<int> c(static_cast<size_t>(modes), 0);
  c[0] = total_photons;
  while (true) {
    shell.emplace_back(c);
    // Move one photon from the rightmost occupied non-final mode to its
    // neighbour, sweeping everything beyond back onto that neighbour.
    int j = modes - 2;
    while (j >= 0 && c[static_cast<size_t>(j)] == 0) --j;
    if (j < 0) break;
    int rest = 0;
    for (int i = j + 1; i < modes; ++i) {
      rest += c[static_cast<size_t>(i)];
      c[static_cast<size_t>(i)] = 0;
    }
    --c[static_cast<size_t>(j)];
    c[static_cast<size_t>(j + 1)] = rest + 1;
  }
  return shell;
}

}  // namespace gaussfold

#endif  // GAUSSFOLD_OCCUPATION_HPP_
