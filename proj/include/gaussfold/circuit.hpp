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

#ifndef GAUSSFOLD_CIRCUIT_HPP_
#define GAUSSFOLD_CIRCUIT_HPP_

#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <vector>

#include "gaussfold/fock_state.hpp"
#include "gaussfold/occupation.hpp"
#include "gaussfold/passive.hpp"
#include "gaussfold/squeezers.hpp"

namespace gaussfold {

// Mode wiring of the 2M-rail device. This is the one place where the layout
// is fixed; every layout-sensitive test references these rules.
//
//   - Source pair j (0-based) emits two-mode squeezed vacuum on rails
//     (2j, 2j+1): upper arm 2j, lower arm 2j+1.
//   - Sources are grouped two by two. In group i (rails 4i..4i+3) the
//     coupling beam splitter of transmissivity t_i acts on rails
//     (4i+1, 4i+2), i.e. the lower arm of source 2i with the upper arm of
//     source 2i+1. Its first port is rail 4i+1.
//   - The A side consists of the even rails, the B side of the odd rails.
//     The balanced row acts on A pairs (4i, 4i+2) and B pairs (4i+1, 4i+3),
//     first port on the lower-numbered rail; U_A then mixes the A rails and
//     U_B the B rails.
//   - Pattern entry k_a is detected on rail 2a, m_b on rail 2b+1. In the
//     time-unfolded M-mode picture the squeezer for group i couples unfolded
//     modes (2i, 2i+1).

inline int a_side_rail(int a) { return 2 * a; }
inline int b_side_rail(int b) { return 2 * b + 1; }

/// Description of one simulation run: M sources of squeezing parameter xi,
/// M/2 coupling transmissivities, the two M-mode passive circuits, and the
/// per-mode Fock cutoff of the source truncation.
struct GaussianCircuitSpec {
  int modes;                        // M, even
  double xi;                        // in [0,1)
  std::vector<double> t_list;       // M/2 transmissivities in (0,1]
  PassiveUnitary u_a;
  PassiveUnitary u_b;
  int cutoff;                       // per-mode source cutoff, >= 1
  int ts_photon_cap = -1;           // cap for unfolded sums; -1 = cutoff + 4

  GaussianCircuitSpec(int modes_in, double xi_in, std::vector<double> t_in,
                      PassiveUnitary u_a_in, PassiveUnitary u_b_in,
                      int cutoff_in)
      : modes(modes_in),
        xi(xi_in),
        t_list(std::move(t_in)),
        u_a(std::move(u_a_in)),
        u_b(std::move(u_b_in)),
        cutoff(cutoff_in) {
    if (modes < 2 || modes % 2 != 0) {
      throw std::invalid_argument("GaussianCircuitSpec: M must be even, >= 2");
    }
    if (!(xi >= 0.0) || xi >= 1.0) {
      throw std::invalid_argument("GaussianCircuitSpec: xi must be in [0,1)");
    }
    if (static_cast<int>(t_list.size()) != modes / 2) {
      throw std::invalid_argument(
          "GaussianCircuitSpec: need M/2 transmissivities");
    }
    for (double t : t_list) {
      if (!(t > 0.0) || t > 1.0) {
        throw std::invalid_argument(
            "GaussianCircuitSpec: transmissivities must be in (0,1]");
      }
    }
    if (u_a.dimension() != modes || u_b.dimension() != modes) {
      throw std::invalid_argument(
          "GaussianCircuitSpec: U_A and U_B must act on M modes");
    }
    if (cutoff < 1) {
      throw std::invalid_argument("GaussianCircuitSpec: cutoff must be >= 1");
    }
  }

  int effective_ts_cap() const {
    return ts_photon_cap < 0 ? cutoff + 4 : ts_photon_cap;
  }
};

/// The block-diagonal row of balanced beam splitters on local pairs
/// (2i, 2i+1) of an M-mode register.
inline Eigen::MatrixXcd balanced_row_matrix(int modes) {
  if (modes < 2 || modes % 2 != 0) {
    throw std::invalid_argument("balanced_row_matrix: M must be even");
  }
  Eigen::MatrixXcd row = Eigen::MatrixXcd::Identity(modes, modes);
  const Eigen::Matrix2cd bs = balanced_beam_splitter_matrix();
  for (int i = 0; i + 1 < modes; i += 2) {
    row.block(i, i, 2, 2) = bs;
  }
  return row;
}

/// W_A = U_A * (balanced row): the full A-side circuit after the coupling
/// layer, as an M x M mode matrix. Same for W_B.
inline Eigen::MatrixXcd w_a_matrix(const GaussianCircuitSpec& spec) {
  return spec.u_a.matrix() * balanced_row_matrix(spec.modes);
}

inline Eigen::MatrixXcd w_b_matrix(const GaussianCircuitSpec& spec) {
  return spec.u_b.matrix() * balanced_row_matrix(spec.modes);
}

/// The whole 2M-mode device as one mode matrix: coupling beam splitters,
/// then the balanced row, then U_A on the A rails and U_B on the B rails.
inline PassiveUnitary build_ug_mode_matrix(const GaussianCircuitSpec& spec) {
  const int m = spec.modes;
  const int rails = 2 * m;
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(rails, rails);

  for (int i = 0; i < m / 2; ++i) {
    total = embed_mode_matrix(beam_splitter_matrix(spec.t_list[
                static_cast<size_t>(i)]),
                              {4 * i + 1, 4 * i + 2}, rails) *
            total;
  }
  const Eigen::Matrix2cd bs = balanced_beam_splitter_matrix();
  for (int i = 0; i < m / 2; ++i) {
    total = embed_mode_matrix(bs, {4 * i, 4 * i + 2}, rails) * total;
    total = embed_mode_matrix(bs, {4 * i + 1, 4 * i + 3}, rails) * total;
  }
  std::vector<int> a_rails(static_cast<size_t>(m));
  std::vector<int> b_rails(static_cast<size_t>(m));
  for (int a = 0; a < m; ++a) a_rails[static_cast<size_t>(a)] = a_side_rail(a);
  for (int b = 0; b < m; ++b) b_rails[static_cast<size_t>(b)] = b_side_rail(b);
  total = embed_mode_matrix(spec.u_a.matrix(), a_rails, rails) * total;
  total = embed_mode_matrix(spec.u_b.matrix(), b_rails, rails) * total;
  return PassiveUnitary(total);
}

/// Tensor product of the M two-mode squeezed sources in rail order.
inline FockAmplitudeMap input_state(const GaussianCircuitSpec& spec,
                                    int cutoff = -1) {
  if (cutoff < 0) cutoff = spec.cutoff;
  FockAmplitudeMap state = tms_state(spec.xi, cutoff);
  for (int j = 1; j < spec.modes; ++j) {
    state = tensor(state, tms_state(spec.xi, cutoff));
  }
  return state;
}

/// Rail pattern with k on the A side and m on the B side.
inline OccupationPattern device_rail_pattern(const OccupationPattern& k,
                                             const OccupationPattern& m) {
  if (k.modes() != m.modes()) {
    throw std::invalid_argument("device_rail_pattern: length mismatch");
  }
  std::vector<int> rails(static_cast<size_t>(2 * k.modes()));
  for (int a = 0; a < k.modes(); ++a) {
    rails[static_cast<size_t>(a_side_rail(a))] = k[a];
    rails[static_cast<size_t>(b_side_rail(a))] = m[a];
  }
  return OccupationPattern(std::move(rails));
}

/// Splits a rail pattern back into (k, m).
inline std::pair<OccupationPattern, OccupationPattern> split_rail_pattern(
    const OccupationPattern& rails) {
  const int m = rails.modes() / 2;
  std::vector<int> k(static_cast<size_t>(m));
  std::vector<int> mm(static_cast<size_t>(m));
  for (int a = 0; a < m; ++a) {
    k[static_cast<size_t>(a)] = rails[a_side_rail(a)];
    mm[static_cast<size_t>(a)] = rails[b_side_rail(a)];
  }
  return {OccupationPattern(std::move(k)), OccupationPattern(std::move(mm))};
}

/// Source rail pattern carrying n_j photons on both arms of source j.
inline OccupationPattern source_rail_pattern(const OccupationPattern& n) {
  std::vector<int> rails(static_cast<size_t>(2 * n.modes()));
  for (int j = 0; j < n.modes(); ++j) {
    rails[static_cast<size_t>(2 * j)] = n[j];
    rails[static_cast<size_t>(2 * j + 1)] = n[j];
  }
  return OccupationPattern(std::move(rails));
}

/// Joint probability p(k, m) of detecting k on the A outputs and m on the B
/// outputs, exact up to the source truncation: the amplitude is a finite sum
/// of interferometer elements over the source patterns with matching photon
/// total. Zero when N_A + N_B is odd or beyond the truncated input.
inline double joint_probability(const GaussianCircuitSpec& spec,
                                const OccupationPattern& k,
                                const OccupationPattern& m) {
  if (k.modes() != spec.modes || m.modes() != spec.modes) {
    throw std::invalid_argument("joint_probability: pattern length mismatch");
  }
  const int n_total = k.total() + m.total();
  if (n_total % 2 != 0) return 0.0;
  const int n = n_total / 2;
  if (n > spec.modes * spec.cutoff) return 0.0;

  const PassiveUnitary ug = build_ug_mode_matrix(spec);
  const OccupationPattern out = device_rail_pattern(k, m);
  const double front = std::sqrt(1.0 - spec.xi * spec.xi);
  Complex amp(0.0, 0.0);
  for (const OccupationPattern& src : enumerate_shell(spec.modes, n)) {
    if (src.max_count() > spec.cutoff) continue;
    double weight = 1.0;
    for (int j = 0; j < spec.modes; ++j) {
      weight *= front * std::pow(spec.xi, src[j]);
    }
    if (weight == 0.0) continue;
    amp += weight * interferometer_element(ug, out, source_rail_pattern(src));
  }
  return std::norm(amp);
}

/// The proportionality factor A(k, m) = (1 - xi^2)^M xi^(N_A + N_B) / prod t_j
/// between the device's joint probability and the unfolded conditional.
inline double prefactor_a(const GaussianCircuitSpec& spec, int n_a, int n_b) {
  if (n_a < 0 || n_b < 0) {
    throw std::invalid_argument("prefactor_a: negative photon number");
  }
  double value = std::pow(1.0 - spec.xi * spec.xi, spec.modes) *
                 std::pow(spec.xi, n_a + n_b);
  for (double t : spec.t_list) value /= t;
  return value;
}

namespace detail {

/// Key of the per-group photon differences; squeezer elements vanish unless
/// they match between the two closure shells.
inline std::vector<int> pair_differences(const OccupationPattern& p) {
  std::vector<int> d(static_cast<size_t>(p.modes() / 2));
  for (int i = 0; i + 1 < p.modes(); i += 2) {
    d[static_cast<size_t>(i / 2)] = p[i] - p[i + 1];
  }
  return d;
}

}  // namespace detail

/// Conditional probability |<k| W_A [TS layer] W_B^T |m>|^2 of the unfolded
/// M-mode circuit, computed independently of joint_probability: closure sums
/// over the two shells around the squeezer layer, with two-mode-squeezer
/// elements from the partial-time-reversal dual. The sums are exact once the
/// shells are admitted; photon totals above the configured cap are rejected
/// since the truncated source could not probe them reliably.
inline double conditional_probability_tilde(const GaussianCircuitSpec& spec,
                                            const OccupationPattern& k,
                                            const OccupationPattern& m) {
  if (k.modes() != spec.modes || m.modes() != spec.modes) {
    throw std::invalid_argument(
        "conditional_probability_tilde: pattern length mismatch");
  }
  const int n_a = k.total();
  const int n_b = m.total();
  const int cap = spec.effective_ts_cap();
  if (n_a > cap || n_b > cap) {
    throw std::runtime_error(
        "conditional_probability_tilde: photon total exceeds the unfolded "
        "sum cap (" + std::to_string(cap) + "); raise ts_photon_cap");
  }

  const Eigen::MatrixXcd w_a = w_a_matrix(spec);
  const Eigen::MatrixXcd w_b_t = w_b_matrix(spec).transpose();

  const std::vector<OccupationPattern> shell_a =
      enumerate_shell(spec.modes, n_a);
  const std::vector<OccupationPattern> shell_b =
      enumerate_shell(spec.modes, n_b);

  // <p| W_B^T |m> grouped by the per-pair difference signature.
  std::map<std::vector<int>, std::vector<std::pair<const OccupationPattern*,
                                                   Complex>>>
      b_by_diff;
  for (const OccupationPattern& p : shell_b) {
    const Complex elem = interferometer_element(w_b_t, p, m);
    if (elem == Complex(0.0, 0.0)) continue;
    b_by_diff[detail::pair_differences(p)].emplace_back(&p, elem);
  }

  Complex amp(0.0, 0.0);
  for (const OccupationPattern& q : shell_a) {
    const Complex left = interferometer_element(w_a, k, q);
    if (left == Complex(0.0, 0.0)) continue;
    const auto group = b_by_diff.find(detail::pair_differences(q));
    if (group == b_by_diff.end()) continue;
    for (const auto& [p_ptr, right] : group->second) {
      const OccupationPattern& p = *p_ptr;
      Complex mid(1.0, 0.0);
      for (int i = 0; i < spec.modes / 2 && mid != Complex(0.0, 0.0); ++i) {
        mid *= ts_element_dual(spec.t_list[static_cast<size_t>(i)],
                               OccupationPattern{q[2 * i], q[2 * i + 1]},
                               OccupationPattern{p[2 * i], p[2 * i + 1]});
      }
      amp += left * mid * right;
    }
  }
  return std::norm(amp);
}

/// Evolves the source state through the device gate by gate (coupling layer,
/// balanced row, then the two passive circuits). Used to materialize exact
/// output distributions without large permanents.
inline FockAmplitudeMap device_output_state(const GaussianCircuitSpec& spec) {
  FockAmplitudeMap state = input_state(spec);
  for (int i = 0; i < spec.modes / 2; ++i) {
    state = apply_two_mode_gate(
        state, beam_splitter_matrix(spec.t_list[static_cast<size_t>(i)]),
        4 * i + 1, 4 * i + 2);
  }
  const Eigen::Matrix2cd bs = balanced_beam_splitter_matrix();
  for (int i = 0; i < spec.modes / 2; ++i) {
    state = apply_two_mode_gate(state, bs, 4 * i, 4 * i + 2);
    state = apply_two_mode_gate(state, bs, 4 * i + 1, 4 * i + 3);
  }
  std::vector<int> a_rails;
  std::vector<int> b_rails;
  for (int a = 0; a < spec.modes; ++a) a_rails.push_back(a_side_rail(a));
  for (int b = 0; b < spec.modes; ++b) b_rails.push_back(b_side_rail(b));
  state = apply_passive_on(state, spec.u_a.matrix(), a_rails);
  state = apply_passive_on(state, spec.u_b.matrix(), b_rails);
  return state;
}

// ---------------------------------------------------------------------------
// Variant with four disjoint circuits: V_A / V'_A replace U_A (and V_B /
// V'_B replace U_B), each fed by one output port of every balanced beam
// splitter. The unfolded picture splits into two independent M/2-mode
// circuits whose squeezer layers carry opposite squeezing signs.
// ---------------------------------------------------------------------------

struct GaussianCircuitSpec2 {
  int modes;                   // M, even (V blocks act on M/2 modes)
  double xi;
  std::vector<double> t_list;  // M/2 entries
  PassiveUnitary v_a;
  PassiveUnitary v_a_prime;
  PassiveUnitary v_b;
  PassiveUnitary v_b_prime;
  int cutoff;
  int ts_photon_cap = -1;

  GaussianCircuitSpec2(int modes_in, double xi_in, std::vector<double> t_in,
                       PassiveUnitary v_a_in, PassiveUnitary v_a_prime_in,
                       PassiveUnitary v_b_in, PassiveUnitary v_b_prime_in,
                       int cutoff_in)
      : modes(modes_in),
        xi(xi_in),
        t_list(std::move(t_in)),
        v_a(std::move(v_a_in)),
        v_a_prime(std::move(v_a_prime_in)),
        v_b(std::move(v_b_in)),
        v_b_prime(std::move(v_b_prime_in)),
        cutoff(cutoff_in) {
    if (modes < 2 || modes % 2 != 0) {
      throw std::invalid_argument("GaussianCircuitSpec2: M must be even");
    }
    if (!(xi >= 0.0) || xi >= 1.0) {
      throw std::invalid_argument("GaussianCircuitSpec2: xi must be in [0,1)");
    }
    if (static_cast<int>(t_list.size()) != modes / 2) {
      throw std::invalid_argument(
          "GaussianCircuitSpec2: need M/2 transmissivities");
    }
    for (double t : t_list) {
      if (!(t > 0.0) || t > 1.0) {
        throw std::invalid_argument(
            "GaussianCircuitSpec2: transmissivities must be in (0,1]");
      }
    }
    const int half = modes / 2;
    if (v_a.dimension() != half || v_a_prime.dimension() != half ||
        v_b.dimension() != half || v_b_prime.dimension() != half) {
      throw std::invalid_argument(
          "GaussianCircuitSpec2: V blocks must act on M/2 modes");
    }
    if (cutoff < 1) {
      throw std::invalid_argument("GaussianCircuitSpec2: cutoff must be >= 1");
    }
  }

  int effective_ts_cap() const {
    return ts_photon_cap < 0 ? cutoff + 4 : ts_photon_cap;
  }
};

/// Rails read by the four detectors banks: V_A sees rails 4i, V'_A 4i+2,
/// V_B 4i+1, V'_B 4i+3.
inline OccupationPattern device_rail_pattern_2(const OccupationPattern& k,
                                               const OccupationPattern& m,
                                               const OccupationPattern& k_prime,
                                               const OccupationPattern& m_prime) {
  const int half = k.modes();
  if (m.modes() != half || k_prime.modes() != half ||
      m_prime.modes() != half) {
    throw std::invalid_argument("device_rail_pattern_2: length mismatch");
  }
  std::vector<int> rails(static_cast<size_t>(4 * half));
  for (int i = 0; i < half; ++i) {
    rails[static_cast<size_t>(4 * i)] = k[i];
    rails[static_cast<size_t>(4 * i + 1)] = m[i];
    rails[static_cast<size_t>(4 * i + 2)] = k_prime[i];
    rails[static_cast<size_t>(4 * i + 3)] = m_prime[i];
  }
  return OccupationPattern(std::move(rails));
}

inline PassiveUnitary build_ug2_mode_matrix(const GaussianCircuitSpec2& spec) {
  const int m = spec.modes;
  const int rails = 2 * m;
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(rails, rails);
  for (int i = 0; i < m / 2; ++i) {
    total = embed_mode_matrix(beam_splitter_matrix(spec.t_list[
                static_cast<size_t>(i)]),
                              {4 * i + 1, 4 * i + 2}, rails) *
            total;
  }
  const Eigen::Matrix2cd bs = balanced_beam_splitter_matrix();
  for (int i = 0; i < m / 2; ++i) {
    total = embed_mode_matrix(bs, {4 * i, 4 * i + 2}, rails) * total;
    total = embed_mode_matrix(bs, {4 * i + 1, 4 * i + 3}, rails) * total;
  }
  std::vector<int> va_rails, vap_rails, vb_rails, vbp_rails;
  for (int i = 0; i < m / 2; ++i) {
    va_rails.push_back(4 * i);
    vap_rails.push_back(4 * i + 2);
    vb_rails.push_back(4 * i + 1);
    vbp_rails.push_back(4 * i + 3);
  }
  total = embed_mode_matrix(spec.v_a.matrix(), va_rails, rails) * total;
  total = embed_mode_matrix(spec.v_a_prime.matrix(), vap_rails, rails) * total;
  total = embed_mode_matrix(spec.v_b.matrix(), vb_rails, rails) * total;
  total = embed_mode_matrix(spec.v_b_prime.matrix(), vbp_rails, rails) * total;
  return PassiveUnitary(total);
}

inline double joint_probability_2(const GaussianCircuitSpec2& spec,
                                  const OccupationPattern& k,
                                  const OccupationPattern& m,
                                  const OccupationPattern& k_prime,
                                  const OccupationPattern& m_prime) {
  const int n_total =
      k.total() + m.total() + k_prime.total() + m_prime.total();
  if (n_total % 2 != 0) return 0.0;
  const int n = n_total / 2;
  if (n > spec.modes * spec.cutoff) return 0.0;

  const PassiveUnitary ug = build_ug2_mode_matrix(spec);
  const OccupationPattern out =
      device_rail_pattern_2(k, m, k_prime, m_prime);
  const double front = std::sqrt(1.0 - spec.xi * spec.xi);
  Complex amp(0.0, 0.0);
  for (const OccupationPattern& src : enumerate_shell(spec.modes, n)) {
    if (src.max_count() > spec.cutoff) continue;
    double weight = 1.0;
    for (int j = 0; j < spec.modes; ++j) {
      weight *= front * std::pow(spec.xi, src[j]);
    }
    if (weight == 0.0) continue;
    amp += weight * interferometer_element(ug, out, source_rail_pattern(src));
  }
  return std::norm(amp);
}

inline double prefactor_a_2(const GaussianCircuitSpec2& spec, int n_total) {
  double value = std::pow(1.0 - spec.xi * spec.xi, spec.modes) *
                 std::pow(spec.xi, n_total);
  for (double t : spec.t_list) value /= t;
  return value;
}

/// Conditional probability through one of the two disjoint unfolded
/// circuits: V_A [SS layer] V_B^T for the unprimed one (squeezer degrees
/// -arccosh(sqrt(g_i))) and V'_A [SS layer] V'_B^T for the primed one
/// (opposite signs).
inline double conditional_probability_tilde_2(const GaussianCircuitSpec2& spec,
                                              const OccupationPattern& k,
                                              const OccupationPattern& m,
                                              bool primed) {
  const int half = spec.modes / 2;
  if (k.modes() != half || m.modes() != half) {
    throw std::invalid_argument(
        "conditional_probability_tilde_2: pattern length mismatch");
  }
  const int n_a = k.total();
  const int n_b = m.total();
  const int cap = spec.effective_ts_cap();
  if (n_a > cap || n_b > cap) {
    throw std::runtime_error(
        "conditional_probability_tilde_2: photon total exceeds the unfolded "
        "sum cap (" + std::to_string(cap) + "); raise ts_photon_cap");
  }

  const Eigen::MatrixXcd left_u =
      (primed ? spec.v_a_prime : spec.v_a).matrix();
  const Eigen::MatrixXcd right_u =
      (primed ? spec.v_b_prime : spec.v_b).matrix().transpose();

  // One squeezer factor table per group; the unprimed circuit takes the
  // first (negative-degree) factor of each sandwich, the primed the second.
  const int n_max = std::max(n_a, n_b);
  std::vector<Eigen::MatrixXd> squeezer(static_cast<size_t>(half));
  for (int i = 0; i < half; ++i) {
    const double g =
        gain_from_transmissivity(spec.t_list[static_cast<size_t>(i)]);
    if (g == 1.0) {
      squeezer[static_cast<size_t>(i)] =
          Eigen::MatrixXd::Identity(n_max + 1, n_max + 1);
    } else {
      const SqueezerFactorPair pair = ts_sandwich_factors(g, n_max);
      squeezer[static_cast<size_t>(i)] = primed ? pair.second : pair.first;
    }
  }

  Complex amp(0.0, 0.0);
  for (const OccupationPattern& q : enumerate_shell(half, n_a)) {
    const Complex left = interferometer_element(left_u, k, q);
    if (left == Complex(0.0, 0.0)) continue;
    for (const OccupationPattern& p : enumerate_shell(half, n_b)) {
      bool parity_ok = true;
      for (int i = 0; i < half; ++i) {
        if ((q[i] - p[i]) % 2 != 0) {
          parity_ok = false;
          break;
        }
      }
      if (!parity_ok) continue;
      const Complex right = interferometer_element(right_u, p, m);
      if (right == Complex(0.0, 0.0)) continue;
      Complex mid(1.0, 0.0);
      for (int i = 0; i < half; ++i) {
        mid *= squeezer[static_cast<size_t>(i)](q[i], p[i]);
      }
      amp += left * mid * right;
    }
  }
  return std::norm(amp);
}

inline FockAmplitudeMap device_output_state_2(
    const GaussianCircuitSpec2& spec) {
  GaussianCircuitSpec base(spec.modes, spec.xi, spec.t_list,
                           PassiveUnitary::identity(spec.modes),
                           PassiveUnitary::identity(spec.modes), spec.cutoff);
  FockAmplitudeMap state = input_state(base);
  for (int i = 0; i < spec.modes / 2; ++i) {
    state = apply_two_mode_gate(
        state, beam_splitter_matrix(spec.t_list[static_cast<size_t>(i)]),
        4 * i + 1, 4 * i + 2);
  }
  const Eigen::Matrix2cd bs = balanced_beam_splitter_matrix();
  for (int i = 0; i < spec.modes / 2; ++i) {
    state = apply_two_mode_gate(state, bs, 4 * i, 4 * i + 2);
    state = apply_two_mode_gate(state, bs, 4 * i + 1, 4 * i + 3);
  }
  std::vector<int> va_rails, vap_rails, vb_rails, vbp_rails;
  for (int i = 0; i < spec.modes / 2; ++i) {
    va_rails.push_back(4 * i);
    vap_rails.push_back(4 * i + 2);
    vb_rails.push_back(4 * i + 1);
    vbp_rails.push_back(4 * i + 3);
  }
  state = apply_passive_on(state, spec.v_a.matrix(), va_rails);
  state = apply_passive_on(state, spec.v_a_prime.matrix(), vap_rails);
  state = apply_passive_on(state, spec.v_b.matrix(), vb_rails);
  state = apply_passive_on(state, spec.v_b_prime.matrix(), vbp_rails);
  return state;
}

}  // namespace gaussfold

#endif  // GAUSSFOLD_CIRCUIT_HPP_
