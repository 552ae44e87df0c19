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

#ifndef GAUSSFOLD_SAMPLER_HPP_
#define GAUSSFOLD_SAMPLER_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

#include "gaussfold/circuit.hpp"
#include "gaussfold/rng.hpp"

namespace gaussfold {

/// One detection event: pattern k on the A outputs, m on the B outputs.
struct Outcome {
  OccupationPattern k;
  OccupationPattern m;

  bool operator==(const Outcome& other) const {
    return k == other.k && m == other.m;
  }
};

/// Canonical outcome order: by total photon number, then by the rail pattern
/// in canonical pattern order.
inline bool canonical_outcome_less(const Outcome& a, const Outcome& b) {
  const int ta = a.k.total() + a.m.total();
  const int tb = b.k.total() + b.m.total();
  if (ta != tb) return ta < tb;
  return canonical_pattern_less(concat(a.k, a.m), concat(b.k, b.m));
}

struct CanonicalOutcomeLess {
  bool operator()(const Outcome& a, const Outcome& b) const {
    return canonical_outcome_less(a, b);
  }
};

/// A materialized distribution over outcomes, canonically sorted.
/// `tail_bound` is the probability mass lost to truncation; probabilities
/// plus tail account for 1 (after renormalization the residual that was
/// divided out is kept in `renormalization_residual`).
struct OutcomeDistribution {
  std::vector<std::pair<Outcome, double>> entries;
  double tail_bound = 0.0;
  double renormalization_residual = 0.0;

  double total_mass() const {
    double sum = 0.0;
    for (const auto& [outcome, p] : entries) sum += p;
    return sum;
  }

  double probability_of(const Outcome& outcome) const {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), outcome,
        [](const std::pair<Outcome, double>& entry, const Outcome& target) {
          return canonical_outcome_less(entry.first, target);
        });
    if (it != entries.end() && it->first == outcome) return it->second;
    return 0.0;
  }
};

/// The default bound on materialized outcomes (exact enumeration only makes
/// sense at desk scale).
inline constexpr std::uint64_t kDefaultOutcomeLimit = 1000000;

/// Exact device distribution p(k, m) under the source truncation, obtained by
/// evolving the truncated source state through the circuit. Probabilities sum
/// to 1 minus the truncation tail.
inline OutcomeDistribution exact_device_distribution(
    const GaussianCircuitSpec& spec,
    std::uint64_t outcome_limit = kDefaultOutcomeLimit) {
  // Conservative bound on reachable outcomes: every output shell that any
  // retained source sector can feed.
  std::uint64_t bound = 0;
  for (int n = 0; n <= spec.modes * spec.cutoff; ++n) {
    std::uint64_t shell;
    try {
      shell = shell_cardinality(2 * spec.modes, 2 * n);
    } catch (const std::overflow_error&) {
      throw std::runtime_error(
          "exact_device_distribution: outcome count overflows 64 bits");
    }
    if (shell > outcome_limit - std::min(bound, outcome_limit)) {
      throw std::runtime_error(
          "exact_device_distribution: reachable outcome count exceeds limit " +
          std::to_string(outcome_limit));
    }
    bound += shell;
  }

  const FockAmplitudeMap out = device_output_state(spec);
  OutcomeDistribution dist;
  dist.entries.reserve(out.size());
  for (const auto& [rails, amp] : out.entries()) {
    auto [k, m] = split_rail_pattern(rails);
    dist.entries.emplace_back(Outcome{std::move(k), std::move(m)},
                              std::norm(amp));
  }
  std::sort(dist.entries.begin(), dist.entries.end(),
            [](const auto& a, const auto& b) {
              return canonical_outcome_less(a.first, b.first);
            });
  dist.tail_bound = std::max(0.0, 1.0 - dist.total_mass());
  return dist;
}

/// Inverse-CDF sampler over a materialized distribution (renormalized over
/// the retained outcomes). Reproducible under a fixed seed.
class DeviceSampler {
 public:
  explicit DeviceSampler(OutcomeDistribution distribution)
      : dist_(std::move(distribution)) {
    if (dist_.entries.empty()) {
      throw std::invalid_argument("DeviceSampler: empty distribution");
    }
    cumulative_.reserve(dist_.entries.size());
    double sum = 0.0;
    for (const auto& [outcome, p] : dist_.entries) {
      if (p < 0.0) throw std::invalid_argument("DeviceSampler: negative mass");
      sum += p;
      cumulative_.push_back(sum);
    }
    if (sum <= 0.0) {
      throw std::invalid_argument("DeviceSampler: zero total mass");
    }
  }

  const OutcomeDistribution& distribution() const { return dist_; }

  const Outcome& draw(Rng& rng) const {
    const double u = rng.uniform() * cumulative_.back();
    const auto it =
        std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const size_t idx = std::min(
        static_cast<size_t>(it - cumulative_.begin()),
        cumulative_.size() - 1);
    return dist_.entries[idx].first;
  }

 private:
  OutcomeDistribution dist_;
  std::vector<double> cumulative_;
};

// ---------------------------------------------------------------------------
// Priors over the input patterns m of the simulated circuit.
// ---------------------------------------------------------------------------

struct UniformShellPrior {
  int photons;
};

struct FixedPrior {
  OccupationPattern pattern;
};

/// Product geometric distribution with per-mode mean occupation n; the
/// per-pattern weight (1-y)^M y^total with y = n/(1+n) sums to one over the
/// unbounded pattern set, so truncated targets renormalize it together with
/// everything else.
struct GibbsPrior {
  double mean_occupation;
};

using PriorSpec = std::variant<UniformShellPrior, FixedPrior, GibbsPrior>;

inline double prior_probability(const PriorSpec& prior,
                                const OccupationPattern& m) {
  if (const auto* shell = std::get_if<UniformShellPrior>(&prior)) {
    if (m.total() != shell->photons) return 0.0;
    return 1.0 /
           static_cast<double>(shell_cardinality(m.modes(), shell->photons));
  }
  if (const auto* fixed = std::get_if<FixedPrior>(&prior)) {
    return m == fixed->pattern ? 1.0 : 0.0;
  }
  const auto& gibbs = std::get<GibbsPrior>(prior);
  if (!(gibbs.mean_occupation > 0.0)) {
    throw std::invalid_argument("prior_probability: mean occupation must be > 0");
  }
  const double y = gibbs.mean_occupation / (1.0 + gibbs.mean_occupation);
  return std::pow(1.0 - y, m.modes()) * std::pow(y, m.total());
}

// ---------------------------------------------------------------------------
// Metropolised independence sampling.
// ---------------------------------------------------------------------------

/// Acceptance probability for moving from `current` to `proposal`:
/// min{1, xi^(Delta_A + Delta_B) p0(m') / p0(m)}, with Delta_A and Delta_B
/// the photon-total decrements of k and m. Zero-prior proposals are never
/// accepted; a zero-prior current state is a contract violation.
inline double mis_accept_probability(double xi, const PriorSpec& prior,
                                     const Outcome& current,
                                     const Outcome& proposal) {
  const double p0_proposal = prior_probability(prior, proposal.m);
  if (p0_proposal == 0.0) return 0.0;
  const double p0_current = prior_probability(prior, current.m);
  if (p0_current == 0.0) {
    throw std::logic_error(
        "mis_accept_probability: current state has zero prior probability");
  }
  const int delta_a = current.k.total() - proposal.k.total();
  const int delta_b = current.m.total() - proposal.m.total();
  const double ratio =
      std::pow(xi, delta_a + delta_b) * (p0_proposal / p0_current);
  return std::min(1.0, ratio);
}

/// State of one chain, advanced proposal by proposal.
struct MisChainState {
  Outcome current;
  std::uint64_t steps = 0;
  std::uint64_t accepted = 0;
  std::uint64_t stream_id = 0;

  // Diagnostics for the acceptance-rate bound: proposals whose prior support
  // was hit, and the summed acceptance probability over them.
  std::uint64_t in_support_proposals = 0;
  double accept_probability_sum = 0.0;
};

struct MisRunResult {
  std::vector<Outcome> samples;              // post-burn-in, one per step
  std::vector<std::uint8_t> accepted_flags;  // per retained sample
  MisChainState state;
  double acceptance_rate = 0.0;       // accepted / steps, all proposals
  double mean_accept_in_support = 0.0;
  std::uint64_t init_draws = 0;
};

inline constexpr std::uint64_t kDefaultMaxInitDraws = 100000;

/// Runs one Metropolised independence chain: proposals are independent draws
/// from the device, accepted with mis_accept_probability; on rejection the
/// current state is re-emitted. The chain starts from the first draw with
/// nonzero prior probability.
inline MisRunResult run_mis_chain(
    const std::function<Outcome(Rng&)>& device, const PriorSpec& prior,
    double xi, std::uint64_t burn_in, std::uint64_t n_samples, Rng& rng,
    std::uint64_t max_init_draws = kDefaultMaxInitDraws) {
  MisRunResult result;
  bool initialized = false;
  for (std::uint64_t attempt = 0; attempt < max_init_draws; ++attempt) {
    Outcome candidate = device(rng);
    ++result.init_draws;
    if (prior_probability(prior, candidate.m) > 0.0) {
      result.state.current = std::move(candidate);
      initialized = true;
      break;
    }
  }
  if (!initialized) {
    throw std::runtime_error(
        "run_mis_chain: no device draw hit the prior support within " +
        std::to_string(max_init_draws) +
        " attempts; the prior and the device distribution appear disjoint");
  }

  result.samples.reserve(n_samples);
  result.accepted_flags.reserve(n_samples);
  const std::uint64_t total_steps = burn_in + n_samples;
  for (std::uint64_t step = 0; step < total_steps; ++step) {
    const Outcome proposal = device(rng);
    const double t = mis_accept_probability(xi, prior, result.state.current,
                                            proposal);
    if (t > 0.0) {
      ++result.state.in_support_proposals;
      result.state.accept_probability_sum += t;
    }
    bool take = false;
    if (t >= 1.0) {
      take = true;
      rng.uniform();  // keep the stream length independent of the path taken
    } else if (t > 0.0) {
      take = rng.uniform() < t;
    } else {
      rng.uniform();
    }
    ++result.state.steps;
    if (take) {
      result.state.current = proposal;
      ++result.state.accepted;
    }
    if (step >= burn_in) {
      result.samples.push_back(result.state.current);
      result.accepted_flags.push_back(take ? 1 : 0);
    }
  }
  result.acceptance_rate =
      result.state.steps == 0
          ? 0.0
          : static_cast<double>(result.state.accepted) /
                static_cast<double>(result.state.steps);
  result.mean_accept_in_support =
      result.state.in_support_proposals == 0
          ? 0.0
          : result.state.accept_probability_sum /
                static_cast<double>(result.state.in_support_proposals);
  return result;
}

// ---------------------------------------------------------------------------
// Exact target distribution and convergence diagnostics.
// ---------------------------------------------------------------------------

/// Materializes the target p~(k, m) = p0(m) p~(k|m) over the truncated
/// outcome set and renormalizes; the pre-normalization deficit is reported in
/// renormalization_residual. Input patterns m run over the prior support
/// (all totals up to max_input_total for the Gibbs prior), output totals up
/// to the spec's unfolded-sum cap.
inline OutcomeDistribution target_distribution(
    const GaussianCircuitSpec& spec, const PriorSpec& prior,
    int max_input_total = -1,
    std::uint64_t outcome_limit = kDefaultOutcomeLimit) {
  const int cap = spec.effective_ts_cap();
  if (max_input_total < 0) max_input_total = spec.modes * spec.cutoff;
  max_input_total = std::min(max_input_total, cap);

  std::vector<OccupationPattern> inputs;
  if (const auto* shell = std::get_if<UniformShellPrior>(&prior)) {
    if (shell->photons <= cap) {
      inputs = enumerate_shell(spec.modes, shell->photons);
    }
  } else if (const auto* fixed = std::get_if<FixedPrior>(&prior)) {
    if (fixed->pattern.total() <= cap) inputs.push_back(fixed->pattern);
  } else {
    for (int n = 0; n <= max_input_total; ++n) {
      auto shell_patterns = enumerate_shell(spec.modes, n);
      inputs.insert(inputs.end(), shell_patterns.begin(),
                    shell_patterns.end());
    }
  }

  OutcomeDistribution dist;
  std::uint64_t count = 0;
  for (const OccupationPattern& m : inputs) {
    const double p0 = prior_probability(prior, m);
    if (p0 == 0.0) continue;
    for (int n_a = 0; n_a <= cap; ++n_a) {
      for (const OccupationPattern& k : enumerate_shell(spec.modes, n_a)) {
        if (++count > outcome_limit) {
          throw std::runtime_error(
              "target_distribution: outcome count exceeds limit " +
              std::to_string(outcome_limit));
        }
        const double p = p0 * conditional_probability_tilde(spec, k, m);
        if (p > 0.0) dist.entries.emplace_back(Outcome{k, m}, p);
      }
    }
  }
  if (dist.entries.empty()) {
    throw std::runtime_error(
        "target_distribution: empty support (prior incompatible with the "
        "truncated outcome set)");
  }
  std::sort(dist.entries.begin(), dist.entries.end(),
            [](const auto& a, const auto& b) {
              return canonical_outcome_less(a.first, b.first);
            });
  const double mass = dist.total_mass();
  dist.renormalization_residual = 1.0 - mass;
  for (auto& [outcome, p] : dist.entries) p /= mass;
  dist.tail_bound = 0.0;
  return dist;
}

/// Half the L1 distance between the empirical frequencies of `samples` and
/// an exact distribution, over the union of supports.
inline double total_variation_distance(const std::vector<Outcome>& samples,
                                       const OutcomeDistribution& exact) {
  if (samples.empty()) return 1.0;
  std::map<Outcome, std::uint64_t, CanonicalOutcomeLess> counts;
  for (const Outcome& sample : samples) ++counts[sample];
  const double n = static_cast<double>(samples.size());
  double distance = 0.0;
  double covered = 0.0;
  for (const auto& [outcome, count] : counts) {
    const double p = exact.probability_of(outcome);
    distance += std::abs(static_cast<double>(count) / n - p);
    covered += p;
  }
  // Exact mass on outcomes never sampled.
  distance += std::max(0.0, 1.0 - exact.tail_bound - covered);
  return 0.5 * distance;
}

}  // namespace gaussfold

#endif  // GAUSSFOLD_SAMPLER_HPP_
