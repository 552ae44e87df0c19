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

#ifndef GAUSSFOLD_CONFIG_HPP_
#define GAUSSFOLD_CONFIG_HPP_

#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaussfold/circuit.hpp"
#include "gaussfold/matrix_io.hpp"
#include "gaussfold/sampler.hpp"

namespace gaussfold {

/// Sampler settings of an experiment run.
struct SamplerConfig {
  std::uint64_t burn_in = 1000;
  std::uint64_t n_samples = 10000;
  int n_chains = 1;
  std::uint64_t master_seed = 1;
};

/// A full experiment description, parsed from a JSON config file. Everything
/// is validated before any computation; unitaries referenced by file are
/// loaded (and unitarity-checked) during parsing.
struct ExperimentConfig {
  std::optional<GaussianCircuitSpec> circuit;
  std::optional<GaussianCircuitSpec2> circuit2;
  PriorSpec prior = UniformShellPrior{2};
  SamplerConfig sampler;
  std::string output = "gaussfold-out";

  const GaussianCircuitSpec& require_circuit() const {
    if (!circuit) {
      throw std::runtime_error(
          "config: this command needs a 'circuit' section");
    }
    return *circuit;
  }
};

namespace detail {

/// A unitary field is either a preset name or {"file": path} relative to the
/// config file.
inline PassiveUnitary parse_unitary(const nlohmann::json& node, int dimension,
                                    const std::filesystem::path& base_dir,
                                    const std::string& field) {
  if (node.is_string()) {
    return unitary_preset(node.get<std::string>(), dimension);
  }
  if (node.is_object() && node.contains("file")) {
    const std::filesystem::path path = node.at("file").get<std::string>();
    const std::filesystem::path resolved =
        path.is_absolute() ? path : base_dir / path;
    PassiveUnitary u = load_passive_unitary(resolved.string());
    if (u.dimension() != dimension) {
      throw std::runtime_error("config: unitary '" + field + "' has dimension " +
                               std::to_string(u.dimension()) + ", expected " +
                               std::to_string(dimension));
    }
    return u;
  }
  throw std::runtime_error("config: unitary '" + field +
                           "' must be a preset name or {\"file\": ...}");
}

inline std::vector<double> parse_transmissivities(const nlohmann::json& node,
                                                  int count) {
  std::vector<double> t_list;
  if (node.is_number()) {
    t_list.assign(static_cast<size_t>(count), node.get<double>());
  } else {
    t_list = node.get<std::vector<double>>();
  }
  return t_list;
}

inline PriorSpec parse_prior(const nlohmann::json& node) {
  const std::string kind = node.at("kind").get<std::string>();
  if (kind == "uniform_shell") {
    return UniformShellPrior{node.at("photons").get<int>()};
  }
  if (kind == "fixed") {
    return FixedPrior{
        OccupationPattern(node.at("pattern").get<std::vector<int>>())};
  }
  if (kind == "gibbs") {
    return GibbsPrior{node.at("mean_occupation").get<double>()};
  }
  throw std::runtime_error("config: unknown prior kind '" + kind + "'");
}

}  // namespace detail

inline ExperimentConfig parse_config(const nlohmann::json& root,
                                     const std::filesystem::path& base_dir) {
  ExperimentConfig config;
  if (root.contains("circuit") && root.contains("circuit2")) {
    throw std::runtime_error("config: give either 'circuit' or 'circuit2'");
  }
  if (root.contains("circuit")) {
    const auto& c = root.at("circuit");
    const int modes = c.at("modes").get<int>();
    const int cutoff = c.value("cutoff", 6);
    GaussianCircuitSpec spec(
        modes, c.at("xi").get<double>(),
        detail::parse_transmissivities(c.at("transmissivities"), modes / 2),
        detail::parse_unitary(c.at("unitary_a"), modes, base_dir, "unitary_a"),
        detail::parse_unitary(c.at("unitary_b"), modes, base_dir, "unitary_b"),
        cutoff);
    if (c.contains("ts_photon_cap")) {
      spec.ts_photon_cap = c.at("ts_photon_cap").get<int>();
    }
    config.circuit = std::move(spec);
  } else if (root.contains("circuit2")) {
    const auto& c = root.at("circuit2");
    const int modes = c.at("modes").get<int>();
    const int half = modes / 2;
    const int cutoff = c.value("cutoff", 6);
    GaussianCircuitSpec2 spec(
        modes, c.at("xi").get<double>(),
        detail::parse_transmissivities(c.at("transmissivities"), modes / 2),
        detail::parse_unitary(c.at("v_a"), half, base_dir, "v_a"),
        detail::parse_unitary(c.at("v_a_prime"), half, base_dir, "v_a_prime"),
        detail::parse_unitary(c.at("v_b"), half, base_dir, "v_b"),
        detail::parse_unitary(c.at("v_b_prime"), half, base_dir, "v_b_prime"),
        cutoff);
    if (c.contains("ts_photon_cap")) {
      spec.ts_photon_cap = c.at("ts_photon_cap").get<int>();
    }
    config.circuit2 = std::move(spec);
  } else {
    throw std::runtime_error("config: missing 'circuit' section");
  }

  if (root.contains("prior")) config.prior = detail::parse_prior(root.at("prior"));
  if (root.contains("sampler")) {
    const auto& s = root.at("sampler");
    config.sampler.burn_in = s.value("burn_in", config.sampler.burn_in);
    config.sampler.n_samples = s.value("samples", config.sampler.n_samples);
    config.sampler.n_chains = s.value("chains", config.sampler.n_chains);
    config.sampler.master_seed =
        s.value("master_seed", config.sampler.master_seed);
    if (config.sampler.n_chains < 1) {
      throw std::runtime_error("config: chains must be >= 1");
    }
  }
  if (root.contains("output")) {
    config.output = root.at("output").get<std::string>();
  }
  return config;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  nlohmann::json root;
  try {
    in >> root;
  } catch (const nlohmann::json::exception& error) {
    throw std::runtime_error("config: " + path + ": " + error.what());
  }
  try {
    return parse_config(root,
                        std::filesystem::path(path).parent_path());
  } catch (const nlohmann::json::exception& error) {
    throw std::runtime_error("config: " + path + ": " + error.what());
  }
}

}  // namespace gaussfold

#endif  // GAUSSFOLD_CONFIG_HPP_
