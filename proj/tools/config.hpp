#pragma once

#include "outrank/electre3.hpp"
#include "outrank/evaluation.hpp"
#include "outrank/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace outrank::cli {

struct PrivacyConfig {
    double epsilon = 1.0;
    Mechanism mechanism = Mechanism::None;
    bool clamp = true;
    std::optional<std::uint64_t> seed;
};

struct ExperimentConfig {
    std::vector<double> epsilons{0.1, 0.5, 1.0};
    std::vector<int> ks{10, 25, 50, 100, 250, 400};
    int iterations = 50;
    std::vector<Mechanism> mechanisms{Mechanism::DP, Mechanism::IDP};
    std::vector<Method> methods{Method::Electre3, Method::Promethee2};
    std::uint64_t base_seed = 42;
    int n_alternatives = 12;
};

struct Config {
    std::vector<CriterionSpec> criteria;
    electre::DistillationParams electre_params;
    PrivacyConfig privacy;
    ExperimentConfig experiment;
};

/// Loads and validates the JSON problem configuration. Throws ConfigError on
/// schema or invariant violations.
Config load_config(const std::string& path);

Mechanism parse_mechanism(const std::string& s);
Method parse_method(const std::string& s);

} // namespace outrank::cli
