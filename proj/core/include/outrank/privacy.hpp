#pragma once

#include "outrank/model.hpp"
#include "outrank/util.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace outrank {

struct PrivacyParams {
    double epsilon = 1.0; // total budget per alternative
    Mechanism mechanism = Mechanism::DP;
    bool clamp_output = true;
    std::uint64_t seed = 0;
};

struct SensitivityCell {
    std::string alternative;
    std::string criterion;
    double global_sensitivity;
    double local_sensitivity;
    double noise_scale_used;
    double epsilon_share;
};

struct SensitivityReport {
    std::vector<SensitivityCell> cells;
    std::string to_csv() const;
};

/// Worst-case change of a K-contributor mean when one score is replaced:
/// (domain_max - domain_min) / K.
double global_sensitivity_sam(const CriterionSpec& criterion, int k);

/// Dataset-specific change bound for the actual scores:
/// max{domain_max - min(scores), max(scores) - domain_min} / K.
double local_sensitivity_sam(std::span<const double> scores, const CriterionSpec& criterion);

/// Per-criterion budgets epsilon_j = epsilon * share_j. Zero shares are
/// rejected (a zero-share criterion would need infinite-scale noise).
std::vector<double> split_budget(double epsilon, const std::vector<CriterionSpec>& criteria);

/// Draw from Laplace(0, scale) by inverse CDF on one uniform; deterministic
/// given the generator state.
double laplace_sample(double scale, Rng& rng);

/// OM -> OM*: adds independent Laplace noise per cell, scale chosen by the
/// mechanism (DP: global sensitivity, IDP: local sensitivity of that cell's
/// raw scores), with the per-alternative budget split across criteria.
/// Cells are perturbed in a fixed traversal order (alternatives outer,
/// criteria inner) from one generator seeded with params.seed, so runs are
/// reproducible. Mechanism::None returns OM unchanged with zero scales.
/// Throws PrivacyError when contributors are not disjoint across
/// alternatives.
std::pair<PerformanceMatrix, SensitivityReport>
anonymize_matrix(const PerformanceMatrix& om, const EvaluationSet& evals,
                 const std::vector<CriterionSpec>& criteria, const PrivacyParams& params);

} // namespace outrank
