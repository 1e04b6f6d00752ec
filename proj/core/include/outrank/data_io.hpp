#pragma once

#include "outrank/evaluation.hpp"
#include "outrank/model.hpp"
#include "outrank/util.hpp"

#include <string>
#include <vector>

namespace outrank {

/// Tiered synthetic rating generator. Alternatives split positionally into
/// three tiers (first/middle/last third, ceiling split); each score lands in
/// its tier's band with probability 0.7 and uniformly in the rest of the
/// domain otherwise. Bands are fractions [0.70,0.85] / [0.50,0.75] /
/// [0.30,0.55] of the criterion domain, which on [0,100] gives the 70-85 /
/// 50-75 / 30-55 tiers. Criteria with a declared step get snapped to the
/// grid. User ids are globally unique, so contributor sets are disjoint.
EvaluationSet gen_synthetic(int n_alternatives, const std::vector<CriterionSpec>& criteria,
                            int k, Rng& rng);

/// Parses an evaluations CSV (alternative_id,user_id,<criterion...>).
/// Validates domains and the step grid, rejects duplicate users within one
/// alternative; all row errors carry line numbers. Duplicate users across
/// alternatives are allowed here (full rating dumps have them) and checked
/// separately before anonymization.
EvaluationSet load_evaluations_csv(const std::string& path,
                                   const std::vector<CriterionSpec>& criteria);

std::string evaluations_to_csv(const EvaluationSet& evals,
                               const std::vector<CriterionSpec>& criteria);

/// Picks n alternatives uniformly among those with at least K evaluations,
/// then keeps per alternative the K evaluations closest (Euclidean) to its
/// mean review profile. Users already consumed by a previously selected
/// alternative are skipped and backfilled with the next-closest rows, keeping
/// contributor sets disjoint.
EvaluationSet select_alternatives(const EvaluationSet& full, int n, int k, Rng& rng);

void write_matrix_csv(const PerformanceMatrix& matrix, const std::string& path);
std::string matrix_to_csv(const PerformanceMatrix& matrix);
PerformanceMatrix read_matrix_csv(const std::string& path,
                                  const std::vector<CriterionSpec>& criteria);

/// Synthetic evaluation source for the experiment runner.
class SyntheticSource : public EvaluationSource {
public:
    SyntheticSource(int n_alternatives, std::vector<CriterionSpec> criteria)
        : n_alternatives_(n_alternatives), criteria_(std::move(criteria)) {}
    EvaluationSet sample(int k, std::uint64_t seed) override {
        Rng rng(seed);
        return gen_synthetic(n_alternatives_, criteria_, k, rng);
    }

private:
    int n_alternatives_;
    std::vector<CriterionSpec> criteria_;
};

/// Dataset-backed source: re-runs the selection procedure per iteration.
class DatasetSource : public EvaluationSource {
public:
    DatasetSource(EvaluationSet full, int n_alternatives)
        : full_(std::move(full)), n_alternatives_(n_alternatives) {}
    EvaluationSet sample(int k, std::uint64_t seed) override {
        Rng rng(seed);
        return select_alternatives(full_, n_alternatives_, k, rng);
    }

private:
    EvaluationSet full_;
    int n_alternatives_;
};

} // namespace outrank
