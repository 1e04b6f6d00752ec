#pragma once

#include "outrank/electre3.hpp"
#include "outrank/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace outrank {

enum class Band { NegligibleToWeak, Moderate, Strong, VeryStrong };

std::string to_string(Band b);

/// Mean absolute cellwise difference between two same-shape matrices.
double mae(const PerformanceMatrix& m1, const PerformanceMatrix& m2);

struct SpearmanResult {
    double r = 0.0;
    bool degenerate = false; // a constant rank vector carries no order information
};

/// Tie-aware Spearman correlation: Pearson on average ranks of the two
/// rank-score vectors. Entries are matched by alternative id.
SpearmanResult spearman(const RankResult& r1, const RankResult& r2);

/// Conventional strength bands on |r_s|.
Band correlation_band(double r_s);

struct ExperimentGrid {
    std::vector<double> epsilons;
    std::vector<int> ks;
    int iterations = 50;
    std::vector<Mechanism> mechanisms{Mechanism::DP, Mechanism::IDP};
    std::vector<Method> methods{Method::Electre3, Method::Promethee2};
    std::uint64_t base_seed = 0;
    bool clamp_output = true;
};

struct ExperimentRecord {
    Method method;
    Mechanism mechanism;
    double epsilon;
    int k;
    int iteration;
    double mae;
    double spearman;
    double runtime_ms;
};

struct CellSummary {
    Method method;
    Mechanism mechanism;
    double epsilon;
    int k;
    double mean_mae;
    double std_mae;
    double mean_spearman;
    double std_spearman;
    Band band;
};

/// Supplies one evaluation set per (K, iteration); must be deterministic in
/// the seed.
class EvaluationSource {
public:
    virtual ~EvaluationSource() = default;
    virtual EvaluationSet sample(int k, std::uint64_t seed) = 0;
};

struct ExperimentResults {
    std::vector<ExperimentRecord> records;
    std::vector<CellSummary> summaries;
};

/// Runs the full (epsilon, K) grid: per iteration builds OM, anonymizes it
/// per mechanism, ranks OM and OM* with each method, and records MAE and the
/// rank correlation. Iteration i draws its data with seed base_seed + i; the
/// noise stream is derived from the same pair, shared across epsilons and
/// mechanisms so DP/iDP comparisons see identical standardized noise.
ExperimentResults run_experiment(EvaluationSource& source,
                                 const std::vector<CriterionSpec>& criteria,
                                 const electre::DistillationParams& electre_params,
                                 const ExperimentGrid& grid);

/// Per-record CSV. Every column except runtime_ms is a deterministic function
/// of the seed; pass include_runtime = false where byte-identical output
/// across reruns matters.
std::string records_to_csv(const std::vector<ExperimentRecord>& records,
                           bool include_runtime = true);
std::string summaries_to_csv(const std::vector<CellSummary>& summaries);

/// Plain SVG line chart of mean r_s vs K, one polyline per epsilon, for one
/// (method, mechanism) slice of the summaries.
std::string spearman_chart_svg(const std::vector<CellSummary>& summaries, Method method,
                               Mechanism mechanism);

/// Aligned text table of 50-iteration mean MAE, rows epsilon, column groups
/// K with one sub-column per mechanism.
std::string mae_table_text(const std::vector<CellSummary>& summaries, Method method);

} // namespace outrank
