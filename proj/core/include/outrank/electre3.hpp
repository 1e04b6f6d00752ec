#pragma once

#include "outrank/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace outrank {
namespace electre {

/// Pairwise outranking credibilities rho(a, b) in [0, 1]; diagonal unused.
struct CredibilityMatrix {
    std::vector<std::string> alternatives;
    std::vector<std::vector<double>> rho;

    std::size_t size() const { return alternatives.size(); }
    std::string to_csv() const;
};

/// Distillation discrimination threshold s(lambda) = alpha * lambda + beta.
/// When fixed_lambda is set, distillation instead uses a single crisp cut at
/// that credibility level.
struct DistillationParams {
    double alpha = -0.15;
    double beta = 0.30;
    std::optional<double> fixed_lambda;

    double s(double lambda) const { return alpha * lambda + beta; }
};

enum class DistillDirection { Descending, Ascending };

/// Ordered classes of alternatives, best class first.
using Preorder = std::vector<std::vector<std::string>>;

/// Per-criterion concordance with the hypothesis "a outranks b": 1 inside the
/// indifference band, 0 past the preference threshold, linear in between.
double concordance_partial(double a_perf, double b_perf, const CriterionSpec& criterion);

double concordance_global(std::size_t a, std::size_t b, const PerformanceMatrix& matrix,
                          const std::vector<CriterionSpec>& criteria);

/// Per-criterion opposition to "a outranks b", reaching 1 at the veto
/// threshold. Identically 0 when the criterion declares no veto.
double discordance(double a_perf, double b_perf, const CriterionSpec& criterion);

/// Concordance attenuated by every discordance that exceeds it.
double credibility(std::size_t a, std::size_t b, const PerformanceMatrix& matrix,
                   const std::vector<CriterionSpec>& criteria);

CredibilityMatrix credibility_matrix(const PerformanceMatrix& matrix,
                                     const std::vector<CriterionSpec>& criteria);

/// Classical lambda-distillation. Produces a complete preorder (ordered
/// partition) of the alternatives, best class first for both directions.
Preorder distill(const CredibilityMatrix& cred, DistillDirection direction,
                 const DistillationParams& params);

enum class Relation { Preferred, PreferredBy, Indifferent, Incomparable };

/// Partial preorder obtained by intersecting the two distillations, plus a
/// complete-with-ties linearization: rank score = mean of the two class
/// positions, used downstream for rank correlation.
struct PartialPreorder {
    std::vector<std::string> alternatives;
    std::vector<std::vector<Relation>> relation; // relation[a][b], diagonal Indifferent
    std::vector<double> rank_scores;
};

PartialPreorder intersect_preorders(const Preorder& descending, const Preorder& ascending);

/// Full pipeline: credibility matrix, both distillations, intersection.
RankResult electre3_rank(const PerformanceMatrix& matrix,
                         const std::vector<CriterionSpec>& criteria,
                         const DistillationParams& params = {});

} // namespace electre
} // namespace outrank
