#pragma once

#include "outrank/model.hpp"

#include <string>
#include <vector>

namespace outrank {

/// Overall performance matrix OM via the simple arithmetic mean: cell (a, j)
/// is the mean of alternative a's K contributor scores on criterion j.
/// Throws DataError on empty alternatives, ragged rows, or out-of-domain
/// scores.
PerformanceMatrix aggregate_sam(const EvaluationSet& evals,
                                const std::vector<CriterionSpec>& criteria);

struct DisjointnessOffender {
    std::string user_id;
    std::string alternative_a;
    std::string alternative_b;
};

/// Diagnostic: lists every user that contributed to more than one
/// alternative. Empty result means contributor sets are pairwise disjoint and
/// parallel budget composition across alternatives is sound.
std::vector<DisjointnessOffender> check_disjoint_contributors(const EvaluationSet& evals);

} // namespace outrank
