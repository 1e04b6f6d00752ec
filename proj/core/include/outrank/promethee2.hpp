#pragma once

#include "outrank/model.hpp"

#include <string>
#include <vector>

namespace outrank {
namespace promethee {

/// Preference degree for an oriented difference d = g(a) - g(b) under the
/// criterion's preference function. All six classical forms are supported.
double preference_value(double d, const CriterionSpec& criterion);

/// Weighted aggregate preference of a over b.
double preference_index(std::size_t a, std::size_t b, const PerformanceMatrix& matrix,
                        const std::vector<CriterionSpec>& criteria);

struct Flow {
    std::string alternative;
    double leaving;
    double entering;
    double net;
};

/// Leaving, entering, and net flows for every alternative, normalized by
/// 1/(|A|-1).
std::vector<Flow> net_flows(const PerformanceMatrix& matrix,
                            const std::vector<CriterionSpec>& criteria);

std::string flows_to_csv(const std::vector<Flow>& flows, const RankResult& rank);

/// Complete preorder by descending net flow; exact flow ties get average
/// ranks.
RankResult promethee2_rank(const PerformanceMatrix& matrix,
                           const std::vector<CriterionSpec>& criteria);

} // namespace promethee
} // namespace outrank
