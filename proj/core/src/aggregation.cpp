#include "outrank/aggregation.hpp"

#include "outrank/errors.hpp"

#include <sstream>
#include <unordered_map>

namespace outrank {

PerformanceMatrix aggregate_sam(const EvaluationSet& evals,
                                const std::vector<CriterionSpec>& criteria) {
    PerformanceMatrix om;
    om.alternatives = evals.alternatives;
    om.criteria.reserve(criteria.size());
    for (const auto& c : criteria)
        om.criteria.push_back(c.name);

    std::size_t expected_rows = evals.rows.empty() ? 0 : evals.rows.front().size();
    if (evals.k > 0)
        expected_rows = static_cast<std::size_t>(evals.k);

    om.values.reserve(evals.rows.size());
    for (std::size_t a = 0; a < evals.rows.size(); ++a) {
        const auto& rows = evals.rows[a];
        if (rows.empty())
            throw DataError("alternative '" + evals.alternatives[a] + "' has no evaluations");
        if (rows.size() != expected_rows) {
            std::ostringstream os;
            os << "alternative '" << evals.alternatives[a] << "' has " << rows.size()
               << " evaluations, expected " << expected_rows;
            throw DataError(os.str());
        }
        std::vector<double> cell(criteria.size(), 0.0);
        for (const auto& row : rows) {
            if (row.scores.size() != criteria.size())
                throw DataError("ragged evaluation row for user '" + row.user_id +
                                "' under alternative '" + evals.alternatives[a] + "'");
            for (std::size_t j = 0; j < criteria.size(); ++j) {
                if (!criteria[j].in_domain(row.scores[j]))
                    throw DataError("score outside domain for user '" + row.user_id +
                                    "' on criterion '" + criteria[j].name + "'");
                cell[j] += row.scores[j];
            }
        }
        for (auto& x : cell)
            x /= static_cast<double>(rows.size());
        om.values.push_back(std::move(cell));
    }
    return om;
}

std::vector<DisjointnessOffender> check_disjoint_contributors(const EvaluationSet& evals) {
    std::vector<DisjointnessOffender> offenders;
    std::unordered_map<std::string, std::size_t> seen; // user -> first alternative index
    for (std::size_t a = 0; a < evals.rows.size(); ++a) {
        for (const auto& row : evals.rows[a]) {
            auto [it, inserted] = seen.emplace(row.user_id, a);
            if (!inserted && it->second != a)
                offenders.push_back({row.user_id, evals.alternatives[it->second],
                                     evals.alternatives[a]});
        }
    }
    return offenders;
}

} // namespace outrank
