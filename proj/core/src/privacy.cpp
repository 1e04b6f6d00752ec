#include "outrank/privacy.hpp"

#include "outrank/aggregation.hpp"
#include "outrank/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace outrank {

std::string SensitivityReport::to_csv() const {
    std::ostringstream os;
    os << "alternative,criterion,global_sens,local_sens,scale,epsilon_share\n";
    for (const auto& c : cells)
        os << c.alternative << ',' << c.criterion << ',' << format_double(c.global_sensitivity)
           << ',' << format_double(c.local_sensitivity) << ',' << format_double(c.noise_scale_used)
           << ',' << format_double(c.epsilon_share) << '\n';
    return os.str();
}

double global_sensitivity_sam(const CriterionSpec& criterion, int k) {
    if (k < 1)
        throw PrivacyError("global_sensitivity_sam: K must be >= 1");
    return criterion.span() / static_cast<double>(k);
}

double local_sensitivity_sam(std::span<const double> scores, const CriterionSpec& criterion) {
    if (scores.empty())
        throw PrivacyError("local_sensitivity_sam: empty score list");
    auto [mn, mx] = std::minmax_element(scores.begin(), scores.end());
    double reach = std::max(criterion.domain_max - *mn, *mx - criterion.domain_min);
    return reach / static_cast<double>(scores.size());
}

std::vector<double> split_budget(double epsilon, const std::vector<CriterionSpec>& criteria) {
    if (!(epsilon > 0.0))
        throw PrivacyError("privacy budget must be positive");
    double share_sum = 0.0;
    std::vector<double> budgets;
    budgets.reserve(criteria.size());
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        double share = epsilon_share_of(criteria, j);
        if (!(share > 0.0))
            throw PrivacyError("criterion '" + criteria[j].name +
                               "' has zero epsilon share; it would receive infinite-scale noise");
        share_sum += share;
        budgets.push_back(epsilon * share);
    }
    if (criteria.empty() || std::abs(share_sum - 1.0) > 1e-9)
        throw PrivacyError("epsilon shares must sum to 1");
    return budgets;
}

double laplace_sample(double scale, Rng& rng) {
    if (!(scale > 0.0))
        throw PrivacyError("laplace_sample: scale must be positive");
    double u = uniform01(rng) - 0.5;
    double sign = u < 0.0 ? -1.0 : 1.0;
    return -scale * sign * std::log(1.0 - 2.0 * std::abs(u));
}

std::pair<PerformanceMatrix, SensitivityReport>
anonymize_matrix(const PerformanceMatrix& om, const EvaluationSet& evals,
                 const std::vector<CriterionSpec>& criteria, const PrivacyParams& params) {
    PerformanceMatrix out = om;
    SensitivityReport report;
    report.cells.reserve(om.n_alternatives() * om.n_criteria());

    if (params.mechanism == Mechanism::None) {
        for (std::size_t a = 0; a < om.n_alternatives(); ++a)
            for (std::size_t j = 0; j < om.n_criteria(); ++j)
                report.cells.push_back({om.alternatives[a], om.criteria[j], 0.0, 0.0, 0.0,
                                        epsilon_share_of(criteria, j)});
        return {std::move(out), std::move(report)};
    }

    auto offenders = check_disjoint_contributors(evals);
    if (!offenders.empty()) {
        std::ostringstream os;
        os << "contributor sets are not disjoint (parallel composition invalid):";
        for (std::size_t i = 0; i < offenders.size() && i < 5; ++i)
            os << " user '" << offenders[i].user_id << "' rates '"
               << offenders[i].alternative_a << "' and '" << offenders[i].alternative_b << "';";
        throw PrivacyError(os.str());
    }
    if (evals.alternatives != om.alternatives)
        throw PrivacyError("evaluation set does not match matrix alternatives");

    auto budgets = split_budget(params.epsilon, criteria);
    Rng rng(params.seed);

    // Fixed traversal: alternatives in input order, criteria in input order.
    for (std::size_t a = 0; a < om.n_alternatives(); ++a) {
        int k = static_cast<int>(evals.rows[a].size());
        for (std::size_t j = 0; j < om.n_criteria(); ++j) {
            double gs = global_sensitivity_sam(criteria[j], k);
            std::vector<double> scores;
            scores.reserve(evals.rows[a].size());
            for (const auto& row : evals.rows[a])
                scores.push_back(row.scores[j]);
            double ls = local_sensitivity_sam(scores, criteria[j]);
            double sens = params.mechanism == Mechanism::DP ? gs : ls;
            double scale = sens / budgets[j];
            double noisy = om.at(a, j) + laplace_sample(scale, rng);
            if (params.clamp_output)
                noisy = std::clamp(noisy, criteria[j].domain_min, criteria[j].domain_max);
            out.values[a][j] = noisy;
            report.cells.push_back({om.alternatives[a], om.criteria[j], gs, ls, scale,
                                    epsilon_share_of(criteria, j)});
        }
    }
    return {std::move(out), std::move(report)};
}

} // namespace outrank
