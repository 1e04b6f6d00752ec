#include "outrank/promethee2.hpp"

#include "outrank/errors.hpp"
#include "outrank/util.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace outrank {
namespace promethee {

double preference_value(double d, const CriterionSpec& c) {
    switch (c.pref_fn) {
    case PrefFn::Usual:
        return d > 0.0 ? 1.0 : 0.0;
    case PrefFn::UShape:
        return d > c.q ? 1.0 : 0.0;
    case PrefFn::VShape:
        if (c.p <= 0.0)
            return d > 0.0 ? 1.0 : 0.0;
        return std::min(1.0, std::max(0.0, d / c.p));
    case PrefFn::Level:
        if (d <= c.q)
            return 0.0;
        return d <= c.p ? 0.5 : 1.0;
    case PrefFn::LinearWithIndifference:
        if (d <= c.q)
            return 0.0;
        if (d > c.p)
            return 1.0;
        return (d - c.q) / (c.p - c.q);
    case PrefFn::Gaussian: {
        if (d <= 0.0)
            return 0.0;
        double s = c.p > 0.0 ? c.p : 1.0;
        return 1.0 - std::exp(-d * d / (2.0 * s * s));
    }
    }
    throw ConfigError("unsupported preference function");
}

double preference_index(std::size_t a, std::size_t b, const PerformanceMatrix& matrix,
                        const std::vector<CriterionSpec>& criteria) {
    if (a == b)
        return 0.0;
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        double d = oriented(matrix.at(a, j), criteria[j]) - oriented(matrix.at(b, j), criteria[j]);
        num += criteria[j].weight * preference_value(d, criteria[j]);
        den += criteria[j].weight;
    }
    return num / den;
}

std::vector<Flow> net_flows(const PerformanceMatrix& matrix,
                            const std::vector<CriterionSpec>& criteria) {
    std::size_t n = matrix.n_alternatives();
    if (n < 2)
        throw DataError("net flows need at least 2 alternatives");
    std::vector<std::vector<double>> pi(n, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b)
                pi[a][b] = preference_index(a, b, matrix, criteria);

    std::vector<Flow> flows(n);
    double norm = 1.0 / static_cast<double>(n - 1);
    for (std::size_t a = 0; a < n; ++a) {
        double leaving = 0.0, entering = 0.0;
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b)
                continue;
            leaving += pi[a][b];
            entering += pi[b][a];
        }
        flows[a] = {matrix.alternatives[a], leaving * norm, entering * norm,
                    (leaving - entering) * norm};
    }
    return flows;
}

std::string flows_to_csv(const std::vector<Flow>& flows, const RankResult& rank) {
    std::ostringstream os;
    os << "alternative,phi_plus,phi_minus,phi_net,rank\n";
    for (std::size_t i = 0; i < flows.size(); ++i)
        os << flows[i].alternative << ',' << format_double(flows[i].leaving) << ','
           << format_double(flows[i].entering) << ',' << format_double(flows[i].net) << ','
           << format_double(rank.entries[i].rank_score) << '\n';
    return os.str();
}

RankResult promethee2_rank(const PerformanceMatrix& matrix,
                           const std::vector<CriterionSpec>& criteria) {
    require_valid(criteria, matrix, false);
    auto flows = net_flows(matrix, criteria);
    std::size_t n = flows.size();

    // Average ranks on exact net-flow ties, descending flow = better rank.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return flows[a].net > flows[b].net; });

    std::vector<double> rank_of(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && flows[order[j + 1]].net == flows[order[i]].net)
            ++j;
        double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k)
            rank_of[order[k]] = avg;
        i = j + 1;
    }

    RankResult result;
    result.method = Method::Promethee2;
    for (std::size_t a = 0; a < n; ++a)
        result.entries.push_back({matrix.alternatives[a], rank_of[a]});
    return result;
}

} // namespace promethee
} // namespace outrank
