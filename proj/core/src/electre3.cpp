#include "outrank/electre3.hpp"

#include "outrank/errors.hpp"
#include "outrank/util.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace outrank {
namespace electre {

std::string CredibilityMatrix::to_csv() const {
    std::ostringstream os;
    os << "alternative";
    for (const auto& a : alternatives)
        os << ',' << a;
    os << '\n';
    for (std::size_t i = 0; i < alternatives.size(); ++i) {
        os << alternatives[i];
        for (std::size_t j = 0; j < alternatives.size(); ++j)
            os << ',' << (i == j ? "" : format_double(rho[i][j]));
        os << '\n';
    }
    return os.str();
}

double concordance_partial(double a_perf, double b_perf, const CriterionSpec& criterion) {
    double d = oriented(b_perf, criterion) - oriented(a_perf, criterion);
    if (d <= criterion.q)
        return 1.0;
    if (d >= criterion.p)
        return 0.0;
    // q < d < p implies p > q here
    return (criterion.p - d) / (criterion.p - criterion.q);
}

double concordance_global(std::size_t a, std::size_t b, const PerformanceMatrix& matrix,
                          const std::vector<CriterionSpec>& criteria) {
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        num += criteria[j].weight * concordance_partial(matrix.at(a, j), matrix.at(b, j), criteria[j]);
        den += criteria[j].weight;
    }
    return num / den;
}

double discordance(double a_perf, double b_perf, const CriterionSpec& criterion) {
    if (!criterion.v)
        return 0.0;
    double d = oriented(b_perf, criterion) - oriented(a_perf, criterion);
    if (d <= criterion.p)
        return 0.0;
    if (d >= *criterion.v)
        return 1.0;
    return (d - criterion.p) / (*criterion.v - criterion.p);
}

double credibility(std::size_t a, std::size_t b, const PerformanceMatrix& matrix,
                   const std::vector<CriterionSpec>& criteria) {
    double c = concordance_global(a, b, matrix, criteria);
    double rho = c;
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        double dj = discordance(matrix.at(a, j), matrix.at(b, j), criteria[j]);
        if (dj <= c)
            continue;
        if (dj >= 1.0)
            return 0.0;
        // dj > c implies c < 1, so the divisor is positive
        rho *= (1.0 - dj) / (1.0 - c);
    }
    return rho;
}

CredibilityMatrix credibility_matrix(const PerformanceMatrix& matrix,
                                     const std::vector<CriterionSpec>& criteria) {
    CredibilityMatrix cred;
    cred.alternatives = matrix.alternatives;
    std::size_t n = matrix.n_alternatives();
    cred.rho.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b)
                cred.rho[a][b] = credibility(a, b, matrix, criteria);
    return cred;
}

namespace {

using IndexSet = std::vector<std::size_t>;

double max_rho_below(const CredibilityMatrix& cred, const IndexSet& set, double bound) {
    double best = -1.0;
    for (std::size_t a : set)
        for (std::size_t b : set)
            if (a != b && cred.rho[a][b] < bound)
                best = std::max(best, cred.rho[a][b]);
    return best;
}

std::vector<int> qualifications(const CredibilityMatrix& cred, const IndexSet& set, double cut,
                                const DistillationParams& params, bool crisp) {
    std::vector<int> q(set.size(), 0);
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = 0; j < set.size(); ++j) {
            if (i == j)
                continue;
            double r = cred.rho[set[i]][set[j]];
            double r_back = cred.rho[set[j]][set[i]];
            bool outranks = crisp ? (r >= cut && r > r_back)
                                  : (r > cut && r > r_back + params.s(r));
            if (outranks) {
                ++q[i];
                --q[j];
            }
        }
    }
    return q;
}

IndexSet extremal_subset(const IndexSet& set, const std::vector<int>& q, bool take_max) {
    int target = take_max ? *std::max_element(q.begin(), q.end())
                          : *std::min_element(q.begin(), q.end());
    IndexSet out;
    for (std::size_t i = 0; i < set.size(); ++i)
        if (q[i] == target)
            out.push_back(set[i]);
    return out;
}

// Extracts the next class from `remaining`: the best subset for descending
// distillation, the worst for ascending. Refines with decreasing lambda
// levels until a singleton remains or the levels are exhausted.
IndexSet distill_level(const CredibilityMatrix& cred, const IndexSet& remaining,
                       DistillDirection direction, const DistillationParams& params) {
    bool take_max = direction == DistillDirection::Descending;

    if (params.fixed_lambda) {
        auto q = qualifications(cred, remaining, *params.fixed_lambda, params, true);
        return extremal_subset(remaining, q, take_max);
    }

    IndexSet current = remaining;
    double lambda = std::max(max_rho_below(cred, current, 2.0), 0.0);
    while (true) {
        if (current.size() == 1)
            return current;
        double cut = max_rho_below(cred, current, lambda - params.s(lambda));
        if (cut < 0.0)
            cut = 0.0;
        auto q = qualifications(cred, current, cut, params, false);
        IndexSet next = extremal_subset(current, q, take_max);
        if (next.size() == 1 || cut == 0.0)
            return next;
        current = std::move(next);
        lambda = std::min(cut, std::max(max_rho_below(cred, current, 2.0), 0.0));
    }
}

} // namespace

Preorder distill(const CredibilityMatrix& cred, DistillDirection direction,
                 const DistillationParams& params) {
    if (params.s(0.0) < 0.0 || params.s(1.0) < 0.0)
        throw ConfigError("distillation threshold s(lambda) must be nonnegative on [0,1]");
    for (const auto& row : cred.rho)
        for (double r : row)
            if (!(r >= 0.0 && r <= 1.0))
                throw DataError("credibility outside [0,1]");

    IndexSet remaining(cred.size());
    for (std::size_t i = 0; i < remaining.size(); ++i)
        remaining[i] = i;

    Preorder classes;
    while (!remaining.empty()) {
        IndexSet cls = distill_level(cred, remaining, direction, params);
        std::vector<std::string> names;
        for (std::size_t i : cls)
            names.push_back(cred.alternatives[i]);
        classes.push_back(std::move(names));
        IndexSet rest;
        for (std::size_t i : remaining)
            if (std::find(cls.begin(), cls.end(), i) == cls.end())
                rest.push_back(i);
        remaining = std::move(rest);
    }
    // Ascending distillation emits worst classes first; present best first.
    if (direction == DistillDirection::Ascending)
        std::reverse(classes.begin(), classes.end());
    return classes;
}

PartialPreorder intersect_preorders(const Preorder& descending, const Preorder& ascending) {
    std::map<std::string, std::size_t> pos_desc, pos_asc;
    for (std::size_t c = 0; c < descending.size(); ++c)
        for (const auto& a : descending[c])
            pos_desc[a] = c + 1;
    for (std::size_t c = 0; c < ascending.size(); ++c)
        for (const auto& a : ascending[c])
            pos_asc[a] = c + 1;
    if (pos_desc.size() != pos_asc.size())
        throw DataError("preorders cover different alternative sets");
    for (const auto& [name, _] : pos_desc)
        if (!pos_asc.count(name))
            throw DataError("preorders cover different alternative sets: " + name);

    PartialPreorder out;
    for (const auto& cls : descending)
        for (const auto& a : cls)
            out.alternatives.push_back(a);
    std::size_t n = out.alternatives.size();
    out.relation.assign(n, std::vector<Relation>(n, Relation::Indifferent));
    out.rank_scores.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = out.alternatives[i];
        out.rank_scores[i] =
            (static_cast<double>(pos_desc[a]) + static_cast<double>(pos_asc[a])) / 2.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            const auto& b = out.alternatives[j];
            if (pos_desc[a] == pos_desc[b] && pos_asc[a] == pos_asc[b])
                out.relation[i][j] = Relation::Indifferent;
            else if (pos_desc[a] <= pos_desc[b] && pos_asc[a] <= pos_asc[b])
                out.relation[i][j] = Relation::Preferred;
            else if (pos_desc[b] <= pos_desc[a] && pos_asc[b] <= pos_asc[a])
                out.relation[i][j] = Relation::PreferredBy;
            else
                out.relation[i][j] = Relation::Incomparable;
        }
    }
    return out;
}

RankResult electre3_rank(const PerformanceMatrix& matrix,
                         const std::vector<CriterionSpec>& criteria,
                         const DistillationParams& params) {
    require_valid(criteria, matrix, false);
    auto cred = credibility_matrix(matrix, criteria);
    auto desc = distill(cred, DistillDirection::Descending, params);
    auto asc = distill(cred, DistillDirection::Ascending, params);
    auto inter = intersect_preorders(desc, asc);

    RankResult result;
    result.method = Method::Electre3;
    // Preserve the matrix's alternative order in the output.
    std::map<std::string, double> score;
    for (std::size_t i = 0; i < inter.alternatives.size(); ++i)
        score[inter.alternatives[i]] = inter.rank_scores[i];
    for (const auto& a : matrix.alternatives)
        result.entries.push_back({a, score.at(a)});
    return result;
}

} // namespace electre
} // namespace outrank
