#include "outrank/model.hpp"

#include "outrank/errors.hpp"

#include <cmath>
#include <sstream>

namespace outrank {

std::string to_string(Method m) {
    return m == Method::Electre3 ? "electre3" : "promethee2";
}

std::string to_string(Mechanism m) {
    switch (m) {
    case Mechanism::None: return "none";
    case Mechanism::DP: return "dp";
    case Mechanism::IDP: return "idp";
    }
    return "?";
}

std::string to_string(PrefFn f) {
    switch (f) {
    case PrefFn::Usual: return "usual";
    case PrefFn::UShape: return "ushape";
    case PrefFn::VShape: return "vshape";
    case PrefFn::Level: return "level";
    case PrefFn::LinearWithIndifference: return "linear";
    case PrefFn::Gaussian: return "gaussian";
    }
    return "?";
}

double epsilon_share_of(const std::vector<CriterionSpec>& criteria, std::size_t j) {
    const auto& c = criteria.at(j);
    if (c.epsilon_share)
        return *c.epsilon_share;
    return 1.0 / static_cast<double>(criteria.size());
}

bool PerformanceMatrix::same_shape(const PerformanceMatrix& other) const {
    return alternatives.size() == other.alternatives.size() &&
           criteria == other.criteria;
}

namespace {

void check_criteria(const std::vector<CriterionSpec>& criteria,
                    std::vector<ValidationIssue>& issues) {
    using Code = ValidationIssue::Code;
    double weight_sum = 0.0;
    double share_sum = 0.0;
    for (const auto& c : criteria) {
        if (!(c.domain_min < c.domain_max))
            issues.push_back({Code::DomainViolation, c.name,
                              "domain_min must be strictly below domain_max"});
        if (c.q < 0.0 || c.p < c.q)
            issues.push_back({Code::ThresholdOrder, c.name,
                              "thresholds must satisfy 0 <= q <= p"});
        if (c.v && !(*c.v > c.p))
            issues.push_back({Code::ThresholdOrder, c.name,
                              "veto threshold must exceed preference threshold"});
        if (c.weight < 0.0)
            issues.push_back({Code::WeightError, c.name, "negative weight"});
        weight_sum += c.weight;
        share_sum += c.epsilon_share ? *c.epsilon_share
                                     : 1.0 / static_cast<double>(criteria.size());
        if (c.epsilon_share && *c.epsilon_share < 0.0)
            issues.push_back({Code::ShareError, c.name, "negative epsilon share"});
    }
    if (criteria.empty() || !(weight_sum > 0.0))
        issues.push_back({Code::WeightError, "criteria", "weights must sum to a positive value"});
    if (!criteria.empty() && std::abs(share_sum - 1.0) > 1e-9) {
        std::ostringstream os;
        os << "epsilon shares sum to " << share_sum << ", expected 1";
        issues.push_back({Code::ShareError, "criteria", os.str()});
    }
}

} // namespace

std::vector<ValidationIssue> validate_criteria(const std::vector<CriterionSpec>& criteria) {
    std::vector<ValidationIssue> issues;
    check_criteria(criteria, issues);
    return issues;
}

std::vector<ValidationIssue> validate_problem(const std::vector<CriterionSpec>& criteria,
                                              const PerformanceMatrix& matrix,
                                              bool enforce_domain) {
    using Code = ValidationIssue::Code;
    std::vector<ValidationIssue> issues;
    check_criteria(criteria, issues);

    if (matrix.criteria.size() != criteria.size()) {
        issues.push_back({Code::Shape, "matrix", "criterion count mismatch"});
        return issues;
    }
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        if (matrix.criteria[j] != criteria[j].name)
            issues.push_back({Code::Shape, matrix.criteria[j],
                              "matrix column order does not match criteria"});
    }
    for (std::size_t a = 0; a < matrix.n_alternatives(); ++a) {
        if (matrix.values[a].size() != criteria.size()) {
            issues.push_back({Code::Shape, matrix.alternatives[a], "ragged matrix row"});
            continue;
        }
        for (std::size_t j = 0; j < criteria.size(); ++j) {
            double x = matrix.values[a][j];
            if (!std::isfinite(x) || (enforce_domain && !criteria[j].in_domain(x))) {
                std::ostringstream os;
                os << "value " << x << " outside domain [" << criteria[j].domain_min
                   << ", " << criteria[j].domain_max << "]";
                issues.push_back({Code::DomainViolation,
                                  matrix.alternatives[a] + "/" + criteria[j].name, os.str()});
            }
        }
    }
    for (std::size_t a = 0; a < matrix.n_alternatives(); ++a)
        for (std::size_t b = a + 1; b < matrix.n_alternatives(); ++b)
            if (matrix.alternatives[a] == matrix.alternatives[b])
                issues.push_back({Code::Shape, matrix.alternatives[a],
                                  "duplicate alternative id"});
    return issues;
}

void require_valid(const std::vector<CriterionSpec>& criteria, const PerformanceMatrix& matrix,
                   bool enforce_domain) {
    auto issues = validate_problem(criteria, matrix, enforce_domain);
    if (issues.empty())
        return;
    std::ostringstream os;
    os << "invalid problem:";
    for (const auto& i : issues)
        os << "\n  [" << i.where << "] " << i.message;
    throw ConfigError(os.str());
}

} // namespace outrank
