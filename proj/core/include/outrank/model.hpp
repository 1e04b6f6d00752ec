#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace outrank {

enum class Direction { Maximize, Minimize };

enum class PrefFn { Usual, UShape, VShape, Level, LinearWithIndifference, Gaussian };

enum class Method { Electre3, Promethee2 };

enum class Mechanism { None, DP, IDP };

std::string to_string(Method m);
std::string to_string(Mechanism m);
std::string to_string(PrefFn f);

/// Pseudo-criterion description: scale direction, domain bounds, weight,
/// indifference/preference/veto thresholds, preference function for
/// PROMETHEE-II, and the fraction of the privacy budget it receives.
struct CriterionSpec {
    std::string name;
    Direction direction = Direction::Maximize;
    double domain_min = 0.0;
    double domain_max = 1.0;
    double weight = 1.0;
    double q = 0.0; // indifference threshold
    double p = 0.0; // preference threshold
    std::optional<double> v; // veto threshold; absent = no veto
    PrefFn pref_fn = PrefFn::Level;
    std::optional<double> epsilon_share; // default: 1/|criteria|
    double step = 0.0; // rating grid step; 0 = continuous

    double span() const { return domain_max - domain_min; }
    bool in_domain(double x) const { return x >= domain_min && x <= domain_max; }
};

/// Effective epsilon share of criterion j (uniform 1/m when unspecified).
double epsilon_share_of(const std::vector<CriterionSpec>& criteria, std::size_t j);

/// Alternatives x criteria grid of aggregated performances (OM or OM*).
struct PerformanceMatrix {
    std::vector<std::string> alternatives;
    std::vector<std::string> criteria;
    std::vector<std::vector<double>> values; // [alternative][criterion]

    std::size_t n_alternatives() const { return alternatives.size(); }
    std::size_t n_criteria() const { return criteria.size(); }
    double at(std::size_t a, std::size_t j) const { return values[a][j]; }
    bool same_shape(const PerformanceMatrix& other) const;
};

struct Evaluation {
    std::string user_id;
    std::vector<double> scores; // one per criterion, criterion order
};

/// Raw per-user scores grouped by alternative. `k` is the declared number of
/// contributors per alternative (0 when unknown, e.g. a full ratings dump
/// before subsampling).
struct EvaluationSet {
    std::vector<std::string> alternatives;
    std::vector<std::vector<Evaluation>> rows; // rows[i] belongs to alternatives[i]
    int k = 0;

    std::size_t n_alternatives() const { return alternatives.size(); }
};

struct RankEntry {
    std::string alternative;
    double rank_score; // lower = better; ties allowed
};

struct RankMeta {
    Mechanism mechanism = Mechanism::None;
    double epsilon = 0.0;
    int k = 0;
    std::uint64_t seed = 0;
};

/// Complete-with-ties ranking plus provenance.
struct RankResult {
    Method method = Method::Promethee2;
    std::vector<RankEntry> entries;
    RankMeta meta;
};

struct ValidationIssue {
    enum class Code { DomainViolation, ThresholdOrder, WeightError, ShareError, Shape };
    Code code;
    std::string where;
    std::string message;
};

/// Checks every criterion and matrix invariant; empty result means valid.
/// Deterministic and side-effect free.
std::vector<ValidationIssue> validate_criteria(const std::vector<CriterionSpec>& criteria);
/// With enforce_domain false only shape, finiteness, and criterion invariants
/// are checked; ranking methods accept out-of-domain values (unclamped noisy
/// matrices) since they depend on differences only.
std::vector<ValidationIssue> validate_problem(const std::vector<CriterionSpec>& criteria,
                                              const PerformanceMatrix& matrix,
                                              bool enforce_domain = true);

/// Throws ConfigError listing every issue when validation fails.
void require_valid(const std::vector<CriterionSpec>& criteria, const PerformanceMatrix& matrix,
                   bool enforce_domain = true);

/// Performance oriented so that larger is always better downstream.
inline double oriented(double value, const CriterionSpec& c) {
    return c.direction == Direction::Maximize ? value : -value;
}

} // namespace outrank
