#include "doctest.h"
#include "fixtures.hpp"

#include "outrank/electre3.hpp"
#include "outrank/errors.hpp"
#include "outrank/util.hpp"

#include <algorithm>

using namespace outrank;
using namespace outrank::electre;

namespace {

CriterionSpec crit(double q, double p, std::optional<double> v = std::nullopt,
                   double weight = 1.0) {
    CriterionSpec c;
    c.name = "c";
    c.domain_min = 0.0;
    c.domain_max = 100.0;
    c.weight = weight;
    c.q = q;
    c.p = p;
    c.v = v;
    return c;
}

// Hand-built 3x3 credibility fixture; the distillation below was executed by
// hand with s(lambda) = -0.15*lambda + 0.30 and is frozen as a golden trace:
//   descending: lambda0=0.9, cut=0.7; a T b (0.9 > 0.6+0.165),
//     b T c (0.85 > 0.3+0.1725); Q = {a:+1, b:0, c:-1} -> [a];
//     then {b,c}: cut=0.3, b T c -> [b], [c].
//   ascending: Q as above -> worst [c]; then {a,b}: cut=0.6,
//     a T b -> worst [b]; remaining [a]. Best-first: [a],[b],[c].
CredibilityMatrix golden_cred() {
    CredibilityMatrix m;
    m.alternatives = {"a", "b", "c"};
    m.rho = {{0.0, 0.9, 0.7}, {0.6, 0.0, 0.85}, {0.2, 0.3, 0.0}};
    return m;
}

} // namespace

TEST_CASE("partial concordance piecewise form") {
    auto c = crit(3, 10);
    CHECK(concordance_partial(80, 78, c) == 1.0);  // d = -2 <= q
    CHECK(concordance_partial(60, 80, c) == 0.0);  // d = 20 >= p
    CHECK(concordance_partial(70, 76.5, c) == doctest::Approx(0.5).epsilon(1e-12)); // (10-6.5)/7
}

TEST_CASE("partial concordance steps at q when p equals q") {
    auto c = crit(3, 3);
    CHECK(concordance_partial(50, 53, c) == 1.0);
    CHECK(concordance_partial(50, 53.01, c) == 0.0);
}

TEST_CASE("partial concordance respects minimize direction") {
    auto c = crit(3, 10);
    c.direction = Direction::Minimize;
    // lower is better: a=20 vs b=40 means a is 20 better, full concordance
    CHECK(concordance_partial(20, 40, c) == 1.0);
    CHECK(concordance_partial(40, 20, c) == 0.0);
}

TEST_CASE("global concordance is the weighted mean of partials") {
    auto criteria = fixtures::synthetic_criteria();
    // Build performances realizing c_j = [1, 1, 0, 1, 0, 0.5]:
    // d <= q gives 1, d >= p gives 0; c6 has q=3, p=10, d=6.5 -> 0.5.
    PerformanceMatrix m = fixtures::matrix_of(
        {"a", "b"}, {"c1", "c2", "c3", "c4", "c5", "c6"},
        {{50, 50, 50, 50, 50, 50}, {50, 50, 80, 50, 80, 56.5}});
    CHECK(concordance_global(0, 1, m, criteria) == doctest::Approx(0.70).epsilon(1e-12));
}

TEST_CASE("global concordance trivial cases") {
    std::vector<CriterionSpec> two{crit(3, 10, std::nullopt, 0.5), crit(3, 10, std::nullopt, 0.5)};
    two[1].name = "c2";
    PerformanceMatrix m =
        fixtures::matrix_of({"a", "b"}, {"c", "c2"}, {{50, 50}, {50, 80}});
    // c_j = [1, 0] at equal weights
    CHECK(concordance_global(0, 1, m, two) == doctest::Approx(0.5).epsilon(1e-12));
    PerformanceMatrix eq = fixtures::matrix_of({"a", "b"}, {"c", "c2"}, {{50, 50}, {50, 50}});
    CHECK(concordance_global(0, 1, eq, two) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("discordance piecewise form") {
    auto c = crit(3, 10, 25.0);
    CHECK(discordance(50, 80, c) == 1.0);   // d = 30 >= v
    CHECK(discordance(50, 58, c) == 0.0);   // d <= p
    CHECK(discordance(50, 67.5, c) == doctest::Approx(0.5).epsilon(1e-12)); // (17.5-10)/15
    auto no_veto = crit(3, 10);
    CHECK(discordance(0, 100, no_veto) == 0.0);
}

TEST_CASE("credibility branch behavior") {
    // One criterion pins c(a,b); a second with a veto drives d_j.
    std::vector<CriterionSpec> criteria{crit(3, 10, std::nullopt, 0.8),
                                        crit(3, 10, 25.0, 0.2)};
    criteria[1].name = "c2";

    SUBCASE("all discordances below concordance leave rho = c") {
        PerformanceMatrix m =
            fixtures::matrix_of({"a", "b"}, {"c", "c2"}, {{50, 50}, {50, 50}});
        CHECK(credibility(0, 1, m, criteria) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("a discordance above concordance attenuates rho") {
        // c1: d=0 -> partial 1; c2: d = 23.5 -> partial 0, discordance
        // (23.5-10)/15 = 0.9. c = 0.8, rho = 0.8 * (1-0.9)/(1-0.8) = 0.40
        PerformanceMatrix m =
            fixtures::matrix_of({"a", "b"}, {"c", "c2"}, {{50, 50}, {50, 73.5}});
        CHECK(concordance_global(0, 1, m, criteria) == doctest::Approx(0.8).epsilon(1e-12));
        CHECK(credibility(0, 1, m, criteria) == doctest::Approx(0.40).epsilon(1e-12));
    }
    SUBCASE("a full veto annihilates credibility") {
        PerformanceMatrix m =
            fixtures::matrix_of({"a", "b"}, {"c", "c2"}, {{50, 50}, {50, 80}});
        CHECK(credibility(0, 1, m, criteria) == 0.0);
    }
}

TEST_CASE("credibility stays within [0,1] and never exceeds concordance on random data") {
    auto criteria = fixtures::synthetic_criteria();
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        PerformanceMatrix m;
        m.criteria = {"c1", "c2", "c3", "c4", "c5", "c6"};
        for (int a = 0; a < 4; ++a) {
            m.alternatives.push_back("x" + std::to_string(a));
            std::vector<double> row;
            for (int j = 0; j < 6; ++j)
                row.push_back(uniform01(rng) * 100.0);
            m.values.push_back(row);
        }
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) {
                if (a == b)
                    continue;
                double rho = credibility(a, b, m, criteria);
                double c = concordance_global(a, b, m, criteria);
                CHECK(rho >= 0.0);
                CHECK(rho <= c + 1e-12);
            }
    }
}

TEST_CASE("distillation with an all-zero credibility matrix yields one class") {
    CredibilityMatrix m;
    m.alternatives = {"a", "b", "c"};
    m.rho.assign(3, std::vector<double>(3, 0.0));
    auto desc = distill(m, DistillDirection::Descending, {});
    REQUIRE(desc.size() == 1);
    CHECK(desc[0].size() == 3);
    auto asc = distill(m, DistillDirection::Ascending, {});
    REQUIRE(asc.size() == 1);
    CHECK(asc[0].size() == 3);
}

TEST_CASE("two-alternative distillation separates a clear winner") {
    CredibilityMatrix m;
    m.alternatives = {"a", "b"};
    m.rho = {{0.0, 0.9}, {0.2, 0.0}};
    auto desc = distill(m, DistillDirection::Descending, {});
    REQUIRE(desc.size() == 2);
    CHECK(desc[0] == std::vector<std::string>{"a"});
    CHECK(desc[1] == std::vector<std::string>{"b"});
}

TEST_CASE("golden distillation trace") {
    auto m = golden_cred();
    auto desc = distill(m, DistillDirection::Descending, {});
    REQUIRE(desc.size() == 3);
    CHECK(desc[0] == std::vector<std::string>{"a"});
    CHECK(desc[1] == std::vector<std::string>{"b"});
    CHECK(desc[2] == std::vector<std::string>{"c"});
    auto asc = distill(m, DistillDirection::Ascending, {});
    REQUIRE(asc.size() == 3);
    CHECK(asc[0] == std::vector<std::string>{"a"});
    CHECK(asc[1] == std::vector<std::string>{"b"});
    CHECK(asc[2] == std::vector<std::string>{"c"});
}

TEST_CASE("distillation emits a partition") {
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        CredibilityMatrix m;
        int n = 3 + static_cast<int>(rng() % 6);
        for (int i = 0; i < n; ++i)
            m.alternatives.push_back("x" + std::to_string(i));
        m.rho.assign(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    m.rho[i][j] = uniform01(rng);
        for (auto dir : {DistillDirection::Descending, DistillDirection::Ascending}) {
            auto classes = distill(m, dir, {});
            std::vector<std::string> all;
            for (const auto& cls : classes) {
                CHECK(!cls.empty());
                for (const auto& x : cls)
                    all.push_back(x);
            }
            std::sort(all.begin(), all.end());
            auto sorted = m.alternatives;
            std::sort(sorted.begin(), sorted.end());
            CHECK(all == sorted);
            CHECK(classes.size() <= static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("intersection of identical preorders has no incomparability") {
    Preorder p{{"a"}, {"b", "c"}, {"d"}};
    auto inter = intersect_preorders(p, p);
    for (std::size_t i = 0; i < inter.alternatives.size(); ++i)
        for (std::size_t j = 0; j < inter.alternatives.size(); ++j)
            CHECK(inter.relation[i][j] != Relation::Incomparable);
}

TEST_CASE("opposed preorders give incomparability and equal rank scores") {
    Preorder desc{{"a"}, {"b"}};
    Preorder asc{{"b"}, {"a"}};
    auto inter = intersect_preorders(desc, asc);
    REQUIRE(inter.alternatives.size() == 2);
    CHECK(inter.relation[0][1] == Relation::Incomparable);
    CHECK(inter.rank_scores[0] == inter.rank_scores[1]);
}

TEST_CASE("hand intersection with mixed relations") {
    Preorder desc{{"a"}, {"b"}, {"c"}};
    Preorder asc{{"a"}, {"c"}, {"b"}};
    auto inter = intersect_preorders(desc, asc);
    auto idx = [&](const std::string& x) {
        return static_cast<std::size_t>(
            std::find(inter.alternatives.begin(), inter.alternatives.end(), x) -
            inter.alternatives.begin());
    };
    CHECK(inter.relation[idx("a")][idx("b")] == Relation::Preferred);
    CHECK(inter.relation[idx("a")][idx("c")] == Relation::Preferred);
    CHECK(inter.relation[idx("b")][idx("c")] == Relation::Incomparable);
    CHECK(inter.rank_scores[idx("a")] == 1.0);
    CHECK(inter.rank_scores[idx("b")] == 2.5);
    CHECK(inter.rank_scores[idx("c")] == 2.5);
}

TEST_CASE("coverage mismatch is rejected") {
    CHECK_THROWS_AS(intersect_preorders({{"a"}, {"b"}}, {{"a"}}), DataError);
    CHECK_THROWS_AS(intersect_preorders({{"a"}, {"b"}}, {{"a"}, {"c"}}), DataError);
}

TEST_CASE("strict dominance puts the dominator first") {
    auto criteria = fixtures::synthetic_criteria();
    PerformanceMatrix m;
    m.criteria = {"c1", "c2", "c3", "c4", "c5", "c6"};
    m.alternatives = {"top", "mid", "low"};
    m.values = {{90, 90, 90, 90, 90, 90}, {60, 60, 60, 60, 60, 60}, {38, 38, 38, 38, 38, 38}};
    auto result = electre3_rank(m, criteria);
    REQUIRE(result.entries.size() == 3);
    CHECK(result.entries[0].rank_score < result.entries[1].rank_score);
    CHECK(result.entries[1].rank_score < result.entries[2].rank_score);
}

TEST_CASE("identical rows rank all tied") {
    auto criteria = fixtures::synthetic_criteria();
    PerformanceMatrix m;
    m.criteria = {"c1", "c2", "c3", "c4", "c5", "c6"};
    for (int a = 0; a < 4; ++a) {
        m.alternatives.push_back("x" + std::to_string(a));
        m.values.push_back({50, 50, 50, 50, 50, 50});
    }
    auto result = electre3_rank(m, criteria);
    for (const auto& e : result.entries)
        CHECK(e.rank_score == result.entries[0].rank_score);
}

TEST_CASE("ranking is invariant under uniform weight rescaling") {
    auto criteria = fixtures::synthetic_criteria();
    Rng rng(17);
    PerformanceMatrix m;
    m.criteria = {"c1", "c2", "c3", "c4", "c5", "c6"};
    for (int a = 0; a < 6; ++a) {
        m.alternatives.push_back("x" + std::to_string(a));
        std::vector<double> row;
        for (int j = 0; j < 6; ++j)
            row.push_back(uniform01(rng) * 100.0);
        m.values.push_back(row);
    }
    auto base = electre3_rank(m, criteria);
    auto scaled = criteria;
    for (auto& c : scaled)
        c.weight *= 7.5;
    auto rescaled = electre3_rank(m, scaled);
    for (std::size_t i = 0; i < base.entries.size(); ++i)
        CHECK(base.entries[i].rank_score == rescaled.entries[i].rank_score);
}

TEST_CASE("ranking is invariant under permutation of alternatives") {
    auto criteria = fixtures::synthetic_criteria();
    Rng rng(19);
    PerformanceMatrix m;
    m.criteria = {"c1", "c2", "c3", "c4", "c5", "c6"};
    for (int a = 0; a < 5; ++a) {
        m.alternatives.push_back("x" + std::to_string(a));
        std::vector<double> row;
        for (int j = 0; j < 6; ++j)
            row.push_back(uniform01(rng) * 100.0);
        m.values.push_back(row);
    }
    auto base = electre3_rank(m, criteria);

    PerformanceMatrix perm = m;
    std::reverse(perm.alternatives.begin(), perm.alternatives.end());
    std::reverse(perm.values.begin(), perm.values.end());
    auto permuted = electre3_rank(perm, criteria);

    for (const auto& e : base.entries) {
        auto it = std::find_if(permuted.entries.begin(), permuted.entries.end(),
                               [&](const RankEntry& x) { return x.alternative == e.alternative; });
        REQUIRE(it != permuted.entries.end());
        CHECK(it->rank_score == e.rank_score);
    }
}

TEST_CASE("golden credibility feeds the full pipeline") {
    auto m = golden_cred();
    auto desc = distill(m, DistillDirection::Descending, {});
    auto asc = distill(m, DistillDirection::Ascending, {});
    auto inter = intersect_preorders(desc, asc);
    CHECK(inter.rank_scores == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("fixed-lambda crisp cut mode ranks the golden fixture the same way") {
    auto m = golden_cred();
    DistillationParams params;
    params.fixed_lambda = 0.75;
    auto desc = distill(m, DistillDirection::Descending, params);
    REQUIRE(desc.size() == 3);
    CHECK(desc[0] == std::vector<std::string>{"a"});
}
