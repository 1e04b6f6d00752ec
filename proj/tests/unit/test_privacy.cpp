#include "doctest.h"
#include "fixtures.hpp"

#include "outrank/aggregation.hpp"
#include "outrank/data_io.hpp"
#include "outrank/errors.hpp"
#include "outrank/privacy.hpp"

#include <cmath>

using namespace outrank;

namespace {

CriterionSpec domain(double lo, double hi) {
    CriterionSpec c;
    c.name = "c";
    c.domain_min = lo;
    c.domain_max = hi;
    return c;
}

} // namespace

TEST_CASE("global sensitivity of SAM is span/K") {
    CHECK(global_sensitivity_sam(domain(0, 100), 10) == doctest::Approx(10.0));
    CHECK(global_sensitivity_sam(domain(1, 5), 200) == doctest::Approx(0.02));
    CHECK(global_sensitivity_sam(domain(0, 100), 400) == doctest::Approx(0.25));
    CHECK_THROWS_AS(global_sensitivity_sam(domain(0, 100), 0), PrivacyError);
}

TEST_CASE("local sensitivity hand evaluations") {
    auto c = domain(0, 100);
    std::vector<double> scores{30, 40, 42, 47, 50, 51, 52, 53, 54, 55};
    // min 30, max 55 -> max{100-30, 55-0}/10 = 7.0
    CHECK(local_sensitivity_sam(scores, c) == doctest::Approx(7.0));

    auto c2 = domain(1, 5);
    std::vector<double> s2{2, 2, 3, 3};
    // max{5-2, 3-1}/4 = 0.75
    CHECK(local_sensitivity_sam(s2, c2) == doctest::Approx(0.75));

    std::vector<double> empty;
    CHECK_THROWS_AS(local_sensitivity_sam(empty, c), PrivacyError);
}

TEST_CASE("local sensitivity equals global when a score sits at a domain bound") {
    auto c = domain(0, 100);
    std::vector<double> scores(10, 100.0);
    CHECK(local_sensitivity_sam(scores, c) == doctest::Approx(global_sensitivity_sam(c, 10)));
}

TEST_CASE("local sensitivity never exceeds global sensitivity") {
    auto c = domain(0, 100);
    Rng rng(99);
    for (int trial = 0; trial < 2000; ++trial) {
        int k = 1 + static_cast<int>(rng() % 20);
        std::vector<double> scores;
        for (int i = 0; i < k; ++i)
            scores.push_back(uniform01(rng) * 100.0);
        double ls = local_sensitivity_sam(scores, c);
        double gs = global_sensitivity_sam(c, k);
        CHECK(ls >= 0.0);
        CHECK(ls <= gs + 1e-15);
    }
}

TEST_CASE("budget split follows epsilon shares") {
    auto criteria = fixtures::synthetic_criteria();
    auto budgets = split_budget(1.0, criteria);
    REQUIRE(budgets.size() == 6);
    double sum = 0.0;
    for (double b : budgets) {
        CHECK(b == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
        sum += b;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));

    std::vector<CriterionSpec> four(4, domain(0, 1));
    auto q = split_budget(0.5, four);
    for (double b : q)
        CHECK(b == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("zero epsilon share is a hard error") {
    std::vector<CriterionSpec> criteria(3, domain(0, 1));
    criteria[0].epsilon_share = 1.0;
    criteria[1].epsilon_share = 0.0;
    criteria[2].epsilon_share = 0.0;
    CHECK_THROWS_AS(split_budget(1.0, criteria), PrivacyError);
    CHECK_THROWS_AS(split_budget(0.0, criteria), PrivacyError);
}

TEST_CASE("laplace sampler matches its distribution") {
    Rng rng(12345);
    const int n = 1'000'000;
    const double b = 2.5;
    double abs_sum = 0.0, sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = laplace_sample(b, rng);
        abs_sum += std::abs(x);
        sum += x;
    }
    double mean_abs = abs_sum / n;
    CHECK(mean_abs == doctest::Approx(b).epsilon(0.01)); // E|Lap(b)| = b
    // CLT bound on the mean: sd = b*sqrt(2)/sqrt(n)
    CHECK(std::abs(sum / n) < 3.0 * b * std::sqrt(2.0) / std::sqrt(static_cast<double>(n)));

    CHECK_THROWS_AS(laplace_sample(0.0, rng), PrivacyError);
    CHECK_THROWS_AS(laplace_sample(-1.0, rng), PrivacyError);
}

TEST_CASE("laplace sampler is deterministic for a fixed seed") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i)
        CHECK(laplace_sample(1.0, a) == laplace_sample(1.0, b));
}

TEST_CASE("anonymize with Mechanism::None is the identity") {
    auto criteria = fixtures::synthetic_criteria();
    Rng rng(1);
    auto evals = gen_synthetic(12, criteria, 10, rng);
    auto om = aggregate_sam(evals, criteria);
    auto [om_star, report] = anonymize_matrix(om, evals, criteria, {1.0, Mechanism::None, true, 5});
    CHECK(om_star.values == om.values);
    for (const auto& cell : report.cells)
        CHECK(cell.noise_scale_used == 0.0);
}

TEST_CASE("DP noise scales match the synthetic and beer settings") {
    // m=6, domain [0,100], K=400, eps=1 -> scale 0.25 * 6 = 1.5
    auto criteria = fixtures::synthetic_criteria();
    Rng rng(2);
    auto evals = gen_synthetic(12, criteria, 400, rng);
    auto om = aggregate_sam(evals, criteria);
    auto [_, report] = anonymize_matrix(om, evals, criteria, {1.0, Mechanism::DP, true, 5});
    for (const auto& cell : report.cells) {
        CHECK(cell.noise_scale_used == doctest::Approx(1.5).epsilon(1e-12));
        CHECK(cell.global_sensitivity == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(cell.local_sensitivity <= cell.global_sensitivity + 1e-15);
        CHECK(cell.noise_scale_used ==
              doctest::Approx(cell.global_sensitivity / (1.0 * cell.epsilon_share)).epsilon(1e-12));
    }

    // m=4, domain [1,5], K=200, eps=1 -> scale 0.02 * 4 = 0.08
    auto beer = fixtures::beer_criteria();
    Rng rng2(3);
    auto bevals = gen_synthetic(12, beer, 200, rng2);
    auto bom = aggregate_sam(bevals, beer);
    auto [__, brep] = anonymize_matrix(bom, bevals, beer, {1.0, Mechanism::DP, true, 5});
    for (const auto& cell : brep.cells)
        CHECK(cell.noise_scale_used == doctest::Approx(0.08).epsilon(1e-12));
}

TEST_CASE("clamped output stays inside the criterion domain") {
    auto criteria = fixtures::synthetic_criteria();
    Rng rng(4);
    auto evals = gen_synthetic(12, criteria, 10, rng);
    auto om = aggregate_sam(evals, criteria);
    auto [om_star, _] = anonymize_matrix(om, evals, criteria, {0.1, Mechanism::DP, true, 6});
    for (const auto& row : om_star.values)
        for (double v : row) {
            CHECK(v >= 0.0);
            CHECK(v <= 100.0);
        }
}

TEST_CASE("mean absolute noise converges to the Laplace scale at low noise") {
    // scale must stay well under the domain width so clamping is negligible
    auto criteria = fixtures::synthetic_criteria();
    Rng rng(5);
    auto evals = gen_synthetic(12, criteria, 400, rng);
    auto om = aggregate_sam(evals, criteria);
    double total = 0.0;
    int cells = 0;
    for (int it = 0; it < 400; ++it) {
        auto [om_star, _] =
            anonymize_matrix(om, evals, criteria, {1.0, Mechanism::DP, true, 1000 + static_cast<std::uint64_t>(it)});
        for (std::size_t a = 0; a < om.n_alternatives(); ++a)
            for (std::size_t j = 0; j < om.n_criteria(); ++j) {
                total += std::abs(om_star.at(a, j) - om.at(a, j));
                ++cells;
            }
    }
    CHECK(total / cells == doctest::Approx(1.5).epsilon(0.10));
}

TEST_CASE("non-disjoint contributors abort anonymization") {
    auto criteria = fixtures::synthetic_criteria();
    Rng rng(6);
    auto evals = gen_synthetic(12, criteria, 10, rng);
    evals.rows[1][0].user_id = evals.rows[0][0].user_id;
    auto om = aggregate_sam(evals, criteria);
    CHECK_THROWS_AS(anonymize_matrix(om, evals, criteria, {1.0, Mechanism::DP, true, 7}),
                    PrivacyError);
}

TEST_CASE("anonymization is reproducible for a fixed seed") {
    auto criteria = fixtures::synthetic_criteria();
    Rng rng(8);
    auto evals = gen_synthetic(12, criteria, 50, rng);
    auto om = aggregate_sam(evals, criteria);
    PrivacyParams params{0.5, Mechanism::IDP, true, 99};
    auto [a, _] = anonymize_matrix(om, evals, criteria, params);
    auto [b, __] = anonymize_matrix(om, evals, criteria, params);
    CHECK(a.values == b.values);
}
