#include "outrank/aggregation.hpp"
#include "outrank/data_io.hpp"
#include "outrank/electre3.hpp"
#include "outrank/privacy.hpp"
#include "outrank/promethee2.hpp"
#include "outrank/util.hpp"

#include <benchmark/benchmark.h>

using namespace outrank;

namespace {

std::vector<CriterionSpec> make_criteria(int m) {
    std::vector<CriterionSpec> out;
    for (int j = 0; j < m; ++j) {
        CriterionSpec c;
        c.name = "c" + std::to_string(j + 1);
        c.domain_min = 0;
        c.domain_max = 100;
        c.weight = 1.0 / m;
        c.q = 3;
        c.p = 10;
        c.v = 25.0;
        out.push_back(c);
    }
    return out;
}

PerformanceMatrix random_matrix(int n, int m, std::uint64_t seed) {
    Rng rng(seed);
    PerformanceMatrix mat;
    for (int j = 0; j < m; ++j)
        mat.criteria.push_back("c" + std::to_string(j + 1));
    for (int a = 0; a < n; ++a) {
        mat.alternatives.push_back("x" + std::to_string(a));
        std::vector<double> row;
        for (int j = 0; j < m; ++j)
            row.push_back(uniform01(rng) * 100.0);
        mat.values.push_back(row);
    }
    return mat;
}

void BM_CredibilityMatrix(benchmark::State& state) {
    auto criteria = make_criteria(6);
    auto m = random_matrix(static_cast<int>(state.range(0)), 6, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(electre::credibility_matrix(m, criteria));
}
BENCHMARK(BM_CredibilityMatrix)->Arg(12)->Arg(50)->Arg(100);

void BM_Electre3Rank(benchmark::State& state) {
    auto criteria = make_criteria(6);
    auto m = random_matrix(static_cast<int>(state.range(0)), 6, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(electre::electre3_rank(m, criteria));
}
BENCHMARK(BM_Electre3Rank)->Arg(12)->Arg(50);

void BM_Promethee2Rank(benchmark::State& state) {
    auto criteria = make_criteria(6);
    auto m = random_matrix(static_cast<int>(state.range(0)), 6, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(promethee::promethee2_rank(m, criteria));
}
BENCHMARK(BM_Promethee2Rank)->Arg(12)->Arg(50)->Arg(100);

void BM_LaplaceSample(benchmark::State& state) {
    Rng rng(4);
    double acc = 0;
    for (auto _ : state)
        acc += laplace_sample(1.5, rng);
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_LaplaceSample);

void BM_GenSynthetic(benchmark::State& state) {
    auto criteria = make_criteria(6);
    Rng rng(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(gen_synthetic(12, criteria, static_cast<int>(state.range(0)),
                                               rng));
}
BENCHMARK(BM_GenSynthetic)->Arg(25)->Arg(400);

void BM_Anonymize(benchmark::State& state) {
    auto criteria = make_criteria(6);
    Rng rng(6);
    auto evals = gen_synthetic(12, criteria, static_cast<int>(state.range(0)), rng);
    auto om = aggregate_sam(evals, criteria);
    PrivacyParams params{1.0, Mechanism::IDP, true, 7};
    for (auto _ : state)
        benchmark::DoNotOptimize(anonymize_matrix(om, evals, criteria, params));
}
BENCHMARK(BM_Anonymize)->Arg(25)->Arg(400);

} // namespace

BENCHMARK_MAIN();
