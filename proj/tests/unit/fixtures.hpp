#pragma once

#include "outrank/model.hpp"

#include <vector>

namespace fixtures {

// 12 alternatives on 6 criteria, [0,100] scale, level preference function.
inline std::vector<outrank::CriterionSpec> synthetic_criteria() {
    std::vector<double> weights{0.2, 0.15, 0.1, 0.25, 0.1, 0.2};
    std::vector<double> ps{10, 20, 20, 10, 20, 10};
    std::vector<outrank::CriterionSpec> out;
    for (int j = 0; j < 6; ++j) {
        outrank::CriterionSpec c;
        c.name = "c" + std::to_string(j + 1);
        c.domain_min = 0.0;
        c.domain_max = 100.0;
        c.weight = weights[j];
        c.q = 3.0;
        c.p = ps[j];
        c.v = 25.0;
        c.pref_fn = outrank::PrefFn::Level;
        out.push_back(c);
    }
    return out;
}

// 4 beer-rating criteria, [1,5] in 0.5 steps, equal weights.
inline std::vector<outrank::CriterionSpec> beer_criteria() {
    std::vector<outrank::CriterionSpec> out;
    for (const char* name : {"aroma", "appearance", "palate", "taste"}) {
        outrank::CriterionSpec c;
        c.name = name;
        c.domain_min = 1.0;
        c.domain_max = 5.0;
        c.weight = 0.25;
        c.q = 0.5;
        c.p = 1.0;
        c.v = 4.0;
        c.step = 0.5;
        c.pref_fn = outrank::PrefFn::Level;
        out.push_back(c);
    }
    return out;
}

inline outrank::PerformanceMatrix matrix_of(std::vector<std::string> alts,
                                            std::vector<std::string> crits,
                                            std::vector<std::vector<double>> values) {
    outrank::PerformanceMatrix m;
    m.alternatives = std::move(alts);
    m.criteria = std::move(crits);
    m.values = std::move(values);
    return m;
}

} // namespace fixtures
