#include "outrank/evaluation.hpp"

#include "outrank/aggregation.hpp"
#include "outrank/errors.hpp"
#include "outrank/privacy.hpp"
#include "outrank/promethee2.hpp"
#include "outrank/util.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

namespace outrank {

std::string to_string(Band b) {
    switch (b) {
    case Band::NegligibleToWeak: return "negligible-to-weak";
    case Band::Moderate: return "moderate";
    case Band::Strong: return "strong";
    case Band::VeryStrong: return "very-strong";
    }
    return "?";
}

double mae(const PerformanceMatrix& m1, const PerformanceMatrix& m2) {
    if (!m1.same_shape(m2))
        throw DataError("mae: matrix shape mismatch");
    double sum = 0.0;
    std::size_t cells = 0;
    for (std::size_t a = 0; a < m1.n_alternatives(); ++a)
        for (std::size_t j = 0; j < m1.n_criteria(); ++j) {
            sum += std::abs(m1.at(a, j) - m2.at(a, j));
            ++cells;
        }
    if (cells == 0)
        throw DataError("mae: empty matrices");
    return sum / static_cast<double>(cells);
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& scores) {
    std::size_t n = scores.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && scores[order[j + 1]] == scores[order[i]])
            ++j;
        double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

} // namespace

SpearmanResult spearman(const RankResult& r1, const RankResult& r2) {
    if (r1.entries.size() != r2.entries.size())
        throw DataError("spearman: alternative set mismatch");
    std::map<std::string, double> second;
    for (const auto& e : r2.entries)
        second[e.alternative] = e.rank_score;
    std::vector<double> s1, s2;
    s1.reserve(r1.entries.size());
    s2.reserve(r1.entries.size());
    for (const auto& e : r1.entries) {
        auto it = second.find(e.alternative);
        if (it == second.end())
            throw DataError("spearman: alternative '" + e.alternative + "' missing from second ranking");
        s1.push_back(e.rank_score);
        s2.push_back(it->second);
    }

    auto x = average_ranks(s1);
    auto y = average_ranks(s2);
    std::size_t n = x.size();
    bool const_x = std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; });
    bool const_y = std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; });
    if (const_x || const_y)
        return {0.0, true};
    if (x == y)
        return {1.0, false};

    double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return {sxy / std::sqrt(sxx * syy), false};
}

Band correlation_band(double r_s) {
    double a = std::abs(r_s);
    if (a < 0.4)
        return Band::NegligibleToWeak;
    if (a < 0.7)
        return Band::Moderate;
    if (a < 0.9)
        return Band::Strong;
    return Band::VeryStrong;
}

namespace {

RankResult rank_with(Method method, const PerformanceMatrix& m,
                     const std::vector<CriterionSpec>& criteria,
                     const electre::DistillationParams& ep) {
    return method == Method::Electre3 ? electre::electre3_rank(m, criteria, ep)
                                      : promethee::promethee2_rank(m, criteria);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

ExperimentResults run_experiment(EvaluationSource& source,
                                 const std::vector<CriterionSpec>& criteria,
                                 const electre::DistillationParams& electre_params,
                                 const ExperimentGrid& grid) {
    if (grid.epsilons.empty() || grid.ks.empty() || grid.mechanisms.empty() ||
        grid.methods.empty() || grid.iterations < 1)
        throw ConfigError("experiment grid lists must be nonempty and iterations >= 1");

    ExperimentResults results;
    for (int k : grid.ks) {
        for (int iter = 0; iter < grid.iterations; ++iter) {
            std::uint64_t data_seed = grid.base_seed + static_cast<std::uint64_t>(iter);
            EvaluationSet evals = source.sample(k, data_seed);
            PerformanceMatrix om = aggregate_sam(evals, criteria);

            std::map<Method, RankResult> true_ranks;
            for (Method m : grid.methods)
                true_ranks[m] = rank_with(m, om, criteria, electre_params);

            // One noise stream per iteration, shared across K, epsilons, and
            // mechanisms (common random numbers): cells that differ only in
            // those parameters perturb with identical standardized draws and
            // differ only in scale, which keeps the trend comparisons tight.
            std::uint64_t noise_seed = derive_seed(data_seed, 1);

            for (double eps : grid.epsilons) {
                for (Mechanism mech : grid.mechanisms) {
                    auto t0 = std::chrono::steady_clock::now();
                    PrivacyParams params{eps, mech, grid.clamp_output, noise_seed};
                    auto [om_star, report] = anonymize_matrix(om, evals, criteria, params);
                    double err = mae(om, om_star);
                    double anon_ms = ms_since(t0);

                    for (Method m : grid.methods) {
                        auto t1 = std::chrono::steady_clock::now();
                        RankResult noisy = rank_with(m, om_star, criteria, electre_params);
                        noisy.meta = {mech, eps, k, noise_seed};
                        double r = spearman(true_ranks[m], noisy).r;
                        results.records.push_back({m, mech, eps, k, iter, err, r,
                                                   anon_ms + ms_since(t1)});
                    }
                }
            }
        }
    }

    // Cell means in grid order.
    for (Method m : grid.methods) {
        for (Mechanism mech : grid.mechanisms) {
            for (double eps : grid.epsilons) {
                for (int k : grid.ks) {
                    std::vector<double> maes, rs;
                    for (const auto& rec : results.records)
                        if (rec.method == m && rec.mechanism == mech && rec.epsilon == eps &&
                            rec.k == k) {
                            maes.push_back(rec.mae);
                            rs.push_back(rec.spearman);
                        }
                    auto mean = [](const std::vector<double>& v) {
                        return std::accumulate(v.begin(), v.end(), 0.0) /
                               static_cast<double>(v.size());
                    };
                    auto stddev = [&](const std::vector<double>& v, double mu) {
                        if (v.size() < 2)
                            return 0.0;
                        double s = 0.0;
                        for (double x : v)
                            s += (x - mu) * (x - mu);
                        return std::sqrt(s / static_cast<double>(v.size() - 1));
                    };
                    double mm = mean(maes), mr = mean(rs);
                    results.summaries.push_back({m, mech, eps, k, mm, stddev(maes, mm), mr,
                                                 stddev(rs, mr), correlation_band(mr)});
                }
            }
        }
    }
    return results;
}

std::string records_to_csv(const std::vector<ExperimentRecord>& records, bool include_runtime) {
    auto sorted = records;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return std::tie(a.method, a.mechanism, a.epsilon, a.k, a.iteration) <
               std::tie(b.method, b.mechanism, b.epsilon, b.k, b.iteration);
    });
    std::ostringstream os;
    os << "method,mechanism,epsilon,K,iteration,mae,spearman";
    if (include_runtime)
        os << ",runtime_ms";
    os << '\n';
    for (const auto& r : sorted) {
        os << to_string(r.method) << ',' << to_string(r.mechanism) << ','
           << format_double(r.epsilon) << ',' << r.k << ',' << r.iteration << ','
           << format_double(r.mae) << ',' << format_double(r.spearman);
        if (include_runtime)
            os << ',' << format_double(r.runtime_ms);
        os << '\n';
    }
    return os.str();
}

std::string summaries_to_csv(const std::vector<CellSummary>& summaries) {
    std::ostringstream os;
    os << "method,mechanism,epsilon,K,mean_mae,std_mae,mean_spearman,std_spearman,band\n";
    for (const auto& s : summaries)
        os << to_string(s.method) << ',' << to_string(s.mechanism) << ','
           << format_double(s.epsilon) << ',' << s.k << ',' << format_double(s.mean_mae) << ','
           << format_double(s.std_mae) << ',' << format_double(s.mean_spearman) << ','
           << format_double(s.std_spearman) << ',' << to_string(s.band) << '\n';
    return os.str();
}

std::string spearman_chart_svg(const std::vector<CellSummary>& summaries, Method method,
                               Mechanism mechanism) {
    std::vector<double> epsilons;
    std::vector<int> ks;
    for (const auto& s : summaries) {
        if (s.method != method || s.mechanism != mechanism)
            continue;
        if (std::find(epsilons.begin(), epsilons.end(), s.epsilon) == epsilons.end())
            epsilons.push_back(s.epsilon);
        if (std::find(ks.begin(), ks.end(), s.k) == ks.end())
            ks.push_back(s.k);
    }
    std::sort(ks.begin(), ks.end());
    std::sort(epsilons.begin(), epsilons.end());

    const double w = 640, h = 420, ml = 60, mr = 130, mt = 30, mb = 50;
    const double pw = w - ml - mr, ph = h - mt - mb;
    auto xpos = [&](std::size_t i) {
        return ks.size() < 2 ? ml + pw / 2
                             : ml + pw * static_cast<double>(i) / static_cast<double>(ks.size() - 1);
    };
    auto ypos = [&](double r) { return mt + ph * (1.0 - std::clamp(r, 0.0, 1.0)); };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\">\n";
    os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << ml << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">r_s vs K ("
       << to_string(method) << ", " << to_string(mechanism) << ")</text>\n";
    // axes
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
       << mt + ph << "\" stroke=\"black\"/>\n";
    // correlation band guides
    for (double g : {0.4, 0.7, 0.9}) {
        os << "<line x1=\"" << ml << "\" y1=\"" << ypos(g) << "\" x2=\"" << ml + pw << "\" y2=\""
           << ypos(g) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4,3\"/>\n";
        os << "<text x=\"" << ml - 38 << "\" y=\"" << ypos(g) + 4
           << "\" font-family=\"sans-serif\" font-size=\"11\">" << g << "</text>\n";
    }
    for (double g : {0.0, 1.0})
        os << "<text x=\"" << ml - 38 << "\" y=\"" << ypos(g) + 4
           << "\" font-family=\"sans-serif\" font-size=\"11\">" << g << "</text>\n";
    for (std::size_t i = 0; i < ks.size(); ++i)
        os << "<text x=\"" << xpos(i) - 8 << "\" y=\"" << mt + ph + 18
           << "\" font-family=\"sans-serif\" font-size=\"11\">" << ks[i] << "</text>\n";
    os << "<text x=\"" << ml + pw / 2 - 8 << "\" y=\"" << h - 12
       << "\" font-family=\"sans-serif\" font-size=\"12\">K</text>\n";

    for (std::size_t e = 0; e < epsilons.size(); ++e) {
        const char* color = colors[e % 5];
        std::ostringstream pts;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            for (const auto& s : summaries)
                if (s.method == method && s.mechanism == mechanism && s.epsilon == epsilons[e] &&
                    s.k == ks[i])
                    pts << xpos(i) << ',' << ypos(s.mean_spearman) << ' ';
        }
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\""
           << pts.str() << "\"/>\n";
        os << "<text x=\"" << ml + pw + 12 << "\" y=\"" << mt + 16 + 18 * e
           << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color
           << "\">epsilon = " << format_double(epsilons[e]) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string mae_table_text(const std::vector<CellSummary>& summaries, Method method) {
    std::vector<double> epsilons;
    std::vector<int> ks;
    std::vector<Mechanism> mechs;
    for (const auto& s : summaries) {
        if (s.method != method)
            continue;
        if (std::find(epsilons.begin(), epsilons.end(), s.epsilon) == epsilons.end())
            epsilons.push_back(s.epsilon);
        if (std::find(ks.begin(), ks.end(), s.k) == ks.end())
            ks.push_back(s.k);
        if (std::find(mechs.begin(), mechs.end(), s.mechanism) == mechs.end())
            mechs.push_back(s.mechanism);
    }
    std::sort(epsilons.begin(), epsilons.end());
    std::sort(ks.begin(), ks.end());

    std::ostringstream os;
    os << "mean MAE (" << to_string(method) << "), rows epsilon, columns K\n";
    os << std::setw(8) << "eps/K";
    for (int k : ks)
        for (Mechanism m : mechs)
            os << std::setw(10) << (std::to_string(k) + "/" + to_string(m));
    os << '\n';
    for (double eps : epsilons) {
        os << std::setw(8) << format_double(eps);
        for (int k : ks)
            for (Mechanism m : mechs)
                for (const auto& s : summaries)
                    if (s.method == method && s.mechanism == m && s.epsilon == eps && s.k == k) {
                        std::ostringstream cell;
                        cell << std::fixed << std::setprecision(2) << s.mean_mae;
                        os << std::setw(10) << cell.str();
                    }
        os << '\n';
    }
    return os.str();
}

} // namespace outrank
