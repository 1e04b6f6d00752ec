#include "config.hpp"

#include "outrank/aggregation.hpp"
#include "outrank/data_io.hpp"
#include "outrank/electre3.hpp"
#include "outrank/errors.hpp"
#include "outrank/evaluation.hpp"
#include "outrank/privacy.hpp"
#include "outrank/promethee2.hpp"
#include "outrank/util.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>

using namespace outrank;
using outrank::cli::Config;

namespace {

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const Config& cfg) {
    if (flag)
        return *flag;
    if (cfg.privacy.seed)
        return *cfg.privacy.seed;
    if (const char* env = std::getenv("OUTRANK_DP_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

void print_rank_table(const RankResult& rank, const std::vector<promethee::Flow>* flows,
                      const electre::Preorder* desc, const electre::Preorder* asc) {
    auto class_pos = [](const electre::Preorder& p, const std::string& alt) {
        for (std::size_t c = 0; c < p.size(); ++c)
            for (const auto& x : p[c])
                if (x == alt)
                    return c + 1;
        return std::size_t{0};
    };
    std::cout << to_string(rank.method) << " ranking\n";
    std::cout << std::setw(16) << "alternative" << std::setw(12) << "rank";
    if (flows)
        std::cout << std::setw(12) << "phi_net" << std::setw(12) << "phi_plus" << std::setw(12)
                  << "phi_minus";
    if (desc)
        std::cout << std::setw(10) << "desc" << std::setw(10) << "asc";
    std::cout << '\n';

    auto sorted = rank.entries;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const RankEntry& a, const RankEntry& b) {
                         return a.rank_score < b.rank_score;
                     });
    for (const auto& e : sorted) {
        std::cout << std::setw(16) << e.alternative << std::setw(12) << e.rank_score;
        if (flows) {
            for (const auto& f : *flows)
                if (f.alternative == e.alternative)
                    std::cout << std::setw(12) << std::setprecision(4) << f.net << std::setw(12)
                              << f.leaving << std::setw(12) << f.entering;
        }
        if (desc)
            std::cout << std::setw(10) << class_pos(*desc, e.alternative) << std::setw(10)
                      << class_pos(*asc, e.alternative);
        std::cout << '\n';
    }
}

struct CommonOpts {
    std::string config_path;
    std::optional<std::uint64_t> seed;
};

int run(int argc, char** argv) {
    CLI::App app{"Differentially private multi-criteria rankings (ELECTRE-III / PROMETHEE-II)"};
    app.require_subcommand(1);

    // ---- synth ----
    auto* synth = app.add_subcommand("synth", "Generate a synthetic evaluations CSV");
    CommonOpts synth_o;
    std::string synth_out = "evaluations.csv";
    int synth_k = 10;
    std::optional<int> synth_n;
    synth->add_option("--config", synth_o.config_path, "Problem configuration JSON")->required();
    synth->add_option("--out", synth_out, "Output CSV path");
    synth->add_option("--k", synth_k, "Evaluations per alternative");
    synth->add_option("--n-alternatives", synth_n, "Number of alternatives");
    synth->add_option("--seed", synth_o.seed, "Generator seed");

    // ---- rank ----
    auto* rank_cmd = app.add_subcommand("rank", "Aggregate, optionally anonymize, and rank");
    CommonOpts rank_o;
    std::string rank_evals, rank_method_s, rank_mech_s, rank_outdir = ".";
    std::optional<double> rank_eps;
    rank_cmd->add_option("--config", rank_o.config_path, "Problem configuration JSON")->required();
    rank_cmd->add_option("--evals", rank_evals, "Evaluations CSV")->required();
    rank_cmd->add_option("--method", rank_method_s, "electre3|promethee2 (default: both)");
    rank_cmd->add_option("--mechanism", rank_mech_s, "none|dp|idp (default: config)");
    rank_cmd->add_option("--epsilon", rank_eps, "Privacy budget per alternative");
    rank_cmd->add_option("--seed", rank_o.seed, "Noise seed");
    rank_cmd->add_option("--out-dir", rank_outdir, "Where OM*/sensitivity CSVs go");

    // ---- anonymize ----
    auto* anon = app.add_subcommand("anonymize", "Aggregate and anonymize only (OM -> OM*)");
    CommonOpts anon_o;
    std::string anon_evals, anon_mech_s, anon_out = "om_star.csv", anon_report;
    std::optional<double> anon_eps;
    anon->add_option("--config", anon_o.config_path, "Problem configuration JSON")->required();
    anon->add_option("--evals", anon_evals, "Evaluations CSV")->required();
    anon->add_option("--mechanism", anon_mech_s, "dp|idp (default: config)");
    anon->add_option("--epsilon", anon_eps, "Privacy budget per alternative");
    anon->add_option("--seed", anon_o.seed, "Noise seed");
    anon->add_option("--out", anon_out, "OM* CSV path");
    anon->add_option("--report", anon_report, "Sensitivity report CSV path");

    // ---- experiment ----
    auto* exp = app.add_subcommand("experiment", "Run the (epsilon, K) grid experiment");
    CommonOpts exp_o;
    std::string exp_outdir = ".", exp_source = "synthetic", exp_evals;
    std::vector<double> exp_eps;
    std::vector<int> exp_ks;
    std::optional<int> exp_iters, exp_n;
    std::vector<std::string> exp_mechs, exp_methods;
    exp->add_option("--config", exp_o.config_path, "Problem configuration JSON")->required();
    exp->add_option("--out-dir", exp_outdir, "Output directory");
    exp->add_option("--epsilons", exp_eps, "Override epsilon grid");
    exp->add_option("--ks", exp_ks, "Override K grid");
    exp->add_option("--iterations", exp_iters, "Override iteration count");
    exp->add_option("--mechanisms", exp_mechs, "Override mechanisms (none|dp|idp)");
    exp->add_option("--methods", exp_methods, "Override methods");
    exp->add_option("--seed", exp_o.seed, "Override base seed");
    exp->add_option("--source", exp_source, "synthetic|csv");
    exp->add_option("--evals", exp_evals, "Full evaluations CSV when --source csv");
    exp->add_option("--n-alternatives", exp_n, "Override alternative count");

    // ---- eval ----
    auto* ev = app.add_subcommand("eval", "Compare a true and a noisy performance matrix");
    CommonOpts ev_o;
    std::string ev_true, ev_noisy;
    ev->add_option("true_matrix", ev_true, "True OM CSV")->required();
    ev->add_option("noisy_matrix", ev_noisy, "Anonymized OM* CSV")->required();
    ev->add_option("--config", ev_o.config_path, "Problem configuration JSON")->required();

    // ---- select ----
    auto* sel = app.add_subcommand("select", "Subsample a full ratings dump");
    CommonOpts sel_o;
    std::string sel_evals, sel_out = "selected.csv";
    int sel_n = 20, sel_k = 25;
    sel->add_option("--config", sel_o.config_path, "Problem configuration JSON")->required();
    sel->add_option("--evals", sel_evals, "Full evaluations CSV")->required();
    sel->add_option("--n", sel_n, "Alternatives to select");
    sel->add_option("--k", sel_k, "Evaluations to keep per alternative");
    sel->add_option("--seed", sel_o.seed, "Selection seed");
    sel->add_option("--out", sel_out, "Output CSV path");

    CLI11_PARSE(app, argc, argv);

    if (synth->parsed()) {
        Config cfg = cli::load_config(synth_o.config_path);
        int n = synth_n.value_or(cfg.experiment.n_alternatives);
        Rng rng(resolve_seed(synth_o.seed, cfg));
        auto evals = gen_synthetic(n, cfg.criteria, synth_k, rng);
        write_file_atomic(synth_out, evaluations_to_csv(evals, cfg.criteria));
        std::cout << "wrote " << synth_out << " (" << n << " alternatives x " << synth_k
                  << " evaluations)\n";
        return 0;
    }

    if (rank_cmd->parsed()) {
        Config cfg = cli::load_config(rank_o.config_path);
        auto evals = load_evaluations_csv(rank_evals, cfg.criteria);
        auto om = aggregate_sam(evals, cfg.criteria);
        require_valid(cfg.criteria, om);

        Mechanism mech =
            rank_mech_s.empty() ? cfg.privacy.mechanism : cli::parse_mechanism(rank_mech_s);
        PerformanceMatrix input = om;
        if (mech == Mechanism::None) {
            auto offenders = check_disjoint_contributors(evals);
            if (!offenders.empty())
                std::cerr << "warning: " << offenders.size()
                          << " users rate multiple alternatives (no privacy mechanism active)\n";
        } else {
            PrivacyParams params{rank_eps.value_or(cfg.privacy.epsilon), mech, cfg.privacy.clamp,
                                 resolve_seed(rank_o.seed, cfg)};
            auto [om_star, report] = anonymize_matrix(om, evals, cfg.criteria, params);
            std::filesystem::create_directories(rank_outdir);
            write_matrix_csv(om_star, rank_outdir + "/om_star.csv");
            write_file_atomic(rank_outdir + "/sensitivity.csv", report.to_csv());
            input = std::move(om_star);
        }

        bool do_electre = rank_method_s.empty() || rank_method_s == "electre3";
        bool do_promethee = rank_method_s.empty() || rank_method_s == "promethee2";
        if (!do_electre && !do_promethee)
            throw ConfigError("unknown method: '" + rank_method_s + "'");
        if (do_promethee) {
            auto flows = promethee::net_flows(input, cfg.criteria);
            auto r = promethee::promethee2_rank(input, cfg.criteria);
            print_rank_table(r, &flows, nullptr, nullptr);
        }
        if (do_electre) {
            auto cred = electre::credibility_matrix(input, cfg.criteria);
            auto desc = electre::distill(cred, electre::DistillDirection::Descending,
                                         cfg.electre_params);
            auto asc =
                electre::distill(cred, electre::DistillDirection::Ascending, cfg.electre_params);
            auto r = electre::electre3_rank(input, cfg.criteria, cfg.electre_params);
            print_rank_table(r, nullptr, &desc, &asc);
        }
        return 0;
    }

    if (anon->parsed()) {
        Config cfg = cli::load_config(anon_o.config_path);
        auto evals = load_evaluations_csv(anon_evals, cfg.criteria);
        auto om = aggregate_sam(evals, cfg.criteria);
        Mechanism mech = anon_mech_s.empty()
                             ? (cfg.privacy.mechanism == Mechanism::None ? Mechanism::DP
                                                                         : cfg.privacy.mechanism)
                             : cli::parse_mechanism(anon_mech_s);
        PrivacyParams params{anon_eps.value_or(cfg.privacy.epsilon), mech, cfg.privacy.clamp,
                             resolve_seed(anon_o.seed, cfg)};
        auto [om_star, report] = anonymize_matrix(om, evals, cfg.criteria, params);
        write_matrix_csv(om_star, anon_out);
        if (!anon_report.empty())
            write_file_atomic(anon_report, report.to_csv());
        std::cout << "wrote " << anon_out << " (mechanism " << to_string(mech) << ", epsilon "
                  << params.epsilon << ")\n";
        return 0;
    }

    if (exp->parsed()) {
        Config cfg = cli::load_config(exp_o.config_path);
        ExperimentGrid grid;
        grid.epsilons = exp_eps.empty() ? cfg.experiment.epsilons : exp_eps;
        grid.ks = exp_ks.empty() ? cfg.experiment.ks : exp_ks;
        grid.iterations = exp_iters.value_or(cfg.experiment.iterations);
        grid.base_seed = exp_o.seed.value_or(cfg.experiment.base_seed);
        grid.clamp_output = cfg.privacy.clamp;
        if (!exp_mechs.empty()) {
            grid.mechanisms.clear();
            for (const auto& m : exp_mechs)
                grid.mechanisms.push_back(cli::parse_mechanism(m));
        } else {
            grid.mechanisms = cfg.experiment.mechanisms;
        }
        if (!exp_methods.empty()) {
            grid.methods.clear();
            for (const auto& m : exp_methods)
                grid.methods.push_back(cli::parse_method(m));
        } else {
            grid.methods = cfg.experiment.methods;
        }

        int n_alts = exp_n.value_or(cfg.experiment.n_alternatives);
        std::unique_ptr<EvaluationSource> source;
        if (exp_source == "synthetic") {
            source = std::make_unique<SyntheticSource>(n_alts, cfg.criteria);
        } else if (exp_source == "csv") {
            if (exp_evals.empty())
                throw ConfigError("--source csv requires --evals");
            source = std::make_unique<DatasetSource>(
                load_evaluations_csv(exp_evals, cfg.criteria), n_alts);
        } else {
            throw ConfigError("unknown source: '" + exp_source + "'");
        }

        auto results = run_experiment(*source, cfg.criteria, cfg.electre_params, grid);
        std::filesystem::create_directories(exp_outdir);
        write_file_atomic(exp_outdir + "/results.csv", records_to_csv(results.records));
        write_file_atomic(exp_outdir + "/summary.csv", summaries_to_csv(results.summaries));
        for (Method m : grid.methods)
            for (Mechanism mech : grid.mechanisms)
                write_file_atomic(exp_outdir + "/rs_" + to_string(m) + "_" + to_string(mech) +
                                      ".svg",
                                  spearman_chart_svg(results.summaries, m, mech));
        for (Method m : grid.methods)
            std::cout << mae_table_text(results.summaries, m) << '\n';
        std::cout << "wrote " << exp_outdir << "/results.csv and summary.csv\n";
        return 0;
    }

    if (ev->parsed()) {
        Config cfg = cli::load_config(ev_o.config_path);
        auto m_true = read_matrix_csv(ev_true, cfg.criteria);
        auto m_noisy = read_matrix_csv(ev_noisy, cfg.criteria);
        std::cout << "MAE: " << format_double(mae(m_true, m_noisy)) << '\n';
        for (Method m : cfg.experiment.methods) {
            RankResult rt, rn;
            if (m == Method::Electre3) {
                rt = electre::electre3_rank(m_true, cfg.criteria, cfg.electre_params);
                rn = electre::electre3_rank(m_noisy, cfg.criteria, cfg.electre_params);
            } else {
                rt = promethee::promethee2_rank(m_true, cfg.criteria);
                rn = promethee::promethee2_rank(m_noisy, cfg.criteria);
            }
            auto sp = spearman(rt, rn);
            std::cout << to_string(m) << " r_s: " << format_double(sp.r) << " ("
                      << to_string(correlation_band(sp.r))
                      << (sp.degenerate ? ", degenerate ranking" : "") << ")\n";
        }
        return 0;
    }

    if (sel->parsed()) {
        Config cfg = cli::load_config(sel_o.config_path);
        auto full = load_evaluations_csv(sel_evals, cfg.criteria);
        Rng rng(resolve_seed(sel_o.seed, cfg));
        auto out = select_alternatives(full, sel_n, sel_k, rng);
        write_file_atomic(sel_out, evaluations_to_csv(out, cfg.criteria));
        std::cout << "wrote " << sel_out << " (" << sel_n << " alternatives x " << sel_k
                  << " evaluations)\n";
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const PrivacyError& e) {
        std::cerr << "privacy error: " << e.what() << '\n';
        return 4;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
