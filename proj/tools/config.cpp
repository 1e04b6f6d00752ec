#include "config.hpp"

#include "outrank/errors.hpp"
#include "outrank/util.hpp"

#include "json.hpp"

#include <fstream>

namespace outrank::cli {

using nlohmann::json;

namespace {

PrefFn parse_pref_fn(const std::string& s) {
    if (s == "usual") return PrefFn::Usual;
    if (s == "ushape" || s == "u-shape") return PrefFn::UShape;
    if (s == "vshape" || s == "v-shape") return PrefFn::VShape;
    if (s == "level") return PrefFn::Level;
    if (s == "linear") return PrefFn::LinearWithIndifference;
    if (s == "gaussian") return PrefFn::Gaussian;
    throw ConfigError("unknown preference function: '" + s + "'");
}

Direction parse_direction(const std::string& s) {
    if (s == "maximize" || s == "max") return Direction::Maximize;
    if (s == "minimize" || s == "min") return Direction::Minimize;
    throw ConfigError("unknown direction: '" + s + "'");
}

CriterionSpec parse_criterion(const json& j) {
    CriterionSpec c;
    if (!j.contains("name"))
        throw ConfigError("criterion without a name");
    c.name = j.at("name").get<std::string>();
    if (j.contains("direction"))
        c.direction = parse_direction(j.at("direction").get<std::string>());
    if (j.contains("domain")) {
        auto d = j.at("domain");
        if (!d.is_array() || d.size() != 2)
            throw ConfigError("criterion '" + c.name + "': domain must be [min, max]");
        c.domain_min = d[0].get<double>();
        c.domain_max = d[1].get<double>();
    }
    c.weight = j.value("weight", 1.0);
    c.q = j.value("q", 0.0);
    c.p = j.value("p", 0.0);
    if (j.contains("v") && !j.at("v").is_null())
        c.v = j.at("v").get<double>();
    if (j.contains("preference_function"))
        c.pref_fn = parse_pref_fn(j.at("preference_function").get<std::string>());
    if (j.contains("epsilon_share") && !j.at("epsilon_share").is_null())
        c.epsilon_share = j.at("epsilon_share").get<double>();
    c.step = j.value("step", 0.0);
    return c;
}

} // namespace

Mechanism parse_mechanism(const std::string& s) {
    if (s == "none") return Mechanism::None;
    if (s == "dp") return Mechanism::DP;
    if (s == "idp") return Mechanism::IDP;
    throw ConfigError("unknown mechanism: '" + s + "' (expected none|dp|idp)");
}

Method parse_method(const std::string& s) {
    if (s == "electre3") return Method::Electre3;
    if (s == "promethee2") return Method::Promethee2;
    throw ConfigError("unknown method: '" + s + "' (expected electre3|promethee2)");
}

Config load_config(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    } catch (const DataError& e) {
        throw ConfigError(e.what());
    }

    Config cfg;
    if (!j.contains("criteria") || !j.at("criteria").is_array() || j.at("criteria").empty())
        throw ConfigError(path + ": missing or empty 'criteria' array");
    for (const auto& cj : j.at("criteria"))
        cfg.criteria.push_back(parse_criterion(cj));

    auto issues = validate_criteria(cfg.criteria);
    if (!issues.empty())
        throw ConfigError(path + ": invalid criteria: [" + issues.front().where + "] " +
                          issues.front().message);

    if (j.contains("method") && j.at("method").contains("electre3")) {
        const auto& e = j.at("method").at("electre3");
        cfg.electre_params.alpha = e.value("alpha", -0.15);
        cfg.electre_params.beta = e.value("beta", 0.30);
        if (e.contains("fixed_lambda") && !e.at("fixed_lambda").is_null())
            cfg.electre_params.fixed_lambda = e.at("fixed_lambda").get<double>();
    }

    if (j.contains("privacy")) {
        const auto& p = j.at("privacy");
        cfg.privacy.epsilon = p.value("epsilon", 1.0);
        if (p.contains("mechanism"))
            cfg.privacy.mechanism = parse_mechanism(p.at("mechanism").get<std::string>());
        cfg.privacy.clamp = p.value("clamp", true);
        if (p.contains("seed") && !p.at("seed").is_null())
            cfg.privacy.seed = p.at("seed").get<std::uint64_t>();
    }

    if (j.contains("experiment")) {
        const auto& e = j.at("experiment");
        if (e.contains("epsilons"))
            cfg.experiment.epsilons = e.at("epsilons").get<std::vector<double>>();
        if (e.contains("ks"))
            cfg.experiment.ks = e.at("ks").get<std::vector<int>>();
        cfg.experiment.iterations = e.value("iterations", 50);
        if (e.contains("mechanisms")) {
            cfg.experiment.mechanisms.clear();
            for (const auto& m : e.at("mechanisms"))
                cfg.experiment.mechanisms.push_back(parse_mechanism(m.get<std::string>()));
        }
        if (e.contains("methods")) {
            cfg.experiment.methods.clear();
            for (const auto& m : e.at("methods"))
                cfg.experiment.methods.push_back(parse_method(m.get<std::string>()));
        }
        cfg.experiment.base_seed = e.value("base_seed", 42ULL);
        cfg.experiment.n_alternatives = e.value("n_alternatives", 12);
    }
    return cfg;
}

} // namespace outrank::cli
