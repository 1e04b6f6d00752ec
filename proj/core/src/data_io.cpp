#include "outrank/data_io.hpp"

#include "outrank/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace outrank {

namespace {

struct Band {
    double lo_frac;
    double hi_frac;
};

constexpr Band kTierBands[3] = {{0.70, 0.85}, {0.50, 0.75}, {0.30, 0.55}};

double snap_to_step(double x, const CriterionSpec& c) {
    if (c.step <= 0.0)
        return x;
    double steps = std::round((x - c.domain_min) / c.step);
    return std::clamp(c.domain_min + steps * c.step, c.domain_min, c.domain_max);
}

double draw_tiered(const CriterionSpec& c, const Band& band, Rng& rng) {
    double lo = c.domain_min + band.lo_frac * c.span();
    double hi = c.domain_min + band.hi_frac * c.span();
    double x;
    if (uniform01(rng) < 0.7) {
        x = lo + uniform01(rng) * (hi - lo);
    } else {
        // Uniform over the domain minus the band (two segments).
        double left = lo - c.domain_min;
        double right = c.domain_max - hi;
        double u = uniform01(rng) * (left + right);
        x = u < left ? c.domain_min + u : hi + (u - left);
    }
    return snap_to_step(x, c);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument("trailing chars");
        return v;
    } catch (const std::exception&) {
        throw DataError("line " + std::to_string(line_no) + ": not a number: '" + s + "'");
    }
}

} // namespace

EvaluationSet gen_synthetic(int n_alternatives, const std::vector<CriterionSpec>& criteria,
                            int k, Rng& rng) {
    if (n_alternatives < 3)
        throw DataError("synthetic generator needs at least 3 alternatives for the tier split");
    if (k < 1)
        throw DataError("K must be >= 1");
    auto issues = validate_criteria(criteria);
    if (!issues.empty())
        throw ConfigError("invalid criteria: " + issues.front().message);

    int tier_size = (n_alternatives + 2) / 3; // ceiling split

    EvaluationSet out;
    out.k = k;
    int user_counter = 0;
    for (int a = 0; a < n_alternatives; ++a) {
        int tier = std::min(a / tier_size, 2);
        out.alternatives.push_back("a" + std::to_string(a + 1));
        std::vector<Evaluation> rows;
        rows.reserve(static_cast<std::size_t>(k));
        for (int r = 0; r < k; ++r) {
            Evaluation ev;
            ev.user_id = "u" + std::to_string(++user_counter);
            ev.scores.reserve(criteria.size());
            for (const auto& c : criteria)
                ev.scores.push_back(draw_tiered(c, kTierBands[tier], rng));
            rows.push_back(std::move(ev));
        }
        out.rows.push_back(std::move(rows));
    }
    return out;
}

EvaluationSet load_evaluations_csv(const std::string& path,
                                   const std::vector<CriterionSpec>& criteria) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line))
        throw DataError(path + ": empty file, missing header");
    auto header = split_csv_line(line);
    std::vector<std::string> expected{"alternative_id", "user_id"};
    for (const auto& c : criteria)
        expected.push_back(c.name);
    if (header != expected) {
        std::ostringstream os;
        os << path << ": header mismatch, expected";
        for (const auto& h : expected)
            os << ' ' << h;
        throw DataError(os.str());
    }

    EvaluationSet out;
    std::unordered_map<std::string, std::size_t> alt_index;
    std::vector<std::unordered_set<std::string>> users_per_alt;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        auto fields = split_csv_line(line);
        if (fields.size() != expected.size())
            throw DataError(path + ": line " + std::to_string(line_no) + ": expected " +
                            std::to_string(expected.size()) + " fields, got " +
                            std::to_string(fields.size()));
        const std::string& alt = fields[0];
        const std::string& user = fields[1];
        auto [it, inserted] = alt_index.emplace(alt, out.alternatives.size());
        if (inserted) {
            out.alternatives.push_back(alt);
            out.rows.emplace_back();
            users_per_alt.emplace_back();
        }
        std::size_t ai = it->second;
        if (!users_per_alt[ai].insert(user).second)
            throw DataError(path + ": line " + std::to_string(line_no) + ": user '" + user +
                            "' rated alternative '" + alt + "' twice");
        Evaluation ev;
        ev.user_id = user;
        for (std::size_t j = 0; j < criteria.size(); ++j) {
            double v = parse_double(fields[2 + j], line_no);
            const auto& c = criteria[j];
            if (!c.in_domain(v))
                throw DataError(path + ": line " + std::to_string(line_no) + ": value " +
                                format_double(v) + " outside domain of '" + c.name + "'");
            if (c.step > 0.0) {
                double steps = (v - c.domain_min) / c.step;
                if (std::abs(steps - std::round(steps)) > 1e-9)
                    throw DataError(path + ": line " + std::to_string(line_no) + ": value " +
                                    format_double(v) + " off the " + format_double(c.step) +
                                    "-step grid of '" + c.name + "'");
            }
            ev.scores.push_back(v);
        }
        out.rows[ai].push_back(std::move(ev));
    }

    // Declared K only when the set is rectangular.
    if (!out.rows.empty()) {
        std::size_t k = out.rows.front().size();
        bool rect = std::all_of(out.rows.begin(), out.rows.end(),
                                [&](const auto& r) { return r.size() == k; });
        out.k = rect ? static_cast<int>(k) : 0;
    }
    return out;
}

std::string evaluations_to_csv(const EvaluationSet& evals,
                               const std::vector<CriterionSpec>& criteria) {
    std::ostringstream os;
    os << "alternative_id,user_id";
    for (const auto& c : criteria)
        os << ',' << c.name;
    os << '\n';
    for (std::size_t a = 0; a < evals.n_alternatives(); ++a)
        for (const auto& row : evals.rows[a]) {
            os << evals.alternatives[a] << ',' << row.user_id;
            for (double v : row.scores)
                os << ',' << format_double(v);
            os << '\n';
        }
    return os.str();
}

EvaluationSet select_alternatives(const EvaluationSet& full, int n, int k, Rng& rng) {
    if (n < 1 || k < 1)
        throw DataError("select_alternatives: n and K must be positive");
    std::vector<std::size_t> qualifying;
    for (std::size_t a = 0; a < full.n_alternatives(); ++a)
        if (full.rows[a].size() >= static_cast<std::size_t>(k))
            qualifying.push_back(a);
    if (qualifying.size() < static_cast<std::size_t>(n))
        throw DataError("only " + std::to_string(qualifying.size()) + " alternatives have >= " +
                        std::to_string(k) + " evaluations, need " + std::to_string(n));

    // Partial Fisher-Yates for a uniform n-subset.
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng() % (qualifying.size() - i));
        std::swap(qualifying[i], qualifying[j]);
    }
    qualifying.resize(static_cast<std::size_t>(n));

    EvaluationSet out;
    out.k = k;
    std::unordered_set<std::string> consumed;
    for (std::size_t a : qualifying) {
        const auto& rows = full.rows[a];
        std::size_t m = rows.front().scores.size();
        std::vector<double> profile(m, 0.0);
        for (const auto& r : rows)
            for (std::size_t j = 0; j < m; ++j)
                profile[j] += r.scores[j];
        for (auto& x : profile)
            x /= static_cast<double>(rows.size());

        std::vector<std::size_t> order(rows.size());
        std::iota(order.begin(), order.end(), 0);
        auto dist2 = [&](std::size_t i) {
            double s = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                double d = rows[i].scores[j] - profile[j];
                s += d * d;
            }
            return s;
        };
        // Ties broken by stable input order.
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return dist2(x) < dist2(y); });

        std::vector<Evaluation> kept;
        for (std::size_t i : order) {
            if (kept.size() == static_cast<std::size_t>(k))
                break;
            if (consumed.count(rows[i].user_id))
                continue;
            kept.push_back(rows[i]);
        }
        if (kept.size() < static_cast<std::size_t>(k))
            throw DataError("alternative '" + full.alternatives[a] +
                            "' cannot reach K disjoint contributors");
        for (const auto& r : kept)
            consumed.insert(r.user_id);
        out.alternatives.push_back(full.alternatives[a]);
        out.rows.push_back(std::move(kept));
    }
    return out;
}

std::string matrix_to_csv(const PerformanceMatrix& matrix) {
    std::ostringstream os;
    os << "alternative_id";
    for (const auto& c : matrix.criteria)
        os << ',' << c;
    os << '\n';
    for (std::size_t a = 0; a < matrix.n_alternatives(); ++a) {
        os << matrix.alternatives[a];
        for (double v : matrix.values[a])
            os << ',' << format_double(v);
        os << '\n';
    }
    return os.str();
}

void write_matrix_csv(const PerformanceMatrix& matrix, const std::string& path) {
    write_file_atomic(path, matrix_to_csv(matrix));
}

PerformanceMatrix read_matrix_csv(const std::string& path,
                                  const std::vector<CriterionSpec>& criteria) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line))
        throw DataError(path + ": empty file, missing header");
    auto header = split_csv_line(line);
    std::vector<std::string> expected{"alternative_id"};
    for (const auto& c : criteria)
        expected.push_back(c.name);
    if (header != expected)
        throw DataError(path + ": header does not match criteria");

    PerformanceMatrix out;
    for (const auto& c : criteria)
        out.criteria.push_back(c.name);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        auto fields = split_csv_line(line);
        if (fields.size() != expected.size())
            throw DataError(path + ": line " + std::to_string(line_no) + ": expected " +
                            std::to_string(expected.size()) + " fields, got " +
                            std::to_string(fields.size()));
        out.alternatives.push_back(fields[0]);
        std::vector<double> row;
        for (std::size_t j = 0; j < criteria.size(); ++j) {
            double v = parse_double(fields[1 + j], line_no);
            if (!criteria[j].in_domain(v))
                throw DataError(path + ": line " + std::to_string(line_no) + ": value " +
                                format_double(v) + " outside domain of '" + criteria[j].name + "'");
            row.push_back(v);
        }
        out.values.push_back(std::move(row));
    }
    return out;
}

} // namespace outrank
