#include "vulngraph/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace vulngraph {

using nlohmann::json;

namespace {

json opt_uint(const std::optional<std::uint32_t>& v) { return v ? json(*v) : json(nullptr); }

json opt_real(const std::optional<double>& v) { return v ? real12(*v) : json(nullptr); }

std::string_view side_name(EqualitySide s) {
    switch (s) {
        case EqualitySide::none: return "none";
        case EqualitySide::lower: return "lower";
        case EqualitySide::upper: return "upper";
        case EqualitySide::both: return "both";
    }
    return "none";
}

}  // namespace

std::string format12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json real12(double x) {
    if (!std::isfinite(x)) {
        return nullptr;
    }
    // The nearest double to a 12-digit decimal prints back as that decimal.
    return std::stod(format12(x));
}

json to_json(const InvariantSet& inv) {
    json j;
    j["n"] = inv.n;
    j["m"] = inv.m;
    j["connected"] = inv.distances.connected;
    if (!inv.distances.connected) {
        j["convention"] = "alpha_inf_zero";
    }
    j["closeness"] = real12(inv.closeness);
    json gc = json::object();
    for (const auto& [alpha, value] : inv.gc) {
        gc[format12(alpha)] = real12(value);
    }
    j["gc"] = gc;
    j["m1"] = inv.m1;
    j["m2"] = inv.m2;
    j["rm2"] = inv.rm2;
    j["wiener_polarity"] = inv.wiener_polarity;
    j["girth"] = opt_uint(inv.girth);
    j["radius"] = opt_uint(inv.distances.radius);
    j["diameter"] = opt_uint(inv.distances.diameter);
    json counts = json::object();
    for (std::size_t k = 1; k < inv.distances.pair_counts.size(); ++k) {
        counts[std::to_string(k)] = inv.distances.pair_counts[k];
    }
    j["distance_counts"] = counts;
    j["flags"] = {
        {"is_tree", inv.flags.is_tree},
        {"triangle_free", inv.flags.triangle_free},
        {"quadrangle_free", inv.flags.quadrangle_free},
        {"girth_ge_7", inv.flags.girth_ge_7},
        {"is_moore_diam2", inv.flags.is_moore_diam2},
    };
    return j;
}

json to_json(const BoundReport& r, double truth, double tolerance) {
    json j;
    j["bound_id"] = std::string(to_string(r.id));
    j["measure"] = r.measure.kind == MeasureKind::closeness ? "closeness" : "generalized_closeness";
    j["alpha"] = r.measure.kind == MeasureKind::closeness ? json(nullptr) : real12(r.measure.alpha);
    j["applicable"] = r.applicable;
    j["lower"] = opt_real(r.lower);
    j["upper"] = opt_real(r.upper);
    j["equality_expected"] = r.equality_expected;
    j["equality_side"] = std::string(side_name(r.equality_side));
    j["truth"] = real12(truth);
    if (r.applicable) {
        const bool lower_ok = !r.lower || *r.lower <= truth || nearly_equal(*r.lower, truth, tolerance);
        const bool upper_ok = !r.upper || truth <= *r.upper || nearly_equal(*r.upper, truth, tolerance);
        j["contains_truth"] = lower_ok && upper_ok;
        j["equality_observed"] = (r.lower && nearly_equal(*r.lower, truth, tolerance)) ||
                                 (r.upper && nearly_equal(*r.upper, truth, tolerance));
    }
    return j;
}

json to_json(const VerificationReport& report) {
    json j;
    const SuiteConfig& c = report.config;
    json alphas = json::array();
    for (double a : c.alphas) {
        alphas.push_back(real12(a));
    }
    json checks = json::array();
    for (CheckId id : c.checks.empty() ? all_checks() : c.checks) {
        checks.push_back(std::string(to_string(id)));
    }
    j["config"] = {
        {"max_n", c.corpus.max_n},
        {"trees_max_n", c.corpus.trees_max_n},
        {"named", c.corpus.named},
        {"random_count", c.corpus.random_count},
        {"random_min_n", c.corpus.random_min_n},
        {"random_max_n", c.corpus.random_max_n},
        {"seed", c.corpus.seed},
        {"tnd_max_branches", c.corpus.tnd_max_branches},
        {"tnd_max_load", c.corpus.tnd_max_load},
        {"path_max_n", c.corpus.path_max_n},
        {"alphas", alphas},
        {"tolerance", real12(c.tolerance)},
        {"checks", checks},
    };
    j["corpus_size"] = report.corpus_size;
    j["corpus_digest"] = report.corpus_digest;
    json records = json::array();
    for (const CheckRecord& rec : report.checks) {
        json cx = json::array();
        for (const Counterexample& ce : rec.counterexamples) {
            cx.push_back({{"corpus_index", ce.corpus_index},
                          {"family", ce.family},
                          {"graph6", ce.graph6},
                          {"detail", ce.detail}});
        }
        records.push_back({
            {"check_id", std::string(to_string(rec.id))},
            {"graphs_tested", rec.graphs_tested},
            {"passes", rec.passes},
            {"failures", rec.failures},
            {"equality_hits", rec.equality_hits},
            {"worst_slack", opt_real(rec.worst_slack)},
            {"equality_witnesses", rec.equality_witnesses},
            {"counterexamples", cx},
        });
    }
    j["checks"] = records;
    j["total_failures"] = report.total_failures();
    return j;
}

json to_json(const BenchRow& row) {
    return {
        {"family", std::string(to_string(row.family))},
        {"n", row.n},
        {"bfs_value", real12(row.bfs_value)},
        {"formula_value", real12(row.formula_value)},
        {"values_equal", row.values_equal},
        {"bfs_seconds", row.bfs_seconds},
        {"formula_seconds", row.formula_seconds},
    };
}

}  // namespace vulngraph
