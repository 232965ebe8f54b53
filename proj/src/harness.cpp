#include "vulngraph/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <unordered_map>

#include "vulngraph/generators.hpp"
#include "vulngraph/graph_io.hpp"

namespace vulngraph {

namespace {

struct CheckName {
    CheckId id;
    std::string_view name;
};

constexpr CheckName kCheckNames[] = {
    {CheckId::distance_two_identity, "distance_two_identity"},
    {CheckId::zagreb_radius_bound, "zagreb_radius_bound"},
    {CheckId::polarity_bound, "polarity_bound"},
    {CheckId::path_minimality, "path_minimality"},
    {CheckId::global_bounds, "global_bounds"},
    {CheckId::diameter_bounds, "diameter_bounds"},
    {CheckId::tqfree_bounds, "tqfree_bounds"},
    {CheckId::girth7_tree_bounds, "girth7_tree_bounds"},
    {CheckId::moore_bound, "moore_bound"},
    {CheckId::tnd_formulas, "tnd_formulas"},
    {CheckId::rm2_identity, "rm2_identity"},
    {CheckId::gc_closeness_consistency, "gc_closeness_consistency"},
    {CheckId::path_closed_form, "path_closed_form"},
};

bool at_most(double a, double b, double tol) { return a <= b || nearly_equal(a, b, tol); }

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// GC of P_n per alpha, from BFS on the generated path.
class PathValues {
public:
    explicit PathValues(std::span<const double> alphas) : alphas_(alphas.begin(), alphas.end()) {}

    const std::vector<double>& get(std::size_t n) {
        auto it = cache_.find(n);
        if (it == cache_.end()) {
            const DistanceSummary s = distance_summary(path(n), 1);
            std::vector<double> values;
            for (double a : alphas_) {
                values.push_back(generalized_closeness(s, a));
            }
            it = cache_.emplace(n, std::move(values)).first;
        }
        return it->second;
    }

private:
    std::vector<double> alphas_;
    std::unordered_map<std::size_t, std::vector<double>> cache_;
};

// Lowest slack of one bound report against the true value; failure text otherwise.
struct SandwichResult {
    bool passed = true;
    bool equality_hit = false;
    double slack = 0.0;
    std::string detail;
};

SandwichResult sandwich(const BoundReport& r, double truth, double tol) {
    SandwichResult out;
    out.slack = INFINITY;
    const std::string where = std::string(to_string(r.id)) +
                              (r.measure.kind == MeasureKind::closeness ? " closeness" : " gc alpha=" + fmt(r.measure.alpha));
    if (r.lower) {
        if (!at_most(*r.lower, truth, tol)) {
            out.passed = false;
            out.detail = where + ": value " + fmt(truth) + " below lower bound " + fmt(*r.lower);
            return out;
        }
        out.slack = std::min(out.slack, std::max(0.0, truth - *r.lower));
    }
    if (r.upper) {
        if (!at_most(truth, *r.upper, tol)) {
            out.passed = false;
            out.detail = where + ": value " + fmt(truth) + " above upper bound " + fmt(*r.upper);
            return out;
        }
        out.slack = std::min(out.slack, std::max(0.0, *r.upper - truth));
    }
    const bool need_lower = r.equality_side == EqualitySide::lower || r.equality_side == EqualitySide::both;
    const bool need_upper = r.equality_side == EqualitySide::upper || r.equality_side == EqualitySide::both;
    if (need_lower && !nearly_equal(*r.lower, truth, tol)) {
        out.passed = false;
        out.detail = where + ": equality expected but lower bound " + fmt(*r.lower) + " != value " + fmt(truth);
        return out;
    }
    if (need_upper && !nearly_equal(*r.upper, truth, tol)) {
        out.passed = false;
        out.detail = where + ": equality expected but upper bound " + fmt(*r.upper) + " != value " + fmt(truth);
        return out;
    }
    out.equality_hit = r.equality_expected;
    return out;
}

std::optional<BoundId> bound_for(CheckId id) {
    switch (id) {
        case CheckId::global_bounds: return BoundId::global;
        case CheckId::diameter_bounds: return BoundId::diameter;
        case CheckId::tqfree_bounds: return BoundId::tqfree;
        case CheckId::girth7_tree_bounds: return BoundId::girth7_or_tree;
        default: return std::nullopt;
    }
}

const BoundReport* find_bound(const std::vector<BoundReport>& reports, BoundId id) {
    for (const auto& r : reports) {
        if (r.id == id) {
            return &r;
        }
    }
    return nullptr;
}

CheckOutcome run_check(CheckId id, const Analysis& a, const SuiteConfig& config, PathValues& paths) {
    CheckOutcome out;
    const InvariantSet& inv = a.inv;
    const double tol = config.tolerance;
    const bool connected = inv.distances.connected;
    const bool tq_free = inv.flags.triangle_free && inv.flags.quadrangle_free;
    const auto n = static_cast<std::int64_t>(inv.n);
    const auto m = static_cast<std::int64_t>(inv.m);

    switch (id) {
        case CheckId::distance_two_identity: {
            if (!tq_free) {
                return out;
            }
            out.applicable = true;
            const auto d2 = static_cast<std::int64_t>(inv.distances.pairs_at(2));
            // d(G,2) = M1/2 - m, compared doubled to stay in integers.
            out.passed = 2 * d2 == inv.m1 - 2 * m;
            out.slack = 0.0;
            if (!out.passed) {
                out.detail = "d(G,2) = " + std::to_string(d2) + " but M1/2 - m = " +
                             fmt(0.5 * static_cast<double>(inv.m1) - static_cast<double>(m));
            }
            return out;
        }
        case CheckId::zagreb_radius_bound: {
            if (!connected || !tq_free) {
                return out;
            }
            out.applicable = true;
            const std::int64_t r = *inv.distances.radius;
            const std::int64_t bound = n * (n + 1 - r);
            const bool extremal = inv.flags.is_moore_diam2 || inv.flags.is_c6;
            out.equality_hit = inv.m1 == bound;
            out.slack = static_cast<double>(bound - inv.m1);
            if (inv.m1 > bound) {
                out.passed = false;
                out.detail = "M1 = " + std::to_string(inv.m1) + " exceeds n(n+1-r) = " + std::to_string(bound);
            } else if (out.equality_hit != extremal) {
                out.passed = false;
                out.detail = std::string("equality ") + (out.equality_hit ? "holds" : "fails") +
                             " but Moore-or-C6 is " + (extremal ? "true" : "false");
            }
            return out;
        }
        case CheckId::polarity_bound: {
            if (!connected) {
                return out;
            }
            out.applicable = true;
            const std::int64_t bound = inv.m2 - inv.m1 + m;
            const bool extremal = inv.flags.is_tree || inv.flags.girth_ge_7;
            out.equality_hit = inv.wiener_polarity == bound;
            out.slack = static_cast<double>(bound - inv.wiener_polarity);
            if (inv.wiener_polarity > bound) {
                out.passed = false;
                out.detail = "W_P = " + std::to_string(inv.wiener_polarity) + " exceeds M2 - M1 + m = " +
                             std::to_string(bound);
            } else if (out.equality_hit != extremal) {
                out.passed = false;
                out.detail = std::string("equality ") + (out.equality_hit ? "holds" : "fails") +
                             " but tree-or-girth>=7 is " + (extremal ? "true" : "false");
            }
            return out;
        }
        case CheckId::path_minimality: {
            if (!inv.flags.is_tree) {
                return out;
            }
            out.applicable = true;
            const auto& base = paths.get(inv.n);
            double slack = INFINITY;
            for (std::size_t i = 0; i < config.alphas.size(); ++i) {
                const double tree_gc = inv.gc[i].value;
                if (!at_most(base[i], tree_gc, tol)) {
                    out.passed = false;
                    out.detail = "alpha=" + fmt(config.alphas[i]) + ": GC(P_n) = " + fmt(base[i]) +
                                 " exceeds GC(T) = " + fmt(tree_gc);
                    return out;
                }
                slack = std::min(slack, std::max(0.0, tree_gc - base[i]));
                out.equality_hit = out.equality_hit || nearly_equal(base[i], tree_gc, tol);
            }
            out.slack = slack;
            return out;
        }
        case CheckId::global_bounds:
        case CheckId::diameter_bounds:
        case CheckId::tqfree_bounds:
        case CheckId::girth7_tree_bounds: {
            if (!a.params) {
                return out;
            }
            const BoundId bid = *bound_for(id);
            double slack = INFINITY;
            bool all_equal = true;
            auto probe = [&](Measure measure, double truth) {
                const auto reports = all_bounds(*a.params, measure);
                const BoundReport* r = find_bound(reports, bid);
                if (r == nullptr || !r->applicable) {
                    return true;
                }
                out.applicable = true;
                const SandwichResult s = sandwich(*r, truth, tol);
                if (!s.passed) {
                    out.passed = false;
                    out.detail = s.detail;
                    return false;
                }
                slack = std::min(slack, s.slack);
                all_equal = all_equal && s.equality_hit;
                return true;
            };
            if (!probe(Measure::closeness(), inv.closeness)) {
                return out;
            }
            for (const auto& [alpha, value] : inv.gc) {
                if (!probe(Measure::generalized(alpha), value)) {
                    return out;
                }
            }
            if (out.applicable) {
                out.slack = slack;
                out.equality_hit = all_equal;
            }
            return out;
        }
        case CheckId::moore_bound: {
            if (!a.params) {
                return out;
            }
            const auto reports = all_bounds(*a.params, Measure::closeness());
            const BoundReport* r = find_bound(reports, BoundId::moore);
            if (r == nullptr || !r->applicable) {
                return out;
            }
            out.applicable = true;
            const SandwichResult s = sandwich(*r, inv.closeness, tol);
            out.passed = s.passed;
            out.detail = s.detail;
            out.slack = s.slack;
            out.equality_hit = s.passed && nearly_equal(*r->upper, inv.closeness, tol);
            return out;
        }
        case CheckId::tnd_formulas: {
            if (!a.params || !a.params->tnd) {
                return out;
            }
            out.applicable = true;
            out.equality_hit = true;
            const TndShape& shape = *a.params->tnd;
            auto compare = [&](double formula, double truth, const std::string& what) {
                if (!nearly_equal(formula, truth, tol)) {
                    out.passed = false;
                    out.equality_hit = false;
                    out.detail = what + ": formula " + fmt(formula) + " != BFS " + fmt(truth) + " (D=" +
                                 std::to_string(shape.branches) + ")";
                    return false;
                }
                return true;
            };
            const TndValues half = formulas_tnd(n, shape.branches, inv.m1, shape.which, 0.5);
            if (!compare(half.closeness, inv.closeness, "closeness")) {
                return out;
            }
            for (const auto& [alpha, value] : inv.gc) {
                const TndValues v = formulas_tnd(n, shape.branches, inv.m1, shape.which, alpha);
                if (!compare(v.gc, value, "gc alpha=" + fmt(alpha))) {
                    return out;
                }
            }
            out.slack = 0.0;
            return out;
        }
        case CheckId::rm2_identity: {
            out.applicable = true;
            out.passed = inv.rm2 == inv.m2 - inv.m1 + m;
            out.slack = 0.0;
            if (!out.passed) {
                out.detail = "RM2 = " + std::to_string(inv.rm2) + " but M2 - M1 + m = " +
                             std::to_string(inv.m2 - inv.m1 + m);
            }
            return out;
        }
        case CheckId::gc_closeness_consistency: {
            out.applicable = true;
            const double gc_half = generalized_closeness(inv.distances, 0.5);
            // Both sides come from the same distance counts.
            const double limit = 1e-12 * (1.0 + inv.closeness);
            out.passed = std::abs(gc_half - inv.closeness) <= limit;
            out.slack = 0.0;
            if (!out.passed) {
                out.detail = "GC(1/2) = " + fmt(gc_half) + " but closeness = " + fmt(inv.closeness);
            }
            return out;
        }
        case CheckId::path_closed_form: {
            if (!a.params || !a.params->is_path) {
                return out;
            }
            out.applicable = true;
            out.equality_hit = true;
            for (const auto& [alpha, value] : inv.gc) {
                const double closed = gc_path_closed_form(n, alpha);
                if (!nearly_equal(closed, value, tol)) {
                    out.passed = false;
                    out.equality_hit = false;
                    out.detail = "alpha=" + fmt(alpha) + ": closed form " + fmt(closed) + " != BFS " + fmt(value);
                    return out;
                }
            }
            const double at_half = 2.0 * static_cast<double>(n) - 4.0 + std::ldexp(1.0, -static_cast<int>(n - 2));
            if (!nearly_equal(at_half, inv.closeness, tol)) {
                out.passed = false;
                out.equality_hit = false;
                out.detail = "closeness " + fmt(inv.closeness) + " != 2n-4+2^-(n-2) = " + fmt(at_half);
                return out;
            }
            out.slack = 0.0;
            return out;
        }
    }
    return out;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// LCF notation: Hamiltonian cycle 0..n-1 plus chords i -> i + shift[i mod len].
Graph lcf_graph(std::size_t n, std::initializer_list<int> shifts) {
    std::vector<Edge> edges;
    const std::vector<int> s(shifts);
    const auto ni = static_cast<int>(n);
    for (int i = 0; i < ni; ++i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % ni));
        const int j = ((i + s[static_cast<std::size_t>(i) % s.size()]) % ni + ni) % ni;
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return build_graph(n, edges);
}

Graph cube() {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < 8; ++v) {
        for (Vertex bit = 1; bit < 8; bit <<= 1) {
            if ((v & bit) == 0) {
                edges.emplace_back(v, v | bit);
            }
        }
    }
    return build_graph(8, edges);
}

void add_named(std::vector<CorpusItem>& out) {
    auto add = [&](std::string name, Graph g) { out.push_back({"named", std::move(name), std::move(g)}); };
    add("petersen", petersen());
    add("pentagon", pentagon());
    for (std::size_t k = 3; k <= 12; ++k) {
        add("C" + std::to_string(k), cycle(k));
    }
    for (std::size_t k = 1; k <= 7; ++k) {
        add("K" + std::to_string(k), complete(k));
    }
    for (std::size_t k = 2; k <= 12; ++k) {
        add("S" + std::to_string(k), star(k));
    }
    add("T(5,0,0,0)", t_tree({{5, 0, 0, 0}}).graph);
    add("T(4,1,0,0)", t_tree({{4, 1, 0, 0}}).graph);
    add("cube", cube());
    add("heawood", lcf_graph(14, {5, -5}));
    add("mcgee", lcf_graph(24, {12, 7, -7}));
}

}  // namespace

std::string_view to_string(CheckId id) {
    for (const auto& entry : kCheckNames) {
        if (entry.id == id) {
            return entry.name;
        }
    }
    return "unknown";
}

std::optional<CheckId> parse_check_id(std::string_view name) {
    for (const auto& entry : kCheckNames) {
        if (entry.name == name) {
            return entry.id;
        }
    }
    return std::nullopt;
}

const std::vector<CheckId>& all_checks() {
    static const std::vector<CheckId> ids = [] {
        std::vector<CheckId> v;
        for (const auto& entry : kCheckNames) {
            v.push_back(entry.id);
        }
        return v;
    }();
    return ids;
}

bool nearly_equal(double a, double b, double tolerance) {
    if (a == b) {
        return true;
    }
    return std::abs(a - b) <= tolerance * std::max(std::abs(a), std::abs(b));
}

void validate(const SuiteConfig& config) {
    if (config.alphas.empty()) {
        throw DomainError("alpha grid is empty");
    }
    for (double a : config.alphas) {
        require_open_unit(a);
    }
    if (!(config.tolerance >= 0.0) || !std::isfinite(config.tolerance)) {
        throw DomainError("tolerance must be a finite non-negative number");
    }
    const CorpusConfig& c = config.corpus;
    if (c.max_n > kMaxEnumerationOrder) {
        throw DomainError("max_n is capped at " + std::to_string(kMaxEnumerationOrder));
    }
    if (c.trees_max_n > 10) {
        throw DomainError("trees_max_n is capped at 10");
    }
    if (c.random_count > 0 && (c.random_min_n < 1 || c.random_min_n > c.random_max_n)) {
        throw DomainError("random graph sizes need 1 <= random_min_n <= random_max_n");
    }
    if (c.tnd_max_branches > 0 && c.tnd_max_branches < 2) {
        throw DomainError("tnd_max_branches must be 0 (off) or at least 2");
    }
}

std::vector<CorpusItem> build_corpus(const CorpusConfig& config) {
    std::vector<CorpusItem> out;
    for (std::size_t n = 1; n <= config.max_n; ++n) {
        ConnectedGraphStream stream(n);
        while (auto g = stream.next()) {
            out.push_back({"exhaustive", "", std::move(*g)});
        }
    }
    for (std::size_t n = 1; n <= config.trees_max_n; ++n) {
        for_each_labeled_tree(n, [&](const Graph& g) { out.push_back({"tree", "", g}); });
    }
    if (config.named) {
        add_named(out);
    }
    if (config.tnd_max_branches >= 2) {
        for (const TndSpec& spec : tnd_sweep(2, config.tnd_max_branches, config.tnd_max_load)) {
            std::string name = "T(";
            for (std::size_t i = 0; i < spec.loads.size(); ++i) {
                name += (i ? "," : "") + std::to_string(spec.loads[i]);
            }
            out.push_back({"tnd", name + ")", t_tree(spec).graph});
        }
    }
    for (std::size_t n = 1; n <= config.path_max_n; ++n) {
        out.push_back({"path", "P" + std::to_string(n), path(n)});
    }
    if (config.random_count > 0) {
        std::mt19937_64 rng(config.seed);
        const std::size_t span = config.random_max_n - config.random_min_n + 1;
        for (std::size_t i = 0; i < config.random_count; ++i) {
            const std::size_t n = config.random_min_n + static_cast<std::size_t>(rng() % span);
            const std::size_t capacity = n * (n - 1) / 2 - (n - 1);
            const std::size_t extra = capacity == 0 ? 0 : static_cast<std::size_t>(rng() % (std::min<std::size_t>(capacity, 2 * n) + 1));
            out.push_back({"random", "", random_connected_graph(n, extra, rng())});
        }
    }
    return out;
}

std::string corpus_digest(const std::vector<CorpusItem>& corpus) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto& item : corpus) {
        feed(item.family);
        feed(":");
        feed(to_graph6(item.graph));
        feed("\n");
    }
    return hex64(h);
}

Analysis analyze(const Graph& g, std::span<const double> alphas) {
    Analysis a;
    a.graph = &g;
    a.inv = compute_invariants(g, alphas);
    if (a.inv.distances.connected) {
        a.params = graph_parameters(g, a.inv);
    }
    return a;
}

CheckOutcome evaluate_check(CheckId id, const Graph& g, const SuiteConfig& config) {
    PathValues paths(config.alphas);
    return run_check(id, analyze(g, config.alphas), config, paths);
}

std::size_t VerificationReport::total_failures() const {
    std::size_t total = 0;
    for (const auto& c : checks) {
        total += c.failures;
    }
    return total;
}

VerificationReport run_suite(const SuiteConfig& config) {
    validate(config);
    VerificationReport report;
    report.config = config;
    const std::vector<CheckId> ids = config.checks.empty() ? all_checks() : config.checks;
    for (CheckId id : ids) {
        CheckRecord rec;
        rec.id = id;
        report.checks.push_back(std::move(rec));
    }

    const std::vector<CorpusItem> corpus = build_corpus(config.corpus);
    report.corpus_size = corpus.size();
    report.corpus_digest = corpus_digest(corpus);

    PathValues paths(config.alphas);
    for (std::size_t index = 0; index < corpus.size(); ++index) {
        const CorpusItem& item = corpus[index];
        const Analysis a = analyze(item.graph, config.alphas);
        for (CheckRecord& rec : report.checks) {
            const CheckOutcome o = run_check(rec.id, a, config, paths);
            if (!o.applicable) {
                continue;
            }
            ++rec.graphs_tested;
            if (o.passed) {
                ++rec.passes;
                if (o.slack) {
                    rec.worst_slack = rec.worst_slack ? std::min(*rec.worst_slack, *o.slack) : *o.slack;
                }
            } else {
                ++rec.failures;
                if (rec.counterexamples.size() < kCounterexampleCap) {
                    rec.counterexamples.push_back({index, item.family, to_graph6(item.graph), o.detail});
                }
            }
            if (o.equality_hit) {
                ++rec.equality_hits;
                if (!item.name.empty() && item.family == "named" && rec.equality_witnesses.size() < kWitnessCap) {
                    rec.equality_witnesses.push_back(item.name);
                }
            }
        }
    }
    return report;
}

std::optional<BenchFamily> parse_bench_family(std::string_view name) {
    if (name == "tnd" || name == "bistar") return BenchFamily::tnd;
    if (name == "star") return BenchFamily::star;
    if (name == "complete") return BenchFamily::complete;
    if (name == "path") return BenchFamily::path;
    if (name == "cycle") return BenchFamily::cycle;
    return std::nullopt;
}

std::string_view to_string(BenchFamily family) {
    switch (family) {
        case BenchFamily::tnd: return "tnd";
        case BenchFamily::star: return "star";
        case BenchFamily::complete: return "complete";
        case BenchFamily::path: return "path";
        case BenchFamily::cycle: return "cycle";
    }
    return "unknown";
}

BenchRow fastpath_benchmark_row(BenchFamily family, std::size_t n, std::size_t repetitions, double tolerance) {
    auto no_formula = [&](const std::string& why) {
        return PreconditionError("no exact degree formula for " + std::string(to_string(family)) + " with n = " +
                                 std::to_string(n) + ": " + why);
    };
    // Family members, and the diameter each construction guarantees.
    Graph g;
    std::int64_t diameter = 0;
    switch (family) {
        case BenchFamily::tnd:
            if (n < 4) throw no_formula("bistar T(n-3, 0) needs n >= 4");
            g = t_tree({{n - 3, 0}}).graph;
            diameter = 3;
            break;
        case BenchFamily::star:
            if (n < 2) throw no_formula("star needs n >= 2");
            g = star(n);
            diameter = n == 2 ? 1 : 2;
            break;
        case BenchFamily::complete:
            if (n < 2) throw no_formula("complete graph needs n >= 2");
            g = complete(n);
            diameter = 1;
            break;
        case BenchFamily::path:
            if (n < 2 || n > 5) throw no_formula("path diameter n-1 must lie in 1..4");
            g = path(n);
            diameter = static_cast<std::int64_t>(n) - 1;
            break;
        case BenchFamily::cycle:
            if (n < 3 || n > 9) throw no_formula("cycle needs 3 <= n <= 9");
            g = cycle(n);
            diameter = static_cast<std::int64_t>(n / 2);
            break;
    }
    repetitions = std::max<std::size_t>(1, repetitions);
    const auto ni = static_cast<std::int64_t>(n);

    auto formula = [&]() -> double {
        const std::int64_t m = static_cast<std::int64_t>(g.size());
        switch (family) {
            case BenchFamily::tnd:
                return formulas_tnd(ni, 2, zagreb_m1(g), TndCase::single_branch, 0.5).closeness;
            case BenchFamily::star:
            case BenchFamily::complete:
                return *bounds_diameter(ni, m, diameter, Measure::closeness()).lower;
            case BenchFamily::path:
                return *bounds_girth7_or_tree(ni, m, zagreb_m1(g), zagreb_m2(g), diameter, true, Measure::closeness())
                            .lower;
            case BenchFamily::cycle:
                if (n <= 4) {
                    return *bounds_diameter(ni, m, diameter, Measure::closeness()).lower;
                }
                if (n <= 7) {
                    return *bounds_tqfree(ni, m, zagreb_m1(g), diameter, true, Measure::closeness()).lower;
                }
                return *bounds_girth7_or_tree(ni, m, zagreb_m1(g), zagreb_m2(g), diameter, true,
                                              Measure::closeness())
                            .lower;
        }
        return 0.0;
    };

    using clock = std::chrono::steady_clock;
    BenchRow row;
    row.family = family;
    row.n = n;
    auto t0 = clock::now();
    for (std::size_t i = 0; i < repetitions; ++i) {
        row.formula_value = formula();
    }
    auto t1 = clock::now();
    for (std::size_t i = 0; i < repetitions; ++i) {
        row.bfs_value = closeness(distance_summary(g));
    }
    auto t2 = clock::now();
    row.values_equal = nearly_equal(row.formula_value, row.bfs_value, tolerance);
    row.formula_seconds = std::chrono::duration<double>(t1 - t0).count() / static_cast<double>(repetitions);
    row.bfs_seconds = std::chrono::duration<double>(t2 - t1).count() / static_cast<double>(repetitions);
    return row;
}

std::vector<BenchRow> fastpath_benchmark(BenchFamily family, std::span<const std::size_t> sizes,
                                         std::size_t repetitions, double tolerance) {
    std::vector<BenchRow> rows;
    for (std::size_t n : sizes) {
        rows.push_back(fastpath_benchmark_row(family, n, repetitions, tolerance));
    }
    return rows;
}

}  // namespace vulngraph
