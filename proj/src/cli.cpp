#include "vulngraph/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vulngraph/bounds.hpp"
#include "vulngraph/generators.hpp"
#include "vulngraph/graph_io.hpp"
#include "vulngraph/harness.hpp"
#include "vulngraph/invariants.hpp"
#include "vulngraph/report_json.hpp"

namespace vulngraph {

namespace {

using nlohmann::json;

/// Bad flag values; the message names the offending parameter.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FamilyOptions {
    std::string family;
    std::size_t n = 0;
    bool n_set = false;
    std::vector<std::size_t> loads;
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t extra = 0;
    std::uint64_t seed = 42;
};

void add_family_options(CLI::App* cmd, FamilyOptions& f) {
    cmd->add_option("--n", f.n, "vertex count (path, cycle, complete, star, random)")
        ->each([&f](const std::string&) { f.n_set = true; });
    cmd->add_option("--r", f.loads, "branch loads r_1,...,r_D (tnd)")->delimiter(',');
    cmd->add_option("--a", f.a, "leaves on the first centre (bistar)");
    cmd->add_option("--b", f.b, "leaves on the second centre (bistar)");
    cmd->add_option("--extra", f.extra, "extra non-tree edges (random)");
    cmd->add_option("--seed", f.seed, "seed (random)");
}

GraphDocument generate_family(const FamilyOptions& f, std::ostream& err) {
    GraphDocument doc;
    doc.label = f.family;
    auto need_n = [&]() {
        if (!f.n_set) {
            throw UsageError("--n is required for family '" + f.family + "'");
        }
        return f.n;
    };
    auto guarded = [&](auto&& make) {
        try {
            return make();
        } catch (const DomainError& e) {
            throw UsageError(std::string("invalid parameter --n: ") + e.what());
        }
    };
    if (f.family == "path") {
        doc.graph = guarded([&] { return path(need_n()); });
    } else if (f.family == "cycle") {
        doc.graph = guarded([&] { return cycle(need_n()); });
    } else if (f.family == "complete") {
        doc.graph = guarded([&] { return complete(need_n()); });
    } else if (f.family == "star") {
        doc.graph = guarded([&] { return star(need_n()); });
    } else if (f.family == "petersen") {
        doc.graph = petersen();
    } else if (f.family == "pentagon") {
        doc.graph = pentagon();
    } else if (f.family == "bistar") {
        if (f.a < 1) {
            throw UsageError("invalid parameter --a: bistar needs at least one leaf on each centre");
        }
        if (f.b < 1) {
            throw UsageError("invalid parameter --b: bistar needs at least one leaf on each centre");
        }
        // Centre 0 keeps a - 1 plain leaves plus the second centre with b leaves.
        std::vector<std::size_t> loads(f.a + 1, 0);
        loads[0] = f.b;
        doc.graph = t_tree({loads}).graph;
    } else if (f.family == "tnd") {
        if (f.loads.size() < 2) {
            throw UsageError("invalid parameter --r: tnd needs at least two branch loads");
        }
        TndTree t = t_tree({f.loads});
        if (t.canonicalized) {
            err << "warning: --r was not non-increasing; loads were sorted\n";
        }
        doc.graph = std::move(t.graph);
    } else if (f.family == "random") {
        const std::size_t n = need_n();
        try {
            doc.graph = random_connected_graph(n, f.extra, f.seed);
        } catch (const DomainError& e) {
            throw UsageError(std::string("invalid parameter --extra: ") + e.what());
        }
    } else {
        throw UsageError("unknown family '" + f.family +
                         "' (expected path, cycle, complete, star, bistar, tnd, petersen, pentagon, random)");
    }
    return doc;
}

struct InputOptions {
    std::string path;
    std::string format = "auto";
    FamilyOptions family;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("input", in.path, "graph file (edge list or graph6); '-' or omitted reads stdin");
    cmd->add_option("--format", in.format, "auto, edgelist or graph6")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    cmd->add_option("--family", in.family.family, "generate the input instead of reading it");
    add_family_options(cmd, in.family);
}

GraphDocument load_input(const InputOptions& opt, std::istream& stdin_stream, std::ostream& err) {
    if (!opt.family.family.empty()) {
        return generate_family(opt.family, err);
    }
    std::ifstream file;
    std::istream* src = &stdin_stream;
    std::string label = "stdin";
    if (!opt.path.empty() && opt.path != "-") {
        file.open(opt.path);
        if (!file) {
            throw UsageError("cannot open input file '" + opt.path + "'");
        }
        src = &file;
        label = opt.path;
    }
    GraphDocument doc = opt.format == "auto"       ? read_graph_document(*src)
                        : opt.format == "graph6" ? read_graph_document(*src, GraphFormat::graph6)
                                                 : read_graph_document(*src, GraphFormat::edgelist);
    doc.label = label;
    return doc;
}

std::vector<double> checked_alphas(const std::vector<double>& alphas) {
    for (double a : alphas) {
        if (!(a > 0.0 && a < 1.0)) {
            throw UsageError("invalid parameter --alpha: " + format12(a) + " is outside (0, 1)");
        }
    }
    return alphas;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) {
        throw UsageError("cannot write output file '" + out_path + "'");
    }
    file << text;
}

int cmd_generate(const FamilyOptions& f, const std::string& format, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
    const GraphDocument doc = generate_family(f, err);
    std::ostringstream text;
    if (format == "edgelist") {
        write_edgelist(text, doc.graph);
    } else {
        text << to_graph6(doc.graph) << '\n';
    }
    emit(text.str(), out_path, out);
    return kExitOk;
}

int cmd_compute(const InputOptions& input, const std::vector<double>& alphas, std::istream& in, std::ostream& out,
                std::ostream& err) {
    const std::vector<double> grid = checked_alphas(alphas);
    const GraphDocument doc = load_input(input, in, err);
    json j = to_json(compute_invariants(doc.graph, grid));
    j["label"] = doc.label;
    if (!doc.labels.empty()) {
        j["labels"] = doc.labels;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_bounds(const InputOptions& input, const std::vector<double>& alphas, std::istream& in, std::ostream& out,
               std::ostream& err) {
    const std::vector<double> grid = checked_alphas(alphas);
    const GraphDocument doc = load_input(input, in, err);
    const InvariantSet inv = compute_invariants(doc.graph, grid);
    const GraphParameters p = graph_parameters(doc.graph, inv);
    const double tol = 1e-9;

    json reports = json::array();
    for (const BoundReport& r : all_bounds(p, Measure::closeness())) {
        reports.push_back(to_json(r, inv.closeness, tol));
    }
    for (const auto& [alpha, value] : inv.gc) {
        for (const BoundReport& r : all_bounds(p, Measure::generalized(alpha))) {
            reports.push_back(to_json(r, value, tol));
        }
    }
    json j;
    j["label"] = doc.label;
    j["n"] = p.n;
    j["m"] = p.m;
    j["m1"] = p.m1;
    j["m2"] = p.m2;
    j["radius"] = p.radius;
    j["diameter"] = p.diameter;
    j["closeness"] = real12(inv.closeness);
    j["reports"] = reports;
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_verify(SuiteConfig config, const std::vector<std::string>& check_names, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
    for (const auto& name : check_names) {
        const auto id = parse_check_id(name);
        if (!id) {
            throw UsageError("invalid parameter --checks: unknown check '" + name + "'");
        }
        config.checks.push_back(*id);
    }
    try {
        validate(config);
    } catch (const DomainError& e) {
        throw UsageError(std::string("invalid verify configuration: ") + e.what());
    }
    const VerificationReport report = run_suite(config);
    emit(to_json(report).dump(2) + "\n", out_path, out);
    const std::size_t failures = report.total_failures();
    if (failures > 0) {
        err << "verify: " << failures << " failure(s)\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_bench(const std::string& family_name, const std::vector<std::size_t>& sizes, std::size_t repetitions,
              const std::string& out_path, std::ostream& out) {
    const auto family = parse_bench_family(family_name);
    if (!family) {
        throw UsageError("invalid parameter --family: unknown bench family '" + family_name +
                         "' (expected tnd, star, complete, path, cycle)");
    }
    const auto rows = fastpath_benchmark(*family, sizes, repetitions);
    json j = json::array();
    bool all_equal = true;
    for (const BenchRow& row : rows) {
        j.push_back(to_json(row));
        all_equal = all_equal && row.values_equal;
    }
    emit(j.dump(2) + "\n", out_path, out);
    return all_equal ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closeness, generalized closeness and Zagreb-index bounds for simple graphs", "vulngraph"};
    app.require_subcommand(1);

    FamilyOptions gen_family;
    std::string gen_format = "graph6";
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "write a member of a named graph family");
    generate->add_option("family", gen_family.family, "path, cycle, complete, star, bistar, tnd, petersen, pentagon, random")
        ->required();
    add_family_options(generate, gen_family);
    generate->add_option("--out-format", gen_format, "graph6 or edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));
    generate->add_option("--out", gen_out, "output file (default stdout)");

    InputOptions compute_in;
    std::vector<double> compute_alphas{0.5};
    auto* compute = app.add_subcommand("compute", "print every invariant of a graph as JSON");
    add_input_options(compute, compute_in);
    compute->add_option("--alpha", compute_alphas, "generalized closeness bases, comma separated")->delimiter(',');

    InputOptions bounds_in;
    std::vector<double> bounds_alphas{0.5};
    auto* bounds = app.add_subcommand("bounds", "print every bound with the exact value, as JSON");
    add_input_options(bounds, bounds_in);
    bounds->add_option("--alpha", bounds_alphas, "generalized closeness bases, comma separated")->delimiter(',');

    SuiteConfig suite;
    std::vector<std::string> check_names;
    std::string verify_out;
    bool no_named = false;
    auto* verify = app.add_subcommand("verify", "run the verification suite over the corpus");
    verify->add_option("--max-n", suite.corpus.max_n, "exhaustive connected graphs up to this order (<= 6)");
    verify->add_option("--trees-max-n", suite.corpus.trees_max_n, "all labelled trees up to this order");
    verify->add_option("--seed", suite.corpus.seed, "seed for the random graphs");
    verify->add_option("--random-count", suite.corpus.random_count, "number of random connected graphs");
    verify->add_option("--random-min-n", suite.corpus.random_min_n, "smallest random graph order");
    verify->add_option("--random-max-n", suite.corpus.random_max_n, "largest random graph order");
    verify->add_option("--tnd-max-branches", suite.corpus.tnd_max_branches, "T(n,D) sweep: largest D (0 disables)");
    verify->add_option("--tnd-max-load", suite.corpus.tnd_max_load, "T(n,D) sweep: largest sum of loads");
    verify->add_option("--path-max-n", suite.corpus.path_max_n, "paths up to this order");
    verify->add_flag("--no-named", no_named, "leave out the named graphs");
    verify->add_option("--alpha", suite.alphas, "alpha grid, comma separated")->delimiter(',');
    verify->add_option("--tolerance", suite.tolerance, "relative tolerance for real comparisons");
    verify->add_option("--checks", check_names, "run only these checks, comma separated")->delimiter(',');
    verify->add_option("--out", verify_out, "report file (default stdout)");

    std::string bench_family = "tnd";
    std::vector<std::size_t> bench_sizes{100, 1000};
    std::size_t bench_reps = 1;
    std::string bench_out;
    auto* bench = app.add_subcommand("bench", "time degree formulas against BFS on exact families");
    bench->add_option("--family", bench_family, "tnd (bistar), star, complete, path, cycle");
    bench->add_option("--sizes", bench_sizes, "orders, comma separated")->delimiter(',');
    bench->add_option("--repetitions", bench_reps, "timing repetitions");
    bench->add_option("--out", bench_out, "output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            return cmd_generate(gen_family, gen_format, gen_out, out, err);
        }
        if (compute->parsed()) {
            return cmd_compute(compute_in, compute_alphas, in, out, err);
        }
        if (bounds->parsed()) {
            return cmd_bounds(bounds_in, bounds_alphas, in, out, err);
        }
        if (verify->parsed()) {
            suite.corpus.named = !no_named;
            return cmd_verify(suite, check_names, verify_out, out, err);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_family, bench_sizes, bench_reps, bench_out, out);
        }
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace vulngraph
