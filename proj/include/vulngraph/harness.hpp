#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vulngraph/bounds.hpp"
#include "vulngraph/graph.hpp"
#include "vulngraph/invariants.hpp"

namespace vulngraph {

enum class CheckId {
    distance_two_identity,     // d(G,2) = M1/2 - m on triangle/quadrangle-free graphs
    zagreb_radius_bound,       // M1 <= n(n+1-r), equality iff Moore (diam 2) or C6
    polarity_bound,            // W_P <= M2 - M1 + m, equality iff tree or girth >= 7
    path_minimality,           // GC(P_n) <= GC(T) over trees
    global_bounds,             // BoundId::global sandwich
    diameter_bounds,           // BoundId::diameter sandwich
    tqfree_bounds,             // BoundId::tqfree sandwich
    girth7_tree_bounds,        // BoundId::girth7_or_tree sandwich
    moore_bound,               // BoundId::moore upper bound and equality witnesses
    tnd_formulas,              // T(n,D) closed forms vs BFS
    rm2_identity,              // RM2 = M2 - M1 + m
    gc_closeness_consistency,  // GC at 1/2 equals closeness
    path_closed_form,          // closed-form GC(P_n) vs BFS
};

std::string_view to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view name);
const std::vector<CheckId>& all_checks();

/// Which graphs make up the verification corpus.
struct CorpusConfig {
    std::size_t max_n = 6;          // every connected labelled graph with 1..max_n vertices
    std::size_t trees_max_n = 8;    // every labelled tree with 1..trees_max_n vertices
    bool named = true;              // named families (Petersen, cycles, stars, ...)
    std::size_t random_count = 100; // seeded random connected graphs
    std::size_t random_min_n = 7;
    std::size_t random_max_n = 16;
    std::uint64_t seed = 42;
    std::size_t tnd_max_branches = 6;  // T(n,D) sweep, D in 2..tnd_max_branches
    std::size_t tnd_max_load = 12;     // sum of loads <= tnd_max_load
    std::size_t path_max_n = 64;       // paths 1..path_max_n
};

struct SuiteConfig {
    CorpusConfig corpus;
    std::vector<double> alphas{0.1, 0.25, 0.5, 0.75, 0.9};
    /// Relative tolerance for real comparisons. Integer identities are always exact.
    double tolerance = 1e-9;
    /// Empty means every check.
    std::vector<CheckId> checks;
};

/// Throws DomainError on an invalid configuration.
void validate(const SuiteConfig& config);

struct CorpusItem {
    std::string family;
    std::string name;  // empty for enumerated graphs
    Graph graph;
};

/// Corpus in its fixed enumeration order.
std::vector<CorpusItem> build_corpus(const CorpusConfig& config);

/// FNV-1a over "family:graph6" lines of the corpus.
std::string corpus_digest(const std::vector<CorpusItem>& corpus);

struct CheckOutcome {
    bool applicable = false;
    bool passed = true;
    bool equality_hit = false;
    std::optional<double> slack;
    std::string detail;
};

/// Everything the checks read, computed once per graph.
struct Analysis {
    const Graph* graph = nullptr;
    InvariantSet inv;
    std::optional<GraphParameters> params;  // absent when disconnected
};

Analysis analyze(const Graph& g, std::span<const double> alphas);

/// Runs one check on one graph; used by run_suite and to replay counterexamples.
CheckOutcome evaluate_check(CheckId id, const Graph& g, const SuiteConfig& config);

struct Counterexample {
    std::size_t corpus_index = 0;
    std::string family;
    std::string graph6;
    std::string detail;
};

struct CheckRecord {
    CheckId id{};
    std::size_t graphs_tested = 0;
    std::size_t passes = 0;
    std::size_t failures = 0;
    std::size_t equality_hits = 0;
    std::optional<double> worst_slack;
    std::vector<std::string> equality_witnesses;  // named graphs only
    std::vector<Counterexample> counterexamples;  // capped, sorted by corpus index
};

inline constexpr std::size_t kCounterexampleCap = 10;
inline constexpr std::size_t kWitnessCap = 32;

struct VerificationReport {
    SuiteConfig config;
    std::size_t corpus_size = 0;
    std::string corpus_digest;
    std::vector<CheckRecord> checks;

    std::size_t total_failures() const;
};

VerificationReport run_suite(const SuiteConfig& config);

enum class BenchFamily { tnd, star, complete, path, cycle };

std::optional<BenchFamily> parse_bench_family(std::string_view name);
std::string_view to_string(BenchFamily family);

struct BenchRow {
    BenchFamily family{};
    std::size_t n = 0;
    double bfs_value = 0.0;
    double formula_value = 0.0;
    bool values_equal = false;
    double bfs_seconds = 0.0;
    double formula_seconds = 0.0;
};

/// Compares the degree-formula closeness with the BFS closeness for one family
/// member. Throws PreconditionError when no exact formula covers (family, n).
BenchRow fastpath_benchmark_row(BenchFamily family, std::size_t n, std::size_t repetitions,
                                double tolerance = 1e-9);
std::vector<BenchRow> fastpath_benchmark(BenchFamily family, std::span<const std::size_t> sizes,
                                         std::size_t repetitions, double tolerance = 1e-9);

/// |a - b| <= tol * max(|a|, |b|).
bool nearly_equal(double a, double b, double tolerance);

}  // namespace vulngraph
