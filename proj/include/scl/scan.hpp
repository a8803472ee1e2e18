#pragma once

#include "scl/bounds.hpp"
#include "scl/cliques.hpp"
#include "scl/graph.hpp"
#include "scl/spectral.hpp"
#include "scl/stability.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace scl {

// ------------------------------------------------------------------ corpora

constexpr int kExhaustiveMaxN = 7;
constexpr int kExhaustiveOverrideMaxN = 8;

// Number of labeled graphs on n vertices, 2^(n(n-1)/2).
std::uint64_t labeled_count(int n);

// The graph whose edge set is `mask` over pairs in graph6 order
// (0,1), (0,2), (1,2), (0,3), ...
Graph labeled_graph(int n, std::uint64_t mask);

// Visits all labeled graphs on n <= 8 vertices in edge-mask order.
void enumerate_labeled(int n, const std::function<void(const Graph&)>& visit);

// Reads a graph6 file; blank lines and '#' comments are skipped. Throws
// Error on I/O failure and ParseError (with the line number) on bad lines.
std::vector<Graph> read_graph6_file(const std::string& path);

struct CorpusFilters {
    bool connected = false;
    bool non_bipartite = false;
    std::optional<int> kfree; // keep graphs with omega < kfree
};

struct CorpusSpec {
    enum class Mode { exhaustive, graph6_file, random, inline_graphs };

    Mode mode = Mode::exhaustive;
    int n = 0;                   // exhaustive, random
    bool allow_n8 = false;       // exhaustive override
    std::string path;            // graph6_file
    double p = 0.5;              // random
    std::uint64_t count = 0;     // random
    std::uint64_t seed = 0;      // random
    std::vector<Graph> graphs;   // inline_graphs
    CorpusFilters filters;

    static CorpusSpec exhaustive(int n);
    static CorpusSpec random(int n, double p, std::uint64_t count, std::uint64_t seed);
    static CorpusSpec file(std::string path);
    static CorpusSpec inline_list(std::vector<Graph> graphs);
};

// ------------------------------------------------------------------ checks

enum class CheckKind {
    wilf,
    maxmu,
    maxmu1,
    polyn,
    theorem1,
    theorem2,
    theorem3,
    momo,
    oldin,
    conjecture,
    edge_corollary,
    stability,
};

std::string to_string(CheckKind kind);
std::optional<CheckKind> parse_check_kind(std::string_view name);
const std::vector<CheckKind>& all_check_kinds();

// A check with its parameter grid. Empty grids take the defaults:
// maxmu s = 1..4, theorem1 r = 2..4, theorem2 r = 2..3, theorem3 r = 2..3,
// s = 1..r, alpha = {0, 1/20, 1/10, 1/4}, oldin s = 2..omega, l = 2..3,
// conjecture r = 2..3, edge_corollary r = 2..3 alpha = {0},
// stability r = 2..3 alpha = 2^-10 r^-6.
struct CheckSpec {
    CheckKind kind = CheckKind::wilf;
    std::vector<int> r;
    std::vector<int> s;
    std::vector<int> l;
    std::vector<Rational> alpha;
};

// Evaluates one check over its grid on a single graph. Floating reports go
// through the near-violation protocol.
std::vector<BoundReport> evaluate_check(const CheckSpec& check, const GraphStats& stats, const Tolerance& tol);

// The theorem suite: everything except the conjecture, theorem3,
// edge_corollary and stability.
std::vector<CheckSpec> theorem_suite();

// ------------------------------------------------------------------- scans

struct ScanConfig {
    std::vector<CheckSpec> checks;
    Tolerance tol;
    int top_k = 10;
    int jobs = 1;
    std::size_t max_records = 0; // 0 keeps every record
};

struct ScanRecord {
    std::uint64_t item = 0;  // corpus position
    std::string graph6;
    BoundReport report;
};

struct ScanError {
    std::uint64_t item = 0;
    std::string graph6;
    std::string check;
    std::string message;
};

struct ScanResult {
    std::uint64_t graphs_seen = 0;
    std::uint64_t graphs_checked = 0;
    std::uint64_t evaluations = 0;
    std::uint64_t out_of_domain = 0;
    std::uint64_t violations_total = 0;
    std::uint64_t equalities_total = 0;
    std::uint64_t discoveries_total = 0;
    std::vector<ScanRecord> violations;  // theorem checks that failed
    std::vector<ScanRecord> discoveries; // conjecture checks that failed
    std::vector<ScanRecord> equalities;
    std::vector<ScanRecord> tightest;
    std::vector<ScanError> errors;
    double timing_s = 0.0;
};

// Runs every configured check on every corpus graph passing the filters.
// The result does not depend on config.jobs.
ScanResult scan(const CorpusSpec& corpus, const ScanConfig& config);

// In-domain, non-vacuous evaluations that hold, ordered by ascending
// max(slack, 0) then graph6, check name and params; first k kept.
std::vector<ScanRecord> tightness_rank(std::vector<ScanRecord> records, int k);

// ----------------------------------------------------------------- oracles

constexpr int kBruteCliqueMaxN = 20;
constexpr int kBruteWalkMaxN = 10;
constexpr int kBruteWalkMaxL = 8;

// Tests every vertex subset for completeness.
CliqueProfile brute_force_cliques(const Graph& g);
// Enumerates every vertex sequence of length <= L explicitly.
WalkProfile brute_force_walks(const Graph& g, int max_length);

// ----------------------------------------------------------- serialization

nlohmann::ordered_json to_json(const BoundParams& p);
nlohmann::ordered_json to_json(const BoundReport& r);
nlohmann::ordered_json to_json(const ScanRecord& r);
nlohmann::ordered_json to_json(const StabilityWitness& w);
nlohmann::ordered_json to_json(const StabilityReport& r);
// timing_s is null unless include_timing; stdout stays byte-stable.
nlohmann::ordered_json to_json(const ScanResult& r, bool include_timing);

// One row per reported instance (violation, discovery, equality, tightest).
std::string to_csv(const ScanResult& r);

} // namespace scl
