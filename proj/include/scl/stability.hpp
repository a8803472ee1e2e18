#pragma once

#include "scl/bounds.hpp"
#include "scl/graph.hpp"
#include "scl/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scl {

// Largest subset order accepted by exhaustive witness search.
constexpr int kExhaustiveWitnessMaxN = 16;

// Induced r-partite subgraph G0 certifying the stability conclusion.
struct StabilityWitness {
    VertexSet vertices;
    std::vector<std::vector<int>> partition; // vertex ids of the host graph
    int order = 0;
    int min_degree = 0;                      // measured inside G0
};

enum class SearchMode { exhaustive, heuristic };
enum class StabilityVerdict { premise_failed, witnessed, heuristic_miss, exhaustive_miss };

std::string to_string(SearchMode mode);
std::string to_string(StabilityVerdict verdict);

struct StabilityThresholds {
    double order_min = 0.0;  // (1 - 3 alpha^{1/3}) n
    double degree_min = 0.0; // (1 - 1/r - 6 alpha^{1/3}) n
    // alpha == 0: strict comparisons are unsatisfiable, so the check falls
    // back to non-strict ones and flags the result.
    bool boundary = false;
};

StabilityThresholds stability_thresholds(int n, int r, const Rational& alpha);

// Largest admissible alpha, 2^-10 r^-6.
Rational stability_alpha_max(int r);

// K_{r+1}-free, 0 <= alpha <= 2^-10 r^-6 and mu >= (1 - 1/r - alpha) n - eps.
bool stability_premise(const Graph& g, int r, const Rational& alpha, const Tolerance& tol = {});

// Throws DomainError when the premise fails or exhaustive mode is asked for
// n > 16.
std::optional<StabilityWitness> find_stability_witness(const Graph& g, int r, const Rational& alpha, SearchMode mode);

// Re-derives the induced subgraph and checks independence of the classes,
// order and minimum degree against the thresholds. Throws
// std::invalid_argument when the witness is structurally malformed (vertex
// outside the graph, classes not partitioning the vertex set, more than r
// classes).
bool verify_witness(const Graph& g, int r, const Rational& alpha, const StabilityWitness& w);

struct StabilityReport {
    int r = 2;
    Rational alpha;
    bool premise_ok = false;
    StabilityThresholds thresholds;
    std::optional<StabilityWitness> witness;
    SearchMode mode = SearchMode::exhaustive;
    StabilityVerdict verdict = StabilityVerdict::premise_failed;
};

// Premise check plus witness search; never throws for a failed premise.
StabilityReport stability_search(const Graph& g, int r, const Rational& alpha, SearchMode mode);

// Premise of the edge-count stability theorem the proof relies on:
// K_{r+1}-free, 0 < beta <= 2^-9 r^-6 and e(G) >= ((r-1)/(2r) - beta) n^2.
// Exact.
bool niro_premise(const Graph& g, int r, const Rational& beta);

} // namespace scl
