#pragma once

#include "scl/graph.hpp"
#include "scl/rational.hpp"

#include <vector>

namespace scl {

// Jacobi stopping rule: off-diagonal Frobenius norm <= off_tol * n.
constexpr double kJacobiOffTol = 1e-12;
// Per-eigenpair residual budget ||Ax - lambda x|| <= residual_tol * n.
constexpr double kResidualTol = 1e-9;
// Eigenvalues within this absolute distance share a multiplicity group.
constexpr double kMultiplicityTol = 1e-7;

// Eigenvalues of the adjacency matrix, sorted descending.
struct Spectrum {
    std::vector<double> eigenvalues;
    double residual_bound = 0.0;

    double radius() const { return eigenvalues.front(); }
    // Second largest eigenvalue; 0 for single-vertex graphs.
    double second() const { return eigenvalues.size() > 1 ? eigenvalues[1] : 0.0; }
    double smallest() const { return eigenvalues.back(); }
};

struct EigenGroup {
    double value;
    int multiplicity;
};

// Full dense spectrum by cyclic Jacobi rotation sweeps. `off_tol` tightens
// or loosens the stopping threshold. Throws ConvergenceError if the sweep
// budget runs out or a residual exceeds the budget.
Spectrum spectrum(const Graph& g, double off_tol = kJacobiOffTol);

double spectral_radius(const Graph& g);

// Groups descending eigenvalues closer than `tol` (single linkage along the
// sorted order); each group reports its mean.
std::vector<EigenGroup> multiplicities(const Spectrum& s, double tol = kMultiplicityTol);

// Exact walk counts. totals[l-1] = w_l(G); per_vertex[l-1][u] = w_l(u).
struct WalkProfile {
    std::vector<i128> totals;
    std::vector<std::vector<i128>> per_vertex;

    int max_length() const { return static_cast<int>(totals.size()); }
    i128 total(int l) const { return totals[static_cast<std::size_t>(l - 1)]; }
    i128 at(int l, int u) const { return per_vertex[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(u)]; }
};

// Throws OverflowError if a count leaves the 128-bit range.
WalkProfile walk_counts(const Graph& g, int max_length);

struct RayleighBounds {
    double average_degree;   // 2m/n
    double degree_rms;       // sqrt((1/n) sum d(u)^2)
};

RayleighBounds rayleigh_lower_bounds(const Graph& g);

struct WalkRatioReport {
    bool converged = false;
    int length = 0;          // least l meeting the tolerance (or the last tried)
    double error = 0.0;      // |w_{l+q}/w_{l-1} - mu^{q+1}| at `length`
    double best_error = 0.0; // smallest error seen
    double target = 0.0;     // mu^{q+1}
    bool exact = true;       // false once counts left the 128-bit range and
                             // the scaled floating recursion took over
};

// Searches the least l in [2, max_length] with
// |w_{l+q}/w_{l-1} - mu^{q+1}| <= tol * max(1, mu^{q+1}).
// Throws DomainError for disconnected or bipartite graphs.
WalkRatioReport walk_ratio_limit_check(const Graph& g, int q, double tol, int max_length);

} // namespace scl
