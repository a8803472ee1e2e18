#pragma once

#include "scl/cliques.hpp"
#include "scl/graph.hpp"
#include "scl/rational.hpp"
#include "scl/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scl {

// Relative tolerances for floating checks. `holds` uses
// slack >= -holds_rel * scale, `equality` uses |slack| <= equality_rel * scale.
struct Tolerance {
    double holds_rel = 1e-7;
    double equality_rel = 1e-6;
    double jacobi_off = kJacobiOffTol;

    // Uniformly scales every epsilon (the CLI --tol knob).
    Tolerance scaled(double factor) const { return {holds_rel * factor, equality_rel * factor, jacobi_off * factor}; }
};

struct BoundParams {
    std::optional<int> r;
    std::optional<int> s;
    std::optional<int> l;
    std::optional<int> t;
    std::optional<Rational> alpha;

    // Canonical "r=2,s=1,alpha=1/20" form; used for ordering and output.
    std::string str() const;
};

// One normalized inequality evaluation: slack = rhs - lhs, and "holds" means
// slack >= -eps regardless of the original direction of the inequality.
struct BoundReport {
    std::string name;
    BoundParams params;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double scale = 1.0;
    bool holds = true;
    bool equality = false;
    // Decided in exact arithmetic (no tolerance).
    bool exact = false;
    // Parameters fall outside the claim's hypotheses; never a violation.
    bool in_domain = true;
    // Holds for a trivial reason (negative bound, false premise).
    bool vacuous = false;
    // Recomputed at a tightened eigen tolerance after a near-violation.
    bool reverified = false;
    std::string note;
};

// Classifies a floating report from lhs/rhs.
BoundReport make_report(std::string name, BoundParams params, double lhs, double rhs, const Tolerance& tol);
// Classifies an exact report; holds iff lhs <= rhs.
BoundReport make_exact_report(std::string name, BoundParams params, const Rational& lhs, const Rational& rhs);

// Lazily computed spectral and combinatorial data of one graph. Not
// thread-safe; each worker owns its own instance.
class GraphStats {
public:
    explicit GraphStats(const Graph& g, double jacobi_off = kJacobiOffTol);

    const Graph& graph() const { return *graph_; }
    int n() const { return graph_->order(); }
    double jacobi_off() const { return jacobi_off_; }

    const Spectrum& spectrum() const;
    double mu() const { return spectrum().radius(); }
    const CliqueProfile& cliques() const;
    const VertexCliqueProfile& vertex_cliques() const;
    int omega() const { return cliques().omega; }
    // Walk profile covering at least `length`.
    const WalkProfile& walks(int length) const;
    const MultipartiteShape& multipartite() const;

    // Fresh stats at an eigen tolerance tightened by `factor`.
    GraphStats tightened(double factor = 100.0) const;

private:
    const Graph* graph_;
    double jacobi_off_;
    mutable std::optional<Spectrum> spectrum_;
    mutable std::optional<CliqueProfile> cliques_;
    mutable std::optional<VertexCliqueProfile> vertex_cliques_;
    mutable std::optional<WalkProfile> walks_;
    mutable std::optional<MultipartiteShape> multipartite_;
};

// mu <= ((omega-1)/omega) n
BoundReport wilf_bound(const GraphStats& st, const Tolerance& tol = {});
// mu^s <= ((omega-1)/omega) w_s
BoundReport walk_power_bound(const GraphStats& st, int s, const Tolerance& tol = {});
// m <= ((omega-1)/(2 omega)) n^2, exact.
BoundReport turan_edge_bound(const GraphStats& st);
// mu^omega <= sum_{s=2}^{omega} (s-1) k_s mu^{omega-s}. The note records
// whether the equality flag agrees with the multipartite recognizer.
BoundReport polyn_bound(const GraphStats& st, const Tolerance& tol = {});
BoundReport theorem1_bound(const GraphStats& st, int r, const Tolerance& tol = {});
// k_{r+1} >= (mu/n - 1 + 1/r) (r(r-1)/(r+1)) (n/r)^{r+1}
BoundReport theorem2_lower(const GraphStats& st, int r, const Tolerance& tol = {});

struct ConditionalReport {
    bool in_domain = true;      // r < omega
    bool premise = false;
    std::string premise_lhs;    // (s+1) k_{s+1}, exact
    std::string premise_rhs;    // n^{s+1} prod_{t=1}^{s} ((r-t)/(rt) + alpha), exact
    BoundReport conclusion;     // lhs = alpha (r^2/(r+1)) (n/r)^{r+1}, rhs = k_{r+1}
    bool implication_holds = true;
};

// Premise (s+1)k_{s+1} >= n^{s+1} prod((r-t)/(rt)+alpha) implies
// k_{r+1} >= alpha (r^2/(r+1)) (n/r)^{r+1}; all exact. Throws
// std::invalid_argument unless 1 <= s <= r and alpha >= 0.
ConditionalReport theorem3_conditional(const GraphStats& st, int r, int s, const Rational& alpha);
// Flattens a conditional report for aggregation.
BoundReport to_bound_report(const ConditionalReport& c, int r, int s, const Rational& alpha);

// mu_1^2 + mu_2^2 <= ((r-1)/r) 2m on K_{r+1}-free graphs with more than r
// vertices; out-of-domain otherwise (lhs/rhs still filled in for small orders).
BoundReport conjecture_check(const GraphStats& st, int r, const Tolerance& tol = {});

// sum_u (k_s(u) w_{l+1}(u) - k_{s+1}(u) w_l(u)) <= (s-1) k_s(G) w_l(G), exact.
// Throws DomainError unless 2 <= s <= omega and l >= 2.
BoundReport oldin_check(const GraphStats& st, int s, int l);

// On K_{r+1}-free graphs with mu >= (1 - 1/r - alpha) n: m >= ((r-1)/(2r) - 2 alpha) n^2.
BoundReport edge_corollary_check(const GraphStats& st, int r, const Rational& alpha, const Tolerance& tol = {});

// One exact report per adjacent pair rho_t <= rho_{t+1}.
std::vector<BoundReport> momo_reports(const GraphStats& st);

// Applies the near-violation protocol: a floating report whose slack lies in
// (-eps, eps) is recomputed on tightened stats and flagged reverified.
template <class Eval>
BoundReport reverified(const GraphStats& st, const Tolerance& tol, Eval&& eval)
{
    BoundReport first = eval(st);
    if (first.exact || !first.in_domain)
        return first;
    const double eps = tol.holds_rel * first.scale;
    if (!(first.slack > -eps && first.slack < eps))
        return first;
    GraphStats tight = st.tightened();
    BoundReport second = eval(tight);
    second.reverified = true;
    return second;
}

} // namespace scl
