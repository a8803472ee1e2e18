#include "scl/bounds.hpp"

#include "scl/error.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scl {

std::string BoundParams::str() const
{
    std::string out;
    auto add = [&](const char* key, const std::string& value) {
        if (!out.empty())
            out += ',';
        out += key;
        out += '=';
        out += value;
    };
    if (r)
        add("r", std::to_string(*r));
    if (s)
        add("s", std::to_string(*s));
    if (l)
        add("l", std::to_string(*l));
    if (t)
        add("t", std::to_string(*t));
    if (alpha)
        add("alpha", alpha->str());
    return out;
}

BoundReport make_report(std::string name, BoundParams params, double lhs, double rhs, const Tolerance& tol)
{
    BoundReport rep;
    rep.name = std::move(name);
    rep.params = std::move(params);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.slack = rhs - lhs;
    rep.scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    rep.holds = rep.slack >= -tol.holds_rel * rep.scale;
    rep.equality = std::fabs(rep.slack) <= tol.equality_rel * rep.scale;
    return rep;
}

BoundReport make_exact_report(std::string name, BoundParams params, const Rational& lhs, const Rational& rhs)
{
    BoundReport rep;
    rep.name = std::move(name);
    rep.params = std::move(params);
    rep.lhs = lhs.to_double();
    rep.rhs = rhs.to_double();
    Rational slack = rhs - lhs;
    rep.slack = slack.to_double();
    rep.scale = std::max({1.0, std::fabs(rep.lhs), std::fabs(rep.rhs)});
    rep.holds = slack >= Rational(0);
    rep.equality = slack == Rational(0);
    rep.exact = true;
    return rep;
}

// --------------------------------------------------------------- GraphStats

GraphStats::GraphStats(const Graph& g, double jacobi_off) : graph_(&g), jacobi_off_(jacobi_off) {}

const Spectrum& GraphStats::spectrum() const
{
    if (!spectrum_)
        spectrum_ = scl::spectrum(*graph_, jacobi_off_);
    return *spectrum_;
}

const CliqueProfile& GraphStats::cliques() const
{
    if (!cliques_)
        cliques_ = clique_counts(*graph_);
    return *cliques_;
}

const VertexCliqueProfile& GraphStats::vertex_cliques() const
{
    if (!vertex_cliques_)
        vertex_cliques_ = vertex_clique_counts(*graph_);
    return *vertex_cliques_;
}

const WalkProfile& GraphStats::walks(int length) const
{
    if (!walks_ || walks_->max_length() < length)
        walks_ = walk_counts(*graph_, std::max(length, 4));
    return *walks_;
}

const MultipartiteShape& GraphStats::multipartite() const
{
    if (!multipartite_)
        multipartite_ = is_complete_multipartite_plus_isolated(*graph_);
    return *multipartite_;
}

GraphStats GraphStats::tightened(double factor) const
{
    GraphStats out(*graph_, jacobi_off_ / factor);
    out.cliques_ = cliques_;
    out.vertex_cliques_ = vertex_cliques_;
    out.walks_ = walks_;
    out.multipartite_ = multipartite_;
    return out;
}

// ------------------------------------------------------------------- bounds

namespace {

double omega_fraction(int omega) { return static_cast<double>(omega - 1) / omega; }

void require_r(int r)
{
    if (r < 2)
        throw std::invalid_argument("r must be at least 2");
}

} // namespace

BoundReport wilf_bound(const GraphStats& st, const Tolerance& tol)
{
    return make_report("wilf", {}, st.mu(), omega_fraction(st.omega()) * st.n(), tol);
}

BoundReport walk_power_bound(const GraphStats& st, int s, const Tolerance& tol)
{
    if (s < 1)
        throw std::invalid_argument("walk power s must be at least 1");
    BoundParams p;
    p.s = s;
    double ws = to_double(st.walks(s).total(s));
    return make_report("maxmu", p, std::pow(st.mu(), s), omega_fraction(st.omega()) * ws, tol);
}

BoundReport turan_edge_bound(const GraphStats& st)
{
    const int omega = st.omega();
    const i128 n = st.n();
    return make_exact_report("maxmu1", {}, Rational(st.graph().size()), Rational((omega - 1) * n * n, 2 * omega));
}

BoundReport polyn_bound(const GraphStats& st, const Tolerance& tol)
{
    const int omega = st.omega();
    const double mu = st.mu();
    double rhs = 0.0;
    for (int s = 2; s <= omega; ++s)
        rhs += (s - 1) * to_double(st.cliques().k(s)) * std::pow(mu, omega - s);
    BoundReport rep = make_report("polyn", {}, std::pow(mu, omega), rhs, tol);
    const bool recognized = st.multipartite().accepted;
    rep.note = rep.equality == recognized ? "recognizer=agree" : "recognizer=disagree";
    return rep;
}

BoundReport theorem1_bound(const GraphStats& st, int r, const Tolerance& tol)
{
    require_r(r);
    const double mu = st.mu();
    const auto& k = st.cliques();
    double rhs = (r + 1) * to_double(k.k(r + 1));
    for (int s = 2; s <= r; ++s)
        rhs += (s - 1) * to_double(k.k(s)) * std::pow(mu, r + 1 - s);
    BoundParams p;
    p.r = r;
    return make_report("theorem1", p, std::pow(mu, r + 1), rhs, tol);
}

BoundReport theorem2_lower(const GraphStats& st, int r, const Tolerance& tol)
{
    require_r(r);
    const double n = st.n();
    const double factor = st.mu() / n - 1.0 + 1.0 / r;
    const double bound = factor * (static_cast<double>(r) * (r - 1) / (r + 1)) * std::pow(n / r, r + 1);
    BoundParams p;
    p.r = r;
    BoundReport rep = make_report("theorem2", p, bound, to_double(st.cliques().k(r + 1)), tol);
    rep.vacuous = bound < 0.0 && !rep.equality;
    return rep;
}

ConditionalReport theorem3_conditional(const GraphStats& st, int r, int s, const Rational& alpha)
{
    if (s < 1 || s > r)
        throw std::invalid_argument("theorem3 requires 1 <= s <= r");
    if (alpha < Rational(0))
        throw std::invalid_argument("theorem3 requires alpha >= 0");
    const i128 n = st.n();
    const auto& k = st.cliques();

    ConditionalReport out;
    out.in_domain = r < k.omega;

    Rational product(1);
    for (int t = 1; t <= s; ++t)
        product *= Rational(r - t, static_cast<i128>(r) * t) + alpha;
    Rational premise_rhs = pow(Rational(n), s + 1) * product;
    Rational premise_lhs(checked_mul(s + 1, k.k(s + 1)));
    out.premise = premise_lhs >= premise_rhs;
    out.premise_lhs = premise_lhs.str();
    out.premise_rhs = premise_rhs.str();

    Rational bound = alpha * Rational(static_cast<i128>(r) * r, r + 1) * pow(Rational(n, r), r + 1);
    BoundParams p;
    p.r = r;
    p.s = s;
    p.alpha = alpha;
    out.conclusion = make_exact_report("theorem3", p, bound, Rational(k.k(r + 1)));
    out.conclusion.in_domain = out.in_domain;
    out.implication_holds = !out.premise || out.conclusion.holds;
    return out;
}

BoundReport to_bound_report(const ConditionalReport& c, int r, int s, const Rational& alpha)
{
    BoundReport rep = c.conclusion;
    rep.params.r = r;
    rep.params.s = s;
    rep.params.alpha = alpha;
    rep.holds = c.implication_holds;
    rep.in_domain = c.in_domain;
    rep.vacuous = !c.premise;
    rep.equality = c.premise && c.conclusion.equality;
    rep.note = std::string("premise=") + (c.premise ? "true" : "false") + " (" + c.premise_lhs +
               (c.premise ? " >= " : " < ") + c.premise_rhs + ")";
    if (!c.in_domain)
        rep.note += "; r >= omega";
    return rep;
}

BoundReport conjecture_check(const GraphStats& st, int r, const Tolerance& tol)
{
    require_r(r);
    BoundParams p;
    p.r = r;
    if (st.omega() > r) {
        BoundReport rep;
        rep.name = "conjecture";
        rep.params = p;
        rep.in_domain = false;
        rep.note = "graph contains K_" + std::to_string(r + 1);
        return rep;
    }
    const auto& sp = st.spectrum();
    const double lhs = sp.radius() * sp.radius() + sp.second() * sp.second();
    const double rhs = static_cast<double>(r - 1) / r * 2.0 * static_cast<double>(st.graph().size());
    BoundReport rep = make_report("conjecture", p, lhs, rhs, tol);
    // K_r itself has mu_2 = -1 and misses by exactly 1, so graphs on at most
    // r vertices sit outside the claim. Values stay in the report.
    if (st.n() <= r) {
        rep.in_domain = false;
        rep.note = "order at most r";
    }
    return rep;
}

BoundReport oldin_check(const GraphStats& st, int s, int l)
{
    const int omega = st.omega();
    if (s < 2 || s > omega)
        throw DomainError("oldin requires 2 <= s <= omega");
    if (l < 2)
        throw DomainError("oldin requires l >= 2");
    const auto& vk = st.vertex_cliques();
    const auto& w = st.walks(l + 1);
    i128 lhs = 0;
    for (int u = 0; u < st.n(); ++u) {
        i128 term = checked_sub(checked_mul(vk.k(u, s), w.at(l + 1, u)), checked_mul(vk.k(u, s + 1), w.at(l, u)));
        lhs = checked_add(lhs, term);
    }
    i128 rhs = checked_mul(checked_mul(s - 1, st.cliques().k(s)), w.total(l));
    BoundParams p;
    p.s = s;
    p.l = l;
    return make_exact_report("oldin", p, Rational(lhs), Rational(rhs));
}

BoundReport edge_corollary_check(const GraphStats& st, int r, const Rational& alpha, const Tolerance& tol)
{
    require_r(r);
    if (alpha < Rational(0))
        throw std::invalid_argument("alpha must be non-negative");
    BoundParams p;
    p.r = r;
    p.alpha = alpha;
    const i128 n = st.n();
    Rational bound = (Rational(r - 1, 2 * r) - Rational(2) * alpha) * Rational(n * n);
    BoundReport rep = make_exact_report("edge_corollary", p, bound, Rational(st.graph().size()));
    if (st.omega() > r) {
        rep.in_domain = false;
        rep.note = "graph contains K_" + std::to_string(r + 1);
        return rep;
    }
    const double need = (1.0 - 1.0 / r - alpha.to_double()) * st.n();
    const double eps = tol.holds_rel * std::max(1.0, need);
    if (st.mu() < need - eps) {
        rep.in_domain = false;
        rep.note = "spectral premise fails: mu < (1 - 1/r - alpha) n";
    }
    return rep;
}

std::vector<BoundReport> momo_reports(const GraphStats& st)
{
    MoMoReport mm = moon_moser_check(st.cliques(), st.n());
    std::vector<BoundReport> out;
    for (std::size_t i = 0; i + 1 < mm.ratios.size(); ++i) {
        BoundParams p;
        p.t = static_cast<int>(i + 1);
        out.push_back(make_exact_report("momo", p, mm.ratios[i], mm.ratios[i + 1]));
    }
    return out;
}

} // namespace scl
