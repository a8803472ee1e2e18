#include "scl/spectral.hpp"

#include "scl/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace scl {

namespace {

constexpr int kMaxSweeps = 100;

// Row-major dense symmetric matrix.
struct Dense {
    int n;
    std::vector<double> a;
    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
};

double off_norm(const Dense& m)
{
    double sum = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            sum += m(i, j) * m(i, j);
    return std::sqrt(2.0 * sum);
}

// Applies the rotation that zeroes m(p,q), accumulating it into v.
void rotate(Dense& m, Dense& v, int p, int q)
{
    const int n = m.n;
    double apq = m(p, q);
    double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
    double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
    double c = 1.0 / std::sqrt(t * t + 1.0);
    double s = t * c;
    double tau = s / (1.0 + c);

    m(p, p) -= t * apq;
    m(q, q) += t * apq;
    m(p, q) = m(q, p) = 0.0;
    for (int k = 0; k < n; ++k) {
        if (k == p || k == q)
            continue;
        double akp = m(k, p);
        double akq = m(k, q);
        double nkp = akp - s * (akq + tau * akp);
        double nkq = akq + s * (akp - tau * akq);
        m(k, p) = m(p, k) = nkp;
        m(k, q) = m(q, k) = nkq;
    }
    for (int k = 0; k < n; ++k) {
        double vkp = v(k, p);
        double vkq = v(k, q);
        v(k, p) = vkp - s * (vkq + tau * vkp);
        v(k, q) = vkq + s * (vkp - tau * vkq);
    }
}

} // namespace

Spectrum spectrum(const Graph& g, double off_tol)
{
    const int n = g.order();
    if (n < 1)
        throw std::invalid_argument("spectrum of an empty vertex set");

    Dense m{n, std::vector<double>(static_cast<std::size_t>(n * n), 0.0)};
    Dense v{n, std::vector<double>(static_cast<std::size_t>(n * n), 0.0)};
    for (int i = 0; i < n; ++i) {
        v(i, i) = 1.0;
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j))
                m(i, j) = 1.0;
    }

    const double threshold = off_tol * n;
    int sweep = 0;
    for (; sweep < kMaxSweeps && off_norm(m) > threshold; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = m(p, q);
                if (apq == 0.0)
                    continue;
                // Underflow guard: once the element is negligible against both
                // diagonal entries, drop it instead of rotating.
                double gval = 100.0 * std::fabs(apq);
                if (sweep > 3 && std::fabs(m(p, p)) + gval == std::fabs(m(p, p)) &&
                    std::fabs(m(q, q)) + gval == std::fabs(m(q, q))) {
                    m(p, q) = m(q, p) = 0.0;
                    continue;
                }
                rotate(m, v, p, q);
            }
        }
    }
    if (off_norm(m) > threshold)
        throw ConvergenceError("Jacobi sweeps did not converge within " + std::to_string(kMaxSweeps) + " sweeps");

    // Residual of each eigenpair against the original adjacency.
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        double lambda = m(k, k);
        double sq = 0.0;
        for (int i = 0; i < n; ++i) {
            double ax = 0.0;
            for (int j = 0; j < n; ++j)
                if (g.adjacent(i, j))
                    ax += v(j, k);
            double d = ax - lambda * v(i, k);
            sq += d * d;
        }
        worst = std::max(worst, std::sqrt(sq));
    }
    if (worst > kResidualTol * n)
        throw ConvergenceError("eigen residual " + std::to_string(worst) + " exceeds budget");

    Spectrum out;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out.eigenvalues[static_cast<std::size_t>(k)] = m(k, k);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
    out.residual_bound = worst;
    return out;
}

double spectral_radius(const Graph& g) { return spectrum(g).radius(); }

std::vector<EigenGroup> multiplicities(const Spectrum& s, double tol)
{
    std::vector<EigenGroup> out;
    double sum = 0.0;
    int count = 0;
    double prev = 0.0;
    for (double x : s.eigenvalues) {
        if (count > 0 && prev - x > tol) {
            out.push_back({sum / count, count});
            sum = 0.0;
            count = 0;
        }
        sum += x;
        ++count;
        prev = x;
    }
    if (count > 0)
        out.push_back({sum / count, count});
    return out;
}

WalkProfile walk_counts(const Graph& g, int max_length)
{
    if (max_length < 1)
        throw std::invalid_argument("walk length must be at least 1");
    const int n = g.order();
    WalkProfile out;
    out.per_vertex.reserve(static_cast<std::size_t>(max_length));
    out.per_vertex.emplace_back(static_cast<std::size_t>(n), i128{1});
    out.totals.push_back(n);
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        nbrs[static_cast<std::size_t>(u)] = g.neighbors(u);
    for (int l = 2; l <= max_length; ++l) {
        const auto& prev = out.per_vertex.back();
        std::vector<i128> next(static_cast<std::size_t>(n), 0);
        i128 total = 0;
        for (int u = 0; u < n; ++u) {
            i128 acc = 0;
            for (int w : nbrs[static_cast<std::size_t>(u)])
                acc = checked_add(acc, prev[static_cast<std::size_t>(w)]);
            next[static_cast<std::size_t>(u)] = acc;
            total = checked_add(total, acc);
        }
        out.per_vertex.push_back(std::move(next));
        out.totals.push_back(total);
    }
    return out;
}

RayleighBounds rayleigh_lower_bounds(const Graph& g)
{
    const double n = g.order();
    double sq = 0.0;
    for (int d : g.degrees())
        sq += static_cast<double>(d) * d;
    return {2.0 * static_cast<double>(g.size()) / n, std::sqrt(sq / n)};
}

namespace {

// Walk totals as mantissa * 2^exponent. Exact 128-bit recursion runs until it
// would overflow; afterwards the per-vertex vector is renormalized each step.
class WalkStream {
public:
    explicit WalkStream(const Graph& g) : g_(g), exact_(static_cast<std::size_t>(g.order()), 1)
    {
        for (int u = 0; u < g.order(); ++u)
            nbrs_.push_back(g.neighbors(u));
    }

    // Total for the current length, as a long double ratio-ready value pair.
    long double mantissa() const { return mantissa_; }
    long exponent() const { return exponent_; }
    bool exact() const { return !scaled_mode_; }

    void start()
    {
        mantissa_ = static_cast<long double>(g_.order());
        exponent_ = 0;
    }

    void advance()
    {
        const std::size_t n = exact_.size();
        if (!scaled_mode_) {
            try {
                std::vector<i128> next(n, 0);
                i128 total = 0;
                for (std::size_t u = 0; u < n; ++u) {
                    i128 acc = 0;
                    for (int w : nbrs_[u])
                        acc = checked_add(acc, exact_[static_cast<std::size_t>(w)]);
                    next[u] = acc;
                    total = checked_add(total, acc);
                }
                exact_ = std::move(next);
                mantissa_ = static_cast<long double>(total);
                exponent_ = 0;
                return;
            } catch (const OverflowError&) {
                scaled_mode_ = true;
                scaled_.resize(n);
                for (std::size_t u = 0; u < n; ++u)
                    scaled_[u] = static_cast<long double>(exact_[u]);
                scale_exp_ = 0;
            }
        }
        std::vector<long double> next(n, 0.0L);
        long double total = 0.0L;
        long double peak = 0.0L;
        for (std::size_t u = 0; u < n; ++u) {
            long double acc = 0.0L;
            for (int w : nbrs_[u])
                acc += scaled_[static_cast<std::size_t>(w)];
            next[u] = acc;
            total += acc;
            peak = std::max(peak, acc);
        }
        int shift = 0;
        std::frexp(peak, &shift);
        for (auto& x : next)
            x = std::ldexp(x, -shift);
        scaled_ = std::move(next);
        mantissa_ = total;
        exponent_ = scale_exp_;
        scale_exp_ += shift;
    }

private:
    const Graph& g_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<i128> exact_;
    std::vector<long double> scaled_;
    long scale_exp_ = 0;
    bool scaled_mode_ = false;
    long double mantissa_ = 0.0L;
    long exponent_ = 0;
};

} // namespace

WalkRatioReport walk_ratio_limit_check(const Graph& g, int q, double tol, int max_length)
{
    if (q < 0)
        throw std::invalid_argument("walk ratio offset q must be non-negative");
    if (!is_connected(g))
        throw DomainError("walk ratio limit requires a connected graph");
    if (is_bipartite(g))
        throw DomainError("walk ratio limit requires a non-bipartite graph");

    const long double mu = spectral_radius(g);
    WalkRatioReport report;
    report.target = static_cast<double>(std::pow(mu, static_cast<long double>(q + 1)));
    const long double target = std::pow(mu, static_cast<long double>(q + 1));
    const long double budget = static_cast<long double>(tol) * std::max<long double>(1.0L, target);

    // history[i] holds w_{i+1} as (mantissa, exponent).
    std::vector<std::pair<long double, long>> history;
    WalkStream stream(g);
    stream.start();
    history.emplace_back(stream.mantissa(), stream.exponent());

    report.best_error = std::numeric_limits<double>::infinity();
    for (int l = 2; l <= max_length; ++l) {
        // Need w_{l+q}; history currently holds w_1..w_{history.size()}.
        while (static_cast<int>(history.size()) < l + q) {
            stream.advance();
            history.emplace_back(stream.mantissa(), stream.exponent());
        }
        const auto& hi = history[static_cast<std::size_t>(l + q - 1)];
        const auto& lo = history[static_cast<std::size_t>(l - 2)];
        long double ratio = (hi.first / lo.first) * std::ldexp(1.0L, static_cast<int>(hi.second - lo.second));
        long double err = std::fabs(ratio - target);
        report.length = l;
        report.error = static_cast<double>(err);
        report.best_error = std::min(report.best_error, report.error);
        report.exact = stream.exact();
        if (err <= budget) {
            report.converged = true;
            return report;
        }
    }
    return report;
}

} // namespace scl
