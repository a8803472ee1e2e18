#include "scl/stability.hpp"

#include "scl/cliques.hpp"
#include "scl/error.hpp"
#include "scl/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace scl {

std::string to_string(SearchMode mode) { return mode == SearchMode::exhaustive ? "exhaustive" : "heuristic"; }

std::string to_string(StabilityVerdict verdict)
{
    switch (verdict) {
    case StabilityVerdict::premise_failed: return "premise-failed";
    case StabilityVerdict::witnessed: return "witnessed";
    case StabilityVerdict::heuristic_miss: return "heuristic-miss";
    case StabilityVerdict::exhaustive_miss: return "exhaustive-miss";
    }
    return "unknown";
}

Rational stability_alpha_max(int r) { return Rational(1, checked_mul(1024, pow(Rational(r), 6).num())); }

StabilityThresholds stability_thresholds(int n, int r, const Rational& alpha)
{
    const double root = std::cbrt(alpha.to_double());
    StabilityThresholds t;
    t.order_min = (1.0 - 3.0 * root) * n;
    t.degree_min = (1.0 - 1.0 / r - 6.0 * root) * n;
    t.boundary = alpha == Rational(0);
    return t;
}

namespace {

constexpr double kBoundaryEps = 1e-7;

bool exceeds(double value, double threshold, bool boundary, int n)
{
    if (boundary)
        return value >= threshold - kBoundaryEps * std::max(1, n);
    return value > threshold;
}

void require_params(int r, const Rational& alpha)
{
    if (r < 2)
        throw std::invalid_argument("stability requires r >= 2");
    if (alpha < Rational(0))
        throw std::invalid_argument("stability requires alpha >= 0");
}

// Min degree of the subgraph induced by `mask` (n <= 64).
int induced_min_degree(const Graph& g, std::uint64_t mask)
{
    int best = g.order();
    for (std::uint64_t x = mask; x != 0; x &= x - 1) {
        int v = std::countr_zero(x);
        best = std::min(best, std::popcount(g.row64(v) & mask));
    }
    return best;
}

StabilityWitness make_witness(const Graph& g, const std::vector<int>& verts,
                              const std::vector<std::vector<int>>& local_classes)
{
    StabilityWitness w;
    w.vertices = VertexSet::from_list(g.order(), verts);
    for (const auto& cls : local_classes) {
        std::vector<int> mapped;
        for (int i : cls)
            mapped.push_back(verts[static_cast<std::size_t>(i)]);
        w.partition.push_back(std::move(mapped));
    }
    w.order = static_cast<int>(verts.size());
    w.min_degree = g.order();
    for (int u : verts) {
        int d = 0;
        for (int v : verts)
            d += g.adjacent(u, v) ? 1 : 0;
        w.min_degree = std::min(w.min_degree, d);
    }
    return w;
}

std::optional<StabilityWitness> exhaustive_search(const Graph& g, int r, const StabilityThresholds& th)
{
    const int n = g.order();
    for (int k = n; k >= 1; --k) {
        if (!exceeds(k, th.order_min, th.boundary, n))
            break;
        // Gosper's hack: k-subsets in increasing mask order.
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            if (exceeds(induced_min_degree(g, mask), th.degree_min, th.boundary, n)) {
                std::vector<int> verts;
                for (std::uint64_t x = mask; x != 0; x &= x - 1)
                    verts.push_back(std::countr_zero(x));
                Graph sub = g.induced(VertexSet::from_list(n, verts));
                if (auto classes = proper_coloring(sub, r))
                    return make_witness(g, verts, *classes);
            }
            std::uint64_t c = mask & (~mask + 1);
            std::uint64_t rr = mask + c;
            mask = (((rr ^ mask) >> 2) / c) | rr;
        }
    }
    return std::nullopt;
}

std::optional<StabilityWitness> heuristic_search(const Graph& g, int r, const StabilityThresholds& th)
{
    const int n = g.order();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    auto cost = [&](int v, int c) {
        int k = 0;
        for (int u = 0; u < n; ++u)
            if (u != v && cls[static_cast<std::size_t>(u)] == c && g.adjacent(u, v))
                ++k;
        return k;
    };
    auto best_class = [&](int v) {
        int best = 0;
        int best_cost = cost(v, 0);
        for (int c = 1; c < r; ++c) {
            int k = cost(v, c);
            if (k < best_cost) {
                best = c;
                best_cost = k;
            }
        }
        return std::pair{best, best_cost};
    };

    for (int v : order)
        cls[static_cast<std::size_t>(v)] = best_class(v).first;

    // Single-vertex moves; each accepted move strictly lowers the number of
    // intra-class edges.
    for (bool moved = true; moved;) {
        moved = false;
        for (int v = 0; v < n; ++v) {
            auto [c, k] = best_class(v);
            if (k < cost(v, cls[static_cast<std::size_t>(v)])) {
                cls[static_cast<std::size_t>(v)] = c;
                moved = true;
            }
        }
    }

    std::vector<bool> keep(static_cast<std::size_t>(n), true);
    for (int v = 0; v < n; ++v)
        if (cost(v, cls[static_cast<std::size_t>(v)]) > 0)
            keep[static_cast<std::size_t>(v)] = false;

    auto inner_degree = [&](int v) {
        int d = 0;
        for (int u = 0; u < n; ++u)
            if (keep[static_cast<std::size_t>(u)] && g.adjacent(u, v))
                ++d;
        return d;
    };
    for (bool peeled = true; peeled;) {
        peeled = false;
        for (int v = 0; v < n; ++v) {
            if (keep[static_cast<std::size_t>(v)] && !exceeds(inner_degree(v), th.degree_min, th.boundary, n)) {
                keep[static_cast<std::size_t>(v)] = false;
                peeled = true;
                break;
            }
        }
    }

    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
        if (keep[static_cast<std::size_t>(v)])
            verts.push_back(v);
    if (verts.empty() || !exceeds(static_cast<double>(verts.size()), th.order_min, th.boundary, n))
        return std::nullopt;

    std::vector<std::vector<int>> local(static_cast<std::size_t>(r));
    for (std::size_t i = 0; i < verts.size(); ++i)
        local[static_cast<std::size_t>(cls[static_cast<std::size_t>(verts[i])])].push_back(static_cast<int>(i));
    std::erase_if(local, [](const auto& c) { return c.empty(); });
    StabilityWitness w = make_witness(g, verts, local);
    if (!exceeds(w.min_degree, th.degree_min, th.boundary, n))
        return std::nullopt;
    return w;
}

} // namespace

bool stability_premise(const Graph& g, int r, const Rational& alpha, const Tolerance& tol)
{
    require_params(r, alpha);
    if (alpha > stability_alpha_max(r))
        return false;
    if (!is_kfree(g, r + 1))
        return false;
    const double need = (1.0 - 1.0 / r - alpha.to_double()) * g.order();
    return spectral_radius(g) >= need - tol.holds_rel * std::max(1.0, need);
}

std::optional<StabilityWitness> find_stability_witness(const Graph& g, int r, const Rational& alpha, SearchMode mode)
{
    if (!stability_premise(g, r, alpha))
        throw DomainError("stability premise does not hold");
    if (mode == SearchMode::exhaustive && g.order() > kExhaustiveWitnessMaxN)
        throw DomainError("exhaustive witness search is limited to n <= " + std::to_string(kExhaustiveWitnessMaxN));
    const auto th = stability_thresholds(g.order(), r, alpha);
    return mode == SearchMode::exhaustive ? exhaustive_search(g, r, th) : heuristic_search(g, r, th);
}

bool verify_witness(const Graph& g, int r, const Rational& alpha, const StabilityWitness& w)
{
    require_params(r, alpha);
    const int n = g.order();
    if (w.vertices.universe() != n)
        throw std::invalid_argument("witness vertex set does not match the graph order");
    if (static_cast<int>(w.partition.size()) > r)
        throw std::invalid_argument("witness has more than r classes");
    VertexSet covered(n);
    int total = 0;
    for (const auto& cls : w.partition) {
        for (int v : cls) {
            if (v < 0 || v >= n || !w.vertices.contains(v))
                throw std::invalid_argument("witness class vertex outside the witness set");
            if (covered.contains(v))
                throw std::invalid_argument("witness classes overlap");
            covered.insert(v);
            ++total;
        }
    }
    if (total != w.vertices.size())
        throw std::invalid_argument("witness classes do not cover the witness set");

    for (const auto& cls : w.partition)
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (g.adjacent(cls[i], cls[j]))
                    return false;

    const auto verts = w.vertices.members();
    int min_degree = n;
    for (int u : verts) {
        int d = 0;
        for (int v : verts)
            d += g.adjacent(u, v) ? 1 : 0;
        min_degree = std::min(min_degree, d);
    }
    const auto th = stability_thresholds(n, r, alpha);
    return exceeds(static_cast<double>(verts.size()), th.order_min, th.boundary, n) &&
           exceeds(min_degree, th.degree_min, th.boundary, n);
}

StabilityReport stability_search(const Graph& g, int r, const Rational& alpha, SearchMode mode)
{
    StabilityReport rep;
    rep.r = r;
    rep.alpha = alpha;
    rep.mode = mode;
    rep.thresholds = stability_thresholds(g.order(), r, alpha);
    rep.premise_ok = stability_premise(g, r, alpha);
    if (!rep.premise_ok) {
        rep.verdict = StabilityVerdict::premise_failed;
        return rep;
    }
    rep.witness = find_stability_witness(g, r, alpha, mode);
    if (rep.witness)
        rep.verdict = StabilityVerdict::witnessed;
    else
        rep.verdict = mode == SearchMode::exhaustive ? StabilityVerdict::exhaustive_miss : StabilityVerdict::heuristic_miss;
    return rep;
}

bool niro_premise(const Graph& g, int r, const Rational& beta)
{
    if (r < 2)
        throw std::invalid_argument("niro_premise requires r >= 2");
    if (beta <= Rational(0))
        return false;
    if (beta > Rational(1, checked_mul(512, pow(Rational(r), 6).num())))
        return false;
    if (!is_kfree(g, r + 1))
        return false;
    const i128 n = g.order();
    Rational need = (Rational(r - 1, 2 * r) - beta) * Rational(n * n);
    return Rational(g.size()) >= need;
}

} // namespace scl
