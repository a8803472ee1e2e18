#include "scl/cliques.hpp"

#include "scl/error.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace scl {

namespace {

// Binomial table C(a, b) for a <= n. Entries that leave the 128-bit range
// are stored as -1 and only throw when a leaf actually needs them.
class Binomials {
public:
    explicit Binomials(int n) : n_(n), table_(static_cast<std::size_t>((n + 1) * (n + 1)), 0)
    {
        for (int a = 0; a <= n; ++a) {
            at(a, 0) = 1;
            for (int b = 1; b <= a; ++b) {
                i128 x = at(a - 1, b - 1);
                i128 y = b <= a - 1 ? at(a - 1, b) : 0;
                i128 sum;
                if (x < 0 || y < 0 || __builtin_add_overflow(x, y, &sum))
                    sum = -1;
                at(a, b) = sum;
            }
        }
    }

    i128 operator()(int a, int b) const
    {
        i128 v = table_[static_cast<std::size_t>(a * (n_ + 1) + b)];
        if (v < 0)
            throw OverflowError("binomial coefficient exceeds 128-bit range");
        return v;
    }

private:
    i128& at(int a, int b) { return table_[static_cast<std::size_t>(a * (n_ + 1) + b)]; }

    int n_;
    std::vector<i128> table_;
};

// Multi-word vertex set for graphs above 64 vertices.
struct Bits {
    std::vector<std::uint64_t> w;

    bool empty() const
    {
        return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
    }
    bool test(int v) const { return (w[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1u; }
    void reset(int v) { w[static_cast<std::size_t>(v / 64)] &= ~(std::uint64_t{1} << (v % 64)); }
    int count_and(std::span<const std::uint64_t> row) const
    {
        int c = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            c += std::popcount(w[i] & row[i]);
        return c;
    }
    Bits and_with(std::span<const std::uint64_t> row) const
    {
        Bits out{w};
        for (std::size_t i = 0; i < w.size(); ++i)
            out.w[i] &= row[i];
        return out;
    }
    Bits minus(std::span<const std::uint64_t> row) const
    {
        Bits out{w};
        for (std::size_t i = 0; i < w.size(); ++i)
            out.w[i] &= ~row[i];
        return out;
    }
    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::uint64_t x = w[i]; x != 0; x &= x - 1)
                f(static_cast<int>(i * 64) + std::countr_zero(x));
    }
};

class PivotCounter {
public:
    PivotCounter(const Graph& g, bool per_vertex)
        : g_(g), binom_(g.order()), counts_(static_cast<std::size_t>(g.order() + 1), 0)
    {
        if (per_vertex)
            vertex_.assign(static_cast<std::size_t>(g.order()),
                           std::vector<i128>(static_cast<std::size_t>(g.order() + 1), 0));
    }

    void run()
    {
        if (g_.row_words() == 1) {
            std::uint64_t all = g_.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g_.order()) - 1;
            expand_word(all);
        } else {
            Bits all{std::vector<std::uint64_t>(static_cast<std::size_t>(g_.row_words()), 0)};
            for (int v = 0; v < g_.order(); ++v)
                all.w[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
            expand_bits(all);
        }
    }

    std::vector<i128>& counts() { return counts_; }
    std::vector<std::vector<i128>>& vertex() { return vertex_; }

private:
    void leaf()
    {
        const int h = static_cast<int>(held_.size());
        const int q = static_cast<int>(pivots_.size());
        for (int i = 0; i <= q; ++i) {
            if (h + i == 0)
                continue;
            auto& slot = counts_[static_cast<std::size_t>(h + i)];
            slot = checked_add(slot, binom_(q, i));
        }
        if (vertex_.empty())
            return;
        for (int u : held_) {
            auto& row = vertex_[static_cast<std::size_t>(u)];
            for (int i = 0; i <= q; ++i)
                row[static_cast<std::size_t>(h + i)] = checked_add(row[static_cast<std::size_t>(h + i)], binom_(q, i));
        }
        for (int u : pivots_) {
            auto& row = vertex_[static_cast<std::size_t>(u)];
            for (int i = 1; i <= q; ++i)
                row[static_cast<std::size_t>(h + i)] =
                    checked_add(row[static_cast<std::size_t>(h + i)], binom_(q - 1, i - 1));
        }
    }

    void expand_word(std::uint64_t cand)
    {
        if (cand == 0) {
            leaf();
            return;
        }
        int pivot = -1;
        int best = -1;
        for (std::uint64_t x = cand; x != 0; x &= x - 1) {
            int v = std::countr_zero(x);
            int c = std::popcount(cand & g_.row64(v));
            if (c > best) {
                best = c;
                pivot = v;
            }
        }
        const std::uint64_t prow = g_.row64(pivot);
        pivots_.push_back(pivot);
        expand_word(cand & prow);
        pivots_.pop_back();

        std::uint64_t rest = cand & ~(std::uint64_t{1} << pivot);
        std::uint64_t branch = rest & ~prow;
        for (; branch != 0; branch &= branch - 1) {
            int v = std::countr_zero(branch);
            held_.push_back(v);
            expand_word(rest & g_.row64(v));
            held_.pop_back();
            rest &= ~(std::uint64_t{1} << v);
        }
    }

    void expand_bits(const Bits& cand)
    {
        if (cand.empty()) {
            leaf();
            return;
        }
        int pivot = -1;
        int best = -1;
        cand.for_each([&](int v) {
            int c = cand.count_and(g_.row(v));
            if (c > best) {
                best = c;
                pivot = v;
            }
        });
        pivots_.push_back(pivot);
        expand_bits(cand.and_with(g_.row(pivot)));
        pivots_.pop_back();

        Bits rest = cand;
        rest.reset(pivot);
        Bits branch = rest.minus(g_.row(pivot));
        branch.for_each([&](int v) {
            held_.push_back(v);
            expand_bits(rest.and_with(g_.row(v)));
            held_.pop_back();
            rest.reset(v);
        });
    }

    const Graph& g_;
    Binomials binom_;
    std::vector<i128> counts_;
    std::vector<std::vector<i128>> vertex_;
    std::vector<int> held_;
    std::vector<int> pivots_;
};

int omega_of(const std::vector<i128>& counts)
{
    int omega = 1;
    for (int s = 1; s < static_cast<int>(counts.size()); ++s)
        if (counts[static_cast<std::size_t>(s)] > 0)
            omega = s;
    return omega;
}

} // namespace

CliqueProfile clique_counts(const Graph& g)
{
    PivotCounter counter(g, false);
    counter.run();
    CliqueProfile out;
    out.counts = std::move(counter.counts());
    out.omega = omega_of(out.counts);
    return out;
}

VertexCliqueProfile vertex_clique_counts(const Graph& g)
{
    PivotCounter counter(g, true);
    counter.run();
    VertexCliqueProfile out;
    out.omega = omega_of(counter.counts());
    out.per_vertex = std::move(counter.vertex());
    for (auto& row : out.per_vertex)
        row.resize(static_cast<std::size_t>(out.omega + 1));
    return out;
}

int clique_number(const Graph& g) { return clique_counts(g).omega; }

bool is_kfree(const Graph& g, int k)
{
    if (k < 2)
        throw std::invalid_argument("forbidden clique size must be at least 2");
    return clique_number(g) < k;
}

MoMoReport moon_moser_check(const CliqueProfile& profile, int n)
{
    MoMoReport out;
    for (int t = 1; t < profile.omega; ++t) {
        Rational rho = Rational(checked_mul(t + 1, profile.k(t + 1)), checked_mul(t, profile.k(t))) - Rational(n, t);
        if (!out.ratios.empty() && rho < out.ratios.back())
            out.monotone = false;
        out.ratios.push_back(rho);
    }
    return out;
}

MoMoReport moon_moser_check(const Graph& g) { return moon_moser_check(clique_counts(g), g.order()); }

MultipartiteShape is_complete_multipartite_plus_isolated(const Graph& g)
{
    const int n = g.order();
    MultipartiteShape out;
    VertexSet core(n);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0)
            out.isolated.push_back(v);
        else
            core.insert(v);
    }
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    const auto members = core.members();
    // Non-adjacency within the core must be an equivalence relation.
    for (int u : members) {
        if (cls[static_cast<std::size_t>(u)] >= 0)
            continue;
        std::vector<int> group;
        for (int v : members)
            if (!g.adjacent(u, v))
                group.push_back(v);
        for (int v : group) {
            if (cls[static_cast<std::size_t>(v)] >= 0)
                return {false, {}, {}};
            cls[static_cast<std::size_t>(v)] = static_cast<int>(out.classes.size());
        }
        out.classes.push_back(std::move(group));
    }
    for (int u : members)
        for (int v : members)
            if (u != v && (cls[static_cast<std::size_t>(u)] == cls[static_cast<std::size_t>(v)]) == g.adjacent(u, v))
                return {false, {}, {}};
    out.accepted = true;
    return out;
}

std::optional<std::vector<std::vector<int>>> proper_coloring(const Graph& g, int r)
{
    if (r < 1)
        throw std::invalid_argument("colour count must be at least 1");
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);

    // Iterative backtracking; a vertex may open at most one new colour.
    std::vector<int> max_used(static_cast<std::size_t>(n + 1), -1);
    int v = 0;
    while (v >= 0 && v < n) {
        auto& c = colour[static_cast<std::size_t>(v)];
        int limit = std::min(r - 1, max_used[static_cast<std::size_t>(v)] + 1);
        bool placed = false;
        for (++c; c <= limit; ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = !(g.adjacent(u, v) && colour[static_cast<std::size_t>(u)] == c);
            if (ok) {
                placed = true;
                break;
            }
        }
        if (placed) {
            max_used[static_cast<std::size_t>(v + 1)] = std::max(max_used[static_cast<std::size_t>(v)], c);
            ++v;
        } else {
            c = -1;
            --v;
        }
    }
    if (v < 0)
        return std::nullopt;
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(r));
    for (int u = 0; u < n; ++u)
        classes[static_cast<std::size_t>(colour[static_cast<std::size_t>(u)])].push_back(u);
    std::erase_if(classes, [](const auto& c) { return c.empty(); });
    return classes;
}

} // namespace scl
