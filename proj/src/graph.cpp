#include "scl/graph.hpp"

#include "scl/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace scl {

namespace {

constexpr int kWordBits = 64;

int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

void check_order(int n)
{
    if (n < 1)
        throw std::invalid_argument("graph order must be at least 1");
    if (n > vertex_cap())
        throw CapacityError("graph order " + std::to_string(n) + " exceeds vertex cap " +
                            std::to_string(vertex_cap()));
}

} // namespace

int vertex_cap()
{
    static const int cap = [] {
        const char* env = std::getenv("SCL_MAX_N");
        if (env == nullptr || *env == '\0')
            return kDefaultVertexCap;
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || value < 1)
            return kDefaultVertexCap;
        return static_cast<int>(std::min<long>(value, kMaxVertexCap));
    }();
    return cap;
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int n) : n_(n), words_(static_cast<std::size_t>(words_for(n)), 0) {}

VertexSet VertexSet::full(int n)
{
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        s.insert(v);
    return s;
}

VertexSet VertexSet::from_list(int n, std::span<const int> members)
{
    VertexSet s(n);
    for (int v : members) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
        s.insert(v);
    }
    return s;
}

bool VertexSet::contains(int v) const
{
    if (v < 0 || v >= n_)
        return false;
    return (words_[static_cast<std::size_t>(v / kWordBits)] >> (v % kWordBits)) & 1u;
}

void VertexSet::insert(int v) { words_[static_cast<std::size_t>(v / kWordBits)] |= std::uint64_t{1} << (v % kWordBits); }

void VertexSet::erase(int v) { words_[static_cast<std::size_t>(v / kWordBits)] &= ~(std::uint64_t{1} << (v % kWordBits)); }

int VertexSet::size() const
{
    int total = 0;
    for (auto w : words_)
        total += std::popcount(w);
    return total;
}

std::vector<int> VertexSet::members() const
{
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (contains(v))
            out.push_back(v);
    return out;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n, std::span<const Edge> edges)
{
    check_order(n);
    n_ = n;
    words_ = words_for(n);
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                        std::to_string(e.v));
        if (e.u == e.v)
            throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
        auto set = [&](int a, int b) {
            adj_[static_cast<std::size_t>(a * words_ + b / kWordBits)] |= std::uint64_t{1} << (b % kWordBits);
        };
        set(e.u, e.v);
        set(e.v, e.u);
    }
    finish();
}

Graph::Graph(int n, std::vector<std::uint64_t> adj) : n_(n), words_(words_for(n)), adj_(std::move(adj)) { finish(); }

void Graph::finish()
{
    degrees_.assign(static_cast<std::size_t>(n_), 0);
    long long twice = 0;
    for (int v = 0; v < n_; ++v) {
        int d = 0;
        for (auto w : row(v))
            d += std::popcount(w);
        degrees_[static_cast<std::size_t>(v)] = d;
        twice += d;
    }
    m_ = twice / 2;
}

bool Graph::adjacent(int u, int v) const
{
    return (adj_[static_cast<std::size_t>(u * words_ + v / kWordBits)] >> (v % kWordBits)) & 1u;
}

std::span<const std::uint64_t> Graph::row(int v) const
{
    return std::span<const std::uint64_t>(adj_).subspan(static_cast<std::size_t>(v * words_),
                                                        static_cast<std::size_t>(words_));
}

std::vector<int> Graph::neighbors(int v) const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u))
            out.push_back(u);
    return out;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v))
                out.push_back({u, v});
    return out;
}

Graph Graph::induced(const VertexSet& keep) const
{
    std::vector<int> verts = keep.members();
    if (verts.empty())
        throw std::invalid_argument("induced subgraph of an empty vertex set");
    if (keep.universe() != n_)
        throw std::invalid_argument("vertex set universe does not match graph order");
    std::vector<Edge> es;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (adjacent(verts[i], verts[j]))
                es.push_back({static_cast<int>(i), static_cast<int>(j)});
    return Graph(static_cast<int>(verts.size()), es);
}

Graph from_adjacency(int n, std::span<const std::uint64_t> rows)
{
    if (n > kWordBits)
        throw std::invalid_argument("from_adjacency requires n <= 64");
    check_order(n);
    return Graph(n, std::vector<std::uint64_t>(rows.begin(), rows.begin() + n));
}

// --------------------------------------------------------------- generators

Graph complete_graph(int n)
{
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            es.push_back({u, v});
    return Graph(n, es);
}

Graph empty_graph(int n) { return Graph(n, std::span<const Edge>{}); }

Graph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v)
        es.push_back({v, (v + 1) % n});
    return Graph(n, es);
}

Graph path_graph(int n)
{
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v)
        es.push_back({v, v + 1});
    return Graph(n, es);
}

Graph star_graph(int leaves)
{
    std::vector<Edge> es;
    for (int v = 1; v <= leaves; ++v)
        es.push_back({0, v});
    return Graph(leaves + 1, es);
}

Graph turan_graph(int r, int n)
{
    if (r < 1 || n < 1 || r > n)
        throw std::invalid_argument("turan_graph requires 1 <= r <= n");
    std::vector<int> parts(static_cast<std::size_t>(r), n / r);
    for (int i = 0; i < n % r; ++i)
        ++parts[static_cast<std::size_t>(i)];
    return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const int> parts, int isolated)
{
    if (isolated < 0)
        throw std::invalid_argument("isolated count must be non-negative");
    if (parts.empty() && isolated == 0)
        throw std::invalid_argument("complete_multipartite needs at least one class or isolated vertex");
    std::vector<int> cls;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("class sizes must be at least 1");
        cls.insert(cls.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
    }
    int core = static_cast<int>(cls.size());
    std::vector<Edge> es;
    for (int u = 0; u < core; ++u)
        for (int v = u + 1; v < core; ++v)
            if (cls[static_cast<std::size_t>(u)] != cls[static_cast<std::size_t>(v)])
                es.push_back({u, v});
    return Graph(core + isolated, es);
}

Graph complement(const Graph& g)
{
    const int n = g.order();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n) * static_cast<std::size_t>(g.row_words()));
    for (int u = 0; u < n; ++u) {
        auto src = g.row(u);
        for (int w = 0; w < g.row_words(); ++w) {
            std::uint64_t bits = ~src[static_cast<std::size_t>(w)];
            int lo = w * kWordBits;
            int valid = std::min(kWordBits, n - lo);
            if (valid < kWordBits)
                bits &= (std::uint64_t{1} << valid) - 1;
            if (u >= lo && u < lo + kWordBits)
                bits &= ~(std::uint64_t{1} << (u - lo));
            adj[static_cast<std::size_t>(u * g.row_words() + w)] = bits;
        }
    }
    return Graph(n, std::move(adj));
}

// ---------------------------------------------------------------- traversal

namespace {

// BFS 2-coloring; colour[v] = -1 for unreached. Returns false on an odd cycle.
bool bfs_colour(const Graph& g, int start, std::vector<int>& colour, int& reached)
{
    std::vector<int> queue{start};
    colour[static_cast<std::size_t>(start)] = 0;
    bool ok = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        ++reached;
        for (int v : g.neighbors(u)) {
            auto& cv = colour[static_cast<std::size_t>(v)];
            if (cv < 0) {
                cv = 1 - colour[static_cast<std::size_t>(u)];
                queue.push_back(v);
            } else if (cv == colour[static_cast<std::size_t>(u)]) {
                ok = false;
            }
        }
    }
    return ok;
}

} // namespace

bool is_connected(const Graph& g)
{
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    int reached = 0;
    bfs_colour(g, 0, colour, reached);
    return reached == g.order();
}

bool is_bipartite(const Graph& g)
{
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    int reached = 0;
    for (int v = 0; v < g.order(); ++v)
        if (colour[static_cast<std::size_t>(v)] < 0 && !bfs_colour(g, v, colour, reached))
            return false;
    return true;
}

// ------------------------------------------------------------------- graph6

namespace {

constexpr int kG6Offset = 63;

int g6_value(char c)
{
    int v = static_cast<unsigned char>(c);
    if (v < 63 || v > 126)
        throw ParseError(std::string("graph6: invalid character code ") + std::to_string(v));
    return v - kG6Offset;
}

} // namespace

Graph parse_graph6(std::string_view line)
{
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw ParseError("graph6: empty line");

    std::size_t pos = 0;
    long long n = 0;
    if (line[0] != '~') {
        n = g6_value(line[0]);
        pos = 1;
    } else if (line.size() >= 2 && line[1] == '~') {
        if (line.size() < 8)
            throw ParseError("graph6: truncated 8-byte order header");
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | g6_value(line[i]);
        pos = 8;
    } else {
        if (line.size() < 4)
            throw ParseError("graph6: truncated 4-byte order header");
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | g6_value(line[i]);
        pos = 4;
    }
    if (n < 1)
        throw ParseError("graph6: order 0 graphs are not supported");
    if (n > vertex_cap())
        throw CapacityError("graph6: order " + std::to_string(n) + " exceeds vertex cap " +
                            std::to_string(vertex_cap()));

    const int order = static_cast<int>(n);
    const long long bits = n * (n - 1) / 2;
    const long long chars = (bits + 5) / 6;
    if (static_cast<long long>(line.size() - pos) != chars)
        throw ParseError("graph6: expected " + std::to_string(chars) + " payload characters, got " +
                         std::to_string(line.size() - pos));

    std::vector<Edge> es;
    long long k = 0;
    for (int v = 1; v < order; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            int chunk = g6_value(line[pos + static_cast<std::size_t>(k / 6)]);
            if ((chunk >> (5 - k % 6)) & 1)
                es.push_back({u, v});
        }
    }
    // Padding bits must be zero.
    if (bits % 6 != 0) {
        int last = g6_value(line.back());
        int pad = static_cast<int>(6 - bits % 6);
        if ((last & ((1 << pad) - 1)) != 0)
            throw ParseError("graph6: non-zero padding bits");
    }
    return Graph(order, es);
}

std::string emit_graph6(const Graph& g)
{
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kG6Offset + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(kG6Offset + ((n >> shift) & 63)));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(kG6Offset + ((n >> shift) & 63)));
    }
    int chunk = 0;
    int filled = 0;
    for (int v = 1; v < g.order(); ++v) {
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kG6Offset + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(kG6Offset + (chunk << (6 - filled))));
    return out;
}

// ------------------------------------------------------------------- random

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph random_graph(int n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    check_order(n);
    std::mt19937_64 rng(seed);
    // Raw 53-bit draws; std::uniform_real_distribution is not bit-stable
    // across standard libraries.
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p)
                es.push_back({u, v});
        }
    }
    return Graph(n, es);
}

} // namespace scl
