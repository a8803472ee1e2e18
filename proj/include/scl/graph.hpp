#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scl {

constexpr int kDefaultVertexCap = 64;
constexpr int kMaxVertexCap = 512;

// Current vertex cap. Defaults to 64; the SCL_MAX_N environment variable
// raises it (up to 512) for multi-word rows.
int vertex_cap();

struct Edge {
    int u;
    int v;
};

// Bit-mask over vertices 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n);

    static VertexSet full(int n);
    static VertexSet from_list(int n, std::span<const int> members);

    int universe() const { return n_; }
    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    int size() const;
    bool empty() const { return size() == 0; }
    std::vector<int> members() const;

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Simple undirected graph stored as fixed-width adjacency bit-rows.
// Immutable after construction.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an edge list. Duplicate edges are merged; loops and
    // out-of-range endpoints throw std::invalid_argument; n above the cap
    // throws CapacityError.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    long long size() const { return m_; }
    int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
    std::span<const int> degrees() const { return degrees_; }
    bool adjacent(int u, int v) const;

    // Words per adjacency row.
    int row_words() const { return words_; }
    std::span<const std::uint64_t> row(int v) const;
    // Single-word row; only valid when row_words() == 1.
    std::uint64_t row64(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    std::vector<int> neighbors(int v) const;
    std::vector<Edge> edges() const;

    Graph induced(const VertexSet& keep) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    Graph(int n, std::vector<std::uint64_t> adj);
    void finish();

    int n_ = 0;
    int words_ = 0;
    long long m_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<int> degrees_;

    friend Graph complement(const Graph& g);
    friend Graph from_adjacency(int n, std::span<const std::uint64_t> rows);
};

// Builds a graph with n <= 64 directly from single-word rows. Rows must be
// symmetric with zero diagonal.
Graph from_adjacency(int n, std::span<const std::uint64_t> rows);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);

// Balanced complete r-partite graph; the larger classes take the lowest
// class indices.
Graph turan_graph(int r, int n);

// Complete multipartite graph on the given class sizes followed by
// `isolated` degree-0 vertices.
Graph complete_multipartite(std::span<const int> parts, int isolated = 0);

Graph complement(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// graph6 codec. parse throws ParseError on malformed input and
// CapacityError when the decoded order exceeds the cap.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// Each unordered pair is an edge with probability p, drawn from
// std::mt19937_64 seeded with `seed`.
Graph random_graph(int n, double p, std::uint64_t seed);

// SplitMix64 finalizer; used to derive per-item seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

} // namespace scl
