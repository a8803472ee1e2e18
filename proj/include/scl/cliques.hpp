#pragma once

#include "scl/graph.hpp"
#include "scl/rational.hpp"

#include <optional>
#include <vector>

namespace scl {

// counts[s] = k_s(G) for s = 0..n (counts[0] is unused and zero).
struct CliqueProfile {
    std::vector<i128> counts;
    int omega = 0;

    // k_s, zero beyond the stored range.
    i128 k(int s) const
    {
        return s >= 0 && s < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(s)] : 0;
    }
};

// per_vertex[u][s] = k_s(u) for s = 0..omega.
struct VertexCliqueProfile {
    std::vector<std::vector<i128>> per_vertex;
    int omega = 0;

    i128 k(int u, int s) const
    {
        const auto& row = per_vertex[static_cast<std::size_t>(u)];
        return s >= 0 && s < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(s)] : 0;
    }
};

// Counts cliques of every size with pivoted recursive expansion over
// neighbourhood bit-intersections. Each leaf of the pivot tree with h held
// and p pivot vertices stands for C(p, i) cliques of size h + i.
CliqueProfile clique_counts(const Graph& g);
VertexCliqueProfile vertex_clique_counts(const Graph& g);

// Moon-Moser ratios rho_t = (t+1) k_{t+1} / (t k_t) - n/t for 1 <= t < omega.
struct MoMoReport {
    std::vector<Rational> ratios; // ratios[t-1] = rho_t
    bool monotone = true;
};

MoMoReport moon_moser_check(const Graph& g);
MoMoReport moon_moser_check(const CliqueProfile& profile, int n);

struct MultipartiteShape {
    bool accepted = false;
    std::vector<std::vector<int>> classes;
    std::vector<int> isolated;
};

// Strips isolated vertices and accepts iff the remainder's complement is a
// disjoint union of cliques. Edgeless graphs are accepted with no classes.
MultipartiteShape is_complete_multipartite_plus_isolated(const Graph& g);

// Deterministic backtracking colouring in vertex order. Returns classes
// (each an independent set, at most r of them, empty ones dropped).
std::optional<std::vector<std::vector<int>>> proper_coloring(const Graph& g, int r);

// True iff omega(g) < k.
bool is_kfree(const Graph& g, int k);

int clique_number(const Graph& g);

} // namespace scl
