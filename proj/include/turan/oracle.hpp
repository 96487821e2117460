#pragma once

#include <cstdint>
#include <vector>

#include "turan/graph.hpp"

// Exhaustive ground truth for tests. Nothing here shares code or pruning
// ideas with the solver.
namespace turan::oracle {

inline constexpr std::size_t clique_cap = 26;
inline constexpr std::int64_t extremal_cap = 7;
inline constexpr std::int64_t uniqueness_cap = 6;

/// Enumerates every clique exactly once; returns the lexicographically first
/// clique of maximum size. Requires n <= 26.
std::vector<Vertex> brute_force_max_clique(const Graph &g);

std::vector<Vertex> brute_force_max_independent_set(const Graph &g);

/// Labelled graph on at most 7 vertices: bit i of adj[v] is the edge {v, i}.
struct SmallGraph {
    int n = 0;
    std::uint8_t adj[extremal_cap] = {};

    int edge_count() const;
    int clique_number() const;
};

SmallGraph to_small_graph(const Graph &g);

/// Minimum edge mask over all vertex relabellings; equal for two graphs iff
/// they are isomorphic.
std::uint32_t canonical_form(const SmallGraph &g);

struct ExtremalEntry {
    std::int64_t r = 0;
    EdgeCount max_edges = 0;
    // number of labelled K_{r+1}-free graphs attaining max_edges
    std::size_t maximizer_count = 0;
    // distinct canonical forms among the maximizers; filled for n <= 6
    std::vector<std::uint32_t> maximizer_forms;
};

/// For every r in 1..n, the maximum edge count of a K_{r+1}-free graph on n
/// labelled vertices, by enumerating all 2^C(n,2) graphs. Requires n <= 7.
std::vector<ExtremalEntry> extremal_table(std::int64_t n);

EdgeCount max_edges_clique_free(std::int64_t n, std::int64_t r);

} // namespace turan::oracle
