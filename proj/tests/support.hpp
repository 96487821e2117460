#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "turan/compression.hpp"
#include "turan/generators.hpp"
#include "turan/graph.hpp"
#include "turan/turan_math.hpp"

namespace turan::test {

inline Graph complete(std::size_t n, GraphOptions opts = {})
{
    Graph g(n, opts);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph cycle(std::size_t n, GraphOptions opts = {})
{
    Graph g(n, opts);
    for (Vertex v = 0; v < n; ++v)
        g.add_edge(v, static_cast<Vertex>((v + 1) % n));
    return g;
}

inline Graph path(std::size_t n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph star(std::size_t leaves)
{
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

inline Graph petersen()
{
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

inline Graph disjoint_triangles(std::size_t count)
{
    Graph g(3 * count);
    for (Vertex t = 0; t < count; ++t) {
        g.add_edge(3 * t, 3 * t + 1);
        g.add_edge(3 * t + 1, 3 * t + 2);
        g.add_edge(3 * t, 3 * t + 2);
    }
    return g;
}

// t_r(n) - m clamped at zero: the smallest valid budget for g
inline EdgeCount deficit(const Graph &g, std::int64_t r)
{
    const auto t = turan_edge_count(static_cast<std::int64_t>(g.vertex_count()), r);
    return std::max<EdgeCount>(0, t - g.edge_count());
}

// Mixed small instances: random graphs, perturbed and planted Turán graphs,
// any tau. Everything derives from the seed.
inline TuranCliqueInstance small_instance(std::uint64_t seed, std::int64_t max_n)
{
    Rng rng(seed);
    const auto n = static_cast<std::int64_t>(4 + rng.below(static_cast<std::uint64_t>(max_n - 3)));
    const auto r = static_cast<std::int64_t>(2 + rng.below(static_cast<std::uint64_t>(n / 2)));
    const auto ell = static_cast<std::int64_t>(2 + rng.below(static_cast<std::uint64_t>(n - 1)));
    const auto k = static_cast<EdgeCount>(rng.below(6));
    Graph g;
    switch (rng.below(3)) {
    case 0:
        g = random_graph(static_cast<std::size_t>(n), 0.3 + 0.6 * rng.unit(), rng.next());
        break;
    case 1:
        g = gen_perturbed_turan(n, r, std::min<EdgeCount>(k, turan_edge_count(n, r)), rng.next()).instance.graph();
        break;
    default: {
        // planting keeps C(r+1,2) - 1 Turán edges out of reach
        const EdgeCount removable = turan_edge_count(n, r) - r * (r + 1) / 2 + 1;
        if (removable < 1)
            g = build_turan_graph(n, r);
        else
            g = gen_planted(n, r, std::min<EdgeCount>(k + 2, removable + 1), rng.next()).instance.graph();
        break;
    }
    }
    const EdgeCount budget = deficit(g, r) + k;
    return TuranCliqueInstance(std::move(g), r, budget, ell);
}

inline bool is_clique(const Graph &g, const std::vector<Vertex> &s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j]))
                return false;
    return true;
}

} // namespace turan::test
