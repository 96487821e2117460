#include "turan/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace turan::oracle {

namespace {

struct CliqueEnumerator {
    std::vector<std::uint32_t> adj;
    std::vector<Vertex> current;
    std::vector<Vertex> best;

    // candidates: vertices above the last one added, adjacent to all of current
    void visit(std::uint32_t candidates)
    {
        if (current.size() > best.size())
            best = current;
        while (candidates != 0) {
            const auto v = static_cast<Vertex>(std::countr_zero(candidates));
            candidates &= candidates - 1;
            current.push_back(v);
            visit(candidates & adj[v]);
            current.pop_back();
        }
    }
};

int clique_number_rec(const std::uint8_t *adj, std::uint32_t candidates)
{
    int best = 0;
    while (candidates != 0) {
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        best = std::max(best, 1 + clique_number_rec(adj, candidates & adj[v]));
    }
    return best;
}

struct PairIndex {
    int n;
    std::vector<std::pair<int, int>> pairs;

    explicit PairIndex(int n_) :
        n(n_)
    {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                pairs.emplace_back(i, j);
    }

    SmallGraph decode(std::uint32_t mask) const
    {
        SmallGraph g;
        g.n = n;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1U) {
                g.adj[pairs[b].first] |= static_cast<std::uint8_t>(1U << pairs[b].second);
                g.adj[pairs[b].second] |= static_cast<std::uint8_t>(1U << pairs[b].first);
            }
        return g;
    }
};

} // namespace

std::vector<Vertex> brute_force_max_clique(const Graph &g)
{
    const std::size_t n = g.vertex_count();
    if (n > clique_cap)
        throw std::invalid_argument("brute-force clique oracle is capped at " + std::to_string(clique_cap) +
                                    " vertices");
    CliqueEnumerator e;
    e.adj.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = v + 1; u < n; ++u)
            if (g.has_edge(static_cast<Vertex>(v), static_cast<Vertex>(u)))
                e.adj[v] |= std::uint32_t{1} << u;
    const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    e.visit(all);
    return e.best;
}

std::vector<Vertex> brute_force_max_independent_set(const Graph &g)
{
    return brute_force_max_clique(complement(g));
}

int SmallGraph::edge_count() const
{
    int twice = 0;
    for (int v = 0; v < n; ++v)
        twice += std::popcount(adj[v]);
    return twice / 2;
}

int SmallGraph::clique_number() const
{
    // adjacency restricted to higher ids so each clique is counted once
    std::uint8_t up[extremal_cap] = {};
    for (int v = 0; v < n; ++v)
        up[v] = static_cast<std::uint8_t>(adj[v] & ~((1U << (v + 1)) - 1));
    return clique_number_rec(up, (1U << n) - 1);
}

SmallGraph to_small_graph(const Graph &g)
{
    if (static_cast<std::int64_t>(g.vertex_count()) > extremal_cap)
        throw std::invalid_argument("small graphs have at most 7 vertices");
    SmallGraph out;
    out.n = static_cast<int>(g.vertex_count());
    for (const Edge &e : g.edges()) {
        out.adj[e.u] |= static_cast<std::uint8_t>(1U << e.v);
        out.adj[e.v] |= static_cast<std::uint8_t>(1U << e.u);
    }
    return out;
}

std::uint32_t canonical_form(const SmallGraph &g)
{
    std::vector<int> perm(static_cast<std::size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 0);
    const PairIndex index(g.n);
    std::uint32_t best = ~std::uint32_t{0};
    do {
        std::uint32_t mask = 0;
        for (std::size_t b = 0; b < index.pairs.size(); ++b) {
            const auto [i, j] = index.pairs[b];
            if ((g.adj[perm[static_cast<std::size_t>(i)]] >> perm[static_cast<std::size_t>(j)]) & 1U)
                mask |= std::uint32_t{1} << b;
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<ExtremalEntry> extremal_table(std::int64_t n)
{
    if (n < 1 || n > extremal_cap)
        throw std::invalid_argument("extremal enumeration needs 1 <= n <= 7");
    const PairIndex index(static_cast<int>(n));
    const std::uint32_t graphs = std::uint32_t{1} << index.pairs.size();

    // best edge count among graphs whose clique number is exactly w
    std::vector<int> best_by_omega(static_cast<std::size_t>(n) + 1, -1);
    for (std::uint32_t mask = 0; mask < graphs; ++mask) {
        const auto g = index.decode(mask);
        const auto w = static_cast<std::size_t>(g.clique_number());
        best_by_omega[w] = std::max(best_by_omega[w], std::popcount(mask));
    }

    std::vector<ExtremalEntry> table;
    int running = -1;
    for (std::int64_t r = 1; r <= n; ++r) {
        running = std::max(running, best_by_omega[static_cast<std::size_t>(r)]);
        ExtremalEntry entry;
        entry.r = r;
        entry.max_edges = running;
        table.push_back(entry);
    }

    for (std::uint32_t mask = 0; mask < graphs; ++mask) {
        const int edges = std::popcount(mask);
        // only graphs matching some maximum matter; skip the clique search otherwise
        if (std::none_of(table.begin(), table.end(), [&](const ExtremalEntry &e) { return e.max_edges == edges; }))
            continue;
        const auto g = index.decode(mask);
        const int w = g.clique_number();
        for (auto &entry : table) {
            if (w > entry.r || edges != entry.max_edges)
                continue;
            ++entry.maximizer_count;
            if (n <= uniqueness_cap) {
                const auto form = canonical_form(g);
                if (std::find(entry.maximizer_forms.begin(), entry.maximizer_forms.end(), form) ==
                    entry.maximizer_forms.end())
                    entry.maximizer_forms.push_back(form);
            }
        }
    }
    return table;
}

EdgeCount max_edges_clique_free(std::int64_t n, std::int64_t r)
{
    if (r < 1 || r > n)
        throw std::invalid_argument("max_edges_clique_free needs 1 <= r <= n");
    return extremal_table(n)[static_cast<std::size_t>(r - 1)].max_edges;
}

} // namespace turan::oracle
