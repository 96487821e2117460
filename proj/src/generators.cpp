#include "turan/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "turan/turan_math.hpp"

namespace turan {

Rng::Rng(std::uint64_t seed) :
    engine_(seed)
{
}

std::uint64_t Rng::next()
{
    return engine_();
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("Rng::below needs a positive bound");
    // 2^64 mod bound, computed in 64-bit arithmetic
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x >= threshold)
            return x % bound;
    }
}

double Rng::unit()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::vector<std::uint64_t> Rng::sample(std::uint64_t count, std::uint64_t k)
{
    if (k > count)
        throw std::invalid_argument("cannot sample " + std::to_string(k) + " of " + std::to_string(count));
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = count - k; j < count; ++j) {
        const std::uint64_t t = below(j + 1);
        if (!chosen.insert(t).second)
            chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

namespace {

GeneratedInstance make_generated(std::string family, TuranCliqueInstance instance)
{
    return GeneratedInstance{std::move(family), {}, std::nullopt, std::move(instance), std::nullopt, {}, 0};
}

} // namespace

GeneratedInstance gen_perturbed_turan(std::int64_t n, std::int64_t r, EdgeCount k, std::uint64_t seed)
{
    if (r < 1 || r >= n)
        throw DomainError("perturbed Turán graphs need 1 <= r < n");
    const EdgeCount t = turan_edge_count(n, r);
    if (k < 0 || k > t)
        throw DomainError("k = " + std::to_string(k) + " outside 0..t_r(n) = " + std::to_string(t));

    Graph g = build_turan_graph(n, r);
    const auto edges = g.edges();
    Rng rng(seed);
    for (auto idx : rng.sample(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(k)))
        g.remove_edge(edges[idx].u, edges[idx].v);

    auto out = make_generated("perturbed", TuranCliqueInstance(std::move(g), r, k, r + 1));
    out.params = {{"n", n}, {"r", r}, {"k", k}};
    out.seed = seed;
    out.known_answer = false;
    return out;
}

GeneratedInstance gen_planted(std::int64_t n, std::int64_t r, EdgeCount k, std::uint64_t seed)
{
    if (r < 2 || k < 2 || n < r + 1)
        throw DomainError("planted instances need r >= 2, k >= 2 and n >= r + 1");
    const auto sizes = turan_part_sizes(n, r);
    std::vector<Vertex> first(sizes.size());
    for (std::size_t p = 1; p < sizes.size(); ++p)
        first[p] = first[p - 1] + static_cast<Vertex>(sizes[p - 1]);

    Rng rng(seed);
    std::vector<std::size_t> wide;
    for (std::size_t p = 0; p < sizes.size(); ++p)
        if (sizes[p] >= 2)
            wide.push_back(p);
    const std::size_t host = wide[rng.below(wide.size())];
    const auto pair = rng.sample(static_cast<std::uint64_t>(sizes[host]), 2);
    std::vector<Vertex> witness{first[host] + static_cast<Vertex>(pair[0]),
                                first[host] + static_cast<Vertex>(pair[1])};
    for (std::size_t p = 0; p < sizes.size(); ++p)
        if (p != host)
            witness.push_back(first[p] + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(sizes[p]))));
    std::sort(witness.begin(), witness.end());

    Graph g = build_turan_graph(n, r);
    std::vector<char> in_witness(static_cast<std::size_t>(n), 0);
    for (Vertex v : witness)
        in_witness[v] = 1;
    std::vector<Edge> removable;
    for (const Edge &e : g.edges())
        if (!(in_witness[e.u] && in_witness[e.v]))
            removable.push_back(e);
    if (static_cast<std::uint64_t>(k - 1) > removable.size())
        throw DomainError("k = " + std::to_string(k) + " exceeds the removable cross edges");
    g.add_edge(first[host] + static_cast<Vertex>(pair[0]), first[host] + static_cast<Vertex>(pair[1]));
    for (auto idx : rng.sample(removable.size(), static_cast<std::uint64_t>(k - 1)))
        g.remove_edge(removable[idx].u, removable[idx].v);

    auto out = make_generated("planted", TuranCliqueInstance(std::move(g), r, k, r + 1));
    out.params = {{"n", n}, {"r", r}, {"k", k}};
    out.seed = seed;
    out.known_answer = true;
    out.witness = std::move(witness);
    return out;
}

GeneratedInstance gen_reduction_fixed_xi(const Graph &g, std::int64_t ell, std::int64_t xi, XiVariant variant)
{
    if (xi < 1 || ell < xi)
        throw DomainError("fixed-xi reduction needs ell >= xi >= 1");
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    std::int64_t total = std::max(n, xi * ell);
    std::int64_t ell_out = ell;
    std::int64_t universal = 0;
    while (total >= (xi + 1) * ell_out) {
        ++total;
        ++ell_out;
        ++universal;
    }

    Graph out_graph(static_cast<std::size_t>(total), g.options());
    for (const Edge &e : g.edges())
        out_graph.add_edge(e.u, e.v);
    for (std::int64_t u = total - universal; u < total; ++u)
        for (std::int64_t v = 0; v < total; ++v)
            if (v != u)
                out_graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));

    const bool tau_zero = variant == XiVariant::tau_zero;
    const EdgeCount k = tau_zero ? total * (total - 1) / 2 : 0;
    const std::int64_t r = tau_zero ? ell_out : 1;
    auto out = make_generated("xi-reduction", TuranCliqueInstance(std::move(out_graph), r, k, ell_out));
    out.params = {{"source_n", n},
                  {"source_ell", ell},
                  {"xi", xi},
                  {"variant", tau_zero ? 0 : 1},
                  {"universal", universal}};
    out.source_vertices = n;
    return out;
}

std::optional<std::int64_t> tau_reduction_part_size(std::int64_t n, std::int64_t ell, std::int64_t tau,
                                                    std::int64_t max_vertices)
{
    if (tau < 2 || ell < 2 * tau)
        throw DomainError("fixed-tau reduction needs tau >= 2 and ell >= 2 tau");
    for (std::int64_t x = 1; (ell - 1) * x <= max_vertices; ++x) {
        const std::int64_t total = (ell - 1) * x;
        if (total < n || total < ell)
            continue;
        const EdgeCount kept = turan_edge_count(total, ell - 1) - n * (ell - 2) * x;
        if (kept >= turan_edge_count(total, ell - tau))
            return x;
    }
    return std::nullopt;
}

GeneratedInstance gen_reduction_fixed_tau(const Graph &g, std::int64_t ell, std::int64_t tau,
                                          std::int64_t max_vertices)
{
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    const auto x = tau_reduction_part_size(n, ell, tau, max_vertices);
    if (!x)
        throw DomainError("no part size keeps the fixed-tau scaffold within " + std::to_string(max_vertices) +
                          " vertices");
    const std::int64_t total = (ell - 1) * *x;

    std::vector<std::uint32_t> part_of(static_cast<std::size_t>(total));
    for (std::int64_t v = 0; v < total; ++v)
        part_of[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(v / *x);
    Graph out_graph = Graph::complete_multipartite(part_of, g.options());
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
        for (Vertex w : out_graph.neighbors(v))
            out_graph.remove_edge(v, w);
    for (const Edge &e : g.edges())
        out_graph.add_edge(e.u, e.v);

    auto out = make_generated("tau-reduction", TuranCliqueInstance(std::move(out_graph), ell - tau, 0, ell));
    out.params = {{"source_n", n}, {"ell", ell}, {"tau", tau}, {"part_size", *x}};
    out.source_vertices = n;
    return out;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed)
{
    Rng rng(seed);
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.unit() < p)
                g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return g;
}

} // namespace turan
