#include "turan/graph.hpp"

#include <algorithm>

namespace turan {

namespace {

std::size_t words_for(std::size_t n)
{
    return (n + 63) / 64;
}

} // namespace

Graph::Graph(std::size_t n, GraphOptions options) :
    n_(n),
    options_(options),
    dense_(n <= options.dense_threshold),
    degree_(n, 0)
{
    if (n > max_vertex_count)
        throw GraphError("vertex count " + std::to_string(n) + " exceeds 2^31-1");
    if (dense_) {
        words_ = words_for(n);
        bits_.assign(n * words_, 0);
    } else {
        lists_.resize(n);
    }
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, GraphOptions options)
{
    Graph g(n, options);
    if (g.dense_) {
        for (const Edge &e : edges)
            g.add_edge(e.u, e.v);
        return g;
    }
    for (const Edge &e : edges) {
        g.check_vertex(e.u);
        g.check_vertex(e.v);
        if (e.u == e.v)
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        g.lists_[e.u].push_back(e.v);
        g.lists_[e.v].push_back(e.u);
    }
    EdgeCount twice = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto &list = g.lists_[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.degree_[v] = list.size();
        twice += static_cast<EdgeCount>(list.size());
    }
    g.m_ = twice / 2;
    return g;
}

Graph Graph::complete_multipartite(std::span<const std::uint32_t> part_of, GraphOptions options)
{
    const std::size_t n = part_of.size();
    Graph g(n, options);
    std::uint32_t parts = 0;
    for (auto p : part_of)
        parts = std::max(parts, p + 1);
    std::vector<std::size_t> part_size(parts, 0);
    for (auto p : part_of)
        ++part_size[p];

    if (g.dense_) {
        std::vector<std::uint64_t> masks(static_cast<std::size_t>(parts) * g.words_, 0);
        for (std::size_t v = 0; v < n; ++v)
            masks[part_of[v] * g.words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        std::vector<std::uint64_t> all(g.words_, ~std::uint64_t{0});
        if (n % 64 != 0 && g.words_ > 0)
            all.back() = (std::uint64_t{1} << (n % 64)) - 1;
        for (std::size_t v = 0; v < n; ++v) {
            const std::uint64_t *mask = masks.data() + part_of[v] * g.words_;
            std::uint64_t *row = g.row_ptr(static_cast<Vertex>(v));
            for (std::size_t w = 0; w < g.words_; ++w)
                row[w] = all[w] & ~mask[w];
        }
    } else {
        for (std::size_t v = 0; v < n; ++v) {
            auto &list = g.lists_[v];
            list.reserve(n - part_size[part_of[v]]);
            for (std::size_t u = 0; u < n; ++u)
                if (part_of[u] != part_of[v])
                    list.push_back(static_cast<Vertex>(u));
        }
    }
    EdgeCount twice = 0;
    for (std::size_t v = 0; v < n; ++v) {
        g.degree_[v] = n - part_size[part_of[v]];
        twice += static_cast<EdgeCount>(g.degree_[v]);
    }
    g.m_ = twice / 2;
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    if (dense_)
        return (row_ptr(u)[v / 64] >> (v % 64)) & 1U;
    const auto &list = lists_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw GraphError("self-loop at vertex " + std::to_string(u));
    if (dense_) {
        std::uint64_t &word = row_ptr(u)[v / 64];
        const std::uint64_t bit = std::uint64_t{1} << (v % 64);
        if (word & bit)
            return false;
        word |= bit;
        row_ptr(v)[u / 64] |= std::uint64_t{1} << (u % 64);
    } else {
        auto &lu = lists_[u];
        auto it = std::lower_bound(lu.begin(), lu.end(), v);
        if (it != lu.end() && *it == v)
            return false;
        lu.insert(it, v);
        auto &lv = lists_[v];
        lv.insert(std::lower_bound(lv.begin(), lv.end(), u), u);
    }
    ++degree_[u];
    ++degree_[v];
    ++m_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        return false;
    if (dense_) {
        std::uint64_t &word = row_ptr(u)[v / 64];
        const std::uint64_t bit = std::uint64_t{1} << (v % 64);
        if (!(word & bit))
            return false;
        word &= ~bit;
        row_ptr(v)[u / 64] &= ~(std::uint64_t{1} << (u % 64));
    } else {
        auto &lu = lists_[u];
        auto it = std::lower_bound(lu.begin(), lu.end(), v);
        if (it == lu.end() || *it != v)
            return false;
        lu.erase(it);
        auto &lv = lists_[v];
        lv.erase(std::lower_bound(lv.begin(), lv.end(), u));
    }
    --degree_[u];
    --degree_[v];
    --m_;
    return true;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    out.reserve(degree(v));
    for_each_neighbor(v, [&](Vertex u) { out.push_back(u); });
    return out;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (std::size_t u = 0; u < n_; ++u)
        for_each_neighbor(static_cast<Vertex>(u), [&](Vertex v) {
            if (u < v)
                out.push_back({static_cast<Vertex>(u), v});
        });
    return out;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const
{
    check_vertex(v);
    if (!dense_)
        throw GraphError("bitset rows requested from a sparse graph");
    return {row_ptr(v), words_};
}

bool operator==(const Graph &a, const Graph &b)
{
    if (a.n_ != b.n_ || a.m_ != b.m_)
        return false;
    if (a.dense_ && b.dense_)
        return a.bits_ == b.bits_;
    for (std::size_t v = 0; v < a.n_; ++v)
        if (a.neighbors(static_cast<Vertex>(v)) != b.neighbors(static_cast<Vertex>(v)))
            return false;
    return true;
}

Graph complement(const Graph &g)
{
    const std::size_t n = g.vertex_count();
    if (g.is_dense()) {
        Graph out(n, g.options());
        for (std::size_t v = 0; v < n; ++v) {
            const std::uint64_t *src = g.row_ptr(static_cast<Vertex>(v));
            std::uint64_t *dst = out.row_ptr(static_cast<Vertex>(v));
            for (std::size_t w = 0; w < g.words_; ++w)
                dst[w] = ~src[w];
            if (n % 64 != 0)
                dst[g.words_ - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
            dst[v / 64] &= ~(std::uint64_t{1} << (v % 64));
            out.degree_[v] = n - 1 - g.degree_[v];
        }
        out.m_ = static_cast<EdgeCount>(n) * static_cast<EdgeCount>(n > 0 ? n - 1 : 0) / 2 - g.m_;
        return out;
    }
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        const auto &nb = g.lists_[u];
        auto it = nb.begin();
        for (std::size_t v = u + 1; v < n; ++v) {
            while (it != nb.end() && *it < v)
                ++it;
            if (it == nb.end() || *it != v)
                edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        }
    }
    return Graph::from_edges(n, edges, g.options());
}

InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> vertices)
{
    std::vector<Vertex> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    constexpr Vertex absent = ~Vertex{0};
    std::vector<Vertex> to_child(g.vertex_count(), absent);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= g.vertex_count())
            throw GraphError("vertex " + std::to_string(keep[i]) + " out of range for graph with " +
                             std::to_string(g.vertex_count()) + " vertices");
        to_child[keep[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        g.for_each_neighbor(keep[i], [&](Vertex w) {
            const Vertex j = to_child[w];
            if (j != absent && i < j)
                edges.push_back({static_cast<Vertex>(i), j});
        });
    return {Graph::from_edges(keep.size(), edges, g.options()), std::move(keep)};
}

Rational average_degree(const Graph &g)
{
    if (g.vertex_count() == 0)
        throw GraphError("average degree of the empty vertex set is undefined");
    return Rational(2 * g.edge_count(), static_cast<std::int64_t>(g.vertex_count()));
}

} // namespace turan
