#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace turan {

using Vertex = std::uint32_t;
using EdgeCount = std::int64_t;
using Rational = boost::rational<std::int64_t>;

struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Normalized edge with u < v.
inline Edge make_edge(Vertex a, Vertex b)
{
    return a < b ? Edge{a, b} : Edge{b, a};
}

inline constexpr std::size_t max_vertex_count = (std::size_t{1} << 31) - 1;

struct GraphOptions {
    // Graphs with at most this many vertices use bitset rows; larger ones
    // use sorted neighbour arrays.
    std::size_t dense_threshold = 100000;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph on the dense vertex set 0..n-1.
///
/// Two storage layouts share this interface. Up to
/// GraphOptions::dense_threshold vertices every vertex owns a bitset row, so
/// membership is a single bit test and neighbourhood intersection runs a word
/// at a time. Above the threshold neighbours are kept in sorted arrays.
/// Degrees and the edge count are cached in both layouts.
class Graph {
public:
    explicit Graph(std::size_t n = 0, GraphOptions options = {});

    static Graph from_edges(std::size_t n, std::span<const Edge> edges, GraphOptions options = {});

    /// Complete multipartite graph in which u and v are adjacent iff
    /// part_of[u] != part_of[v].
    static Graph complete_multipartite(std::span<const std::uint32_t> part_of, GraphOptions options = {});

    std::size_t vertex_count() const noexcept { return n_; }
    EdgeCount edge_count() const noexcept { return m_; }
    bool is_dense() const noexcept { return dense_; }
    const GraphOptions &options() const noexcept { return options_; }

    bool has_edge(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const
    {
        check_vertex(v);
        return degree_[v];
    }

    /// Returns true if the edge was not present before. Self-loops throw.
    bool add_edge(Vertex u, Vertex v);
    bool remove_edge(Vertex u, Vertex v);

    template <typename F>
    void for_each_neighbor(Vertex v, F &&f) const
    {
        check_vertex(v);
        if (dense_) {
            const std::uint64_t *row = row_ptr(v);
            for (std::size_t w = 0; w < words_; ++w) {
                std::uint64_t bits = row[w];
                while (bits != 0) {
                    const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
                    f(static_cast<Vertex>(w * 64 + bit));
                    bits &= bits - 1;
                }
            }
        } else {
            for (Vertex u : lists_[v])
                f(u);
        }
    }

    /// Sorted neighbour list.
    std::vector<Vertex> neighbors(Vertex v) const;

    /// All edges (u < v), sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Bitset row of v; only valid for dense graphs.
    std::span<const std::uint64_t> row(Vertex v) const;
    std::size_t row_words() const noexcept { return words_; }

    friend bool operator==(const Graph &a, const Graph &b);
    friend Graph complement(const Graph &g);

private:
    void check_vertex(Vertex v) const
    {
        if (v >= n_)
            throw GraphError("vertex " + std::to_string(v) + " out of range for graph with " +
                             std::to_string(n_) + " vertices");
    }
    std::uint64_t *row_ptr(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    const std::uint64_t *row_ptr(Vertex v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    std::size_t n_ = 0;
    EdgeCount m_ = 0;
    GraphOptions options_;
    bool dense_ = true;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::vector<Vertex>> lists_;
    std::vector<std::size_t> degree_;
};

Graph complement(const Graph &g);

struct InducedSubgraph {
    Graph graph;
    // to_parent[new_id] = old_id
    std::vector<Vertex> to_parent;
};

/// Subgraph induced by `vertices`; new ids follow the order of `vertices`
/// after sorting and deduplication.
InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

/// 2m/n as an exact fraction.
Rational average_degree(const Graph &g);

} // namespace turan
