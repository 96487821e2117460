#include "turan/partition.hpp"

#include <algorithm>
#include <string_view>

#include "turan/turan_math.hpp"

namespace turan {

std::vector<std::uint32_t> Partition::part_of(std::size_t n) const
{
    std::vector<std::uint32_t> out(n, 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (Vertex v : parts[i])
            out[v] = static_cast<std::uint32_t>(i);
    return out;
}

void validate_partition(const Partition &partition, std::size_t n)
{
    if (partition.pivots.size() != partition.parts.size())
        throw InvalidPartition("pivot count differs from part count");
    std::vector<char> seen(n, 0);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < partition.parts.size(); ++i) {
        const auto &part = partition.parts[i];
        if (part.empty())
            throw InvalidPartition("part " + std::to_string(i) + " is empty");
        bool pivot_inside = false;
        for (Vertex v : part) {
            if (v >= n)
                throw InvalidPartition("vertex " + std::to_string(v) + " out of range");
            if (seen[v])
                throw InvalidPartition("vertex " + std::to_string(v) + " appears in two parts");
            seen[v] = 1;
            ++covered;
            pivot_inside = pivot_inside || v == partition.pivots[i];
        }
        if (!pivot_inside)
            throw InvalidPartition("pivot of part " + std::to_string(i) + " lies outside the part");
    }
    if (covered != n)
        throw InvalidPartition("parts cover " + std::to_string(covered) + " of " + std::to_string(n) + " vertices");
}

Partition erdos_partition(const Graph &g)
{
    const std::size_t n = g.vertex_count();
    if (n == 0)
        throw InvalidPartition("cannot partition a graph without vertices");

    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v)
        degree[v] = g.degree(static_cast<Vertex>(v));
    std::vector<char> alive(n, 1);
    std::vector<Vertex> remaining(n);
    for (std::size_t v = 0; v < n; ++v)
        remaining[v] = static_cast<Vertex>(v);

    Partition out;
    std::vector<Vertex> rest;
    while (!remaining.empty()) {
        // remaining is sorted, so the first maximum has the lowest id
        Vertex pivot = remaining.front();
        for (Vertex v : remaining)
            if (degree[v] > degree[pivot])
                pivot = v;

        std::vector<Vertex> part;
        rest.clear();
        for (Vertex u : remaining) {
            if (u == pivot || !g.has_edge(pivot, u))
                part.push_back(u);
            else
                rest.push_back(u);
        }
        for (Vertex u : part)
            alive[u] = 0;
        for (Vertex u : part)
            g.for_each_neighbor(u, [&](Vertex w) {
                if (alive[w])
                    --degree[w];
            });

        out.parts.push_back(std::move(part));
        out.pivots.push_back(pivot);
        remaining.swap(rest);
    }
    return out;
}

EditReport compute_edit_report(const Graph &g, const Partition &partition)
{
    const std::size_t n = g.vertex_count();
    validate_partition(partition, n);
    const auto part_of = partition.part_of(n);
    EditReport report;

    if (g.is_dense()) {
        const std::size_t words = g.row_words();
        std::vector<std::uint64_t> masks(partition.part_count() * words, 0);
        for (std::size_t v = 0; v < n; ++v)
            masks[part_of[v] * words + v / 64] |= std::uint64_t{1} << (v % 64);
        for (std::size_t u = 0; u < n; ++u) {
            const auto row = g.row(static_cast<Vertex>(u));
            const std::uint64_t *mask = masks.data() + part_of[u] * words;
            for (std::size_t w = u / 64; w < words; ++w) {
                std::uint64_t valid = ~std::uint64_t{0};
                if (w == u / 64)
                    valid = (u % 64 == 63) ? 0 : ~std::uint64_t{0} << (u % 64 + 1);
                if (w == words - 1 && n % 64 != 0)
                    valid &= (std::uint64_t{1} << (n % 64)) - 1;
                std::uint64_t inside = row[w] & mask[w] & valid;
                std::uint64_t missing = ~row[w] & ~mask[w] & valid;
                while (inside != 0) {
                    const auto bit = static_cast<std::size_t>(std::countr_zero(inside));
                    report.removed.push_back({static_cast<Vertex>(u), static_cast<Vertex>(w * 64 + bit)});
                    inside &= inside - 1;
                }
                while (missing != 0) {
                    const auto bit = static_cast<std::size_t>(std::countr_zero(missing));
                    report.added.push_back({static_cast<Vertex>(u), static_cast<Vertex>(w * 64 + bit)});
                    missing &= missing - 1;
                }
            }
        }
    } else {
        for (std::size_t u = 0; u < n; ++u) {
            const auto nb = g.neighbors(static_cast<Vertex>(u));
            auto it = std::upper_bound(nb.begin(), nb.end(), static_cast<Vertex>(u));
            for (std::size_t v = u + 1; v < n; ++v) {
                const bool adjacent = it != nb.end() && *it == v;
                if (adjacent)
                    ++it;
                const bool same = part_of[u] == part_of[v];
                if (same && adjacent)
                    report.removed.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
                else if (!same && !adjacent)
                    report.added.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
            }
        }
    }

    std::vector<char> mark(n, 0);
    for (const auto *set : {&report.added, &report.removed})
        for (const Edge &e : *set)
            mark[e.u] = mark[e.v] = 1;
    for (std::size_t v = 0; v < n; ++v)
        if (mark[v])
            report.touched.push_back(static_cast<Vertex>(v));
    return report;
}

MultipartiteClosure multipartite_closure(const Graph &g, const Partition &partition)
{
    validate_partition(partition, g.vertex_count());
    auto closure = Graph::complete_multipartite(partition.part_of(g.vertex_count()), g.options());
    return {std::move(closure), compute_edit_report(g, partition)};
}

std::string_view to_string(PartitionProperty property)
{
    switch (property) {
    case PartitionProperty::structure:
        return "structure";
    case PartitionProperty::part_count:
        return "part_count";
    case PartitionProperty::pivot_adjacency:
        return "pivot_adjacency";
    case PartitionProperty::closure_edges:
        return "closure_edges";
    case PartitionProperty::edit_distance:
        return "edit_distance";
    case PartitionProperty::added_bound:
        return "added_bound";
    case PartitionProperty::added_vs_removed:
        return "added_vs_removed";
    case PartitionProperty::coverage:
        return "coverage";
    }
    return "unknown";
}

PartitionVerification verify_partition(const Graph &g, const Partition &partition, std::int64_t r, EdgeCount k)
{
    PartitionVerification out;
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    if (r < 2) {
        out.precondition_failure = "r must be at least 2";
        return out;
    }
    if (k < 1) {
        out.precondition_failure = "k must be at least 1";
        return out;
    }
    if (r > n) {
        out.precondition_failure = "r exceeds the vertex count";
        return out;
    }
    if (const auto surplus = edge_surplus_check(g, r, k); !surplus.valid) {
        out.precondition_failure = "edge count below t_r(n) - k (slack " + std::to_string(surplus.slack) + ")";
        return out;
    }

    try {
        validate_partition(partition, g.vertex_count());
    } catch (const InvalidPartition &e) {
        out.violations.push_back({PartitionProperty::structure, e.what(), {}});
        return out;
    }

    const auto p = static_cast<std::int64_t>(partition.part_count());
    out.part_count = partition.part_count();
    if (p < r - k)
        out.violations.push_back({PartitionProperty::part_count,
                                  "p = " + std::to_string(p) + " < r - k = " + std::to_string(r - k),
                                  {}});

    for (std::size_t i = 0; i < partition.part_count(); ++i) {
        const Vertex pivot = partition.pivots[i];
        bool reported = false;
        for (std::size_t j = i + 1; j < partition.part_count() && !reported; ++j)
            for (Vertex w : partition.parts[j])
                if (!g.has_edge(pivot, w)) {
                    out.violations.push_back({PartitionProperty::pivot_adjacency,
                                              "pivot " + std::to_string(pivot) + " of part " + std::to_string(i) +
                                                  " misses vertex " + std::to_string(w) + " of part " +
                                                  std::to_string(j),
                                              {pivot, w}});
                    reported = true;
                    break;
                }
    }

    if (p > r)
        return out;
    out.closure_checked = true;

    const auto edits = compute_edit_report(g, partition);
    const auto added = static_cast<EdgeCount>(edits.added.size());
    const auto removed = static_cast<EdgeCount>(edits.removed.size());
    out.added = edits.added.size();
    out.removed = edits.removed.size();
    out.touched = edits.touched.size();

    EdgeCount closure_edges = n * n;
    for (const auto &part : partition.parts)
        closure_edges -= static_cast<EdgeCount>(part.size()) * static_cast<EdgeCount>(part.size());
    closure_edges /= 2;

    if (closure_edges < g.edge_count())
        out.violations.push_back({PartitionProperty::closure_edges,
                                  "|E(G')| = " + std::to_string(closure_edges) + " < |E(G)| = " +
                                      std::to_string(g.edge_count()),
                                  {}});
    if (added + removed > 3 * k)
        out.violations.push_back({PartitionProperty::edit_distance,
                                  "|R| + |A| = " + std::to_string(added + removed) + " > 3k", {}});
    if (added > 2 * k)
        out.violations.push_back({PartitionProperty::added_bound, "|R| = " + std::to_string(added) + " > 2k", {}});
    if (added < removed)
        out.violations.push_back({PartitionProperty::added_vs_removed,
                                  "|R| = " + std::to_string(added) + " < |A| = " + std::to_string(removed), {}});

    std::vector<char> covered_by_added(g.vertex_count(), 0);
    for (const Edge &e : edits.added)
        covered_by_added[e.u] = covered_by_added[e.v] = 1;
    for (const Edge &e : edits.removed)
        for (Vertex v : {e.u, e.v})
            if (!covered_by_added[v]) {
                out.violations.push_back({PartitionProperty::coverage,
                                          "vertex " + std::to_string(v) + " is covered by A but not by R",
                                          {e.u, e.v}});
                return out;
            }
    return out;
}

} // namespace turan
