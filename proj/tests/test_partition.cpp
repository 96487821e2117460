#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "turan/generators.hpp"
#include "turan/partition.hpp"

using namespace turan;
using namespace turan::test;

namespace {

std::vector<std::vector<Vertex>> sorted_parts(const Partition &p)
{
    auto parts = p.parts;
    std::sort(parts.begin(), parts.end());
    return parts;
}

bool has_violation(const PartitionVerification &v, PartitionProperty property)
{
    return std::any_of(v.violations.begin(), v.violations.end(),
                       [&](const PropertyViolation &x) { return x.property == property; });
}

// edit report recomputed pair by pair
EditReport slow_edits(const Graph &g, const Partition &p)
{
    const auto part_of = p.part_of(g.vertex_count());
    EditReport out;
    std::vector<char> touched(g.vertex_count(), 0);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            const bool same = part_of[u] == part_of[v];
            if (same && g.has_edge(u, v))
                out.removed.push_back({u, v});
            else if (!same && !g.has_edge(u, v))
                out.added.push_back({u, v});
            else
                continue;
            touched[u] = touched[v] = 1;
        }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (touched[v])
            out.touched.push_back(v);
    return out;
}

} // namespace

TEST_SUITE("partition")
{
    TEST_CASE("procedure on small graphs")
    {
        const auto kn = erdos_partition(complete(6));
        CHECK(kn.part_count() == 6);
        CHECK(kn.pivots == std::vector<Vertex>{0, 1, 2, 3, 4, 5});

        const auto empty = erdos_partition(Graph(5));
        CHECK(empty.part_count() == 1);
        CHECK(empty.parts[0] == std::vector<Vertex>{0, 1, 2, 3, 4});

        const auto c4 = erdos_partition(cycle(4));
        CHECK(c4.parts == std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}});
        CHECK(c4.pivots == std::vector<Vertex>{0, 1});

        const auto t = erdos_partition(build_turan_graph(7, 3));
        CHECK(sorted_parts(t) == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4}, {5, 6}});
    }

    TEST_CASE("edit reports")
    {
        const auto t = build_turan_graph(9, 3);
        const auto own = erdos_partition(t);
        const auto closure = multipartite_closure(t, own);
        CHECK(closure.closure == t);
        CHECK(closure.edits.empty());
        CHECK(closure.edits.touched.empty());

        auto cut = t;
        cut.remove_edge(1, 4);
        const auto report = compute_edit_report(cut, erdos_partition(cut));
        CHECK(report.added == std::vector<Edge>{{1, 4}});
        CHECK(report.removed.empty());
        CHECK(report.touched == std::vector<Vertex>{1, 4});

        CHECK(compute_edit_report(cycle(4), erdos_partition(cycle(4))).empty());
        CHECK(multipartite_closure(cycle(4), erdos_partition(cycle(4))).closure == cycle(4));
    }

    TEST_CASE("edit reports agree with pairwise recomputation")
    {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const auto g = random_graph(1 + seed % 90, 0.4 + 0.008 * static_cast<double>(seed), seed);
            const auto p = erdos_partition(g);
            validate_partition(p, g.vertex_count());
            const auto fast = compute_edit_report(g, p);
            const auto slow = slow_edits(g, p);
            CHECK(fast.added == slow.added);
            CHECK(fast.removed == slow.removed);
            CHECK(fast.touched == slow.touched);
            const auto sparse = Graph::from_edges(g.vertex_count(), g.edges(), GraphOptions{0});
            CHECK(erdos_partition(sparse) == p);
            const auto sparse_report = compute_edit_report(sparse, p);
            CHECK(sparse_report.added == slow.added);
            CHECK(sparse_report.removed == slow.removed);
        }
    }

    TEST_CASE("verification examples")
    {
        auto cut = build_turan_graph(9, 3);
        cut.remove_edge(0, 3);
        const auto v = verify_partition(cut, erdos_partition(cut), 3, 1);
        CHECK(v.ok());
        CHECK(v.part_count == 3);
        CHECK(v.closure_checked);

        const auto k5 = verify_partition(complete(5), erdos_partition(complete(5)), 5, 1);
        CHECK(k5.ok());
        CHECK(k5.part_count == 5);

        // 0 is not adjacent to 1, which sits in a later part
        Partition bad{{{0}, {1, 2, 3}}, {0, 1}};
        auto g = complete(4);
        g.remove_edge(0, 1);
        const auto broken = verify_partition(g, bad, 2, 6);
        CHECK(has_violation(broken, PartitionProperty::pivot_adjacency));
        const auto it = std::find_if(broken.violations.begin(), broken.violations.end(), [](const auto &x) {
            return x.property == PartitionProperty::pivot_adjacency;
        });
        CHECK(it->witness == std::vector<Vertex>{0, 1});

        Partition overlapping{{{0, 1}, {1, 2, 3}}, {0, 1}};
        CHECK(has_violation(verify_partition(complete(4), overlapping, 2, 6), PartitionProperty::structure));
        CHECK_THROWS_AS(validate_partition(overlapping, 4), InvalidPartition);

        CHECK(verify_partition(Graph(6), erdos_partition(Graph(6)), 3, 1).precondition_failure);
    }

    TEST_CASE("guarantees hold on perturbed and planted instances")
    {
        for (std::uint64_t seed = 0; seed < 120; ++seed) {
            Rng rng(seed);
            const auto n = static_cast<std::int64_t>(20 + rng.below(110));
            const auto r = static_cast<std::int64_t>(2 + rng.below(static_cast<std::uint64_t>(n / 2 - 1)));
            const auto k = static_cast<EdgeCount>(2 + rng.below(10));
            const auto inst = seed % 2 ? gen_perturbed_turan(n, r, k, seed) : gen_planted(n, r, k, seed);
            const auto &g = inst.instance.graph();
            const auto v = verify_partition(g, erdos_partition(g), r, k);
            INFO("seed " << seed << " n " << n << " r " << r << " k " << k);
            REQUIRE_FALSE(v.precondition_failure);
            CHECK(v.violations.empty());
            CHECK(static_cast<std::int64_t>(v.part_count) >= r - k);
        }
    }
}
