#include <doctest.h>

#include <limits>

#include "support.hpp"
#include "turan/turan_math.hpp"

using namespace turan;
using namespace turan::test;

namespace {

// sum over pairs of parts of |V_i||V_j|, parts as equal as possible
EdgeCount pair_product_count(std::int64_t n, std::int64_t r)
{
    std::vector<std::int64_t> sizes;
    std::int64_t left = n;
    for (std::int64_t i = r; i > 0; --i) {
        const std::int64_t s = (left + i - 1) / i;
        sizes.push_back(s);
        left -= s;
    }
    EdgeCount total = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t j = i + 1; j < sizes.size(); ++j)
            total += sizes[i] * sizes[j];
    return total;
}

Graph minus_edge(Graph g, Vertex u, Vertex v)
{
    g.remove_edge(u, v);
    return g;
}

} // namespace

TEST_SUITE("turan_math")
{
    TEST_CASE("edge counts")
    {
        CHECK(turan_edge_count(4, 2) == 4);
        CHECK(turan_edge_count(9, 3) == 27);
        CHECK(turan_edge_count(7, 3) == 16);
        for (std::int64_t n = 1; n < 30; ++n)
            CHECK(turan_edge_count(n, 1) == 0);
        for (std::int64_t n = 1; n <= 60; ++n)
            for (std::int64_t r = 1; r <= n; ++r)
                REQUIRE(turan_edge_count(n, r) == pair_product_count(n, r));
        CHECK(turan_edge_count(2147483647, 2) == pair_product_count(2147483647, 2));
        CHECK_THROWS_AS(turan_edge_count(3, 4), DomainError);
        CHECK_THROWS_AS(turan_edge_count(3, 0), DomainError);
        CHECK_THROWS_AS(turan_edge_count(std::int64_t{1} << 31, 2), DomainError);
    }

    TEST_CASE("part sizes")
    {
        CHECK(turan_part_sizes(7, 3) == std::vector<std::int64_t>{3, 2, 2});
        CHECK(TuranParams(7, 3).remainder() == 1);
        CHECK(TuranParams(7, 3).xi() == 2);
    }

    TEST_CASE("turan graphs")
    {
        const std::vector<Edge> k22{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
        CHECK(build_turan_graph(4, 2) == Graph::from_edges(4, k22));
        for (std::size_t n = 1; n < 9; ++n)
            CHECK(build_turan_graph(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n)) == complete(n));
        const auto t73 = build_turan_graph(7, 3);
        CHECK(t73.edge_count() == 16);
        CHECK_FALSE(t73.has_edge(0, 2));
        CHECK_FALSE(t73.has_edge(3, 4));
        CHECK_FALSE(t73.has_edge(5, 6));
        CHECK(t73.has_edge(2, 3));
        for (std::int64_t n = 1; n < 40; ++n)
            for (std::int64_t r = 1; r <= n; r += 3)
                CHECK(build_turan_graph(n, r).edge_count() == turan_edge_count(n, r));
    }

    TEST_CASE("gaps")
    {
        CHECK(turan_gap(12, 3, 4) == 6);
        CHECK(turan_gap(5, 4, 5) == 1);
        CHECK_THROWS_AS(turan_gap(12, 3, 3), DomainError);
        CHECK_THROWS_AS(turan_gap(12, 4, 3), DomainError);
        // exact identity when r and ell divide n
        for (std::int64_t n = 12; n <= 240; n += 12)
            for (std::int64_t r : {1, 2, 3, 4, 6})
                for (std::int64_t ell : {2, 3, 4, 6, 12})
                    if (r < ell)
                        CHECK(2 * r * ell * turan_gap(n, r, ell) == (ell - r) * n * n);
    }

    TEST_CASE("surplus check")
    {
        const auto t = build_turan_graph(9, 3);
        CHECK(edge_surplus_check(t, 3, 0).valid);
        CHECK(edge_surplus_check(t, 3, 0).slack == 0);
        const auto t1 = minus_edge(t, 0, 3);
        CHECK_FALSE(edge_surplus_check(t1, 3, 0).valid);
        CHECK(edge_surplus_check(t1, 3, 0).slack == -1);
        CHECK(edge_surplus_check(t1, 3, 1).valid);
        CHECK(edge_surplus_check(t1, 3, 1).slack == 0);
    }

    TEST_CASE("average degree of the complement")
    {
        const auto k9 = avg_degree_xi_check(complete(9), 3);
        CHECK(k9.at_turan_bound);
        CHECK(k9.complement_avg_deg_le_xi);
        CHECK(k9.holds());

        const auto t = avg_degree_xi_check(build_turan_graph(9, 3), 3);
        CHECK(t.at_turan_bound);
        CHECK(t.complement_avg_deg_le_xi);
        CHECK(t.holds());
        CHECK(average_degree(complement(build_turan_graph(9, 3))) == Rational(2));

        const auto e = avg_degree_xi_check(Graph(9), 3);
        CHECK_FALSE(e.at_turan_bound);
        CHECK_FALSE(e.complement_avg_deg_le_xi);
        CHECK(e.holds());

        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto g = random_graph(2 + seed % 25, 0.5 + 0.0025 * static_cast<double>(seed), seed);
            for (std::int64_t r = 1; r <= static_cast<std::int64_t>(g.vertex_count()); ++r)
                REQUIRE(avg_degree_xi_check(g, r).holds());
        }
    }

    TEST_CASE("checked addition")
    {
        CHECK(checked_add(2, 3) == 5);
        CHECK_THROWS(checked_add(std::numeric_limits<EdgeCount>::max(), 1));
    }
}
