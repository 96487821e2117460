#include <doctest.h>

#include "support.hpp"
#include "turan/oracle.hpp"

using namespace turan;
using namespace turan::test;

TEST_SUITE("oracle")
{
    TEST_CASE("clique examples")
    {
        CHECK(oracle::brute_force_max_clique(complete(5)).size() == 5);
        CHECK(oracle::brute_force_max_clique(build_turan_graph(9, 3)).size() == 3);
        CHECK(oracle::brute_force_max_clique(Graph(4)).size() == 1);
        CHECK(oracle::brute_force_max_clique(Graph(0)).empty());
        CHECK(oracle::brute_force_max_clique(cycle(4)) == std::vector<Vertex>{0, 1});
        CHECK(oracle::brute_force_max_independent_set(disjoint_triangles(3)).size() == 3);
        CHECK_THROWS(oracle::brute_force_max_clique(Graph(27)));
    }

    TEST_CASE("small graph clique numbers")
    {
        for (std::size_t n = 1; n <= 7; ++n) {
            CHECK(oracle::to_small_graph(complete(n)).clique_number() == static_cast<int>(n));
            CHECK(oracle::to_small_graph(Graph(n)).clique_number() == 1);
        }
        CHECK(oracle::to_small_graph(cycle(5)).clique_number() == 2);
        CHECK(oracle::to_small_graph(cycle(5)).edge_count() == 5);
    }

    TEST_CASE("canonical forms")
    {
        const auto a = oracle::to_small_graph(path(4));
        Graph relabelled(4);
        relabelled.add_edge(2, 0);
        relabelled.add_edge(0, 3);
        relabelled.add_edge(3, 1);
        CHECK(oracle::canonical_form(a) == oracle::canonical_form(oracle::to_small_graph(relabelled)));
        CHECK(oracle::canonical_form(a) != oracle::canonical_form(oracle::to_small_graph(star(3))));
    }

    TEST_CASE("extremal values")
    {
        CHECK(oracle::max_edges_clique_free(4, 2) == 4);
        CHECK(oracle::max_edges_clique_free(5, 4) == 9);
        for (std::int64_t n = 1; n <= 6; ++n)
            CHECK(oracle::max_edges_clique_free(n, n) == n * (n - 1) / 2);
        const auto table = oracle::extremal_table(5);
        for (const auto &e : table) {
            CHECK(e.maximizer_forms.size() == 1);
            CHECK(e.maximizer_forms[0] ==
                  oracle::canonical_form(oracle::to_small_graph(build_turan_graph(5, e.r))));
        }
        CHECK_THROWS(oracle::extremal_table(8));
    }
}
