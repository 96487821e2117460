#include <doctest.h>

#include <algorithm>
#include <map>

#include "support.hpp"
#include "turan/generators.hpp"
#include "turan/graph_io.hpp"
#include "turan/oracle.hpp"
#include "turan/solver.hpp"

using namespace turan;
using namespace turan::test;

namespace {

bool has_clique(const Graph &g, std::int64_t size)
{
    return static_cast<std::int64_t>(oracle::brute_force_max_clique(g).size()) >= size;
}

bool solved(const TuranCliqueInstance &inst)
{
    return solve_turan_clique(inst).yes;
}

} // namespace

TEST_SUITE("generators")
{
    TEST_CASE("rng")
    {
        // first output of mt19937_64 seeded with 5489 is fixed by the standard
        Rng standard(5489);
        CHECK(standard.next() == 14514284786278117030ULL);

        Rng a(3);
        Rng b(3);
        for (int i = 0; i < 100; ++i)
            CHECK(a.below(7) == b.below(7));

        Rng rng(11);
        std::map<std::uint64_t, int> counts;
        for (int i = 0; i < 6000; ++i) {
            const auto x = rng.below(6);
            REQUIRE(x < 6);
            ++counts[x];
        }
        for (const auto &[value, count] : counts)
            CHECK(count > 850);
        CHECK_THROWS(rng.below(0));

        const auto s = rng.sample(50, 20);
        CHECK(s.size() == 20);
        CHECK(std::is_sorted(s.begin(), s.end()));
        CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
        CHECK(s.back() < 50);
        CHECK(rng.sample(5, 5) == std::vector<std::uint64_t>{0, 1, 2, 3, 4});
        CHECK_THROWS(rng.sample(3, 4));

        for (int i = 0; i < 1000; ++i) {
            const double u = rng.unit();
            REQUIRE(u >= 0.0);
            REQUIRE(u < 1.0);
        }
    }

    TEST_CASE("perturbed turan graphs")
    {
        CHECK(gen_perturbed_turan(9, 3, 0, 42).instance.graph() == build_turan_graph(9, 3));
        CHECK(gen_perturbed_turan(9, 3, 27, 42).instance.graph().edge_count() == 0);
        const auto fixed = gen_perturbed_turan(12, 3, 2, 7);
        CHECK(fixed.instance.m() == 46);
        CHECK(fixed.instance.ell() == 4);
        CHECK_FALSE(has_clique(fixed.instance.graph(), 4));
        CHECK(fixed.known_answer == false);
        CHECK_THROWS_AS(gen_perturbed_turan(9, 3, 28, 1), DomainError);
        CHECK_THROWS_AS(gen_perturbed_turan(9, 9, 0, 1), DomainError);

        const auto x = gen_perturbed_turan(100, 10, 5, 1);
        const auto y = gen_perturbed_turan(100, 10, 5, 1);
        CHECK(serialize_graph(x.instance.graph(), GraphFormat::dimacs) ==
              serialize_graph(y.instance.graph(), GraphFormat::dimacs));
        CHECK(x.instance.graph() != gen_perturbed_turan(100, 10, 5, 2).instance.graph());
    }

    TEST_CASE("planted instances")
    {
        const auto p = gen_planted(9, 3, 2, 4);
        REQUIRE(p.witness.size() == 4);
        CHECK(verify_witness(p.instance.graph(), p.witness, 4, WitnessMode::clique));
        CHECK(p.instance.ell() == 4);

        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            Rng rng(seed);
            const auto n = static_cast<std::int64_t>(6 + rng.below(15));
            const auto r = static_cast<std::int64_t>(2 + rng.below(static_cast<std::uint64_t>(n / 2 - 1)));
            const auto g = gen_planted(n, r, 2, seed);
            const auto t = build_turan_graph(n, r);
            CHECK(g.instance.m() == t.edge_count());
            std::size_t added = 0;
            std::size_t removed = 0;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) {
                    added += g.instance.graph().has_edge(u, v) && !t.has_edge(u, v);
                    removed += !g.instance.graph().has_edge(u, v) && t.has_edge(u, v);
                }
            CHECK(added == 1);
            CHECK(removed == 1);
            CHECK(has_clique(g.instance.graph(), r + 1));
            const auto bigger = gen_planted(n, r, 4, seed);
            CHECK(verify_witness(bigger.instance.graph(), bigger.witness, r + 1, WitnessMode::clique));
        }
        CHECK_THROWS_AS(gen_planted(9, 1, 2, 0), DomainError);
        CHECK_THROWS_AS(gen_planted(9, 3, 1, 0), DomainError);
        CHECK_THROWS_AS(gen_planted(3, 3, 2, 0), DomainError);
    }

    TEST_CASE("fixed-xi reduction")
    {
        const auto k3 = gen_reduction_fixed_xi(complete(3), 3, 1, XiVariant::tau_zero);
        CHECK(k3.instance.n() == 3);
        CHECK(k3.instance.ell() == 3);
        CHECK(k3.instance.tau() == 0);
        CHECK(solved(k3.instance));

        Graph padded(8);
        padded.add_edge(0, 1);
        padded.add_edge(1, 2);
        padded.add_edge(0, 2);
        for (auto variant : {XiVariant::tau_zero, XiVariant::k_zero}) {
            const auto out = gen_reduction_fixed_xi(padded, 3, 2, variant);
            const auto &inst = out.instance;
            CHECK(inst.n() / inst.ell() == 2);
            CHECK(solved(inst) == has_clique(padded, 3));
        }
        Graph wide(13);
        wide.add_edge(0, 1);
        wide.add_edge(1, 2);
        wide.add_edge(0, 2);
        const auto grown = gen_reduction_fixed_xi(wide, 3, 2, XiVariant::tau_zero);
        CHECK(grown.instance.n() == 16);
        CHECK(grown.instance.ell() == 6);
        CHECK(solved(grown.instance));
        const auto none = gen_reduction_fixed_xi(cycle(7), 3, 2, XiVariant::k_zero);
        CHECK_FALSE(solved(none.instance));
        CHECK(none.instance.r() == 1);
        CHECK(none.instance.k() == 0);
        CHECK_THROWS_AS(gen_reduction_fixed_xi(cycle(7), 2, 3, XiVariant::k_zero), DomainError);
    }

    TEST_CASE("fixed-tau reduction")
    {
        const auto yes = gen_reduction_fixed_tau(complete(4), 4, 2);
        CHECK(yes.instance.r() == 2);
        CHECK(yes.instance.k() == 0);
        CHECK(yes.instance.tau() == 2);
        CHECK(solved(yes.instance));
        const auto no = gen_reduction_fixed_tau(cycle(5), 4, 2);
        CHECK_FALSE(solved(no.instance));

        // x is minimal
        const auto x = *tau_reduction_part_size(5, 4, 2);
        const std::int64_t prev = (4 - 1) * (x - 1);
        if (prev >= 5 && prev >= 4)
            CHECK(turan_edge_count(prev, 3) - 5 * 2 * (x - 1) < turan_edge_count(prev, 2));
        CHECK_THROWS_AS(gen_reduction_fixed_tau(cycle(5), 3, 2), DomainError);
        CHECK_THROWS_AS(gen_reduction_fixed_tau(cycle(5), 4, 1), DomainError);
        CHECK_THROWS_AS(gen_reduction_fixed_tau(cycle(5), 4, 2, 10), DomainError);
    }
}
