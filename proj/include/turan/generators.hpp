#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "turan/compression.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Seeded source of randomness: std::mt19937_64 (fixed by the C++ standard,
/// so identical streams on every platform). Bounded draws reject the low
/// (2^64 mod bound) outputs instead of using std::uniform_int_distribution,
/// whose algorithm is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [0, 1) with 53 random bits.
    double unit();

    /// k distinct values from [0, count) (Floyd's algorithm), sorted.
    std::vector<std::uint64_t> sample(std::uint64_t count, std::uint64_t k);

private:
    std::mt19937_64 engine_;
};

struct GeneratedInstance {
    std::string family;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::optional<std::uint64_t> seed;
    TuranCliqueInstance instance;
    std::optional<bool> known_answer;
    std::vector<Vertex> witness; // sorted, present when known_answer is true
    // Reductions: source vertex v sits at id v of the emitted graph.
    std::int64_t source_vertices = 0;
};

/// T_r(n) with k uniformly chosen edges deleted; ell = r + 1. The result is
/// r-partite, so the answer is always NO. Requires 1 <= r < n.
GeneratedInstance gen_perturbed_turan(std::int64_t n, std::int64_t r, EdgeCount k, std::uint64_t seed);

/// T_r(n) plus one intra-part edge, minus k - 1 cross edges that avoid a
/// planted K_{r+1}; ell = r + 1 and the planted clique is the witness.
GeneratedInstance gen_planted(std::int64_t n, std::int64_t r, EdgeCount k, std::uint64_t seed);

enum class XiVariant {
    tau_zero, // (G', ell', C(N,2), ell')
    k_zero,   // (G', 1, 0, ell')
};

/// Pads a Clique instance (g, ell) with isolated and then universal vertices
/// until xi * ell' <= N < (xi + 1) * ell'. Requires ell >= xi >= 1.
GeneratedInstance gen_reduction_fixed_xi(const Graph &g, std::int64_t ell, std::int64_t xi, XiVariant variant);

inline constexpr std::int64_t default_tau_reduction_cap = 20000;

/// Embeds g, on isolated vertices, into the complete (ell-1)-partite graph
/// with parts of size x, x minimal such that
/// t_{ell-1}(N) - n(ell-2)x >= t_{ell-tau}(N) for N = (ell-1)x. Emits
/// (G', ell - tau, 0, ell). Requires tau >= 2 and ell >= 2 tau. Throws
/// DomainError when no x keeps N within max_vertices.
GeneratedInstance gen_reduction_fixed_tau(const Graph &g, std::int64_t ell, std::int64_t tau,
                                          std::int64_t max_vertices = default_tau_reduction_cap);

/// Smallest part size x accepted by gen_reduction_fixed_tau, or nullopt.
std::optional<std::int64_t> tau_reduction_part_size(std::int64_t n, std::int64_t ell, std::int64_t tau,
                                                    std::int64_t max_vertices = default_tau_reduction_cap);

/// G(n, p): each pair {u < v}, in lexicographic order, is an edge iff
/// unit() < p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

} // namespace turan
