#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/compression.hpp"
#include "turan/graph.hpp"

namespace turan {

inline constexpr std::uint64_t default_node_budget = 100'000'000;

struct SolverOptions {
    std::uint64_t node_budget = default_node_budget;
    // Worker threads for the clique search. The returned clique does not
    // depend on this value.
    unsigned threads = 1;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t budget) :
        std::runtime_error("search node budget of " + std::to_string(budget) + " exceeded"),
        budget_(budget)
    {
    }

    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t budget_;
};

struct CliqueSearchResult {
    std::vector<Vertex> clique; // sorted
    std::uint64_t nodes = 0;
};

/// Exact maximum clique by branch and bound: degeneracy initial order,
/// greedy colouring bound over bitsets. Throws BudgetExceeded rather than
/// returning a non-optimal clique.
CliqueSearchResult max_clique_exact(const Graph &g, const SolverOptions &options = {});

/// First clique with at least `target` vertices in the search order, or an
/// empty clique if none exists (target 0 yields the empty clique).
CliqueSearchResult find_clique(const Graph &g, std::size_t target, const SolverOptions &options = {});

struct SolveStats {
    std::uint64_t nodes = 0;
    std::int64_t wall_ns = 0;
    std::int64_t compress_ns = 0;
    std::size_t kernel_vertices = 0;
    bool shifted = false; // went through shift_parameters
};

struct Decision {
    bool yes = false;
    std::vector<Vertex> witness; // ids of the original input graph, present iff yes
    std::int64_t target = 0;
    SolveStats stats;
    std::optional<CliqueInstance> compression;
};

/// Shift (when tau > 1), compress, then solve the kernel exactly.
Decision solve_turan_clique(const TuranCliqueInstance &instance, const SolverOptions &options = {});

/// Decides whether g has an independent set of size >= ceil(n/(d+1)) + t.
Decision solve_turan_is(const Graph &g, std::int64_t t, const SolverOptions &options = {});

enum class WitnessMode { clique, independent_set };

/// True iff s has at least ell distinct vertices and induces a clique (or an
/// independent set). Out-of-range ids throw GraphError.
bool verify_witness(const Graph &g, std::span<const Vertex> s, std::int64_t ell, WitnessMode mode);

} // namespace turan
