#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/partition.hpp"

namespace turan {

class InvalidInstance : public std::invalid_argument {
public:
    InvalidInstance(const std::string &what, std::optional<EdgeCount> slack = std::nullopt) :
        std::invalid_argument(what),
        slack_(slack)
    {
    }

    /// m - (t_r(n) - k) when the edge-count invariant is what failed
    std::optional<EdgeCount> slack() const noexcept { return slack_; }

private:
    std::optional<EdgeCount> slack_;
};

/// A graph with at least t_r(n) - k edges and the question whether it has a
/// clique on ell vertices. The graph is shared and never mutated.
class TuranCliqueInstance {
public:
    TuranCliqueInstance(std::shared_ptr<const Graph> graph, std::int64_t r, EdgeCount k, std::int64_t ell);
    TuranCliqueInstance(Graph graph, std::int64_t r, EdgeCount k, std::int64_t ell);

    const Graph &graph() const noexcept { return *graph_; }
    const std::shared_ptr<const Graph> &shared_graph() const noexcept { return graph_; }

    std::int64_t n() const noexcept { return static_cast<std::int64_t>(graph_->vertex_count()); }
    EdgeCount m() const noexcept { return graph_->edge_count(); }
    std::int64_t r() const noexcept { return r_; }
    EdgeCount k() const noexcept { return k_; }
    std::int64_t ell() const noexcept { return ell_; }
    std::int64_t tau() const noexcept { return ell_ > r_ ? ell_ - r_ : 0; }
    std::int64_t xi() const noexcept { return n() / r_; }
    EdgeCount slack() const noexcept { return slack_; }

private:
    std::shared_ptr<const Graph> graph_;
    std::int64_t r_;
    EdgeCount k_;
    std::int64_t ell_;
    EdgeCount slack_;
};

/// Reduction Rules 1 and 2 over a fixed partition and touched set X. Removed
/// vertices are only marked; the reduced graph is materialized by the caller.
class ReductionState {
public:
    /// Part independence is read off the edit report's removed (in-part) edges.
    ReductionState(const Graph &g, const Partition &partition, const EditReport &edits, std::int64_t ell);
    /// Part independence is computed from g.
    ReductionState(const Graph &g, const Partition &partition, std::span<const Vertex> touched, std::int64_t ell);

    /// Rule 1: if part i is independent and not contained in X, delete it and
    /// decrement ell. Returns whether the rule fired.
    bool rule1_remove_untouched_part(std::size_t part);

    /// Rule 2: keep only the lowest-id vertex of V_i \ X. Returns the number of
    /// vertices deleted.
    std::size_t rule2_dedupe_untouched_vertices(std::size_t part);

    std::int64_t ell() const noexcept { return ell_; }
    bool is_removed(Vertex v) const { return removed_.at(v) != 0; }
    std::vector<Vertex> remaining_vertices() const;

    const std::vector<std::uint32_t> &rule1_parts() const noexcept { return rule1_parts_; }
    /// One untouched vertex per part deleted by Rule 1; each is adjacent to
    /// every vertex outside its part.
    const std::vector<Vertex> &rule1_representatives() const noexcept { return representatives_; }
    const std::vector<Vertex> &rule2_removed() const noexcept { return rule2_removed_; }

private:
    const Partition &partition_;
    std::vector<char> touched_;
    std::vector<char> independent_;
    std::vector<char> part_removed_;
    std::vector<char> removed_;
    std::int64_t ell_;
    std::vector<std::uint32_t> rule1_parts_;
    std::vector<Vertex> representatives_;
    std::vector<Vertex> rule2_removed_;
};

enum class CompressionStage {
    unchanged,    // r < 2 or n <= 5k: the instance is returned as is
    pivot_clique, // the partition already has at least ell parts
    reduced,      // Rules 1 and 2 applied
};

std::string_view to_string(CompressionStage stage);

struct KernelAccounting {
    std::size_t kernel_vertices = 0;
    std::size_t touched = 0; // |X|
    std::size_t added = 0;   // |R|
    std::size_t removed = 0; // |A|
    EdgeCount bound = 0;     // 5k
};

struct CompressionTrace {
    CompressionStage stage = CompressionStage::unchanged;
    EdgeCount effective_k = 0;
    std::optional<Partition> partition;
    std::optional<EditReport> edits;
    std::vector<std::uint32_t> rule1_parts;
    std::vector<Vertex> rule1_representatives;
    std::vector<Vertex> rule2_removed;
    std::int64_t ell_decrements = 0;
    std::optional<KernelAccounting> accounting;
};

enum class Verdict { open, trivially_yes, trivially_no };

std::string_view to_string(Verdict verdict);

/// Compression output: either a Clique instance (kernel, target) or a settled
/// answer. A kernel clique of size target lifts to a source clique of size
/// source_ell by mapping ids back and adding the Rule 1 representatives.
struct CliqueInstance {
    Verdict verdict = Verdict::open;
    Graph kernel;
    std::int64_t target = 0;
    std::int64_t source_ell = 0;
    std::vector<Vertex> kernel_to_source;
    std::vector<Vertex> forced;
    // source-graph clique of size source_ell when trivially_yes
    std::vector<Vertex> witness;
    CompressionTrace trace;

    std::vector<Vertex> lift(std::span<const Vertex> kernel_clique) const;
};

/// Compression into Clique on at most 5k vertices for tau <= 1. k = 0 is
/// treated as k = 1.
CliqueInstance compress_clique(const TuranCliqueInstance &instance);

/// Rebuilds the kernel graph of a reduced compression from its trace.
Graph replay_trace(const Graph &source, const CompressionTrace &trace);

/// (g, r, k, ell) -> (g, ell, k + t_ell(n) - t_r(n), ell). Requires ell > r.
TuranCliqueInstance shift_parameters(const TuranCliqueInstance &instance);

/// Compression of "independent set of size >= n/(d+1) + t" through the
/// complement graph.
struct IndependentSetCompression {
    Rational avg_degree;
    std::int64_t target = 0; // ceil(n/(d+1)) + t
    std::int64_t r = 0;      // part count used on the complement
    EdgeCount k = 0;         // budget after the parameter shift
    // clique form over the complement; an independent set of g is a clique there
    CliqueInstance clique;
};

IndependentSetCompression compress_independent_set(const Graph &g, std::int64_t t);

} // namespace turan
