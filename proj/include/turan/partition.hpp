#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Ordered partition V_1..V_p of the vertex set together with one pivot per
/// part. Parts produced by erdos_partition are sorted ascending.
struct Partition {
    std::vector<std::vector<Vertex>> parts;
    std::vector<Vertex> pivots;

    std::size_t part_count() const noexcept { return parts.size(); }

    /// part index of every vertex of an n-vertex graph
    std::vector<std::uint32_t> part_of(std::size_t n) const;

    friend bool operator==(const Partition &, const Partition &) = default;
};

class InvalidPartition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws InvalidPartition unless the parts are nonempty, disjoint, cover
/// 0..n-1, and each pivot lies in its own part.
void validate_partition(const Partition &partition, std::size_t n);

/// Repeatedly takes a maximum-degree vertex v of the remaining graph (lowest
/// id on ties), splits off its closed non-neighbourhood as the next part and
/// recurses on what is left. Defined for every graph with n >= 1; runs in
/// O(n^2) time.
Partition erdos_partition(const Graph &g);

/// Symmetric difference between g and the complete multipartite graph on a
/// partition's parts.
struct EditReport {
    std::vector<Edge> added;   // cross-part non-edges of g
    std::vector<Edge> removed; // edges of g inside a part
    std::vector<Vertex> touched;

    bool empty() const noexcept { return added.empty() && removed.empty(); }
};

EditReport compute_edit_report(const Graph &g, const Partition &partition);

struct MultipartiteClosure {
    Graph closure;
    EditReport edits;
};

MultipartiteClosure multipartite_closure(const Graph &g, const Partition &partition);

enum class PartitionProperty {
    structure,          // not a partition with in-part pivots
    part_count,         // p >= r - k
    pivot_adjacency,    // N(v_i) contains every later part
    closure_edges,      // |E(G')| >= |E(G)|
    edit_distance,      // |E(G) symdiff E(G')| <= 3k
    added_bound,        // |R| <= 2k
    added_vs_removed,   // |R| >= |A|
    coverage,           // vertices covered by A are covered by R
};

std::string_view to_string(PartitionProperty property);

struct PropertyViolation {
    PartitionProperty property;
    std::string detail;
    // counterexample vertices, e.g. the pivot and a non-adjacent later vertex
    std::vector<Vertex> witness;
};

struct PartitionVerification {
    std::optional<std::string> precondition_failure;
    std::vector<PropertyViolation> violations;
    std::size_t part_count = 0;
    std::size_t added = 0;
    std::size_t removed = 0;
    std::size_t touched = 0;
    bool closure_checked = false; // property (iii) only applies when p <= r

    bool ok() const noexcept { return !precondition_failure && violations.empty(); }
};

/// Checks the guarantees the partition carries for a graph with
/// m >= t_r(n) - k, k >= 1, r >= 2. Precondition failures are reported
/// separately from property violations.
PartitionVerification verify_partition(const Graph &g, const Partition &partition, std::int64_t r, EdgeCount k);

} // namespace turan
