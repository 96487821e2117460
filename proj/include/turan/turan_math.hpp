#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// n vertices split into r parts as evenly as possible.
struct TuranParams {
    std::int64_t n;
    std::int64_t r;

    TuranParams(std::int64_t n, std::int64_t r);

    std::int64_t remainder() const noexcept { return n % r; }
    // floor(n / r), the typical part size
    std::int64_t xi() const noexcept { return n / r; }
};

/// Part sizes of T_r(n): ceil(n/r) for the first n mod r parts, floor(n/r)
/// for the rest.
std::vector<std::int64_t> turan_part_sizes(std::int64_t n, std::int64_t r);

/// Exact t_r(n) = C(n,2) - sum_i C(a_i,2) over the part sizes a_i.
EdgeCount turan_edge_count(std::int64_t n, std::int64_t r);

/// T_r(n) with vertices numbered part by part.
Graph build_turan_graph(std::int64_t n, std::int64_t r, GraphOptions options = {});

/// t_ell(n) - t_r(n) for 1 <= r < ell <= n, from two exact counts.
EdgeCount turan_gap(std::int64_t n, std::int64_t r, std::int64_t ell);

struct SurplusCheck {
    bool valid;
    // m - (t_r(n) - k)
    EdgeCount slack;
};

SurplusCheck edge_surplus_check(const Graph &g, std::int64_t r, EdgeCount k);

/// Evaluates both directions of the relation between |E(g)| >= t_r(n) and the
/// average degree of the complement for one concrete graph.
struct AvgDegreeXiCheck {
    bool at_turan_bound;                 // |E(g)| >= t_r(n)
    bool complement_avg_deg_le_xi;       // avg degree of complement <= xi
    bool complement_avg_deg_le_xi_minus_1;

    // |E| >= t_r(n) implies d <= xi
    bool first_implication_holds() const { return !at_turan_bound || complement_avg_deg_le_xi; }
    // d <= xi - 1 implies |E| >= t_r(n)
    bool surplus_implied() const { return !complement_avg_deg_le_xi_minus_1 || at_turan_bound; }
    bool holds() const { return first_implication_holds() && surplus_implied(); }
};

AvgDegreeXiCheck avg_degree_xi_check(const Graph &g, std::int64_t r);

/// a + b, throwing DomainError on signed overflow.
EdgeCount checked_add(EdgeCount a, EdgeCount b);

} // namespace turan
