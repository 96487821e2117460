#include "turan/turan_math.hpp"

#include <string>

namespace turan {

namespace {

EdgeCount choose2(std::int64_t a)
{
    return a * (a - 1) / 2;
}

void check_parts(std::int64_t n, std::int64_t r)
{
    if (r < 1)
        throw DomainError("part count r must be at least 1, got " + std::to_string(r));
    if (r > n)
        throw DomainError("part count r = " + std::to_string(r) + " exceeds n = " + std::to_string(n));
    if (static_cast<std::uint64_t>(n) > max_vertex_count)
        throw DomainError("n = " + std::to_string(n) + " exceeds 2^31-1");
}

} // namespace

TuranParams::TuranParams(std::int64_t n_, std::int64_t r_) :
    n(n_),
    r(r_)
{
    check_parts(n, r);
}

std::vector<std::int64_t> turan_part_sizes(std::int64_t n, std::int64_t r)
{
    const TuranParams params(n, r);
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(r), params.xi());
    for (std::int64_t i = 0; i < params.remainder(); ++i)
        ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

EdgeCount turan_edge_count(std::int64_t n, std::int64_t r)
{
    const TuranParams params(n, r);
    const std::int64_t s = params.remainder();
    const std::int64_t q = params.xi();
    // n < 2^31 keeps every term below 2^62.
    return choose2(n) - s * choose2(q + 1) - (r - s) * choose2(q);
}

Graph build_turan_graph(std::int64_t n, std::int64_t r, GraphOptions options)
{
    const auto sizes = turan_part_sizes(n, r);
    std::vector<std::uint32_t> part_of;
    part_of.reserve(static_cast<std::size_t>(n));
    for (std::size_t p = 0; p < sizes.size(); ++p)
        part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[p]), static_cast<std::uint32_t>(p));
    return Graph::complete_multipartite(part_of, options);
}

EdgeCount turan_gap(std::int64_t n, std::int64_t r, std::int64_t ell)
{
    if (!(1 <= r && r < ell && ell <= n))
        throw DomainError("turan_gap requires 1 <= r < ell <= n, got n=" + std::to_string(n) +
                          " r=" + std::to_string(r) + " ell=" + std::to_string(ell));
    return turan_edge_count(n, ell) - turan_edge_count(n, r);
}

SurplusCheck edge_surplus_check(const Graph &g, std::int64_t r, EdgeCount k)
{
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    const EdgeCount slack = checked_add(g.edge_count() - turan_edge_count(n, r), k);
    return {slack >= 0, slack};
}

AvgDegreeXiCheck avg_degree_xi_check(const Graph &g, std::int64_t r)
{
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    const TuranParams params(n, r);
    const EdgeCount complement_edges = choose2(n) - g.edge_count();
    // avg degree of the complement is 2 * complement_edges / n
    AvgDegreeXiCheck out{};
    out.at_turan_bound = g.edge_count() >= turan_edge_count(n, r);
    out.complement_avg_deg_le_xi = 2 * complement_edges <= params.xi() * n;
    out.complement_avg_deg_le_xi_minus_1 = 2 * complement_edges <= (params.xi() - 1) * n;
    return out;
}

EdgeCount checked_add(EdgeCount a, EdgeCount b)
{
    EdgeCount out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw DomainError("edge count arithmetic overflow");
    return out;
}

} // namespace turan
