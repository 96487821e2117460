#include "turan/compression.hpp"

#include <algorithm>
#include <optional>
#include <string_view>

#include "turan/turan_math.hpp"

namespace turan {

namespace {

std::shared_ptr<const Graph> require_graph(std::shared_ptr<const Graph> g)
{
    if (!g)
        throw InvalidInstance("instance graph is null");
    return g;
}

} // namespace

TuranCliqueInstance::TuranCliqueInstance(std::shared_ptr<const Graph> graph, std::int64_t r, EdgeCount k,
                                         std::int64_t ell) :
    graph_(require_graph(std::move(graph))),
    r_(r),
    k_(k),
    ell_(ell),
    slack_(0)
{
    const auto nv = n();
    if (r < 1 || r > nv)
        throw InvalidInstance("r = " + std::to_string(r) + " outside 1.." + std::to_string(nv));
    if (ell < 1 || ell > nv)
        throw InvalidInstance("ell = " + std::to_string(ell) + " outside 1.." + std::to_string(nv));
    if (k < 0)
        throw InvalidInstance("k must be non-negative");
    const auto check = edge_surplus_check(*graph_, r, k);
    slack_ = check.slack;
    if (!check.valid)
        throw InvalidInstance("graph has " + std::to_string(m()) + " edges, fewer than t_r(n) - k (slack " +
                                  std::to_string(check.slack) + ")",
                              check.slack);
}

TuranCliqueInstance::TuranCliqueInstance(Graph graph, std::int64_t r, EdgeCount k, std::int64_t ell) :
    TuranCliqueInstance(std::make_shared<const Graph>(std::move(graph)), r, k, ell)
{
}

ReductionState::ReductionState(const Graph &g, const Partition &partition, const EditReport &edits,
                               std::int64_t ell) :
    partition_(partition),
    touched_(g.vertex_count(), 0),
    independent_(partition.part_count(), 1),
    part_removed_(partition.part_count(), 0),
    removed_(g.vertex_count(), 0),
    ell_(ell)
{
    for (Vertex v : edits.touched)
        touched_.at(v) = 1;
    const auto part_of = partition.part_of(g.vertex_count());
    for (const Edge &e : edits.removed)
        independent_[part_of[e.u]] = 0;
}

ReductionState::ReductionState(const Graph &g, const Partition &partition, std::span<const Vertex> touched,
                               std::int64_t ell) :
    partition_(partition),
    touched_(g.vertex_count(), 0),
    independent_(partition.part_count(), 1),
    part_removed_(partition.part_count(), 0),
    removed_(g.vertex_count(), 0),
    ell_(ell)
{
    validate_partition(partition, g.vertex_count());
    for (Vertex v : touched)
        touched_.at(v) = 1;
    const auto part_of = partition.part_of(g.vertex_count());
    for (std::size_t i = 0; i < partition.part_count(); ++i)
        for (Vertex u : partition.parts[i])
            g.for_each_neighbor(u, [&](Vertex w) {
                if (part_of[w] == i)
                    independent_[i] = 0;
            });
}

bool ReductionState::rule1_remove_untouched_part(std::size_t part)
{
    if (part_removed_.at(part) || !independent_[part])
        return false;
    const auto &members = partition_.parts[part];
    std::optional<Vertex> representative;
    for (Vertex v : members)
        if (!touched_[v] && (!representative || v < *representative))
            representative = v;
    if (!representative)
        return false;
    representatives_.push_back(*representative);
    for (Vertex v : members)
        removed_[v] = 1;
    part_removed_[part] = 1;
    rule1_parts_.push_back(static_cast<std::uint32_t>(part));
    --ell_;
    return true;
}

std::size_t ReductionState::rule2_dedupe_untouched_vertices(std::size_t part)
{
    if (part_removed_.at(part))
        return 0;
    std::vector<Vertex> untouched;
    for (Vertex v : partition_.parts[part])
        if (!touched_[v] && !removed_[v])
            untouched.push_back(v);
    if (untouched.size() <= 1)
        return 0;
    std::sort(untouched.begin(), untouched.end());
    for (std::size_t i = 1; i < untouched.size(); ++i) {
        removed_[untouched[i]] = 1;
        rule2_removed_.push_back(untouched[i]);
    }
    return untouched.size() - 1;
}

std::vector<Vertex> ReductionState::remaining_vertices() const
{
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < removed_.size(); ++v)
        if (!removed_[v])
            out.push_back(static_cast<Vertex>(v));
    return out;
}

std::string_view to_string(CompressionStage stage)
{
    switch (stage) {
    case CompressionStage::unchanged:
        return "unchanged";
    case CompressionStage::pivot_clique:
        return "pivot_clique";
    case CompressionStage::reduced:
        return "reduced";
    }
    return "unknown";
}

std::string_view to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::open:
        return "open";
    case Verdict::trivially_yes:
        return "trivially_yes";
    case Verdict::trivially_no:
        return "trivially_no";
    }
    return "unknown";
}

std::vector<Vertex> CliqueInstance::lift(std::span<const Vertex> kernel_clique) const
{
    std::vector<Vertex> out(forced.begin(), forced.end());
    for (Vertex v : kernel_clique)
        out.push_back(kernel_to_source.at(v));
    std::sort(out.begin(), out.end());
    return out;
}

CliqueInstance compress_clique(const TuranCliqueInstance &instance)
{
    if (instance.tau() > 1)
        throw DomainError("compress_clique needs ell <= r + 1; apply shift_parameters first");

    const Graph &g = instance.graph();
    const auto n = instance.n();
    const EdgeCount k = std::max<EdgeCount>(instance.k(), 1);
    const std::int64_t ell = instance.ell();

    CliqueInstance out;
    out.source_ell = ell;
    out.trace.effective_k = k;

    if (instance.r() < 2 || n <= 5 * k) {
        out.trace.stage = CompressionStage::unchanged;
        out.kernel = g;
        out.target = ell;
        out.kernel_to_source.resize(g.vertex_count());
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            out.kernel_to_source[v] = static_cast<Vertex>(v);
        out.verdict = Verdict::open;
        return out;
    }

    auto partition = erdos_partition(g);
    if (static_cast<std::int64_t>(partition.part_count()) >= ell) {
        out.trace.stage = CompressionStage::pivot_clique;
        out.verdict = Verdict::trivially_yes;
        out.witness.assign(partition.pivots.begin(), partition.pivots.begin() + ell);
        std::sort(out.witness.begin(), out.witness.end());
        out.trace.partition = std::move(partition);
        return out;
    }

    auto edits = compute_edit_report(g, partition);
    ReductionState state(g, partition, edits, ell);
    for (std::size_t i = 0; i < partition.part_count(); ++i)
        state.rule1_remove_untouched_part(i);
    for (std::size_t i = 0; i < partition.part_count(); ++i)
        state.rule2_dedupe_untouched_vertices(i);

    const auto kept = state.remaining_vertices();
    KernelAccounting acc;
    acc.kernel_vertices = kept.size();
    acc.touched = edits.touched.size();
    acc.added = edits.added.size();
    acc.removed = edits.removed.size();
    acc.bound = 5 * k;
    if (acc.kernel_vertices > acc.touched + acc.removed)
        throw std::logic_error("kernel larger than |X| + |A|");
    if (acc.touched > 2 * acc.added)
        throw std::logic_error("|X| exceeds 2|R|");
    if (static_cast<EdgeCount>(2 * acc.added + acc.removed) > acc.bound)
        throw std::logic_error("2|R| + |A| exceeds 5k");

    out.trace.stage = CompressionStage::reduced;
    out.trace.rule1_parts = state.rule1_parts();
    out.trace.rule1_representatives = state.rule1_representatives();
    out.trace.rule2_removed = state.rule2_removed();
    out.trace.ell_decrements = ell - state.ell();
    out.trace.accounting = acc;
    out.forced = state.rule1_representatives();
    out.target = state.ell();

    auto sub = induced_subgraph(g, kept);
    out.kernel = std::move(sub.graph);
    out.kernel_to_source = std::move(sub.to_parent);
    out.trace.partition = std::move(partition);
    out.trace.edits = std::move(edits);

    if (out.target <= 0) {
        out.verdict = Verdict::trivially_yes;
        out.witness.assign(out.forced.begin(), out.forced.begin() + ell);
        std::sort(out.witness.begin(), out.witness.end());
    } else if (out.target > static_cast<std::int64_t>(out.kernel.vertex_count())) {
        out.verdict = Verdict::trivially_no;
    } else {
        out.verdict = Verdict::open;
    }
    return out;
}

Graph replay_trace(const Graph &source, const CompressionTrace &trace)
{
    switch (trace.stage) {
    case CompressionStage::unchanged:
        return source;
    case CompressionStage::pivot_clique:
        return Graph(0, source.options());
    case CompressionStage::reduced:
        break;
    }
    if (!trace.partition)
        throw std::invalid_argument("reduced trace without a partition");
    std::vector<char> removed(source.vertex_count(), 0);
    for (auto part : trace.rule1_parts)
        for (Vertex v : trace.partition->parts.at(part))
            removed[v] = 1;
    for (Vertex v : trace.rule2_removed)
        removed.at(v) = 1;
    std::vector<Vertex> kept;
    for (std::size_t v = 0; v < removed.size(); ++v)
        if (!removed[v])
            kept.push_back(static_cast<Vertex>(v));
    return induced_subgraph(source, kept).graph;
}

TuranCliqueInstance shift_parameters(const TuranCliqueInstance &instance)
{
    if (instance.ell() <= instance.r())
        throw DomainError("shift_parameters needs ell > r");
    const EdgeCount gap = turan_gap(instance.n(), instance.r(), instance.ell());
    return TuranCliqueInstance(instance.shared_graph(), instance.ell(), checked_add(instance.k(), gap),
                               instance.ell());
}

IndependentSetCompression compress_independent_set(const Graph &g, std::int64_t t)
{
    if (t < 1)
        throw DomainError("t must be at least 1");
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    if (n < 1)
        throw DomainError("graph has no vertices");

    IndependentSetCompression out;
    out.avg_degree = average_degree(g);
    // n / (d + 1) = n^2 / (2m + n)
    const std::int64_t denom = 2 * g.edge_count() + n;
    out.target = checked_add((n * n + denom - 1) / denom, t);

    if (out.target > n) {
        out.clique.verdict = Verdict::trivially_no;
        out.clique.source_ell = out.target;
        return out;
    }

    const std::int64_t ceil_d = (2 * g.edge_count() + n - 1) / n;
    if (ceil_d + 1 > n)
        throw DomainError("average degree leaves no room for a part count");
    auto complement_graph = std::make_shared<const Graph>(complement(g));
    std::int64_t r = n / (ceil_d + 1);
    while (r > 1 && !edge_surplus_check(*complement_graph, r, 0).valid)
        --r;
    out.r = r;

    TuranCliqueInstance instance(complement_graph, r, 0, out.target);
    if (instance.tau() > 1)
        instance = shift_parameters(instance);
    out.k = instance.k();
    out.clique = compress_clique(instance);
    return out;
}

} // namespace turan
