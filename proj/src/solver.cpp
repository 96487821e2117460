#include "turan/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace turan {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point since)
{
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count();
}

/// Adjacency bitsets over vertices renumbered by a degeneracy order: position
/// 0 holds the last vertex removed by smallest-last elimination.
struct SearchGraph {
    std::size_t n = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> adj;
    std::vector<Vertex> original;

    const std::uint64_t *row(std::size_t v) const { return adj.data() + v * words; }
};

SearchGraph build_search_graph(const Graph &g)
{
    SearchGraph s;
    s.n = g.vertex_count();
    s.words = (s.n + 63) / 64;

    std::vector<std::size_t> degree(s.n);
    for (std::size_t v = 0; v < s.n; ++v)
        degree[v] = g.degree(static_cast<Vertex>(v));
    std::vector<char> gone(s.n, 0);
    std::vector<Vertex> removal;
    removal.reserve(s.n);
    for (std::size_t step = 0; step < s.n; ++step) {
        std::size_t pick = s.n;
        for (std::size_t v = 0; v < s.n; ++v)
            if (!gone[v] && (pick == s.n || degree[v] < degree[pick]))
                pick = v;
        gone[pick] = 1;
        removal.push_back(static_cast<Vertex>(pick));
        g.for_each_neighbor(static_cast<Vertex>(pick), [&](Vertex w) {
            if (!gone[w])
                --degree[w];
        });
    }
    s.original.assign(removal.rbegin(), removal.rend());

    std::vector<std::size_t> position(s.n);
    for (std::size_t i = 0; i < s.n; ++i)
        position[s.original[i]] = i;
    s.adj.assign(s.n * s.words, 0);
    for (std::size_t i = 0; i < s.n; ++i)
        g.for_each_neighbor(s.original[i], [&](Vertex w) {
            const std::size_t j = position[w];
            s.adj[i * s.words + j / 64] |= std::uint64_t{1} << (j % 64);
        });
    return s;
}

struct SharedSearch {
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t budget = default_node_budget;
    std::atomic<bool> abort{false};
    // best size seen by any worker; only used when optimizing in parallel
    std::atomic<std::size_t> best{0};
};

/// One depth-first branch and bound. With stop_at set the search ends at the
/// first clique reaching that size.
class Search {
public:
    Search(const SearchGraph &graph, SharedSearch &shared, std::size_t best, std::size_t stop_at, bool follow_shared) :
        g_(graph),
        shared_(shared),
        best_(best),
        stop_at_(stop_at),
        follow_shared_(follow_shared)
    {
    }

    void run_root()
    {
        std::vector<std::uint64_t> all(g_.words, 0);
        for (std::size_t v = 0; v < g_.n; ++v)
            all[v / 64] |= std::uint64_t{1} << (v % 64);
        if (g_.n > 0)
            expand(all, 0);
    }

    /// Explores the subtree rooted at `v` with candidates `candidates`.
    void run_branch(std::size_t v, const std::vector<std::uint64_t> &candidates)
    {
        current_.push_back(static_cast<Vertex>(v));
        step_into(candidates, 0);
        current_.pop_back();
    }

    bool stopped() const noexcept { return stopped_; }
    std::size_t best() const noexcept { return best_; }
    const std::vector<Vertex> &best_clique() const noexcept { return best_clique_; }

    // Colour classes of p: order[i] is a vertex, bound[i] its colour number.
    void colour_sort(std::vector<std::uint64_t> p, std::vector<Vertex> &order, std::vector<std::size_t> &bound) const
    {
        order.clear();
        bound.clear();
        std::vector<std::uint64_t> q(g_.words);
        std::size_t colour = 0;
        auto nonempty = [&](const std::vector<std::uint64_t> &bits) {
            return std::any_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w != 0; });
        };
        while (nonempty(p)) {
            ++colour;
            q = p;
            for (std::size_t w = 0; w < g_.words; ++w) {
                while (q[w] != 0) {
                    const auto v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
                    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
                    q[w] &= ~bit;
                    p[w] &= ~bit;
                    const std::uint64_t *nv = g_.row(v);
                    for (std::size_t x = w; x < g_.words; ++x)
                        q[x] &= ~nv[x];
                    order.push_back(static_cast<Vertex>(v));
                    bound.push_back(colour);
                }
            }
        }
    }

private:
    void count_node()
    {
        const auto seen = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (seen > shared_.budget || shared_.abort.load(std::memory_order_relaxed)) {
            shared_.abort.store(true, std::memory_order_relaxed);
            throw BudgetExceeded(shared_.budget);
        }
    }

    void refresh_best()
    {
        if (follow_shared_)
            best_ = std::max(best_, shared_.best.load(std::memory_order_relaxed));
    }

    void record()
    {
        if (current_.size() <= best_)
            return;
        best_ = current_.size();
        best_clique_ = current_;
        if (follow_shared_) {
            auto seen = shared_.best.load(std::memory_order_relaxed);
            while (seen < best_ && !shared_.best.compare_exchange_weak(seen, best_, std::memory_order_relaxed)) {
            }
        }
        if (stop_at_ != 0 && best_ >= stop_at_)
            stopped_ = true;
    }

    void step_into(const std::vector<std::uint64_t> &candidates, std::size_t depth)
    {
        const bool empty =
            std::all_of(candidates.begin(), candidates.end(), [](std::uint64_t w) { return w == 0; });
        if (empty)
            record();
        else
            expand(candidates, depth + 1);
    }

    void expand(std::vector<std::uint64_t> p, std::size_t depth)
    {
        count_node();
        refresh_best();
        if (order_.size() <= depth) {
            order_.resize(depth + 1);
            bound_.resize(depth + 1);
        }
        colour_sort(p, order_[depth], bound_[depth]);
        std::vector<std::uint64_t> next(g_.words);
        for (std::size_t i = order_[depth].size(); i-- > 0;) {
            if (current_.size() + bound_[depth][i] <= best_)
                return;
            const Vertex v = order_[depth][i];
            const std::uint64_t *nv = g_.row(v);
            for (std::size_t w = 0; w < g_.words; ++w)
                next[w] = p[w] & nv[w];
            current_.push_back(v);
            step_into(next, depth);
            current_.pop_back();
            if (stopped_)
                return;
            p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
            refresh_best();
        }
    }

    const SearchGraph &g_;
    SharedSearch &shared_;
    std::size_t best_;
    std::size_t stop_at_;
    bool follow_shared_;
    bool stopped_ = false;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_clique_;
    std::vector<std::vector<Vertex>> order_;
    std::vector<std::vector<std::size_t>> bound_;
};

std::vector<Vertex> to_original(const SearchGraph &g, const std::vector<Vertex> &clique)
{
    std::vector<Vertex> out;
    out.reserve(clique.size());
    for (Vertex v : clique)
        out.push_back(g.original[v]);
    std::sort(out.begin(), out.end());
    return out;
}

/// Root-level branches in depth-first order: branch j takes the vertex with
/// the j-th highest colour position and the candidates before it.
struct RootBranches {
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;

    std::size_t size() const { return order.size(); }
    std::size_t index(std::size_t j) const { return order.size() - 1 - j; }

    std::vector<std::uint64_t> candidates(const SearchGraph &g, std::size_t j) const
    {
        const std::size_t i = index(j);
        std::vector<std::uint64_t> out(g.words, 0);
        for (std::size_t t = 0; t < i; ++t)
            out[order[t] / 64] |= std::uint64_t{1} << (order[t] % 64);
        const std::uint64_t *nv = g.row(order[i]);
        for (std::size_t w = 0; w < g.words; ++w)
            out[w] &= nv[w];
        return out;
    }
};

RootBranches root_branches(const SearchGraph &g, SharedSearch &shared)
{
    RootBranches out;
    shared.nodes.fetch_add(1, std::memory_order_relaxed);
    std::vector<std::uint64_t> all(g.words, 0);
    for (std::size_t v = 0; v < g.n; ++v)
        all[v / 64] |= std::uint64_t{1} << (v % 64);
    Search(g, shared, 0, 0, false).colour_sort(all, out.order, out.bound);
    return out;
}

template <typename Body>
void run_workers(unsigned threads, SharedSearch &shared, Body body)
{
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t)
            workers.emplace_back([&] {
                try {
                    body();
                } catch (...) {
                    shared.abort.store(true);
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            });
    }
    if (failure)
        std::rethrow_exception(failure);
}

/// First clique of size >= target in depth-first order, searching root
/// branches concurrently. Each branch runs with the fixed incumbent
/// target - 1, so its outcome does not depend on scheduling, and the lowest
/// successful branch is exactly what the sequential search would return.
std::vector<Vertex> parallel_find_first(const SearchGraph &g, SharedSearch &shared, std::size_t target,
                                        unsigned threads)
{
    const auto roots = root_branches(g, shared);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> found{std::numeric_limits<std::size_t>::max()};
    std::vector<Vertex> found_clique;
    std::mutex found_mutex;

    run_workers(threads, shared, [&] {
        for (;;) {
            const std::size_t j = next.fetch_add(1);
            if (j >= roots.size() || j > found.load())
                return;
            if (roots.bound[roots.index(j)] + 1 <= target)
                return; // colour bound too small here and for every later branch
            Search search(g, shared, target - 1, target, false);
            search.run_branch(roots.order[roots.index(j)], roots.candidates(g, j));
            if (search.stopped()) {
                std::lock_guard lock(found_mutex);
                if (j < found.load()) {
                    found.store(j);
                    found_clique = search.best_clique();
                }
            }
        }
    });
    return found_clique;
}

std::size_t parallel_max_size(const SearchGraph &g, SharedSearch &shared, unsigned threads)
{
    const auto roots = root_branches(g, shared);
    std::atomic<std::size_t> next{0};
    run_workers(threads, shared, [&] {
        for (;;) {
            const std::size_t j = next.fetch_add(1);
            if (j >= roots.size())
                return;
            if (roots.bound[roots.index(j)] <= shared.best.load())
                return;
            Search search(g, shared, shared.best.load(), 0, true);
            search.run_branch(roots.order[roots.index(j)], roots.candidates(g, j));
        }
    });
    return shared.best.load();
}

} // namespace

CliqueSearchResult max_clique_exact(const Graph &g, const SolverOptions &options)
{
    const auto sg = build_search_graph(g);
    SharedSearch shared;
    shared.budget = options.node_budget;
    CliqueSearchResult out;
    if (sg.n == 0)
        return out;
    if (options.threads <= 1) {
        Search search(sg, shared, 0, 0, false);
        search.run_root();
        out.clique = to_original(sg, search.best_clique());
    } else {
        const std::size_t omega = parallel_max_size(sg, shared, options.threads);
        out.clique = to_original(sg, parallel_find_first(sg, shared, omega, options.threads));
    }
    out.nodes = shared.nodes.load();
    return out;
}

CliqueSearchResult find_clique(const Graph &g, std::size_t target, const SolverOptions &options)
{
    CliqueSearchResult out;
    if (target == 0 || target > g.vertex_count())
        return out;
    const auto sg = build_search_graph(g);
    SharedSearch shared;
    shared.budget = options.node_budget;
    if (options.threads <= 1) {
        Search search(sg, shared, target - 1, target, false);
        search.run_root();
        if (search.stopped())
            out.clique = to_original(sg, search.best_clique());
    } else {
        out.clique = to_original(sg, parallel_find_first(sg, shared, target, options.threads));
    }
    out.nodes = shared.nodes.load();
    return out;
}

namespace {

Decision decide_compressed(CliqueInstance compressed, std::int64_t target, const SolverOptions &options,
                           SolveStats stats)
{
    Decision out;
    out.target = target;
    switch (compressed.verdict) {
    case Verdict::trivially_yes:
        out.yes = true;
        out.witness = compressed.witness;
        break;
    case Verdict::trivially_no:
        break;
    case Verdict::open: {
        stats.kernel_vertices = compressed.kernel.vertex_count();
        const auto found = find_clique(compressed.kernel, static_cast<std::size_t>(compressed.target), options);
        stats.nodes = found.nodes;
        if (!found.clique.empty()) {
            out.yes = true;
            out.witness = compressed.lift(found.clique);
        }
        break;
    }
    }
    out.stats = stats;
    out.compression = std::move(compressed);
    return out;
}

} // namespace

Decision solve_turan_clique(const TuranCliqueInstance &instance, const SolverOptions &options)
{
    const auto start = Clock::now();
    SolveStats stats;
    stats.shifted = instance.tau() > 1;
    const auto work = stats.shifted ? shift_parameters(instance) : instance;

    const auto compress_start = Clock::now();
    auto compressed = compress_clique(work);
    stats.compress_ns = elapsed_ns(compress_start);

    auto out = decide_compressed(std::move(compressed), instance.ell(), options, stats);
    if (out.yes && !verify_witness(instance.graph(), out.witness, instance.ell(), WitnessMode::clique))
        throw std::logic_error("solver produced an invalid clique witness");
    out.stats.wall_ns = elapsed_ns(start);
    return out;
}

Decision solve_turan_is(const Graph &g, std::int64_t t, const SolverOptions &options)
{
    const auto start = Clock::now();
    SolveStats stats;
    auto compressed = compress_independent_set(g, t);
    stats.compress_ns = elapsed_ns(start);
    stats.shifted = compressed.r > 0 && compressed.target > compressed.r + 1;

    auto out = decide_compressed(std::move(compressed.clique), compressed.target, options, stats);
    if (out.yes && !verify_witness(g, out.witness, compressed.target, WitnessMode::independent_set))
        throw std::logic_error("solver produced an invalid independent-set witness");
    out.stats.wall_ns = elapsed_ns(start);
    return out;
}

bool verify_witness(const Graph &g, std::span<const Vertex> s, std::int64_t ell, WitnessMode mode)
{
    for (Vertex v : s)
        if (v >= g.vertex_count())
            throw GraphError("witness vertex " + std::to_string(v) + " out of range");
    std::vector<Vertex> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    if (static_cast<std::int64_t>(sorted.size()) < ell)
        return false;
    const bool want_edge = mode == WitnessMode::clique;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (g.has_edge(sorted[i], sorted[j]) != want_edge)
                return false;
    return true;
}

} // namespace turan
