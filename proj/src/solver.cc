#include <loccode/bounds.hh>
#include <loccode/solver.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

using std::size_t;
using std::vector;

namespace loccode
{
    namespace
    {
        using Mask = std::uint64_t;
        using Clock = std::chrono::steady_clock;

        auto bit(VertexId v) -> Mask { return Mask{1} << v; }

        // Every class is a hitting-set problem: a code is valid iff it meets every
        // constraint set.
        struct Instance
        {
            size_t n = 0;
            vector<Mask> constraints;
        };

        auto build_instance(const Graph & graph, CodeClass cls) -> Instance
        {
            if (graph.size() == 0 || graph.size() > 64)
                throw std::invalid_argument("the exact solver handles graphs with 1 to 64 vertices");
            if (cls.r < 1)
                throw std::invalid_argument("radius must be at least 1");
            if (cls.kind == CodeKind::Identifying || cls.kind == CodeKind::LocalIdentifying) {
                auto adm = admits(graph, cls.kind, cls.r);
                if (! adm.admits)
                    throw std::invalid_argument("graph admits no code of class " + short_name(cls.kind) + ": vertices "
                            + graph.label(adm.twins->first) + " and " + graph.label(adm.twins->second) + " are twins");
            }

            Instance inst;
            inst.n = graph.size();
            BallTable table(graph, cls.r);
            vector<Mask> ball(inst.n);
            for (VertexId v = 0; v < inst.n; ++v)
                for (auto u : table.ball(v))
                    ball[v] |= bit(u);

            auto & out = inst.constraints;
            for (VertexId v = 0; v < inst.n; ++v)
                out.push_back(cls.kind == CodeKind::TotalDominating ? ball[v] & ~bit(v) : ball[v]);

            bool ld = cls.kind == CodeKind::LocatingDominating || cls.kind == CodeKind::LocalLocatingDominating;
            auto add_pair = [&](VertexId u, VertexId v) {
                if (! (ball[u] & ball[v]))
                    return; // disjoint balls are separated once both are covered
                auto sep = ball[u] ^ ball[v];
                if (ld)
                    sep |= bit(u) | bit(v);
                out.push_back(sep);
            };

            switch (cls.kind) {
                case CodeKind::Covering:
                case CodeKind::TotalDominating:
                    break;
                case CodeKind::Identifying:
                case CodeKind::LocatingDominating:
                    for (VertexId u = 0; u < inst.n; ++u)
                        for (VertexId v = u + 1; v < inst.n; ++v)
                            add_pair(u, v);
                    break;
                case CodeKind::LocalIdentifying:
                case CodeKind::LocalLocatingDominating:
                    for (auto [u, v] : graph.edges())
                        add_pair(u, v);
                    break;
            }

            if (std::ranges::any_of(out, [](Mask m) { return m == 0; }))
                throw std::invalid_argument("graph admits no code of class " + short_name(cls.kind));

            std::ranges::sort(out, [](Mask a, Mask b) {
                auto pa = std::popcount(a), pb = std::popcount(b);
                return pa != pb ? pa < pb : a < b;
            });
            out.erase(std::unique(out.begin(), out.end()), out.end());

            // Drop sets implied by a smaller one.
            vector<Mask> kept;
            for (auto m : out)
                if (std::ranges::none_of(kept, [m](Mask s) { return (s & m) == s; }))
                    kept.push_back(m);
            out = std::move(kept);
            return inst;
        }

        auto packing_bound(const vector<Mask> & sets) -> size_t
        {
            Mask used = 0;
            size_t count = 0;
            for (auto s : sets)
                if (! (s & used)) {
                    used |= s;
                    ++count;
                }
            return count;
        }

        struct Control
        {
            std::atomic<std::uint64_t> nodes{0};
            std::atomic<bool> exhausted{false};
            std::uint64_t max_nodes = 0;
            std::optional<Clock::time_point> deadline;
            // Lowest branch index that found a solution; later branches stop.
            std::atomic<size_t> first_feasible{~size_t{0}};

            auto tick(size_t branch) -> bool
            {
                auto count = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
                if (max_nodes && count > max_nodes)
                    exhausted = true;
                if (deadline && (count & 1023) == 0 && Clock::now() > *deadline)
                    exhausted = true;
                return ! exhausted && branch <= first_feasible.load(std::memory_order_relaxed);
            }
        };

        class Search
        {
            public:
                Search(const Instance & inst, size_t k, Control & control, size_t branch) :
                    _inst(inst), _k(k), _control(control), _branch(branch), _levels(k + 2)
                {
                }

                auto run(Mask chosen, Mask excluded, const vector<std::uint32_t> & unhit) -> SearchStatus
                {
                    _levels[0] = unhit;
                    return dfs(chosen, excluded, 0);
                }

                auto witness() const -> Mask { return _witness; }
                auto nodes() const -> std::uint64_t { return _nodes; }

            private:
                auto dfs(Mask chosen, Mask excluded, size_t level) -> SearchStatus
                {
                    if (! _control.tick(_branch))
                        return SearchStatus::Unknown;
                    ++_nodes;

                    const auto & unhit = _levels[level];
                    if (unhit.empty()) {
                        _witness = chosen;
                        return SearchStatus::Feasible;
                    }

                    auto left = _k - static_cast<size_t>(std::popcount(chosen));
                    if (left == 0)
                        return SearchStatus::Refuted;

                    Mask branch_on = 0, used = 0;
                    int best = 65;
                    size_t packing = 0;
                    for (auto idx : unhit) {
                        auto avail = _inst.constraints[idx] & ~excluded;
                        int count = std::popcount(avail);
                        if (count == 0)
                            return SearchStatus::Refuted;
                        if (count < best) {
                            best = count;
                            branch_on = avail;
                        }
                        if (! (avail & used)) {
                            used |= avail;
                            ++packing;
                        }
                    }
                    if (packing > left)
                        return SearchStatus::Refuted;

                    auto & next = _levels[level + 1];
                    while (branch_on) {
                        auto v = static_cast<VertexId>(std::countr_zero(branch_on));
                        branch_on &= branch_on - 1;
                        next.clear();
                        for (auto idx : unhit)
                            if (! (_inst.constraints[idx] & bit(v)))
                                next.push_back(idx);
                        auto status = dfs(chosen | bit(v), excluded, level + 1);
                        if (status != SearchStatus::Refuted)
                            return status;
                        excluded |= bit(v);
                    }
                    return SearchStatus::Refuted;
                }

                const Instance & _inst;
                size_t _k;
                Control & _control;
                size_t _branch;
                vector<vector<std::uint32_t>> _levels;
                Mask _witness = 0;
                std::uint64_t _nodes = 0;
        };

        auto to_set(size_t n, Mask m) -> VertexSet
        {
            VertexSet s(n);
            for (VertexId v = 0; v < n; ++v)
                if (m & bit(v))
                    s.insert(v);
            return s;
        }

        struct Branch
        {
            Mask chosen, excluded;
            vector<std::uint32_t> unhit;
        };

        auto run_size(const Instance & inst, size_t k, bool fix_first, const SolveBudget & budget, unsigned threads)
            -> RefuteResult
        {
            RefuteResult result;
            if (k == 0) {
                result.status = SearchStatus::Refuted;
                return result;
            }
            k = std::min(k, inst.n);

            Control control;
            control.max_nodes = budget.max_nodes;
            if (budget.max_seconds > 0)
                control.deadline = Clock::now()
                    + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.max_seconds));

            Mask root = fix_first ? bit(0) : 0;
            vector<std::uint32_t> unhit;
            for (std::uint32_t i = 0; i < inst.constraints.size(); ++i)
                if (! (inst.constraints[i] & root))
                    unhit.push_back(i);

            // Root expansion mirrors Search::dfs so that every child is an
            // independent subtree in canonical order.
            vector<Branch> branches;
            control.nodes = 1;
            if (unhit.empty()) {
                result.status = SearchStatus::Feasible;
                result.witness = to_set(inst.n, root);
                result.nodes = 1;
                return result;
            }
            {
                vector<Mask> avail_sets;
                Mask branch_on = 0;
                int best = 65;
                for (auto idx : unhit) {
                    auto avail = inst.constraints[idx];
                    if (std::popcount(avail) < best) {
                        best = std::popcount(avail);
                        branch_on = avail;
                    }
                    avail_sets.push_back(avail);
                }
                auto left = k - static_cast<size_t>(std::popcount(root));
                if (left == 0 || packing_bound(avail_sets) > left) {
                    result.status = SearchStatus::Refuted;
                    result.nodes = 1;
                    return result;
                }
                Mask excluded = 0;
                while (branch_on) {
                    auto v = static_cast<VertexId>(std::countr_zero(branch_on));
                    branch_on &= branch_on - 1;
                    Branch b{root | bit(v), excluded, {}};
                    for (auto idx : unhit)
                        if (! (inst.constraints[idx] & bit(v)))
                            b.unhit.push_back(idx);
                    branches.push_back(std::move(b));
                    excluded |= bit(v);
                }
            }

            vector<SearchStatus> statuses(branches.size(), SearchStatus::Unknown);
            vector<Mask> witnesses(branches.size(), 0);
            vector<std::uint64_t> branch_nodes(branches.size(), 0);
            std::atomic<size_t> next_branch{0};

            auto worker = [&] {
                while (true) {
                    auto i = next_branch.fetch_add(1);
                    if (i >= branches.size() || i > control.first_feasible.load() || control.exhausted)
                        return;
                    Search search(inst, k, control, i);
                    statuses[i] = search.run(branches[i].chosen, branches[i].excluded, branches[i].unhit);
                    branch_nodes[i] = search.nodes();
                    if (statuses[i] == SearchStatus::Feasible) {
                        witnesses[i] = search.witness();
                        auto current = control.first_feasible.load();
                        while (i < current && ! control.first_feasible.compare_exchange_weak(current, i))
                            ;
                    }
                }
            };

            auto count = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(branches.size())));
            if (count == 1)
                worker();
            else {
                vector<std::thread> pool;
                for (unsigned t = 0; t < count; ++t)
                    pool.emplace_back(worker);
                for (auto & t : pool)
                    t.join();
            }

            // Only canonical work is counted: the root plus every branch up to
            // the deciding one, so the count does not depend on the schedule.
            result.nodes = 1;
            result.status = SearchStatus::Refuted;
            for (size_t i = 0; i < branches.size(); ++i) {
                result.nodes += branch_nodes[i];
                if (statuses[i] == SearchStatus::Refuted)
                    continue;
                result.status = statuses[i];
                if (statuses[i] == SearchStatus::Feasible)
                    result.witness = to_set(inst.n, witnesses[i]);
                break;
            }
            return result;
        }

        auto use_symmetry(const Graph & graph, const SolveOptions & options) -> bool
        {
            return options.symmetry && graph.vertex_transitive();
        }
    }

    auto refute_size(const Graph & graph, CodeClass cls, size_t k, const SolveBudget & budget, const SolveOptions & options)
        -> RefuteResult
    {
        auto inst = build_instance(graph, cls);
        return run_size(inst, k, use_symmetry(graph, options), budget, options.threads);
    }

    auto solve_min(const Graph & graph, CodeClass cls, const SolveBudget & budget, const SolveOptions & options)
        -> SolveResult
    {
        auto inst = build_instance(graph, cls);
        auto n = inst.n;

        size_t lower = std::max<size_t>(1, packing_bound(inst.constraints));
        {
            BallTable table(graph, cls.r);
            auto reach = table.max_ball_size() - (cls.kind == CodeKind::TotalDominating ? 1 : 0);
            lower = std::max(lower, (n + reach - 1) / reach);
        }
        const auto & prov = graph.provenance();
        if (prov.family == GraphFamily::Hypercube && prov.dimension >= 3 && cls.r == 1
                && (cls.kind == CodeKind::LocalIdentifying || cls.kind == CodeKind::Identifying))
            lower = std::max<size_t>(lower, hypercube_lid_lower_bound(prov.dimension));

        SolveResult result;
        result.lower_bound_used = lower;
        result.certified_lower = lower;

        auto cap = budget.size_hint ? std::min(*budget.size_hint, n) : n;
        auto start = Clock::now();
        for (auto k = lower; k <= cap; ++k) {
            SolveBudget step = budget;
            if (budget.max_nodes) {
                if (result.nodes_explored >= budget.max_nodes)
                    break;
                step.max_nodes = budget.max_nodes - result.nodes_explored;
            }
            if (budget.max_seconds > 0) {
                auto spent = std::chrono::duration<double>(Clock::now() - start).count();
                if (spent >= budget.max_seconds)
                    break;
                step.max_seconds = budget.max_seconds - spent;
            }

            auto r = run_size(inst, k, use_symmetry(graph, options), step, options.threads);
            result.nodes_explored += r.nodes;
            if (r.status == SearchStatus::Refuted) {
                result.certified_lower = k + 1;
                continue;
            }
            if (r.status == SearchStatus::Feasible) {
                result.witness = r.witness;
                result.optimal_size = r.witness->count();
                result.exhausted_below = result.optimal_size <= result.certified_lower;
            }
            break;
        }
        return result;
    }
}
