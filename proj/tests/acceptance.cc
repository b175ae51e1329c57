// One line per acceptance criterion. Every check is recomputed here from the
// public API rather than read back from the check suite.

#include <loccode/bounds.hh>
#include <loccode/check_suite.hh>
#include <loccode/constructions.hh>
#include <loccode/pattern.hh>
#include <loccode/solver.hh>

#include <chrono>
#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace loccode;
using std::string;
using std::vector;

namespace
{
    struct Failed : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto require(bool condition, const string & what) -> void
    {
        if (! condition)
            throw Failed(what);
    }

    auto codes_from_mask(std::size_t n, std::uint64_t mask) -> VertexSet
    {
        VertexSet s(n);
        for (VertexId v = 0; v < n; ++v)
            if (mask >> v & 1)
                s.insert(v);
        return s;
    }

    auto lid(const HypercubeCode & code) -> bool
    {
        auto g = hypercube(code.n);
        return verify(code.on(g), {CodeKind::LocalIdentifying, 1}).valid;
    }

    auto criterion_1() -> string
    {
        const std::map<CodeKind, vector<std::size_t>> table{
            {CodeKind::Covering, {2, 2, 4, 7}},
            {CodeKind::LocalIdentifying, {2, 4, 6, 8}},
            {CodeKind::Identifying, {3, 4, 7, 10}},
            {CodeKind::LocatingDominating, {2, 4, 6, 10}},
        };
        int entries = 0;
        for (const auto & [kind, values] : table)
            for (int n = 2; n <= 5; ++n) {
                auto g = hypercube(n);
                auto want = values[n - 2];
                auto best = solve_min(g, {kind, 1});
                auto tag = short_name(kind) + " n=" + std::to_string(n);
                require(best.certified() && best.optimal_size == want, tag + ": " + std::to_string(best.optimal_size));
                require(verify(Code(g, *best.witness), {kind, 1}).valid, tag + ": witness invalid");
                require(refute_size(g, {kind, 1}, want - 1).status == SearchStatus::Refuted, tag + ": k-1 not refuted");
                ++entries;
            }
        return std::to_string(entries) + " certified entries";
    }

    auto criterion_2() -> string
    {
        auto g = hypercube(3);
        Verifier v(g, 1);
        for (std::uint64_t mask = 1; mask < 256; ++mask) {
            auto s = codes_from_mask(8, mask);
            require(v.check(s, CodeKind::Identifying).valid == v.check(s, CodeKind::LocalIdentifying).valid,
                    "mask " + std::to_string(mask));
        }
        return "255 nonempty codes agree";
    }

    auto criterion_3() -> string
    {
        require(lid(HypercubeCode::from_strings({"00", "11"})), "f2-lid");
        auto six = HypercubeCode::from_strings({"0000", "0100", "0010", "0111", "1111", "1101"});
        require(six.size() == 6 && lid(six), "f4-lid6");
        const auto & entry = explicit_code("f6-lid15");
        auto fifteen = HypercubeCode::from_strings(entry.members);
        require(fifteen.size() == 15 && lid(fifteen), "f6-lid15");

        // induced components of f6-lid15
        auto g = hypercube(6);
        vector<int> component(g.size(), -1);
        vector<std::pair<int, int>> shape; // vertices, edges
        for (auto c : fifteen.words) {
            if (component[c] >= 0)
                continue;
            int id = static_cast<int>(shape.size());
            shape.emplace_back(0, 0);
            vector<VertexId> stack{c};
            component[c] = id;
            while (! stack.empty()) {
                auto x = stack.back();
                stack.pop_back();
                ++shape[id].first;
                for (auto y : g.neighbours(x))
                    if (std::ranges::binary_search(fifteen.words, y)) {
                        if (x < y)
                            ++shape[id].second;
                        if (component[y] < 0) {
                            component[y] = id;
                            stack.push_back(y);
                        }
                    }
            }
        }
        std::ranges::sort(shape);
        // the printed code merges two of the five claimed P3s into one 6-vertex piece
        require(shape == vector<std::pair<int, int>>{{3, 2}, {3, 2}, {3, 2}, {6, 6}}, "f6-lid15 induced structure changed");
        return "sizes 2, 6, 15 verify; f6-lid15 induces 3 x P3 + one 6-vertex component (not 5 x P3)";
    }

    auto criterion_4() -> string
    {
        auto h3 = hamming(3).codewords();
        require(h3.size() == 16, "hamming(3) size");
        auto g7 = hypercube(7);
        VertexSet seen(g7.size());
        for (auto c : h3.words) {
            auto ball = closed_ball(g7, c, 1);
            require(! ball.intersects(seen), "overlapping balls");
            seen |= ball;
        }
        require(seen.count() == 128, "balls miss vertices");

        auto l = hamming_lift(2, 2);
        require(l.n == 5 && l.size() == 8 && l.size() == hypercube_lid_upper_bound(2, 2) && lid(l), "H_2 + F^2");

        for (auto [n, want] : {std::pair{3, 8u}, {4, 16u}}) {
            auto g = hypercube(n);
            auto cover = solve_min(g, {CodeKind::Covering, 1});
            auto lifted = lift_covering_to_lid(HypercubeCode::from_code(Code(g, *cover.witness)));
            require(lifted.size() == want && lid(lifted), "lift of F^" + std::to_string(n));
        }
        return "F^7 partitioned by 16 balls; lifts of size 8, 8, 16";
    }

    auto criterion_5() -> string
    {
        vector<std::uint64_t> formula;
        for (int n : {3, 4, 5, 9})
            formula.push_back(hypercube_lid_lower_bound(n));
        require(formula == vector<std::uint64_t>{4, 5, 8, 62}, "formula values");
        for (int n = 3; n <= 5; ++n) {
            auto opt = solve_min(hypercube(n), {CodeKind::LocalIdentifying, 1}).optimal_size;
            require(hypercube_lid_lower_bound(n) <= opt, "bound above optimum at n=" + std::to_string(n));
            if (n == 5)
                require(hypercube_lid_lower_bound(n) == opt, "not tight at n=5");
        }
        return "4, 5, 8, 62; <= optimum for n=3..5, equal at n=5";
    }

    auto criterion_6() -> string
    {
        for (int n = 3; n <= 5; ++n) {
            auto g = complete_bipartite(2, n);
            auto size = [&](CodeKind k) { return solve_min(g, {k, 1}).optimal_size; };
            auto sn = static_cast<std::size_t>(n);
            require(size(CodeKind::Identifying) == sn && size(CodeKind::LocatingDominating) == sn,
                    "id/ld at n=" + std::to_string(n));
            require(size(CodeKind::LocalIdentifying) == 2 && size(CodeKind::LocalLocatingDominating) == 2,
                    "lid/lld at n=" + std::to_string(n));
        }
        return "n = 3, 4, 5";
    }

    auto criterion_7() -> string
    {
        auto f2 = figure_graph(FigureId::Fig2);
        Code c(f2, vector<VertexId>{0, 1, 2, 3});
        require(share(c, *f2.find_label("v2")) == Rational(13, 6), "fig2 share");

        std::mt19937_64 rng(42);
        vector<Graph> corpus;
        for (auto uri : {"hypercube:4", "hypercube:6", "cycle:11", "path:9", "kbipartite:2,5", "torus:square:7x6",
                 "torus:hex:8x6", "torus:tri:6x6", "torus:king:6x5", "fig:1"})
            corpus.push_back(graph_from_uri(uri));
        int codes = 0;
        while (codes < 100) {
            const auto & g = corpus[codes % corpus.size()];
            std::bernoulli_distribution coin(0.2 + 0.05 * (codes % 10));
            VertexSet s(g.size());
            for (VertexId v = 0; v < g.size(); ++v)
                if (coin(rng))
                    s.insert(v);
            if (s.empty() || ! verify(Code(g, s), {CodeKind::Covering, 1}).valid)
                continue;
            Code code(g, s);
            Rational total;
            s.for_each([&](VertexId x) { total += share(code, x); });
            require(total == Rational(static_cast<long long>(g.size())), "total share " + total.str());
            ++codes;
        }
        return "13/6; sum of shares = |V| on 100 covering codes";
    }

    auto criterion_8() -> string
    {
        auto g = figure_graph(FigureId::Fig1);
        auto id = admits(g, CodeKind::Identifying, 2);
        require(! id.admits && id.twins, "fig1 admits 2-identifying codes");
        require(closed_ball(g, id.twins->first, 2) == closed_ball(g, id.twins->second, 2), "twin witness");
        require(admits(g, CodeKind::LocalIdentifying, 2).admits, "fig1 local 2-id");
        vector<VertexId> dark;
        for (auto l : {"v1", "v2", "v3", "v4", "v5"})
            dark.push_back(*g.find_label(l));
        require(verify(Code(g, dark), {CodeKind::LocalIdentifying, 2}).valid, "darkened set");
        return "twins " + g.label(id.twins->first) + ", " + g.label(id.twins->second);
    }

    auto criterion_9() -> string
    {
        std::mt19937_64 rng(99);
        std::uint64_t sampled = 0;
        auto sample = [&](const Graph & g, int count) {
            require(is_triangle_free(g), "graph has a triangle");
            Verifier v(g, 1);
            for (int i = 0; i < count; ++i) {
                std::bernoulli_distribution coin(0.1 + 0.8 * (i % 9) / 8.0);
                VertexSet s(g.size());
                for (VertexId x = 0; x < g.size(); ++x)
                    if (coin(rng))
                        s.insert(x);
                if (s.empty())
                    continue;
                ++sampled;
                require(v.check(s, CodeKind::Covering).valid == v.check(s, CodeKind::LocalLocatingDominating).valid,
                        "disagreement");
            }
        };
        for (int i = 0; i < 50; ++i) {
            int a = 1 + rng() % 7, b = 1 + rng() % 7;
            vector<Edge> edges;
            for (int x = 0; x < a; ++x)
                for (int y = 0; y < b; ++y)
                    if (rng() & 1)
                        edges.emplace_back(x, a + y);
            sample(Graph(a + b, edges), 100);
        }
        for (int px = 5; px <= 8; ++px)
            for (int py = 5; py <= 8; ++py)
                sample(torus({GridFamily::Square, px, py}), 50);
        for (int px = 6; px <= 10; px += 2)
            for (int py = 6; py <= 10; py += 2)
                sample(torus({GridFamily::Hexagonal, px, py}), 50);

        auto c8 = classes_equivalent_on(cycle(8), {CodeKind::Covering, 1}, {CodeKind::LocalLocatingDominating, 1});
        require(c8.status == EquivalenceStatus::Equivalent, "cycle(8) exhaustive");
        return std::to_string(sampled) + " sampled codes; cycle(8) exhaustive";
    }

    auto criterion_10() -> string
    {
        auto g4 = hypercube(4);
        Verifier v(g4, 1);
        std::mt19937_64 rng(10);
        int done = 0, liftable = 0;
        while (done < 200) {
            auto s = codes_from_mask(16, rng() & 0xffff);
            if (s.empty() || ! v.check(s, CodeKind::LocalIdentifying).valid)
                continue;
            Code code(g4, s);
            bool predicate = true;
            s.for_each([&](VertexId c) { predicate &= iset(code, c, 1).count() >= 2; });
            auto lifted = direct_sum(HypercubeCode::full_space(1), HypercubeCode::from_code(code));
            require(predicate == lid(lifted), "lemma fails");
            require(predicate == dimension_lift_valid(HypercubeCode::from_code(code)), "library predicate differs");
            liftable += predicate;
            ++done;
        }
        return "200 codes, " + std::to_string(liftable) + " liftable";
    }

    auto realize(const string & id, int px, int py, CodeKind kind, Rational density) -> void
    {
        auto pattern = builtin_pattern(id);
        auto g = torus({pattern.family(), px, py});
        auto code = pattern_to_torus_code(pattern, g);
        auto where = id + " on " + std::to_string(px) + "x" + std::to_string(py);
        require(verify(code, {kind, 1}).valid, where + " invalid");
        require(Rational(static_cast<long long>(code.size()), static_cast<long long>(g.size())) == density, where + " density");
    }

    auto criterion_11() -> string
    {
        realize("hex-cover-1/4", 8, 6, CodeKind::LocalLocatingDominating, {1, 4});
        realize("hex-cover-1/4", 16, 12, CodeKind::LocalLocatingDominating, {1, 4});
        realize("tri-lld-2/9", 9, 9, CodeKind::LocalLocatingDominating, {2, 9});
        realize("tri-lld-2/9", 18, 18, CodeKind::LocalLocatingDominating, {2, 9});

        auto sq = torus({GridFamily::Square, 10, 10});
        auto perfect = pattern_to_torus_code(builtin_pattern("sq-cover-1/5"), sq);
        require(verify(perfect, {CodeKind::Covering, 1}).valid, "sq-cover");
        for (VertexId v = 0; v < sq.size(); ++v)
            require(iset(perfect, v, 1).count() == 1, "sq-cover not perfect");

        struct Derived
        {
            const char * id;
            GridFamily family;
            long det;
            std::size_t count;
            CodeKind kind;
            Rational density;
        };
        const Derived derived[] = {
            {"sq-lid-3/11", GridFamily::Square, 11, 3, CodeKind::LocalIdentifying, {3, 11}},
            {"hex-lid-3/8", GridFamily::Hexagonal, 16, 6, CodeKind::LocalIdentifying, {3, 8}},
            {"king-lld-3/16", GridFamily::King, 16, 3, CodeKind::LocalLocatingDominating, {3, 16}},
            {"king-lid-2/9", GridFamily::King, 18, 4, CodeKind::LocalIdentifying, {2, 9}},
            {"tri-lid-1/4", GridFamily::Triangular, 4, 1, CodeKind::LocalIdentifying, {1, 4}},
        };
        for (const auto & d : derived) {
            auto found = pattern_search_by_determinant(d.family, d.det, d.count, d.kind);
            require(found && *found == builtin_pattern(d.id), string(d.id) + " not reproduced by search");
            require(found->density() == d.density, string(d.id) + " density");
            auto base = found->minimal_torus();
            for (int m : {1, 2})
                realize(d.id, base.px * m, base.py * m, d.kind, d.density);
        }
        return "3 transcribed + 5 searched patterns, exact densities, two scales each";
    }

    auto criterion_12() -> string
    {
        auto g = torus({GridFamily::King, 8, 8});
        auto code = pattern_to_torus_code(builtin_pattern("king-lld-3/16"), g);
        require(verify(code, {CodeKind::LocalLocatingDominating, 1}).valid, "pattern invalid on 8x8");
        auto check = window_count_bound(code, 4, 3);
        require(check.holds, "a 4x4 window has fewer than 3 codewords");
        require(3 * 64 / 16 == 12 && code.size() == 12, "|C| = " + std::to_string(code.size()));
        return "every 4x4 window >= 3; |C| = 12 = 3*64/16";
    }
}

auto main() -> int
{
    const vector<std::function<string()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
        criterion_6, criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12};

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        string status = "PASS", detail;
        try {
            detail = criteria[i]();
        }
        catch (const std::exception & e) {
            status = "FAIL";
            detail = e.what();
            ++failures;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2zu: %s  %s  [%.2fs]\n", i + 1, status.c_str(), detail.c_str(), secs);
    }

    std::size_t suite_failures = 0, rows = 0;
    for (const auto & row : run_check_suite()) {
        ++rows;
        if (! row.passed) {
            ++suite_failures;
            std::printf("  check suite row %s failed: %s\n", row.id.c_str(), row.detail.c_str());
        }
    }
    std::printf("check suite: %s  %zu/%zu rows\n", suite_failures ? "FAIL" : "PASS", rows - suite_failures, rows);

    return failures == 0 && suite_failures == 0 ? 0 : 1;
}
