#include <loccode/bounds.hh>
#include <loccode/check_suite.hh>
#include <loccode/constructions.hh>
#include <loccode/pattern.hh>
#include <loccode/solver.hh>

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

using std::string;
using std::vector;

namespace loccode
{
    namespace
    {
        using Rng = std::mt19937_64;

        struct Context
        {
            Rng rng;
            SolveOptions solve;
        };

        // Throws on failure; returns the detail line on success.
        using Check = std::function<string(Context &)>;

        auto expect(bool condition, const string & message) -> void
        {
            if (! condition)
                throw std::runtime_error(message);
        }

        auto random_subset(std::size_t n, Rng & rng, double density) -> VertexSet
        {
            std::bernoulli_distribution coin(density);
            VertexSet s(n);
            for (VertexId v = 0; v < n; ++v)
                if (coin(rng))
                    s.insert(v);
            return s;
        }

        // Random subset, then random vertices added until every vertex is covered.
        auto random_covering(const Graph & g, Rng & rng) -> VertexSet
        {
            std::uniform_real_distribution<double> unit(0.05, 0.6);
            auto code = random_subset(g.size(), rng, unit(rng));
            Verifier verifier(g, 1);
            while (code.empty() || ! verifier.check(code, CodeKind::Covering).valid) {
                if (code.empty())
                    code.insert(static_cast<VertexId>(rng() % g.size()));
                else {
                    auto report = verifier.check(code, CodeKind::Covering);
                    auto v = std::get<UncoveredVertex>(*report.failure).v;
                    auto ball = g.neighbours(v);
                    auto pick = rng() % (ball.size() + 1);
                    code.insert(pick == ball.size() ? v : ball[pick]);
                }
            }
            return code;
        }

        auto optima_row(CodeKind kind, vector<std::size_t> expected) -> Check
        {
            return [kind, expected](Context & ctx) {
                std::ostringstream detail;
                for (int n = 2; n <= 5; ++n) {
                    auto g = hypercube(n);
                    auto result = solve_min(g, {kind, 1}, {}, ctx.solve);
                    auto want = expected[n - 2];
                    expect(result.certified(), "n=" + std::to_string(n) + " not certified");
                    expect(result.optimal_size == want,
                            "n=" + std::to_string(n) + ": got " + std::to_string(result.optimal_size) + ", expected " + std::to_string(want));
                    expect(verify(Code(g, *result.witness), {kind, 1}).valid, "witness fails verification");
                    auto below = refute_size(g, {kind, 1}, want - 1, {}, ctx.solve);
                    expect(below.status == SearchStatus::Refuted, "size " + std::to_string(want - 1) + " not refuted");
                    detail << (n > 2 ? " " : "") << want;
                }
                return "n=2..5: " + detail.str();
            };
        }

        auto is_lid(const HypercubeCode & code) -> bool
        {
            auto g = hypercube(code.n);
            return verify(code.on(g), {CodeKind::LocalIdentifying, 1}).valid;
        }

        auto pattern_row(const string & id, vector<int> scales) -> Check
        {
            return [id, scales](Context &) {
                auto pattern = builtin_pattern(id);
                auto claim = builtin_pattern_claim(id);
                expect(pattern.density() == claim.density, "density " + pattern.density().str() + " != " + claim.density.str());

                if (auto recipe = builtin_search_recipe(id)) {
                    auto found = pattern_search_by_determinant(recipe->family, recipe->determinant, recipe->count, recipe->kind);
                    expect(found && *found == pattern, "pattern search no longer reproduces the frozen pattern");
                }

                auto base = pattern.minimal_torus();
                std::ostringstream detail;
                detail << "density " << claim.density.str() << ", " << short_name(claim.kind) << " on";
                for (auto scale : scales) {
                    TorusSpec spec = base;
                    if (scale < 0) {
                        spec.px = -scale;
                        spec.py = -scale;
                    }
                    else {
                        spec.px *= scale;
                        spec.py *= scale;
                    }
                    auto g = torus(spec);
                    auto code = pattern_to_torus_code(pattern, g);
                    expect(verify(code, {claim.kind, 1}).valid, "fails on " + std::to_string(spec.px) + "x" + std::to_string(spec.py));
                    expect(Rational(static_cast<long long>(code.size()), static_cast<long long>(g.size())) == claim.density,
                            "realized density differs on " + std::to_string(spec.px) + "x" + std::to_string(spec.py));
                    detail << " " << spec.px << "x" << spec.py;
                }
                return detail.str();
            };
        }

        struct Entry
        {
            string id, group, description;
            Check check;
        };

        auto entries() -> vector<Entry>
        {
            vector<Entry> rows;

            rows.push_back({"optima-K", "hypercube", "optimal covering codes K(n), n=2..5",
                optima_row(CodeKind::Covering, {2, 2, 4, 7})});
            rows.push_back({"optima-ML", "hypercube", "optimal local identifying codes M^L(n), n=2..5",
                optima_row(CodeKind::LocalIdentifying, {2, 4, 6, 8})});
            rows.push_back({"optima-M", "hypercube", "optimal identifying codes M(n), n=2..5",
                optima_row(CodeKind::Identifying, {3, 4, 7, 10})});
            rows.push_back({"optima-MLD", "hypercube", "optimal locating-dominating codes M^LD(n), n=2..5",
                optima_row(CodeKind::LocatingDominating, {2, 4, 6, 10})});

            rows.push_back({"f3-equivalence", "hypercube", "id and lid coincide on all 256 codes of F^3", [](Context &) {
                auto result = classes_equivalent_on(hypercube(3), {CodeKind::Identifying, 1}, {CodeKind::LocalIdentifying, 1});
                expect(result.status == EquivalenceStatus::Equivalent, "counterexample found");
                return std::to_string(result.codes_checked) + " codes";
            }});

            rows.push_back({"explicit-codes", "hypercube", "f2-lid, f4-lid6, f6-lid15 verify", [](Context &) {
                for (auto id : {"f2-lid", "f4-lid6", "f6-lid15"}) {
                    const auto & entry = explicit_code(id);
                    auto g = graph_from_uri(entry.graph_uri);
                    auto code = HypercubeCode::from_strings(entry.members).on(g);
                    expect(code.size() == entry.claimed_size && verify(code, entry.claimed).valid, string(id) + " fails");
                }
                // The printed f6-lid15 code does not induce five disjoint P3s:
                // 001101 also touches 011101 and 101101, merging two triples.
                // Pin the structure that actually occurs.
                const auto & entry = explicit_code("f6-lid15");
                auto g = hypercube(6);
                auto code = HypercubeCode::from_strings(entry.members).on(g);
                vector<bool> seen(g.size());
                vector<std::size_t> sizes;
                std::size_t paths = 0;
                for (auto s : code.members().members()) {
                    if (seen[s])
                        continue;
                    vector<VertexId> comp{s};
                    seen[s] = true;
                    std::size_t degree_sum = 0;
                    for (std::size_t i = 0; i < comp.size(); ++i)
                        for (auto w : g.neighbours(comp[i]))
                            if (code.contains(w)) {
                                ++degree_sum;
                                if (! seen[w]) {
                                    seen[w] = true;
                                    comp.push_back(w);
                                }
                            }
                    sizes.push_back(comp.size());
                    paths += comp.size() == 3 && degree_sum == 4;
                }
                std::ranges::sort(sizes);
                expect(sizes == vector<std::size_t>{3, 3, 3, 6} && paths == 3, "unexpected induced structure");
                return string("sizes 2, 6, 15; f6-lid15 induces 3 P3 + one 6-vertex component");
            }});

            rows.push_back({"hamming", "hypercube", "Hamming partition, H_2+F^2 and F^2+covering lifts", [](Context & ctx) {
                auto h3 = hamming(3).codewords();
                expect(h3.size() == 16, "hamming(3) has " + std::to_string(h3.size()) + " words");
                auto g7 = hypercube(7);
                vector<int> hits(g7.size());
                for (auto c : h3.words) {
                    hits[c]++;
                    for (auto u : g7.neighbours(c))
                        hits[u]++;
                }
                expect(std::ranges::all_of(hits, [](int h) { return h == 1; }), "balls do not partition F^7");

                auto lift = hamming_lift(2, 2);
                expect(lift.size() == hypercube_lid_upper_bound(2, 2) && lift.size() == 8 && is_lid(lift), "H_2+F^2 fails");

                vector<std::size_t> sizes;
                for (int n : {3, 4}) {
                    auto g = hypercube(n);
                    auto best = solve_min(g, {CodeKind::Covering, 1}, {}, ctx.solve);
                    auto lifted = lift_covering_to_lid(HypercubeCode::from_code(Code(g, *best.witness)));
                    expect(is_lid(lifted), "lifted covering of F^" + std::to_string(n) + " is not lid");
                    sizes.push_back(lifted.size());
                }
                expect(sizes == vector<std::size_t>{8, 16}, "lift sizes differ from 4K(n)");
                return string("16 codewords tile F^7; sizes 8, 8, 16");
            }});

            rows.push_back({"lid-lower-bound", "hypercube", "3*2^n/(3n-2) bound against certified optima", [](Context & ctx) {
                vector<std::uint64_t> got;
                for (int n : {3, 4, 5, 9})
                    got.push_back(hypercube_lid_lower_bound(n));
                expect(got == vector<std::uint64_t>{4, 5, 8, 62}, "formula values differ");
                for (int n : {3, 4, 5}) {
                    auto opt = solve_min(hypercube(n), {CodeKind::LocalIdentifying, 1}, {}, ctx.solve);
                    expect(opt.certified() && hypercube_lid_lower_bound(n) <= opt.optimal_size, "bound exceeds optimum");
                    if (n == 5)
                        expect(opt.optimal_size == hypercube_lid_lower_bound(5), "no equality at n=5");
                }
                return string("4, 5, 8, 62; tight at n=5");
            }});

            rows.push_back({"dimension-lift", "hypercube", "F+C lid iff min |I(c)| >= 2, 200 random lid codes in F^4",
                [](Context & ctx) {
                    auto g4 = hypercube(4);
                    Verifier v4(g4, 1);
                    int done = 0, positive = 0;
                    std::uniform_real_distribution<double> unit(0.3, 0.8);
                    while (done < 200) {
                        auto set = random_subset(g4.size(), ctx.rng, unit(ctx.rng));
                        if (set.empty() || ! v4.check(set, CodeKind::LocalIdentifying).valid)
                            continue;
                        auto code = HypercubeCode::from_code(Code(g4, set));
                        auto predicate = dimension_lift_valid(code);
                        auto direct = is_lid(direct_sum(HypercubeCode::full_space(1), code));
                        expect(predicate == direct, "predicate disagrees with direct verification");
                        positive += predicate;
                        ++done;
                    }
                    return "200 codes, " + std::to_string(positive) + " liftable";
                }});

            rows.push_back({"k2n", "graphs", "K_{2,n}: id = ld = n, lid = lld = 2 for n = 3..5", [](Context & ctx) {
                for (int n = 3; n <= 5; ++n) {
                    auto g = complete_bipartite(2, n);
                    for (auto [kind, want] : {std::pair{CodeKind::Identifying, n}, {CodeKind::LocatingDominating, n},
                             {CodeKind::LocalIdentifying, 2}, {CodeKind::LocalLocatingDominating, 2}}) {
                        auto r = solve_min(g, {kind, 1}, {}, ctx.solve);
                        expect(r.certified() && r.optimal_size == static_cast<std::size_t>(want),
                                "K_{2," + std::to_string(n) + "} " + short_name(kind) + " = " + std::to_string(r.optimal_size));
                    }
                }
                return string("all 12 optima match");
            }});

            rows.push_back({"share", "graphs", "fig2 share 13/6 and total share = |V| on 100 covering codes", [](Context & ctx) {
                auto fig2 = figure_graph(FigureId::Fig2);
                Code c(fig2, vector<VertexId>{0, 1, 2, 3});
                auto s = share(c, 1);
                expect(s == Rational(13, 6), "fig2 share is " + s.str());

                vector<Graph> corpus;
                corpus.push_back(hypercube(4));
                corpus.push_back(hypercube(5));
                corpus.push_back(cycle(9));
                corpus.push_back(path(7));
                corpus.push_back(complete_bipartite(3, 4));
                corpus.push_back(torus({GridFamily::Square, 6, 6}));
                corpus.push_back(torus({GridFamily::Hexagonal, 6, 6}));
                corpus.push_back(torus({GridFamily::King, 5, 7}));
                corpus.push_back(torus({GridFamily::Triangular, 6, 5}));
                corpus.push_back(fig2);
                for (int i = 0; i < 100; ++i) {
                    const auto & g = corpus[i % corpus.size()];
                    Code code(g, random_covering(g, ctx.rng));
                    auto profile = share_profile(code);
                    expect(profile.total == Rational(static_cast<long long>(g.size())), "total share " + profile.total.str());
                }
                return string("13/6; identity holds on 100 codes");
            }});

            rows.push_back({"figure1", "graphs", "fig1 admits local 2-id but not 2-id", [](Context &) {
                auto g = figure_graph(FigureId::Fig1);
                auto id = admits(g, CodeKind::Identifying, 2);
                expect(! id.admits && id.twins, "fig1 unexpectedly admits a 2-identifying code");
                expect(closed_ball(g, id.twins->first, 2) == closed_ball(g, id.twins->second, 2), "witness balls differ");
                expect(admits(g, CodeKind::LocalIdentifying, 2).admits, "fig1 should admit local 2-id");
                const auto & entry = explicit_code("fig1-l2id");
                vector<VertexId> members;
                for (const auto & l : entry.members)
                    members.push_back(*g.find_label(l));
                expect(verify(Code(g, members), {CodeKind::LocalIdentifying, 2}).valid, "darkened set fails");
                return "twins " + g.label(id.twins->first) + "," + g.label(id.twins->second);
            }});

            rows.push_back({"triangle-free", "graphs", "covering = lld on triangle-free graphs", [](Context & ctx) {
                std::uint64_t checked = 0;
                auto compare = [&](const Graph & g, int samples) {
                    Verifier verifier(g, 1);
                    std::uniform_real_distribution<double> unit(0.05, 0.9);
                    for (int s = 0; s < samples; ++s) {
                        auto code = random_subset(g.size(), ctx.rng, unit(ctx.rng));
                        if (code.empty())
                            continue;
                        ++checked;
                        expect(verifier.check(code, CodeKind::Covering).valid
                                == verifier.check(code, CodeKind::LocalLocatingDominating).valid,
                                "covering and lld disagree");
                    }
                };
                for (int i = 0; i < 50; ++i) {
                    int a = 1 + ctx.rng() % 7, b = 1 + ctx.rng() % 7;
                    std::bernoulli_distribution edge(0.5);
                    vector<Edge> edges;
                    for (int x = 0; x < a; ++x)
                        for (int y = 0; y < b; ++y)
                            if (edge(ctx.rng))
                                edges.emplace_back(x, a + y);
                    Graph g(a + b, edges);
                    expect(is_triangle_free(g), "bipartite sample has a triangle");
                    compare(g, 200);
                }
                for (int px = 5; px <= 8; ++px)
                    for (int py = 5; py <= 8; ++py)
                        compare(torus({GridFamily::Square, px, py}), 100);
                for (int px : {6, 8, 10})
                    for (int py : {6, 8, 10})
                        compare(torus({GridFamily::Hexagonal, px, py}), 100);
                auto exhaustive = classes_equivalent_on(cycle(6), {CodeKind::Covering, 1}, {CodeKind::LocalLocatingDominating, 1});
                expect(exhaustive.status == EquivalenceStatus::Equivalent, "cycle(6) counterexample");
                return std::to_string(checked) + " sampled codes + exhaustive C6";
            }});

            for (const auto & id : builtin_pattern_ids()) {
                vector<int> scales{1, 2};
                if (id == "tri-lld-2/9")
                    scales = {-9, -18};

                rows.push_back({"pattern " + id, "grids", "periodic pattern " + id, pattern_row(id, scales)});
            }

            rows.push_back({"sq-cover-exact", "grids", "sq-cover-1/5 covers every vertex of 10x10 exactly once", [](Context &) {
                auto g = torus({GridFamily::Square, 10, 10});
                auto code = pattern_to_torus_code(builtin_pattern("sq-cover-1/5"), g);
                for (VertexId v = 0; v < g.size(); ++v)
                    expect(iset(code, v, 1).count() == 1, "vertex " + g.label(v) + " not covered exactly once");
                return std::to_string(code.size()) + " codewords";
            }});

            rows.push_back({"king-window", "grids", "king-lld-3/16 on 8x8: every 4x4 window has >= 3 codewords", [](Context &) {
                auto g = torus({GridFamily::King, 8, 8});
                auto code = pattern_to_torus_code(builtin_pattern("king-lld-3/16"), g);
                auto check = window_count_bound(code, 4, 3);
                expect(check.holds, "window bound fails");
                auto implied = (3 * g.size() + 15) / 16;
                expect(implied == 12 && code.size() == implied, "implied bound " + std::to_string(implied) + " vs " + std::to_string(code.size()));
                return "min window count " + std::to_string(check.min_count) + ", |C| = 12 = 3*64/16";
            }});

            return rows;
        }
    }

    auto check_groups() -> vector<string>
    {
        return {"hypercube", "graphs", "grids"};
    }

    auto run_check_suite(const CheckOptions & options) -> vector<CheckRow>
    {
        auto groups = check_groups();
        if (options.only && std::ranges::find(groups, *options.only) == groups.end())
            throw std::invalid_argument("unknown check group '" + *options.only + "'");

        Context ctx{Rng(options.seed), {}};
        ctx.solve.threads = options.threads;

        vector<CheckRow> rows;
        for (auto & entry : entries()) {
            if (options.only && entry.group != *options.only)
                continue;
            CheckRow row{entry.id, entry.group, entry.description, false, "", 0.0};
            auto start = std::chrono::steady_clock::now();
            try {
                row.detail = entry.check(ctx);
                row.passed = true;
            }
            catch (const std::exception & e) {
                row.detail = e.what();
            }
            row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            rows.push_back(std::move(row));
        }
        return rows;
    }
}
