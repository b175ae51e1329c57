#include <loccode/codes.hh>
#include <loccode/constructions.hh>
#include <loccode/error.hh>

#include <doctest.h>
#include <algorithm>

#include <random>
#include <sstream>

using namespace loccode;

namespace
{
    constexpr CodeKind all_kinds[] = {CodeKind::Covering, CodeKind::TotalDominating, CodeKind::Identifying,
        CodeKind::LocatingDominating, CodeKind::LocalIdentifying, CodeKind::LocalLocatingDominating};

    auto from_labels(const Graph & g, std::initializer_list<const char *> labels) -> Code
    {
        std::vector<VertexId> vs;
        for (auto l : labels)
            vs.push_back(*g.find_label(l));
        return Code(g, vs);
    }

    auto sorted_labels(const Graph & g, const VertexSet & s)
    {
        std::vector<std::string> out;
        s.for_each([&](VertexId v) { out.push_back(g.label(v)); });
        std::ranges::sort(out);
        return out;
    }

    // Straight from the definitions, no shortcuts.
    auto oracle(const Graph & g, const VertexSet & code, CodeKind kind, int r) -> bool
    {
        auto n = static_cast<VertexId>(g.size());
        std::vector<VertexSet> I;
        for (VertexId v = 0; v < n; ++v)
            I.push_back(closed_ball(g, v, r) & code);
        if (kind == CodeKind::TotalDominating) {
            for (VertexId v = 0; v < n; ++v) {
                auto open = closed_ball(g, v, r);
                open.erase(v);
                if (! open.intersects(code))
                    return false;
            }
            return true;
        }
        for (VertexId v = 0; v < n; ++v)
            if (I[v].empty())
                return false;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v) {
                bool need = false;
                switch (kind) {
                    case CodeKind::Identifying: need = true; break;
                    case CodeKind::LocatingDominating: need = ! code.contains(u) && ! code.contains(v); break;
                    case CodeKind::LocalIdentifying: need = g.adjacent(u, v); break;
                    case CodeKind::LocalLocatingDominating:
                        need = g.adjacent(u, v) && ! code.contains(u) && ! code.contains(v);
                        break;
                    default: break;
                }
                if (need && I[u] == I[v])
                    return false;
            }
        return true;
    }

    auto random_graph(std::mt19937_64 & rng, int n, double p) -> Graph
    {
        std::bernoulli_distribution edge(p);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(rng))
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    auto random_code(std::mt19937_64 & rng, std::size_t n, double p) -> VertexSet
    {
        std::bernoulli_distribution coin(p);
        VertexSet s(n);
        for (VertexId v = 0; v < n; ++v)
            if (coin(rng))
                s.insert(v);
        if (s.empty())
            s.insert(0);
        return s;
    }
}

TEST_CASE("isets")
{
    auto f2 = figure_graph(FigureId::Fig2);
    auto c = from_labels(f2, {"v1", "v2", "v3", "v4"});
    CHECK(sorted_labels(f2, iset(c, *f2.find_label("v2"), 1)) == std::vector<std::string>{"v1", "v2", "v3"});

    auto q4 = hypercube(4);
    auto code = from_labels(q4, {"0000", "0100", "0010", "0111", "1111", "1101"});
    CHECK(sorted_labels(q4, iset(code, 0, 1)) == std::vector<std::string>{"0000", "0010", "0100"});

    auto t = torus({GridFamily::King, 5, 5});
    Code everything(t, VertexSet::full(t.size()));
    for (VertexId v = 0; v < t.size(); ++v)
        CHECK(iset(everything, v, 1) == closed_ball(t, v, 1));
}

TEST_CASE("verify examples")
{
    auto q4 = hypercube(4);
    CHECK(verify(from_labels(q4, {"0000", "0100", "0010", "0111", "1111", "1101"}), {CodeKind::LocalIdentifying, 1}).valid);

    auto q2 = hypercube(2);
    CHECK(verify(from_labels(q2, {"00", "11"}), {CodeKind::LocalIdentifying, 1}).valid);

    for (auto uri : {"fig:1", "cycle:7", "torus:tri:6x6", "hypercube:3"}) {
        auto g = graph_from_uri(uri);
        CHECK(verify(Code(g, VertexSet::full(g.size())), {CodeKind::LocalLocatingDominating, 1}).valid);
    }

    auto f1 = figure_graph(FigureId::Fig1);
    CHECK(verify(from_labels(f1, {"v1", "v2", "v3", "v4", "v5"}), {CodeKind::LocalIdentifying, 2}).valid);

    for (int n = 3; n <= 6; ++n) {
        auto k = complete_bipartite(2, n);
        CHECK(verify(Code(k, std::vector<VertexId>{0, 1}), {CodeKind::LocalIdentifying, 1}).valid);
    }
}

TEST_CASE("verify failures carry genuine witnesses")
{
    Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    Code one(triangle, std::vector<VertexId>{0});
    CHECK(verify(one, {CodeKind::Covering, 1}).valid);
    auto report = verify(one, {CodeKind::LocalLocatingDominating, 1});
    REQUIRE(! report.valid);
    auto pair = std::get<UnseparatedPair>(*report.failure);
    CHECK(pair.u == 1);
    CHECK(pair.v == 2);
    CHECK(pair.shared == std::vector<VertexId>{0});

    auto q4 = hypercube(4);
    auto lonely = verify(from_labels(q4, {"0000"}), {CodeKind::LocalIdentifying, 1});
    REQUIRE(! lonely.valid);
    CHECK(std::get<UncoveredVertex>(*lonely.failure).v == 3); // 0011, the smallest uncovered

    CHECK_THROWS(verify(Code(q4, VertexSet(q4.size())), {CodeKind::Covering, 1}));
}

TEST_CASE("verifier agrees with the definitions" * doctest::description("random graphs, all classes, r = 1 and 2"))
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 150; ++round) {
        auto g = random_graph(rng, 4 + round % 9, 0.3);
        auto code = random_code(rng, g.size(), 0.5);
        for (int r : {1, 2})
            for (auto kind : all_kinds) {
                auto report = Verifier(g, r).check(code, kind);
                REQUIRE(report.valid == oracle(g, code, kind, r));
                if (! report.valid) {
                    REQUIRE(report.failure);
                    REQUIRE(witness_is_genuine(Code(g, code), {kind, r}, *report.failure));
                }
            }
    }
}

TEST_CASE("hierarchy of classes")
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 300; ++round) {
        auto g = random_graph(rng, 5 + round % 8, 0.35);
        auto code = random_code(rng, g.size(), 0.6);
        Verifier v(g, 1);
        auto ok = [&](CodeKind k) { return v.check(code, k).valid; };
        if (ok(CodeKind::Identifying))
            REQUIRE((ok(CodeKind::LocatingDominating) && ok(CodeKind::LocalIdentifying)));
        if (ok(CodeKind::LocatingDominating) || ok(CodeKind::LocalIdentifying))
            REQUIRE(ok(CodeKind::LocalLocatingDominating));
        if (ok(CodeKind::LocalLocatingDominating))
            REQUIRE(ok(CodeKind::Covering));
    }
}

TEST_CASE("covering is preserved by supersets")
{
    std::mt19937_64 rng(3);
    auto g = torus({GridFamily::Hexagonal, 6, 6});
    Verifier v(g, 1);
    for (int round = 0; round < 200; ++round) {
        auto code = random_code(rng, g.size(), 0.4);
        if (! v.check(code, CodeKind::Covering).valid)
            continue;
        auto bigger = code | random_code(rng, g.size(), 0.2);
        REQUIRE(v.check(bigger, CodeKind::Covering).valid);
    }
}

TEST_CASE("local identifying codes of F^3 stay valid under supersets")
{
    auto g = hypercube(3);
    Verifier v(g, 1);
    std::vector<bool> lid(256);
    for (unsigned mask = 1; mask < 256; ++mask) {
        VertexSet s(8);
        for (VertexId b = 0; b < 8; ++b)
            if (mask >> b & 1)
                s.insert(b);
        lid[mask] = v.check(s, CodeKind::LocalIdentifying).valid;
    }
    for (unsigned a = 1; a < 256; ++a)
        for (unsigned b = a; b < 256; b = (b + 1) | a)
            if (lid[a])
                REQUIRE(lid[b]);
}

TEST_CASE("admissibility")
{
    auto f1 = figure_graph(FigureId::Fig1);
    auto id = admits(f1, CodeKind::Identifying, 2);
    CHECK(! id.admits);
    REQUIRE(id.twins);
    CHECK(f1.label(id.twins->first) == "v1");
    CHECK(f1.label(id.twins->second) == "p");
    CHECK(admits(f1, CodeKind::LocalIdentifying, 2).admits);

    auto q3 = hypercube(3);
    CHECK(admits(q3, CodeKind::Identifying, 1).admits);
    CHECK(admits(q3, CodeKind::LocalIdentifying, 1).admits);

    // adjacent twins
    Graph k2(2, {{0, 1}});
    CHECK(! admits(k2, CodeKind::LocalIdentifying, 1).admits);
    CHECK_THROWS(admits(q3, CodeKind::Covering, 1));
}

TEST_CASE("class equivalences")
{
    auto f3 = classes_equivalent_on(hypercube(3), {CodeKind::Identifying, 1}, {CodeKind::LocalIdentifying, 1});
    CHECK(f3.status == EquivalenceStatus::Equivalent);
    CHECK(f3.codes_checked == 255);

    auto c6 = classes_equivalent_on(cycle(6), {CodeKind::Covering, 1}, {CodeKind::LocalLocatingDominating, 1});
    CHECK(c6.status == EquivalenceStatus::Equivalent);

    Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    auto k3 = classes_equivalent_on(triangle, {CodeKind::Covering, 1}, {CodeKind::LocalLocatingDominating, 1});
    CHECK(k3.status == EquivalenceStatus::Counterexample);
    REQUIRE(k3.counterexample);
    CHECK(k3.counterexample->count() == 1);

    auto big = classes_equivalent_on(torus({GridFamily::Square, 6, 6}), {CodeKind::Covering, 1},
            {CodeKind::LocalLocatingDominating, 1}, {25, 300, 5});
    CHECK(big.status == EquivalenceStatus::NoCounterexample);
    CHECK(big.codes_checked == 300);
}

TEST_CASE("triangle-free graphs: covering iff local locating-dominating")
{
    std::mt19937_64 rng(19);
    for (int round = 0; round < 40; ++round) {
        int a = 1 + rng() % 6, b = 1 + rng() % 6;
        std::bernoulli_distribution edge(0.5);
        std::vector<Edge> edges;
        for (int x = 0; x < a; ++x)
            for (int y = 0; y < b; ++y)
                if (edge(rng))
                    edges.emplace_back(x, a + y);
        Graph g(a + b, edges);
        REQUIRE(is_triangle_free(g));
        auto result = classes_equivalent_on(g, {CodeKind::Covering, 1}, {CodeKind::LocalLocatingDominating, 1});
        REQUIRE(result.status == EquivalenceStatus::Equivalent);
    }
}

TEST_CASE("code sources")
{
    auto q4 = hypercube(4);
    auto inline_code = code_from_source(q4, "inline:0000,0100,0010");
    CHECK(inline_code.size() == 3);

    auto t = torus({GridFamily::Square, 5, 5});
    auto on_torus = code_from_source(t, "inline:0,0;2,1");
    CHECK(on_torus.labels() == std::vector<std::string>{"0,0", "2,1"});

    auto p = path(7);
    std::istringstream file("# code\n0 3\n6\n");
    CHECK(read_code(p, file).size() == 3);

    std::istringstream bad("0000\n0102\n");
    try {
        read_code(q4, bad);
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 2);
    }

    std::stringstream round;
    write_code(round, inline_code);
    CHECK(read_code(q4, round).members() == inline_code.members());
}
