#include <loccode/pattern.hh>

#include <doctest.h>
#include <algorithm>

#include <sstream>

using namespace loccode;

TEST_CASE("lattice reduction")
{
    auto l = Lattice::from_basis({1, 2}, {2, -1});
    CHECK(l.determinant() == 5);
    CHECK(l.contains({1, 2}));
    CHECK(l.contains({5, 0}));
    CHECK(l.contains({0, 5}));
    CHECK(! l.contains({1, 0}));
    for (long x = -7; x <= 7; ++x)
        for (long y = -7; y <= 7; ++y) {
            auto p = l.reduce({x, y});
            REQUIRE(p.x >= 0);
            REQUIRE(p.x < l.a);
            REQUIRE(p.y >= 0);
            REQUIRE(p.y < l.d);
            REQUIRE(l.contains({x - p.x, y - p.y}));
        }
    CHECK(l.admits_torus(5, 10));
    CHECK(! l.admits_torus(5, 6));
    CHECK_THROWS(Lattice::from_basis({1, 2}, {2, 4}));
}

TEST_CASE("builtin densities")
{
    CHECK(builtin_pattern("hex-cover-1/4").density() == Rational(1, 4));
    CHECK(builtin_pattern("tri-lld-2/9").density() == Rational(2, 9));
    CHECK(builtin_pattern("tri-lld-2/9").residues().size() == 6);
    CHECK(builtin_pattern("sq-cover-1/5").density() == Rational(1, 5));
    for (const auto & id : builtin_pattern_ids())
        CHECK(builtin_pattern(id).density() == builtin_pattern_claim(id).density);
    CHECK_THROWS(builtin_pattern("sq-nothing"));
}

TEST_CASE("torus realizations")
{
    auto hex = torus({GridFamily::Hexagonal, 8, 6});
    auto hc = pattern_to_torus_code(builtin_pattern("hex-cover-1/4"), hex);
    CHECK(hc.size() == 12);
    CHECK(verify(hc, {CodeKind::LocalLocatingDominating, 1}).valid);

    auto tri = torus({GridFamily::Triangular, 9, 9});
    auto tc = pattern_to_torus_code(builtin_pattern("tri-lld-2/9"), tri);
    CHECK(tc.size() == 18);
    CHECK(verify(tc, {CodeKind::LocalLocatingDominating, 1}).valid);

    auto sq = torus({GridFamily::Square, 10, 10});
    auto sc = pattern_to_torus_code(builtin_pattern("sq-cover-1/5"), sq);
    CHECK(sc.size() == 20);
    CHECK(verify(sc, {CodeKind::Covering, 1}).valid);
    CHECK(verify(sc, {CodeKind::LocalLocatingDominating, 1}).valid);
    for (VertexId v = 0; v < sq.size(); ++v)
        CHECK(iset(sc, v, 1).count() == 1);

    CHECK_THROWS(pattern_to_torus_code(builtin_pattern("sq-cover-1/5"), torus({GridFamily::Square, 6, 6})));
    CHECK_THROWS(pattern_to_torus_code(builtin_pattern("sq-cover-1/5"), hex));
}

TEST_CASE("validity agrees across torus scales")
{
    for (const auto & id : builtin_pattern_ids()) {
        auto pattern = builtin_pattern(id);
        auto claim = builtin_pattern_claim(id);
        auto base = pattern.minimal_torus();
        for (int m = 1; m <= 3; ++m) {
            auto g = torus({base.family, base.px * m, base.py * m});
            auto code = pattern_to_torus_code(pattern, g);
            INFO(id, " x", m);
            CHECK(verify(code, {claim.kind, 1}).valid);
            // |C| * det = |residues| * px * py
            CHECK(code.size() * pattern.lattice().determinant() == pattern.residues().size() * g.size());
        }
    }
}

TEST_CASE("frozen patterns are what the search finds")
{
    for (const auto & id : builtin_pattern_ids()) {
        auto recipe = builtin_search_recipe(id);
        if (! recipe)
            continue;
        INFO(id);
        auto found = pattern_search_by_determinant(recipe->family, recipe->determinant, recipe->count, recipe->kind);
        REQUIRE(found);
        CHECK(*found == builtin_pattern(id));
    }
}

TEST_CASE("pattern search")
{
    auto perfect = pattern_search(GridFamily::Square, {1, 2}, {2, -1}, 1, CodeKind::Covering);
    REQUIRE(perfect);
    CHECK(*perfect == builtin_pattern("sq-cover-1/5"));

    CHECK(pattern_search_by_determinant(GridFamily::Square, 11, 3, CodeKind::LocalIdentifying));
    CHECK(pattern_search_by_determinant(GridFamily::King, 16, 3, CodeKind::LocalLocatingDominating));

    // density 1/10 is below 1/9, the inverse king ball size
    CHECK(! pattern_search_by_determinant(GridFamily::King, 10, 1, CodeKind::Covering));
    CHECK_THROWS(pattern_search(GridFamily::Square, {25, 0}, {0, 1}, 1, CodeKind::Covering));
}

TEST_CASE("lattice enumeration")
{
    for (long det : {4, 9, 12}) {
        auto lattices = lattices_with_determinant(GridFamily::Square, det);
        long expected = 0; // sum of divisors
        for (long a = 1; a <= det; ++a)
            if (det % a == 0)
                expected += a;
        CHECK(static_cast<long>(lattices.size()) == expected);
        for (const auto & l : lattices)
            CHECK(l.determinant() == det);
    }
    for (const auto & l : lattices_with_determinant(GridFamily::Hexagonal, 16)) {
        CHECK(l.a % 2 == 0);
        CHECK((l.b + l.d) % 2 == 0);
    }
    CHECK(lattices_with_determinant(GridFamily::Hexagonal, 7).empty());
}

TEST_CASE("pattern files")
{
    for (const auto & id : builtin_pattern_ids()) {
        auto p = builtin_pattern(id);
        std::stringstream s;
        write_pattern(s, p);
        CHECK(read_pattern(s) == p);
    }
    std::istringstream bad("pattern king\nv1 4 0\nv2 2 x\n");
    CHECK_THROWS(read_pattern(bad));
}
