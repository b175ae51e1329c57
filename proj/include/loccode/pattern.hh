#pragma once

#include <loccode/codes.hh>
#include <loccode/graph.hh>
#include <loccode/rational.hh>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace loccode
{
    struct Point
    {
        long x = 0, y = 0;

        friend auto operator<=>(const Point &, const Point &) = default;
    };

    /// Sublattice of Z^2 in Hermite normal form: basis (a, 0), (b, d) with
    /// 0 <= b < a and d > 0.
    struct Lattice
    {
        long a = 1, b = 0, d = 1;

        static auto from_basis(Point v1, Point v2) -> Lattice;

        auto determinant() const -> long { return a * d; }
        auto contains(Point p) const -> bool;

        /// Representative of p in the box [0, a) x [0, d).
        auto reduce(Point p) const -> Point;

        /// Lattice points (px, 0) and (0, py) both present.
        auto admits_torus(long px, long py) const -> bool;

        friend auto operator==(const Lattice &, const Lattice &) -> bool = default;
    };

    /// An infinite-grid code that is invariant under translation by a lattice.
    class PeriodicPattern
    {
        public:
            PeriodicPattern(GridFamily family, Point v1, Point v2, const std::vector<Point> & residues);

            auto family() const -> GridFamily { return _family; }
            auto v1() const -> Point { return _v1; }
            auto v2() const -> Point { return _v2; }
            auto lattice() const -> const Lattice & { return _lattice; }
            auto residues() const -> const std::vector<Point> & { return _residues; }

            auto contains(Point p) const -> bool;
            auto density() const -> Rational;

            /// Smallest torus with periods >= min_period (even on the hexagonal
            /// grid) on which the pattern is well defined.
            auto minimal_torus(int min_period = 5) const -> TorusSpec;

            friend auto operator==(const PeriodicPattern & a, const PeriodicPattern & b) -> bool
            {
                return a._family == b._family && a._lattice == b._lattice && a._residues == b._residues;
            }

        private:
            GridFamily _family;
            Point _v1, _v2;
            Lattice _lattice;
            std::vector<Point> _residues; // reduced into the HNF box, sorted
    };

    auto builtin_pattern_ids() -> std::vector<std::string>;
    auto builtin_pattern(std::string_view id) -> PeriodicPattern;

    /// Density and class a builtin pattern is claimed to realize.
    struct PatternClaim
    {
        Rational density;
        CodeKind kind;
    };
    auto builtin_pattern_claim(std::string_view id) -> PatternClaim;

    /// Search that produced a frozen builtin pattern.
    struct SearchRecipe
    {
        GridFamily family;
        long determinant;
        std::size_t count;
        CodeKind kind;
    };

    /// nullopt for patterns transcribed directly rather than searched for.
    auto builtin_search_recipe(std::string_view id) -> std::optional<SearchRecipe>;

    /// The lattice translates of the residues, as a code on the given torus.
    auto pattern_to_torus_code(const PeriodicPattern & pattern, const Graph & torus_graph) -> Code;

    /// Lattices of the given determinant in canonical order (a ascending, then
    /// b). On the hexagonal grid only lattices of even-sum vectors qualify.
    auto lattices_with_determinant(GridFamily family, long det) -> std::vector<Lattice>;

    /// First residue subset of the given size, in lexicographic order over the
    /// HNF box, whose pattern is a valid code of the class at r = 1; nullopt
    /// certifies that none exists for this lattice.
    auto pattern_search(GridFamily family, Point v1, Point v2, std::size_t target_count, CodeKind kind)
        -> std::optional<PeriodicPattern>;

    /// pattern_search over lattices_with_determinant, first hit wins.
    auto pattern_search_by_determinant(GridFamily family, long det, std::size_t target_count, CodeKind kind)
        -> std::optional<PeriodicPattern>;

    /// pattern <family> / v1 a b / v2 c d / r i j
    auto read_pattern(std::istream & in) -> PeriodicPattern;
    auto write_pattern(std::ostream & out, const PeriodicPattern & pattern) -> void;
}
