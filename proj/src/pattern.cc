#include <loccode/error.hh>
#include <loccode/pattern.hh>

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace loccode
{
    namespace
    {
        auto floor_div(long a, long b) -> long
        {
            auto q = a / b;
            return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
        }

        auto mod(long a, long m) -> long
        {
            auto r = a % m;
            return r < 0 ? r + m : r;
        }

        // Returns (g, s, t) with s*x + t*y = g = gcd(x, y) >= 0.
        auto extended_gcd(long x, long y) -> std::tuple<long, long, long>
        {
            long old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
            while (r != 0) {
                auto q = old_r / r;
                std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
                std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
                std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
            }
            if (old_r < 0)
                return {-old_r, -old_s, -old_t};
            return {old_r, old_s, old_t};
        }

        auto smallest_multiple_at_least(long base, long minimum) -> long
        {
            return ((minimum + base - 1) / base) * base;
        }

        struct BuiltinEntry
        {
            string id;
            GridFamily family;
            Point v1, v2;
            vector<Point> residues;
            Rational density;
            CodeKind kind;
        };

        auto triangular_lld_residues() -> vector<Point>
        {
            vector<Point> result;
            for (long i = 0; i < 3; ++i)
                for (long j = 0; j < 9; j += 3)
                    if ((i + j / 3) % 3 != 2)
                        result.push_back({i, j});
            return result;
        }

        auto builtin_entries() -> const vector<BuiltinEntry> &
        {
            static const vector<BuiltinEntry> entries{
                {"hex-cover-1/4", GridFamily::Hexagonal, {4, 0}, {0, 2}, {{0, 0}, {2, 1}}, Rational(1, 4),
                    CodeKind::LocalLocatingDominating},
                {"tri-lld-2/9", GridFamily::Triangular, {3, 0}, {0, 9}, triangular_lld_residues(), Rational(2, 9),
                    CodeKind::LocalLocatingDominating},
                {"sq-cover-1/5", GridFamily::Square, {1, 2}, {2, -1}, {{0, 0}}, Rational(1, 5), CodeKind::Covering},
                // Frozen output of pattern_search_by_determinant, see builtin_search_recipe().
                {"sq-lid-3/11", GridFamily::Square, {11, 0}, {3, 1}, {{0, 0}, {3, 0}, {6, 0}}, Rational(3, 11),
                    CodeKind::LocalIdentifying},
                {"hex-lid-3/8", GridFamily::Hexagonal, {8, 0}, {0, 2}, {{0, 0}, {1, 0}, {2, 0}, {4, 1}, {5, 1}, {6, 1}},
                    Rational(3, 8), CodeKind::LocalIdentifying},
                {"king-lld-3/16", GridFamily::King, {4, 0}, {2, 4}, {{0, 0}, {0, 2}, {2, 1}}, Rational(3, 16),
                    CodeKind::LocalLocatingDominating},
                {"king-lid-2/9", GridFamily::King, {6, 0}, {3, 3}, {{0, 0}, {0, 2}, {2, 1}, {4, 1}}, Rational(2, 9),
                    CodeKind::LocalIdentifying},
                {"tri-lid-1/4", GridFamily::Triangular, {2, 0}, {0, 2}, {{0, 0}}, Rational(1, 4), CodeKind::LocalIdentifying},
            };
            return entries;
        }

        auto find_builtin(string_view id) -> const BuiltinEntry &
        {
            for (const auto & entry : builtin_entries())
                if (entry.id == id)
                    return entry;
            throw std::invalid_argument("unknown builtin pattern '" + string(id) + "'");
        }

        auto box_points(const Lattice & lattice) -> vector<Point>
        {
            vector<Point> points;
            for (long x = 0; x < lattice.a; ++x)
                for (long y = 0; y < lattice.d; ++y)
                    points.push_back({x, y});
            return points;
        }

        auto check_hex_lattice(GridFamily family, Point v1, Point v2) -> void
        {
            if (family == GridFamily::Hexagonal && (mod(v1.x + v1.y, 2) != 0 || mod(v2.x + v2.y, 2) != 0))
                throw std::invalid_argument("hexagonal grid patterns need period vectors with even coordinate sums");
        }
    }

    auto Lattice::from_basis(Point v1, Point v2) -> Lattice
    {
        auto det = v1.x * v2.y - v2.x * v1.y;
        if (det == 0)
            throw std::invalid_argument("period vectors are linearly dependent");
        auto [g, s, t] = extended_gcd(v1.y, v2.y);
        auto xw = s * v1.x + t * v2.x;
        Lattice result;
        result.d = g;
        result.a = std::abs(det) / g;
        result.b = mod(xw, result.a);
        return result;
    }

    auto Lattice::reduce(Point p) const -> Point
    {
        auto k = floor_div(p.y, d);
        return {mod(p.x - k * b, a), p.y - k * d};
    }

    auto Lattice::contains(Point p) const -> bool
    {
        return reduce(p) == Point{0, 0};
    }

    auto Lattice::admits_torus(long px, long py) const -> bool
    {
        return contains({px, 0}) && contains({0, py});
    }

    PeriodicPattern::PeriodicPattern(GridFamily family, Point v1, Point v2, const vector<Point> & residues) :
        _family(family),
        _v1(v1),
        _v2(v2),
        _lattice(Lattice::from_basis(v1, v2))
    {
        check_hex_lattice(family, v1, v2);
        for (auto p : residues)
            _residues.push_back(_lattice.reduce(p));
        std::ranges::sort(_residues);
        _residues.erase(std::unique(_residues.begin(), _residues.end()), _residues.end());
    }

    auto PeriodicPattern::contains(Point p) const -> bool
    {
        return std::ranges::binary_search(_residues, _lattice.reduce(p));
    }

    auto PeriodicPattern::density() const -> Rational
    {
        return Rational(static_cast<long long>(_residues.size()), _lattice.determinant());
    }

    auto PeriodicPattern::minimal_torus(int min_period) const -> TorusSpec
    {
        auto base_y = _lattice.d * (_lattice.a / std::gcd(_lattice.a, _lattice.b));
        long minimum = min_period;
        auto px = smallest_multiple_at_least(_lattice.a, minimum);
        auto py = smallest_multiple_at_least(base_y, minimum);
        if (_family == GridFamily::Hexagonal) {
            // even-sum lattices already force even periods
            if (px % 2)
                px *= 2;
            if (py % 2)
                py *= 2;
        }
        return {_family, static_cast<int>(px), static_cast<int>(py)};
    }

    auto builtin_pattern_ids() -> vector<string>
    {
        vector<string> ids;
        for (const auto & entry : builtin_entries())
            ids.push_back(entry.id);
        return ids;
    }

    auto builtin_pattern(string_view id) -> PeriodicPattern
    {
        const auto & entry = find_builtin(id);
        return PeriodicPattern(entry.family, entry.v1, entry.v2, entry.residues);
    }

    auto builtin_pattern_claim(string_view id) -> PatternClaim
    {
        const auto & entry = find_builtin(id);
        return {entry.density, entry.kind};
    }

    auto builtin_search_recipe(string_view id) -> optional<SearchRecipe>
    {
        static const vector<std::pair<string, SearchRecipe>> recipes{
            {"sq-lid-3/11", {GridFamily::Square, 11, 3, CodeKind::LocalIdentifying}},
            {"hex-lid-3/8", {GridFamily::Hexagonal, 16, 6, CodeKind::LocalIdentifying}},
            {"king-lld-3/16", {GridFamily::King, 16, 3, CodeKind::LocalLocatingDominating}},
            {"king-lid-2/9", {GridFamily::King, 18, 4, CodeKind::LocalIdentifying}},
            {"tri-lid-1/4", {GridFamily::Triangular, 4, 1, CodeKind::LocalIdentifying}},
        };
        find_builtin(id);
        for (const auto & [name, recipe] : recipes)
            if (name == id)
                return recipe;
        return std::nullopt;
    }

    auto pattern_to_torus_code(const PeriodicPattern & pattern, const Graph & torus_graph) -> Code
    {
        const auto & spec = torus_graph.torus();
        if (! spec)
            throw std::invalid_argument("pattern realization needs a torus graph");
        if (spec->family != pattern.family())
            throw std::invalid_argument("torus family " + to_string(spec->family) + " does not match pattern family "
                    + to_string(pattern.family()));
        if (! pattern.lattice().admits_torus(spec->px, spec->py))
            throw std::invalid_argument("torus periods " + std::to_string(spec->px) + "x" + std::to_string(spec->py)
                    + " are incompatible with the pattern lattice");

        VertexSet members(torus_graph.size());
        for (int i = 0; i < spec->px; ++i)
            for (int j = 0; j < spec->py; ++j)
                if (pattern.contains({i, j}))
                    members.insert(spec->vertex(i, j));
        return Code(torus_graph, std::move(members));
    }

    auto lattices_with_determinant(GridFamily family, long det) -> vector<Lattice>
    {
        if (det < 1)
            throw std::invalid_argument("determinant must be positive");
        vector<Lattice> result;
        for (long a = 1; a <= det; ++a) {
            if (det % a)
                continue;
            auto d = det / a;
            for (long b = 0; b < a; ++b) {
                if (family == GridFamily::Hexagonal && (a % 2 != 0 || (b + d) % 2 != 0))
                    continue;
                result.push_back({a, b, d});
            }
        }
        return result;
    }

    auto pattern_search(GridFamily family, Point v1, Point v2, std::size_t target_count, CodeKind kind)
        -> optional<PeriodicPattern>
    {
        check_hex_lattice(family, v1, v2);
        auto lattice = Lattice::from_basis(v1, v2);
        auto det = lattice.determinant();
        if (det > 24)
            throw std::invalid_argument("pattern search limited to determinant 24, got " + std::to_string(det));
        if (target_count < 1 || static_cast<long>(target_count) > det)
            throw std::invalid_argument("target count must be in [1, determinant]");

        auto points = box_points(lattice);
        PeriodicPattern shape(family, v1, v2, {{0, 0}});
        auto spec = shape.minimal_torus();
        auto g = torus(spec);
        Verifier verifier(g, 1);

        // box index of every torus vertex
        vector<std::size_t> slot(g.size());
        for (int i = 0; i < spec.px; ++i)
            for (int j = 0; j < spec.py; ++j) {
                auto p = lattice.reduce({i, j});
                slot[spec.vertex(i, j)] = static_cast<std::size_t>(p.x * lattice.d + p.y);
            }

        vector<std::size_t> combo(target_count);
        std::iota(combo.begin(), combo.end(), 0);
        vector<char> chosen(points.size());
        while (true) {
            std::ranges::fill(chosen, 0);
            for (auto c : combo)
                chosen[c] = 1;
            VertexSet code(g.size());
            for (VertexId v = 0; v < g.size(); ++v)
                if (chosen[slot[v]])
                    code.insert(v);
            if (verifier.check(code, kind).valid) {
                vector<Point> residues;
                for (auto c : combo)
                    residues.push_back(points[c]);
                return PeriodicPattern(family, v1, v2, residues);
            }

            // next combination in lexicographic order
            auto k = target_count;
            auto i = k;
            while (i > 0 && combo[i - 1] == points.size() - k + (i - 1))
                --i;
            if (i == 0)
                return std::nullopt;
            ++combo[i - 1];
            for (auto j = i; j < k; ++j)
                combo[j] = combo[j - 1] + 1;
        }
    }

    auto pattern_search_by_determinant(GridFamily family, long det, std::size_t target_count, CodeKind kind)
        -> optional<PeriodicPattern>
    {
        for (const auto & lattice : lattices_with_determinant(family, det))
            if (auto found = pattern_search(family, {lattice.a, 0}, {lattice.b, lattice.d}, target_count, kind))
                return found;
        return std::nullopt;
    }

    auto read_pattern(std::istream & in) -> PeriodicPattern
    {
        optional<GridFamily> family;
        optional<Point> v1, v2;
        vector<Point> residues;
        string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != string::npos)
                line.erase(hash);
            std::istringstream tokens(line);
            string key;
            if (! (tokens >> key))
                continue;
            if (key == "pattern") {
                string name;
                if (! (tokens >> name))
                    throw ParseError("expected 'pattern <family>'", line_no);
                try {
                    family = parse_grid_family(name);
                }
                catch (const std::invalid_argument & e) {
                    throw ParseError(e.what(), line_no);
                }
                continue;
            }
            Point p;
            if (! (tokens >> p.x >> p.y))
                throw ParseError("expected two integers after '" + key + "'", line_no);
            if (key == "v1")
                v1 = p;
            else if (key == "v2")
                v2 = p;
            else if (key == "r")
                residues.push_back(p);
            else
                throw ParseError("unknown pattern line '" + key + "'", line_no);
        }
        if (! family || ! v1 || ! v2)
            throw ParseError("pattern needs 'pattern', 'v1' and 'v2' lines");
        return PeriodicPattern(*family, *v1, *v2, residues);
    }

    auto write_pattern(std::ostream & out, const PeriodicPattern & pattern) -> void
    {
        out << "pattern " << to_string(pattern.family()) << "\n";
        out << "v1 " << pattern.v1().x << " " << pattern.v1().y << "\n";
        out << "v2 " << pattern.v2().x << " " << pattern.v2().y << "\n";
        for (auto p : pattern.residues())
            out << "r " << p.x << " " << p.y << "\n";
    }
}
