#include <loccode/codes.hh>
#include <loccode/error.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace loccode
{
    namespace
    {
        struct ListHash
        {
            auto operator()(const vector<VertexId> & list) const -> std::size_t
            {
                std::size_t h = list.size();
                for (auto v : list)
                    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
                return h;
            }
        };

        auto is_local(CodeKind kind) -> bool
        {
            return kind == CodeKind::LocalIdentifying || kind == CodeKind::LocalLocatingDominating;
        }

        auto is_ld_type(CodeKind kind) -> bool
        {
            return kind == CodeKind::LocatingDominating || kind == CodeKind::LocalLocatingDominating;
        }
    }

    auto short_name(CodeKind kind) -> string
    {
        switch (kind) {
            case CodeKind::Covering: return "covering";
            case CodeKind::TotalDominating: return "total";
            case CodeKind::Identifying: return "id";
            case CodeKind::LocatingDominating: return "ld";
            case CodeKind::LocalIdentifying: return "lid";
            case CodeKind::LocalLocatingDominating: return "lld";
        }
        throw std::logic_error("unknown code kind");
    }

    auto parse_code_kind(string_view name) -> CodeKind
    {
        for (auto kind : {CodeKind::Covering, CodeKind::TotalDominating, CodeKind::Identifying, CodeKind::LocatingDominating,
                 CodeKind::LocalIdentifying, CodeKind::LocalLocatingDominating})
            if (short_name(kind) == name)
                return kind;
        throw std::invalid_argument("unknown code class '" + string(name) + "' (expected covering, total, id, ld, lid or lld)");
    }

    Code::Code(const Graph & graph, VertexSet members) :
        _graph(&graph),
        _members(std::move(members))
    {
        if (_members.universe() != graph.size())
            throw std::invalid_argument("code universe does not match the graph");
    }

    Code::Code(const Graph & graph, const vector<VertexId> & members) :
        _graph(&graph),
        _members(graph.size())
    {
        for (auto v : members) {
            if (v >= graph.size())
                throw std::out_of_range("codeword out of range");
            _members.insert(v);
        }
    }

    auto Code::labels() const -> vector<string>
    {
        vector<string> result;
        _members.for_each([&](VertexId v) { result.push_back(_graph->label(v)); });
        return result;
    }

    auto iset(const Code & code, VertexId v, int r) -> VertexSet
    {
        return closed_ball(code.graph(), v, r) & code.members();
    }

    Verifier::Verifier(const Graph & graph, int r) :
        _graph(&graph),
        _balls(graph, r),
        _edges(graph.edges())
    {
        if (r < 1)
            throw std::invalid_argument("radius must be at least 1");
    }

    auto Verifier::iset_of(const VertexSet & code, VertexId v, vector<VertexId> & out) const -> void
    {
        out.clear();
        for (auto u : _balls.ball(v))
            if (code.contains(u))
                out.push_back(u);
    }

    auto Verifier::covering(const VertexSet & code, bool open) const -> optional<VertexId>
    {
        for (VertexId v = 0; v < _balls.size(); ++v) {
            bool hit = false;
            for (auto u : _balls.ball(v))
                if ((! open || u != v) && code.contains(u)) {
                    hit = true;
                    break;
                }
            if (! hit)
                return v;
        }
        return std::nullopt;
    }

    auto Verifier::check(const VertexSet & code, CodeKind kind) const -> VerificationReport
    {
        if (code.universe() != _graph->size())
            throw std::invalid_argument("code universe does not match the graph");
        if (code.empty())
            throw std::invalid_argument("codes must be nonempty");

        if (auto uncovered = covering(code, kind == CodeKind::TotalDominating))
            return {false, UncoveredVertex{*uncovered}};
        if (kind == CodeKind::Covering || kind == CodeKind::TotalDominating)
            return {};

        vector<VertexId> a, b;
        if (is_local(kind)) {
            for (auto [u, v] : _edges) {
                if (is_ld_type(kind) && (code.contains(u) || code.contains(v)))
                    continue;
                iset_of(code, u, a);
                iset_of(code, v, b);
                if (a == b)
                    return {false, UnseparatedPair{u, v, a}};
            }
            return {};
        }

        // Global classes: group equal I-sets; report the lexicographically smallest pair.
        std::unordered_map<vector<VertexId>, VertexId, ListHash> first_with;
        optional<Edge> best;
        for (VertexId v = 0; v < _graph->size(); ++v) {
            if (is_ld_type(kind) && code.contains(v))
                continue;
            iset_of(code, v, a);
            auto [it, inserted] = first_with.emplace(a, v);
            if (! inserted && (! best || Edge{it->second, v} < *best))
                best = Edge{it->second, v};
        }
        if (best) {
            iset_of(code, best->first, a);
            return {false, UnseparatedPair{best->first, best->second, a}};
        }
        return {};
    }

    auto verify(const Code & code, CodeClass cls) -> VerificationReport
    {
        return Verifier(code.graph(), cls.r).check(code.members(), cls.kind);
    }

    auto witness_is_genuine(const Code & code, CodeClass cls, const Failure & failure) -> bool
    {
        const auto & g = code.graph();
        if (auto uncovered = std::get_if<UncoveredVertex>(&failure)) {
            auto ball = closed_ball(g, uncovered->v, cls.r);
            if (cls.kind == CodeKind::TotalDominating)
                ball.erase(uncovered->v);
            return ! ball.intersects(code.members());
        }

        const auto & pair = std::get<UnseparatedPair>(failure);
        if (cls.kind == CodeKind::Covering || cls.kind == CodeKind::TotalDominating || pair.u == pair.v)
            return false;
        if (is_local(cls.kind) && ! g.adjacent(pair.u, pair.v))
            return false;
        if (is_ld_type(cls.kind) && (code.contains(pair.u) || code.contains(pair.v)))
            return false;
        auto iu = iset(code, pair.u, cls.r), iv = iset(code, pair.v, cls.r);
        return iu == iv && iu == Code(g, pair.shared).members();
    }

    auto admits(const Graph & graph, CodeKind kind, int r) -> AdmitsResult
    {
        if (kind != CodeKind::Identifying && kind != CodeKind::LocalIdentifying)
            throw std::invalid_argument("admissibility is only defined for id and lid");

        BallTable balls(graph, r);
        auto ball_vec = [&](VertexId v) {
            auto span = balls.ball(v);
            return vector<VertexId>(span.begin(), span.end());
        };

        if (kind == CodeKind::LocalIdentifying) {
            for (auto [u, v] : graph.edges())
                if (std::ranges::equal(balls.ball(u), balls.ball(v)))
                    return {false, Edge{u, v}};
            return {};
        }

        std::unordered_map<vector<VertexId>, VertexId, ListHash> first_with;
        optional<Edge> best;
        for (VertexId v = 0; v < graph.size(); ++v) {
            auto [it, inserted] = first_with.emplace(ball_vec(v), v);
            if (! inserted && (! best || Edge{it->second, v} < *best))
                best = Edge{it->second, v};
        }
        if (best)
            return {false, best};
        return {};
    }

    auto classes_equivalent_on(const Graph & graph, CodeClass a, CodeClass b, const EquivalenceBudget & budget)
        -> EquivalenceResult
    {
        if (a.r != b.r)
            throw std::invalid_argument("equivalence check needs classes with the same radius");

        Verifier verifier(graph, a.r);
        EquivalenceResult result;
        auto n = graph.size();

        auto differs = [&](const VertexSet & code) {
            ++result.codes_checked;
            return verifier.check(code, a.kind).valid != verifier.check(code, b.kind).valid;
        };

        if (n <= budget.exhaustive_limit) {
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                VertexSet code(n);
                for (VertexId v = 0; v < n; ++v)
                    if ((mask >> v) & 1U)
                        code.insert(v);
                if (differs(code)) {
                    result.status = EquivalenceStatus::Counterexample;
                    result.counterexample = code;
                    return result;
                }
            }
            result.status = EquivalenceStatus::Equivalent;
            return result;
        }

        std::mt19937_64 rng(budget.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (std::uint64_t s = 0; s < budget.samples; ++s) {
            auto density = unit(rng);
            VertexSet code(n);
            for (VertexId v = 0; v < n; ++v)
                if (unit(rng) < density)
                    code.insert(v);
            if (code.empty())
                code.insert(static_cast<VertexId>(rng() % n));
            if (differs(code)) {
                result.status = EquivalenceStatus::Counterexample;
                result.counterexample = code;
                return result;
            }
        }
        result.status = EquivalenceStatus::NoCounterexample;
        return result;
    }

    auto resolve_vertex(const Graph & graph, string_view token) -> optional<VertexId>
    {
        if (auto v = graph.find_label(token))
            return v;
        VertexId v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec == std::errc{} && ptr == token.data() + token.size() && v < graph.size())
            return v;
        return std::nullopt;
    }

    auto read_code(const Graph & graph, std::istream & in) -> Code
    {
        VertexSet members(graph.size());
        string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != string::npos)
                line.erase(hash);
            std::istringstream tokens(line);
            string token;
            while (tokens >> token) {
                auto v = resolve_vertex(graph, token);
                if (! v)
                    throw ParseError("unknown vertex '" + token + "'", line_no);
                members.insert(*v);
            }
        }
        return Code(graph, std::move(members));
    }

    auto code_from_source(const Graph & graph, string_view source) -> Code
    {
        constexpr string_view prefix = "inline:";
        if (source.starts_with(prefix)) {
            string text(source.substr(prefix.size()));
            bool commas_are_separators = text.find(';') == string::npos && ! graph.torus();
            for (auto & ch : text)
                if (ch == ';' || (ch == ',' && commas_are_separators))
                    ch = ' ';
            std::istringstream in(text);
            return read_code(graph, in);
        }
        std::ifstream in{string(source)};
        if (! in)
            throw std::invalid_argument("cannot open code file '" + string(source) + "'");
        return read_code(graph, in);
    }

    auto write_code(std::ostream & out, const Code & code) -> void
    {
        for (const auto & label : code.labels())
            out << label << "\n";
    }
}
