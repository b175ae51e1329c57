#pragma once

#include <loccode/graph.hh>
#include <loccode/vertex_set.hh>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace loccode
{
    enum class CodeKind
    {
        Covering,
        TotalDominating,
        Identifying,
        LocatingDominating,
        LocalIdentifying,
        LocalLocatingDominating
    };

    struct CodeClass
    {
        CodeKind kind = CodeKind::Covering;
        int r = 1;

        friend auto operator==(const CodeClass &, const CodeClass &) -> bool = default;
    };

    /// covering, total, id, ld, lid, lld
    auto short_name(CodeKind kind) -> std::string;
    auto parse_code_kind(std::string_view name) -> CodeKind;

    /// A nonempty-or-not subset of the vertices of one particular graph. The
    /// graph must outlive the code.
    class Code
    {
        public:
            Code(const Graph & graph, VertexSet members);
            Code(const Graph & graph, const std::vector<VertexId> & members);

            auto graph() const -> const Graph & { return *_graph; }
            auto members() const -> const VertexSet & { return _members; }
            auto size() const -> std::size_t { return _members.count(); }
            auto contains(VertexId v) const -> bool { return _members.contains(v); }
            auto labels() const -> std::vector<std::string>;

        private:
            const Graph * _graph;
            VertexSet _members;
    };

    /// N_r[v] intersected with the code.
    auto iset(const Code & code, VertexId v, int r) -> VertexSet;

    struct UncoveredVertex
    {
        VertexId v;
    };

    struct UnseparatedPair
    {
        VertexId u, v;
        std::vector<VertexId> shared;
    };

    using Failure = std::variant<UncoveredVertex, UnseparatedPair>;

    struct VerificationReport
    {
        bool valid = true;
        std::optional<Failure> failure;
    };

    /// Reusable checker for many codes on one graph at one radius.
    class Verifier
    {
        public:
            Verifier(const Graph & graph, int r);

            auto graph() const -> const Graph & { return *_graph; }
            auto radius() const -> int { return _balls.radius(); }

            /// Throws std::invalid_argument on an empty code.
            auto check(const VertexSet & code, CodeKind kind) const -> VerificationReport;

        private:
            auto covering(const VertexSet & code, bool open) const -> std::optional<VertexId>;
            auto iset_of(const VertexSet & code, VertexId v, std::vector<VertexId> & out) const -> void;

            const Graph * _graph;
            BallTable _balls;
            std::vector<Edge> _edges;
    };

    auto verify(const Code & code, CodeClass cls) -> VerificationReport;

    /// Checks that the reported failure really violates the class condition.
    auto witness_is_genuine(const Code & code, CodeClass cls, const Failure & failure) -> bool;

    struct AdmitsResult
    {
        bool admits = true;
        std::optional<Edge> twins;
    };

    /// Twin-freeness test. Only Identifying and LocalIdentifying are meaningful:
    /// every graph admits the locating-dominating classes.
    auto admits(const Graph & graph, CodeKind kind, int r) -> AdmitsResult;

    struct EquivalenceBudget
    {
        std::size_t exhaustive_limit = 25;
        std::uint64_t samples = 2000;
        std::uint64_t seed = 1;
    };

    enum class EquivalenceStatus
    {
        Equivalent,        // exhaustive, no counterexample
        NoCounterexample,  // sampling budget spent without a counterexample
        Counterexample
    };

    struct EquivalenceResult
    {
        EquivalenceStatus status = EquivalenceStatus::Equivalent;
        std::optional<VertexSet> counterexample;
        std::uint64_t codes_checked = 0;
    };

    auto classes_equivalent_on(const Graph & graph, CodeClass a, CodeClass b, const EquivalenceBudget & budget = {})
        -> EquivalenceResult;

    /// Resolves a vertex by its label, or by decimal index when the graph has
    /// no matching label.
    auto resolve_vertex(const Graph & graph, std::string_view token) -> std::optional<VertexId>;

    /// One label per line (several per line allowed, whitespace separated), '#'
    /// comments.
    auto read_code(const Graph & graph, std::istream & in) -> Code;

    /// "inline:a,b,c" (';' separated on tori), or a file path.
    auto code_from_source(const Graph & graph, std::string_view source) -> Code;

    auto write_code(std::ostream & out, const Code & code) -> void;
}
