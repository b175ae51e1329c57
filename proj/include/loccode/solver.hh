#pragma once

#include <loccode/codes.hh>

#include <cstdint>
#include <optional>

namespace loccode
{
    struct SolveBudget
    {
        std::uint64_t max_nodes = 0;   // 0 = unlimited
        double max_seconds = 0.0;      // 0 = unlimited
        std::optional<std::size_t> size_hint; // known upper bound; the search never goes past it
    };

    struct SolveOptions
    {
        /// Fix vertex 0 as a codeword on vertex-transitive generators.
        bool symmetry = true;
        unsigned threads = 1;
    };

    enum class SearchStatus
    {
        Refuted,
        Feasible,
        Unknown
    };

    struct RefuteResult
    {
        SearchStatus status = SearchStatus::Unknown;
        std::optional<VertexSet> witness;
        std::uint64_t nodes = 0;
    };

    struct SolveResult
    {
        /// Size of the witness; meaningful only when witness is set.
        std::size_t optimal_size = 0;
        std::optional<VertexSet> witness;
        std::uint64_t nodes_explored = 0;
        std::size_t lower_bound_used = 0;
        /// Every size below optimal_size was refuted (or ruled out by a proven
        /// bound). False on budget exhaustion.
        bool exhausted_below = false;
        /// Largest k such that no valid code of size < k exists, as far as the
        /// search got.
        std::size_t certified_lower = 0;

        auto certified() const -> bool { return witness && exhausted_below; }
    };

    /// Is there a valid code of size at most k? Graphs are limited to 64
    /// vertices. Throws std::invalid_argument when the graph admits no code of
    /// the class at all.
    auto refute_size(const Graph & graph, CodeClass cls, std::size_t k, const SolveBudget & budget = {},
            const SolveOptions & options = {}) -> RefuteResult;

    /// Minimum size of a code of the class, with a witness and a certificate
    /// that every smaller size is infeasible.
    auto solve_min(const Graph & graph, CodeClass cls, const SolveBudget & budget = {}, const SolveOptions & options = {})
        -> SolveResult;
}
