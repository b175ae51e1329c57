#pragma once

#include <loccode/codes.hh>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace loccode
{
    using Word = std::uint32_t;

    /// Word <-> label: coordinate 0 is the leftmost character, i.e. the most
    /// significant bit of the vertex index, matching hypercube() labels.
    auto word_from_string(std::string_view bits) -> Word;
    auto word_to_string(Word word, int n) -> std::string;

    /// A code in F^n, held independently of any graph object.
    struct HypercubeCode
    {
        int n = 0;
        std::vector<Word> words; // sorted, unique

        static auto from_strings(const std::vector<std::string> & words) -> HypercubeCode;
        static auto from_code(const Code & code) -> HypercubeCode;
        static auto full_space(int n) -> HypercubeCode;

        auto size() const -> std::size_t { return words.size(); }

        /// Binds to a graph built by hypercube(n).
        auto on(const Graph & hypercube_graph) const -> Code;
    };

    class LinearCode
    {
        public:
            LinearCode(int length, std::vector<Word> generators, std::vector<Word> parity_checks);

            auto length() const -> int { return _length; }
            auto dimension() const -> int { return static_cast<int>(_generators.size()); }
            auto generators() const -> const std::vector<Word> & { return _generators; }
            auto contains(Word word) const -> bool;

            /// All 2^dimension codewords; needs length <= 20.
            auto codewords() const -> HypercubeCode;

        private:
            int _length;
            std::vector<Word> _generators;
            std::vector<Word> _parity_checks;
    };

    /// Length 2^s - 1 Hamming code; parity-check columns are 1..2^s-1 in order.
    auto hamming(int s) -> LinearCode;

    /// {(c1, c2)}: the words of a occupy the leading coordinates.
    auto direct_sum(const HypercubeCode & a, const HypercubeCode & b) -> HypercubeCode;

    /// H_s (+) F^k, a local identifying code in F^(2^s - 1 + k).
    auto hamming_lift(int s, int k) -> HypercubeCode;

    /// F^2 (+) C for a covering code C; throws if C is not covering.
    auto lift_covering_to_lid(const HypercubeCode & covering) -> HypercubeCode;

    /// For a local identifying code C: whether F (+) C is again local
    /// identifying, i.e. every codeword has |I(c)| >= 2.
    auto dimension_lift_valid(const HypercubeCode & lid) -> bool;

    struct ExplicitCode
    {
        std::string id;
        std::string graph_uri;
        std::vector<std::string> members;
        CodeClass claimed;
        std::size_t claimed_size;
    };

    auto explicit_code(std::string_view id) -> const ExplicitCode &;
    auto explicit_ids() -> std::vector<std::string>;
}
