#include <loccode/constructions.hh>

#include <algorithm>
#include <bit>
#include <stdexcept>

using std::string;
using std::string_view;
using std::vector;

namespace loccode
{
    auto word_from_string(string_view bits) -> Word
    {
        if (bits.empty() || bits.size() > 31)
            throw std::invalid_argument("binary word must have 1 to 31 symbols");
        Word w = 0;
        for (auto ch : bits) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("binary word may only contain 0 and 1: '" + string(bits) + "'");
            w = (w << 1) | Word(ch == '1');
        }
        return w;
    }

    auto word_to_string(Word word, int n) -> string
    {
        string result(n, '0');
        for (int b = 0; b < n; ++b)
            if ((word >> (n - 1 - b)) & 1U)
                result[b] = '1';
        return result;
    }

    auto HypercubeCode::from_strings(const vector<string> & strings) -> HypercubeCode
    {
        if (strings.empty())
            throw std::invalid_argument("empty code");
        HypercubeCode code{static_cast<int>(strings.front().size()), {}};
        for (const auto & s : strings) {
            if (static_cast<int>(s.size()) != code.n)
                throw std::invalid_argument("words of different lengths");
            code.words.push_back(word_from_string(s));
        }
        std::ranges::sort(code.words);
        code.words.erase(std::unique(code.words.begin(), code.words.end()), code.words.end());
        return code;
    }

    auto HypercubeCode::from_code(const Code & code) -> HypercubeCode
    {
        const auto & prov = code.graph().provenance();
        if (prov.family != GraphFamily::Hypercube)
            throw std::invalid_argument("code is not bound to a hypercube");
        HypercubeCode result{prov.dimension, {}};
        code.members().for_each([&](VertexId v) { result.words.push_back(v); });
        return result;
    }

    auto HypercubeCode::full_space(int n) -> HypercubeCode
    {
        if (n < 1 || n > 20)
            throw std::invalid_argument("full space dimension must be in [1, 20]");
        HypercubeCode result{n, {}};
        for (Word w = 0; w < (Word{1} << n); ++w)
            result.words.push_back(w);
        return result;
    }

    auto HypercubeCode::on(const Graph & graph) const -> Code
    {
        const auto & prov = graph.provenance();
        if (prov.family != GraphFamily::Hypercube || prov.dimension != n)
            throw std::invalid_argument("code length " + std::to_string(n) + " does not match the graph");
        return Code(graph, vector<VertexId>(words.begin(), words.end()));
    }

    LinearCode::LinearCode(int length, vector<Word> generators, vector<Word> parity_checks) :
        _length(length),
        _generators(std::move(generators)),
        _parity_checks(std::move(parity_checks))
    {
    }

    auto LinearCode::contains(Word word) const -> bool
    {
        return std::ranges::all_of(_parity_checks, [word](Word row) { return std::popcount(word & row) % 2 == 0; });
    }

    auto LinearCode::codewords() const -> HypercubeCode
    {
        if (_length > 20)
            throw std::invalid_argument("codeword enumeration limited to length 20");
        HypercubeCode result{_length, {}};
        auto k = _generators.size();
        for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << k); ++combo) {
            Word w = 0;
            for (std::size_t i = 0; i < k; ++i)
                if ((combo >> i) & 1U)
                    w ^= _generators[i];
            result.words.push_back(w);
        }
        std::ranges::sort(result.words);
        return result;
    }

    auto hamming(int s) -> LinearCode
    {
        if (s < 2)
            throw std::invalid_argument("Hamming codes need s >= 2");
        if (s > 5)
            throw std::invalid_argument("Hamming codes limited to s <= 5");

        int n = (1 << s) - 1;
        auto coordinate = [n](int j) { return Word{1} << (n - 1 - j); };

        // Coordinate j carries parity-check column j + 1.
        vector<Word> checks(s, 0);
        for (int j = 0; j < n; ++j)
            for (int b = 0; b < s; ++b)
                if (((j + 1) >> b) & 1)
                    checks[b] |= coordinate(j);

        vector<Word> generators;
        for (int column = 1; column <= n; ++column) {
            if (std::has_single_bit(unsigned(column)))
                continue;
            Word g = coordinate(column - 1);
            for (int b = 0; b < s; ++b)
                if ((column >> b) & 1)
                    g |= coordinate((1 << b) - 1);
            generators.push_back(g);
        }
        return LinearCode(n, std::move(generators), std::move(checks));
    }

    auto direct_sum(const HypercubeCode & a, const HypercubeCode & b) -> HypercubeCode
    {
        if (a.n + b.n > 31)
            throw std::invalid_argument("direct sum longer than 31 coordinates");
        HypercubeCode result{a.n + b.n, {}};
        result.words.reserve(a.size() * b.size());
        for (auto x : a.words)
            for (auto y : b.words)
                result.words.push_back((x << b.n) | y);
        std::ranges::sort(result.words);
        return result;
    }

    auto hamming_lift(int s, int k) -> HypercubeCode
    {
        if (s < 2 || k < 2)
            throw std::invalid_argument("hamming_lift needs s >= 2 and k >= 2");
        return direct_sum(hamming(s).codewords(), HypercubeCode::full_space(k));
    }

    auto lift_covering_to_lid(const HypercubeCode & covering) -> HypercubeCode
    {
        auto g = hypercube(covering.n);
        if (! verify(covering.on(g), {CodeKind::Covering, 1}).valid)
            throw std::invalid_argument("input is not a covering code");
        return direct_sum(HypercubeCode::full_space(2), covering);
    }

    auto dimension_lift_valid(const HypercubeCode & lid) -> bool
    {
        auto g = hypercube(lid.n);
        auto code = lid.on(g);
        if (! verify(code, {CodeKind::LocalIdentifying, 1}).valid)
            throw std::invalid_argument("input is not a local identifying code");
        return std::ranges::all_of(lid.words, [&](Word c) { return iset(code, c, 1).count() >= 2; });
    }

    namespace
    {
        auto build_registry() -> vector<ExplicitCode>
        {
            vector<ExplicitCode> registry{
                {"f2-lid", "hypercube:2", {"00", "11"}, {CodeKind::LocalIdentifying, 1}, 2},
                {"f4-lid6", "hypercube:4", {"0000", "0100", "0010", "0111", "1111", "1101"},
                    {CodeKind::LocalIdentifying, 1}, 6},
                {"f6-lid15", "hypercube:6",
                    {"100000", "010000", "110000", "001100", "001110", "001101", "000011", "100011", "010011", "111110",
                        "111010", "110110", "111101", "011101", "101101"},
                    {CodeKind::LocalIdentifying, 1}, 15},
                {"fig1-l2id", "fig:1", {"v1", "v2", "v3", "v4", "v5"}, {CodeKind::LocalIdentifying, 2}, 5},
                {"fig2-cover", "fig:2", {"v1", "v2", "v3", "v4"}, {CodeKind::Covering, 1}, 4},
            };

            for (const auto & entry : registry) {
                auto g = graph_from_uri(entry.graph_uri);
                vector<VertexId> members;
                for (const auto & label : entry.members)
                    members.push_back(*resolve_vertex(g, label));
                Code code(g, members);
                if (code.size() != entry.claimed_size || ! verify(code, entry.claimed).valid)
                    throw std::logic_error("registry entry " + entry.id + " fails its claimed class");
            }
            return registry;
        }
    }

    auto explicit_code(string_view id) -> const ExplicitCode &
    {
        static const auto registry = build_registry();
        for (const auto & entry : registry)
            if (entry.id == id)
                return entry;
        throw std::invalid_argument("unknown explicit code '" + string(id) + "'");
    }

    auto explicit_ids() -> vector<string>
    {
        return {"f2-lid", "f4-lid6", "f6-lid15", "fig1-l2id", "fig2-cover"};
    }
}
