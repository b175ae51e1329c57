#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace loccode
{
    using VertexId = std::uint32_t;

    /// Dense bit-indexed subset of the vertex range [0, universe).
    class VertexSet
    {
        public:
            VertexSet() = default;
            explicit VertexSet(std::size_t universe) :
                _universe(universe), _words((universe + 63) / 64, 0)
            {
            }

            VertexSet(std::size_t universe, std::initializer_list<VertexId> members) :
                VertexSet(universe)
            {
                for (auto v : members)
                    insert(v);
            }

            static auto full(std::size_t universe) -> VertexSet
            {
                VertexSet s(universe);
                for (auto & w : s._words)
                    w = ~std::uint64_t{0};
                s.trim();
                return s;
            }

            auto universe() const -> std::size_t { return _universe; }

            auto contains(VertexId v) const -> bool
            {
                return v < _universe && (_words[v >> 6] >> (v & 63)) & 1U;
            }

            auto insert(VertexId v) -> void { _words[v >> 6] |= std::uint64_t{1} << (v & 63); }
            auto erase(VertexId v) -> void { _words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

            auto count() const -> std::size_t
            {
                std::size_t c = 0;
                for (auto w : _words)
                    c += std::popcount(w);
                return c;
            }

            auto empty() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            auto intersects(const VertexSet & other) const -> bool
            {
                for (std::size_t i = 0; i < _words.size(); ++i)
                    if (_words[i] & other._words[i])
                        return true;
                return false;
            }

            auto is_subset_of(const VertexSet & other) const -> bool
            {
                for (std::size_t i = 0; i < _words.size(); ++i)
                    if (_words[i] & ~other._words[i])
                        return false;
                return true;
            }

            auto operator&=(const VertexSet & other) -> VertexSet &
            {
                for (std::size_t i = 0; i < _words.size(); ++i)
                    _words[i] &= other._words[i];
                return *this;
            }

            auto operator|=(const VertexSet & other) -> VertexSet &
            {
                for (std::size_t i = 0; i < _words.size(); ++i)
                    _words[i] |= other._words[i];
                return *this;
            }

            auto operator^=(const VertexSet & other) -> VertexSet &
            {
                for (std::size_t i = 0; i < _words.size(); ++i)
                    _words[i] ^= other._words[i];
                return *this;
            }

            friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            friend auto operator^(VertexSet a, const VertexSet & b) -> VertexSet { return a ^= b; }

            friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

            /// Calls f(v) for every member in increasing order.
            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (std::size_t i = 0; i < _words.size(); ++i) {
                    auto w = _words[i];
                    while (w) {
                        auto bit = std::countr_zero(w);
                        f(static_cast<VertexId>(i * 64 + bit));
                        w &= w - 1;
                    }
                }
            }

            auto members() const -> std::vector<VertexId>
            {
                std::vector<VertexId> result;
                result.reserve(count());
                for_each([&](VertexId v) { result.push_back(v); });
                return result;
            }

            auto words() const -> const std::vector<std::uint64_t> & { return _words; }

            auto hash() const -> std::size_t
            {
                std::size_t h = _universe;
                for (auto w : _words)
                    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
                return h;
            }

        private:
            auto trim() -> void
            {
                if (_universe % 64 != 0 && ! _words.empty())
                    _words.back() &= (std::uint64_t{1} << (_universe % 64)) - 1;
            }

            std::size_t _universe = 0;
            std::vector<std::uint64_t> _words;
    };

    struct VertexSetHash
    {
        auto operator()(const VertexSet & s) const -> std::size_t { return s.hash(); }
    };
}
