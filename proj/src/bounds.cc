#include <loccode/bounds.hh>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace loccode
{
    namespace
    {
        auto iset_size(const Code & code, VertexId u) -> long long
        {
            long long count = code.contains(u) ? 1 : 0;
            for (auto w : code.graph().neighbours(u))
                if (code.contains(w))
                    ++count;
            return count;
        }

        auto share_unchecked(const Code & code, VertexId c) -> Rational
        {
            auto size = iset_size(code, c);
            if (size == 0)
                throw std::invalid_argument("share needs a covering code");
            Rational result(1, size);
            for (auto u : code.graph().neighbours(c)) {
                auto s = iset_size(code, u);
                if (s == 0)
                    throw std::invalid_argument("share needs a covering code");
                result += Rational(1, s);
            }
            return result;
        }

        auto require_covering(const Code & code) -> void
        {
            for (VertexId v = 0; v < code.graph().size(); ++v)
                if (iset_size(code, v) == 0)
                    throw std::invalid_argument("share needs a covering code; vertex " + code.graph().label(v) + " is uncovered");
        }
    }

    auto share(const Code & code, VertexId c) -> Rational
    {
        if (! code.contains(c))
            throw std::invalid_argument("share is only defined for codewords");
        require_covering(code);
        return share_unchecked(code, c);
    }

    auto share_profile(const Code & code) -> ShareProfile
    {
        require_covering(code);
        ShareProfile profile;
        code.members().for_each([&](VertexId c) {
            auto s = share_unchecked(code, c);
            if (profile.shares.empty() || profile.max_share < s)
                profile.max_share = s;
            profile.total += s;
            profile.shares.emplace_back(c, std::move(s));
        });
        if (profile.shares.empty())
            throw std::invalid_argument("share needs a nonempty code");
        return profile;
    }

    auto max_share_lower_bound(const Code & code) -> Rational
    {
        auto profile = share_profile(code);
        return Rational(static_cast<long long>(code.graph().size())) / profile.max_share;
    }

    auto hypercube_lid_lower_bound(int n) -> std::uint64_t
    {
        if (n < 3 || n > 60)
            throw std::invalid_argument("lower bound formula needs 3 <= n <= 60");
        std::uint64_t numerator = std::uint64_t{3} << n;
        std::uint64_t denominator = 3 * std::uint64_t(n) - 2;
        return (numerator + denominator - 1) / denominator;
    }

    auto hypercube_lid_upper_bound(int s, int k) -> std::uint64_t
    {
        if (s < 2 || k < 2)
            throw std::invalid_argument("upper bound formula needs s >= 2 and k >= 2");
        if (s > 5)
            throw std::overflow_error("2^(2^s+k-s-1) does not fit in 64 bits for s > 5");
        auto exponent = (1 << s) + k - s - 1;
        if (exponent > 63)
            throw std::overflow_error("2^(2^s+k-s-1) does not fit in 64 bits");
        return std::uint64_t{1} << exponent;
    }

    auto window_count_bound(const Code & code, int w, int kmin) -> WindowCheck
    {
        const auto & torus = code.graph().torus();
        if (! torus)
            throw std::invalid_argument("window bound needs a torus graph");
        if (w < 1 || w > std::min(torus->px, torus->py))
            throw std::invalid_argument("window size must be in [1, min(px, py)]");

        WindowCheck result;
        result.min_count = std::numeric_limits<int>::max();
        for (int i = 0; i < torus->px; ++i)
            for (int j = 0; j < torus->py; ++j) {
                int count = 0;
                for (int a = 0; a < w; ++a)
                    for (int b = 0; b < w; ++b)
                        if (code.contains(torus->vertex(i + a, j + b)))
                            ++count;
                result.min_count = std::min(result.min_count, count);
                if (count < kmin && result.holds) {
                    result.holds = false;
                    result.witness = WindowViolation{i, j, count};
                }
            }
        return result;
    }
}
