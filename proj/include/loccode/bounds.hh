#pragma once

#include <loccode/codes.hh>
#include <loccode/rational.hh>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace loccode
{
    /// s(c): sum over u in N[c] of 1/|I(u)|. The code must be a covering code
    /// and c a codeword, otherwise std::invalid_argument.
    auto share(const Code & code, VertexId c) -> Rational;

    struct ShareProfile
    {
        std::vector<std::pair<VertexId, Rational>> shares;
        Rational max_share;
        Rational total;
    };

    auto share_profile(const Code & code) -> ShareProfile;

    /// |V| / max share: no covering code whose shares all stay below this
    /// code's maximum can be smaller.
    auto max_share_lower_bound(const Code & code) -> Rational;

    /// ceil(3 * 2^n / (3n - 2)), valid for local identifying codes in F^n, n >= 3.
    auto hypercube_lid_lower_bound(int n) -> std::uint64_t;

    /// 2^(2^s + k - s - 1), the size of H_s (+) F^k in F^(2^s + k - 1).
    auto hypercube_lid_upper_bound(int s, int k) -> std::uint64_t;

    struct WindowViolation
    {
        int i, j;
        int count;
    };

    struct WindowCheck
    {
        bool holds = true;
        std::optional<WindowViolation> witness;
        int min_count = 0;
    };

    /// Every wrapped w x w window of a torus code holds at least kmin codewords.
    auto window_count_bound(const Code & code, int w, int kmin) -> WindowCheck;
}
