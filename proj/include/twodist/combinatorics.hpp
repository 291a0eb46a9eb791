#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

namespace twodist {

/// C(n, k), saturating at UINT64_MAX. Zero when k < 0 or k > n.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(r);
}

/// Next word with the same popcount (Gosper). Enumerates k-subsets of
/// {0..63} in colexicographic order.
inline std::uint64_t next_same_weight(std::uint64_t x) {
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

/// The k-subset of {0..n-1} at colex rank `rank` (rank < C(n, k)), as a word.
inline std::uint64_t colex_unrank(std::uint64_t rank, int n, int k) {
    std::uint64_t word = 0;
    for (int i = k; i >= 1; --i) {
        int c = i - 1;
        while (c + 1 < n && binomial(c + 1, i) <= rank) ++c;
        word |= std::uint64_t{1} << c;
        rank -= binomial(c, i);
        n = c;
    }
    return word;
}

/// Colex rank of a sorted index list.
inline std::uint64_t colex_rank(const std::vector<int>& sorted) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) r += binomial(sorted[i], static_cast<int>(i) + 1);
    return r;
}

/// Bits of `packed` (positions 0..) scattered to the positions listed in `targets`.
inline std::uint64_t scatter(std::uint64_t packed, const std::vector<int>& targets) {
    std::uint64_t out = 0;
    while (packed != 0) {
        const int i = std::countr_zero(packed);
        out |= std::uint64_t{1} << targets[i];
        packed &= packed - 1;
    }
    return out;
}

}  // namespace twodist
