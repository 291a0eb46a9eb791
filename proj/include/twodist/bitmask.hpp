#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace twodist {

/// Fixed-capacity set of indices in [0, kMaxBits).
///
/// Used for candidate base sets and design blocks. Indices are 0-based
/// internally; conversion to 1-based happens only at the I/O boundary.
class BitMask {
public:
    static constexpr int kWords = 4;
    static constexpr int kMaxBits = kWords * 64;

    constexpr BitMask() = default;
    BitMask(std::initializer_list<int> indices);
    static BitMask from_indices(const std::vector<int>& indices);
    /// {0, 1, ..., count-1}
    static BitMask first(int count);
    /// Low 64 bits taken from `word`.
    static BitMask from_word(std::uint64_t word);

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const { return (words_[0] | words_[1] | words_[2] | words_[3]) == 0; }
    /// Index of the highest set bit, or -1 when empty.
    int highest() const;

    std::uint64_t word(int i) const { return words_[i]; }
    std::vector<int> indices() const;

    /// Complement within [0, n).
    BitMask complement(int n) const;
    /// Bits [0, n) of this set moved up by `offset` positions.
    BitMask shifted(int offset) const;

    BitMask& operator&=(const BitMask& o) { for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i]; return *this; }
    BitMask& operator|=(const BitMask& o) { for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i]; return *this; }
    BitMask& operator^=(const BitMask& o) { for (int i = 0; i < kWords; ++i) words_[i] ^= o.words_[i]; return *this; }
    friend BitMask operator&(BitMask a, const BitMask& b) { return a &= b; }
    friend BitMask operator|(BitMask a, const BitMask& b) { return a |= b; }
    friend BitMask operator^(BitMask a, const BitMask& b) { return a ^= b; }

    friend bool operator==(const BitMask&, const BitMask&) = default;

    /// Lexicographic order of the sorted index lists.
    friend bool lex_less(const BitMask& a, const BitMask& b);

    /// |a ∩ b|
    friend int overlap(const BitMask& a, const BitMask& b) {
        int c = 0;
        for (int i = 0; i < kWords; ++i) c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }

    /// "{1,4,7}" with 1-based indices.
    std::string to_string() const;

private:
    std::array<std::uint64_t, kWords> words_{};
};

struct LexLess {
    bool operator()(const BitMask& a, const BitMask& b) const { return lex_less(a, b); }
};

/// A point of T_d(k, beta) stored combinatorially: the positions holding the
/// base value c. Its weight k is the size of the base set.
struct CandidateVector {
    int ambient = 0;
    BitMask base;

    int weight() const { return base.count(); }

    /// Throws ShapeError unless 1 <= weight <= ambient and every index < ambient.
    static CandidateVector make(int ambient, const BitMask& base);
    static CandidateVector from_one_based(int ambient, const std::vector<int>& indices);

    friend bool operator==(const CandidateVector&, const CandidateVector&) = default;
};

}  // namespace twodist
