#include "twodist/bitmask.hpp"

#include "twodist/errors.hpp"

namespace twodist {

BitMask::BitMask(std::initializer_list<int> indices) {
    for (int i : indices) set(i);
}

BitMask BitMask::from_indices(const std::vector<int>& indices) {
    BitMask m;
    for (int i : indices) {
        if (i < 0 || i >= kMaxBits) {
            throw ShapeError("index " + std::to_string(i) + " outside bit mask capacity");
        }
        m.set(i);
    }
    return m;
}

BitMask BitMask::first(int count) {
    BitMask m;
    for (int i = 0; i < count; ++i) m.set(i);
    return m;
}

BitMask BitMask::from_word(std::uint64_t word) {
    BitMask m;
    m.words_[0] = word;
    return m;
}

int BitMask::highest() const {
    for (int w = kWords - 1; w >= 0; --w) {
        if (words_[w] != 0) {
            return w * 64 + 63 - std::countl_zero(words_[w]);
        }
    }
    return -1;
}

std::vector<int> BitMask::indices() const {
    std::vector<int> out;
    for (int w = 0; w < kWords; ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

BitMask BitMask::complement(int n) const {
    BitMask m = first(n);
    m ^= (*this & m);
    return m;
}

BitMask BitMask::shifted(int offset) const {
    BitMask m;
    for (int i : indices()) {
        if (i + offset >= kMaxBits) {
            throw ShapeError("shifted index outside bit mask capacity");
        }
        m.set(i + offset);
    }
    return m;
}

bool lex_less(const BitMask& a, const BitMask& b) {
    for (int w = 0; w < BitMask::kWords; ++w) {
        const std::uint64_t diff = a.words_[w] ^ b.words_[w];
        if (diff == 0) continue;
        const int bit = w * 64 + std::countr_zero(diff);
        // The set holding the first differing index is smaller, unless the
        // other set has nothing beyond that index (then it is a proper prefix).
        const BitMask& holder = a.test(bit) ? a : b;
        const BitMask& other = a.test(bit) ? b : a;
        BitMask tail = other;
        for (int i = 0; i <= bit; ++i) tail.reset(i);
        const bool holder_smaller = !tail.empty();
        return (&holder == &a) == holder_smaller;
    }
    return false;
}

std::string BitMask::to_string() const {
    std::string s = "{";
    bool first_item = true;
    for (int i : indices()) {
        if (!first_item) s += ',';
        s += std::to_string(i + 1);
        first_item = false;
    }
    return s + "}";
}

CandidateVector CandidateVector::make(int ambient, const BitMask& base) {
    if (ambient < 1 || ambient > BitMask::kMaxBits) {
        throw ShapeError("ambient size " + std::to_string(ambient) + " out of range");
    }
    if (base.highest() >= ambient) {
        throw ShapeError("base set index beyond ambient size " + std::to_string(ambient));
    }
    if (base.empty()) {
        throw ShapeError("candidate vector needs a non-empty base set");
    }
    return CandidateVector{ambient, base};
}

CandidateVector CandidateVector::from_one_based(int ambient, const std::vector<int>& indices) {
    BitMask m;
    for (int i : indices) {
        if (i < 1 || i > ambient) {
            throw ShapeError("index " + std::to_string(i) + " outside 1.." + std::to_string(ambient));
        }
        if (m.test(i - 1)) {
            throw ShapeError("repeated index " + std::to_string(i));
        }
        m.set(i - 1);
    }
    return make(ambient, m);
}

}  // namespace twodist
