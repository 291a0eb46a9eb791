#include "twodist/designs.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "twodist/combinatorics.hpp"
#include "twodist/errors.hpp"

namespace twodist::designs {

void Design::canonicalize() {
    if (v < 1 || v > BitMask::kMaxBits) {
        throw ShapeError("design point count " + std::to_string(v) + " out of range");
    }
    for (const auto& b : blocks) {
        if (b.highest() >= v) throw ShapeError("block " + b.to_string() + " exceeds point set");
        if (declared && b.count() != declared->block_size) {
            throw ShapeError("block " + b.to_string() + " has size " + std::to_string(b.count()) +
                             ", declared " + std::to_string(declared->block_size));
        }
    }
    std::sort(blocks.begin(), blocks.end(), LexLess{});
    if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end()) {
        throw ShapeError("design has repeated blocks");
    }
}

Design affine_planes(int s) {
    const FiniteField f(s);
    Design d;
    d.v = s * s * s;
    if (d.v > BitMask::kMaxBits) {
        throw InvalidArgument("AG(3," + std::to_string(s) + ") exceeds supported point count");
    }
    // Normals: projective points with first non-zero coordinate equal to 1.
    std::vector<std::array<int, 3>> normals;
    for (int a0 = 0; a0 < s; ++a0)
        for (int a1 = 0; a1 < s; ++a1)
            for (int a2 = 0; a2 < s; ++a2) {
                const std::array<int, 3> a{a0, a1, a2};
                const auto lead = std::find_if(a.begin(), a.end(), [](int x) { return x != 0; });
                if (lead != a.end() && *lead == 1) normals.push_back(a);
            }
    for (const auto& a : normals) {
        std::vector<BitMask> planes(s);
        for (int x0 = 0; x0 < s; ++x0)
            for (int x1 = 0; x1 < s; ++x1)
                for (int x2 = 0; x2 < s; ++x2) {
                    const int dot = f.add(f.add(f.mul(a[0], x0), f.mul(a[1], x1)), f.mul(a[2], x2));
                    planes[dot].set(x0 + s * x1 + s * s * x2);
                }
        for (auto& p : planes) d.blocks.push_back(p);
    }
    d.declared = DesignParams{2, s * s, s + 1};
    d.canonicalize();
    return d;
}

std::vector<std::vector<int>> parallel_classes(const Design& d) {
    std::vector<int> cls(d.blocks.size(), -1);
    std::vector<std::vector<int>> classes;
    const BitMask all = BitMask::first(d.v);
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        if (cls[i] >= 0) continue;
        std::vector<int> members{static_cast<int>(i)};
        cls[i] = static_cast<int>(classes.size());
        for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
            if (cls[j] >= 0) continue;
            if (overlap(d.blocks[i], d.blocks[j]) == 0) {
                members.push_back(static_cast<int>(j));
                cls[j] = cls[i];
            }
        }
        BitMask cover;
        int total = 0;
        for (int b : members) {
            cover |= d.blocks[b];
            total += d.blocks[b].count();
        }
        if (!(cover == all) || total != d.v) {
            throw Error("blocks disjoint from block " + std::to_string(i) +
                        " do not partition the point set");
        }
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (overlap(d.blocks[members[a]], d.blocks[members[b]]) != 0) {
                    throw Error("disjointness is not transitive; design is not strongly resolvable");
                }
        classes.push_back(std::move(members));
    }
    return classes;
}

std::vector<BitMask> golay_codewords() {
    constexpr int n = 23;
    constexpr std::uint64_t full = (std::uint64_t{1} << n) - 1;
    // Idempotent of the quadratic-residue code: ones at the non-zero squares mod 23.
    std::uint64_t generator = 0;
    for (int i = 1; i < n; ++i) generator |= std::uint64_t{1} << ((i * i) % n);
    auto rotate = [](std::uint64_t v, int k) {
        return ((v << k) | (v >> (n - k))) & full;
    };
    std::vector<std::uint64_t> basis;
    for (int k = 0; k < n; ++k) {
        std::uint64_t v = k == 0 ? generator : rotate(generator, k);
        for (auto b : basis) v = std::min(v, v ^ b);
        if (v != 0) {
            basis.push_back(v);
            std::sort(basis.rbegin(), basis.rend());
        }
    }
    std::vector<std::uint64_t> words{0};
    for (auto b : basis) {
        const std::size_t size = words.size();
        for (std::size_t i = 0; i < size; ++i) words.push_back(words[i] ^ b);
    }
    std::vector<BitMask> out;
    out.reserve(words.size());
    for (auto w : words) out.push_back(BitMask::from_word(w));
    return out;
}

Design witt_4_23_7() {
    Design d;
    d.v = 23;
    for (const auto& w : golay_codewords()) {
        if (w.count() == 7) d.blocks.push_back(w);
    }
    d.declared = DesignParams{4, 7, 1};
    d.canonicalize();
    return d;
}

Design complement_design(const Design& d) {
    Design c;
    c.v = d.v;
    for (const auto& b : d.blocks) c.blocks.push_back(b.complement(d.v));
    if (d.declared) {
        // A complement of a t-design is a t-design; its lambda is recomputed
        // rather than derived so the declaration is always checkable.
        const int t = d.declared->t;
        c.declared = DesignParams{t, d.v - d.declared->block_size, 0};
        c.canonicalize();
        const auto check = verify_t_design(c, t);
        c.declared->lambda = check.uniform ? check.lambda : 0;
        return c;
    }
    c.canonicalize();
    return c;
}

namespace {

BitMask compress(const BitMask& b, const std::vector<int>& keep) {
    BitMask out;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (b.test(keep[i])) out.set(static_cast<int>(i));
    }
    return out;
}

}  // namespace

Design derived_design(const Design& d, int point) {
    if (point < 0 || point >= d.v) {
        throw InvalidArgument("derived design point " + std::to_string(point) + " outside 0.." +
                              std::to_string(d.v - 1));
    }
    std::vector<int> keep;
    for (int i = 0; i < d.v; ++i) if (i != point) keep.push_back(i);
    Design out;
    out.v = d.v - 1;
    for (const auto& b : d.blocks) {
        if (b.test(point)) out.blocks.push_back(compress(b, keep));
    }
    if (d.declared && d.declared->t >= 1) {
        out.declared = DesignParams{d.declared->t - 1, d.declared->block_size - 1, d.declared->lambda};
    }
    out.canonicalize();
    return out;
}

Design residual_design(const Design& d, const std::vector<int>& removed) {
    BitMask gone;
    for (int p : removed) {
        if (p < 0 || p >= d.v) throw InvalidArgument("residual point outside point set");
        gone.set(p);
    }
    std::vector<int> keep;
    for (int i = 0; i < d.v; ++i) if (!gone.test(i)) keep.push_back(i);
    Design out;
    out.v = static_cast<int>(keep.size());
    for (const auto& b : d.blocks) {
        if (overlap(b, gone) == 0) out.blocks.push_back(compress(b, keep));
    }
    out.canonicalize();
    return out;
}

Design residual_2_21_7_12() {
    Design d = residual_design(witt_4_23_7(), {0, 1});
    d.declared = DesignParams{2, 7, 12};
    d.canonicalize();
    return d;
}

TDesignCheck verify_t_design(const Design& d, int t) {
    if (t < 0 || (!d.blocks.empty() && t > d.block_size())) {
        throw InvalidArgument("t = " + std::to_string(t) + " outside 0..block size");
    }
    TDesignCheck result;
    if (t == 0) {
        result.uniform = true;
        result.lambda = static_cast<int>(d.blocks.size());
        return result;
    }
    const std::uint64_t total = binomial(d.v, t);
    if (total > 50'000'000) {
        throw ResourceCapExceeded("t-subset table for verify_t_design", total, 50'000'000);
    }
    std::vector<int> counts(total, 0);
    for (const auto& b : d.blocks) {
        const auto pts = b.indices();
        const int k = static_cast<int>(pts.size());
        std::vector<int> pick(t);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<int> sub(t);
            for (int i = 0; i < t; ++i) sub[i] = pts[pick[i]];
            ++counts[colex_rank(sub)];
            int i = t - 1;
            while (i >= 0 && pick[i] == k - t + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    if (*lo == *hi) {
        result.uniform = true;
        result.lambda = *lo;
        return result;
    }
    auto unrank_mask = [&](std::uint64_t rank) {
        std::vector<int> idx;
        int n = d.v;
        for (int i = t; i >= 1; --i) {
            int c = i - 1;
            while (c + 1 < n && binomial(c + 1, i) <= rank) ++c;
            idx.push_back(c);
            rank -= binomial(c, i);
            n = c;
        }
        return BitMask::from_indices(idx);
    };
    result.witness_low = unrank_mask(static_cast<std::uint64_t>(lo - counts.begin()));
    result.witness_high = unrank_mask(static_cast<std::uint64_t>(hi - counts.begin()));
    result.count_low = *lo;
    result.count_high = *hi;
    return result;
}

std::set<int> intersection_profile(const std::vector<BitMask>& blocks) {
    if (blocks.size() < 2) throw InvalidArgument("intersection profile needs two blocks");
    std::set<int> out;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j) out.insert(overlap(blocks[i], blocks[j]));
    return out;
}

std::set<int> intersection_profile(const Design& d) { return intersection_profile(d.blocks); }

std::vector<CandidateVector> hadamard8_family() {
    std::vector<CandidateVector> rows;
    std::vector<CandidateVector> complements;
    for (int r = 1; r < 8; ++r) {
        BitMask plus;
        for (int c = 0; c < 8; ++c) {
            if (std::popcount(static_cast<unsigned>(r & c)) % 2 == 0) plus.set(c);
        }
        rows.push_back(CandidateVector::make(9, plus));
        complements.push_back(CandidateVector::make(9, plus.complement(8)));
    }
    rows.insert(rows.end(), complements.begin(), complements.end());
    return rows;
}

std::vector<CandidateVector> star_family(int n, int k, int t) {
    if (t < 0 || t > k || k > n || k < 1 || n > BitMask::kMaxBits) {
        throw InvalidArgument("star_family needs 0 <= t <= k <= n (n=" + std::to_string(n) +
                              ", k=" + std::to_string(k) + ", t=" + std::to_string(t) + ")");
    }
    std::vector<CandidateVector> out;
    const int free_count = n - t;
    const int pick_count = k - t;
    std::vector<int> pick(pick_count);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        BitMask m = BitMask::first(t);
        for (int p : pick) m.set(t + p);
        out.push_back(CandidateVector::make(n, m));
        int i = pick_count - 1;
        while (i >= 0 && pick[i] == free_count - pick_count + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < pick_count; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<CandidateVector> complement_family(const std::vector<CandidateVector>& family) {
    std::vector<CandidateVector> out;
    out.reserve(family.size());
    for (const auto& v : family) out.push_back(CandidateVector::make(v.ambient, v.base.complement(v.ambient)));
    return out;
}

BitMask PaddedFamily::suffix(std::size_t i) const {
    BitMask out;
    const int p = static_cast<int>(prefix.size());
    for (int idx : members.at(i).base.indices()) {
        if (idx >= p) out.set(idx - p);
    }
    return out;
}

namespace {

PaddedFamily pad_masks(const std::vector<BitMask>& suffixes, int v, const std::vector<int>& prefix,
                       int ambient) {
    const int p = static_cast<int>(prefix.size());
    if (p + v != ambient) {
        throw ShapeError("prefix length " + std::to_string(p) + " + point count " + std::to_string(v) +
                         " != ambient " + std::to_string(ambient));
    }
    BitMask head;
    for (int i = 0; i < p; ++i) {
        if (prefix[i] != 0 && prefix[i] != 1) throw ShapeError("prefix entries must be 0 or 1");
        if (prefix[i] == 1) head.set(i);
    }
    PaddedFamily fam;
    fam.ambient = ambient;
    fam.prefix = prefix;
    for (const auto& s : suffixes) {
        fam.members.push_back(CandidateVector::make(ambient, head | s.shifted(p)));
    }
    for (const auto& m : fam.members) {
        if (m.weight() != fam.members.front().weight()) {
            throw ShapeError("padded family members have different weights");
        }
    }
    return fam;
}

}  // namespace

PaddedFamily pad(const Design& d, const std::vector<int>& prefix, int ambient) {
    return pad_masks(d.blocks, d.v, prefix, ambient);
}

PaddedFamily pad(const std::vector<CandidateVector>& family, const std::vector<int>& prefix,
                 int ambient) {
    if (family.empty()) throw ShapeError("cannot pad an empty family");
    std::vector<BitMask> masks;
    for (const auto& v : family) {
        if (v.ambient != family.front().ambient) throw ShapeError("family members differ in ambient size");
        masks.push_back(v.base);
    }
    return pad_masks(masks, family.front().ambient, prefix, ambient);
}

bool equivalent_up_to_permutation(const std::vector<BitMask>& a, const std::vector<BitMask>& b, int n) {
    if (n > 10) throw InvalidArgument("permutation equivalence limited to n <= 10");
    if (a.size() != b.size()) return false;
    std::vector<BitMask> target = b;
    std::sort(target.begin(), target.end(), LexLess{});
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<BitMask> image(a.size());
    do {
        for (std::size_t i = 0; i < a.size(); ++i) {
            BitMask m;
            for (int idx : a[i].indices()) m.set(perm[idx]);
            image[i] = m;
        }
        std::sort(image.begin(), image.end(), LexLess{});
        if (image == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace twodist::designs
