#pragma once

// Block designs added to the simplex: affine planes AG(3, s), the Witt design
// S(4, 7, 23) with its complement, derived and residual designs, the
// Hadamard-8 family and trivially t-intersecting families, plus padding of
// blocks into candidate vectors.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twodist/bitmask.hpp"
#include "twodist/finite_field.hpp"

namespace twodist::designs {

struct DesignParams {
    int t = 0;
    int block_size = 0;
    int lambda = 0;

    friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// Point set {0, ..., v-1} with blocks kept in lexicographic order of their
/// sorted index lists.
struct Design {
    int v = 0;
    std::vector<BitMask> blocks;
    std::optional<DesignParams> declared;

    /// Sorts blocks and checks: indices < v, no duplicates, uniform size when
    /// declared. Throws ShapeError on violation.
    void canonicalize();
    int block_size() const { return blocks.empty() ? 0 : blocks.front().count(); }
};

/// Points are F_s^3 indexed x0 + s*x1 + s^2*x2; blocks are the planes a.x = c.
Design affine_planes(int s);

/// Groups blocks into classes of pairwise disjoint blocks each covering every
/// point exactly once. Returns block indices per class. Throws Error when the
/// design is not resolvable in this way.
std::vector<std::vector<int>> parallel_classes(const Design& d);

/// Codewords of the binary quadratic-residue code of length 23, as bit masks.
std::vector<BitMask> golay_codewords();

/// S(4, 7, 23): supports of the weight-7 Golay codewords.
Design witt_4_23_7();

Design complement_design(const Design& d);

/// Blocks through `point` (0-based) with the point removed; the remaining
/// points are renumbered to 0..v-2.
Design derived_design(const Design& d, int point);

/// Blocks avoiding every point of `removed` (0-based), on the remaining points
/// renumbered to 0..v-|removed|-1.
Design residual_design(const Design& d, const std::vector<int>& removed);

/// 2-(21, 7, 12): blocks of S(4, 7, 23) disjoint from points {0, 1}.
Design residual_2_21_7_12();

struct TDesignCheck {
    bool uniform = false;
    int lambda = 0;  // the common count when uniform
    // On failure: two t-subsets with different counts.
    std::optional<BitMask> witness_low;
    std::optional<BitMask> witness_high;
    int count_low = 0;
    int count_high = 0;
};

/// Counts the blocks over every t-subset of points. t = 0 gives the block count.
TDesignCheck verify_t_design(const Design& d, int t);

/// {|B1 ∩ B2| : B1 != B2}. Throws InvalidArgument for fewer than two blocks.
std::set<int> intersection_profile(const Design& d);
std::set<int> intersection_profile(const std::vector<BitMask>& blocks);

/// Normalized Sylvester rows 2..8 (ones where the entry is +1) and their
/// complements within 8 coordinates, each followed by a 0: ambient 9, weight 4.
std::vector<CandidateVector> hadamard8_family();

/// All weight-k subsets of {0..n-1} containing {0..t-1}, in lexicographic order.
std::vector<CandidateVector> star_family(int n, int k, int t);

/// Complement of each member within its ambient set.
std::vector<CandidateVector> complement_family(const std::vector<CandidateVector>& family);

/// Members of a family that agree on a common prefix pattern.
struct PaddedFamily {
    int ambient = 0;
    std::vector<int> prefix;  // 0/1 entries
    std::vector<CandidateVector> members;
    std::string label;

    int weight() const { return members.empty() ? 0 : members.front().weight(); }
    /// Suffix part of member i (shifted back to start at 0).
    BitMask suffix(std::size_t i) const;
};

/// Prefixes each block's characteristic vector with `prefix`.
/// Throws ShapeError unless prefix.size() + d.v == ambient.
PaddedFamily pad(const Design& d, const std::vector<int>& prefix, int ambient);
PaddedFamily pad(const std::vector<CandidateVector>& family, const std::vector<int>& prefix,
                 int ambient);

/// Whether two families of subsets of {0..n-1} coincide after some
/// permutation of coordinates. Brute force over n! permutations; n <= 10.
bool equivalent_up_to_permutation(const std::vector<BitMask>& a, const std::vector<BitMask>& b,
                                  int n);

}  // namespace twodist::designs
