#pragma once

// Addability of candidate vectors, instance verification and exhaustive
// maximality certification.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twodist/bitmask.hpp"
#include "twodist/designs.hpp"
#include "twodist/paramspace.hpp"
#include "twodist/rational.hpp"

namespace twodist::searcher {

/// Outcome of arbitrating the cross-weight overlap set by exact geometry.
struct MSetResolution {
    paramspace::MSetRule rule = paramspace::MSetRule::SquareS;
    std::vector<int> values;     // allowed_m(s, rule)
    std::vector<int> geometric;  // overlaps whose exact squared distance lies in {2, alpha}
    std::vector<int> feasible;   // overlaps realisable for weights k, k' in ambient d+1
};

/// Embeds one pair of weights (k, k') per feasible overlap and keeps the
/// candidate rule that agrees with the exact distances. Throws Error if
/// neither rule agrees. For k == k' there are no cross pairs and the
/// pairing rule of the branch is returned unchanged.
MSetResolution resolve_allowed_m(const paramspace::ParamTuple& params);

/// A full 2-distance set: optional simplex, padded families and extra vectors.
struct Instance {
    std::string name;
    paramspace::ParamTuple params;
    bool include_simplex = true;
    std::vector<designs::PaddedFamily> families;
    std::vector<CandidateVector> extras;
    std::vector<int> allowed_l;
    std::vector<int> allowed_m;
    paramspace::MSetRule m_rule = paramspace::MSetRule::SquareS;

    int ambient() const { return params.d + 1; }
    /// Simplex points (if included) plus every family member and extra.
    std::size_t size() const;
    /// Family members followed by extras.
    std::vector<CandidateVector> members() const;
};

/// Assembles an instance and fills allowed_l / allowed_m. The cross-weight set
/// comes from resolve_allowed_m unless `m_rule` overrides it.
Instance make_instance(std::string name, const paramspace::ParamTuple& params, bool include_simplex,
                       std::vector<designs::PaddedFamily> families,
                       std::vector<CandidateVector> extras,
                       std::optional<paramspace::MSetRule> m_rule = std::nullopt);

/// Half the symmetric difference; requires equal ambient and weight.
int l_value(const CandidateVector& x, const CandidateVector& y);
/// |base(x) ∩ base(y)|; requires equal ambient and different weights.
int m_value(const CandidateVector& x, const CandidateVector& y);

/// Why a vector cannot join an instance.
struct Conflict {
    std::string reason;  // "weight", "ambient", "duplicate", "l", "m"
    std::optional<std::size_t> member;
    int value = 0;
};

std::optional<Conflict> addability_conflict(const Instance& inst, const CandidateVector& z);
bool check_addable(const Instance& inst, const CandidateVector& z);

struct Violation {
    std::string first;   // "e3", "member 17" ...
    std::string second;
    std::string kind;    // "weight", "duplicate", "l", "m", "distance"
    int value = 0;
    std::optional<Rational> squared_distance;
};

struct VerifyOptions {
    /// Exact rational embedding is run for d up to this bound.
    int exact_geometry_max_d = 31;
};

struct Report {
    bool valid = false;
    std::size_t points = 0;
    std::set<Rational> spectrum;       // from the combinatorial calculus
    bool exact_geometry = false;       // whether the embedding was checked
    std::set<Rational> exact_spectrum; // filled when exact_geometry
    std::optional<Violation> violation;
    std::vector<std::string> warnings;
};

Report verify_instance(const Instance& inst, const VerifyOptions& options = {});

/// Squared distance between two candidates of the instance's tuple, from
/// overlap counts alone.
Rational combinatorial_squared_distance(const paramspace::ParamTuple& params, int weight_x,
                                        int weight_y, int overlap);

/// Exact-geometry addability: embeds z and every point of the instance and
/// tests that all distances from z lie in {2, alpha} and z is new.
bool geometric_addable(const Instance& inst, const CandidateVector& z);

enum class Method { Brute, Decomposed };
enum class Verdict { Maximal, Extendable };
std::string to_string(Method m);
std::string to_string(Verdict v);
Method parse_method(const std::string& text);

/// One block of the decomposed scan: how many coordinates are taken from each
/// interchangeable coordinate class, and the resulting free-part weight.
struct SearchCase {
    int weight = 0;
    std::vector<int> class_counts;
    int suffix_weight = 0;
    bool pruned = false;  // some member's shifted overlap set is unreachable
    std::uint64_t scanned = 0;
    std::uint64_t hits = 0;
};

/// A set of coordinates on which every instance member is constant.
struct CoordinateClass {
    std::vector<int> positions;  // 0-based, ascending
};

struct MaximalityReport {
    Verdict verdict = Verdict::Maximal;
    std::optional<CandidateVector> counterexample;  // lexicographically least
    std::uint64_t scanned = 0;
    Method method = Method::Brute;
    /// Number of distinct addable vectors (orbit sizes summed for DECOMPOSED).
    std::uint64_t extension_count = 0;
    /// Least addable vectors (DECOMPOSED: least element of each orbit).
    std::vector<CandidateVector> extensions;
    std::vector<SearchCase> cases;
    std::vector<CoordinateClass> classes;  // DECOMPOSED only; classes of size >= 2
};

struct SearchOptions {
    Method method = Method::Decomposed;
    /// Maximum number of candidates the scan may examine.
    std::uint64_t cap = 4'000'000'000ULL;
    int threads = 1;
    std::size_t max_listed = 1000;
};

/// Exhaustive search for vectors addable to the instance. Throws
/// ResourceCapExceeded before scanning when the candidate count exceeds the
/// cap or the ambient dimension exceeds 64.
MaximalityReport maximality_check(const Instance& inst, const SearchOptions& options = {});

/// Partition of coordinates into classes on which all members agree.
std::vector<CoordinateClass> coordinate_classes(const Instance& inst);

/// Lexicographically least vector in the orbit of v under permutations inside
/// each coordinate class.
CandidateVector orbit_representative(const Instance& inst, const CandidateVector& v);

/// Whether v is among the reported extensions (up to the class symmetry for
/// DECOMPOSED reports).
bool reports_extension(const Instance& inst, const MaximalityReport& report, const CandidateVector& v);

/// Some weight-m subset z of the design's points with |z ∩ B| in `allowed`
/// for every block B, or nullopt when none exists. Requires v <= 64.
std::optional<BitMask> profile_scan(const designs::Design& design, int m, const std::set<int>& allowed);

/// Some weight-m subset whose intersection sizes with the blocks take at most
/// `max_values` distinct values (early exit at max_values + 1).
std::optional<BitMask> few_valued_profile(const designs::Design& design, int m, int max_values = 2);

struct ObstructionQuery {
    int s = 0;
    int a = 0;
    int b = 0;

    /// Throws InvalidArgument unless a - b = s and 0 <= b < s.
    static ObstructionQuery make(int s, int a, int b);
};

struct ObstructionResult {
    std::optional<BitMask> witness;
    std::uint64_t nodes = 0;           // search tree nodes visited (root included)
    std::uint64_t internal_nodes = 0;  // visited nodes that branch on a point
    std::uint64_t pruned = 0;          // children rejected by the interval test
    bool exhausted = false;            // full tree explored without a witness
};

/// Depth-first search for a non-empty point subset S with |S ∩ B| in `allowed`
/// for all blocks B (include-branch first).
ObstructionResult subset_search(const designs::Design& design, const std::set<int>& allowed);

/// subset_search on AG(3, s) with allowed = {a, b}. Throws ResourceCapExceeded
/// for s > s_cap.
ObstructionResult obstruction_search(int s, const ObstructionQuery& query, int s_cap = 3);

}  // namespace twodist::searcher
