#pragma once

// Admissible parameters (d, k, k', beta, alpha) for an integer LRS ratio s.

#include <optional>
#include <string>
#include <vector>

#include "twodist/rational.hpp"

namespace twodist::paramspace {

/// Which of the two distance regimes: alpha < 2 or alpha > 2.
enum class Branch { Below, Above };

std::string to_string(Branch b);
/// Accepts "below"/"above" (case-insensitive). Throws InvalidArgument otherwise.
Branch parse_branch(const std::string& text);

struct ParamTuple {
    int d = 0;
    int k = 0;
    int k_prime = 0;
    int s = 0;
    Branch branch = Branch::Below;
    Rational beta;
    Rational alpha;

    friend bool operator==(const ParamTuple&, const ParamTuple&) = default;
};

/// A root of the quadratic for beta. Irrational roots are kept as markers
/// (k ± sqrt(discriminant)) / denominator rather than rejected.
struct BetaOption {
    bool rational = true;
    Rational value;           // valid when rational
    long discriminant = 0;    // k (d+1) (d+2-k); 0 for the k = 1 and k = d+1 cases
    int sign = 0;             // +1 / -1 for the two roots, 0 for the single-root cases

    std::string to_string() const;
};

std::vector<BetaOption> beta_options(int d, int k);

/// Rational roots only.
std::vector<Rational> rational_betas(int d, int k);

Rational alpha_from_s(int s, Branch branch);
Rational beta_from_s(int s, Branch branch);

/// Dimension as a function of k for the branch, or nullopt when k hits the
/// pole (k = s^2 resp. (s-1)^2) or the value is not an integer.
std::optional<int> dimension_for(int s, Branch branch, int k);

/// All tuples ordered by (d, k). Throws InvalidArgument for s < 2.
std::vector<ParamTuple> admissible_params(int s, Branch branch);

/// The tuple for (s, branch, d, k). Throws NotAdmissible if it is not in the list.
ParamTuple param_tuple(int s, Branch branch, int d, int k);

/// The other weight with the same dimension. Throws NotAdmissible when
/// k - s^2 (resp. k - (s-1)^2) does not divide s^2 (s-1)^2.
int paired_k(int s, Branch branch, int k);

/// Same-weight values of l(x, y) = k - |x ∩ y|.
std::vector<int> allowed_l(int s, Branch branch);

/// The two candidate overlap sets for pairs of different weights:
/// {s^2, s(s-1)} and {(s-1)^2, s(s-1)}. Which one holds for a branch is
/// decided by exact geometry in the searcher (see searcher::resolve_allowed_m).
enum class MSetRule { SquareS, SquareSMinusOne };
std::string to_string(MSetRule rule);
std::vector<int> allowed_m(int s, MSetRule rule);
/// The rule that the k-pairing rule assigns to a branch.
MSetRule pairing_rule(Branch branch);

/// Integers s with 2 <= s <= 1/2 + sqrt(d/2).
std::vector<int> lrs_candidates(int d);

}  // namespace twodist::paramspace
