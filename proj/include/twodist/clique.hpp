#pragma once

// Largest same-weight families with prescribed l values, by exact clique search.

#include <cstddef>
#include <set>
#include <vector>

#include "twodist/bitmask.hpp"
#include "twodist/rational.hpp"

namespace twodist::searcher {

struct CliqueResult {
    std::vector<CandidateVector> members;  // lexicographically least maximum family
    std::size_t vertices = 0;              // C(n, k)
    std::uint64_t nodes = 0;               // branch-and-bound nodes over all phases
};

/// Maximum set of weight-k subsets of {0..n-1} whose pairwise l values lie in
/// `allowed_l`. Throws ResourceCapExceeded when C(n, k) > vertex_cap.
CliqueResult max_subset_search(int n, int k, const std::set<int>& allowed_l, std::size_t vertex_cap = 20000);

struct OneDistanceCheck {
    Rational inner_product;      // common value of <f(x), f(y)>
    bool bound_applies = false;  // n t >= k^2
    bool within_bound = true;    // |family| <= n - 1 when the bound applies
};

/// Family of weight-k vectors in ambient n with every pairwise overlap t.
/// Computes the centred inner products exactly and checks they are all
/// t - k^2/n. Throws InvalidArgument when the family is not equidistant or a
/// member has the wrong shape.
OneDistanceCheck one_distance_bound_check(int n, int k, int t, const std::vector<CandidateVector>& family);

}  // namespace twodist::searcher
