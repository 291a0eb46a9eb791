#include "doctest.h"
#include "twodist/clique.hpp"
#include "twodist/designs.hpp"
#include "twodist/errors.hpp"

using namespace twodist;
using namespace twodist::searcher;

namespace {

void check_clique(const CliqueResult& r, int k, const std::set<int>& allowed) {
    for (std::size_t i = 0; i < r.members.size(); ++i) {
        CHECK(r.members[i].weight() == k);
        for (std::size_t j = i + 1; j < r.members.size(); ++j) {
            CHECK(allowed.count(k - overlap(r.members[i].base, r.members[j].base)) == 1);
            CHECK(lex_less(r.members[i].base, r.members[j].base));
        }
    }
}

std::vector<BitMask> masks(const std::vector<CandidateVector>& v) {
    std::vector<BitMask> out;
    for (const auto& x : v) out.push_back(x.base);
    return out;
}

}  // namespace

TEST_SUITE("clique") {
TEST_CASE("perfect matchings of J(8,2)") {
    const auto r = max_subset_search(8, 2, {2, 4});
    CHECK(r.members.size() == 4);
    CHECK(r.vertices == 28);
    check_clique(r, 2, {2, 4});
    CHECK(r.members.front().base == BitMask{0, 1});
    CHECK(r.members.back().base == BitMask{6, 7});
}

TEST_CASE("J(9,1) admits a single vector") {
    const auto r = max_subset_search(9, 1, {2, 4});
    CHECK(r.members.size() == 1);
    CHECK(r.members.front().base == BitMask{0});
}

TEST_CASE("J(9,4) with l in {2,4} is the Hadamard family") {
    const auto r = max_subset_search(9, 4, {2, 4});
    CHECK(r.members.size() == 14);
    check_clique(r, 4, {2, 4});
    CHECK(designs::equivalent_up_to_permutation(masks(r.members), masks(designs::hadamard8_family()), 9));
}

TEST_CASE("s = 2 above-branch maxima") {
    CHECK(max_subset_search(8, 3, {1, 2}).members.size() == 21);
    CHECK(max_subset_search(9, 2, {1, 2}).members.size() == 36);
    CHECK(max_subset_search(9, 4, {1, 2}).members.size() == 21);
}

TEST_CASE("vertex cap") {
    CHECK_THROWS_AS(max_subset_search(20, 10, {2}), ResourceCapExceeded);
    CHECK_THROWS_AS(max_subset_search(5, 6, {2}), InvalidArgument);
}

TEST_CASE("one-distance bound") {
    // Two weight-4 vectors sharing 2 points in ambient 8.
    const std::vector<CandidateVector> pair{CandidateVector::from_one_based(8, {1, 2, 3, 4}),
                                            CandidateVector::from_one_based(8, {1, 2, 5, 6})};
    const auto r = one_distance_bound_check(8, 4, 2, pair);
    CHECK(r.inner_product == Rational(0));
    CHECK(r.bound_applies);
    CHECK(r.within_bound);
    // The 7 Hadamard blocks containing no fixed complement: Sylvester rows in ambient 8.
    std::vector<CandidateVector> rows;
    for (const auto& h : designs::hadamard8_family()) {
        if (h.base.test(0)) rows.push_back(CandidateVector::make(8, h.base));
    }
    REQUIRE(rows.size() == 7);
    const auto hr = one_distance_bound_check(8, 4, 2, rows);
    CHECK(hr.bound_applies);
    CHECK(hr.within_bound);
    CHECK_THROWS_AS(one_distance_bound_check(8, 4, 1, pair), InvalidArgument);
    CHECK_THROWS_AS(one_distance_bound_check(9, 4, 2, pair), InvalidArgument);
    // n t < k^2: bound does not apply.
    const auto loose = one_distance_bound_check(9, 4, 1, {CandidateVector::from_one_based(9, {1, 2, 3, 4}),
                                                          CandidateVector::from_one_based(9, {1, 5, 6, 7})});
    CHECK_FALSE(loose.bound_applies);
    CHECK(loose.inner_product == Rational(1) - Rational(16, 9));
}
}
