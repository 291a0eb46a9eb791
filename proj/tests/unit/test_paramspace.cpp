#include <algorithm>

#include "doctest.h"
#include "twodist/errors.hpp"
#include "twodist/exactgeom.hpp"
#include "twodist/paramspace.hpp"

using namespace twodist;
using namespace twodist::paramspace;

namespace {

std::vector<std::pair<int, int>> dk_pairs(int s, Branch b) {
    std::vector<std::pair<int, int>> out;
    for (const auto& p : admissible_params(s, b)) out.emplace_back(p.d, p.k);
    return out;
}

// Dimension straight from the rational formula, independent of the divisor scan.
std::optional<int> dimension_oracle(int s, Branch b, int k) {
    const int pole = b == Branch::Below ? s * s : (s - 1) * (s - 1);
    if (k == pole) return std::nullopt;
    const int shift = b == Branch::Below ? s * s - 2 * s - 1 : s * s - 2;
    const Rational d = Rational(k + shift) + Rational(static_cast<long>(s) * s * (s - 1) * (s - 1), k - pole);
    if (!d.is_integer()) return std::nullopt;
    return static_cast<int>(d.to_long());
}

}  // namespace

TEST_SUITE("paramspace") {
TEST_CASE("lists for s = 2 and s = 3") {
    using V = std::vector<std::pair<int, int>>;
    CHECK(dk_pairs(2, Branch::Below) == V{{7, 6}, {8, 5}, {8, 8}});
    CHECK(dk_pairs(2, Branch::Above) == V{{7, 3}, {8, 2}, {8, 5}});
    CHECK(dk_pairs(3, Branch::Above) ==
          V{{23, 10}, {24, 8}, {24, 13}, {26, 7}, {26, 16}, {31, 6}, {31, 22}, {48, 5}, {48, 40}});
    const auto below3 = admissible_params(3, Branch::Below);
    auto it = std::find_if(below3.begin(), below3.end(), [](const ParamTuple& p) { return p.d == 31 && p.k == 11; });
    REQUIRE(it != below3.end());
    CHECK(it->k_prime == 27);
    CHECK_THROWS_AS(admissible_params(1, Branch::Above), InvalidArgument);
}

TEST_CASE("divisor scan agrees with a direct integrality scan") {
    for (int s = 2; s <= 7; ++s) {
        for (Branch b : {Branch::Below, Branch::Above}) {
            std::vector<std::pair<int, int>> brute;
            // k - pole divides s^2 (s-1)^2, so k <= s^4 covers every case.
            for (int k = 2; k <= s * s * s * s; ++k) {
                const auto d = dimension_oracle(s, b, k);
                if (!d || *d < 2 || k > *d) continue;
                if (b == Branch::Above && *d + 2 < k + s) continue;
                brute.emplace_back(*d, k);
            }
            std::sort(brute.begin(), brute.end());
            CHECK(dk_pairs(s, b) == brute);
        }
    }
}

TEST_CASE("tuple invariants") {
    for (int s = 2; s <= 6; ++s) {
        for (Branch b : {Branch::Below, Branch::Above}) {
            for (const auto& p : admissible_params(s, b)) {
                CAPTURE(p.d);
                CAPTURE(p.k);
                CHECK(p.beta == beta_from_s(s, b));
                CHECK(p.alpha == alpha_from_s(s, b));
                const Rational ratio = b == Branch::Below ? p.alpha / Rational(2) : Rational(2) / p.alpha;
                CHECK(ratio == Rational(s - 1, s));
                const auto betas = rational_betas(p.d, p.k);
                CHECK(std::find(betas.begin(), betas.end(), p.beta) != betas.end());
                CHECK(paired_k(s, b, p.k) == p.k_prime);
                CHECK(dimension_for(s, b, p.k) == p.d);
            }
        }
    }
}

TEST_CASE("alpha and beta values") {
    CHECK(alpha_from_s(2, Branch::Below) == Rational(1));
    CHECK(alpha_from_s(2, Branch::Above) == Rational(4));
    CHECK(alpha_from_s(3, Branch::Above) == Rational(3));
    CHECK(alpha_from_s(3, Branch::Below) == Rational(4, 3));
    CHECK(beta_from_s(3, Branch::Below) == Rational(-1, 3));
    CHECK(beta_from_s(3, Branch::Above) == Rational(1, 2));
    CHECK_THROWS_AS(alpha_from_s(1, Branch::Below), InvalidArgument);
}

TEST_CASE("beta options") {
    auto contains = [](const std::vector<Rational>& v, const Rational& x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    CHECK(contains(rational_betas(8, 5), Rational(-1, 2)));
    CHECK(contains(rational_betas(7, 3), Rational(1)));
    const auto one = beta_options(4, 1);
    REQUIRE(one.size() == 1);
    CHECK(one.front().value == Rational(3, 2));
    const auto full = beta_options(4, 5);
    REQUIRE(full.size() == 1);
    CHECK(full.front().value == Rational(-6, 10));
    CHECK_THROWS_AS(beta_options(4, 0), InvalidArgument);
    CHECK_THROWS_AS(beta_options(4, 6), InvalidArgument);
    // d=5, k=2: discriminant 2*6*5 = 60 is not a square.
    const auto irr = beta_options(5, 2);
    REQUIRE(irr.size() == 2);
    CHECK_FALSE(irr[0].rational);
    CHECK(irr[0].discriminant == 60);
    CHECK(rational_betas(5, 2).empty());
}

TEST_CASE("every rational root puts the vertices outside the base set at squared distance 2") {
    for (int d = 2; d <= 20; ++d) {
        for (int k = 1; k <= d + 1; ++k) {
            for (const Rational& beta : rational_betas(d, k)) {
                const auto x = CandidateVector::make(d + 1, BitMask::first(k));
                const auto p = exactgeom::embed(x, d, k, beta);
                const auto e = exactgeom::simplex_points(d);
                if (k <= d) {
                    CHECK(exactgeom::squared_distance(p, e[d]) == Rational(2));
                } else {
                    // Full weight collapses to the centroid whatever beta is.
                    CHECK(exactgeom::squared_distance(p, e[0]) == Rational(d, d + 1));
                }
            }
        }
    }
}

TEST_CASE("k pairing") {
    CHECK(paired_k(2, Branch::Below, 5) == 8);
    CHECK(paired_k(2, Branch::Below, 6) == 6);
    CHECK(paired_k(3, Branch::Above, 10) == 10);
    CHECK(paired_k(3, Branch::Above, 6) == 22);
    CHECK_THROWS_AS(paired_k(3, Branch::Above, 9), NotAdmissible);
    CHECK_THROWS_AS(paired_k(3, Branch::Above, 4), NotAdmissible);
}

TEST_CASE("param_tuple lookup") {
    const auto p = param_tuple(3, Branch::Above, 48, 40);
    CHECK(p.k_prime == 5);
    CHECK_THROWS_AS(param_tuple(3, Branch::Above, 48, 41), NotAdmissible);
}

TEST_CASE("allowed value sets") {
    CHECK(allowed_l(2, Branch::Below) == std::vector<int>{2, 4});
    CHECK(allowed_l(2, Branch::Above) == std::vector<int>{1, 2});
    CHECK(allowed_l(3, Branch::Above) == std::vector<int>{4, 6});
    CHECK(allowed_m(3, MSetRule::SquareS) == std::vector<int>{6, 9});
    CHECK(allowed_m(2, MSetRule::SquareS) == std::vector<int>{2, 4});
    CHECK(allowed_m(3, MSetRule::SquareSMinusOne) == std::vector<int>{4, 6});
    CHECK(pairing_rule(Branch::Below) == MSetRule::SquareS);
    CHECK(pairing_rule(Branch::Above) == MSetRule::SquareSMinusOne);
}

TEST_CASE("LRS ratio candidates") {
    CHECK(lrs_candidates(8) == std::vector<int>{2});
    CHECK(lrs_candidates(2).empty());
    CHECK(lrs_candidates(48) == std::vector<int>{2, 3, 4, 5});
    CHECK(lrs_candidates(60) == std::vector<int>{2, 3, 4, 5});
    CHECK(lrs_candidates(61) == std::vector<int>{2, 3, 4, 5, 6});
}

TEST_CASE("resolvable tuples exist for prime powers") {
    for (int s : {2, 3, 4, 5, 7}) {
        const int d = (s - 1) * (s + 1) * (s + 1) - 1;
        const auto p = param_tuple(s, Branch::Below, d, s * s + s - 1);
        CHECK(p.k_prime == s * s * s);
    }
}

TEST_CASE("branch parsing") {
    CHECK(parse_branch("BELOW") == Branch::Below);
    CHECK(parse_branch("above") == Branch::Above);
    CHECK_THROWS_AS(parse_branch("sideways"), InvalidArgument);
}
}
