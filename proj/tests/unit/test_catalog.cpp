#include "doctest.h"
#include "twodist/catalog.hpp"
#include "twodist/errors.hpp"

using namespace twodist;

TEST_SUITE("catalog") {
TEST_CASE("names and expected sizes") {
    const auto names = catalog::names();
    CHECK(names.size() == 15);
    CHECK(names.front() == "d7-J83");
    CHECK(names.back() == "resolvable-s5");
    for (const auto& e : catalog::entries()) {
        CAPTURE(e.name);
        const auto inst = catalog::build_instance(e.name);
        CHECK(inst.size() == e.expected_size);
        CHECK(inst.params.d == e.d);
        for (const auto& m : inst.members()) {
            CHECK((m.weight() == inst.params.k || m.weight() == inst.params.k_prime));
        }
    }
}

TEST_CASE("resolvable family size formula") {
    for (int s = 2; s <= 5; ++s) {
        const auto inst = catalog::build_instance("resolvable-s" + std::to_string(s));
        CHECK(inst.size() == catalog::resolvable_size(s));
        CHECK(inst.params.d == s * s * s + s * s - s - 2);
        CHECK(inst.params.d == catalog::resolvable_dimension(s));
    }
    CHECK(catalog::resolvable_size(3) == 72);
}

TEST_CASE("both d = 26 rows have equal size") {
    CHECK(catalog::build_instance("d26-witt").size() == catalog::build_instance("d26-wittc").size());
}

TEST_CASE("extra vectors") {
    CHECK(catalog::extra_vector("d31-wittc")->base == BitMask::first(6));
    CHECK(catalog::extra_vector("d31-3221")->base == BitMask::first(10).complement(32));
    CHECK(catalog::extra_vector("resolvable-s3")->base == BitMask::first(5).complement(32));
    CHECK(catalog::extra_vector("d8-hadamard")->base == BitMask::first(8));
    CHECK_FALSE(catalog::extra_vector("d48-wittc").has_value());
}

TEST_CASE("withholding extras") {
    catalog::BuildOptions opt;
    opt.include_extras = false;
    const auto inst = catalog::build_instance("d31-wittc", opt);
    CHECK(inst.size() == 285);
    CHECK(inst.extras.empty());
    CHECK(catalog::build_instance("d24-witt", opt).size() == 278);
}

TEST_CASE("overlap rule override") {
    catalog::BuildOptions opt;
    opt.m_rule = paramspace::MSetRule::SquareS;
    const auto inst = catalog::build_instance("d48-wittc", opt);
    CHECK(inst.allowed_m == std::vector<int>{6, 9});
    CHECK(catalog::build_instance("d48-wittc").allowed_m == std::vector<int>{4, 6});
}

TEST_CASE("unknown names") {
    CHECK_THROWS_AS(catalog::build_instance("nosuch"), InvalidArgument);
    CHECK_THROWS_AS(catalog::entry("resolvable-s6"), InvalidArgument);
}
}
