#include "twodist/catalog.hpp"

#include "twodist/designs.hpp"
#include "twodist/errors.hpp"

namespace twodist::catalog {

using paramspace::Branch;

int resolvable_dimension(int s) { return (s - 1) * (s + 1) * (s + 1) - 1; }
std::size_t resolvable_size(int s) { return static_cast<std::size_t>(2 * s * s * (s + 1)); }

const std::vector<Entry>& entries() {
    static const std::vector<Entry> list = [] {
        std::vector<Entry> v{
            {"d7-J83", 7, 2, Branch::Above, 3, 29, "J(8,3) star through one point", false},
            {"d8-hadamard", 8, 2, Branch::Below, 5, 24, "Hadamard matrix of order 8", true},
            {"d8-2intersecting", 8, 2, Branch::Above, 5, 30, "largest 2-intersecting family", false},
            {"d8-J92", 8, 2, Branch::Above, 2, 45, "J(9,2)", false},
            {"d23-21712", 23, 3, Branch::Above, 10, 144, "2-(21,7,12) design", false},
            {"d24-witt", 24, 3, Branch::Above, 8, 278, "4-(23,7,1) design", false},
            {"d26-witt", 26, 3, Branch::Above, 7, 280, "4-(23,7,1) design", false},
            {"d26-wittc", 26, 3, Branch::Above, 16, 280, "complement of 4-(23,7,1) design", false},
            {"d31-3221", 31, 3, Branch::Above, 6, 110, "3-(22,6,1) design", true},
            {"d31-wittc", 31, 3, Branch::Above, 22, 286, "complement of 4-(23,7,1) design", true},
            {"d48-wittc", 48, 3, Branch::Above, 40, 302, "complement of 4-(23,7,1) design", false},
        };
        for (int s = 2; s <= 5; ++s) {
            v.push_back({"resolvable-s" + std::to_string(s), resolvable_dimension(s), s, Branch::Below,
                         s * s + s - 1, resolvable_size(s),
                         "2-(" + std::to_string(s * s * s) + "," + std::to_string(s * s) + "," +
                             std::to_string(s + 1) + ") design",
                         true});
        }
        return v;
    }();
    return list;
}

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.name);
    return out;
}

const Entry& entry(const std::string& name) {
    for (const auto& e : entries()) {
        if (e.name == name) return e;
    }
    throw InvalidArgument("unknown instance name '" + name + "'");
}

namespace {

std::vector<int> pattern(std::initializer_list<std::pair<int, int>> runs) {
    std::vector<int> out;
    for (auto [bit, count] : runs) out.insert(out.end(), count, bit);
    return out;
}

CandidateVector from_pattern(const std::vector<int>& bits) {
    BitMask m;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) m.set(static_cast<int>(i));
    }
    return CandidateVector::make(static_cast<int>(bits.size()), m);
}

designs::PaddedFamily labelled(designs::PaddedFamily f, std::string label) {
    f.label = std::move(label);
    return f;
}

struct Parts {
    std::vector<designs::PaddedFamily> families;
    std::optional<CandidateVector> extra;
};

Parts parts_for(const Entry& e) {
    const int n = e.d + 1;
    Parts p;
    if (e.name == "d7-J83") {
        p.families.push_back(labelled(designs::pad(designs::star_family(8, 3, 1), {}, n), "J(8,3) star"));
    } else if (e.name == "d8-hadamard") {
        p.families.push_back(labelled(
            designs::pad(designs::complement_family(designs::hadamard8_family()), {}, n), "Hadamard"));
        p.extra = from_pattern(pattern({{1, 8}, {0, 1}}));
    } else if (e.name == "d8-2intersecting") {
        p.families.push_back(labelled(
            designs::pad(designs::complement_family(designs::star_family(9, 4, 2)), {}, n), "2-intersecting"));
    } else if (e.name == "d8-J92") {
        p.families.push_back(labelled(designs::pad(designs::star_family(9, 2, 0), {}, n), "J(9,2)"));
    } else if (e.name == "d23-21712") {
        p.families.push_back(labelled(designs::pad(designs::residual_2_21_7_12(), pattern({{1, 3}}), n),
                                      "2-(21,7,12)"));
    } else if (e.name == "d24-witt") {
        p.families.push_back(
            labelled(designs::pad(designs::witt_4_23_7(), pattern({{1, 1}, {0, 1}}), n), "4-(23,7,1)"));
    } else if (e.name == "d26-witt") {
        p.families.push_back(labelled(designs::pad(designs::witt_4_23_7(), pattern({{0, 4}}), n), "4-(23,7,1)"));
    } else if (e.name == "d26-wittc") {
        p.families.push_back(labelled(
            designs::pad(designs::complement_design(designs::witt_4_23_7()), pattern({{0, 4}}), n),
            "complement of 4-(23,7,1)"));
    } else if (e.name == "d31-3221") {
        p.families.push_back(labelled(
            designs::pad(designs::derived_design(designs::witt_4_23_7(), 0), pattern({{0, 10}}), n),
            "3-(22,6,1)"));
        p.extra = from_pattern(pattern({{0, 10}, {1, 22}}));
    } else if (e.name == "d31-wittc") {
        p.families.push_back(labelled(designs::pad(designs::complement_design(designs::witt_4_23_7()),
                                                   pattern({{1, 6}, {0, 3}}), n),
                                      "complement of 4-(23,7,1)"));
        p.extra = from_pattern(pattern({{1, 6}, {0, 26}}));
    } else if (e.name == "d48-wittc") {
        p.families.push_back(labelled(designs::pad(designs::complement_design(designs::witt_4_23_7()),
                                                   pattern({{1, 24}, {0, 2}}), n),
                                      "complement of 4-(23,7,1)"));
    } else {
        const int s = e.s;
        p.families.push_back(labelled(designs::pad(designs::affine_planes(s),
                                                   pattern({{1, s - 1}, {0, s * s - 2 * s}}), n),
                                      "AG(3," + std::to_string(s) + ") planes"));
        p.extra = from_pattern(pattern({{0, s * s - s - 1}, {1, s * s * s}}));
    }
    return p;
}

}  // namespace

searcher::Instance build_instance(const std::string& name, const BuildOptions& options) {
    const Entry& e = entry(name);
    const auto params = paramspace::param_tuple(e.s, e.branch, e.d, e.k);
    Parts p = parts_for(e);
    std::vector<CandidateVector> extras;
    if (p.extra && options.include_extras) extras.push_back(*p.extra);
    std::string label = e.name;
    if (p.extra && !options.include_extras) label += " (extra withheld)";
    return searcher::make_instance(label, params, true, std::move(p.families), std::move(extras), options.m_rule);
}

std::optional<CandidateVector> extra_vector(const std::string& name) { return parts_for(entry(name)).extra; }

}  // namespace twodist::catalog
