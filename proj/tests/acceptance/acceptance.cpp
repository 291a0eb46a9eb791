// One PASS/FAIL line per acceptance criterion, with indented detail lines.
// Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "twodist/catalog.hpp"
#include "twodist/clique.hpp"
#include "twodist/designs.hpp"
#include "twodist/errors.hpp"
#include "twodist/exactgeom.hpp"
#include "twodist/paramspace.hpp"
#include "twodist/searcher.hpp"

using namespace twodist;
using paramspace::Branch;
using searcher::Verdict;

namespace {

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<bool(std::ostream&)> body;
};

std::string set_text(const std::set<Rational>& s) {
    std::string t = "{";
    for (const auto& x : s) t += (t.size() > 1 ? "," : "") + x.to_string();
    return t + "}";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

catalog::BuildOptions no_extras() {
    catalog::BuildOptions o;
    o.include_extras = false;
    return o;
}

// ---------------------------------------------------------------------------

bool parameter_lists(std::ostream& log) {
    using V = std::vector<std::pair<int, int>>;
    auto pairs = [](int s, Branch b) {
        V out;
        for (const auto& p : paramspace::admissible_params(s, b)) out.emplace_back(p.d, p.k);
        return out;
    };
    const V below2{{7, 6}, {8, 5}, {8, 8}};
    const V above2{{7, 3}, {8, 2}, {8, 5}};
    const V above3{{23, 10}, {24, 8}, {24, 13}, {26, 7}, {26, 16}, {31, 6}, {31, 22}, {48, 5}, {48, 40}};
    bool ok = true;
    for (auto [s, b, want] : {std::tuple{2, Branch::Below, below2}, std::tuple{2, Branch::Above, above2},
                              std::tuple{3, Branch::Above, above3}}) {
        const bool match = pairs(s, b) == want;
        log << "s=" << s << " " << paramspace::to_string(b) << ": " << pairs(s, b).size() << " tuples"
            << (match ? "" : " MISMATCH") << "\n";
        ok = ok && match;
    }
    return ok;
}

const std::vector<std::pair<std::string, std::size_t>> kTableSizes{
    {"d7-J83", 29},        {"d8-hadamard", 24},   {"d8-2intersecting", 30}, {"d8-J92", 45},
    {"d23-21712", 144},    {"d24-witt", 278},     {"d26-witt", 280},        {"d26-wittc", 280},
    {"d31-3221", 110},     {"d31-wittc", 286},    {"d48-wittc", 302},       {"resolvable-s2", 24},
    {"resolvable-s3", 72}, {"resolvable-s4", 160}, {"resolvable-s5", 300}};

bool table_sizes(std::ostream& log) {
    bool ok = true;
    for (const auto& [name, want] : kTableSizes) {
        const auto inst = catalog::build_instance(name);
        const bool match = inst.size() == want;
        if (name.rfind("resolvable-s", 0) == 0) {
            const int s = name.back() - '0';
            const bool dim = inst.params.d == (s - 1) * (s + 1) * (s + 1) - 1;
            const bool formula = want == static_cast<std::size_t>(2 * s * s * (s + 1));
            ok = ok && dim && formula;
        }
        log << name << ": " << inst.size() << (match ? "" : " expected " + std::to_string(want)) << "\n";
        ok = ok && match;
    }
    return ok;
}

bool spectra(std::ostream& log) {
    bool ok = true;
    for (const auto& [name, size] : kTableSizes) {
        const auto inst = catalog::build_instance(name);
        const auto& p = inst.params;
        Rational alpha;
        if (name.rfind("resolvable-s", 0) == 0) {
            const int s = name.back() - '0';
            alpha = Rational(2 * (s - 1), s);
        } else if (p.s == 2) {
            alpha = p.branch == Branch::Below ? Rational(1) : Rational(4);
        } else {
            alpha = Rational(3);
        }
        const auto rep = searcher::verify_instance(inst);
        const std::set<Rational> want{Rational(2), alpha};
        bool good = rep.valid && rep.spectrum == want;
        if (p.d <= 31) good = good && rep.exact_geometry && rep.exact_spectrum == want;
        log << name << ": " << set_text(rep.spectrum) << " via "
            << (rep.exact_geometry ? "exact geometry" : "combinatorial calculus") << (good ? "" : " WRONG") << "\n";
        ok = ok && good;
    }
    return ok;
}

bool maximality(std::ostream& log) {
    bool ok = true;
    const std::vector<std::string> maximal{"d7-J83",   "d8-hadamard", "d8-2intersecting", "d8-J92",   "d23-21712",
                                           "d24-witt", "d26-witt",    "d26-wittc",        "d31-3221", "d31-wittc"};
    for (const auto& name : maximal) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto rep = searcher::maximality_check(catalog::build_instance(name));
        const double secs = seconds_since(t0);
        const bool good = rep.verdict == Verdict::Maximal && secs < 600;
        log << name << ": " << searcher::to_string(rep.verdict) << ", " << rep.scanned << " scanned, " << std::fixed
            << std::setprecision(2) << secs << " s" << (good ? "" : "  <-- expected MAXIMAL") << "\n";
        ok = ok && good;
    }

    // d = 48 with the decomposed scan.
    {
        const auto inst = catalog::build_instance("d48-wittc");
        const auto t0 = std::chrono::steady_clock::now();
        const auto rep = searcher::maximality_check(inst);
        const double secs = seconds_since(t0);
        const bool good = rep.verdict == Verdict::Maximal && secs < 1800;
        log << "d48-wittc: " << searcher::to_string(rep.verdict) << ", " << rep.scanned << " scanned, " << secs
            << " s" << (good ? "" : "  <-- expected MAXIMAL") << "\n";
        if (rep.counterexample) {
            const auto& z = *rep.counterexample;
            log << "  least extension " << z.base.to_string() << " (weight " << z.weight() << "), "
                << rep.extension_count << " extensions in total\n";
            const auto& p = inst.params;
            const auto zp = exactgeom::embed(z, p.d, z.weight(), p.beta);
            std::set<Rational> dists;
            for (const auto& e : exactgeom::simplex_points(p.d)) dists.insert(exactgeom::squared_distance(zp, e));
            for (const auto& m : inst.members()) {
                dists.insert(exactgeom::squared_distance(zp, exactgeom::embed(m, p.d, m.weight(), p.beta)));
            }
            log << "  exact squared distances from it to all 302 points: " << set_text(dists)
                << (searcher::geometric_addable(inst, z) ? " (addable)" : " (not addable)") << "\n";
            std::set<int> overlaps;
            for (const auto& m : inst.members()) overlaps.insert(overlap(m.base, z.base));
            log << "  its overlap with every block vector is";
            for (int v : overlaps) log << " " << v;
            log << "\n";
        }
        catalog::BuildOptions over;
        over.m_rule = paramspace::MSetRule::SquareS;
        const auto alt = searcher::maximality_check(catalog::build_instance("d48-wittc", over));
        log << "  diagnostic: with the cross-weight overlap set forced to {6,9} the verdict is "
            << searcher::to_string(alt.verdict) << "\n";
        ok = ok && good;
    }

    // Withheld x0.
    for (const std::string name : {"resolvable-s2", "resolvable-s3", "d31-wittc", "d31-3221"}) {
        const auto inst = catalog::build_instance(name, no_extras());
        const auto x0 = *catalog::extra_vector(name);
        searcher::SearchOptions opt;
        opt.max_listed = 100000;
        const auto rep = searcher::maximality_check(inst, opt);
        const bool listed = searcher::reports_extension(inst, rep, x0);
        const bool geo = searcher::geometric_addable(inst, x0);
        const bool good = rep.verdict == Verdict::Extendable && listed && geo;
        log << name << " without x0: " << searcher::to_string(rep.verdict) << ", x0 " << x0.base.to_string()
            << (listed ? " reported" : " NOT reported") << (geo ? ", exactly addable" : ", not addable");
        if (rep.counterexample) {
            log << "; least extension " << rep.counterexample->base.to_string()
                << (rep.counterexample->base == x0.base ? " (= x0)" : "") << ", " << rep.extension_count
                << " extensions";
        }
        log << "\n";
        ok = ok && good;
    }
    for (const std::string name : {"resolvable-s4", "resolvable-s5"}) {
        try {
            searcher::maximality_check(catalog::build_instance(name, no_extras()));
        } catch (const ResourceCapExceeded& e) {
            log << name << ": exhaustive scan out of range (" << e.what() << ")\n";
        }
    }
    return ok;
}

bool design_suite(std::ostream& log) {
    using namespace designs;
    bool ok = true;
    auto report = [&](const std::string& what, bool good) {
        log << what << (good ? "" : "  <-- FAILED") << "\n";
        ok = ok && good;
    };
    const Design w = witt_4_23_7();
    report("S(4,7,23): " + std::to_string(w.blocks.size()) + " blocks, lambda_4=" +
               std::to_string(verify_t_design(w, 4).lambda),
           w.blocks.size() == 253 && verify_t_design(w, 4).uniform && verify_t_design(w, 4).lambda == 1 &&
               intersection_profile(w) == std::set<int>{1, 3});
    const Design dd = derived_design(w, 0);
    report("derived 3-(22,6,1): " + std::to_string(dd.blocks.size()) + " blocks",
           dd.blocks.size() == 77 && verify_t_design(dd, 3).uniform && verify_t_design(dd, 3).lambda == 1 &&
               intersection_profile(dd) == std::set<int>{0, 2});
    const Design r = residual_2_21_7_12();
    report("residual 2-(21,7,12): " + std::to_string(r.blocks.size()) + " blocks",
           r.blocks.size() == 120 && verify_t_design(r, 2).uniform && verify_t_design(r, 2).lambda == 12 &&
               intersection_profile(r) == std::set<int>{1, 3});
    for (int s = 2; s <= 5; ++s) {
        const Design ag = affine_planes(s);
        const auto t2 = verify_t_design(ag, 2);
        bool good = ag.v == s * s * s && ag.block_size() == s * s && t2.uniform && t2.lambda == s + 1 &&
                    intersection_profile(ag) == std::set<int>{0, s};
        const auto classes = parallel_classes(ag);
        good = good && static_cast<int>(classes.size()) == s * s + s + 1;
        for (const auto& cls : classes) {
            BitMask cover;
            int total = 0;
            for (int b : cls) {
                cover |= ag.blocks[b];
                total += ag.blocks[b].count();
            }
            good = good && static_cast<int>(cls.size()) == s && total == ag.v && cover == BitMask::first(ag.v);
        }
        report("AG(3," + std::to_string(s) + "): 2-(" + std::to_string(ag.v) + "," + std::to_string(s * s) + "," +
                   std::to_string(t2.lambda) + "), " + std::to_string(classes.size()) + " parallel classes",
               good);
    }
    return ok;
}

bool classification(std::ostream& log) {
    bool ok = true;
    auto run = [&](int n, int k, std::set<int> allowed, std::size_t want) {
        const auto r = searcher::max_subset_search(n, k, allowed);
        const bool good = r.members.size() == want;
        log << "J(" << n << "," << k << ") l in {";
        for (auto it = allowed.begin(); it != allowed.end(); ++it) log << (it == allowed.begin() ? "" : ",") << *it;
        log << "}: " << r.members.size() << (good ? "" : " expected " + std::to_string(want)) << "\n";
        ok = ok && good;
        return r;
    };
    const auto j82 = run(8, 2, {2, 4}, 4);
    const auto j91 = run(9, 1, {2, 4}, 1);
    const auto j94 = run(9, 4, {2, 4}, 14);
    std::vector<BitMask> a, b;
    for (const auto& v : j94.members) a.push_back(v.base);
    for (const auto& v : designs::hadamard8_family()) b.push_back(v.base);
    const bool had = designs::equivalent_up_to_permutation(a, b, 9);
    log << "  J(9,4) maximum family equals the Hadamard family up to permutation: " << (had ? "yes" : "no") << "\n";
    ok = ok && had;
    const auto j83 = run(8, 3, {1, 2}, 21);
    const auto j92 = run(9, 2, {1, 2}, 36);
    const auto j94b = run(9, 4, {1, 2}, 21);
    const std::size_t sizes[] = {8 + j82.members.size(), 9 + j94.members.size() + j91.members.size(),
                                 8 + j83.members.size(), 9 + std::max(j92.members.size(), j94b.members.size())};
    const bool thm = sizes[0] == 12 && sizes[1] == 24 && sizes[2] == 29 && sizes[3] == 45;
    log << "largest sets: " << sizes[0] << ", " << sizes[1] << ", " << sizes[2] << ", " << sizes[3] << "\n";
    return ok && thm;
}

bool obstruction(std::ostream& log) {
    bool ok = true;
    for (int s = 2; s <= 3; ++s) {
        for (int b = 0; b < s; ++b) {
            const auto q = searcher::ObstructionQuery::make(s, b + s, b);
            const auto r = searcher::obstruction_search(s, q);
            const bool accounted = 2 * r.internal_nodes == r.nodes - 1 + r.pruned;
            const bool good = !r.witness && r.exhausted && accounted;
            log << "s=" << s << " (a,b)=(" << q.a << "," << q.b << "): "
                << (r.witness ? "witness " + r.witness->to_string() : std::string("no witness")) << ", " << r.nodes
                << " nodes, " << r.pruned << " pruned" << (accounted ? "" : ", node count inconsistent") << "\n";
            ok = ok && good;
        }
    }
    return ok;
}

BitMask random_subset(std::mt19937_64& rng, int n, int k) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    BitMask m;
    for (int i = 0; i < k; ++i) m.set(idx[i]);
    return m;
}

bool properties(std::ostream& log) {
    std::mt19937_64 rng(99);
    // Distance identity on random same-weight pairs.
    int pairs = 0, pair_fail = 0;
    for (int s = 2; s <= 4; ++s) {
        for (Branch b : {Branch::Below, Branch::Above}) {
            for (const auto& p : paramspace::admissible_params(s, b)) {
                if (p.d > 80) continue;
                for (int t = 0; t < 25; ++t) {
                    const int n = p.d + 1;
                    const auto x = CandidateVector::make(n, random_subset(rng, n, p.k));
                    const auto y = CandidateVector::make(n, random_subset(rng, n, p.k));
                    const Rational d2 = exactgeom::squared_distance(exactgeom::embed(x, p.d, p.k, p.beta),
                                                                    exactgeom::embed(y, p.d, p.k, p.beta));
                    pair_fail += d2 == Rational(2) * p.beta * p.beta * Rational(searcher::l_value(x, y)) ? 0 : 1;
                    ++pairs;
                }
            }
        }
    }
    log << "2 beta^2 l identity: " << pairs - pair_fail << "/" << pairs << " random pairs\n";

    int tuples = 0, inv_fail = 0;
    for (int s = 2; s <= 12; ++s) {
        for (Branch b : {Branch::Below, Branch::Above}) {
            for (const auto& p : paramspace::admissible_params(s, b)) {
                const int kp = paramspace::paired_k(s, b, p.k);
                inv_fail += (paramspace::paired_k(s, b, kp) == p.k &&
                             paramspace::dimension_for(s, b, kp) == paramspace::dimension_for(s, b, p.k))
                                ? 0
                                : 1;
                ++tuples;
            }
        }
    }
    log << "k pairing involution with equal dimension: " << tuples - inv_fail << "/" << tuples << " tuples\n";

    int families = 0, fam_fail = 0;
    while (families < 300) {
        const int n = 4 + static_cast<int>(rng() % 40);
        const int k = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, n / 2 - 1)));
        const int t = static_cast<int>(rng() % static_cast<unsigned>(k));
        const int petals = (n - t) / (k - t);
        if (petals < 2) continue;
        const int size = 2 + static_cast<int>(rng() % static_cast<unsigned>(petals - 1));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<CandidateVector> fam;
        for (int i = 0; i < size; ++i) {
            BitMask m;
            for (int c = 0; c < t; ++c) m.set(perm[c]);
            for (int c = 0; c < k - t; ++c) m.set(perm[t + i * (k - t) + c]);
            fam.push_back(CandidateVector::make(n, m));
        }
        try {
            const auto r = searcher::one_distance_bound_check(n, k, t, fam);
            fam_fail += (r.inner_product == Rational(t) - Rational(static_cast<long>(k) * k, n) && r.within_bound) ? 0 : 1;
        } catch (const Error&) {
            ++fam_fail;
        }
        ++families;
    }
    log << "centred inner product t - k^2/n: " << families - fam_fail << "/" << families << " random families\n";

    int compared = 0, disagree = 0;
    for (const auto& e : catalog::entries()) {
        if (e.d > 26) continue;
        for (bool extras : {true, false}) {
            if (!extras && !e.has_extra) continue;
            catalog::BuildOptions opt;
            opt.include_extras = extras;
            const auto inst = catalog::build_instance(e.name, opt);
            searcher::SearchOptions brute;
            brute.method = searcher::Method::Brute;
            const auto a = searcher::maximality_check(inst, brute);
            const auto b = searcher::maximality_check(inst);
            disagree += (a.verdict == b.verdict && a.counterexample == b.counterexample &&
                         a.extension_count == b.extension_count)
                            ? 0
                            : 1;
            ++compared;
        }
    }
    log << "brute force vs decomposed maximality (d <= 26): " << compared - disagree << "/" << compared
        << " instances agree\n";
    return pair_fail == 0 && inv_fail == 0 && fam_fail == 0 && disagree == 0;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "parameter enumeration matches the published lists", 1, parameter_lists},
        {2, "table instance sizes", 60, table_sizes},
        {3, "exact two-distance spectra", 600, spectra},
        {4, "maximality certification", 600 * 10 + 1800, maximality},
        {5, "design verification suite", 120, design_suite},
        {6, "s = 2 classification searches", 300, classification},
        {7, "obstruction search for s = 2, 3", 600, obstruction},
        {8, "property suites", 600, properties},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail << "exception: " << e.what() << "\n";
        }
        const double secs = seconds_since(t0);
        if (secs > c.limit_seconds) {
            detail << "time limit exceeded\n";
            ok = false;
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << " (" << std::fixed
                  << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.limit_seconds
                  << " s)\n";
        std::istringstream lines(detail.str());
        for (std::string line; std::getline(lines, line);) std::cout << "        " << line << "\n";
        failures += ok ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion failed") << "\n";
    return failures == 0 ? 0 : 1;
}
