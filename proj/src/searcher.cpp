#include "twodist/searcher.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <map>
#include <random>
#include <thread>

#include "twodist/combinatorics.hpp"
#include "twodist/errors.hpp"
#include "twodist/exactgeom.hpp"

namespace twodist::searcher {

using paramspace::Branch;
using paramspace::MSetRule;
using paramspace::ParamTuple;

// ---------------------------------------------------------------------------
// Cross-weight overlap arbitration

MSetResolution resolve_allowed_m(const ParamTuple& params) {
    MSetResolution res;
    res.rule = paramspace::pairing_rule(params.branch);
    res.values = paramspace::allowed_m(params.s, res.rule);
    if (params.k == params.k_prime) return res;

    const int n = params.d + 1;
    const int k = params.k;
    const int kp = params.k_prime;
    const auto simplex = exactgeom::simplex_points(params.d);
    const Rational two(2);
    for (int m = std::max(0, k + kp - n); m <= std::min(k, kp); ++m) {
        res.feasible.push_back(m);
        // x = {0..k-1}, y shares its first m positions with x.
        BitMask xb = BitMask::first(k);
        BitMask yb = BitMask::first(m);
        for (int i = 0; i < kp - m; ++i) yb.set(k + i);
        const auto x = exactgeom::embed(CandidateVector::make(n, xb), params.d, k, params.beta);
        const auto y = exactgeom::embed(CandidateVector::make(n, yb), params.d, kp, params.beta);
        const Rational d2 = exactgeom::squared_distance(x, y);
        if (d2 == two || d2 == params.alpha) res.geometric.push_back(m);
    }
    auto restricted = [&](MSetRule rule) {
        std::vector<int> out;
        for (int v : paramspace::allowed_m(params.s, rule)) {
            if (std::find(res.feasible.begin(), res.feasible.end(), v) != res.feasible.end()) out.push_back(v);
        }
        return out;
    };
    for (MSetRule rule : {res.rule, res.rule == MSetRule::SquareS ? MSetRule::SquareSMinusOne
                                                                  : MSetRule::SquareS}) {
        if (restricted(rule) == res.geometric) {
            res.rule = rule;
            res.values = paramspace::allowed_m(params.s, rule);
            return res;
        }
    }
    throw Error("no candidate overlap set matches exact geometry for d=" + std::to_string(params.d) +
                ", k=" + std::to_string(k) + ", k'=" + std::to_string(kp));
}

// ---------------------------------------------------------------------------
// Instance

std::size_t Instance::size() const {
    std::size_t total = include_simplex ? static_cast<std::size_t>(ambient()) : 0;
    for (const auto& f : families) total += f.members.size();
    return total + extras.size();
}

std::vector<CandidateVector> Instance::members() const {
    std::vector<CandidateVector> out;
    for (const auto& f : families) out.insert(out.end(), f.members.begin(), f.members.end());
    out.insert(out.end(), extras.begin(), extras.end());
    return out;
}

Instance make_instance(std::string name, const ParamTuple& params, bool include_simplex,
                       std::vector<designs::PaddedFamily> families, std::vector<CandidateVector> extras,
                       std::optional<MSetRule> m_rule) {
    Instance inst;
    inst.name = std::move(name);
    inst.params = params;
    inst.include_simplex = include_simplex;
    inst.families = std::move(families);
    inst.extras = std::move(extras);
    inst.allowed_l = paramspace::allowed_l(params.s, params.branch);
    if (m_rule) {
        inst.m_rule = *m_rule;
    } else {
        inst.m_rule = resolve_allowed_m(params).rule;
    }
    inst.allowed_m = paramspace::allowed_m(params.s, inst.m_rule);
    for (const auto& f : inst.families) {
        if (f.ambient != inst.ambient()) throw ShapeError("family ambient differs from d+1");
    }
    for (const auto& e : inst.extras) {
        if (e.ambient != inst.ambient()) throw ShapeError("extra vector ambient differs from d+1");
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Pairwise conditions

int l_value(const CandidateVector& x, const CandidateVector& y) {
    if (x.ambient != y.ambient) throw ShapeError("l_value on different ambient sizes");
    const int k = x.weight();
    if (k != y.weight()) throw ShapeError("l_value is undefined across weights");
    return k - overlap(x.base, y.base);
}

int m_value(const CandidateVector& x, const CandidateVector& y) {
    if (x.ambient != y.ambient) throw ShapeError("m_value on different ambient sizes");
    if (x.weight() == y.weight()) throw ShapeError("m_value needs different weights; use l_value");
    return overlap(x.base, y.base);
}

namespace {

bool contains(const std::vector<int>& values, int v) {
    return std::find(values.begin(), values.end(), v) != values.end();
}

}  // namespace

std::optional<Conflict> addability_conflict(const Instance& inst, const CandidateVector& z) {
    if (z.ambient != inst.ambient()) return Conflict{"ambient", std::nullopt, z.ambient};
    const int w = z.weight();
    if (w != inst.params.k && w != inst.params.k_prime) return Conflict{"weight", std::nullopt, w};
    const auto members = inst.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& y = members[i];
        const int ov = overlap(z.base, y.base);
        if (y.weight() == w) {
            if (ov == w) return Conflict{"duplicate", i, 0};
            if (!contains(inst.allowed_l, w - ov)) return Conflict{"l", i, w - ov};
        } else if (!contains(inst.allowed_m, ov)) {
            return Conflict{"m", i, ov};
        }
    }
    return std::nullopt;
}

bool check_addable(const Instance& inst, const CandidateVector& z) {
    return !addability_conflict(inst, z).has_value();
}

Rational combinatorial_squared_distance(const ParamTuple& params, int weight_x, int weight_y, int overlap_count) {
    const int n = params.d + 1;
    const Rational beta2 = params.beta * params.beta;
    const long gap = weight_x - weight_y;
    return beta2 * (Rational(weight_x + weight_y - 2L * overlap_count) - Rational(gap * gap, n));
}

// ---------------------------------------------------------------------------
// Verification

namespace {

std::string member_name(std::size_t i) { return "member " + std::to_string(i + 1); }
std::string vertex_name(int j) { return "e" + std::to_string(j + 1); }

// |x - e_j|^2 for x of weight w, j inside (base) or outside the base set.
Rational simplex_distance(const ParamTuple& params, int w, bool inside) {
    const int n = params.d + 1;
    const Rational c = exactgeom::base_value(params.d, w, params.beta);
    const Rational high = c + params.beta;
    const Rational norm = Rational(w) * c * c + Rational(n - w) * high * high;
    return norm - Rational(2) * (inside ? c : high) + Rational(1);
}

}  // namespace

Report verify_instance(const Instance& inst, const VerifyOptions& options) {
    Report rep;
    rep.points = inst.size();
    const ParamTuple& p = inst.params;
    const int n = inst.ambient();
    const Rational two(2);
    const auto members = inst.members();
    auto in_pair = [&](const Rational& r) { return r == two || r == p.alpha; };

    auto fail = [&](Violation v) {
        if (!rep.violation) rep.violation = std::move(v);
    };

    for (std::size_t i = 0; i < members.size(); ++i) {
        const int w = members[i].weight();
        if (members[i].ambient != n) {
            fail(Violation{member_name(i), "", "ambient", members[i].ambient, std::nullopt});
        } else if (w != p.k && w != p.k_prime) {
            fail(Violation{member_name(i), "", "weight", w, std::nullopt});
        }
    }
    if (rep.violation) return rep;

    if (inst.include_simplex) {
        if (n >= 2) rep.spectrum.insert(two);
        for (std::size_t i = 0; i < members.size(); ++i) {
            const int w = members[i].weight();
            for (bool inside : {true, false}) {
                if (inside ? w == 0 : w == n) continue;
                Rational d2 = simplex_distance(p, w, inside);
                if (!in_pair(d2)) {
                    const int j = inside ? members[i].base.indices().front()
                                         : members[i].base.complement(n).indices().front();
                    fail(Violation{vertex_name(j), member_name(i), "distance", 0, d2});
                }
                rep.spectrum.insert(std::move(d2));
            }
        }
    }
    std::map<std::tuple<int, int, int>, Rational> cache;
    for (std::size_t i = 0; i < members.size() && !rep.violation; ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const int wi = members[i].weight();
            const int wj = members[j].weight();
            const int ov = overlap(members[i].base, members[j].base);
            if (wi == wj) {
                if (ov == wi) {
                    fail(Violation{member_name(i), member_name(j), "duplicate", 0, Rational(0)});
                    break;
                }
                if (!contains(inst.allowed_l, wi - ov)) {
                    fail(Violation{member_name(i), member_name(j), "l", wi - ov, std::nullopt});
                    break;
                }
            } else if (!contains(inst.allowed_m, ov)) {
                fail(Violation{member_name(i), member_name(j), "m", ov, std::nullopt});
                break;
            }
            const auto key = std::make_tuple(std::min(wi, wj), std::max(wi, wj), ov);
            auto it = cache.find(key);
            if (it == cache.end()) {
                it = cache.emplace(key, combinatorial_squared_distance(p, wi, wj, ov)).first;
            }
            if (!in_pair(it->second)) {
                fail(Violation{member_name(i), member_name(j), "distance", ov, it->second});
                break;
            }
            rep.spectrum.insert(it->second);
        }
    }

    if (!rep.violation && p.d <= options.exact_geometry_max_d) {
        rep.exact_geometry = true;
        std::vector<exactgeom::Point> pts;
        std::vector<std::string> names;
        if (inst.include_simplex) {
            auto simplex = exactgeom::simplex_points(p.d);
            for (int j = 0; j < n; ++j) {
                pts.push_back(std::move(simplex[j]));
                names.push_back(vertex_name(j));
            }
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            const auto& m = members[i];
            pts.push_back(exactgeom::embed(m, p.d, m.weight(), p.beta));
            if (exactgeom::coordinate_sum(pts.back()) != Rational(1)) {
                fail(Violation{member_name(i), "", "hyperplane", 0, std::nullopt});
            }
            names.push_back(member_name(i));
        }
        for (std::size_t i = 0; i < pts.size() && !rep.violation; ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                Rational d2 = exactgeom::squared_distance(pts[i], pts[j]);
                if (d2.sign() == 0) {
                    fail(Violation{names[i], names[j], "duplicate", 0, d2});
                    break;
                }
                if (!in_pair(d2)) {
                    fail(Violation{names[i], names[j], "distance", 0, d2});
                    break;
                }
                rep.exact_spectrum.insert(std::move(d2));
            }
        }
        if (!rep.violation && rep.exact_spectrum != rep.spectrum) {
            rep.warnings.push_back("exact and combinatorial spectra differ");
            fail(Violation{"", "", "spectrum-mismatch", 0, std::nullopt});
        }
    }

    rep.valid = !rep.violation.has_value();
    if (rep.valid && rep.spectrum.size() == 1) {
        rep.warnings.push_back("1-distance set: only squared distance " + rep.spectrum.begin()->to_string());
    }
    if (rep.valid && rep.points < 2) rep.warnings.push_back("fewer than two points");
    return rep;
}

bool geometric_addable(const Instance& inst, const CandidateVector& z) {
    const ParamTuple& p = inst.params;
    if (z.ambient != inst.ambient()) return false;
    const auto point = exactgeom::embed(z, p.d, z.weight(), p.beta);
    const Rational two(2);
    auto ok = [&](const Rational& d2) { return d2 == two || d2 == p.alpha; };
    if (inst.include_simplex) {
        for (const auto& e : exactgeom::simplex_points(p.d)) {
            if (!ok(exactgeom::squared_distance(point, e))) return false;
        }
    }
    for (const auto& m : inst.members()) {
        const auto q = exactgeom::embed(m, p.d, m.weight(), p.beta);
        if (!ok(exactgeom::squared_distance(point, q))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Maximality

std::string to_string(Method m) { return m == Method::Brute ? "BRUTE" : "DECOMPOSED"; }
std::string to_string(Verdict v) { return v == Verdict::Maximal ? "MAXIMAL" : "EXTENDABLE"; }

Method parse_method(const std::string& text) {
    std::string lower;
    for (char ch : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == "brute") return Method::Brute;
    if (lower == "decomposed") return Method::Decomposed;
    throw InvalidArgument("method must be 'brute' or 'decomposed', got '" + text + "'");
}

std::vector<CoordinateClass> coordinate_classes(const Instance& inst) {
    const auto members = inst.members();
    std::map<std::vector<bool>, std::vector<int>> by_column;
    for (int i = 0; i < inst.ambient(); ++i) {
        std::vector<bool> column(members.size());
        for (std::size_t j = 0; j < members.size(); ++j) column[j] = members[j].base.test(i);
        by_column[column].push_back(i);
    }
    std::vector<CoordinateClass> out;
    for (auto& [column, positions] : by_column) out.push_back(CoordinateClass{positions});
    std::sort(out.begin(), out.end(), [](const CoordinateClass& a, const CoordinateClass& b) {
        return a.positions.front() < b.positions.front();
    });
    return out;
}

CandidateVector orbit_representative(const Instance& inst, const CandidateVector& v) {
    BitMask rep;
    for (const auto& cls : coordinate_classes(inst)) {
        int count = 0;
        for (int pos : cls.positions) count += v.base.test(pos) ? 1 : 0;
        for (int i = 0; i < count; ++i) rep.set(cls.positions[i]);
    }
    return CandidateVector::make(v.ambient, rep);
}

bool reports_extension(const Instance& inst, const MaximalityReport& report, const CandidateVector& v) {
    const CandidateVector target = report.method == Method::Decomposed ? orbit_representative(inst, v) : v;
    return std::find(report.extensions.begin(), report.extensions.end(), target) != report.extensions.end();
}

namespace {

template <class Fn>
void run_chunks(std::size_t count, int threads, Fn&& fn) {
    threads = std::max(1, std::min<int>(threads, static_cast<int>(count)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
    };
    if (threads == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// Members as 64-bit words with, per candidate weight, the bit set of allowed
// overlap counts.
struct MemberTable {
    std::vector<std::uint64_t> masks;
    std::vector<int> weights;
};

MemberTable member_table(const Instance& inst) {
    MemberTable t;
    for (const auto& m : inst.members()) {
        t.masks.push_back(m.base.word(0));
        t.weights.push_back(m.weight());
    }
    return t;
}

std::uint64_t allowed_overlaps(const Instance& inst, int candidate_weight, int member_weight) {
    std::uint64_t bits = 0;
    if (candidate_weight == member_weight) {
        for (int l : inst.allowed_l) {
            const int ov = candidate_weight - l;
            if (ov >= 0 && ov < 64) bits |= std::uint64_t{1} << ov;
        }
    } else {
        for (int m : inst.allowed_m) {
            if (m >= 0 && m < 64) bits |= std::uint64_t{1} << m;
        }
    }
    return bits;
}

// Members sorted so that those rejecting most sampled candidates come first.
struct ScanPlan {
    std::vector<std::uint64_t> masks;
    std::vector<std::uint64_t> allow;
};

ScanPlan discriminating_plan(std::vector<std::uint64_t> masks, std::vector<std::uint64_t> allow,
                             int universe, int weight, std::uint64_t seed) {
    const std::size_t m = masks.size();
    std::vector<int> rejects(m, 0);
    if (weight > 0 && weight <= universe) {
        std::mt19937_64 rng(seed);
        std::vector<int> perm(universe);
        for (int sample = 0; sample < 128; ++sample) {
            for (int i = 0; i < universe; ++i) perm[i] = i;
            std::uint64_t z = 0;
            for (int i = 0; i < weight; ++i) {
                std::uniform_int_distribution<int> pick(i, universe - 1);
                std::swap(perm[i], perm[pick(rng)]);
                z |= std::uint64_t{1} << perm[i];
            }
            for (std::size_t j = 0; j < m; ++j) {
                if (!((allow[j] >> std::popcount(z & masks[j])) & 1U)) ++rejects[j];
            }
        }
    }
    std::vector<std::size_t> order(m);
    for (std::size_t j = 0; j < m; ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rejects[a] > rejects[b]; });
    ScanPlan plan;
    for (std::size_t j : order) {
        plan.masks.push_back(masks[j]);
        plan.allow.push_back(allow[j]);
    }
    return plan;
}

inline bool passes(std::uint64_t z, const ScanPlan& plan) {
    const std::size_t m = plan.masks.size();
    const std::uint64_t* masks = plan.masks.data();
    const std::uint64_t* allow = plan.allow.data();
    for (std::size_t j = 0; j < m; ++j) {
        if (!((allow[j] >> std::popcount(z & masks[j])) & 1U)) return false;
    }
    return true;
}

struct WorkItem {
    std::size_t plan = 0;       // index into plans
    std::uint64_t first = 0;    // colex rank of first candidate
    std::uint64_t count = 0;
    int universe = 0;
    int weight = 0;
};

struct ChunkResult {
    std::uint64_t scanned = 0;
    std::vector<std::uint64_t> hits;  // candidate words in the scan universe
};

constexpr std::uint64_t kChunk = std::uint64_t{1} << 21;

void append_items(std::vector<WorkItem>& items, std::size_t plan, int universe, int weight) {
    const std::uint64_t total = binomial(universe, weight);
    for (std::uint64_t first = 0; first < total; first += kChunk) {
        items.push_back(WorkItem{plan, first, std::min(kChunk, total - first), universe, weight});
    }
}

std::vector<ChunkResult> scan(const std::vector<WorkItem>& items, const std::vector<ScanPlan>& plans,
                              int threads) {
    std::vector<ChunkResult> results(items.size());
    run_chunks(items.size(), threads, [&](std::size_t idx) {
        const WorkItem& item = items[idx];
        const ScanPlan& plan = plans[item.plan];
        ChunkResult& out = results[idx];
        if (item.weight == 0) {
            if (passes(0, plan)) out.hits.push_back(0);
            out.scanned = 1;
            return;
        }
        std::uint64_t z = colex_unrank(item.first, item.universe, item.weight);
        for (std::uint64_t i = 0; i < item.count; ++i) {
            if (passes(z, plan)) out.hits.push_back(z);
            if (i + 1 < item.count) z = next_same_weight(z);
        }
        out.scanned = item.count;
    });
    return results;
}

void finish_report(MaximalityReport& rep, std::vector<CandidateVector> found, std::size_t max_listed) {
    std::sort(found.begin(), found.end(),
              [](const CandidateVector& a, const CandidateVector& b) { return lex_less(a.base, b.base); });
    if (!found.empty()) {
        rep.verdict = Verdict::Extendable;
        rep.counterexample = found.front();
    }
    if (found.size() > max_listed) found.resize(max_listed);
    rep.extensions = std::move(found);
}

void require_scannable(const Instance& inst) {
    if (inst.ambient() > 64) {
        throw ResourceCapExceeded("exhaustive scan supports ambient size <= 64, got " +
                                      std::to_string(inst.ambient()),
                                  binomial(inst.ambient(), inst.params.k), 0);
    }
}

std::vector<int> candidate_weights(const Instance& inst) {
    std::vector<int> w{inst.params.k};
    if (inst.params.k_prime != inst.params.k) w.push_back(inst.params.k_prime);
    std::sort(w.begin(), w.end());
    return w;
}

MaximalityReport brute_force(const Instance& inst, const SearchOptions& options) {
    require_scannable(inst);
    const int n = inst.ambient();
    const auto weights = candidate_weights(inst);
    std::uint64_t total = 0;
    for (int w : weights) {
        const std::uint64_t c = binomial(n, w);
        total = (total > UINT64_MAX - c) ? UINT64_MAX : total + c;
    }
    if (total > options.cap) throw ResourceCapExceeded("brute-force candidate space", total, options.cap);

    const MemberTable table = member_table(inst);
    std::vector<ScanPlan> plans;
    std::vector<WorkItem> items;
    for (int w : weights) {
        std::vector<std::uint64_t> allow;
        for (int mw : table.weights) allow.push_back(allowed_overlaps(inst, w, mw));
        plans.push_back(discriminating_plan(table.masks, allow, n, w, 0x5eed0000ULL + w));
        append_items(items, plans.size() - 1, n, w);
    }
    const auto results = scan(items, plans, options.threads);

    MaximalityReport rep;
    rep.method = Method::Brute;
    std::vector<CandidateVector> found;
    for (const auto& r : results) {
        rep.scanned += r.scanned;
        for (auto z : r.hits) found.push_back(CandidateVector::make(n, BitMask::from_word(z)));
    }
    rep.extension_count = found.size();
    finish_report(rep, std::move(found), options.max_listed);
    return rep;
}

MaximalityReport decomposed(const Instance& inst, const SearchOptions& options) {
    require_scannable(inst);
    const int n = inst.ambient();
    const auto all_classes = coordinate_classes(inst);
    std::vector<CoordinateClass> groups;
    std::vector<int> free_positions;
    for (const auto& c : all_classes) {
        if (c.positions.size() >= 2) {
            groups.push_back(c);
        } else {
            free_positions.push_back(c.positions.front());
        }
    }
    std::sort(free_positions.begin(), free_positions.end());
    const int f = static_cast<int>(free_positions.size());
    const MemberTable table = member_table(inst);
    std::vector<std::uint64_t> free_masks;
    for (auto m : table.masks) {
        std::uint64_t packed = 0;
        for (int i = 0; i < f; ++i) {
            if ((m >> free_positions[i]) & 1U) packed |= std::uint64_t{1} << i;
        }
        free_masks.push_back(packed);
    }

    MaximalityReport rep;
    rep.method = Method::Decomposed;
    rep.classes = groups;

    struct CaseInfo {
        std::uint64_t prefix = 0;  // representative bits on grouped coordinates
        std::uint64_t orbit = 1;
    };
    std::vector<CaseInfo> infos;
    std::vector<ScanPlan> plans;
    std::vector<WorkItem> items;
    std::vector<std::size_t> item_case;
    std::uint64_t total = 0;

    for (int w : candidate_weights(inst)) {
        std::vector<int> counts(groups.size(), 0);
        while (true) {
            int used = 0;
            for (int c : counts) used += c;
            const int suffix_weight = w - used;
            if (suffix_weight >= 0 && suffix_weight <= f) {
                SearchCase sc;
                sc.weight = w;
                sc.class_counts = counts;
                sc.suffix_weight = suffix_weight;
                CaseInfo info;
                for (std::size_t g = 0; g < groups.size(); ++g) {
                    for (int i = 0; i < counts[g]; ++i) info.prefix |= std::uint64_t{1} << groups[g].positions[i];
                    info.orbit *= binomial(static_cast<int>(groups[g].positions.size()), counts[g]);
                }
                std::vector<std::uint64_t> allow;
                for (std::size_t j = 0; j < table.masks.size(); ++j) {
                    const int shift = std::popcount(info.prefix & table.masks[j]);
                    const std::uint64_t shifted = allowed_overlaps(inst, w, table.weights[j]) >> shift;
                    const int in_free = std::popcount(free_masks[j]);
                    const int lo = std::max(0, suffix_weight - (f - in_free));
                    const int hi = std::min(suffix_weight, in_free);
                    const std::uint64_t range = hi < lo ? 0
                        : ((hi - lo + 1 >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (hi - lo + 1)) - 1)) << lo);
                    if ((shifted & range) == 0) sc.pruned = true;
                    allow.push_back(shifted);
                }
                if (!sc.pruned) {
                    const std::uint64_t c = binomial(f, suffix_weight);
                    total = (total > UINT64_MAX - c) ? UINT64_MAX : total + c;
                    plans.push_back(discriminating_plan(free_masks, allow, f, suffix_weight,
                                                        0xdec0000ULL + rep.cases.size()));
                    const std::size_t before = items.size();
                    append_items(items, plans.size() - 1, f, suffix_weight);
                    for (std::size_t i = before; i < items.size(); ++i) item_case.push_back(rep.cases.size());
                }
                rep.cases.push_back(sc);
                infos.push_back(info);
            }
            std::size_t g = 0;
            while (g < groups.size() && counts[g] == static_cast<int>(groups[g].positions.size())) {
                counts[g] = 0;
                ++g;
            }
            if (g == groups.size()) break;
            ++counts[g];
        }
    }
    if (total > options.cap) throw ResourceCapExceeded("decomposed candidate space", total, options.cap);

    const auto results = scan(items, plans, options.threads);
    std::vector<CandidateVector> found;
    for (std::size_t i = 0; i < results.size(); ++i) {
        SearchCase& sc = rep.cases[item_case[i]];
        const CaseInfo& info = infos[item_case[i]];
        sc.scanned += results[i].scanned;
        rep.scanned += results[i].scanned;
        for (auto z : results[i].hits) {
            ++sc.hits;
            rep.extension_count += info.orbit;
            const std::uint64_t full = info.prefix | scatter(z, free_positions);
            found.push_back(CandidateVector::make(n, BitMask::from_word(full)));
        }
    }
    finish_report(rep, std::move(found), options.max_listed);
    return rep;
}

}  // namespace

MaximalityReport maximality_check(const Instance& inst, const SearchOptions& options) {
    return options.method == Method::Brute ? brute_force(inst, options) : decomposed(inst, options);
}

// ---------------------------------------------------------------------------
// Design-level scans

namespace {

template <class Accept>
std::optional<BitMask> scan_design_subsets(const designs::Design& design, int m, Accept accept) {
    if (design.v > 64) throw InvalidArgument("design scans support at most 64 points");
    if (m < 0 || m > design.v) throw InvalidArgument("subset weight outside 0..v");
    std::vector<std::uint64_t> blocks;
    for (const auto& b : design.blocks) blocks.push_back(b.word(0));
    const std::uint64_t total = binomial(design.v, m);
    if (m == 0) {
        return accept(0, blocks) ? std::optional<BitMask>(BitMask()) : std::nullopt;
    }
    std::uint64_t z = colex_unrank(0, design.v, m);
    for (std::uint64_t i = 0; i < total; ++i) {
        if (accept(z, blocks)) return BitMask::from_word(z);
        if (i + 1 < total) z = next_same_weight(z);
    }
    return std::nullopt;
}

}  // namespace

std::optional<BitMask> profile_scan(const designs::Design& design, int m, const std::set<int>& allowed) {
    std::uint64_t allow = 0;
    for (int a : allowed) {
        if (a >= 0 && a < 64) allow |= std::uint64_t{1} << a;
    }
    return scan_design_subsets(design, m, [&](std::uint64_t z, const std::vector<std::uint64_t>& blocks) {
        for (auto b : blocks) {
            if (!((allow >> std::popcount(z & b)) & 1U)) return false;
        }
        return true;
    });
}

std::optional<BitMask> few_valued_profile(const designs::Design& design, int m, int max_values) {
    return scan_design_subsets(design, m, [&](std::uint64_t z, const std::vector<std::uint64_t>& blocks) {
        std::uint64_t seen = 0;
        for (auto b : blocks) {
            seen |= std::uint64_t{1} << std::popcount(z & b);
            if (std::popcount(seen) > max_values) return false;
        }
        return true;
    });
}

ObstructionQuery ObstructionQuery::make(int s, int a, int b) {
    if (s < 2 || a - b != s || b < 0 || b >= s) {
        throw InvalidArgument("obstruction query needs a - b = s and 0 <= b < s (s=" + std::to_string(s) +
                              ", a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
    }
    return ObstructionQuery{s, a, b};
}

namespace {

struct SubsetDfs {
    const std::vector<std::vector<int>>& point_blocks;
    std::vector<int> chosen;     // per block
    std::vector<int> remaining;  // per block
    std::vector<int> allowed;
    int v = 0;
    BitMask current;
    int current_size = 0;
    ObstructionResult result;

    bool feasible(int block) const {
        for (int a : allowed) {
            if (chosen[block] <= a && a <= chosen[block] + remaining[block]) return true;
        }
        return false;
    }

    // Returns true once a witness has been recorded.
    bool visit(int point) {
        ++result.nodes;
        if (point == v) {
            if (current_size > 0) {
                result.witness = current;
                return true;
            }
            return false;
        }
        ++result.internal_nodes;
        for (int include : {1, 0}) {
            bool ok = true;
            for (int b : point_blocks[point]) {
                --remaining[b];
                chosen[b] += include;
            }
            for (int b : point_blocks[point]) {
                if (!feasible(b)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                if (include) {
                    current.set(point);
                    ++current_size;
                }
                const bool found = visit(point + 1);
                if (include) {
                    current.reset(point);
                    --current_size;
                }
                if (found) {
                    for (int b : point_blocks[point]) {
                        ++remaining[b];
                        chosen[b] -= include;
                    }
                    return true;
                }
            } else {
                ++result.pruned;
            }
            for (int b : point_blocks[point]) {
                ++remaining[b];
                chosen[b] -= include;
            }
        }
        return false;
    }
};

}  // namespace

ObstructionResult subset_search(const designs::Design& design, const std::set<int>& allowed) {
    std::vector<std::vector<int>> point_blocks(design.v);
    std::vector<int> remaining(design.blocks.size());
    for (std::size_t b = 0; b < design.blocks.size(); ++b) {
        for (int p : design.blocks[b].indices()) point_blocks[p].push_back(static_cast<int>(b));
        remaining[b] = design.blocks[b].count();
    }
    SubsetDfs dfs{point_blocks, std::vector<int>(design.blocks.size(), 0), remaining,
                  std::vector<int>(allowed.begin(), allowed.end()), design.v, BitMask(), 0, {}};
    bool root_ok = true;
    for (std::size_t b = 0; b < design.blocks.size(); ++b) root_ok = root_ok && dfs.feasible(static_cast<int>(b));
    if (root_ok) {
        dfs.visit(0);
    } else {
        dfs.result.nodes = 1;
    }
    dfs.result.exhausted = !dfs.result.witness.has_value();
    return dfs.result;
}

ObstructionResult obstruction_search(int s, const ObstructionQuery& query, int s_cap) {
    if (s != query.s) throw InvalidArgument("query was built for a different s");
    if (s > s_cap) {
        throw ResourceCapExceeded("obstruction search for s = " + std::to_string(s),
                                  static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(s_cap));
    }
    return subset_search(designs::affine_planes(s), {query.a, query.b});
}

}  // namespace twodist::searcher
