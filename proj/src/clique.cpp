#include "twodist/clique.hpp"

#include <algorithm>
#include <bit>

#include "twodist/combinatorics.hpp"
#include "twodist/errors.hpp"

namespace twodist::searcher {

namespace {

using Row = std::vector<std::uint64_t>;

struct Graph {
    std::size_t n = 0;
    std::size_t words = 0;
    std::vector<Row> adj;

    bool has(const Row& r, std::size_t v) const { return (r[v >> 6] >> (v & 63)) & 1U; }
};

std::size_t count_bits(const Row& r) {
    std::size_t c = 0;
    for (auto w : r) c += std::popcount(w);
    return c;
}

bool any_bit(const Row& r) {
    return std::any_of(r.begin(), r.end(), [](std::uint64_t w) { return w != 0; });
}

// Greedy colouring bound: returns vertices in colour order with their colour
// numbers (ascending), as in Tomita-style MCQ.
void colour(const Graph& g, const Row& p, std::vector<std::size_t>& order, std::vector<int>& bounds) {
    order.clear();
    bounds.clear();
    Row uncoloured = p;
    int c = 0;
    while (any_bit(uncoloured)) {
        ++c;
        Row q = uncoloured;
        while (any_bit(q)) {
            std::size_t w = 0;
            while (q[w] == 0) ++w;
            const std::size_t v = w * 64 + std::countr_zero(q[w]);
            q[w] &= q[w] - 1;
            uncoloured[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            for (std::size_t i = 0; i < g.words; ++i) q[i] &= ~g.adj[v][i];
            order.push_back(v);
            bounds.push_back(c);
        }
    }
}

struct MaxClique {
    const Graph& g;
    std::size_t best = 0;
    std::uint64_t nodes = 0;

    void expand(Row p, std::size_t depth) {
        ++nodes;
        std::vector<std::size_t> order;
        std::vector<int> bounds;
        colour(g, p, order, bounds);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (depth + bounds[i] <= best) return;
            const std::size_t v = order[i];
            Row next(g.words);
            for (std::size_t w = 0; w < g.words; ++w) next[w] = p[w] & g.adj[v][w];
            if (any_bit(next)) {
                expand(next, depth + 1);
            } else if (depth + 1 > best) {
                best = depth + 1;
            }
            p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        }
    }
};

// Whether p contains a clique of size `need`.
bool has_clique(const Graph& g, const Row& p, std::size_t need, std::uint64_t& nodes) {
    if (need == 0) return true;
    if (count_bits(p) < need) return false;
    struct Search {
        const Graph& g;
        std::size_t need;
        std::uint64_t& nodes;
        bool run(Row p, std::size_t depth) {
            ++nodes;
            std::vector<std::size_t> order;
            std::vector<int> bounds;
            colour(g, p, order, bounds);
            for (std::size_t i = order.size(); i-- > 0;) {
                if (depth + bounds[i] < need) return false;
                const std::size_t v = order[i];
                if (depth + 1 == need) return true;
                Row next(g.words);
                for (std::size_t w = 0; w < g.words; ++w) next[w] = p[w] & g.adj[v][w];
                if (run(next, depth + 1)) return true;
                p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            }
            return false;
        }
    } search{g, need, nodes};
    return search.run(p, 0);
}

}  // namespace

CliqueResult max_subset_search(int n, int k, const std::set<int>& allowed_l, std::size_t vertex_cap) {
    if (n < 1 || n > 64 || k < 1 || k > n) throw InvalidArgument("max_subset_search needs 1 <= k <= n <= 64");
    const std::uint64_t count = binomial(n, k);
    if (count > vertex_cap) throw ResourceCapExceeded("clique search vertex count", count, vertex_cap);

    // Vertices in lexicographic order of their sorted index lists.
    std::vector<BitMask> verts;
    std::uint64_t z = colex_unrank(0, n, k);
    for (std::uint64_t i = 0; i < count; ++i) {
        verts.push_back(BitMask::from_word(z));
        if (i + 1 < count) z = next_same_weight(z);
    }
    std::sort(verts.begin(), verts.end(), LexLess{});

    Graph g;
    g.n = verts.size();
    g.words = (g.n + 63) / 64;
    g.adj.assign(g.n, Row(g.words, 0));
    for (std::size_t i = 0; i < g.n; ++i) {
        for (std::size_t j = i + 1; j < g.n; ++j) {
            if (allowed_l.count(k - overlap(verts[i], verts[j]))) {
                g.adj[i][j >> 6] |= std::uint64_t{1} << (j & 63);
                g.adj[j][i >> 6] |= std::uint64_t{1} << (i & 63);
            }
        }
    }
    Row all(g.words, 0);
    for (std::size_t v = 0; v < g.n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);

    MaxClique mc{g};
    mc.expand(all, 0);
    CliqueResult res;
    res.vertices = g.n;
    res.nodes = mc.nodes;

    // Lexicographically least clique of the maximum size.
    Row pool = all;
    for (std::size_t need = mc.best; need > 0; --need) {
        for (std::size_t v = 0; v < g.n; ++v) {
            if (!g.has(pool, v)) continue;
            Row next(g.words);
            for (std::size_t w = 0; w < g.words; ++w) next[w] = pool[w] & g.adj[v][w];
            for (std::size_t u = 0; u <= v; ++u) next[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
            if (has_clique(g, next, need - 1, res.nodes)) {
                res.members.push_back(CandidateVector::make(n, verts[v]));
                pool = next;
                break;
            }
        }
    }
    return res;
}

OneDistanceCheck one_distance_bound_check(int n, int k, int t, const std::vector<CandidateVector>& family) {
    const Rational share(k, n);
    OneDistanceCheck out;
    out.inner_product = Rational(t) - Rational(static_cast<long>(k) * k, n);
    for (const auto& x : family) {
        if (x.ambient != n || x.weight() != k) throw InvalidArgument("family member has the wrong ambient or weight");
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (overlap(family[i].base, family[j].base) != t) {
                throw InvalidArgument("family is not equidistant with overlap " + std::to_string(t));
            }
            Rational ip(0);
            for (int c = 0; c < n; ++c) {
                const Rational a = Rational(family[i].base.test(c) ? 1 : 0) - share;
                const Rational b = Rational(family[j].base.test(c) ? 1 : 0) - share;
                ip = ip + a * b;
            }
            if (ip != out.inner_product) throw Error("centred inner product differs from t - k^2/n");
        }
    }
    out.bound_applies = static_cast<long>(n) * t >= static_cast<long>(k) * k;
    out.within_bound = !out.bound_applies || static_cast<long>(family.size()) <= n - 1;
    return out;
}

}  // namespace twodist::searcher
