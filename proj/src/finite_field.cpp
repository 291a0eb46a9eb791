#include "twodist/finite_field.hpp"

#include <string>

#include "twodist/errors.hpp"

namespace twodist::designs {

namespace {

std::vector<int> digits(int x, int p, int len) {
    std::vector<int> d(len);
    for (int i = 0; i < len; ++i) {
        d[i] = x % p;
        x /= p;
    }
    return d;
}

int from_digits(const std::vector<int>& d, int p) {
    int x = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) x = x * p + d[i];
    return x;
}

// Product of polynomials a, b (length e each) over GF(p), reduced mod the monic
// polynomial `mod` of degree e.
std::vector<int> mulmod(const std::vector<int>& a, const std::vector<int>& b,
                        const std::vector<int>& mod, int p) {
    const int e = static_cast<int>(mod.size()) - 1;
    std::vector<int> prod(2 * e, 0);
    for (int i = 0; i < e; ++i) {
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (int deg = 2 * e - 1; deg >= e; --deg) {
        const int c = prod[deg];
        if (c == 0) continue;
        for (int i = 0; i <= e; ++i) {
            prod[deg - e + i] = ((prod[deg - e + i] - c * mod[i]) % p + p) % p;
        }
    }
    prod.resize(e);
    return prod;
}

// A monic polynomial of degree e is irreducible iff it has no monic factor of
// degree 1..e/2; checked by trial division.
bool irreducible(const std::vector<int>& f, int p) {
    const int e = static_cast<int>(f.size()) - 1;
    for (int deg = 1; deg <= e / 2; ++deg) {
        int count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            std::vector<int> g = digits(code, p, deg);
            g.push_back(1);
            std::vector<int> r = f;
            for (int top = e; top >= deg; --top) {
                const int c = r[top];
                if (c == 0) continue;
                for (int i = 0; i <= deg; ++i) {
                    r[top - deg + i] = ((r[top - deg + i] - c * g[i]) % p + p) % p;
                }
            }
            bool zero = true;
            for (int i = 0; i < deg; ++i) zero = zero && r[i] == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

std::pair<int, int> prime_power(int q) {
    if (q < 2) return {0, 0};
    int p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    int e = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    return rest == 1 ? std::pair{p, e} : std::pair{0, 0};
}

FiniteField::FiniteField(int q) {
    auto [p, e] = prime_power(q);
    if (p == 0) {
        throw InvalidArgument(std::to_string(q) + " is not a prime power");
    }
    if (q > 1024) {
        throw InvalidArgument("field order " + std::to_string(q) + " exceeds table limit 1024");
    }
    q_ = q;
    p_ = p;
    e_ = e;

    modulus_.assign(e + 1, 0);
    modulus_[e] = 1;
    if (e == 1) {
        modulus_[0] = 0;  // x; arithmetic is plain mod p
    } else {
        for (int code = 0; code < q; ++code) {
            std::vector<int> f = digits(code, p, e);
            f.push_back(1);
            if (irreducible(f, p)) {
                modulus_ = f;
                break;
            }
        }
    }

    add_.resize(static_cast<std::size_t>(q) * q);
    mul_.resize(static_cast<std::size_t>(q) * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        const auto da = digits(a, p, e);
        std::vector<int> dn(e);
        for (int i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
        neg_[a] = from_digits(dn, p);
        for (int b = 0; b < q; ++b) {
            const auto db = digits(b, p, e);
            std::vector<int> ds(e);
            for (int i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
            add_[a * q + b] = from_digits(ds, p);
            mul_[a * q + b] = e == 1 ? (a * b) % p : from_digits(mulmod(da, db, modulus_, p), p);
        }
    }
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (mul(a, b) == 1) {
                inv_[a] = b;
                break;
            }
        }
    }
}

int FiniteField::inv(int a) const {
    if (a == 0) throw InvalidArgument("zero has no inverse");
    return inv_[a];
}

int FiniteField::multiplicative_order(int a) const {
    if (a == 0) throw InvalidArgument("zero has no multiplicative order");
    int x = a;
    int ord = 1;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

}  // namespace twodist::designs
