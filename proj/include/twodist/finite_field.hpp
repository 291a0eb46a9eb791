#pragma once

#include <cstdint>
#include <vector>

namespace twodist::designs {

/// GF(p^e) with explicit addition and multiplication tables.
///
/// Elements are the integers 0..q-1, read as base-p digit vectors of
/// polynomials over GF(p) (digit i = coefficient of x^i). The modulus is the
/// smallest monic irreducible polynomial of degree e under the same encoding,
/// so the representation is canonical for each q.
class FiniteField {
public:
    /// Throws InvalidArgument unless q = p^e >= 2 and q <= 1024.
    explicit FiniteField(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }
    /// Coefficients of the modulus, constant term first, length degree()+1.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    /// Throws InvalidArgument for a == 0.
    int inv(int a) const;
    /// Multiplicative order of a non-zero element.
    int multiplicative_order(int a) const;

private:
    int q_ = 0;
    int p_ = 0;
    int e_ = 0;
    std::vector<int> modulus_;
    std::vector<int> add_;
    std::vector<int> mul_;
    std::vector<int> neg_;
    std::vector<int> inv_;
};

/// Returns (p, e) with q = p^e, or (0, 0) when q is not a prime power.
std::pair<int, int> prime_power(int q);

inline FiniteField gf(int q) { return FiniteField(q); }

}  // namespace twodist::designs
