#include "twodist/paramspace.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "twodist/errors.hpp"

namespace twodist::paramspace {

namespace {

void require_s(int s) {
    if (s < 2) {
        throw InvalidArgument("LRS ratio s must be at least 2, got " + std::to_string(s));
    }
}

// Largest r with r*r <= n, for n >= 0.
long isqrt(long n) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

long pole(int s, Branch branch) {
    return branch == Branch::Below ? long{s} * s : long{s - 1} * (s - 1);
}

long numerator_const(int s) { return long{s} * s * (s - 1) * (s - 1); }

long offset(int s, Branch branch) {
    return branch == Branch::Below ? long{s} * s - 2L * s - 1 : long{s} * s - 2;
}

}  // namespace

std::string to_string(Branch b) { return b == Branch::Below ? "below" : "above"; }

Branch parse_branch(const std::string& text) {
    std::string lower;
    for (char ch : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == "below") return Branch::Below;
    if (lower == "above") return Branch::Above;
    throw InvalidArgument("branch must be 'below' or 'above', got '" + text + "'");
}

std::string BetaOption::to_string() const {
    if (rational) return value.to_string();
    return std::string("irrational(k") + (sign > 0 ? "+" : "-") + "sqrt(" +
           std::to_string(discriminant) + "))";
}

std::vector<BetaOption> beta_options(int d, int k) {
    if (d < 2 || k < 1 || k > d + 1) {
        throw InvalidArgument("beta_options needs d >= 2 and 1 <= k <= d+1 (d=" +
                              std::to_string(d) + ", k=" + std::to_string(k) + ")");
    }
    if (k == 1) {
        return {BetaOption{true, Rational(1) + Rational(2, d), 0, 0}};
    }
    if (k == d + 1) {
        return {BetaOption{true, Rational(-(d + 2), 2L * (d + 1)), 0, 0}};
    }
    const long disc = long{k} * (d + 1) * (d + 2 - k);
    const long root = isqrt(disc);
    const long den = long{k} * (d + 1 - k);
    std::vector<BetaOption> out;
    for (int sign : {+1, -1}) {
        if (root * root == disc) {
            out.push_back(BetaOption{true, Rational(k + sign * root, den), disc, sign});
        } else {
            out.push_back(BetaOption{false, Rational(0), disc, sign});
        }
    }
    return out;
}

std::vector<Rational> rational_betas(int d, int k) {
    std::vector<Rational> out;
    for (const auto& opt : beta_options(d, k)) {
        if (opt.rational) out.push_back(opt.value);
    }
    return out;
}

Rational alpha_from_s(int s, Branch branch) {
    require_s(s);
    return branch == Branch::Below ? Rational(2L * (s - 1), s) : Rational(2L * s, s - 1);
}

Rational beta_from_s(int s, Branch branch) {
    require_s(s);
    return branch == Branch::Below ? Rational(-1, s) : Rational(1, s - 1);
}

std::optional<int> dimension_for(int s, Branch branch, int k) {
    require_s(s);
    const long denom = k - pole(s, branch);
    if (denom == 0 || numerator_const(s) % denom != 0) return std::nullopt;
    return static_cast<int>(k + offset(s, branch) + numerator_const(s) / denom);
}

std::vector<ParamTuple> admissible_params(int s, Branch branch) {
    require_s(s);
    const long num = numerator_const(s);
    std::vector<ParamTuple> out;
    // Scan divisors of s^2 (s-1)^2 of both signs; k = pole + divisor.
    for (long div = 1; div <= num; ++div) {
        if (num % div != 0) continue;
        for (long signed_div : {div, -div}) {
            const long k = pole(s, branch) + signed_div;
            if (k < 2) continue;
            const long d = k + offset(s, branch) + num / signed_div;
            if (d < 2 || k > d) continue;
            if (branch == Branch::Above && d + 2 < k + s) continue;
            ParamTuple t;
            t.d = static_cast<int>(d);
            t.k = static_cast<int>(k);
            t.k_prime = paired_k(s, branch, t.k);
            t.s = s;
            t.branch = branch;
            t.beta = beta_from_s(s, branch);
            t.alpha = alpha_from_s(s, branch);
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end(), [](const ParamTuple& a, const ParamTuple& b) {
        return a.d != b.d ? a.d < b.d : a.k < b.k;
    });
    return out;
}

ParamTuple param_tuple(int s, Branch branch, int d, int k) {
    for (const auto& t : admissible_params(s, branch)) {
        if (t.d == d && t.k == k) return t;
    }
    throw NotAdmissible("(d, k) = (" + std::to_string(d) + ", " + std::to_string(k) +
                        ") is not admissible for s = " + std::to_string(s) + ", branch " +
                        to_string(branch));
}

int paired_k(int s, Branch branch, int k) {
    require_s(s);
    const long denom = k - pole(s, branch);
    if (denom == 0 || numerator_const(s) % denom != 0) {
        throw NotAdmissible("k = " + std::to_string(k) + " is not admissible for s = " +
                            std::to_string(s) + ", branch " + to_string(branch));
    }
    return static_cast<int>(numerator_const(s) / denom + pole(s, branch));
}

std::vector<int> allowed_l(int s, Branch branch) {
    require_s(s);
    if (branch == Branch::Below) return {s * (s - 1), s * s};
    return {(s - 1) * (s - 1), s * (s - 1)};
}

std::string to_string(MSetRule rule) {
    return rule == MSetRule::SquareS ? "s^2,s(s-1)" : "(s-1)^2,s(s-1)";
}

std::vector<int> allowed_m(int s, MSetRule rule) {
    require_s(s);
    if (rule == MSetRule::SquareS) return {s * (s - 1), s * s};
    return {(s - 1) * (s - 1), s * (s - 1)};
}

MSetRule pairing_rule(Branch branch) {
    return branch == Branch::Below ? MSetRule::SquareS : MSetRule::SquareSMinusOne;
}

std::vector<int> lrs_candidates(int d) {
    if (d < 2) {
        throw InvalidArgument("lrs_candidates needs d >= 2, got " + std::to_string(d));
    }
    // s <= 1/2 + sqrt(d/2)  <=>  (2s - 1)^2 <= 2d  for s >= 1.
    std::vector<int> out;
    for (int s = 2; (2L * s - 1) * (2L * s - 1) <= 2L * d; ++s) out.push_back(s);
    return out;
}

}  // namespace twodist::paramspace
