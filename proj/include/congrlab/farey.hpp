#pragma once

// Farey fractions of order Q, m-fold products of rational sets, reduction
// into F_p, the J_d sets of coprime pairs with prescribed ratio class, and
// the uniqueness / product-growth checks built on them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "congrlab/arith.hpp"
#include "congrlab/bound_check.hpp"
#include "congrlab/errors.hpp"
#include "congrlab/msets.hpp"

namespace congrlab {

struct Rational {
    u64 num = 1;
    u64 den = 1;
    auto operator<=>(const Rational&) const = default;
};

inline Rational make_rational(u64 num, u64 den) {
    if (num == 0 || den == 0) throw InvalidSpec("Rational: components must be positive");
    u64 g = std::gcd(num, den);
    return {num / g, den / g};
}

// reduced product, guarded against exceeding 2^62 components
inline Rational rational_mul(const Rational& a, const Rational& b) {
    constexpr u64 kMax = u64(1) << 62;
    u64 g1 = std::gcd(a.num, b.den);
    u64 g2 = std::gcd(a.den, b.num);
    u64 n1 = a.num / g1, d2 = b.den / g1;
    u64 d1 = a.den / g2, n2 = b.num / g2;
    if (n1 > kMax / n2 || d1 > kMax / d2)
        throw OverflowError("rational_mul: component exceeds 2^62");
    return {n1 * n2, d1 * d2};
}

class RationalSet {
public:
    RationalSet() = default;
    explicit RationalSet(std::vector<Rational> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        for (const Rational& r : elems_) order_bound_ = std::max({order_bound_, r.num, r.den});
    }

    std::size_t size() const { return elems_.size(); }
    const std::vector<Rational>& elements() const { return elems_; }
    u64 order_bound() const { return order_bound_; }
    bool contains(const Rational& r) const {
        return std::binary_search(elems_.begin(), elems_.end(), r);
    }
    bool operator==(const RationalSet& other) const { return elems_ == other.elems_; }

private:
    std::vector<Rational> elems_;
    u64 order_bound_ = 0;
};

// All reduced r/s with 1 <= r,s <= Q; |F_Q| = 2*sum_{k<=Q} phi(k) - 1.
inline RationalSet farey_set(u64 Q) {
    if (Q < 1) throw InvalidSpec("farey_set: need Q >= 1");
    std::vector<Rational> elems;
    for (u64 s = 1; s <= Q; ++s)
        for (u64 r = 1; r <= Q; ++r)
            if (std::gcd(r, s) == 1) elems.push_back({r, s});
    return RationalSet(std::move(elems));
}

inline RationalSet rational_mfold(const RationalSet& A, unsigned m) {
    if (m < 1) throw InvalidSpec("rational_mfold: need m >= 1");
    RationalSet result = A;
    for (unsigned step = 1; step < m; ++step) {
        std::vector<Rational> prods;
        prods.reserve(result.size() * A.size());
        for (const Rational& x : result.elements())
            for (const Rational& y : A.elements()) prods.push_back(rational_mul(x, y));
        result = RationalSet(std::move(prods));
    }
    return result;
}

// {num * den^{-1} mod p}; collisions may shrink the set.
inline ResidueSet map_to_fp(const RationalSet& A, const PrimeContext& ctx) {
    const u64 p = ctx.p();
    std::vector<u64> vals;
    vals.reserve(A.size());
    for (const Rational& r : A.elements()) {
        if (r.den % p == 0) throw DenominatorDivisibleByP("map_to_fp: denominator divisible by p");
        vals.push_back(mulmod(r.num % p, mod_inverse(ctx, r.den % p), p));
    }
    return ResidueSet(p, vals);
}

// J_d = { x/y : x,y <= floor(H/d), gcd(x,y)=1, x/y mod p in U }.
inline RationalSet build_Jd_set(u64 H, u64 d, const ResidueSet& U) {
    if (d < 1 || d > H) throw InvalidSpec("build_Jd_set: need 1 <= d <= H");
    const u64 p = U.modulus();
    const u64 B = H / d;
    std::vector<Rational> elems;
    for (u64 y = 1; y <= B; ++y) {
        if (y % p == 0) continue;
        const u64 yinv = powmod(y % p, p - 2, p);
        for (u64 x = 1; x <= B; ++x) {
            if (std::gcd(x, y) != 1) continue;
            if (U.contains(mulmod(x % p, yinv, p))) elems.push_back({x, y});
        }
    }
    return RationalSet(std::move(elems));
}

// Lemma on ratio uniqueness: with XY < p, every lambda has at most one
// coprime representation x/y with x <= X, y <= Y.
inline BoundCheck lemma3_uniqueness_check(u64 X, u64 Y, const PrimeContext& ctx) {
    const u64 p = ctx.p();
    if (X < 1 || Y < 1) throw InvalidSpec("lemma3_uniqueness_check: need X,Y >= 1");
    if (u128(X) * Y >= p) throw RangeTooLarge("lemma3_uniqueness_check: need X*Y < p");
    std::vector<std::uint32_t> mult(p, 0);
    u64 max_mult = 0;
    for (u64 y = 1; y <= Y; ++y) {
        const u64 yinv = powmod(y, p - 2, p);
        for (u64 x = 1; x <= X; ++x) {
            if (std::gcd(x, y) != 1) continue;
            u64 lam = mulmod(x, yinv, p);
            max_mult = std::max<u64>(max_mult, ++mult[lam]);
        }
    }
    BoundCheck c = make_check_verdict("lemma3", p, double(max_mult), 1.0, 0.0, 1.0,
                                      max_mult <= 1 ? Verdict::pass : Verdict::fail);
    c.with("X", X).with("Y", Y);
    return c;
}

// Farey m-fold growth: |A^(m)| > exp(-Cm * log Q / sqrt(log log Q)) * |A|^m.
// Lower bound, so the bound goes in lhs and the measured size in rhs; the
// minimal constant that would pass is recorded in params.
inline BoundCheck growth_report(const RationalSet& A, unsigned m, double Cm) {
    const u64 Q = A.order_bound();
    if (Q < 16) throw OrderTooSmall("growth_report: need order bound Q >= 16");
    if (m < 1) throw InvalidSpec("growth_report: need m >= 1");
    if (!(Cm > 0)) throw InvalidSpec("growth_report: need Cm > 0");
    const double t = std::log(double(Q)) / std::sqrt(std::log(std::log(double(Q))));
    const double measured = double(rational_mfold(A, m).size());
    const double bound = std::exp(-Cm * t) * std::pow(double(A.size()), double(m));
    const double min_c = std::max(0.0, (m * std::log(double(A.size())) - std::log(measured)) / t);
    BoundCheck c = make_check("lemma1_growth", 0, bound, measured, 0.0, 1.0);
    c.with("Q", Q).with("m", (u64)m).with("Asize", (u64)A.size()).with("Cm", Cm).with("min_Cm", min_c);
    return c;
}

} // namespace congrlab
