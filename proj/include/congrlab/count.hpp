#pragma once

// Exact solution counters for the congruence families under study:
//   eq1:  x = y r (mod p),            1 <= x,y <= H, r in U
//   eq2:  x r = x1 r1 (mod p),        1 <= x,x1 <= H, r,r1 in U
//   T:    x^d = lambda (mod p),       L+1 <= x <= L+N  (direct and coset routes)
//   xfx:  x^{f(x)} = 1 (mod p),       1 <= x <= p, f squarefree
// plus product-coverage with exceptional sets and factored-product counters
// q x r = q1 x1 r1 over prime ranges / intervals / fixed sets.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "congrlab/arith.hpp"
#include "congrlab/errors.hpp"
#include "congrlab/msets.hpp"

namespace congrlab {

enum class CountMethod { direct, coset, factored };

inline const char* to_string(CountMethod m) {
    switch (m) {
        case CountMethod::direct: return "direct";
        case CountMethod::coset: return "coset";
        default: return "factored";
    }
}

struct CountReport {
    long long total = 0;
    std::map<u64, long long> by_gcd;            // d -> J_d where applicable
    std::map<std::string, long long> split;     // prime equality pattern T1..T4
    CountMethod method = CountMethod::direct;
    std::vector<std::pair<std::string, long long>> params;
};

// ---------------------------------------------------------------------------
// Eq. (1): J = #{(x,y,r): 1<=x,y<=H, r in U, x = y r}, split by gcd(x,y).
// Enumerates (r,y) and tests x = r*y mod p <= H: O(|U| H).
// ---------------------------------------------------------------------------
inline CountReport count_eq1(u64 H, const ResidueSet& U) {
    const u64 p = U.modulus();
    if (H < 1 || H >= p) throw InvalidRange("count_eq1: need 1 <= H < p");
    if (U.contains(0)) throw ZeroInSet("count_eq1: U must avoid 0");
    CountReport rep;
    rep.method = CountMethod::direct;
    rep.params = {{"p", (long long)p}, {"H", (long long)H}, {"Usize", (long long)U.size()}};
    for (u64 r : U.elements()) {
        for (u64 y = 1; y <= H; ++y) {
            u64 x = mulmod(r, y, p);
            if (x >= 1 && x <= H) {
                ++rep.total;
                ++rep.by_gcd[std::gcd(x, y)];
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Eq. (2): sum over mu of I(mu)^2 where I(mu) = #{(x,r): x<=H, r in U, xr=mu}.
// ---------------------------------------------------------------------------
inline CountReport count_eq2(u64 H, const ResidueSet& U) {
    const u64 p = U.modulus();
    if (H < 1 || H >= p) throw InvalidRange("count_eq2: need 1 <= H < p");
    if (U.contains(0)) throw ZeroInSet("count_eq2: U must avoid 0");
    std::vector<std::uint32_t> fiber(p, 0);
    for (u64 r : U.elements())
        for (u64 x = 1; x <= H; ++x) ++fiber[mulmod(x, r, p)];
    CountReport rep;
    rep.method = CountMethod::direct;
    rep.params = {{"p", (long long)p}, {"H", (long long)H}, {"Usize", (long long)U.size()}};
    for (u64 mu = 0; mu < p; ++mu) rep.total += (long long)fiber[mu] * fiber[mu];
    return rep;
}

// ---------------------------------------------------------------------------
// Eq. (3): T_p(d, lambda, L, N) = #{x in N: L+1 <= x <= L+N, x^d = lambda}.
// direct: scan the window. coset: solve for one root x0 through discrete
// logarithms, form x0 * G_{gcd(d,p-1)} and intersect with the window.
// Both methods agree exactly for N <= p (each residue class meets the
// window at most once).
// ---------------------------------------------------------------------------
inline CountReport count_T(const PrimeContext& ctx, u64 d, u64 lambda, u64 L, u64 N,
                           CountMethod method = CountMethod::direct) {
    const u64 p = ctx.p();
    lambda %= p;
    if (lambda == 0) throw ZeroLambda("count_T: lambda must be nonzero");
    if (d < 1) throw InvalidRange("count_T: need d >= 1");
    if (N < 1 || N > p) throw InvalidRange("count_T: need 1 <= N <= p");
    CountReport rep;
    rep.method = method;
    rep.params = {{"p", (long long)p}, {"d", (long long)d}, {"lambda", (long long)lambda},
                  {"L", (long long)L}, {"N", (long long)N}};
    if (method == CountMethod::direct) {
        for (u64 x = L + 1; x <= L + N; ++x) {
            u64 xr = x % p;
            if (xr == 0) continue;
            if (powmod(xr, d, p) == lambda) ++rep.total;
        }
        return rep;
    }
    // coset route
    const u64 n = p - 1;
    const u64 d1 = std::gcd(d, n);
    const u64 a = discrete_log(ctx, lambda);
    if (a % d1 != 0) return rep; // no roots
    // solve t * d = a (mod p-1): t0 = (a/d1) * inv(d/d1 mod n/d1) mod n/d1
    const u64 n1 = n / d1;
    u64 dd = (d / d1) % n1;
    // modular inverse of dd mod n1 via extended gcd (gcd(dd, n1) = 1)
    long long r0 = (long long)n1, r1 = (long long)dd, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1; r0 = r1; r1 = r2;
        long long s2 = s0 - q * s1; s0 = s1; s1 = s2;
    }
    u64 inv_dd = n1 <= 1 ? 0 : u64(((s0 % (long long)n1) + (long long)n1) % (long long)n1);
    u64 t0 = n1 <= 1 ? 0 : mulmod((a / d1) % n1, inv_dd, n1);
    const u64 x0 = powmod(ctx.g(), t0, p);
    // x0 * G_{d1}, intersected with the window of N consecutive integers
    const u64 h = powmod(ctx.g(), n / d1, p);
    const u64 start = (L + 1) % p;
    u64 y = x0;
    for (u64 i = 0; i < d1; ++i) {
        u64 off = submod(y, start, p);
        if (off < N) ++rep.total;
        y = mulmod(y, h, p);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Integer polynomials with the squarefree-over-C invariant, used by the
// x^{f(x)} = 1 counter and the Nagell-Ore root-class reduction.
// ---------------------------------------------------------------------------
class IntPolynomial {
public:
    // Coefficients constant term first; degree >= 1, leading coefficient != 0.
    explicit IntPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        if (c_.size() < 2) throw InvalidSpec("IntPolynomial: degree must be >= 1");
    }

    int degree() const { return int(c_.size()) - 1; }
    const std::vector<long long>& coefficients() const { return c_; }

    // gcd(f, f') is a nonzero constant, tested by a primitive pseudo-remainder
    // sequence over Z (exact, guarded against 128-bit overflow).
    bool squarefree() const {
        using i128 = __int128;
        std::vector<i128> a(c_.begin(), c_.end());
        std::vector<i128> b;
        for (std::size_t i = 1; i < c_.size(); ++i) b.push_back(i128(c_[i]) * (long long)i);
        auto strip = [](std::vector<i128>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
        auto make_primitive = [&](std::vector<i128>& v) {
            strip(v);
            i128 g = 0;
            for (i128 x : v) {
                i128 ax = x < 0 ? -x : x;
                while (ax != 0) { i128 t = g % ax; g = ax; ax = t; }
            }
            if (g > 1) for (i128& x : v) x /= g;
        };
        auto checked_mul = [](i128 x, i128 y) {
            if (x == 0 || y == 0) return i128(0);
            i128 r = x * y;
            if (r / y != x) throw TooLarge("IntPolynomial::squarefree: coefficient overflow");
            return r;
        };
        make_primitive(a);
        make_primitive(b);
        while (b.size() >= 2) {
            // pseudo-remainder prem(a, b)
            std::vector<i128> r = a;
            const i128 lb = b.back();
            while (r.size() >= b.size()) {
                const i128 lr = r.back();
                const std::size_t shift = r.size() - b.size();
                for (std::size_t i = 0; i + 1 < r.size(); ++i) r[i] = checked_mul(r[i], lb);
                for (std::size_t i = 0; i + 1 < b.size(); ++i)
                    r[i + shift] -= checked_mul(lr, b[i]);
                r.pop_back();
                strip(r);
                if (r.empty()) break;
            }
            make_primitive(r);
            a = b;
            b = r;
        }
        return b.empty() ? a.size() <= 1 : true;
    }

    // f(x) mod m, handling negative coefficients; m >= 1.
    u64 eval_mod(u64 x, u64 m) const {
        if (m == 1) return 0;
        u64 acc = 0;
        const u64 xr = x % m;
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = mulmod(acc, xr, m);
            long long co = c_[i] % (long long)m;
            u64 cm = co >= 0 ? u64(co) : u64(co + (long long)m);
            acc = addmod(acc, cm, m);
        }
        return acc;
    }

private:
    std::vector<long long> c_;
};

// All k in [0, d-1] with f(k) = 0 (mod d), by exhaustive scan.
inline std::vector<u64> poly_roots_mod(const IntPolynomial& f, u64 d) {
    if (d < 1) throw InvalidRange("poly_roots_mod: need d >= 1");
    if (!f.squarefree()) throw NotSquarefree("poly_roots_mod: polynomial has multiple roots");
    std::vector<u64> roots;
    for (u64 k = 0; k < d; ++k)
        if (f.eval_mod(k, d) == 0) roots.push_back(k);
    return roots;
}

// ---------------------------------------------------------------------------
// Eq. (4): J = #{x in [1,p]: x^{f(x)} = 1 (mod p)}. The exponent f(x) is an
// integer (possibly negative or larger than p-1); since gcd(x,p)=1 on every
// counted x it is reduced mod p-1 before the power. x = p (i.e. x = 0 mod p)
// is scanned and rejected explicitly. by_gcd is keyed by d = gcd(f(x), p-1).
// ---------------------------------------------------------------------------
inline CountReport count_xfx(const IntPolynomial& f, const PrimeContext& ctx) {
    if (!f.squarefree()) throw NotSquarefree("count_xfx: polynomial has multiple roots");
    const u64 p = ctx.p();
    CountReport rep;
    rep.method = CountMethod::direct;
    rep.params = {{"p", (long long)p}, {"deg", f.degree()}};
    for (u64 x = 1; x <= p; ++x) {
        if (x % p == 0) continue;
        const u64 e = f.eval_mod(x, p - 1); // f(x) reduced into [0, p-2]
        if (powmod(x, e, p) == 1) {
            ++rep.total;
            ++rep.by_gcd[std::gcd(e, p - 1)]; // gcd(f(x), p-1); e = 0 means p-1 | f(x)
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Theorems 4/5 coverage: iterated product of the realized sets and the
// exceptional set Lambda = F_p^* minus the image.
// ---------------------------------------------------------------------------
inline std::pair<ResidueSet, ResidueSet> coverage_product(const std::vector<SetSpec>& specs,
                                                          const PrimeContext& ctx) {
    if (specs.empty()) throw InvalidSpec("coverage_product: need at least one spec");
    ResidueSet image = build_set(specs[0], ctx);
    if (image.contains(0)) throw InvalidSpec("coverage_product: sets must lie in F_p^*");
    for (std::size_t i = 1; i < specs.size(); ++i) {
        ResidueSet s = build_set(specs[i], ctx);
        if (s.contains(0)) throw InvalidSpec("coverage_product: sets must lie in F_p^*");
        image = product_set(image, s);
    }
    std::vector<u64> missing;
    for (u64 x = 1; x < ctx.p(); ++x)
        if (!image.contains(x)) missing.push_back(x);
    return {image, ResidueSet(ctx.p(), missing)};
}

// ---------------------------------------------------------------------------
// Factored products (Section 5/6 lemmas): count tuples with
// prod(left) = prod(right) (mod p), each factor drawn from a prime range
// (half-open (lo, hi]), an interval 1..H, or a fixed residue set. The split
// classifies pairs by which prime positions are equal (T1..T4 for two prime
// positions, T1/T2 for one).
// ---------------------------------------------------------------------------
namespace factored {
struct Primes { u64 lo = 0, hi = 0; }; // primes q with lo < q <= hi
struct Interval { u64 H = 0; };        // integers 1..H
struct Set { ResidueSet set; };
using Spec = std::variant<Primes, Interval, Set>;
} // namespace factored

namespace detail {

struct FactoredSide {
    // per residue: tuple count
    std::unordered_map<u64, long long> total;
    // per (residue, primes at subset S): tuple count, for each nonempty S
    std::vector<std::map<std::vector<u64>, long long>> by_subset;
    std::vector<std::size_t> prime_positions;
    u64 tuple_count = 0;
};

inline std::vector<std::vector<u64>> realize_factors(const std::vector<factored::Spec>& specs,
                                                     const PrimeContext& ctx,
                                                     std::vector<std::size_t>& prime_positions) {
    std::vector<std::vector<u64>> values;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (const auto* pr = std::get_if<factored::Primes>(&specs[i])) {
            std::vector<u64> qs;
            for (u64 q = pr->lo + 1; q <= pr->hi; ++q)
                if (is_prime(q)) qs.push_back(q);
            prime_positions.push_back(i);
            values.push_back(std::move(qs));
        } else if (const auto* iv = std::get_if<factored::Interval>(&specs[i])) {
            std::vector<u64> xs;
            for (u64 x = 1; x <= iv->H; ++x) xs.push_back(x);
            values.push_back(std::move(xs));
        } else {
            const auto& s = std::get<factored::Set>(specs[i]).set;
            if (s.modulus() != ctx.p()) throw ContextMismatch("count_factored: set modulus mismatch");
            values.push_back(s.elements());
        }
    }
    return values;
}

inline FactoredSide enumerate_side(const std::vector<factored::Spec>& specs,
                                   const PrimeContext& ctx, u64 budget) {
    FactoredSide side;
    std::vector<std::vector<u64>> values = realize_factors(specs, ctx, side.prime_positions);
    const std::size_t np = side.prime_positions.size();
    const std::size_t nsubsets = np == 0 ? 0 : (std::size_t(1) << np) - 1;
    side.by_subset.resize(nsubsets);
    u64 count = 1;
    for (const auto& v : values) {
        if (v.empty()) return side; // no tuples
        if (count > budget / v.size())
            throw TooLarge("count_factored: enumeration exceeds budget");
        count *= u64(v.size());
    }
    side.tuple_count = count;
    std::vector<std::size_t> idx(values.size(), 0);
    const u64 p = ctx.p();
    while (true) {
        u64 prod = 1;
        for (std::size_t i = 0; i < values.size(); ++i) prod = mulmod(prod, values[i][idx[i]] % p, p);
        ++side.total[prod];
        for (std::size_t s = 1; s <= nsubsets; ++s) {
            std::vector<u64> key{prod};
            for (std::size_t b = 0; b < np; ++b)
                if (s & (std::size_t(1) << b)) key.push_back(values[side.prime_positions[b]][idx[side.prime_positions[b]]]);
            ++side.by_subset[s - 1][key];
        }
        std::size_t i = 0;
        for (; i < values.size(); ++i) {
            if (++idx[i] < values[i].size()) break;
            idx[i] = 0;
        }
        if (i == values.size()) break;
    }
    return side;
}

inline long long match_subset(const std::map<std::vector<u64>, long long>& a,
                              const std::map<std::vector<u64>, long long>& b) {
    long long total = 0;
    for (const auto& [key, cnt] : a) {
        auto it = b.find(key);
        if (it != b.end()) total += cnt * it->second;
    }
    return total;
}

} // namespace detail

inline CountReport count_factored(const std::vector<factored::Spec>& left,
                                  const std::vector<factored::Spec>& right,
                                  const PrimeContext& ctx, u64 budget = 50000000) {
    CountReport rep;
    rep.method = CountMethod::factored;
    detail::FactoredSide ls = detail::enumerate_side(left, ctx, budget);
    detail::FactoredSide rs = detail::enumerate_side(right, ctx, budget);
    rep.params = {{"p", (long long)ctx.p()},
                  {"left_tuples", (long long)ls.tuple_count},
                  {"right_tuples", (long long)rs.tuple_count}};
    for (const auto& [mu, cnt] : ls.total) {
        auto it = rs.total.find(mu);
        if (it != rs.total.end()) rep.total += cnt * it->second;
    }
    // prime equality pattern split, only for matching shapes
    const std::size_t np = ls.prime_positions.size();
    if (np >= 1 && np <= 2 && rs.prime_positions.size() == np) {
        if (np == 1) {
            long long e1 = detail::match_subset(ls.by_subset[0], rs.by_subset[0]);
            rep.split["T1"] = e1;              // q = q'
            rep.split["T2"] = rep.total - e1;  // q != q'
        } else {
            long long e10 = detail::match_subset(ls.by_subset[0], rs.by_subset[0]); // first primes equal
            long long e01 = detail::match_subset(ls.by_subset[1], rs.by_subset[1]); // second primes equal
            long long e11 = detail::match_subset(ls.by_subset[2], rs.by_subset[2]); // both equal
            rep.split["T1"] = e11;
            rep.split["T2"] = rep.total - e10 - e01 + e11;
            rep.split["T3"] = e10 - e11;
            rep.split["T4"] = e01 - e11;
        }
    }
    return rep;
}

} // namespace congrlab
