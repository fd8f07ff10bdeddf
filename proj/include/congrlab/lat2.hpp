#pragma once

// The 2-D congruence lattice Gamma = {(u,v): u = s0 v (mod p)}, symmetric
// boxes |u| <= X, |v| <= Y, exact successive minima under the box norm
// max(|u|/X, |v|/Y), lattice point counting, and the coprime-solution /
// minima-product checks.
//
// Minima are computed by Lagrange-reducing the basis in the box metric
// (equivalently, the Euclidean metric of the coordinate-scaled lattice
// (uY, vX)) and enumerating the bounded coefficient range that must contain
// the first two minima. All norm comparisons are exact integer arithmetic.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "congrlab/arith.hpp"
#include "congrlab/bound_check.hpp"
#include "congrlab/count.hpp"
#include "congrlab/errors.hpp"

namespace congrlab {

struct Vec2 {
    long long u = 0;
    long long v = 0;
    bool operator==(const Vec2&) const = default;
};

struct LatticeBasis2 {
    Vec2 v1, v2;
};

// Integer half-widths: every check in this toolkit uses integral boxes and
// integral widths keep the minima exact rationals.
struct Box2 {
    long long X = 1;
    long long Y = 1;
};

struct Frac {
    long long num = 0;
    long long den = 1; // > 0, reduced
    double value() const { return double(num) / double(den); }
    bool operator==(const Frac&) const = default;
};

inline Frac make_frac(long long num, long long den) {
    long long g = std::gcd(num, den);
    if (g == 0) return {0, 1};
    return {num / g, den / g};
}

inline bool frac_less(const Frac& a, const Frac& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
}

struct Minima2 {
    Frac lambda1, lambda2;
    Vec2 first, second; // attaining vectors (sign-normalized)
};

inline long long det2(const LatticeBasis2& b) {
    __int128 d = (__int128)b.v1.u * b.v2.v - (__int128)b.v1.v * b.v2.u;
    return (long long)d;
}

inline LatticeBasis2 congruence_lattice(u64 s0, const PrimeContext& ctx) {
    return {{(long long)(s0 % ctx.p()), 1}, {(long long)ctx.p(), 0}};
}

namespace detail {

// Lagrange reduction with the inner product <a,b> = Y^2 a.u b.u + X^2 a.v b.v.
// With X = Y = 1 this is plain Euclidean Gauss reduction.
inline LatticeBasis2 lagrange_reduce_weighted(LatticeBasis2 b, long long X, long long Y) {
    if (det2(b) == 0) throw InvalidSpec("lattice basis is singular");
    auto dot = [X, Y](const Vec2& a, const Vec2& c) -> __int128 {
        return (__int128)(Y * Y) * a.u * c.u + (__int128)(X * X) * a.v * c.v;
    };
    while (true) {
        if (dot(b.v1, b.v1) > dot(b.v2, b.v2)) std::swap(b.v1, b.v2);
        __int128 n1 = dot(b.v1, b.v1);
        __int128 pr = dot(b.v1, b.v2);
        // nearest integer to pr / n1 with ties toward zero, so that exact
        // half-projections terminate instead of oscillating
        __int128 q = pr / n1;
        __int128 rem = pr - q * n1;
        if (2 * rem > n1) q += 1;
        else if (2 * rem < -n1) q -= 1;
        if (q == 0) break;
        b.v2.u -= (long long)(q * b.v1.u);
        b.v2.v -= (long long)(q * b.v1.v);
    }
    return b;
}

} // namespace detail

// Plain Euclidean Gauss (Lagrange) reduction; generates the same lattice.
inline LatticeBasis2 gauss_reduce(const LatticeBasis2& b) {
    return detail::lagrange_reduce_weighted(b, 1, 1);
}

namespace detail {

// Integer m candidates for min over m of
// max(|b1.u m + cu| Y, |b1.v m + cv| X): the function is convex piecewise
// linear, so the minimizer sits at a kink (a zero of either leg or a
// crossing of the two legs); neighbors are included for the parallel-vector
// exclusion in the second-minimum phase.
inline void candidate_ms(__int128 au, __int128 av, __int128 cu, __int128 cv, long long X,
                         long long Y, std::vector<__int128>& out) {
    out.clear();
    auto push_around = [&out](__int128 num, __int128 den) {
        if (den == 0) return;
        if (den < 0) { den = -den; num = -num; }
        __int128 q = num >= 0 ? num / den : -((-num + den - 1) / den); // floor
        for (int d = -1; d <= 2; ++d) out.push_back(q + d);
    };
    if (au != 0) push_around(-cu, au);
    if (av != 0) push_around(-cv, av);
    // crossings of s (au m + cu) Y = (av m + cv) X, s = +-1
    for (int s = -1; s <= 1; s += 2) {
        __int128 den = s * au * Y - av * X;
        __int128 num = cv * X - s * cu * Y;
        push_around(num, den);
    }
    out.push_back(0);
    out.push_back(1);
    out.push_back(-1);
}

} // namespace detail

inline Minima2 successive_minima(const LatticeBasis2& basis, const Box2& box) {
    const long long X = box.X, Y = box.Y;
    if (X < 1 || Y < 1) throw InvalidSpec("Box2: need X, Y >= 1");
    LatticeBasis2 b = detail::lagrange_reduce_weighted(basis, X, Y);
    using i128 = __int128;
    // For a reduced basis any point with box norm <= max(|b1|, |b2|) has
    // second coefficient |n| <= 2sqrt2/sqrt3 < 2, so n in [-2, 2] covers both
    // minima; for each n the best m is found by convex minimization.
    struct Cand {
        i128 u, v;
        i128 sup; // max(|u| Y, |v| X)
    };
    auto sup_of = [X, Y](i128 u, i128 v) {
        i128 a = (u < 0 ? -u : u) * Y;
        i128 c = (v < 0 ? -v : v) * X;
        return a > c ? a : c;
    };
    std::vector<Cand> cands;
    std::vector<i128> ms;
    for (long long n = -2; n <= 2; ++n) {
        const i128 cu = i128(n) * b.v2.u, cv = i128(n) * b.v2.v;
        detail::candidate_ms(b.v1.u, b.v1.v, cu, cv, X, Y, ms);
        for (i128 m : ms) {
            i128 u = i128(b.v1.u) * m + cu;
            i128 v = i128(b.v1.v) * m + cv;
            if (u == 0 && v == 0) continue;
            cands.push_back({u, v, sup_of(u, v)});
        }
    }
    auto canonical = [](const Cand& c) -> std::pair<i128, i128> {
        if (c.u < 0 || (c.u == 0 && c.v < 0)) return {-c.u, -c.v};
        return {c.u, c.v};
    };
    auto cand_better = [&](const Cand& a, const Cand& bb) {
        if (a.sup != bb.sup) return a.sup < bb.sup;
        return canonical(a) < canonical(bb);
    };
    const Cand* best1 = nullptr;
    for (const Cand& c : cands)
        if (!best1 || cand_better(c, *best1)) best1 = &c;
    const Cand* best2 = nullptr;
    for (const Cand& c : cands) {
        if (c.u * best1->v == c.v * best1->u) continue; // parallel to the first
        if (!best2 || cand_better(c, *best2)) best2 = &c;
    }
    auto [u1, v1] = canonical(*best1);
    auto [u2, v2] = canonical(*best2);
    const long long den = X * Y;
    return {make_frac((long long)best1->sup, den), make_frac((long long)best2->sup, den),
            {(long long)u1, (long long)v1}, {(long long)u2, (long long)v2}};
}

// |D cap Gamma| for the congruence lattice, O(Y): for each v the residue
// class u = s0 v (mod p) meets [-X, X] in floor((X-r)/p) + floor((X+r)/p) + 1
// points.
inline long long congruence_points_in_box(u64 s0, const PrimeContext& ctx, long long X, long long Y) {
    if (X < 1 || Y < 1) throw InvalidSpec("congruence_points_in_box: need X, Y >= 1");
    const long long p = (long long)ctx.p();
    long long total = 0;
    for (long long v = -Y; v <= Y; ++v) {
        long long r = (long long)mulmod(s0 % ctx.p(), u64(((v % p) + p) % p), ctx.p());
        if (r > X && (p - r) > X) continue;
        total += (X - r >= 0 ? (X - r) / p : -1) + (X + r) / p + 1;
    }
    return total;
}

// General basis variant by bounded coefficient enumeration (small boxes).
inline long long lattice_points_in_box(const LatticeBasis2& basis, const Box2& box) {
    const long long X = box.X, Y = box.Y;
    LatticeBasis2 b = detail::lagrange_reduce_weighted(basis, X, Y);
    auto dot = [X, Y](const Vec2& a, const Vec2& c) -> __int128 {
        return (__int128)(Y * Y) * a.u * c.u + (__int128)(X * X) * a.v * c.v;
    };
    const __int128 n1 = dot(b.v1, b.v1);
    const __int128 n2 = dot(b.v2, b.v2);
    const long double R2 = 2.0L * (long double)(X * X) * (long double)(Y * Y);
    const long long mmax = (long long)(2.0L * sqrtl(R2 / (long double)n1) / sqrtl(3.0L)) + 2;
    const long long nmax = (long long)(2.0L * sqrtl(R2 / (long double)n2) / sqrtl(3.0L)) + 2;
    long long count = 1; // origin
    for (long long m = -mmax; m <= mmax; ++m) {
        for (long long n = -nmax; n <= nmax; ++n) {
            if (m == 0 && n == 0) continue;
            Vec2 w{m * b.v1.u + n * b.v2.u, m * b.v1.v + n * b.v2.v};
            if (std::llabs(w.u) <= X && std::llabs(w.v) <= Y) ++count;
        }
    }
    return count;
}

// J = #{(x,y): 1<=x<=X, 1<=y<=Y, gcd(x,y)=1, x = s0 y (mod p)}; iterates y
// and walks the single residue class in x, O(Y (1 + X/p)).
inline CountReport count_coprime_box(u64 s0, long long X, long long Y, const PrimeContext& ctx) {
    if (X < 1 || Y < 1) throw InvalidSpec("count_coprime_box: need X, Y >= 1");
    const u64 p = ctx.p();
    CountReport rep;
    rep.method = CountMethod::direct;
    rep.params = {{"p", (long long)p}, {"s0", (long long)(s0 % p)}, {"X", X}, {"Y", Y}};
    for (long long y = 1; y <= Y; ++y) {
        u64 r = mulmod(s0 % p, u64(y) % p, p);
        for (long long x = r == 0 ? (long long)p : (long long)r; x <= X; x += (long long)p)
            if (std::gcd(x, y) == 1) ++rep.total;
    }
    return rep;
}

// Lemma: J is O(1 + XY/p); the proof constant gives J <= max(1, 30 X Y / p).
inline BoundCheck lemma2_check(u64 s0, long long X, long long Y, const PrimeContext& ctx,
                               double gate = 1.0) {
    const long long J = count_coprime_box(s0, X, Y, ctx).total;
    const u64 p = ctx.p();
    const double rhs = std::max(1.0, 30.0 * double(X) * double(Y) / double(p));
    // exact: J <= 1 or J p <= 30 X Y (assumes gate = 1; larger gates fall back to doubles)
    bool ok = J <= 1 || (__int128)J * p <= (__int128)30 * X * Y;
    if (gate != 1.0) ok = double(J) <= gate * rhs;
    BoundCheck c = make_check_verdict("lemma2", p, double(J), rhs, 0.0, gate,
                                      ok ? Verdict::pass : Verdict::fail);
    c.with("s0", s0 % p).with("X", X).with("Y", Y);
    return c;
}

// Minima product bound, n = 2: min(l1,1) min(l2,1) <= 15 / |D cap Gamma|.
// intersection_count must be |D cap Gamma| computed exactly by enumeration.
inline BoundCheck minima_product_check(const LatticeBasis2& basis, const Box2& box,
                                       long long intersection_count) {
    if (intersection_count < 1) throw InvalidSpec("minima_product_check: need |D cap Gamma| >= 1");
    Minima2 mins = successive_minima(basis, box);
    Frac a = mins.lambda1, b = mins.lambda2;
    if (a.num > a.den) a = {1, 1}; // clamp min(lambda, 1)
    if (b.num > b.den) b = {1, 1};
    // exact comparison: a.num b.num J <= 15 a.den b.den
    const bool ok = (__int128)a.num * b.num * intersection_count <= (__int128)15 * a.den * b.den;
    const double lhs = a.value() * b.value();
    const double rhs = 15.0 / double(intersection_count);
    BoundCheck c = make_check_verdict("eq5_minima_product", 0, lhs, rhs, 0.0, 1.0,
                                      ok ? Verdict::pass : Verdict::fail);
    c.with("lambda1", mins.lambda1.value()).with("lambda2", mins.lambda2.value())
        .with("points", intersection_count).with("X", box.X).with("Y", box.Y);
    return c;
}

} // namespace congrlab
