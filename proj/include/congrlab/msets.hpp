#pragma once

// Structured subsets of F_p^*: intervals {L+1,...,L+H} mod p, the subgroup
// of order d, geometric progressions {1, b, ..., b^{N-1}}, and explicit
// sets; product sets, m-fold products, multiplicative doubling, and slices
// of cyclic sets with guaranteed small doubling.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <variant>
#include <vector>

#include "congrlab/arith.hpp"
#include "congrlab/errors.hpp"

namespace congrlab {

struct Interval {
    u64 L = 0; // offset: residues L+1 .. L+H taken mod p
    u64 H = 0;
};
struct Subgroup {
    u64 d = 0; // order; must divide p-1
};
struct GeomProg {
    u64 N = 0;    // length
    u64 base = 0; // must have multiplicative order >= N
};
struct Explicit {
    std::vector<u64> elements;
};
using SetSpec = std::variant<Interval, Subgroup, GeomProg, Explicit>;

// Dense membership over [0, p-1] plus the sorted element list. Immutable
// after construction; 0 can only enter through Explicit specs.
class ResidueSet {
public:
    ResidueSet(u64 p, const std::vector<u64>& elements) : p_(p), bits_(p, false) {
        elems_.reserve(elements.size());
        for (u64 x : elements) {
            if (x >= p_) throw InvalidSpec("ResidueSet: element out of range");
            if (!bits_[x]) {
                bits_[x] = true;
                elems_.push_back(x);
            }
        }
        std::sort(elems_.begin(), elems_.end());
    }

    u64 modulus() const { return p_; }
    std::size_t size() const { return elems_.size(); }
    bool contains(u64 x) const { return x < p_ && bits_[x]; }
    const std::vector<u64>& elements() const { return elems_; }

    bool operator==(const ResidueSet& other) const {
        return p_ == other.p_ && elems_ == other.elems_;
    }

private:
    u64 p_;
    std::vector<bool> bits_;
    std::vector<u64> elems_;
};

namespace detail {

inline u64 subgroup_generator(const PrimeContext& ctx, u64 d) {
    return powmod(ctx.g(), (ctx.p() - 1) / d, ctx.p());
}

inline std::vector<u64> consecutive_powers(u64 base, u64 n, u64 p) {
    std::vector<u64> elems;
    elems.reserve(n);
    u64 x = 1;
    for (u64 i = 0; i < n; ++i) {
        elems.push_back(x);
        x = mulmod(x, base, p);
    }
    return elems;
}

} // namespace detail

inline ResidueSet build_set(const SetSpec& spec, const PrimeContext& ctx) {
    const u64 p = ctx.p();
    if (const auto* iv = std::get_if<Interval>(&spec)) {
        if (iv->H < 1 || iv->H >= p) throw InvalidSpec("Interval: need 1 <= H < p");
        std::vector<u64> elems;
        elems.reserve(iv->H);
        for (u64 i = 1; i <= iv->H; ++i) {
            u64 x = (iv->L % p + i) % p;
            if (x != 0) elems.push_back(x); // wrapped intervals stay inside F_p^*
        }
        return ResidueSet(p, elems);
    }
    if (const auto* sg = std::get_if<Subgroup>(&spec)) {
        if (sg->d < 1 || (p - 1) % sg->d != 0) throw InvalidSpec("Subgroup: d must divide p-1");
        return ResidueSet(p, detail::consecutive_powers(detail::subgroup_generator(ctx, sg->d), sg->d, p));
    }
    if (const auto* gp = std::get_if<GeomProg>(&spec)) {
        if (gp->N < 1) throw InvalidSpec("GeomProg: need N >= 1");
        if (gp->base % p == 0) throw InvalidSpec("GeomProg: base must be nonzero");
        if (mult_order(ctx, gp->base) < gp->N) throw InvalidSpec("GeomProg: base order smaller than N");
        return ResidueSet(p, detail::consecutive_powers(gp->base % p, gp->N, p));
    }
    const auto& ex = std::get<Explicit>(spec);
    std::vector<u64> seen_sorted = ex.elements;
    std::sort(seen_sorted.begin(), seen_sorted.end());
    if (std::adjacent_find(seen_sorted.begin(), seen_sorted.end()) != seen_sorted.end())
        throw InvalidSpec("Explicit: duplicate elements");
    return ResidueSet(p, ex.elements);
}

inline ResidueSet product_set(const ResidueSet& A, const ResidueSet& B) {
    if (A.modulus() != B.modulus()) throw ContextMismatch("product_set: different moduli");
    const u64 p = A.modulus();
    std::vector<bool> seen(p, false);
    std::vector<u64> out;
    for (u64 a : A.elements()) {
        for (u64 b : B.elements()) {
            u64 v = mulmod(a, b, p);
            if (!seen[v]) {
                seen[v] = true;
                out.push_back(v);
            }
        }
    }
    return ResidueSet(p, out);
}

inline ResidueSet m_fold_product(const ResidueSet& A, unsigned m) {
    if (m < 1) throw InvalidSpec("m_fold_product: need m >= 1");
    ResidueSet r = A;
    for (unsigned i = 1; i < m; ++i) r = product_set(r, A);
    return r;
}

// |U.U| / |U| as an exact reduced fraction.
struct DoublingRatio {
    u64 num = 0;
    u64 den = 1;
    double value() const { return double(num) / double(den); }
    bool operator==(const DoublingRatio&) const = default;
};

inline DoublingRatio doubling_ratio(const ResidueSet& U) {
    if (U.size() == 0) throw EmptySet("doubling_ratio: empty set");
    u64 num = product_set(U, U).size();
    u64 den = U.size();
    u64 g = std::gcd(num, den);
    return {num / g, den / g};
}

// First N consecutive powers of the cyclic set's generator. For N <= |G|
// the slice satisfies |U.U| <= 2|U| - 1, and |U^(m)| = min(m(N-1)+1, ord).
inline ResidueSet small_doubling_slice(const SetSpec& G, u64 N, const PrimeContext& ctx) {
    if (N < 1) throw InvalidSpec("small_doubling_slice: need N >= 1");
    u64 base = 0, len = 0;
    if (const auto* sg = std::get_if<Subgroup>(&G)) {
        if (sg->d < 1 || (ctx.p() - 1) % sg->d != 0) throw InvalidSpec("Subgroup: d must divide p-1");
        base = detail::subgroup_generator(ctx, sg->d);
        len = sg->d;
    } else if (const auto* gp = std::get_if<GeomProg>(&G)) {
        if (gp->base % ctx.p() == 0) throw InvalidSpec("GeomProg: base must be nonzero");
        if (mult_order(ctx, gp->base) < gp->N) throw InvalidSpec("GeomProg: base order smaller than N");
        base = gp->base % ctx.p();
        len = gp->N;
    } else {
        throw InvalidSpec("small_doubling_slice: spec must be Subgroup or GeomProg");
    }
    if (N > len) throw SliceTooLarge("small_doubling_slice: N exceeds |G|");
    return ResidueSet(ctx.p(), detail::consecutive_powers(base, N, ctx.p()));
}

inline ResidueSet dilate(const ResidueSet& U, u64 c) {
    const u64 p = U.modulus();
    c %= p;
    if (c == 0) throw NotInvertible("dilate: zero multiplier");
    std::vector<u64> out;
    out.reserve(U.size());
    for (u64 x : U.elements()) out.push_back(mulmod(c, x, p));
    return ResidueSet(p, out);
}

} // namespace congrlab
