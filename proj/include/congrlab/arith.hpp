#pragma once

// Exact modular arithmetic over F_p at desk scale: prime contexts with the
// least primitive root and the factorization of p-1, powers, inverses,
// multiplicative orders and baby-step/giant-step discrete logarithms.
// All residues are uint64_t values in [0, p); moduli up to ~2^62.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "congrlab/errors.hpp"

namespace congrlab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 powmod(u64 base, u64 exp, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, witness set valid for all 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline u64 next_prime(u64 n) {
    if (n <= 2) return 2;
    if ((n & 1) == 0) ++n;
    while (!is_prime(n)) n += 2;
    return n;
}

struct Factor {
    u64 prime = 0;
    int exponent = 0;
    bool operator==(const Factor&) const = default;
};

// Trial division up to sqrt(n); instant at desk scale.
inline std::vector<Factor> factorize(u64 n) {
    std::vector<Factor> out;
    for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q == 0) {
            int e = 0;
            while (n % q == 0) { n /= q; ++e; }
            out.push_back({q, e});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

class PrimeContext {
public:
    u64 p() const { return p_; }
    u64 g() const { return g_; }
    const std::vector<Factor>& factors() const { return factors_; }

    u64 reduce(u64 x) const { return x % p_; }

    // Divisors of p-1, ascending.
    std::vector<u64> divisors_of_order() const {
        std::vector<u64> divs{1};
        for (const Factor& f : factors_) {
            std::size_t n = divs.size();
            u64 q = 1;
            for (int e = 1; e <= f.exponent; ++e) {
                q *= f.prime;
                for (std::size_t i = 0; i < n; ++i) divs.push_back(divs[i] * q);
            }
        }
        std::sort(divs.begin(), divs.end());
        return divs;
    }

    bool is_primitive_root(u64 h) const {
        if (h % p_ == 0) return false;
        for (const Factor& f : factors_) {
            if (powmod(h, (p_ - 1) / f.prime, p_) == 1) return false;
        }
        return true;
    }

private:
    friend PrimeContext make_context(u64 p);
    u64 p_ = 0;
    u64 g_ = 0;
    std::vector<Factor> factors_;
};

inline PrimeContext make_context(u64 p) {
    if (p < 3 || !is_prime(p)) throw CompositeModulus("make_context: modulus " + std::to_string(p) + " is not an odd prime >= 3");
    PrimeContext ctx;
    ctx.p_ = p;
    ctx.factors_ = factorize(p - 1);
    for (u64 h = 2; ; ++h) {
        if (ctx.is_primitive_root(h)) { ctx.g_ = h; break; }
    }
    return ctx;
}

inline u64 mod_pow(const PrimeContext& ctx, u64 base, u64 exp) {
    return powmod(base, exp, ctx.p());
}

inline u64 mod_inverse(const PrimeContext& ctx, u64 a) {
    a %= ctx.p();
    if (a == 0) throw NotInvertible("mod_inverse: zero residue");
    return powmod(a, ctx.p() - 2, ctx.p());
}

// Smallest t >= 1 with a^t = 1; computed by peeling prime factors off p-1.
inline u64 mult_order(const PrimeContext& ctx, u64 a) {
    a %= ctx.p();
    if (a == 0) throw NotInvertible("mult_order: zero residue");
    u64 t = ctx.p() - 1;
    for (const Factor& f : ctx.factors()) {
        for (int e = 0; e < f.exponent; ++e) {
            if (t % f.prime == 0 && powmod(a, t / f.prime, ctx.p()) == 1) t /= f.prime;
            else break;
        }
    }
    return t;
}

// Baby-step/giant-step: exact k in [0, p-2] with g^k = target, O(sqrt p).
inline u64 discrete_log(const PrimeContext& ctx, u64 target) {
    const u64 p = ctx.p();
    target %= p;
    if (target == 0) throw NotInvertible("discrete_log: zero residue");
    const u64 n = p - 1;
    u64 m = 1;
    while (m * m < n) ++m; // ceil(sqrt(p-1))
    std::unordered_map<u64, u64> baby;
    baby.reserve(m * 2);
    u64 cur = 1;
    for (u64 j = 0; j < m; ++j) {
        baby.emplace(cur, j);
        cur = mulmod(cur, ctx.g(), p);
    }
    const u64 giant = powmod(mod_inverse(ctx, ctx.g()), m, p);
    u64 y = target;
    for (u64 i = 0; i * m <= n; ++i) {
        auto it = baby.find(y);
        if (it != baby.end()) return (i * m + it->second) % n;
        y = mulmod(y, giant, p);
    }
    throw Error("discrete_log: not found (non-generator g?)"); // unreachable for valid contexts
}

} // namespace congrlab
