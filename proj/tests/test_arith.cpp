#include "doctest.h"

#include "congrlab/arith.hpp"

#include <cstdint>
#include <vector>

using namespace congrlab;

namespace {

// brute-force order: multiply until 1 comes back
u64 order_brute(u64 a, u64 p) {
    u64 x = a % p, t = 1;
    while (x != 1) {
        x = mulmod(x, a, p);
        ++t;
    }
    return t;
}

// least primitive root by exhaustive order check
u64 least_primitive_root_brute(u64 p) {
    for (u64 h = 2; h < p; ++h)
        if (order_brute(h, p) == p - 1) return h;
    return 0;
}

u64 inverse_brute(u64 a, u64 p) {
    for (u64 b = 1; b < p; ++b)
        if (mulmod(a, b, p) == 1) return b;
    return 0;
}

std::vector<u64> primes_below(u64 bound) {
    std::vector<u64> out;
    for (u64 p = 3; p < bound; p += 2)
        if (is_prime(p)) out.push_back(p);
    return out;
}

} // namespace

TEST_SUITE("arith") {

TEST_CASE("make_context finds the least primitive root and factors p-1") {
    CHECK(least_primitive_root_brute(7) == 3); // oracle pins the frozen value
    PrimeContext c7 = make_context(7);
    CHECK(c7.g() == 3);
    CHECK(c7.factors() == std::vector<Factor>{{2, 1}, {3, 1}});

    CHECK(least_primitive_root_brute(3) == 2);
    PrimeContext c3 = make_context(3);
    CHECK(c3.g() == 2);
    CHECK(c3.factors() == std::vector<Factor>{{2, 1}});

    CHECK_THROWS_AS(make_context(8), CompositeModulus);
    CHECK_THROWS_AS(make_context(1), CompositeModulus);
    CHECK_THROWS_AS(make_context(2), CompositeModulus); // p >= 3 required
}

TEST_CASE("context invariants for all p < 2000") {
    for (u64 p : primes_below(2000)) {
        PrimeContext ctx = make_context(p);
        u64 prod = 1;
        for (const Factor& f : ctx.factors()) {
            CHECK(is_prime(f.prime));
            for (int e = 0; e < f.exponent; ++e) prod *= f.prime;
        }
        CHECK(prod == p - 1);
        CHECK(mult_order(ctx, ctx.g()) == p - 1);
        // minimality: every h < g fails the primitive-root test
        for (u64 h = 2; h < ctx.g(); ++h) CHECK_FALSE(ctx.is_primitive_root(h));
    }
}

TEST_CASE("mod_pow") {
    PrimeContext c7 = make_context(7);
    CHECK(mod_pow(c7, 3, 6) == 1); // Fermat
    CHECK(mod_pow(c7, 5, 0) == 1); // empty product
    u64 expect = 1;                // repeated multiplication oracle
    for (int i = 0; i < 10; ++i) expect = expect * 2 % 7;
    CHECK(expect == 2);
    CHECK(mod_pow(c7, 2, 10) == 2);
}

TEST_CASE("mod_inverse") {
    PrimeContext c7 = make_context(7);
    CHECK(inverse_brute(3, 7) == 5);
    CHECK(mod_inverse(c7, 3) == 5);
    CHECK(mod_inverse(c7, 1) == 1);
    CHECK_THROWS_AS(mod_inverse(c7, 0), NotInvertible);
}

TEST_CASE("mult_order") {
    PrimeContext c7 = make_context(7);
    CHECK(order_brute(2, 7) == 3);
    CHECK(mult_order(c7, 2) == 3);
    CHECK(mult_order(c7, 1) == 1);
    CHECK(mult_order(c7, 3) == 6);
    CHECK_THROWS_AS(mult_order(c7, 0), NotInvertible);
}

TEST_CASE("discrete_log") {
    PrimeContext c7 = make_context(7);
    CHECK(mod_pow(c7, 3, 3) == 6); // 3^3 = 27 = 6
    CHECK(discrete_log(c7, 6) == 3);
    CHECK(discrete_log(c7, 1) == 0);
    CHECK(discrete_log(c7, 3) == 1);
    CHECK_THROWS_AS(discrete_log(c7, 0), NotInvertible);
}

TEST_CASE("order, inverse and power agree for all a, p < 2000") {
    for (u64 p : primes_below(2000)) {
        PrimeContext ctx = make_context(p);
        for (u64 a = 1; a < p; ++a) {
            // incremental scan is the no-smaller-exponent oracle
            u64 x = a % p, t = 1;
            while (x != 1) {
                x = mulmod(x, a, p);
                ++t;
            }
            CHECK(mult_order(ctx, a) == t);
            CHECK(mod_pow(ctx, a, t) == 1);
            CHECK(mulmod(a, mod_inverse(ctx, a), p) == 1);
            CHECK((p - 1) % t == 0);
        }
    }
}

TEST_CASE("discrete_log is a bijection onto [0, p-2]") {
    for (u64 p : {5ull, 7ull, 97ull, 499ull, 1999ull}) {
        PrimeContext ctx = make_context(p);
        std::vector<bool> seen(p - 1, false);
        for (u64 a = 1; a < p; ++a) {
            u64 k = discrete_log(ctx, a);
            CHECK(k < p - 1);
            CHECK(mod_pow(ctx, ctx.g(), k) == a);
            CHECK_FALSE(seen[k]);
            seen[k] = true;
        }
    }
}

TEST_CASE("is_prime matches trial division below 10000") {
    auto trial = [](u64 n) {
        if (n < 2) return false;
        for (u64 d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (u64 n = 0; n < 10000; ++n) CHECK(is_prime(n) == trial(n));
}

} // TEST_SUITE
