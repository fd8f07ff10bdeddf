#include "doctest.h"

#include "congrlab/count.hpp"
#include "congrlab/farey.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

using namespace congrlab;

namespace {

// totient sieve oracle for |F_Q| = 2 sum phi(k) - 1
u64 farey_size_oracle(u64 Q) {
    std::vector<u64> phi(Q + 1);
    for (u64 i = 0; i <= Q; ++i) phi[i] = i;
    for (u64 i = 2; i <= Q; ++i)
        if (phi[i] == i) // prime
            for (u64 j = i; j <= Q; j += i) phi[j] -= phi[j] / i;
    u64 s = 0;
    for (u64 k = 1; k <= Q; ++k) s += phi[k];
    return 2 * s - 1;
}

std::set<std::pair<u64, u64>> as_pairs(const RationalSet& s) {
    std::set<std::pair<u64, u64>> out;
    for (const Rational& r : s.elements()) out.insert({r.num, r.den});
    return out;
}

struct Rng {
    u64 s;
    u64 next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

} // namespace

TEST_SUITE("farey") {

TEST_CASE("rationals are stored reduced") {
    CHECK(make_rational(6, 4) == Rational{3, 2});
    CHECK(make_rational(1, 1) == Rational{1, 1});
    CHECK_THROWS_AS(make_rational(0, 3), InvalidSpec);
    CHECK_THROWS_AS(make_rational(3, 0), InvalidSpec);
}

TEST_CASE("farey_set sizes") {
    CHECK(as_pairs(farey_set(1)) == std::set<std::pair<u64, u64>>{{1, 1}});
    CHECK(as_pairs(farey_set(2)) == std::set<std::pair<u64, u64>>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(farey_set(3).size() == 7);
    CHECK(farey_set(3).order_bound() == 3);
    CHECK_THROWS_AS(farey_set(0), InvalidSpec);
}

TEST_CASE("farey cardinality matches the totient sieve") {
    for (u64 Q = 1; Q <= 120; ++Q) CHECK(farey_set(Q).size() == farey_size_oracle(Q));
    for (u64 Q : {500ull, 1000ull, 2000ull}) CHECK(farey_set(Q).size() == farey_size_oracle(Q));
}

TEST_CASE("rational_mfold") {
    RationalSet A({{1, 2}, {2, 1}});
    CHECK(as_pairs(rational_mfold(A, 2)) ==
          std::set<std::pair<u64, u64>>{{1, 4}, {1, 1}, {4, 1}});
    CHECK(rational_mfold(A, 1) == A);
    RationalSet unit({{1, 1}});
    CHECK(rational_mfold(unit, 5) == unit);
    CHECK_THROWS_AS(rational_mfold(A, 0), InvalidSpec);
}

TEST_CASE("mfold products compose") {
    Rng rng{31337};
    RationalSet F = farey_set(50);
    for (int rep = 0; rep < 3; ++rep) {
        std::vector<Rational> sample;
        for (int i = 0; i < 18; ++i)
            sample.push_back(F.elements()[rng.next() % F.elements().size()]);
        RationalSet A(std::move(sample));
        RationalSet a2 = rational_mfold(A, 2);
        RationalSet a3 = rational_mfold(A, 3);
        // additive split: A^(3) = A^(2) . A as a one-step product
        std::vector<Rational> prods;
        for (const Rational& x : a2.elements())
            for (const Rational& y : A.elements()) prods.push_back(rational_mul(x, y));
        CHECK(RationalSet(std::move(prods)) == a3);
        // iterated m-folds multiply the exponents: (A^(2))^(2) = A^(4)
        CHECK(rational_mfold(a2, 2) == rational_mfold(A, 4));
    }
}

TEST_CASE("order bound of products stays within Q^m") {
    RationalSet A = farey_set(6);
    for (unsigned m = 1; m <= 3; ++m) {
        u64 qm = 1;
        for (unsigned i = 0; i < m; ++i) qm *= 6;
        CHECK(rational_mfold(A, m).order_bound() <= qm);
    }
}

TEST_CASE("products past 2^62 raise OverflowError") {
    RationalSet big({{u64(1) << 40, 1}});
    CHECK_THROWS_AS(rational_mfold(big, 2), OverflowError);
}

TEST_CASE("map_to_fp") {
    PrimeContext c7 = make_context(7);
    CHECK(map_to_fp(RationalSet({{1, 2}}), c7).elements() == std::vector<u64>{4});
    CHECK(map_to_fp(RationalSet({{5, 1}}), c7).elements() == std::vector<u64>{5});
    ResidueSet collide = map_to_fp(RationalSet({{1, 2}, {4, 1}}), c7);
    CHECK(collide.elements() == std::vector<u64>{4}); // 1/2 = 4 collides
    CHECK(collide.size() == 1);
    CHECK_THROWS_AS(map_to_fp(RationalSet({{1, 7}}), c7), DenominatorDivisibleByP);
}

TEST_CASE("build_Jd_set examples") {
    PrimeContext c7 = make_context(7);
    ResidueSet one(7, {1});
    CHECK(as_pairs(build_Jd_set(2, 1, one)) == std::set<std::pair<u64, u64>>{{1, 1}});
    CHECK(as_pairs(build_Jd_set(2, 2, one)) == std::set<std::pair<u64, u64>>{{1, 1}});
    ResidueSet four(7, {4});
    CHECK(as_pairs(build_Jd_set(2, 1, four)) == std::set<std::pair<u64, u64>>{{1, 2}});
    CHECK_THROWS_AS(build_Jd_set(2, 3, one), InvalidSpec);
}

TEST_CASE("J_d sets map back into U and reproduce count_eq1") {
    Rng rng{555};
    for (u64 p = 3; p < 100; p += 2) {
        if (!is_prime(p)) continue;
        PrimeContext ctx = make_context(p);
        for (int rep = 0; rep < 3; ++rep) {
            u64 H = 1 + rng.next() % (p - 1);
            std::vector<u64> elems;
            for (int i = 0; i < 4; ++i) elems.push_back(1 + rng.next() % (p - 1));
            ResidueSet U(p, elems);
            long long total = 0;
            for (u64 d = 1; d <= H; ++d) {
                RationalSet Jd = build_Jd_set(H, d, U);
                total += (long long)Jd.size();
                if (Jd.size() > 0) {
                    ResidueSet mapped = map_to_fp(Jd, ctx);
                    for (u64 x : mapped.elements()) CHECK(U.contains(x));
                }
            }
            CHECK(total == count_eq1(H, U).total); // Section-3 identity
        }
    }
}

TEST_CASE("lemma3 uniqueness examples") {
    PrimeContext c7 = make_context(7);
    BoundCheck a = lemma3_uniqueness_check(2, 3, c7);
    CHECK(a.verdict == Verdict::pass);
    CHECK(a.lhs == 1.0);
    BoundCheck b = lemma3_uniqueness_check(1, 1, c7);
    CHECK(b.verdict == Verdict::pass);
    CHECK_THROWS_AS(lemma3_uniqueness_check(3, 3, c7), RangeTooLarge);
}

TEST_CASE("lemma3 holds for sampled boxes, p < 150") {
    Rng rng{88};
    for (u64 p = 3; p < 150; p += 2) {
        if (!is_prime(p)) continue;
        PrimeContext ctx = make_context(p);
        for (int rep = 0; rep < 4; ++rep) {
            u64 X = 1 + rng.next() % (p - 1);
            u64 maxY = (p - 1) / X;
            if (maxY == 0) continue;
            u64 Y = 1 + rng.next() % maxY;
            if (X * Y >= p) continue;
            CHECK(lemma3_uniqueness_check(X, Y, ctx).verdict == Verdict::pass);
        }
    }
}

TEST_CASE("growth_report") {
    RationalSet F16 = farey_set(16);
    BoundCheck m1 = growth_report(F16, 1, 0.001);
    CHECK(m1.verdict == Verdict::pass); // m = 1 passes for any positive constant

    BoundCheck m2 = growth_report(F16, 2, 10.0);
    // recompute both sides independently
    double t = std::log(16.0) / std::sqrt(std::log(std::log(16.0)));
    double measured = double(rational_mfold(F16, 2).size());
    double bound = std::exp(-10.0 * t) * std::pow(double(F16.size()), 2.0);
    CHECK(m2.rhs == doctest::Approx(measured));
    CHECK(m2.lhs == doctest::Approx(bound));
    CHECK(m2.verdict == (bound <= measured ? Verdict::pass : Verdict::fail));
    // the recorded minimal constant reproduces the boundary
    double min_c = 0;
    for (auto& [k, v] : m2.params)
        if (k == "min_Cm") min_c = std::stod(v);
    CHECK(std::exp(-min_c * t) * std::pow(double(F16.size()), 2.0) <=
          measured * (1.0 + 1e-9));

    RationalSet tiny({{1, 1}});
    CHECK_THROWS_AS(growth_report(tiny, 3, 1.0), OrderTooSmall);
}

} // TEST_SUITE
