#include <doctest.h>

#include <set>

#include "divwin/sieve.hpp"

using namespace divwin;

namespace {
FactoredInteger F(unsigned long n) { return factorize(mpz_class(n)); }
}  // namespace

TEST_CASE("legendre symbol") {
    CHECK(legendre(1, 3) == 1);
    CHECK(legendre(-1, 3) == -1);
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(21, 7) == 0);
    CHECK(legendre(-1, 13) == 1);  // 13 = 1 mod 4
}

TEST_CASE("S_v recurrence values") {
    CHECK(count_unsolvable(3, 0, 1) == 2);   // (3 - (-1|3))/2 = 2
    CHECK(count_unsolvable(5, 1, 1) == 5);   // S_1 = p
    CHECK(count_unsolvable(5, 1, 3) == 5);
    CHECK(count_unsolvable(3, 2, 1) == 6);   // 3 * S_0
    CHECK(count_unsolvable(7, 3, 3) == 49);  // 7 * S_1
    CHECK_THROWS_AS(count_unsolvable(3, 0, 3), std::invalid_argument);  // p | u
    CHECK_THROWS_AS(count_unsolvable(4, 0, 1), std::invalid_argument);
}

TEST_CASE("recurrence matches brute force on a spot grid") {
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        for (unsigned v = 0; v <= 3; ++v) {
            for (unsigned long u = 1; u < p; ++u) {
                CHECK(count_unsolvable(p, v, u) ==
                      count_unsolvable_bruteforce(p, v, u));
            }
        }
    }
}

TEST_CASE("f and f* with the algebraic identity") {
    FValues v = f_values(F(36), 1, 1, 6);
    CHECK(v.f == 12);
    CHECK(v.f_star == 0);

    v = f_values(F(12), 1, 1, 3);
    CHECK(v.f == 7);
    CHECK(v.f_star == 1);

    v = f_values(F(12), 3, 1, 6);
    CHECK(v.f == 12);
    CHECK(v.f_star == 0);

    CHECK_THROWS_AS(f_values(F(12), 1, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(f_values(F(12), 2, 4, 3), std::invalid_argument);  // gcd > 1

    for (const mpz_class& d : divisors(F(2016))) {
        FValues w = f_values(F(2016), 3, 5, d);
        CHECK(w.f * w.f - w.f_star * w.f_star == 4 * 3 * 5 * 2016);
    }
}

TEST_CASE("sieve spec for n = 210, a = b = 1, Q = 30") {
    // K = 840 = 2^3 * 3 * 5 * 7: moduli <= 30 are 9, 25 (v = 1) and the
    // primes 11, 13, 17, 19, 23, 29 themselves (v = 0); 49 is cut off by Q
    SieveSpec spec = build_sieve_spec(F(210), 1, 1, 30);
    REQUIRE(spec.moduli.size() == 8);
    for (const auto& m : spec.moduli) {
        CHECK(m.modulus != 49);
        if (m.p == 3) {
            CHECK(m.modulus == 9);
            CHECK(m.excluded == 3);  // S_1 = p
        }
        if (m.p == 5) {
            CHECK(m.modulus == 25);
            CHECK(m.excluded == 5);
        }
        if (m.p == 11) CHECK(m.excluded == 5);  // S_0 with u = -840 mod 11
    }
    // H agrees with the direct sum of the multiplicative weight over q <= Q
    mpq_class H = 0;
    for (std::uint64_t q = 1; q <= 30; ++q) H += weight_h(spec, q);
    CHECK(spec.H == H);
    CHECK(spec.H > 1);
}

TEST_CASE("weight h is multiplicative and supported on the sieve moduli") {
    SieveSpec spec = build_sieve_spec(F(210), 1, 1, 300);
    CHECK(weight_h(spec, 1) == 1);
    CHECK(weight_h(spec, 9) == mpq_class(1, 2));   // p/(p^2 - p) = 1/(p-1)
    CHECK(weight_h(spec, 225) == mpq_class(1, 8));
    CHECK(weight_h(spec, 3) == 0);   // p^1 unsupported since v_3(K) = 1
    CHECK(weight_h(spec, 27) == 0);
    CHECK(weight_h(spec, 11) == mpq_class(5, 6));  // v = 0: S_0/(p - S_0)
    CHECK(weight_h(spec, 99) == mpq_class(5, 12));  // h(9) h(11)
}

TEST_CASE("large sieve bound") {
    SieveSpec empty{{}, 1, mpq_class(1)};
    CHECK(large_sieve_bound(empty, 5) == 6);

    SieveSpec one{{SieveModulus{3, 1, 9, 3}}, 9, mpq_class(3, 2)};
    CHECK(large_sieve_bound(one, 5) == mpq_class(86 * 2, 3));

    bool vac = false;
    SieveSpec zero{{}, 4, mpq_class(0)};
    large_sieve_bound(zero, 5, &vac);
    CHECK(vac);
}

TEST_CASE("H is nondecreasing in Q") {
    mpq_class prev = 0;
    for (std::uint64_t Q = 1; Q <= 60; Q += 3) {
        SieveSpec spec = build_sieve_spec(F(4410), 1, 1, Q);
        CHECK(spec.H >= prev);
        prev = spec.H;
    }
}

TEST_CASE("window check reports consistent caps") {
    SieveWindowReport r = sieve_window_check(F(36), 1, 1, 2, 1);
    CHECK(r.count <= 3);
    CHECK(r.cap_elementary == 3);
    CHECK(r.classes_avoided);

    r = sieve_window_check(F(97), 1, 1, 3, 10);
    CHECK(r.count <= 1);
    CHECK(r.classes_avoided);

    r = sieve_window_check(F(44100), 1, 1, 4, 10);  // (2*3*5*7)^2
    CHECK(r.cap_elementary == 5);
    CHECK(r.count <= r.cap_elementary);
    CHECK(r.classes_avoided);
    if (!r.sieve_vacuous) CHECK(mpq_class(r.count) <= r.cap_sieve);
}

TEST_CASE("f is injective on divisors at or above x0") {
    FactoredInteger n = F(2016);
    std::set<mpz_class> seen;
    for (const mpz_class& d : divisors(n)) {
        if (d * d >= 2016) {  // a = b = 1: d >= x0 = sqrt(n)
            FValues v = f_values(n, 1, 1, d);
            CHECK(seen.insert(v.f).second);
        }
    }
}
