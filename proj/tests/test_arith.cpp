#include <doctest.h>

#include "divwin/arith.hpp"

using namespace divwin;

namespace {
FactoredInteger F(unsigned long n) { return factorize(mpz_class(n)); }
}  // namespace

TEST_CASE("factorize basic values") {
    CHECK(F(1).factors().empty());
    CHECK(F(1).value() == 1);

    auto f12 = F(12);
    REQUIRE(f12.factors().size() == 2);
    CHECK(f12.factors()[0] == PrimePower{2, 2});
    CHECK(f12.factors()[1] == PrimePower{3, 1});

    auto f2016 = F(2016);
    REQUIRE(f2016.factors().size() == 3);
    CHECK(f2016.factors()[0] == PrimePower{2, 5});
    CHECK(f2016.factors()[1] == PrimePower{3, 2});
    CHECK(f2016.factors()[2] == PrimePower{7, 1});

    CHECK_THROWS_AS(factorize(mpz_class(0)), std::invalid_argument);
}

TEST_CASE("factorize round-trips and handles large semiprimes") {
    mpz_class p("1000000000000000003"), q("1000000000000000009");
    FactoredInteger f = factorize(p * q);
    REQUIRE(f.factors().size() == 2);
    CHECK(f.factors()[0].prime == p);
    CHECK(f.factors()[1].prime == q);
    CHECK(factorize(f.value()) == f);
}

TEST_CASE("from_factors validates its invariants") {
    CHECK_THROWS_AS(FactoredInteger::from_factors({{3, 1}, {2, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(FactoredInteger::from_factors({{2, 0}}), std::invalid_argument);
}

TEST_CASE("divisors basic values") {
    CHECK(divisors(F(12)) == std::vector<mpz_class>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(F(1)) == std::vector<mpz_class>{1});
    CHECK(divisors(F(36)) == std::vector<mpz_class>{1, 2, 3, 4, 6, 9, 12, 18, 36});
}

TEST_CASE("divisor budget is enforced with tau in the message") {
    FactoredInteger f = F(720720);  // tau = 240
    CHECK_THROWS_AS(divisors(f, 100), ResourceError);
}

TEST_CASE("profile basic values") {
    auto pr = profile(F(12));
    CHECK(pr.tau == 6);
    CHECK(pr.omega == 2);
    CHECK(pr.big_omega2 == 5);
    CHECK(pr.v_max == 2);

    pr = profile(F(1));
    CHECK(pr.tau == 1);
    CHECK(pr.omega == 0);
    CHECK(pr.big_omega2 == 0);
    CHECK(pr.v_max == 0);

    pr = profile(F(2016));
    CHECK(pr.tau == 36);
    CHECK(pr.omega == 3);
    CHECK(pr.big_omega2 == 30);
    CHECK(pr.v_max == 5);
}

TEST_CASE("prime generation") {
    CHECK(primes_above(10, 3) == std::vector<mpz_class>{11, 13, 17});
    CHECK(primes_above(2, 1) == std::vector<mpz_class>{3});
    CHECK(primes_above(100, 4) == std::vector<mpz_class>{101, 103, 107, 109});
    CHECK(primes_below(10, 2) == std::vector<mpz_class>{5, 7});
    CHECK_THROWS_AS(primes_below(5, 4), std::invalid_argument);
}

TEST_CASE("divisor structure, exhaustively to 10^4") {
    SmallestFactorSieve sieve(10000);
    for (std::uint32_t n = 1; n <= 10000; ++n) {
        FactoredInteger f = sieve.factor(n);
        CHECK(f.value() == n);
        auto divs = divisors(f);
        CHECK(mpz_class(divs.size()) == profile(f).tau);
        for (std::size_t i = 0; i < divs.size(); ++i) {
            CHECK(mpz_divisible_p(f.value().get_mpz_t(), divs[i].get_mpz_t()));
            if (i) CHECK(divs[i - 1] < divs[i]);
        }
    }
}

TEST_CASE("power integrality and floors") {
    mpz_class out;
    CHECK(power_is_integer(F(4), 0.5, &out));
    CHECK(out == 2);
    CHECK(power_is_integer(F(16), 0.25, &out));
    CHECK(out == 2);
    // the double 1/3 is a dyadic rational slightly off 1/3, so 8^(1/3) is
    // irrational here
    CHECK_FALSE(power_is_integer(F(8), 1.0 / 3, &out));
    CHECK_FALSE(power_is_integer(F(12), 0.5, &out));

    CHECK(floor_power(F(10), 0.5) == 3);
    CHECK(floor_power(F(100), 0.5) == 10);
    CHECK(floor_power(F(1), 0.7) == 1);
}

TEST_CASE("integer vs power comparisons handle exact ties") {
    CHECK(compare_int_vs_power(8, F(4), 1.5) == std::strong_ordering::equal);
    CHECK(compare_int_vs_power(10, F(100), 0.5) == std::strong_ordering::equal);
    CHECK(compare_int_vs_power(3, F(10), 0.5) == std::strong_ordering::less);
    CHECK(compare_int_vs_power(4, F(10), 0.5) == std::strong_ordering::greater);
}

TEST_CASE("exponent window hulls") {
    // [12^0.5, 12^0.5 + 12^0.3] ~ [3.464, 5.571]
    IntegerWindow w = exponent_window_hull(F(12), 0.5, 0.3);
    CHECK(w.lo == 4);
    CHECK(w.hi == 5);
    // exact lower endpoint: [10, 10 + 100^0.3]
    w = exponent_window_hull(F(100), 0.5, 0.3);
    CHECK(w.lo == 10);
    CHECK(w.hi == 13);  // 10 + 3.981
}

TEST_CASE("log-product comparison detects multiplicative ties") {
    // log 2 * log 16 == log 4 * log 4
    CHECK(cmp_log_products(2, 16, 4, 4) == std::strong_ordering::equal);
    CHECK(cmp_log_products(2, 8, 4, 4) == std::strong_ordering::less);
    // (2 log 3)^2 vs log 3 * 3 log 3: 4 > 3
    CHECK(cmp_log_products(9, 9, 3, 27) == std::strong_ordering::greater);
    CHECK(cmp_log_products(1, 5, 1, 7) == std::strong_ordering::equal);
}
