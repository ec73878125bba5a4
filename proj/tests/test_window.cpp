#include <doctest.h>

#include "divwin/window.hpp"

using namespace divwin;

namespace {
FactoredInteger F(unsigned long n) { return factorize(mpz_class(n)); }
}  // namespace

TEST_CASE("absolute window counts") {
    CHECK(count_window(F(12), AbsoluteWindow{3, 3}) == 3);  // 3, 4, 6
    CHECK(count_window(F(1), AbsoluteWindow{1, 1}) == 1);
    CHECK(count_window(F(100), AbsoluteWindow{10, 0}) == 1);  // point at sqrt(n)
    CHECK(count_window(F(100), AbsoluteWindow{mpq_class(19, 2), 1}) == 1);
}

TEST_CASE("exponent window counts") {
    // [12^0.5, 12^0.5 + 12^0.3] contains only d = 4
    CHECK(count_window(F(12), ExponentWindow{0.5, 0.3}) == 1);
    // exact-tie endpoints: [100^0.5, 100^0.5 + 100^0.5] = [10, 20]
    CHECK(count_window(F(100), ExponentWindow{0.5, 0.5}) == 2);  // 10, 20
}

TEST_CASE("point window at sqrt(n) counts at most one divisor") {
    for (unsigned long n : {99ul, 100ul, 101ul, 144ul, 150ul}) {
        FactoredInteger f = F(n);
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), f.value().get_mpz_t());
        std::uint64_t c = count_window(f, AbsoluteWindow{mpq_class(r), 0});
        CHECK(c <= 1);
    }
}

TEST_CASE("count is monotone in Y") {
    FactoredInteger f = F(360);
    std::uint64_t prev = 0;
    for (int y = 0; y <= 40; ++y) {
        std::uint64_t c = count_window(f, AbsoluteWindow{5, mpq_class(y)});
        CHECK(c >= prev);
        prev = c;
    }
}

TEST_CASE("reflection identity") {
    CHECK(reflection_check(F(12), 3, 3));  // reflected window is [2, 4]
    CHECK(reflection_check(F(100), 10, 10));
    CHECK(reflection_check(F(97), mpq_class(1, 2), mpq_class(1, 2)));
    // the identity needs X + Y <= n so the reflected window is well-formed
    CHECK_THROWS_AS(reflection_check(F(12), 12, 1), std::invalid_argument);
    CHECK_THROWS_AS(reflection_check(F(12), 3, 4), std::invalid_argument);
}

TEST_CASE("gap bound h > d^2/n beyond sqrt(n)") {
    CHECK(gap_check(F(100)));
    CHECK(gap_check(F(36)));
    CHECK(gap_check(F(97)));  // vacuous for primes
}

TEST_CASE("conjecture scan basics") {
    ScanResult r = conjecture_scan(1, 1, 0.5, 0.2);
    REQUIRE(r.maxima.size() == 1);
    CHECK(r.maxima[0].n == 1);
    CHECK(r.maxima[0].count == 1);

    r = conjecture_scan(12, 12, 0.5, 0.2);
    REQUIRE(r.maxima.size() == 1);
    CHECK(r.maxima[0].n == 12);
    CHECK(r.maxima[0].count == 1);
}

TEST_CASE("scan output is independent of the job count") {
    ScanResult a = conjecture_scan(1, 2000, 0.5, 0.1, 1);
    ScanResult b = conjecture_scan(1, 2000, 0.5, 0.1, 4);
    REQUIRE(a.maxima.size() == b.maxima.size());
    for (std::size_t i = 0; i < a.maxima.size(); ++i) {
        CHECK(a.maxima[i].n == b.maxima[i].n);
        CHECK(a.maxima[i].count == b.maxima[i].count);
    }
    CHECK(a.errors == b.errors);
    // running maxima are strictly increasing in count and n
    for (std::size_t i = 1; i < a.maxima.size(); ++i) {
        CHECK(a.maxima[i].count > a.maxima[i - 1].count);
        CHECK(a.maxima[i].n > a.maxima[i - 1].n);
    }
}
