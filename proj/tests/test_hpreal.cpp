#include <doctest.h>

#include "divwin/hpreal.hpp"

#include <gmpxx.h>

using namespace divwin;

TEST_CASE("certified comparisons decide strict inequalities") {
    CHECK(certified_less(HighPrecisionReal(1), hp_sqrt(HighPrecisionReal(2))));
    CHECK(certified_less(hp_sqrt(HighPrecisionReal(2)), HighPrecisionReal(mpz_class(2))));
    CHECK(certified_less(hp_log(HighPrecisionReal(mpz_class(2))),
                         HighPrecisionReal(mpq_class(7, 10))));
}

TEST_CASE("exact dyadic arithmetic yields point intervals and decidable ties") {
    HighPrecisionReal q(mpq_class(1, 4));
    HighPrecisionReal prod = q * HighPrecisionReal(4);
    CHECK(certified_compare(prod, HighPrecisionReal(1)) == std::strong_ordering::equal);
    CHECK(certified_compare(HighPrecisionReal(0.5) + HighPrecisionReal(0.5),
                            HighPrecisionReal(1)) == std::strong_ordering::equal);
}

TEST_CASE("undecidable transcendental ties exhaust precision explicitly") {
    // sqrt(2)^2 == 2, but interval sqrt never collapses to a point
    HighPrecisionReal s = hp_sqrt(HighPrecisionReal(mpz_class(2)));
    CHECK_THROWS_AS(certified_compare(s * s, HighPrecisionReal(mpz_class(2))),
                    PrecisionExhausted);
}

TEST_CASE("decisions are stable under precision escalation") {
    HighPrecisionReal a = hp_log(HighPrecisionReal(mpz_class(3)));
    HighPrecisionReal b(mpq_class(1098612, 1000000));  // just below ln 3
    auto at128 = certified_compare(a, b, 128);
    auto at1024 = certified_compare(a, b, 1024);
    CHECK(at128 == std::strong_ordering::greater);
    CHECK(at128 == at1024);
}

TEST_CASE("default precision respects the documented floor") {
    CHECK(default_precision() >= 64);
    CHECK(default_precision() <= 4096);
}
