#include <doctest.h>

#include <cmath>

#include "divwin/witness.hpp"

using namespace divwin;
using doctest::Approx;

TEST_CASE("s and r selection") {
    CHECK(choose_s_r(0.4, 0.1) == std::pair<unsigned, unsigned>{6, 3});
    CHECK(choose_s_r(0.5, 0.1) == std::pair<unsigned, unsigned>{7, 4});
    CHECK(choose_s_r(0.25, 0.05) == std::pair<unsigned, unsigned>{14, 4});
    CHECK_THROWS_AS(choose_s_r(0.6, 0.1), std::invalid_argument);   // theta > 1/2
    CHECK_THROWS_AS(choose_s_r(0.4, 0.3), std::invalid_argument);   // eps > theta/2
}

TEST_CASE("stirling diagnostic") {
    StirlingDiagnostic d = stirling_diagnostic(6, 3, 0.4, 0.1);
    CHECK(d.exact == 20);
    double base = std::pow(0.4, -0.4) * std::pow(0.6, -0.6);
    CHECK(d.closed_form == Approx(std::sqrt(0.1 * 0.064) * std::pow(base, 10.0)));
    CHECK(stirling_diagnostic(7, 4, 0.5, 0.1).exact == 35);
    CHECK_THROWS_AS(stirling_diagnostic(3, 7, 0.5, 0.1), std::invalid_argument);
}

TEST_CASE("prop4 witnesses") {
    Prop4Witness w = prop4_witness(0.5, 0.2, 10);
    CHECK(w.v == 101);
    CHECK(w.n0 == 100);  // 100^0.5 = 10 = m exactly

    w = prop4_witness(0.4, 0.1, 100);
    CHECK(w.v == 100001);
    CHECK(w.n0 == 100000);

    w = prop4_witness(0.3, 0.1, 50);
    CHECK(w.n0 % 50 == 0);
    CHECK(w.n0 >= w.v - 50);
    CHECK(w.n0 <= w.v - 1);

    CHECK_THROWS_AS(prop4_witness(0.7, 0.1, 100), std::invalid_argument);
}

TEST_CASE("build_witness rejects small M with a clear error") {
    CHECK_THROWS_WITH_AS(build_witness(0.4, 0.1, 10),
                         doctest::Contains("M not sufficiently large"),
                         std::invalid_argument);
}

TEST_CASE("build_witness transcript at moderate M") {
    WitnessReport rep = build_witness(0.4, 0.1, 10000);
    CHECK(rep.s == 6);
    CHECK(rep.r == 3);
    CHECK(rep.binom_target == 20);
    CHECK(rep.primes.size() == 6);
    for (const auto& p : rep.primes) CHECK(p > 10000);
    CHECK(rep.N0.factors().size() == 6);
    CHECK(rep.m >= 1);
    CHECK(rep.N.value() == rep.m * rep.N0.value());
    CHECK(rep.packed_count <= 20);
    CHECK(rep.r_theta_ineq_ok);
    // success at moderate M is not guaranteed and is reported honestly;
    // the acceptance suite pins an M that packs all 20 products
}

TEST_CASE("large-theta mirror") {
    WitnessReport rep = build_witness_large_theta(0.6, 0.1, 10000);
    CHECK(rep.mirrored);
    CHECK(rep.s == 6);
    CHECK(rep.r == 3);
    for (const auto& p : rep.primes) CHECK(p <= 10000);
    CHECK(rep.N.value() == rep.m * rep.N0.value());
    CHECK(rep.packed_count <= 20);

    CHECK_THROWS_WITH_AS(build_witness_large_theta(0.6, 0.5, 10000),
                         doctest::Contains("prop4"), std::invalid_argument);
}
