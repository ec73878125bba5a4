#include <doctest.h>

#include <cmath>

#include "divwin/bounds.hpp"

using namespace divwin;
using doctest::Approx;

TEST_CASE("xi case table") {
    auto p = xi(0.5, 0.2);
    CHECK(p.value == Approx(1.0));
    CHECK(p.case_label == XiCase::EtaLeThetaSq);

    p = xi(0.4, 0.18);
    CHECK(p.value == Approx(8.0 / 9));
    CHECK(p.case_label == XiCase::SmallThetaFar);

    p = xi(0.7, 0.6);  // 2 eta = 1.2 > 3 theta - 1 = 1.1
    CHECK(p.value == Approx(0.4));
    CHECK(p.case_label == XiCase::LargeThetaNear);

    p = xi(0.5, 0.3);  // 2 eta > theta
    CHECK(p.value == Approx(0.8));
    CHECK(p.case_label == XiCase::SmallThetaNear);

    p = xi(0.7, 0.52);  // 2 eta = 1.04 <= 1.1
    CHECK(p.value == Approx(0.75));
    CHECK(p.case_label == XiCase::LargeThetaFar);

    CHECK_THROWS_AS(xi(0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(xi(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("xi is continuous at its case boundaries") {
    const double h = 1e-9;
    // eta = theta^2
    CHECK(std::abs(xi(0.5, 0.25 - h).value - xi(0.5, 0.25 + h).value) < 1e-6);
    // 2 eta = theta (theta <= 1/2)
    CHECK(std::abs(xi(0.4, 0.2 - h).value - xi(0.4, 0.2 + h).value) < 1e-6);
    // 2 eta = 3 theta - 1 (theta > 1/2)
    CHECK(std::abs(xi(0.6, 0.4 - h).value - xi(0.6, 0.4 + h).value) < 1e-6);
    CHECK(std::abs(xi(0.7, 0.55 - h).value - xi(0.7, 0.55 + h).value) < 1e-6);
    // theta = 1/2 boundary between the small and large branches
    CHECK(std::abs(xi(0.5 - h, 0.3).value - xi(0.5 + h, 0.3).value) < 1e-6);
}

TEST_CASE("alpha closed form") {
    CHECK(alpha_closed_form(0.4, 0.18).value == Approx(8.0 / 9));
    CHECK(alpha_closed_form(0.7, 0.52).value == Approx(0.75));
    CHECK(alpha_closed_form(0.5, 0.25).value == Approx(1.0));
    CHECK_THROWS_AS(alpha_closed_form(0.4, 0.1), std::invalid_argument);  // eta < theta^2
}

TEST_CASE("alpha agrees with xi on its domain") {
    for (int i = 1; i <= 9; ++i) {
        double theta = i / 10.0;
        for (int j = 0; j < 8; ++j) {
            double eta = theta * theta + (j + 0.5) * (theta - theta * theta) / 8.5;
            CHECK(alpha_closed_form(theta, eta).value ==
                  Approx(xi(theta, eta).value).epsilon(1e-12));
        }
    }
}

TEST_CASE("alpha oracle") {
    CHECK(alpha_oracle(0.4, 0.18, 1000) == Approx(8.0 / 9).epsilon(1e-6));
    CHECK(alpha_oracle(0.5, 0.25, 1000) == Approx(1.0).epsilon(1e-6));
    CHECK(alpha_oracle(0.7, 0.6, 1000) == Approx(0.4).epsilon(1e-5));
}

TEST_CASE("alpha delta candidates and sandwich") {
    DeltaExponent de = alpha_delta(0.4, 0.18, 0.01);
    CHECK(de.candidate == DeltaCandidate::Alpha0);
    CHECK(de.value >= 8.0 / 9 - 0.01 - 1e-12);
    CHECK(de.value <= 8.0 / 9 + 1e-12);

    de = alpha_delta(0.5, 0.3, 0.05);
    CHECK(de.candidate == DeltaCandidate::DeltaOver);
    CHECK(de.epsilon_var == Approx(0.0625 * 0.05));
    CHECK(de.value == Approx(0.8 / (1 + 4 * 0.0625 * 0.05)));

    // delta -> 0 recovers the closed form
    CHECK(alpha_delta(0.45, 0.25, 1e-7).value ==
          Approx(alpha_closed_form(0.45, 0.25).value).epsilon(1e-5));
    CHECK(alpha_delta(0.7, 0.52, 1e-7).value == Approx(0.75).epsilon(1e-5));

    CHECK_THROWS_AS(alpha_delta(0.4, 0.01, 0.01), std::invalid_argument);
}

TEST_CASE("prop1 explicit cap") {
    CHECK(prop1_bound(0.5, 0.01) == Approx(76));
    CHECK(prop1_bound(0.5, 0.2) == Approx(17));
    CHECK(prop1_bound(0.1, 0.005) == Approx(55));
    CHECK_THROWS_AS(prop1_bound(0.5, 0.3), std::invalid_argument);  // eps >= theta^2
}

TEST_CASE("theorem1 rhs diagnostic") {
    FactoredInteger n = factorize(mpz_class(2016));  // tau = 36, V = 5
    double expect = std::pow(36.0, 0.2) * 5 * std::log(36.0) / 0.25;
    CHECK(theorem1_rhs(n, 0.5, 0.3, 1.0) == Approx(expect).epsilon(1e-9));
    // xi = 1 case: no tau power
    double flat = 5 * std::log(36.0) / 0.25;
    CHECK(theorem1_rhs(n, 0.5, 0.2, 1.0) == Approx(flat).epsilon(1e-9));
    CHECK_THROWS_AS(theorem1_rhs(factorize(mpz_class(7)), 0.5, 0.3, 1.0),
                    std::domain_error);
}
