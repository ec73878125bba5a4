#include <doctest.h>

#include <cmath>
#include <random>

#include "divwin/split.hpp"
#include "divwin/window.hpp"

using namespace divwin;
using doctest::Approx;

namespace {
FactoredInteger F(unsigned long n) { return factorize(mpz_class(n)); }
}  // namespace

TEST_CASE("lemma1 known cases") {
    CHECK(lemma1_check({2, 3}, 1));        // 6 * 1 >= 6, equality
    CHECK(lemma1_check({4, 6, 8}, 2));     // 24^3 * 16 >= 36864
    CHECK(lemma1_check({5}, -3));          // 5^3 >= 5^-3
    CHECK(lemma1_check({1, 1, 1}, 5));
    CHECK(lemma1_check({720720, 2, 3}, -2));
}

TEST_CASE("lemma2 ordering") {
    using P = std::vector<std::pair<double, double>>;
    CHECK(lemma2_order(P{{1, 3}, {3, 2}}) == std::vector<std::size_t>{0, 1});
    CHECK(lemma2_order(P{{3, 2}, {1, 3}}) == std::vector<std::size_t>{1, 0});
    CHECK(lemma2_order(P{{2, 2}, {2, 2}}) == std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(lemma2_order(P{{3, 1}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("lemma2 prefixes hold on random inputs") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ud(0.01, 1.0);
    for (int it = 0; it < 200; ++it) {
        std::vector<std::pair<double, double>> pairs;
        double sx = 0, sy = 0;
        for (int i = 0; i < 7; ++i) {
            double x = ud(rng), y = ud(rng);
            pairs.emplace_back(x, y);
            sx += x;
            sy += y;
        }
        if (sx > sy) continue;
        auto perm = lemma2_order(pairs);
        double px = 0, py = 0;
        for (std::size_t idx : perm) {
            px += pairs[idx].first;
            py += pairs[idx].second;
            CHECK(px <= py + 1e-12);
        }
    }
}

TEST_CASE("pair sequence") {
    PairSequence ps = pair_sequence(F(6));
    CHECK(ps.rho[0] == Approx(0.5));
    CHECK(ps.rho[1] == Approx(0.5));
    CHECK(ps.theta[0] == Approx(std::log(2.0) / std::log(6.0)));
    CHECK(ps.theta[1] == Approx(std::log(3.0) / std::log(6.0)));

    ps = pair_sequence(F(12));
    CHECK(ps.rho[0] == Approx(std::log(3.0) / std::log(6.0)));
    CHECK(ps.rho[1] == Approx(std::log(2.0) / std::log(6.0)));
    CHECK(ps.theta[0] == Approx(2 * std::log(2.0) / std::log(12.0)));
    CHECK(ps.theta[1] == Approx(std::log(3.0) / std::log(12.0)));

    ps = pair_sequence(F(128));
    REQUIRE(ps.rho.size() == 1);
    CHECK(ps.rho[0] == Approx(1.0));
    CHECK(ps.theta[0] == Approx(1.0));

    CHECK_THROWS_AS(pair_sequence(F(1)), std::invalid_argument);
}

TEST_CASE("theorem1 split on n = 120") {
    FactoredInteger n = F(120);  // tau = 16
    SplitResult sp = theorem1_split(n, 0.5, 0.3);
    REQUIRE(sp.regime == SplitRegime::Split);
    CHECK(sp.delta == Approx(1.0 / std::log(16.0)));
    CHECK(sp.a.value() * sp.b.value() == 120);
    CHECK(gcd(sp.a.value(), sp.b.value()) == 1);
    CHECK(tau_b_check(sp, n));
    CHECK(divisor_identity_check(n, sp, 0.5, 0.3));
}

TEST_CASE("theorem1 split on a prime power") {
    FactoredInteger n = F(1024);  // tau = 11
    SplitResult sp = theorem1_split(n, 0.5, 0.3);
    REQUIRE(sp.regime == SplitRegime::Split);
    CHECK(sp.s == 1);
    CHECK(sp.b.value() == 1024);
    CHECK(sp.a.value() == 1);
    CHECK(tau_b_check(sp, n));
    CHECK(divisor_identity_check(n, sp, 0.5, 0.3));
}

TEST_CASE("theorem1 split on a long squarefree product") {
    FactoredInteger n = F(2ul * 3 * 5 * 7 * 11 * 13 * 17 * 19);
    SplitResult sp = theorem1_split(n, 0.5, 0.3);
    REQUIRE(sp.regime == SplitRegime::Split);
    PairSequence ps = pair_sequence(n);
    double px = 0, py = 0;
    for (std::size_t idx : sp.permutation) {
        px += ps.rho[idx];
        py += ps.theta[idx];
        CHECK(px <= py + 1e-9);
    }
    CHECK(tau_b_check(sp, n));
    CHECK(divisor_identity_check(n, sp, 0.5, 0.3));
}

TEST_CASE("theorem1 split regimes") {
    // tau(6) = 4: delta = 1/log 4 ~ 0.72 > xi(0.7, 0.6) = 0.4
    CHECK(theorem1_split(F(6), 0.7, 0.6).regime == SplitRegime::TrivialDelta);
    // eta far below theta^2
    CHECK(theorem1_split(F(120), 0.5, 0.1).regime == SplitRegime::Prop1Regime);
    CHECK_THROWS_AS(theorem1_split(F(7), 0.5, 0.3), std::invalid_argument);
}

TEST_CASE("tau_b bound on prime powers") {
    for (unsigned k = 4; k <= 100; k += 8) {
        mpz_class n = 1;
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), k);
        FactoredInteger f = factorize(n);
        SplitResult sp = theorem1_split(f, 0.5, 0.3);
        if (sp.regime == SplitRegime::Split) CHECK(tau_b_check(sp, f));
    }
}
