#include "divwin/split.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "divwin/window.hpp"

namespace divwin {

bool lemma1_check(const std::vector<mpz_class>& d, long t) {
    if (d.empty()) throw std::invalid_argument("lemma1_check: empty tuple");
    for (const auto& x : d)
        if (x < 1) throw std::invalid_argument("lemma1_check: d_i must be >= 1");

    mpz_class lcm = 1;
    for (const auto& x : d) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_mpz_t());

    mpz_class lhs;
    unsigned long texp = static_cast<unsigned long>(t * (t + 1) / 2);  // >= 0
    mpz_pow_ui(lhs.get_mpz_t(), lcm.get_mpz_t(), texp);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
            lhs *= g;
        }

    mpz_class prod = 1;
    for (const auto& x : d) prod *= x;
    if (t >= 0) {
        mpz_class rhs;
        mpz_pow_ui(rhs.get_mpz_t(), prod.get_mpz_t(), static_cast<unsigned long>(t));
        return lhs >= rhs;
    }
    // lhs >= prod^t with t < 0  <=>  lhs * prod^{-t} >= 1, always true
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), prod.get_mpz_t(), static_cast<unsigned long>(-t));
    return lhs * scale >= 1;
}

std::vector<std::size_t> lemma2_order(
    const std::vector<std::pair<double, double>>& pairs) {
    double sx = 0, sy = 0;
    for (const auto& [x, y] : pairs) {
        if (!(x > 0 && y > 0))
            throw std::invalid_argument("lemma2_order: pairs must be positive");
        sx += x;
        sy += y;
    }
    if (sx > sy)
        throw std::invalid_argument("lemma2_order requires sum x <= sum y");
    std::vector<std::size_t> order;
    order.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].first <= pairs[i].second) order.push_back(i);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (!(pairs[i].first <= pairs[i].second)) order.push_back(i);
    return order;
}

PairSequence pair_sequence(const FactoredInteger& n) {
    ArithProfile pr = profile(n);
    if (pr.tau < 2) throw std::invalid_argument("pair_sequence requires tau(n) >= 2");
    double log_tau = std::log(pr.tau.get_d());
    signed long exp2n;
    double mant = mpz_get_d_2exp(&exp2n, n.value().get_mpz_t());
    double log_n = (std::log2(mant) + exp2n) * std::numbers::ln2_v<double>;

    PairSequence seq;
    for (const auto& pp : n.factors()) {
        seq.rho.push_back(std::log(pp.exponent + 1.0) / log_tau);
        seq.theta.push_back(pp.exponent * std::log(pp.prime.get_d()) / log_n);
    }
    return seq;
}

namespace {

// prime power p_i^{beta_i} as mpz
mpz_class prime_power(const PrimePower& pp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    return r;
}

}  // namespace

SplitResult theorem1_split(const FactoredInteger& n, double theta, double eta) {
    ArithProfile pr = profile(n);
    if (pr.tau < 3) throw std::invalid_argument("theorem1_split requires tau(n) >= 3");
    if (!(0 < eta && eta < theta && theta < 1))
        throw std::invalid_argument("theorem1_split requires 0 < eta < theta < 1");

    SplitResult res;
    res.delta = 1.0 / std::log(pr.tau.get_d());

    double x = xi(theta, eta).value;
    if (res.delta >= x) {
        res.regime = SplitRegime::TrivialDelta;
        return res;
    }
    double tot = theta * (1 - theta);
    if (eta < theta * theta - tot * tot * res.delta) {
        res.regime = SplitRegime::Prop1Regime;
        return res;
    }

    DeltaExponent de = alpha_delta(theta, eta, res.delta);
    res.alpha_used = de.value;
    res.candidate = de.candidate;

    // Classify rho_i <= theta_i exactly:
    //   log(beta_i+1)/log tau <= beta_i log p_i / log n
    //   <=> log(beta_i+1) log n <= log(p_i^beta_i) log tau
    const auto& factors = n.factors();
    std::vector<bool> non_deficient(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        mpz_class A(factors[i].exponent + 1);
        non_deficient[i] =
            cmp_log_products(A, n.value(), prime_power(factors[i]), pr.tau) !=
            std::strong_ordering::greater;
    }
    res.permutation.reserve(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (non_deficient[i]) res.permutation.push_back(i);
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (!non_deficient[i]) res.permutation.push_back(i);

    // post-hoc prefix verification; a wrong construction cannot pass silently
    {
        mpz_class A = 1, B = 1;
        for (std::size_t t = 0; t < res.permutation.size(); ++t) {
            std::size_t i = res.permutation[t];
            A *= factors[i].exponent + 1;
            B *= prime_power(factors[i]);
            if (cmp_log_products(A, n.value(), B, pr.tau) ==
                std::strong_ordering::greater)
                throw std::logic_error("theorem1_split: prefix property violated");
        }
    }

    // minimal s with sum_{i<=s} theta_i >= 1 - alpha, i.e. B_s >= n^{1-alpha}
    double target = 1.0 - res.alpha_used;
    mpz_class B = 1;
    std::size_t s = 0;
    for (std::size_t t = 0; t < res.permutation.size(); ++t) {
        B *= prime_power(factors[res.permutation[t]]);
        if (compare_int_vs_power(B, n, target) != std::strong_ordering::less) {
            s = t + 1;
            break;
        }
    }
    if (s == 0) throw std::logic_error("theorem1_split: no valid s (sum theta = 1)");
    res.s = s;

    std::vector<PrimePower> b_factors, a_factors;
    std::vector<bool> in_b(factors.size(), false);
    for (std::size_t t = 0; t < s; ++t) in_b[res.permutation[t]] = true;
    for (std::size_t i = 0; i < factors.size(); ++i)
        (in_b[i] ? b_factors : a_factors).push_back(factors[i]);
    res.b = FactoredInteger::from_factors(std::move(b_factors));
    res.a = FactoredInteger::from_factors(std::move(a_factors));
    res.regime = SplitRegime::Split;
    return res;
}

bool tau_b_check(const SplitResult& split, const FactoredInteger& n) {
    if (split.regime != SplitRegime::Split) return true;
    ArithProfile pn = profile(n);
    mpz_class tau_b = profile(split.b).tau;
    double e = 1.0 - split.alpha_used;
    // tau(b) <= 2 V(n) tau(n)^{1-alpha}
    mpz_class pow_exact;
    FactoredInteger tau_f = factorize(pn.tau);
    if (power_is_integer(tau_f, e, &pow_exact))
        return tau_b <= 2 * pn.v_max * pow_exact;
    HighPrecisionReal rhs =
        HighPrecisionReal(mpz_class(2 * pn.v_max)) *
        hp_pow(HighPrecisionReal(pn.tau), e);
    return certified_leq(HighPrecisionReal(tau_b), rhs);
}

bool divisor_identity_check(const FactoredInteger& n, const SplitResult& split,
                            double theta, double eta, std::uint64_t budget) {
    if (split.regime != SplitRegime::Split) return true;
    IntegerWindow hull = exponent_window_hull(n, theta, eta);
    std::uint64_t lhs = count_in_hull(divisors(n, budget), hull.lo, hull.hi);

    auto a_divs = divisors(split.a, budget);
    std::uint64_t rhs = 0;
    for (const auto& e : divisors(split.b, budget)) {
        // lo <= e*d <= hi  <=>  ceil(lo/e) <= d <= floor(hi/e)
        mpz_class dlo, dhi;
        mpz_cdiv_q(dlo.get_mpz_t(), hull.lo.get_mpz_t(), e.get_mpz_t());
        mpz_fdiv_q(dhi.get_mpz_t(), hull.hi.get_mpz_t(), e.get_mpz_t());
        rhs += count_in_hull(a_divs, dlo, dhi);
    }
    return lhs == rhs;
}

}  // namespace divwin
