#include "divwin/witness.hpp"

#include "divwin/hpreal.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace divwin {

namespace {

double log_of_mpz(const mpz_class& z) {
    signed long e;
    double mant = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(mant) + e * std::log(2.0);
}

FactoredInteger merge_product(const FactoredInteger& a, const FactoredInteger& b) {
    std::map<mpz_class, unsigned> exps;
    for (const auto& pp : a.factors()) exps[pp.prime] += pp.exponent;
    for (const auto& pp : b.factors()) exps[pp.prime] += pp.exponent;
    std::vector<PrimePower> factors;
    for (const auto& [p, e] : exps) factors.push_back({p, e});
    return FactoredInteger::from_factors(std::move(factors));
}

mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// all products of exactly r distinct elements
void subset_products(const std::vector<mpz_class>& primes, unsigned r,
                     std::size_t from, const mpz_class& acc,
                     std::vector<mpz_class>& out) {
    if (r == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = from; i + r <= primes.size(); ++i)
        subset_products(primes, r - 1, i + 1, acc * primes[i], out);
}

}  // namespace

std::pair<unsigned, unsigned> choose_s_r(double theta, double epsilon) {
    if (!(theta > 0 && theta <= 0.5))
        throw std::invalid_argument(
            "choose_s_r: theta must be in (0, 1/2]; the large-theta branch "
            "mirrors with 1-theta");
    if (!(epsilon > 0 && epsilon <= theta / 2))
        throw std::invalid_argument("choose_s_r: requires 0 < epsilon <= theta/2");
    double sf = 1.0 / epsilon - 1.5 / theta;
    if (sf < 1)
        throw std::invalid_argument("choose_s_r: s = floor(1/eps - 3/(2 theta)) < 1");
    unsigned s = static_cast<unsigned>(std::floor(sf));
    double ts = theta * s;
    double frac = ts - std::floor(ts);
    unsigned r;
    if (frac == 0.0)
        r = static_cast<unsigned>(ts) + 1;  // {theta s} = 0 edge
    else if (frac <= 0.5)
        r = static_cast<unsigned>(std::ceil(ts));
    else
        r = static_cast<unsigned>(std::ceil(ts)) + 1;
    if (r > s) throw std::invalid_argument("choose_s_r: r > s for these parameters");
    return {s, r};
}

WitnessReport build_witness(double theta, double epsilon, const mpz_class& M) {
    auto [s, r] = choose_s_r(theta, epsilon);
    if (M < 2) throw std::invalid_argument("build_witness: M must be >= 2");

    WitnessReport rep;
    rep.theta = theta;
    rep.epsilon = epsilon;
    rep.M = M;
    rep.s = s;
    rep.r = r;
    rep.L = std::pow(log_of_mpz(M), 2);
    {
        double ts = theta * s;
        rep.frac_edge = (ts - std::floor(ts)) == 0.0;
        rep.r_theta_ineq_ok = (r / theta) < (s + 1.5 / theta);
    }
    mpz_bin_uiui(rep.binom_target.get_mpz_t(), s, r);

    HighPrecisionReal HM(M);
    HighPrecisionReal Lhp = hp_log(HM) * hp_log(HM);

    rep.primes = primes_above(M, s);
    for (const auto& p : rep.primes)
        if (!certified_leq(HighPrecisionReal(mpz_class(p - M)), Lhp))
            throw std::invalid_argument(
                "M not sufficiently large: fewer than s primes in (M, M+L]");
    {
        std::vector<PrimePower> f;
        for (const auto& p : rep.primes) f.push_back({p, 1});
        rep.N0 = FactoredInteger::from_factors(std::move(f));
    }

    // m = max v with M^r >= v^theta M^{theta s} (1 + theta s L (M+L)^{s-1}/M^s)
    mpz_class Ms = pow_mpz(M, s);
    HighPrecisionReal lhs(pow_mpz(M, r));
    HighPrecisionReal corr =
        HighPrecisionReal(1) + HighPrecisionReal(theta) *
                                   HighPrecisionReal(mpz_class(s)) * Lhp *
                                   hp_pow(HM + Lhp, double(s - 1)) /
                                   HighPrecisionReal(Ms);
    HighPrecisionReal base = hp_pow(HighPrecisionReal(Ms), theta) * corr;
    auto pred = [&](const mpz_class& v) {
        return certified_leq(hp_pow(HighPrecisionReal(v), theta) * base, lhs);
    };
    if (!pred(1))
        throw std::invalid_argument("build_witness: window construction degenerate (m = 0)");
    mpz_class lo = 1, hi = 2;
    while (pred(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        mpz_class mid = (lo + hi) / 2;
        (pred(mid) ? lo : hi) = mid;
    }
    rep.m = lo;
    if (pred(rep.m + 1))
        throw std::logic_error("build_witness: m not maximal");
    rep.N = merge_product(factorize(rep.m), rep.N0);

    HighPrecisionReal NN(rep.N.value());
    HighPrecisionReal win_lo = hp_pow(NN, theta);
    HighPrecisionReal win_hi = win_lo + hp_pow(NN, theta - epsilon);

    std::vector<mpz_class> products;
    subset_products(rep.primes, r, 0, 1, products);
    mpz_class Mr = pow_mpz(M, r);
    for (const auto& q : products) {
        if (q < Mr) throw std::logic_error("build_witness: product below M^r");
        HighPrecisionReal qh((q));
        if (certified_leq(win_lo, qh) && certified_leq(qh, win_hi))
            ++rep.packed_count;
    }
    rep.success = (mpz_class(rep.packed_count) == rep.binom_target);
    return rep;
}

WitnessReport build_witness_large_theta(double theta, double epsilon,
                                        const mpz_class& M) {
    if (!(theta >= 0.5 && theta < 1))
        throw std::invalid_argument("build_witness_large_theta: theta must be in [1/2, 1)");
    if (!(epsilon < 1 - theta))
        throw std::invalid_argument(
            "build_witness_large_theta: epsilon >= 1 - theta; the result is "
            "k_eps(theta) >> 1, use prop4_witness");
    double tp = 1 - theta;
    auto [s, r] = choose_s_r(tp, epsilon);
    if (M < 3) throw std::invalid_argument("build_witness_large_theta: M too small");

    WitnessReport rep;
    rep.theta = theta;
    rep.epsilon = epsilon;
    rep.M = M;
    rep.s = s;
    rep.r = r;
    rep.mirrored = true;
    rep.L = std::pow(log_of_mpz(M), 2);
    {
        double ts = tp * s;
        rep.frac_edge = (ts - std::floor(ts)) == 0.0;
        rep.r_theta_ineq_ok = (r / tp) < (s + 1.5 / tp);
    }
    mpz_bin_uiui(rep.binom_target.get_mpz_t(), s, r);

    HighPrecisionReal HM(M);
    HighPrecisionReal Lhp = hp_log(HM) * hp_log(HM);

    rep.primes = primes_below(M, s);
    for (const auto& p : rep.primes)
        if (!certified_leq(HighPrecisionReal(mpz_class(M - p)), Lhp))
            throw std::invalid_argument(
                "M not sufficiently large: fewer than s primes in [M-L, M]");
    {
        std::vector<PrimePower> f;
        for (const auto& p : rep.primes) f.push_back({p, 1});
        rep.N0 = FactoredInteger::from_factors(std::move(f));
    }

    // N' = min v N1 with M^r <= v^{1-theta} M^{(1-theta)s}
    //                        (1 - (1-theta) s L / (M (1 - sL/M)^theta))
    mpz_class Ms = pow_mpz(M, s);
    HighPrecisionReal sL = HighPrecisionReal(mpz_class(s)) * Lhp;
    HighPrecisionReal inner = HighPrecisionReal(1) - sL / HM;
    if (!certified_less(HighPrecisionReal(0), inner))
        throw std::invalid_argument("M not sufficiently large: sL/M >= 1");
    HighPrecisionReal fac =
        HighPrecisionReal(1) -
        HighPrecisionReal(tp) * sL / (HM * hp_pow(inner, theta));
    if (!certified_less(HighPrecisionReal(0), fac))
        throw std::invalid_argument("M not sufficiently large: correction factor <= 0");
    HighPrecisionReal lhs(pow_mpz(M, r));
    HighPrecisionReal base = hp_pow(HighPrecisionReal(Ms), tp) * fac;
    auto pred = [&](const mpz_class& v) {
        return certified_leq(lhs, hp_pow(HighPrecisionReal(v), tp) * base);
    };
    mpz_class lo = 1, hi = 2;
    if (!pred(1)) {
        while (!pred(hi)) {
            lo = hi;
            hi *= 2;
        }
        while (hi - lo > 1) {
            mpz_class mid = (lo + hi) / 2;
            (pred(mid) ? hi : lo) = mid;
        }
        rep.m = hi;
    } else {
        rep.m = 1;
    }
    rep.N = merge_product(factorize(rep.m), rep.N0);

    HighPrecisionReal NN(rep.N.value());
    HighPrecisionReal win_hi = hp_pow(NN, tp);
    HighPrecisionReal win_lo =
        win_hi - HighPrecisionReal(0.5) * hp_pow(NN, tp - epsilon);

    // complementary window [N'^theta, N'^theta + 1.2 N'^{theta-eps}]
    HighPrecisionReal cw_lo = hp_pow(NN, theta);
    HighPrecisionReal cw_hi =
        cw_lo + HighPrecisionReal(1.2) * hp_pow(NN, theta - epsilon);

    std::vector<mpz_class> products;
    subset_products(rep.primes, r, 0, 1, products);
    for (const auto& q : products) {
        HighPrecisionReal qh(q);
        if (certified_leq(win_lo, qh) && certified_leq(qh, win_hi))
            ++rep.packed_count;
        if (mpz_divisible_p(rep.N.value().get_mpz_t(), q.get_mpz_t())) {
            HighPrecisionReal comp(mpz_class(rep.N.value() / q));
            if (certified_leq(cw_lo, comp) && certified_leq(comp, cw_hi))
                ++rep.complement_count;
        }
    }
    rep.success = (mpz_class(rep.packed_count) == rep.binom_target);
    return rep;
}

Prop4Witness prop4_witness(double theta, double epsilon, const mpz_class& m) {
    if (!(theta > 0 && theta <= 0.5))
        throw std::invalid_argument(
            "prop4_witness: theta must be in (0, 1/2]; use the complementary "
            "transform for theta > 1/2");
    if (!(epsilon > 0 && epsilon < theta))
        throw std::invalid_argument("prop4_witness: requires 0 < epsilon < theta");
    if (m < 2) throw std::invalid_argument("prop4_witness: m must be >= 2");

    // smallest v with m < v^theta, i.e. v = floor(m^{1/theta}) + 1
    double x = 1.0 / theta;
    FactoredInteger mf = factorize(m);
    Prop4Witness w;
    w.v = floor_power(mf, x) + 1;
    mpz_class k = (w.v - 1) / m;
    if (k == 0)
        throw std::invalid_argument("prop4_witness: m too small, no multiple in [v-m, v-1]");
    w.n0 = k * m;
    w.divisor = m;

    // n0^theta <= m in the equivalent form n0 <= m^{1/theta}; true by
    // construction since n0 <= v - 1 = floor(m^{1/theta})
    if (compare_int_vs_power(w.n0, mf, x) == std::strong_ordering::greater)
        throw std::runtime_error("prop4_witness: n0^theta <= m failed");
    HighPrecisionReal rhs =
        hp_pow(HighPrecisionReal(w.n0), theta) +
        HighPrecisionReal(1.1 * theta) * hp_pow(HighPrecisionReal(w.n0), 2 * theta - 1);
    if (certified_compare(HighPrecisionReal(m), rhs) ==
        std::strong_ordering::greater)
        throw std::runtime_error(
            "prop4_witness: m <= n0^theta + 1.1 theta n0^{2 theta - 1} failed "
            "(m too small)");
    return w;
}

StirlingDiagnostic stirling_diagnostic(unsigned s, unsigned r, double theta,
                                       double epsilon) {
    if (r > s) throw std::invalid_argument("stirling_diagnostic: requires r <= s");
    StirlingDiagnostic d;
    mpz_bin_uiui(d.exact.get_mpz_t(), s, r);
    double base = std::pow(theta, -theta) * std::pow(1 - theta, -(1 - theta));
    d.closed_form = std::sqrt(epsilon * theta * theta * theta) *
                    std::pow(base, 1.0 / epsilon);
    return d;
}

}  // namespace divwin
