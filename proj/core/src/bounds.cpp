#include "divwin/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include <mpfr.h>

namespace divwin {

namespace {

constexpr mpfr_prec_t kBoundsPrec = 128;

// RAII mpfr scalar at the bounds working precision
class F {
public:
    F() { mpfr_init2(v_, kBoundsPrec); }
    explicit F(double d) : F() { mpfr_set_d(v_, d, MPFR_RNDN); }
    F(const F& o) : F() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    F& operator=(const F& o) {
        mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~F() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    double d(mpfr_rnd_t r = MPFR_RNDN) const { return mpfr_get_d(v_, r); }

private:
    mpfr_t v_;
};

F fmul(const F& a, const F& b, mpfr_rnd_t r) {
    F out;
    mpfr_mul(out.get(), a.get(), b.get(), r);
    return out;
}
F fdiv(const F& a, const F& b, mpfr_rnd_t r) {
    F out;
    mpfr_div(out.get(), a.get(), b.get(), r);
    return out;
}
F fsub(const F& a, const F& b, mpfr_rnd_t r) {
    F out;
    mpfr_sub(out.get(), a.get(), b.get(), r);
    return out;
}
F fadd(const F& a, const F& b, mpfr_rnd_t r) {
    F out;
    mpfr_add(out.get(), a.get(), b.get(), r);
    return out;
}
bool fleq(const F& a, const F& b) { return mpfr_lessequal_p(a.get(), b.get()); }

void check_xi_domain(double theta, double eta) {
    if (!(0 < eta && eta < theta && theta < 1))
        throw std::invalid_argument("xi requires 0 < eta < theta < 1");
}

}  // namespace

std::string to_string(XiCase c) {
    switch (c) {
        case XiCase::EtaLeThetaSq: return "ETA_LE_THETA_SQ";
        case XiCase::SmallThetaFar: return "SMALL_THETA_FAR";
        case XiCase::SmallThetaNear: return "SMALL_THETA_NEAR";
        case XiCase::LargeThetaFar: return "LARGE_THETA_FAR";
        case XiCase::LargeThetaNear: return "LARGE_THETA_NEAR";
    }
    return "?";
}

std::string to_string(DeltaCandidate c) {
    switch (c) {
        case DeltaCandidate::DeltaOver: return "DELTA_OVER";
        case DeltaCandidate::Alpha0: return "ALPHA0";
        case DeltaCandidate::Alpha1: return "ALPHA1";
    }
    return "?";
}

// Shared by xi and alpha_closed_form; assumes eta > theta^2 was already
// dispatched.  All boundary comparisons are exact at 128 bits since the
// inputs are doubles.
static PiecewiseExponent xi_tail(double theta, double eta) {
    F th(theta), et(eta), one(1.0), two(2.0);
    F two_eta = fmul(two, et, MPFR_RNDN);  // exact
    if (theta <= 0.5) {
        if (fleq(two_eta, th)) {
            F v = fdiv(fmul(th, th, MPFR_RNDN), et, MPFR_RNDN);
            return {v.d(), XiCase::SmallThetaFar};
        }
        F v = fmul(F(4.0), fsub(th, et, MPFR_RNDN), MPFR_RNDN);
        return {v.d(), XiCase::SmallThetaNear};
    }
    F three_th_m1 = fsub(fmul(F(3.0), th, MPFR_RNDN), one, MPFR_RNDN);  // exact
    if (fleq(two_eta, three_th_m1)) {
        F omt = fsub(one, th, MPFR_RNDN);  // exact
        F omt2 = fmul(omt, omt, MPFR_RNDN);
        F den = fsub(fadd(omt2, et, MPFR_RNDN), fmul(th, th, MPFR_RNDN), MPFR_RNDN);
        F v = fdiv(omt2, den, MPFR_RNDN);
        return {v.d(), XiCase::LargeThetaFar};
    }
    F v = fmul(F(4.0), fsub(th, et, MPFR_RNDN), MPFR_RNDN);
    return {v.d(), XiCase::LargeThetaNear};
}

PiecewiseExponent xi(double theta, double eta) {
    check_xi_domain(theta, eta);
    F th(theta), et(eta);
    F th2 = fmul(th, th, MPFR_RNDN);  // exact: 106 bits
    if (fleq(et, th2)) return {1.0, XiCase::EtaLeThetaSq};
    return xi_tail(theta, eta);
}

PiecewiseExponent alpha_closed_form(double theta, double eta) {
    check_xi_domain(theta, eta);
    F th(theta), et(eta);
    F th2 = fmul(th, th, MPFR_RNDN);
    if (!fleq(th2, et))
        throw std::invalid_argument("alpha_closed_form requires theta^2 <= eta");
    if (fleq(et, th2)) {
        // eta == theta^2: both candidate formulas give 1
        return {1.0, theta <= 0.5 ? XiCase::SmallThetaFar : XiCase::LargeThetaFar};
    }
    return xi_tail(theta, eta);
}

double alpha_oracle(double theta, double eta, int grid) {
    check_xi_domain(theta, eta);
    if (!(theta * theta <= eta))
        throw std::invalid_argument("alpha_oracle requires theta^2 <= eta");
    if (grid < 1000) throw std::invalid_argument("alpha_oracle requires grid >= 1000");

    // G(t) = alpha^2 F(t) = (theta-t)^2 - alpha (eta - t)
    auto g = [&](double alpha, double t) {
        double u = theta - t;
        return u * u - alpha * (eta - t);
    };
    auto feasible = [&](double alpha) {
        double tmax = 1.0 - alpha;
        for (int i = 0; i <= grid; ++i) {
            double t = tmax * i / grid;
            if (g(alpha, t) < 0) return false;
        }
        double vertex = theta - alpha / 2;  // minimum of G
        if (vertex > 0 && vertex < tmax && g(alpha, vertex) < 0) return false;
        return true;
    };

    if (feasible(1.0)) return 1.0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-8) {
        double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
    }
    return lo;
}

DeltaExponent alpha_delta(double theta, double eta, double delta) {
    if (!(delta <= 1))
        throw std::invalid_argument("alpha_delta requires delta <= 1");
    if (!(0 < eta && eta < theta && theta < 1))
        throw std::invalid_argument("alpha_delta requires 0 < eta < theta < 1");
    F th(theta), et(eta), one(1.0);
    F omt = fsub(one, th, MPFR_RNDN);
    F tot = fmul(th, omt, MPFR_RNDN);
    F eps = fmul(fmul(tot, tot, MPFR_RNDN), F(delta), MPFR_RNDN);
    F th2 = fmul(th, th, MPFR_RNDN);
    F lower = fsub(th2, eps, MPFR_RNDN);
    if (!(mpfr_sgn(lower.get()) > 0 && fleq(lower, et)))
        throw std::invalid_argument(
            "alpha_delta requires 0 < theta^2 - (theta(1-theta))^2 delta <= eta");

    F two_eta = fmul(F(2.0), et, MPFR_RNDN);
    F four_eps = fmul(F(4.0), eps, MPFR_RNDN);

    DeltaExponent out;
    out.epsilon_var = eps.d();

    // small-theta branch: 2 eta <= theta - 4 theta eps
    F small_rhs = fsub(th, fmul(four_eps, th, MPFR_RNDN), MPFR_RNDN);
    // large-theta branch: 2 eta <= 3 theta - 1 - 4 (1-theta) eps
    F large_rhs = fsub(fsub(fmul(F(3.0), th, MPFR_RNDN), one, MPFR_RNDN),
                       fmul(four_eps, omt, MPFR_RNDN), MPFR_RNDN);

    F value;
    if (fleq(two_eta, small_rhs)) {
        // alpha0 = (-eta + sqrt(eta^2 + 4 eps theta^2)) / (2 eps), rounded down
        F disc;
        mpfr_fma(disc.get(), four_eps.get(), th2.get(), /*+eta^2*/
                 fmul(et, et, MPFR_RNDD).get(), MPFR_RNDD);
        F root;
        mpfr_sqrt(root.get(), disc.get(), MPFR_RNDD);
        F num = fsub(root, et, MPFR_RNDD);
        value = fdiv(num, fmul(F(2.0), eps, MPFR_RNDU), MPFR_RNDD);
        out.candidate = DeltaCandidate::Alpha0;
    } else if (fleq(two_eta, large_rhs)) {
        // alpha1 with 1 - 2 theta + eta in place of eta and (1-theta)^2 in
        // place of theta^2
        F c = fadd(fsub(one, fmul(F(2.0), th, MPFR_RNDN), MPFR_RNDN), et, MPFR_RNDN);
        F omt2 = fmul(omt, omt, MPFR_RNDD);
        F disc;
        mpfr_fma(disc.get(), four_eps.get(), omt2.get(),
                 fmul(c, c, MPFR_RNDD).get(), MPFR_RNDD);
        F root;
        mpfr_sqrt(root.get(), disc.get(), MPFR_RNDD);
        F num = fsub(root, c, MPFR_RNDD);
        value = fdiv(num, fmul(F(2.0), eps, MPFR_RNDU), MPFR_RNDD);
        out.candidate = DeltaCandidate::Alpha1;
    } else {
        F delta_cap = fmul(F(4.0), fsub(th, et, MPFR_RNDD), MPFR_RNDD);
        value = fdiv(delta_cap, fadd(one, four_eps, MPFR_RNDU), MPFR_RNDD);
        out.candidate = DeltaCandidate::DeltaOver;
    }
    out.value = value.d(MPFR_RNDD);
    return out;
}

double prop1_bound(double theta, double epsilon) {
    if (!(0 < theta && theta < 1))
        throw std::invalid_argument("prop1_bound requires 0 < theta < 1");
    if (!(0 < epsilon && epsilon < theta * theta))
        throw std::invalid_argument("prop1_bound requires 0 < epsilon < theta^2");
    double tot = theta * (1 - theta);
    return std::max(4.0 / tot, 3.0 * tot / epsilon) + 1.0;
}

double theorem1_rhs(const FactoredInteger& n, double theta, double eta,
                    double constant) {
    check_xi_domain(theta, eta);
    ArithProfile pr = profile(n);
    if (pr.tau < 3)
        throw std::domain_error("theorem1_rhs: trivial case, tau(n) < 3");
    double tau = pr.tau.get_d();
    double x = xi(theta, eta).value;
    return constant * std::pow(tau, 1.0 - x) * pr.v_max * std::log(tau) /
           (theta * (1 - theta));
}

}  // namespace divwin
