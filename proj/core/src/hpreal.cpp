#include "divwin/hpreal.hpp"

#include <cstdlib>
#include <cmath>

namespace divwin {

mpfr_prec_t default_precision() {
    static mpfr_prec_t prec = [] {
        const char* env = std::getenv("DIVWIN_PREC_BITS");
        if (env) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 64 && v <= kPrecisionCap) return static_cast<mpfr_prec_t>(v);
        }
        return static_cast<mpfr_prec_t>(128);
    }();
    return prec;
}

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_nan(lo_);
    mpfr_set_nan(hi_);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_integer(const mpz_class& z, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_rational(const mpq_class& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_double(double d, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_d(r.lo_, d, MPFR_RNDD);
    mpfr_set_d(r.hi_, d, MPFR_RNDU);
    return r;
}

bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_); }

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

double Interval::midpoint_double() const {
    double a = mpfr_get_d(lo_, MPFR_RNDN);
    double b = mpfr_get_d(hi_, MPFR_RNDN);
    return 0.5 * (a + b);
}

Interval add(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval sub(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval neg(const Interval& a) {
    Interval r(a.prec_);
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

Interval mul(const Interval& a, const Interval& b) {
    mpfr_prec_t prec = std::max(a.prec_, b.prec_);
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    // min over the four endpoint products, rounded down
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // max, rounded up
    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval div(const Interval& a, const Interval& b) {
    if (b.contains_zero())
        throw std::domain_error("interval division by interval containing zero");
    mpfr_prec_t prec = std::max(a.prec_, b.prec_);
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval ival_log(const Interval& a) {
    if (mpfr_sgn(a.lo()) <= 0)
        throw std::domain_error("interval log of non-positive value");
    Interval r(a.prec_);
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval ival_exp(const Interval& a) {
    Interval r(a.prec_);
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval ival_sqrt(const Interval& a) {
    if (mpfr_sgn(a.lo()) < 0)
        throw std::domain_error("interval sqrt of negative value");
    Interval r(a.prec_);
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

HighPrecisionReal::HighPrecisionReal(const mpz_class& z)
    : HighPrecisionReal(Eval([z](mpfr_prec_t p) { return Interval::from_integer(z, p); })) {}

HighPrecisionReal::HighPrecisionReal(const mpq_class& q)
    : HighPrecisionReal(Eval([q](mpfr_prec_t p) { return Interval::from_rational(q, p); })) {}

HighPrecisionReal::HighPrecisionReal(double d)
    : HighPrecisionReal(Eval([d](mpfr_prec_t p) { return Interval::from_double(d, p); })) {}

double HighPrecisionReal::to_double() const {
    return eval(default_precision()).midpoint_double();
}

HighPrecisionReal operator+(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    auto ea = a.eval_, eb = b.eval_;
    return HighPrecisionReal([ea, eb](mpfr_prec_t p) { return add((*ea)(p), (*eb)(p)); });
}

HighPrecisionReal operator-(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    auto ea = a.eval_, eb = b.eval_;
    return HighPrecisionReal([ea, eb](mpfr_prec_t p) { return sub((*ea)(p), (*eb)(p)); });
}

HighPrecisionReal operator*(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    auto ea = a.eval_, eb = b.eval_;
    return HighPrecisionReal([ea, eb](mpfr_prec_t p) { return mul((*ea)(p), (*eb)(p)); });
}

HighPrecisionReal operator/(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    auto ea = a.eval_, eb = b.eval_;
    return HighPrecisionReal([ea, eb](mpfr_prec_t p) { return div((*ea)(p), (*eb)(p)); });
}

HighPrecisionReal operator-(const HighPrecisionReal& a) {
    auto ea = a.eval_;
    return HighPrecisionReal([ea](mpfr_prec_t p) { return neg((*ea)(p)); });
}

HighPrecisionReal hp_log(const HighPrecisionReal& x) {
    auto e = [x](mpfr_prec_t p) { return ival_log(x.eval(p)); };
    return HighPrecisionReal(HighPrecisionReal::Eval(e));
}

HighPrecisionReal hp_exp(const HighPrecisionReal& x) {
    auto e = [x](mpfr_prec_t p) { return ival_exp(x.eval(p)); };
    return HighPrecisionReal(HighPrecisionReal::Eval(e));
}

HighPrecisionReal hp_sqrt(const HighPrecisionReal& x) {
    auto e = [x](mpfr_prec_t p) { return ival_sqrt(x.eval(p)); };
    return HighPrecisionReal(HighPrecisionReal::Eval(e));
}

HighPrecisionReal hp_pow(const HighPrecisionReal& x, double e) {
    if (e == 0.0) return HighPrecisionReal(mpz_class(1));
    return hp_exp(HighPrecisionReal(e) * hp_log(x));
}

std::strong_ordering certified_compare(const HighPrecisionReal& a,
                                       const HighPrecisionReal& b,
                                       mpfr_prec_t start) {
    if (start == 0) start = default_precision();
    for (mpfr_prec_t prec = start; prec <= kPrecisionCap; prec *= 2) {
        Interval ia = a.eval(prec);
        Interval ib = b.eval(prec);
        if (mpfr_less_p(ia.hi(), ib.lo())) return std::strong_ordering::less;
        if (mpfr_greater_p(ia.lo(), ib.hi())) return std::strong_ordering::greater;
        if (ia.is_point() && ib.is_point() && mpfr_equal_p(ia.lo(), ib.lo()))
            return std::strong_ordering::equal;
    }
    throw PrecisionExhausted("comparison undecided at precision cap");
}

}  // namespace divwin
