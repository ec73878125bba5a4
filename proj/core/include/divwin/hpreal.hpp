// Certified real arithmetic: lazy expressions evaluated to MPFR intervals
// at escalating precision. Comparisons either decide with disjoint (or
// exactly equal point) intervals or fail once the precision cap is hit.
#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace divwin {

// Thrown when a comparison stays undecided at the precision cap.
class PrecisionExhausted : public std::runtime_error {
public:
    explicit PrecisionExhausted(const std::string& what)
        : std::runtime_error(what) {}
};

class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what)
        : std::runtime_error(what) {}
};

mpfr_prec_t default_precision();  // DIVWIN_PREC_BITS env var, else 128
inline constexpr mpfr_prec_t kPrecisionCap = 4096;

// Closed interval [lo, hi] with endpoints at a fixed working precision.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o);
    ~Interval();

    static Interval from_integer(const mpz_class& z, mpfr_prec_t prec);
    static Interval from_rational(const mpq_class& q, mpfr_prec_t prec);
    static Interval from_double(double d, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }
    bool is_point() const;
    bool contains_zero() const;
    double midpoint_double() const;

    friend Interval add(const Interval& a, const Interval& b);
    friend Interval sub(const Interval& a, const Interval& b);
    friend Interval mul(const Interval& a, const Interval& b);
    friend Interval div(const Interval& a, const Interval& b);
    friend Interval neg(const Interval& a);
    friend Interval ival_log(const Interval& a);
    friend Interval ival_exp(const Interval& a);
    friend Interval ival_sqrt(const Interval& a);

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

// Lazy real number: re-evaluated from scratch at any requested precision,
// always returning an enclosure of the exact value.
class HighPrecisionReal {
public:
    using Eval = std::function<Interval(mpfr_prec_t)>;

    HighPrecisionReal() : HighPrecisionReal(0.0) {}
    explicit HighPrecisionReal(Eval e) : eval_(std::make_shared<Eval>(std::move(e))) {}
    HighPrecisionReal(const mpz_class& z);
    HighPrecisionReal(const mpq_class& q);
    HighPrecisionReal(double d);
    HighPrecisionReal(long v) : HighPrecisionReal(mpz_class(v)) {}
    HighPrecisionReal(int v) : HighPrecisionReal(mpz_class(v)) {}

    Interval eval(mpfr_prec_t prec) const { return (*eval_)(prec); }
    double to_double() const;

    friend HighPrecisionReal operator+(const HighPrecisionReal&, const HighPrecisionReal&);
    friend HighPrecisionReal operator-(const HighPrecisionReal&, const HighPrecisionReal&);
    friend HighPrecisionReal operator*(const HighPrecisionReal&, const HighPrecisionReal&);
    friend HighPrecisionReal operator/(const HighPrecisionReal&, const HighPrecisionReal&);
    friend HighPrecisionReal operator-(const HighPrecisionReal&);

private:
    std::shared_ptr<Eval> eval_;
};

HighPrecisionReal hp_log(const HighPrecisionReal& x);
HighPrecisionReal hp_exp(const HighPrecisionReal& x);
HighPrecisionReal hp_sqrt(const HighPrecisionReal& x);
// x^e for x > 0, e an exact double exponent
HighPrecisionReal hp_pow(const HighPrecisionReal& x, double e);

// Decides a < b, a == b or a > b.  Equality is only reported when both
// enclosures are exact points; otherwise precision doubles from `start`
// up to kPrecisionCap and PrecisionExhausted is thrown.
std::strong_ordering certified_compare(const HighPrecisionReal& a,
                                       const HighPrecisionReal& b,
                                       mpfr_prec_t start = 0);

inline bool certified_less(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    return certified_compare(a, b) == std::strong_ordering::less;
}
inline bool certified_leq(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    return certified_compare(a, b) != std::strong_ordering::greater;
}

}  // namespace divwin
