#include "divwin/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace divwin {

namespace {

// log2 of an mpz with ~1e-15 relative accuracy, valid for z >= 1
double approx_log2(const mpz_class& z) {
    signed long exp;
    double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return static_cast<double>(exp) + std::log2(mant);
}

bool is_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

// Brent's variant of Pollard rho with deterministic parameters.
mpz_class brent_rho(const mpz_class& n) {
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1, ys, q = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * ((x > y) ? x - y : y - x) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack
            do {
                ys = (ys * ys + c) % n;
                mpz_class diff = (x > ys) ? x - ys : ys - x;
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    mpz_class d = brent_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

FactoredInteger FactoredInteger::from_factors(std::vector<PrimePower> factors) {
    mpz_class v = 1;
    const mpz_class* prev = nullptr;
    for (const auto& pp : factors) {
        if (pp.exponent < 1) throw std::invalid_argument("exponent must be >= 1");
        if (pp.prime < 2) throw std::invalid_argument("prime must be >= 2");
        if (prev && !(*prev < pp.prime))
            throw std::invalid_argument("primes must be strictly increasing");
        prev = &pp.prime;
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        v *= pw;
    }
    FactoredInteger f;
    f.value_ = std::move(v);
    f.factors_ = std::move(factors);
    return f;
}

FactoredInteger factorize(const mpz_class& n, unsigned max_bits) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    if (n < 0) throw std::invalid_argument("factorize: n must be positive");
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > max_bits)
        throw ResourceError("factorize: input exceeds bit-size budget of " +
                            std::to_string(max_bits) + " bits");

    std::map<mpz_class, unsigned> exps;
    mpz_class rem = n;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            exps[mpz_class(p)] += 1;
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
        }
    }
    for (unsigned long p = 17; p <= 100000 && rem > 1; p += 2) {
        if (mpz_cmp_ui(rem.get_mpz_t(), p * p) < 0) break;
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            exps[mpz_class(p)] += 1;
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
        }
    }
    if (rem > 1) factor_into(rem, exps);

    std::vector<PrimePower> factors;
    factors.reserve(exps.size());
    for (const auto& [p, e] : exps) factors.push_back({p, e});
    return FactoredInteger::from_factors(std::move(factors));
}

ArithProfile profile(const FactoredInteger& n) {
    ArithProfile pr;
    pr.tau = 1;
    for (const auto& pp : n.factors()) {
        pr.tau *= pp.exponent + 1;
        pr.omega += 1;
        pr.big_omega2 += std::uint64_t(pp.exponent) * pp.exponent;
        pr.v_max = std::max(pr.v_max, pp.exponent);
    }
    return pr;
}

std::vector<mpz_class> divisors(const FactoredInteger& n, std::uint64_t budget) {
    mpz_class tau = profile(n).tau;
    if (tau > budget)
        throw ResourceError("divisor enumeration budget exceeded: tau(n) = " +
                            tau.get_str() + " > " + std::to_string(budget));
    std::vector<mpz_class> divs{1};
    divs.reserve(tau.get_ui());
    for (const auto& pp : n.factors()) {
        std::size_t base = divs.size();
        mpz_class pw = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pw *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<mpz_class> primes_above(const mpz_class& M, std::size_t count) {
    if (M < 2) throw std::invalid_argument("primes_above: M must be >= 2");
    std::vector<mpz_class> out;
    out.reserve(count);
    mpz_class p = M;
    while (out.size() < count) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        out.push_back(p);
    }
    return out;
}

std::vector<mpz_class> primes_below(const mpz_class& M, std::size_t count) {
    std::vector<mpz_class> out;
    mpz_class p = M;
    while (out.size() < count) {
        if (p < 2) throw std::invalid_argument("primes_below: fewer primes than requested");
        if (is_prime(p)) out.push_back(p);
        p -= 1;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

SmallestFactorSieve::SmallestFactorSieve(std::uint32_t limit)
    : limit_(limit), spf_(limit + 1, 0) {
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            for (std::uint64_t j = i; j <= limit; j += i)
                if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
}

FactoredInteger SmallestFactorSieve::factor(std::uint32_t n) const {
    if (n == 0 || n > limit_) throw std::invalid_argument("sieve: n out of range");
    std::vector<PrimePower> factors;
    while (n > 1) {
        std::uint32_t p = spf_[n];
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.push_back({mpz_class(p), e});
    }
    return FactoredInteger::from_factors(std::move(factors));
}

// --- power comparisons ---------------------------------------------------

namespace {

// exact dyadic decomposition x = num / 2^k with k >= 0, num odd or k == 0
void dyadic_decompose(double x, mpz_class* num, unsigned* k) {
    int e;
    double m = std::frexp(x, &e);  // x = m * 2^e, m in [0.5, 1)
    long long mant = static_cast<long long>(std::ldexp(m, 53));
    int shift = 53 - e;
    mpz_class nm(static_cast<long>(mant));
    if (shift <= 0) {
        nm <<= -shift;
        shift = 0;
    }
    while (shift > 0 && mpz_even_p(nm.get_mpz_t())) {
        nm >>= 1;
        --shift;
    }
    *num = nm;
    *k = static_cast<unsigned>(shift);
}

}  // namespace

bool power_is_integer(const FactoredInteger& n, double x, mpz_class* out) {
    if (x < 0) throw std::invalid_argument("power_is_integer: x must be >= 0");
    if (n.value() == 1 || x == 0.0) {
        if (out) *out = 1;
        return true;
    }
    mpz_class num;
    unsigned k;
    dyadic_decompose(x, &num, &k);
    for (const auto& pp : n.factors()) {
        mpz_class prod = num * pp.exponent;
        if (mpz_scan1(prod.get_mpz_t(), 0) < k) return false;
    }
    if (out) {
        mpz_class r = 1;
        for (const auto& pp : n.factors()) {
            mpz_class prod = num * pp.exponent;
            prod >>= k;
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), pp.prime.get_mpz_t(), prod.get_ui());
            r *= pw;
        }
        *out = r;
    }
    return true;
}

mpz_class floor_power(const FactoredInteger& n, double x) {
    mpz_class exact;
    if (power_is_integer(n, x, &exact)) return exact;

    // fast path: decide the floor in doubles when safely away from an integer
    double l2 = approx_log2(n.value()) * x;
    if (l2 < 50) {
        double y = std::exp2(l2);
        double err = y * 1e-11;
        double flo = std::floor(y - err), fhi = std::floor(y + err);
        if (flo == fhi) return mpz_class(flo);
    }

    HighPrecisionReal p = hp_pow(HighPrecisionReal(n.value()), x);
    for (mpfr_prec_t prec = default_precision(); prec <= kPrecisionCap; prec *= 2) {
        Interval iv = p.eval(prec);
        mpz_class flo, fhi;
        mpfr_get_z(flo.get_mpz_t(), iv.lo(), MPFR_RNDD);
        mpfr_get_z(fhi.get_mpz_t(), iv.hi(), MPFR_RNDD);
        if (flo == fhi) return flo;
    }
    throw PrecisionExhausted("floor_power undecided at precision cap");
}

std::strong_ordering compare_int_vs_power(const mpz_class& d,
                                          const FactoredInteger& n, double x) {
    mpz_class exact;
    if (power_is_integer(n, x, &exact)) return mpz_cmp(d.get_mpz_t(), exact.get_mpz_t()) <=> 0;

    // n^x is irrational here, so equality is impossible and the interval
    // comparison terminates.
    double ld = approx_log2(d), lp = approx_log2(n.value()) * x;
    double margin = 1e-11 * (std::abs(ld) + std::abs(lp) + 1);
    if (d > 0 && ld - lp > margin) return std::strong_ordering::greater;
    if (d > 0 && lp - ld > margin) return std::strong_ordering::less;

    if (d <= 0) return std::strong_ordering::less;
    return certified_compare(HighPrecisionReal(d),
                             hp_pow(HighPrecisionReal(n.value()), x));
}

IntegerWindow exponent_window_hull(const FactoredInteger& n, double theta,
                                   double eta) {
    IntegerWindow w;
    mpz_class a, b;
    bool a_int = power_is_integer(n, theta, &a);
    w.lo = a_int ? a : floor_power(n, theta) + 1;

    bool b_int = power_is_integer(n, eta, &b);
    if (a_int && b_int) {
        w.hi = a + b;
        return w;
    }

    // fast double path for the upper endpoint
    double l2n = approx_log2(n.value());
    double ya = std::exp2(l2n * theta), yb = std::exp2(l2n * eta);
    if (l2n * theta < 50 && l2n * eta < 50) {
        double s = ya + yb;
        double err = s * 1e-11;
        double flo = std::floor(s - err), fhi = std::floor(s + err);
        if (flo == fhi) {
            w.hi = mpz_class(flo);
            return w;
        }
    }

    // n^theta + n^eta is rational only when both powers are integers, so
    // this floor is decidable.
    HighPrecisionReal nn(n.value());
    HighPrecisionReal sum = hp_pow(nn, theta) + hp_pow(nn, eta);
    for (mpfr_prec_t prec = default_precision(); prec <= kPrecisionCap; prec *= 2) {
        Interval iv = sum.eval(prec);
        mpz_class flo, fhi;
        mpfr_get_z(flo.get_mpz_t(), iv.lo(), MPFR_RNDD);
        mpfr_get_z(fhi.get_mpz_t(), iv.hi(), MPFR_RNDD);
        if (flo == fhi) {
            w.hi = flo;
            return w;
        }
    }
    throw PrecisionExhausted("window hull undecided at precision cap");
}

namespace {

// a = g^x, b = g^y for a common base iff the prime-exponent vectors are
// parallel; returns the reduced ratio (x, y).
bool mult_dependent(const FactoredInteger& a, const FactoredInteger& b,
                    unsigned long* x, unsigned long* y) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    if (fa.size() != fb.size() || fa.empty()) return false;
    for (std::size_t i = 0; i < fa.size(); ++i)
        if (fa[i].prime != fb[i].prime) return false;
    unsigned long g = std::gcd(fa[0].exponent, fb[0].exponent);
    unsigned long rx = fa[0].exponent / g, ry = fb[0].exponent / g;
    for (std::size_t i = 1; i < fa.size(); ++i)
        if (std::uint64_t(fa[i].exponent) * ry != std::uint64_t(fb[i].exponent) * rx)
            return false;
    *x = rx;
    *y = ry;
    return true;
}

std::strong_ordering cmp_powers(const mpz_class& a, unsigned long x,
                                const mpz_class& b, unsigned long y) {
    mpz_class pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), a.get_mpz_t(), x);
    mpz_pow_ui(pb.get_mpz_t(), b.get_mpz_t(), y);
    return mpz_cmp(pa.get_mpz_t(), pb.get_mpz_t()) <=> 0;
}

}  // namespace

std::strong_ordering cmp_log_products(const mpz_class& A, const mpz_class& N,
                                      const mpz_class& B, const mpz_class& T) {
    if (A < 1 || N < 1 || B < 1 || T < 1)
        throw std::invalid_argument("cmp_log_products: arguments must be >= 1");
    bool lzero = (A == 1 || N == 1), rzero = (B == 1 || T == 1);
    if (lzero && rzero) return std::strong_ordering::equal;
    if (lzero) return std::strong_ordering::less;
    if (rzero) return std::strong_ordering::greater;

    double lhs = approx_log2(A) * approx_log2(N);
    double rhs = approx_log2(B) * approx_log2(T);
    double margin = 1e-11 * (lhs + rhs + 1);
    if (lhs - rhs > margin) return std::strong_ordering::greater;
    if (rhs - lhs > margin) return std::strong_ordering::less;

    // near-tie: look for a multiplicative dependency that settles it exactly
    FactoredInteger fA = factorize(A), fN = factorize(N), fB = factorize(B),
                    fT = factorize(T);
    unsigned long x, y;
    if (mult_dependent(fA, fB, &x, &y)) return cmp_powers(N, x, T, y);
    if (mult_dependent(fA, fT, &x, &y)) return cmp_powers(N, x, B, y);
    if (mult_dependent(fN, fB, &x, &y)) return cmp_powers(A, x, T, y);
    if (mult_dependent(fN, fT, &x, &y)) return cmp_powers(A, x, B, y);

    HighPrecisionReal l = hp_log(HighPrecisionReal(A)) * hp_log(HighPrecisionReal(N));
    HighPrecisionReal r = hp_log(HighPrecisionReal(B)) * hp_log(HighPrecisionReal(T));
    return certified_compare(l, r);
}

}  // namespace divwin
