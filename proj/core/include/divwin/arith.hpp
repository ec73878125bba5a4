// Exact integer arithmetic: factorization, divisor enumeration, the basic
// arithmetic functions tau / omega / Omega_2 / V, prime generation, and
// exact-aware comparisons of integers against real powers n^x.
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "divwin/hpreal.hpp"

namespace divwin {

struct PrimePower {
    mpz_class prime;
    unsigned exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

// An integer carried with its full prime factorization.
class FactoredInteger {
public:
    FactoredInteger() : value_(1) {}

    // Validates: primes strictly increasing, exponents >= 1, product == value.
    static FactoredInteger from_factors(std::vector<PrimePower> factors);

    const mpz_class& value() const { return value_; }
    const std::vector<PrimePower>& factors() const { return factors_; }

    bool operator==(const FactoredInteger&) const = default;

private:
    mpz_class value_;
    std::vector<PrimePower> factors_;
};

struct ArithProfile {
    mpz_class tau;           // prod (beta_i + 1)
    unsigned omega = 0;      // number of distinct primes
    std::uint64_t big_omega2 = 0;  // sum beta_i^2
    unsigned v_max = 0;      // max beta_i
};

// Deterministic factorization: trial division then Brent's cycle method.
// Rejects n = 0 and inputs above max_bits.
FactoredInteger factorize(const mpz_class& n, unsigned max_bits = 4096);

ArithProfile profile(const FactoredInteger& n);

inline constexpr std::uint64_t kDefaultDivisorBudget = std::uint64_t(1) << 20;

// All divisors in strictly increasing order; throws ResourceError (naming
// tau) when tau(n) exceeds the budget.
std::vector<mpz_class> divisors(const FactoredInteger& n,
                                std::uint64_t budget = kDefaultDivisorBudget);

// The `count` smallest primes strictly greater than M, ascending.
std::vector<mpz_class> primes_above(const mpz_class& M, std::size_t count);

// The `count` largest primes <= M, ascending.  Throws if fewer exist.
std::vector<mpz_class> primes_below(const mpz_class& M, std::size_t count);

// Smallest-prime-factor sieve for bulk scans over n <= limit.
class SmallestFactorSieve {
public:
    explicit SmallestFactorSieve(std::uint32_t limit);
    std::uint32_t limit() const { return limit_; }
    FactoredInteger factor(std::uint32_t n) const;

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
};

// --- exact-aware power comparisons -------------------------------------
//
// Exponents arrive as doubles, i.e. exact dyadic rationals num/2^k.  With
// the factorization of n in hand, integrality of n^x is decidable exactly,
// which is what makes the interval comparisons below terminate even when
// the compared values coincide.

// If n^x is an integer, stores it in out and returns true.  Requires x >= 0.
bool power_is_integer(const FactoredInteger& n, double x, mpz_class* out);

// floor(n^x) for n >= 1, x >= 0.
mpz_class floor_power(const FactoredInteger& n, double x);

// compares d against n^x (exact where the values coincide)
std::strong_ordering compare_int_vs_power(const mpz_class& d,
                                          const FactoredInteger& n, double x);

// Integer hull [lo, hi] of the real window [n^theta, n^theta + n^eta];
// hi < lo encodes an empty window (cannot happen for eta > 0, n >= 1).
struct IntegerWindow {
    mpz_class lo, hi;
};
IntegerWindow exponent_window_hull(const FactoredInteger& n, double theta,
                                   double eta);

// Compares log(A)*log(N) with log(B)*log(T) for integers >= 1, detecting
// exact ties through multiplicative dependencies between the arguments.
std::strong_ordering cmp_log_products(const mpz_class& A, const mpz_class& N,
                                      const mpz_class& B, const mpz_class& T);

}  // namespace divwin
