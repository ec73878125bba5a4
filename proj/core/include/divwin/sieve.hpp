// The large-sieve apparatus around the convex pair f(x) = an/x + bx:
// excluded residue classes modulo prime powers p^{v_p(4abn)+1}, the S_v
// recurrence with its brute-force oracle, the multiplicative weight h, and
// the resulting window bound.
#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "divwin/arith.hpp"

namespace divwin {

// Legendre symbol (a/p) for odd prime p, via Euler's criterion.
int legendre(const mpz_class& a, const mpz_class& p);

// S_v of the recurrence: S_0 = (p - (-u/p))/2, S_1 = p, S_v = p S_{v-2}.
// Requires p >= 3 odd prime, p coprime to u.
mpz_class count_unsolvable(unsigned long p, unsigned v, const mpz_class& u);

// Exact count of x mod p^{v+1} for which x^2 + p^v u == y^2 (mod p^{v+1})
// has no solution y; independent of the recurrence.
std::uint64_t count_unsolvable_bruteforce(unsigned long p, unsigned v,
                                          const mpz_class& u,
                                          std::uint64_t budget = 1000000);

struct SieveModulus {
    unsigned long p;        // odd prime
    unsigned v;             // v_p(4abn)
    std::uint64_t modulus;  // p^{v+1}
    mpz_class excluded;     // |Omega_p| = S_v
};

struct SieveSpec {
    std::vector<SieveModulus> moduli;  // supported prime powers <= Q
    std::uint64_t Q = 1;
    mpq_class H;  // sum_{q <= Q} h(q), exact rational
};

// Spec for the set {f(d)} built from K = 4abn: for each odd prime p with
// p^{v_p(K)+1} <= Q, the Lemma-4 count with u = -(K / p^v) mod p.
SieveSpec build_sieve_spec(const FactoredInteger& n, const mpz_class& a,
                           const mpz_class& b, std::uint64_t Q);

// multiplicative weight: product over prime-power components of q, zero
// unless every component is exactly a supported modulus
mpq_class weight_h(const SieveSpec& spec, std::uint64_t q);

// (N + Q^2)/H; H == 0 reported as an infinite (vacuous) bound
mpq_class large_sieve_bound(const SieveSpec& spec, const mpq_class& N,
                            bool* vacuous = nullptr);

struct FValues {
    mpz_class f;       // a n/d + b d
    mpz_class f_star;  // a n/d - b d
};

// Requires d | n and gcd(a,b) = 1; f^2 - f*^2 = 4abn exactly.
FValues f_values(const FactoredInteger& n, const mpz_class& a,
                 const mpz_class& b, const mpz_class& d);

struct SieveWindowReport {
    std::uint64_t count = 0;           // D_n(x0, sqrt(i x0 / b)), exact
    std::uint64_t cap_elementary = 0;  // i + 1
    mpq_class cap_sieve;               // (i + 1 + Q^2)/H
    bool sieve_vacuous = false;        // H == 0
    std::uint64_t Q = 1;
    mpq_class H;
    std::vector<SieveModulus> moduli;
    bool classes_avoided = true;  // every f(d), d >= x0, misses every Omega_p
};

// Exact divisor count in [x0, x0 + sqrt(i x0/b)] with x0 = sqrt(an/b),
// decided in integer arithmetic, against both caps.
SieveWindowReport sieve_window_check(const FactoredInteger& n,
                                     const mpz_class& a, const mpz_class& b,
                                     std::uint64_t i, std::uint64_t Q,
                                     std::uint64_t budget = kDefaultDivisorBudget);

}  // namespace divwin
