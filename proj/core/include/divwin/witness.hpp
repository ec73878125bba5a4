// Constructive lower-bound generators: packing binom(s,r) products of r
// primes into the window [N^theta, N^theta + N^{theta-eps}], the mirrored
// large-theta construction, and the single-divisor witness.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "divwin/arith.hpp"

namespace divwin {

// s = floor(1/eps - 3/(2 theta)); r = ceil(theta s), +1 when the
// fractional part of theta s exceeds 1/2 or vanishes.
// Requires 0 < eps <= theta/2 and theta <= 1/2.
std::pair<unsigned, unsigned> choose_s_r(double theta, double epsilon);

struct WitnessReport {
    double theta = 0;
    double epsilon = 0;
    mpz_class M;
    double L = 0;  // (log M)^2
    unsigned s = 0, r = 0;
    std::vector<mpz_class> primes;
    FactoredInteger N0;  // product of the s primes
    mpz_class m;
    FactoredInteger N;  // m * N0
    std::uint64_t packed_count = 0;
    mpz_class binom_target;  // binom(s, r)
    bool success = false;
    bool frac_edge = false;       // {theta s} == 0 edge of the r-rule
    bool r_theta_ineq_ok = true;  // r/theta < s + 3/(2 theta)
    bool mirrored = false;        // large-theta construction
    // mirrored only: products q with N/q in [N^theta, N^theta + 1.2 N^{theta-eps}]
    std::uint64_t complement_count = 0;
};

// Small-theta construction: primes from (M, M+L], N = m N0 with m maximal,
// and certified window membership for every r-subset product.
WitnessReport build_witness(double theta, double epsilon, const mpz_class& M);

// Mirror for theta >= 1/2 with 1-theta in place of theta, primes from
// [M-L, M], and N' minimal; counts products q in
// [N'^{1-theta} - 0.5 N'^{1-theta-eps}, N'^{1-theta}].
WitnessReport build_witness_large_theta(double theta, double epsilon,
                                        const mpz_class& M);

struct Prop4Witness {
    mpz_class v;   // smallest integer with m < v^theta
    mpz_class n0;  // largest multiple of m in [v-m, v-1]
    mpz_class divisor;
};

// Requires 0 < theta <= 1/2; verifies n0^theta <= m <= n0^theta +
// 1.1 theta n0^{2 theta - 1} and throws naming the failing inequality.
Prop4Witness prop4_witness(double theta, double epsilon, const mpz_class& m);

struct StirlingDiagnostic {
    mpz_class exact;     // binom(s, r)
    double closed_form;  // sqrt(eps theta^3) (theta^-theta (1-theta)^-(1-theta))^{1/eps}
};

StirlingDiagnostic stirling_diagnostic(unsigned s, unsigned r, double theta,
                                       double epsilon);

}  // namespace divwin
