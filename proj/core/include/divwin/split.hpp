// The constructive machinery behind the main splitting argument: the
// lcm/gcd inequality, the prefix-dominating permutation, the (rho_i,
// theta_i) pairs, the coprime factorization n = a*b, and the associated
// tau(b) and divisor-identity checks.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "divwin/arith.hpp"
#include "divwin/bounds.hpp"

namespace divwin {

// lcm(d)^{t(t+1)/2} * prod_{i<j} gcd(d_i, d_j) >= prod d_i^t, exact
// integers; negative t handled by cross-multiplication.
bool lemma1_check(const std::vector<mpz_class>& d, long t);

// Permutation with every prefix satisfying sum x <= sum y: indices with
// x_i <= y_i first (input order), then the rest (input order).
std::vector<std::size_t> lemma2_order(
    const std::vector<std::pair<double, double>>& pairs);

struct PairSequence {
    std::vector<double> rho;    // log(beta_i + 1) / log tau(n)
    std::vector<double> theta;  // beta_i log p_i / log n
};

// Requires tau(n) >= 2.
PairSequence pair_sequence(const FactoredInteger& n);

enum class SplitRegime {
    Split,         // the constructive split was produced
    TrivialDelta,  // delta >= xi(theta,eta): the bound holds trivially
    Prop1Regime,   // eta < theta^2 - (theta(1-theta))^2 delta
};

struct SplitResult {
    SplitRegime regime = SplitRegime::Split;
    FactoredInteger a, b;
    std::size_t s = 0;
    double delta = 0;
    double alpha_used = 0;
    DeltaCandidate candidate = DeltaCandidate::DeltaOver;
    std::vector<std::size_t> permutation;
};

// Full pipeline: delta = 1/log tau(n), alpha via alpha_delta, the
// prefix-dominating permutation on (rho_i, theta_i), minimal s, and the
// coprime split n = a*b.  Requires tau(n) >= 3.
SplitResult theorem1_split(const FactoredInteger& n, double theta, double eta);

// tau(b) <= 2 V(n) tau(n)^{1 - alpha_used}; vacuously true outside the
// Split regime.
bool tau_b_check(const SplitResult& split, const FactoredInteger& n);

// D_n(X, Y) == sum_{e | b} D_a(X/e, Y/e) with X = n^theta, Y = n^eta,
// both sides enumerated exactly over the shared integer hull.
bool divisor_identity_check(const FactoredInteger& n, const SplitResult& split,
                            double theta, double eta,
                            std::uint64_t budget = kDefaultDivisorBudget);

}  // namespace divwin
