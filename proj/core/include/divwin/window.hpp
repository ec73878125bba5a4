// Exact divisor counting in short intervals: D_n(X, Y) with inclusive
// endpoints, the reflection identity, the consecutive-divisor gap bound,
// and the empirical scan behind Conjecture 2.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "divwin/arith.hpp"

namespace divwin {

// X = n^theta, Y = n^eta
struct ExponentWindow {
    double theta;
    double eta;
};

// [X, X+Y] with exact rational endpoints, 0 < Y <= X
struct AbsoluteWindow {
    mpq_class X;
    mpq_class Y;
};

std::uint64_t count_window(const FactoredInteger& n, const ExponentWindow& w,
                           std::uint64_t budget = kDefaultDivisorBudget);
std::uint64_t count_window(const FactoredInteger& n, const AbsoluteWindow& w,
                           std::uint64_t budget = kDefaultDivisorBudget);

// count of divisors in [lo, hi] given the sorted divisor list
std::uint64_t count_in_hull(const std::vector<mpz_class>& divs,
                            const mpz_class& lo, const mpz_class& hi);

// D_n(X,Y) == D_n(n/(X+Y), Yn/(X(X+Y))), both sides enumerated
// independently.  Requires X + Y <= n.
bool reflection_check(const FactoredInteger& n, const mpq_class& X,
                      const mpq_class& Y);

// h > d^2/n for consecutive divisors d < d+h with d >= sqrt(n)
bool gap_check(const FactoredInteger& n,
               std::uint64_t budget = kDefaultDivisorBudget);

struct ScanRow {
    std::uint64_t n;
    std::uint64_t count;
};

struct ScanResult {
    std::vector<ScanRow> maxima;  // running maxima with attaining n
    std::vector<std::pair<std::uint64_t, std::string>> errors;
};

// D_n(n^theta, n^{theta-epsilon}) over n in [n_lo, n_hi]; per-n resource
// errors are recorded rather than fatal.  Output is independent of jobs.
ScanResult conjecture_scan(std::uint64_t n_lo, std::uint64_t n_hi,
                           double theta, double epsilon, unsigned jobs = 1);

}  // namespace divwin
