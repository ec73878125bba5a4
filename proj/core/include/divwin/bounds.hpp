// The piecewise exponents xi(theta,eta) and alpha(theta,eta), their
// delta-relaxed variant alpha(theta,eta,delta), the explicit small-interval
// cap, and an independent grid/bisection oracle for alpha.
#pragma once

#include <string>

#include "divwin/arith.hpp"

namespace divwin {

enum class XiCase {
    EtaLeThetaSq,
    SmallThetaFar,   // theta <= 1/2, 2 eta <= theta : theta^2 / eta
    SmallThetaNear,  // theta <= 1/2, 2 eta >  theta : 4 (theta - eta)
    LargeThetaFar,   // theta >  1/2, 2 eta <= 3 theta - 1
    LargeThetaNear,  // theta >  1/2, 2 eta >  3 theta - 1
};
std::string to_string(XiCase c);

struct PiecewiseExponent {
    double value;
    XiCase case_label;
};

// five-case exponent, domain 0 < eta < theta < 1
PiecewiseExponent xi(double theta, double eta);

// four-case exponent, domain 0 < theta^2 <= eta < theta < 1; equals xi there
PiecewiseExponent alpha_closed_form(double theta, double eta);

// Largest alpha with F(t) = ((theta-t)/alpha)^2 - (eta-t)/alpha >= 0 on a
// uniform t-grid over [0, 1-alpha] plus the quadratic's vertex, found by
// bisection to 1e-8.  Independent of the case analysis above.
double alpha_oracle(double theta, double eta, int grid);

enum class DeltaCandidate { DeltaOver, Alpha0, Alpha1 };
std::string to_string(DeltaCandidate c);

struct DeltaExponent {
    double value;
    DeltaCandidate candidate;
    double epsilon_var;  // (theta(1-theta))^2 * delta
};

// alpha(theta,eta,delta) chosen by branch, rounded toward zero so that the
// relaxed positivity property holds for the returned value.
DeltaExponent alpha_delta(double theta, double eta, double delta);

// max(4/(theta(1-theta)), 3 theta(1-theta)/epsilon) + 1, valid for all n
double prop1_bound(double theta, double epsilon);

// constant * tau^{1-xi} * V * log tau / (theta (1-theta)); ratio diagnostics
// only, the implied constant being unknown
double theorem1_rhs(const FactoredInteger& n, double theta, double eta,
                    double constant);

}  // namespace divwin
