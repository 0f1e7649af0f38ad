#pragma once

#include "finsler/ratfun.hpp"

#include <limits>
#include <string>
#include <vector>

namespace finsler {

enum class PhiKind { Riemannian, Randers, Square, RandersSquare, Custom };

/// Polynomial phi(s) defining the (alpha,beta)-metric F = alpha * phi(beta/alpha),
/// together with its maximal validity bound b0 (largest b for which the two
/// positivity conditions hold on |s| <= b).
struct PhiFamily {
    PhiKind kind = PhiKind::Riemannian;
    std::vector<Rational> coeffs; // constant term first
    double b0 = std::numeric_limits<double>::infinity();

    std::string name() const;
    Poly2 poly() const { return Poly2::from_s_coeffs(coeffs); }
    /// phi - s phi' + (B - s^2) phi'' as a polynomial in (s, B).
    Poly2 shen_polynomial() const;
};

PhiFamily make_phi(PhiKind kind, const std::vector<Rational>& custom_coeffs = {});
PhiFamily phi_from_name(const std::string& name);

struct ShenVerdict {
    bool valid = false;
    double witness_s = 0.0; // first violating s when invalid
};

/// Grid check of the two positivity conditions on s in [-b, b] with B = b^2.
ShenVerdict shen_validity(const PhiFamily& phi, double b, int grid = 1024);

/// The Q, Theta, Psi rational functions of (s, B) and all partials the
/// curvature formula consumes.
struct QtpSymbols {
    RatFun Q, Q_s, Q_ss;
    RatFun Theta, Theta_s, Theta_B;
    RatFun Psi, Psi_s, Psi_ss, Psi_B, Psi_sB;
};

QtpSymbols qtp(const PhiFamily& phi);

} // namespace finsler
