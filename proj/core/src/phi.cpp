#include "finsler/phi.hpp"

#include "finsler/errors.hpp"

#include <cmath>

namespace finsler {

namespace {

/// Largest valid b for a custom phi: coarse scan for the first failing b,
/// then bisection between the last good and first bad value.
double custom_b0(const PhiFamily& phi) {
    constexpr double kCap = 8.0;
    constexpr int kScan = 256;
    constexpr int kGrid = 2049;
    double prev = 0.0;
    double bad = -1.0;
    for (int i = 1; i <= kScan; ++i) {
        double b = kCap * i / kScan;
        if (!shen_validity(phi, b, kGrid).valid) {
            bad = b;
            break;
        }
        prev = b;
    }
    if (bad < 0) return std::numeric_limits<double>::infinity();
    double lo = prev, hi = bad;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        (shen_validity(phi, mid, kGrid).valid ? lo : hi) = mid;
    }
    return lo;
}

} // namespace

std::string PhiFamily::name() const {
    switch (kind) {
    case PhiKind::Riemannian: return "riemannian";
    case PhiKind::Randers: return "randers";
    case PhiKind::Square: return "square";
    case PhiKind::RandersSquare: return "randers-square";
    case PhiKind::Custom: return "custom";
    }
    return "?";
}

Poly2 PhiFamily::shen_polynomial() const {
    Poly2 p = poly();
    Poly2 p1 = p.diff(Var::S);
    Poly2 p2 = p1.diff(Var::S);
    Poly2 s = Poly2::var_s();
    Poly2 B = Poly2::var_b();
    return p - s * p1 + (B - s * s) * p2;
}

PhiFamily make_phi(PhiKind kind, const std::vector<Rational>& custom_coeffs) {
    PhiFamily f;
    f.kind = kind;
    switch (kind) {
    case PhiKind::Riemannian:
        f.coeffs = {1};
        f.b0 = std::numeric_limits<double>::infinity();
        break;
    case PhiKind::Randers:
        f.coeffs = {1, 1};
        f.b0 = 1.0;
        break;
    case PhiKind::Square:
        f.coeffs = {1, 2, 1};
        f.b0 = 1.0;
        break;
    case PhiKind::RandersSquare:
        f.coeffs = {1, 3, 1};
        f.b0 = (3.0 - std::sqrt(5.0)) / 2.0;
        break;
    case PhiKind::Custom:
        if (custom_coeffs.empty()) throw ValidationError("custom phi needs coefficients");
        if (custom_coeffs.front() <= 0) throw ValidationError("custom phi must satisfy phi(0) > 0");
        f.coeffs = custom_coeffs;
        f.b0 = custom_b0(f);
        break;
    }
    return f;
}

PhiFamily phi_from_name(const std::string& name) {
    if (name == "riemannian") return make_phi(PhiKind::Riemannian);
    if (name == "randers") return make_phi(PhiKind::Randers);
    if (name == "square") return make_phi(PhiKind::Square);
    if (name == "randers-square" || name == "randers_square") return make_phi(PhiKind::RandersSquare);
    throw ValidationError("unknown metric name: " + name);
}

ShenVerdict shen_validity(const PhiFamily& phi, double b, int grid) {
    if (b < 0) throw ValidationError("validity bound b must be nonnegative");
    if (grid < 2) throw ValidationError("shen_validity grid must be >= 2");
    const CompiledRatFun p{RatFun(phi.poly())};
    const CompiledRatFun cond2{RatFun(phi.shen_polynomial())};
    double B = b * b;
    for (int i = 0; i < grid; ++i) {
        double s = -b + 2.0 * b * i / (grid - 1);
        if (!(p.eval(s, B) > 0.0) || !(cond2.eval(s, B) > 0.0)) return {false, s};
    }
    return {true, 0.0};
}

QtpSymbols qtp(const PhiFamily& phi) {
    Poly2 p = phi.poly();
    Poly2 p1 = p.diff(Var::S);
    Poly2 p2 = p1.diff(Var::S);
    Poly2 s = Poly2::var_s();
    Poly2 denom_q = p - s * p1; // phi - s phi'
    if (denom_q.is_zero()) throw MathDomainError("degenerate phi: phi - s*phi' is identically zero");
    Poly2 shen = phi.shen_polynomial();

    QtpSymbols q;
    q.Q = RatFun(p1, denom_q);
    q.Q_s = q.Q.diff(Var::S);
    q.Q_ss = q.Q_s.diff(Var::S);
    // Theta numerator phi*phi' - s(phi*phi'' + phi'*phi')
    q.Theta = RatFun(p * p1 - s * (p * p2 + p1 * p1), Poly2(2) * p * shen);
    q.Theta_s = q.Theta.diff(Var::S);
    q.Theta_B = q.Theta.diff(Var::B);
    q.Psi = RatFun(p2, Poly2(2) * shen);
    q.Psi_s = q.Psi.diff(Var::S);
    q.Psi_ss = q.Psi_s.diff(Var::S);
    q.Psi_B = q.Psi.diff(Var::B);
    q.Psi_sB = q.Psi_s.diff(Var::B);
    return q;
}

} // namespace finsler
