#pragma once

#include "finsler/poly.hpp"

#include <vector>

namespace finsler {

/// Default tolerance below which a denominator value counts as a pole.
inline constexpr double kPoleTol = 1e-12;

/// Element of Q(s, B) as a numerator/denominator pair of Poly2.
/// Not kept in reduced form; equality is cross-multiplication, which is
/// exact and needs no multivariate gcd.
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(long v) : num_(v), den_(1) {}
    RatFun(const Rational& v) : num_(v), den_(1) {}
    RatFun(const Poly2& p) : num_(p), den_(1) {}
    RatFun(Poly2 num, Poly2 den);

    static RatFun zero() { return RatFun(); }
    static RatFun one() { return RatFun(1); }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun diff(Var v) const;
    bool equals(const RatFun& o) const;
    RatFun pow(int k) const;

    /// Numeric value at (s, B); throws MathDomainError when |den| < tol.
    double eval(double s, double b, double tol = kPoleTol) const;
    Rational eval_exact(const Rational& s, const Rational& b) const;

    RatFun operator-() const { return RatFun(-num_, den_); }
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);

private:
    Poly2 num_, den_;
};

/// Flattened double-precision form for repeated numeric evaluation.
class CompiledRatFun {
public:
    CompiledRatFun() = default;
    explicit CompiledRatFun(const RatFun& r);
    double eval(double s, double b, double tol = kPoleTol) const;

private:
    struct Term {
        double c;
        int ds, db;
    };
    std::vector<Term> num_, den_;
    int max_ds_ = 0, max_db_ = 0;
};

} // namespace finsler
