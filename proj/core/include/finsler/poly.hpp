#pragma once

#include "finsler/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace finsler {

enum class Var { S, B };

/// Sparse bivariate polynomial over the rationals in the symbols s and B.
/// Stored as a rational content times a primitive integer-coefficient term
/// map (coefficient gcd 1, content > 0), so ring operations run on plain
/// big integers. Zero coefficients are never kept; the canonical form makes
/// operator== exact polynomial equality.
class Poly2 {
public:
    using Key = std::pair<int, int>; // (deg_s, deg_B)
    using TermMap = std::map<Key, BigInt>;

    Poly2() = default;
    Poly2(long v);
    Poly2(const Rational& v);

    static Poly2 monomial(const Rational& coef, int deg_s, int deg_b);
    static Poly2 var_s() { return monomial(1, 1, 0); }
    static Poly2 var_b() { return monomial(1, 0, 1); }
    /// sum_k coeffs[k] * s^k, constant term first
    static Poly2 from_s_coeffs(const std::vector<Rational>& coeffs);

    bool is_zero() const { return terms_.empty(); }
    int deg_s() const;
    int deg_b() const;
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(int deg_s, int deg_b) const;
    /// materialized (content folded in) coefficient map
    std::map<Key, Rational> terms() const;

    Poly2 diff(Var v) const;
    Poly2 pow(int k) const;

    double eval(double s, double b) const;
    Rational eval_exact(const Rational& s, const Rational& b) const;

    std::string str() const;

    Poly2 operator-() const;
    friend Poly2 operator+(const Poly2& a, const Poly2& b);
    friend Poly2 operator-(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    bool operator==(const Poly2& o) const {
        return content_ == o.content_ && terms_ == o.terms_;
    }

private:
    static Poly2 combine(const Poly2& a, const Poly2& b, bool subtract);
    void normalize();
    TermMap terms_;
    Rational content_ = 1; // > 0; the represented value is content_ * terms_
};

} // namespace finsler
