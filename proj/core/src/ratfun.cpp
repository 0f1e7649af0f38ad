#include "finsler/ratfun.hpp"

#include "finsler/errors.hpp"

#include <algorithm>
#include <cmath>

namespace finsler {

RatFun::RatFun(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw MathDomainError("rational function with zero denominator");
    if (num_.is_zero()) den_ = Poly2(1);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.num_.is_zero() || b.num_.is_zero()) return RatFun();
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.num_.is_zero()) throw MathDomainError("division by the zero rational function");
    if (a.num_.is_zero()) return RatFun();
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::diff(Var v) const {
    // quotient rule, exact: (num' den - num den') / den^2
    return RatFun(num_.diff(v) * den_ - num_ * den_.diff(v), den_ * den_);
}

bool RatFun::equals(const RatFun& o) const {
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

RatFun RatFun::pow(int k) const {
    RatFun out = one();
    for (int i = 0; i < k; ++i) out = out * (*this);
    return out;
}

double RatFun::eval(double s, double b, double tol) const {
    if (tol <= 0) throw ValidationError("pole tolerance must be positive");
    double d = den_.eval(s, b);
    if (std::abs(d) < tol)
        throw MathDomainError("pole of rational function at (s=" + std::to_string(s) +
                              ", B=" + std::to_string(b) + ")");
    return num_.eval(s, b) / d;
}

Rational RatFun::eval_exact(const Rational& s, const Rational& b) const {
    Rational d = den_.eval_exact(s, b);
    if (d == 0) throw MathDomainError("pole of rational function at exact point");
    return num_.eval_exact(s, b) / d;
}

CompiledRatFun::CompiledRatFun(const RatFun& r) {
    auto flatten = [this](const Poly2& p, std::vector<Term>& out) {
        for (const auto& [k, c] : p.terms()) {
            out.push_back({to_double(c), k.first, k.second});
            max_ds_ = std::max(max_ds_, k.first);
            max_db_ = std::max(max_db_, k.second);
        }
    };
    flatten(r.num(), num_);
    flatten(r.den(), den_);
}

double CompiledRatFun::eval(double s, double b, double tol) const {
    if (tol <= 0) throw ValidationError("pole tolerance must be positive");
    std::vector<double> ps(static_cast<std::size_t>(max_ds_) + 1, 1.0);
    std::vector<double> pb(static_cast<std::size_t>(max_db_) + 1, 1.0);
    for (int i = 1; i <= max_ds_; ++i)
        ps[static_cast<std::size_t>(i)] = ps[static_cast<std::size_t>(i - 1)] * s;
    for (int i = 1; i <= max_db_; ++i)
        pb[static_cast<std::size_t>(i)] = pb[static_cast<std::size_t>(i - 1)] * b;
    auto fold = [&](const std::vector<Term>& terms) {
        double acc = 0.0;
        for (const Term& t : terms)
            acc += t.c * ps[static_cast<std::size_t>(t.ds)] * pb[static_cast<std::size_t>(t.db)];
        return acc;
    };
    double d = fold(den_);
    if (std::abs(d) < tol)
        throw MathDomainError("pole of rational function at (s=" + std::to_string(s) +
                              ", B=" + std::to_string(b) + ")");
    return fold(num_) / d;
}

} // namespace finsler
