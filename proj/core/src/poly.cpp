#include "finsler/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace finsler {

namespace {

BigInt gcd_terms(const Poly2::TermMap& m) {
    BigInt g = 0;
    for (const auto& [k, c] : m) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

} // namespace

void Poly2::normalize() {
    if (terms_.empty()) {
        content_ = 1;
        return;
    }
    BigInt g = gcd_terms(terms_);
    if (g > 1) {
        for (auto& [k, c] : terms_) c /= g;
        content_ *= Rational(g);
    }
    if (content_ < 0) {
        content_ = -content_;
        for (auto& [k, c] : terms_) c = -c;
    }
}

Poly2::Poly2(long v) {
    if (v != 0) {
        terms_.emplace(Key{0, 0}, BigInt(v));
        normalize();
    }
}

Poly2::Poly2(const Rational& v) {
    if (v != 0) {
        terms_.emplace(Key{0, 0}, BigInt(1));
        content_ = v;
        normalize();
    }
}

Poly2 Poly2::monomial(const Rational& coef, int deg_s, int deg_b) {
    Poly2 p;
    if (coef != 0) {
        p.terms_.emplace(Key{deg_s, deg_b}, BigInt(1));
        p.content_ = coef;
        p.normalize();
    }
    return p;
}

Poly2 Poly2::from_s_coeffs(const std::vector<Rational>& coeffs) {
    // scale by the common denominator so the term map is integral
    BigInt lcm = 1;
    for (const auto& c : coeffs) {
        BigInt d = denominator(c);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    Poly2 p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        BigInt scaled = numerator(coeffs[k]) * (lcm / denominator(coeffs[k]));
        p.terms_.emplace(Key{static_cast<int>(k), 0}, scaled);
    }
    if (!p.terms_.empty()) {
        p.content_ = Rational(1, lcm);
        p.normalize();
    }
    return p;
}

int Poly2::deg_s() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int Poly2::deg_b() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

Rational Poly2::coeff(int ds, int db) const {
    auto it = terms_.find({ds, db});
    return it == terms_.end() ? Rational(0) : Rational(it->second) * content_;
}

std::map<Poly2::Key, Rational> Poly2::terms() const {
    std::map<Key, Rational> out;
    for (const auto& [k, c] : terms_) out.emplace(k, Rational(c) * content_);
    return out;
}

Poly2 Poly2::diff(Var v) const {
    Poly2 out;
    out.content_ = content_;
    for (const auto& [k, c] : terms_) {
        if (v == Var::S) {
            if (k.first > 0) out.terms_.emplace(Key{k.first - 1, k.second}, c * k.first);
        } else {
            if (k.second > 0) out.terms_.emplace(Key{k.first, k.second - 1}, c * k.second);
        }
    }
    if (out.terms_.empty()) return Poly2();
    out.normalize();
    return out;
}

Poly2 Poly2::pow(int k) const {
    Poly2 out(1);
    for (int i = 0; i < k; ++i) out = out * (*this);
    return out;
}

double Poly2::eval(double s, double b) const {
    int ds = deg_s(), db = deg_b();
    std::vector<double> ps(static_cast<std::size_t>(ds) + 1, 1.0);
    std::vector<double> pb(static_cast<std::size_t>(db) + 1, 1.0);
    for (int i = 1; i <= ds; ++i) ps[static_cast<std::size_t>(i)] = ps[static_cast<std::size_t>(i - 1)] * s;
    for (int i = 1; i <= db; ++i) pb[static_cast<std::size_t>(i)] = pb[static_cast<std::size_t>(i - 1)] * b;
    double acc = 0.0;
    // fold content into each coefficient in exact arithmetic before the
    // double conversion; the split pieces alone may overflow a double
    for (const auto& [k, c] : terms_)
        acc += to_double(Rational(c) * content_) * ps[static_cast<std::size_t>(k.first)] *
               pb[static_cast<std::size_t>(k.second)];
    return acc;
}

Rational Poly2::eval_exact(const Rational& s, const Rational& b) const {
    Rational acc(0);
    for (const auto& [k, c] : terms_) {
        Rational t(c);
        for (int i = 0; i < k.first; ++i) t *= s;
        for (int i = 0; i < k.second; ++i) t *= b;
        acc += t;
    }
    return acc * content_;
}

Poly2 Poly2::operator-() const {
    Poly2 out;
    out.content_ = content_;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

Poly2 Poly2::combine(const Poly2& a, const Poly2& b, bool subtract) {
    if (a.terms_.empty()) return subtract ? -b : b;
    if (b.terms_.empty()) return a;
    // pull out the common rational content so both sides get integer multipliers
    const BigInt &na = numerator(a.content_), &da = denominator(a.content_);
    const BigInt &nb = numerator(b.content_), &db = denominator(b.content_);
    BigInt ng = boost::multiprecision::gcd(na, nb);
    BigInt dl = da / boost::multiprecision::gcd(da, db) * db;
    BigInt ma = na / ng * (dl / da);
    BigInt mb = nb / ng * (dl / db);
    if (subtract) mb = -mb;

    Poly2 out;
    out.content_ = Rational(ng, dl);
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            out.terms_.emplace_hint(out.terms_.end(), ia->first, ia->second * ma);
            ++ia;
        } else if (ia == a.terms_.end() || ib->first < ia->first) {
            out.terms_.emplace_hint(out.terms_.end(), ib->first, ib->second * mb);
            ++ib;
        } else {
            BigInt c = ia->second * ma + ib->second * mb;
            if (c != 0) out.terms_.emplace_hint(out.terms_.end(), ia->first, std::move(c));
            ++ia;
            ++ib;
        }
    }
    if (out.terms_.empty()) return Poly2();
    out.normalize();
    return out;
}

Poly2 operator+(const Poly2& a, const Poly2& b) { return Poly2::combine(a, b, false); }
Poly2 operator-(const Poly2& a, const Poly2& b) { return Poly2::combine(a, b, true); }

Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.terms_.empty() || b.terms_.empty()) return Poly2();
    Poly2 out;
    out.content_ = a.content_ * b.content_;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            Poly2::Key k{ka.first + kb.first, ka.second + kb.second};
            auto [it, fresh] = out.terms_.try_emplace(k, BigInt(0));
            if (fresh)
                it->second = ca * cb;
            else
                it->second += ca * cb;
        }
    for (auto it = out.terms_.begin(); it != out.terms_.end();)
        it = (it->second == 0) ? out.terms_.erase(it) : std::next(it);
    if (out.terms_.empty()) return Poly2();
    out.normalize();
    return out;
}

std::string Poly2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, ci] : terms_) {
        Rational c = Rational(ci) * content_;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = c > 0 ? c : Rational(-c);
        bool unit = (a == 1) && (k.first > 0 || k.second > 0);
        if (!unit) os << a;
        if (k.first > 0) {
            if (!unit) os << "*";
            os << "s";
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second > 0) {
            if (!unit || k.first > 0) os << "*";
            os << "B";
            if (k.second > 1) os << "^" << k.second;
        }
        first = false;
    }
    return os.str();
}

} // namespace finsler
