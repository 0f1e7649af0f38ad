#include "finsler/poly.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace finsler;

namespace {
const Poly2 S = Poly2::var_s();
const Poly2 B = Poly2::var_b();
} // namespace

TEST_CASE("difference of squares") {
    Poly2 lhs = (Poly2(1) + S) * (Poly2(1) - S);
    CHECK(lhs == Poly2(1) - S * S);
}

TEST_CASE("additive identity") {
    std::mt19937 rng(42);
    for (int i = 0; i < 20; ++i) {
        Poly2 p = finsler::testing::random_poly(rng);
        CHECK(p + Poly2() == p);
        CHECK(p - p == Poly2());
    }
}

TEST_CASE("hand-expanded product collects the -2 s^2 coefficient") {
    // (1 + 2s + s^2) * (1 + 2B - 3s^2)
    Poly2 a = Poly2(1) + 2 * S + S * S;
    Poly2 b = Poly2(1) + 2 * B - 3 * S * S;
    Poly2 got = a * b;
    Poly2 want = Poly2(1) + 2 * S - 2 * S.pow(2) - 6 * S.pow(3) - 3 * S.pow(4) + 2 * B +
                 4 * S * B + 2 * S * S * B;
    CHECK(got == want);
    CHECK(got.coeff(2, 0) == Rational(-2));
}

TEST_CASE("formal partial derivatives") {
    CHECK(S.pow(3).diff(Var::S) == 3 * S * S);
    CHECK((Poly2(1) + 2 * B - 3 * S * S).diff(Var::B) == Poly2(2));
    CHECK((S * S * B).diff(Var::S) == 2 * S * B);
    CHECK((S * S * B).diff(Var::B) == S * S);
    CHECK(Poly2(7).diff(Var::S) == Poly2());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Poly2 a = finsler::testing::random_poly(rng);
        Poly2 b = finsler::testing::random_poly(rng);
        Poly2 c = finsler::testing::random_poly(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
    }
}

TEST_CASE("rational coefficients stay exact") {
    Poly2 p = Poly2::monomial(Rational(1, 3), 1, 0) + Poly2::monomial(Rational(1, 6), 1, 0);
    CHECK(p == Poly2::monomial(Rational(1, 2), 1, 0));
    CHECK(p.coeff(1, 0) == Rational(1, 2));
}

TEST_CASE("double evaluation tracks exact evaluation") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-8, 8);
    for (int i = 0; i < 40; ++i) {
        Poly2 p = finsler::testing::random_poly(rng, 6, 4);
        Rational sv(num(rng), 4); // exactly representable
        Rational bv(num(rng), 8);
        double exact = to_double(p.eval_exact(sv, bv));
        double approx = p.eval(to_double(sv), to_double(bv));
        CHECK(std::abs(approx - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("from_s_coeffs and printing") {
    Poly2 p = Poly2::from_s_coeffs({Rational(1), Rational(2), Rational(1)});
    CHECK(p == Poly2(1) + 2 * S + S * S);
    CHECK(Poly2().str() == "0");
    CHECK(!p.str().empty());
}
