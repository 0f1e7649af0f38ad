#include "finsler/phi.hpp"

#include "finsler/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace finsler;

namespace {
const Poly2 S = Poly2::var_s();
const Poly2 B = Poly2::var_b();
const Poly2 one(1);

std::vector<Rational> rat(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}
} // namespace

TEST_CASE("named families") {
    CHECK(make_phi(PhiKind::Riemannian).coeffs == rat({1}));
    CHECK(make_phi(PhiKind::Randers).coeffs == rat({1, 1}));
    CHECK(make_phi(PhiKind::Square).coeffs == rat({1, 2, 1}));
    CHECK(make_phi(PhiKind::RandersSquare).coeffs == rat({1, 3, 1}));

    CHECK(make_phi(PhiKind::Square).b0 == 1.0);
    CHECK(make_phi(PhiKind::RandersSquare).b0 ==
          doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-15));
    CHECK(std::isinf(make_phi(PhiKind::Riemannian).b0));
}

TEST_CASE("custom phi") {
    CHECK_THROWS_AS(make_phi(PhiKind::Custom, rat({0, 1})), ValidationError);
    CHECK_THROWS_AS(make_phi(PhiKind::Custom, {}), ValidationError);
    PhiFamily f = make_phi(PhiKind::Custom, rat({1, 3, 1}));
    // numeric bound should land on the root of phi
    CHECK(f.b0 == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-9));
}

TEST_CASE("phi_from_name round-trips the CLI metric names") {
    CHECK(phi_from_name("square").kind == PhiKind::Square);
    CHECK(phi_from_name("randers-square").kind == PhiKind::RandersSquare);
    CHECK_THROWS_AS(phi_from_name("matsumoto"), ValidationError);
}

TEST_CASE("shen validity verdicts") {
    PhiFamily sq = make_phi(PhiKind::Square);
    PhiFamily rc = make_phi(PhiKind::RandersSquare);

    CHECK(shen_validity(sq, 0.5).valid);
    CHECK(shen_validity(sq, 0.1, 10000).valid);
    CHECK(shen_validity(sq, 0.9, 10000).valid);
    CHECK_FALSE(shen_validity(sq, 1.0, 10000).valid);

    CHECK(shen_validity(rc, 0.3, 10000).valid);
    ShenVerdict bad = shen_validity(rc, 0.39, 10000);
    CHECK_FALSE(bad.valid);
    CHECK(bad.witness_s == doctest::Approx(-0.39).epsilon(1e-6));

    CHECK_THROWS_AS(shen_validity(sq, 0.5, 1), ValidationError);
    CHECK_THROWS_AS(shen_validity(sq, -0.1), ValidationError);
}

TEST_CASE("square metric validity sweep across the unit interval") {
    PhiFamily sq = make_phi(PhiKind::Square);
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> inside(0.001, 0.999);
    std::uniform_real_distribution<double> outside(1.0, 3.0);
    for (int i = 0; i < 50; ++i) {
        CHECK(shen_validity(sq, inside(rng)).valid);
        CHECK_FALSE(shen_validity(sq, outside(rng)).valid);
    }
}

TEST_CASE("second validity polynomial is 1 - 3s^2 + 2B for both square forms") {
    Poly2 want = one - 3 * S * S + 2 * B;
    CHECK(make_phi(PhiKind::Square).shen_polynomial() == want);
    CHECK(make_phi(PhiKind::RandersSquare).shen_polynomial() == want);
}

TEST_CASE("qtp for the Riemannian baseline is identically zero") {
    QtpSymbols q = qtp(make_phi(PhiKind::Riemannian));
    for (const RatFun* f : {&q.Q, &q.Q_s, &q.Q_ss, &q.Theta, &q.Theta_s, &q.Theta_B, &q.Psi,
                            &q.Psi_s, &q.Psi_ss, &q.Psi_B, &q.Psi_sB})
        CHECK(f->is_zero());
}

TEST_CASE("qtp closed forms for the two square-type metrics") {
    QtpSymbols sq = qtp(make_phi(PhiKind::Square));
    CHECK(sq.Q.equals(RatFun(Poly2(2), one - S)));
    CHECK(sq.Psi.equals(RatFun(one, one - 3 * S * S + 2 * B)));
    CHECK(sq.Theta.equals(RatFun(one - 2 * S, one - 3 * S * S + 2 * B)));

    QtpSymbols rc = qtp(make_phi(PhiKind::RandersSquare));
    CHECK(rc.Q.equals(RatFun(Poly2(3) + 2 * S, one - S * S)));
    CHECK(rc.Psi.equals(RatFun(one, one - 3 * S * S + 2 * B)));
    CHECK(rc.Theta.equals(RatFun(Poly2(3) - 9 * S * S - 4 * S.pow(3),
                                 Poly2(2) * (one + 3 * S + S * S) * (one - 3 * S * S + 2 * B))));
}

TEST_CASE("Q (phi - s phi') = phi' as an exact identity") {
    for (PhiKind kind :
         {PhiKind::Riemannian, PhiKind::Randers, PhiKind::Square, PhiKind::RandersSquare}) {
        PhiFamily f = make_phi(kind);
        Poly2 p = f.poly();
        Poly2 p1 = p.diff(Var::S);
        RatFun q = qtp(f).Q;
        CHECK((q * RatFun(p - S * p1, one)).equals(RatFun(p1, one)));
    }
}

TEST_CASE("degenerate phi is rejected") {
    PhiFamily bad;
    bad.kind = PhiKind::Custom;
    bad.coeffs = {Rational(0), Rational(1)}; // phi = s, so phi - s phi' = 0
    bad.b0 = 1.0;
    CHECK_THROWS_AS(qtp(bad), MathDomainError);
}
