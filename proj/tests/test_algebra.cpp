#include "finsler/algebra.hpp"

#include "finsler/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace finsler;
using namespace finsler::testing;

TEST_CASE("validate_algebra") {
    PhiFamily sq = make_phi(PhiKind::Square);
    PhiFamily rc = make_phi(PhiKind::RandersSquare);

    CHECK_NOTHROW(validate_algebra(abelian(3, 0.5), sq));

    LieAlgebra bad(3, 0.5);
    bad.cc(0, 1, 2) = 1;
    bad.cc(1, 0, 2) = 1; // not antisymmetric
    CHECK_THROWS_WITH_AS(validate_algebra(bad, sq),
                         doctest::Contains("not antisymmetric"), ValidationError);

    // c = 0.5 exceeds the randers-square bound (3 - sqrt 5)/2
    CHECK_THROWS_WITH_AS(validate_algebra(so3(0.5), rc), doctest::Contains("randers-square"),
                         ValidationError);
    CHECK_NOTHROW(validate_algebra(so3(0.3), rc));

    CHECK_THROWS_AS(validate_algebra(LieAlgebra(1, 0.5), sq), ValidationError);
    CHECK_THROWS_AS(validate_algebra(abelian(2, 0.0), sq), ValidationError);
    CHECK_THROWS_AS(validate_algebra(abelian(2, 1.2), sq), ValidationError);
}

TEST_CASE("christoffel symbols") {
    ConnectionData ab = christoffel(abelian(3, 0.5));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int m = 0; m < 3; ++m) {
                CHECK(ab.gamma(i, j, m) == 0.0);
                CHECK(ab.nabla(i, j, m) == 0.0);
            }

    ConnectionData cd = christoffel(so3(0.5));
    CHECK(cd.nabla(0, 1, 2) == doctest::Approx(-0.5));
    CHECK(cd.gamma(0, 1, 2) == doctest::Approx(0.5));  // f(1,2) = 1
    CHECK(cd.gamma(1, 0, 2) == doctest::Approx(0.5));  // f(2,1) = 0, nabla = +1/2
}

TEST_CASE("beta tensors") {
    BetaTensors ab = beta_tensors(abelian(4, 0.3));
    for (double v : ab.r_ij) CHECK(v == 0.0);
    for (double v : ab.s_ij) CHECK(v == 0.0);
    for (double v : ab.r_jk_m) CHECK(v == 0.0);

    BetaTensors t = beta_tensors(so3(1.0));
    CHECK(t.s_ij[0 * 3 + 1] == doctest::Approx(0.5)); // s_{12} = (c/2) C^3_{12}
    CHECK(t.r_ij[0 * 3 + 1] == doctest::Approx(0.0)); // r_{12} = 0 for so(3)
    for (double v : t.r_ij) CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("tensor symmetry properties on random algebras") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        LieAlgebra alg = random_algebra(rng, n, 0.4);
        BetaTensors t = beta_tensors(alg);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                CHECK(t.s_ij[static_cast<std::size_t>(i) * n + j] ==
                      doctest::Approx(-t.s_ij[static_cast<std::size_t>(j) * n + i]).epsilon(1e-14));
                CHECK(t.r_ij[static_cast<std::size_t>(i) * n + j] ==
                      doctest::Approx(t.r_ij[static_cast<std::size_t>(j) * n + i]).epsilon(1e-14));
            }
    }
}

TEST_CASE("contracted scalars on the worked examples") {
    std::vector<double> e1{1, 0, 0};
    ContractedScalars ab = contracted_scalars(abelian(3, 0.5), std::vector<double>{1, 2, 2});
    CHECK(ab.alpha == doctest::Approx(3.0));
    CHECK(ab.r00 == 0.0);
    CHECK(ab.s0l_sl0 == 0.0);
    CHECK(ab.sjl_slj == 0.0);

    ContractedScalars sc = contracted_scalars(so3(1.0), e1);
    CHECK(sc.s0 == doctest::Approx(0.0));
    CHECK(sc.s0l_sl0 == doctest::Approx(-0.25)); // only C^3_{21} contributes
    CHECK(sc.sjl_slj == doctest::Approx(-0.5));
    CHECK(sc.r == 0.0);
    CHECK(sc.s_ratio == doctest::Approx(0.0));
}

TEST_CASE("dual-path equality on random algebras") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        LieAlgebra alg = random_algebra(rng, n, 0.05 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0);
        std::vector<double> z = random_direction(rng, n);
        ContractedScalars sc;
        // contracted_scalars asserts |tensor - closed form| <= 1e-10 per scalar
        CHECK_NOTHROW(sc = contracted_scalars(alg, z));
        CHECK(sc.r == 0.0);
        CHECK(std::abs(sc.s_ratio) <= alg.c + 1e-12);
    }
}

TEST_CASE("direction validation") {
    CHECK_THROWS_AS(contracted_scalars(so3(0.5), std::vector<double>{0, 0, 0}), ValidationError);
    CHECK_THROWS_AS(contracted_scalars(so3(0.5), std::vector<double>{1, 0}), ValidationError);
}

TEST_CASE("vanishing S-curvature criterion") {
    CHECK(s_curvature_vanishes(so3(0.1)));
    CHECK(s_curvature_vanishes(so3(0.9)));
    CHECK(s_curvature_vanishes(heisenberg(0.4)));
    CHECK_FALSE(s_curvature_vanishes(solvable(0.5)));
    CHECK(s_curvature_vanishes(abelian(4, 0.2)));

    std::mt19937 rng(13);
    for (int i = 0; i < 20; ++i) {
        LieAlgebra alg = vanishing_s_algebra(rng, 2 + static_cast<int>(rng() % 4), 0.3);
        CHECK(s_curvature_vanishes(alg));
    }
}

TEST_CASE("alpha Ricci oracles") {
    std::vector<double> e1{1, 0, 0}, e3{0, 0, 1};
    CHECK(alpha_ricci(abelian(3, 0.5), std::vector<double>{1, 2, 3}, AlphaRicciMode::lie_group()) ==
          doctest::Approx(0.0));
    CHECK(alpha_ricci(so3(0.5), e1, AlphaRicciMode::lie_group()) == doctest::Approx(0.5));
    CHECK(alpha_ricci(heisenberg(0.4), e1, AlphaRicciMode::lie_group()) == doctest::Approx(-0.5));
    CHECK(alpha_ricci(heisenberg(0.4), e3, AlphaRicciMode::lie_group()) == doctest::Approx(0.5));

    // bi-invariance makes the so(3) Ricci isotropic: |Z|^2 / 2
    std::mt19937 rng(41);
    for (int i = 0; i < 10; ++i) {
        std::vector<double> z = random_direction(rng, 3);
        double n2 = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
        CHECK(alpha_ricci(so3(0.5), z, AlphaRicciMode::lie_group()) ==
              doctest::Approx(0.5 * n2).epsilon(1e-10));
    }
}

TEST_CASE("explicit alpha Ricci") {
    std::vector<double> eye{1, 0, 0, 0, 1, 0, 0, 0, 1};
    CHECK(alpha_ricci(abelian(3, 0.5), std::vector<double>{3, 4, 0},
                      AlphaRicciMode::explicit_matrix(eye)) == doctest::Approx(25.0));

    std::vector<double> asym{1, 2, 0, 0, 1, 0, 0, 0, 1};
    CHECK_THROWS_AS(alpha_ricci(abelian(3, 0.5), std::vector<double>{1, 0, 0},
                                AlphaRicciMode::explicit_matrix(asym)),
                    ValidationError);
    CHECK_THROWS_AS(alpha_ricci(abelian(3, 0.5), std::vector<double>{1, 0, 0},
                                AlphaRicciMode::explicit_matrix({1, 0, 0, 1})),
                    ValidationError);
}
