#pragma once

#include "finsler/phi.hpp"

#include <span>
#include <vector>

namespace finsler {

/// Lie algebra of a homogeneous space in an orthonormal basis {w_1..w_n}
/// with w_n = w/c the direction of the invariant 1-form. C(i,j,m) stores
/// C^m_{ij} = <[w_i, w_j], w_m>; indices are 0-based internally.
struct LieAlgebra {
    int n = 0;
    double c = 0.0;
    std::vector<double> C; // n^3 entries, layout (i*n + j)*n + m

    LieAlgebra() = default;
    LieAlgebra(int dim, double c_val)
        : n(dim), c(c_val), C(static_cast<std::size_t>(dim) * dim * dim, 0.0) {}

    double cc(int i, int j, int m) const {
        return C[static_cast<std::size_t>(i * n + j) * n + m];
    }
    double& cc(int i, int j, int m) {
        return C[static_cast<std::size_t>(i * n + j) * n + m];
    }
};

/// Checks antisymmetry, dimension, and c against the metric's validity bound.
/// Returns the input unchanged; throws ValidationError otherwise.
LieAlgebra validate_algebra(LieAlgebra raw, const PhiFamily& metric);

/// Christoffel symbols and hatted-field covariant products at the origin.
struct ConnectionData {
    int n = 0;
    std::vector<double> gamma_; // Gamma^m_{ij}
    std::vector<double> nabla_; // <nabla_{w^_i} w^_j, w^_m>
    double gamma(int i, int j, int m) const { return gamma_[static_cast<std::size_t>(i * n + j) * n + m]; }
    double nabla(int i, int j, int m) const { return nabla_[static_cast<std::size_t>(i * n + j) * n + m]; }
};

ConnectionData christoffel(const LieAlgebra& alg);

/// The r/s tensor family of the invariant 1-form at the origin.
struct BetaTensors {
    int n = 0;
    std::vector<double> r_ij, s_ij;       // n x n
    std::vector<double> r_i, s_i;         // n
    std::vector<double> s_jk_m;           // s_{jk;m}, n^3 (j*n+k)*n+m
    std::vector<double> s_j_k;            // s_{j;k}, n x n
    std::vector<double> b_jkm;            // b_{j;k;m}, n^3
    std::vector<double> r_jk_m;           // r_{jk;m} = s_{jk;m} + b_{k;j;m}, n^3
};

BetaTensors beta_tensors(const LieAlgebra& alg);

/// The twenty direction-contracted scalars feeding the curvature formula,
/// plus alpha(Z), beta(Z) and their ratio.
struct ContractedScalars {
    double r00 = 0, s0 = 0, r0 = 0, r = 0;
    double r00_0 = 0;    // r_{00;0}
    double rll = 0;      // r^l_l
    double r0l_rl0 = 0;  // r_{0l} r^l_0
    double r00l_bl = 0;  // r_{00;l} b^l
    double r0l0_bl = 0;  // r_{0l;0} b^l
    double r0l_sl0 = 0;  // r_{0l} s^l_0
    double s00 = 0;      // s_{0;0}
    double s0l_sl0 = 0;  // s_{0l} s^l_0
    double sl_sl0 = 0;   // s_l s^l_0
    double sl_rl0 = 0;   // s_l r^l_0
    double rl_sl0 = 0;   // r_l s^l_0
    double s0l_bl = 0;   // s_{0;l} b^l
    double sl0_bl = 0;   // s_{l;0} b^l
    double sl0l = 0;     // s^l_{0;l}
    double sl_sl = 0;    // s_l s^l
    double sjl_slj = 0;  // s^j_l s^l_j
    double alpha = 0, beta = 0, s_ratio = 0;
};

/// Computes every scalar twice (tensor contraction vs the closed forms in
/// contracted structure constants) and throws MathDomainError naming the
/// scalar when the two paths disagree beyond 1e-10.
ContractedScalars contracted_scalars(const LieAlgebra& alg, std::span<const double> Z);

/// True iff r_ij == 0 and s_i == 0 (the vanishing S-curvature criterion).
bool s_curvature_vanishes(const LieAlgebra& alg, double tol = 1e-12);

struct AlphaRicciMode {
    enum class Kind { LieGroup, Explicit } kind = Kind::LieGroup;
    std::vector<double> matrix; // n x n symmetric, Explicit only

    static AlphaRicciMode lie_group() { return {}; }
    static AlphaRicciMode explicit_matrix(std::vector<double> m) {
        return {Kind::Explicit, std::move(m)};
    }
};

/// Ricci curvature of the underlying Riemannian metric alpha in direction Z.
/// LieGroup mode: curvature-tensor trace of the left-invariant metric
/// (trivial isotropy). Explicit mode: Z^T M Z for a user-supplied matrix.
double alpha_ricci(const LieAlgebra& alg, std::span<const double> Z, const AlphaRicciMode& mode);

} // namespace finsler
