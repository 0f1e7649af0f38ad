#include "finsler/algebra.hpp"

#include "finsler/errors.hpp"

#include <cmath>
#include <string>

namespace finsler {

namespace {

double sq(double x) { return x * x; }

std::string idx3(int m, int i, int j) {
    return "(m=" + std::to_string(m + 1) + ", i=" + std::to_string(i + 1) +
           ", j=" + std::to_string(j + 1) + ")";
}

} // namespace

LieAlgebra validate_algebra(LieAlgebra raw, const PhiFamily& metric) {
    if (raw.n < 2) throw ValidationError("algebra dimension must be >= 2");
    if (raw.C.size() != static_cast<std::size_t>(raw.n) * raw.n * raw.n)
        throw ValidationError("structure constant tensor has wrong size");
    for (int i = 0; i < raw.n; ++i)
        for (int j = 0; j < raw.n; ++j)
            for (int m = 0; m < raw.n; ++m)
                if (std::abs(raw.cc(i, j, m) + raw.cc(j, i, m)) > 1e-12)
                    throw ValidationError("structure constants not antisymmetric at " + idx3(m, i, j));
    if (!(raw.c > 0)) throw ValidationError("c must be positive");
    if (raw.c >= metric.b0)
        throw ValidationError("c >= b0: c=" + std::to_string(raw.c) + " exceeds the validity bound " +
                              std::to_string(metric.b0) + " of the " + metric.name() + " metric");
    return raw;
}

ConnectionData christoffel(const LieAlgebra& alg) {
    const int n = alg.n;
    ConnectionData cd;
    cd.n = n;
    cd.gamma_.assign(static_cast<std::size_t>(n) * n * n, 0.0);
    cd.nabla_.assign(static_cast<std::size_t>(n) * n * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int m = 0; m < n; ++m) {
                double nb = -0.5 * (alg.cc(j, m, i) + alg.cc(i, m, j) + alg.cc(i, j, m));
                double f = (i < j) ? 1.0 : 0.0;
                cd.nabla_[static_cast<std::size_t>(i * n + j) * n + m] = nb;
                cd.gamma_[static_cast<std::size_t>(i * n + j) * n + m] = f * alg.cc(i, j, m) + nb;
            }
    return cd;
}

BetaTensors beta_tensors(const LieAlgebra& alg) {
    const int n = alg.n;
    const int nn = n - 1; // index of w_n
    const double c = alg.c;
    const ConnectionData cd = christoffel(alg);

    BetaTensors t;
    t.n = n;
    t.r_ij.assign(static_cast<std::size_t>(n) * n, 0.0);
    t.s_ij.assign(static_cast<std::size_t>(n) * n, 0.0);
    t.r_i.assign(n, 0.0);
    t.s_i.assign(n, 0.0);
    t.s_jk_m.assign(static_cast<std::size_t>(n) * n * n, 0.0);
    t.s_j_k.assign(static_cast<std::size_t>(n) * n, 0.0);
    t.b_jkm.assign(static_cast<std::size_t>(n) * n * n, 0.0);
    t.r_jk_m.assign(static_cast<std::size_t>(n) * n * n, 0.0);

    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            t.s_ij[static_cast<std::size_t>(j) * n + k] = 0.5 * c * alg.cc(j, k, nn);
            t.r_ij[static_cast<std::size_t>(j) * n + k] =
                0.5 * c * (alg.cc(j, nn, k) + alg.cc(k, nn, j));
        }
    for (int k = 0; k < n; ++k) {
        t.s_i[k] = 0.5 * c * c * alg.cc(nn, k, nn);                 // (c^2/2) C^n_{nk}
        t.r_i[k] = c * t.r_ij[static_cast<std::size_t>(nn) * n + k]; // c r_{nk}
    }

    // s_{jk;m}
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int m = 0; m < n; ++m) {
                double acc = 0.0;
                for (int u = 0; u < n; ++u) {
                    acc += -alg.cc(j, k, u) * alg.cc(m, u, nn);
                    acc += 0.5 * alg.cc(j, u, nn) *
                           (-alg.cc(k, m, u) + alg.cc(k, u, m) + alg.cc(m, u, k));
                    acc += 0.5 * alg.cc(u, k, nn) *
                           (-alg.cc(j, m, u) + alg.cc(j, u, m) + alg.cc(m, u, j));
                }
                t.s_jk_m[static_cast<std::size_t>(j * n + k) * n + m] = 0.5 * c * acc;
            }

    // s_{j;k} = c ( s_{nj;k} + (c/2) C^n_{tj} Gamma^t_{nk} )
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            double acc = t.s_jk_m[static_cast<std::size_t>(nn * n + j) * n + k];
            for (int u = 0; u < n; ++u) acc += 0.5 * c * alg.cc(u, j, nn) * cd.gamma(nn, k, u);
            t.s_j_k[static_cast<std::size_t>(j) * n + k] = c * acc;
        }

    // b_{j;k;m}; the last term is the directional derivative of the nabla
    // coefficient, expanded in structure constants.
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int m = 0; m < n; ++m) {
                double acc = 0.0;
                for (int u = 0; u < n; ++u) {
                    acc += -cd.gamma(nn, u, j) * cd.nabla(m, k, u);
                    acc += -cd.gamma(nn, k, u) * cd.nabla(m, j, u);
                    acc += alg.cc(m, nn, u) * cd.nabla(u, k, j);
                    acc += 0.5 * (alg.cc(m, u, nn) * alg.cc(k, j, u) +
                                  alg.cc(m, u, k) * alg.cc(nn, j, u) +
                                  alg.cc(m, u, j) * alg.cc(nn, k, u) +
                                  alg.cc(k, j, u) * alg.cc(m, nn, u) +
                                  alg.cc(nn, j, u) * alg.cc(m, k, u) +
                                  alg.cc(nn, k, u) * alg.cc(m, j, u));
                }
                t.b_jkm[static_cast<std::size_t>(j * n + k) * n + m] = c * acc;
            }

    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int m = 0; m < n; ++m)
                t.r_jk_m[static_cast<std::size_t>(j * n + k) * n + m] =
                    t.s_jk_m[static_cast<std::size_t>(j * n + k) * n + m] +
                    t.b_jkm[static_cast<std::size_t>(k * n + j) * n + m];

    return t;
}

namespace {

ContractedScalars scalars_tensor_path(const LieAlgebra& alg, std::span<const double> y,
                                      const BetaTensors& t) {
    const int n = alg.n;
    const int nn = n - 1;
    const double c = alg.c;
    auto r2 = [&](int i, int j) { return t.r_ij[static_cast<std::size_t>(i) * n + j]; };
    auto s2 = [&](int i, int j) { return t.s_ij[static_cast<std::size_t>(i) * n + j]; };
    auto s3 = [&](int j, int k, int m) { return t.s_jk_m[static_cast<std::size_t>(j * n + k) * n + m]; };
    auto r3 = [&](int j, int k, int m) { return t.r_jk_m[static_cast<std::size_t>(j * n + k) * n + m]; };
    auto sj = [&](int j, int k) { return t.s_j_k[static_cast<std::size_t>(j) * n + k]; };

    std::vector<double> r0l(n, 0.0), sl0(n, 0.0);
    for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j) {
            r0l[l] += r2(j, l) * y[j];
            sl0[l] += s2(l, j) * y[j];
        }

    ContractedScalars sc;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sc.r00 += r2(i, j) * y[i] * y[j];
    for (int i = 0; i < n; ++i) {
        sc.s0 += t.s_i[i] * y[i];
        sc.r0 += t.r_i[i] * y[i];
    }
    sc.r = c * c * r2(nn, nn);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int m = 0; m < n; ++m) sc.r00_0 += r3(j, k, m) * y[j] * y[k] * y[m];
    for (int l = 0; l < n; ++l) sc.rll += r2(l, l);
    for (int l = 0; l < n; ++l) sc.r0l_rl0 += r0l[l] * r0l[l];
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) sc.r00l_bl += c * r3(j, k, nn) * y[j] * y[k];
    for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m) sc.r0l0_bl += c * r3(j, nn, m) * y[j] * y[m];
    for (int l = 0; l < n; ++l) sc.r0l_sl0 += r0l[l] * sl0[l];
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) sc.s00 += sj(j, k) * y[j] * y[k];
    for (int l = 0; l < n; ++l) sc.s0l_sl0 += -sl0[l] * sl0[l]; // s_{0l} = -s_{l0}
    for (int l = 0; l < n; ++l) {
        sc.sl_sl0 += t.s_i[l] * sl0[l];
        sc.sl_rl0 += t.s_i[l] * r0l[l];
        sc.rl_sl0 += t.r_i[l] * sl0[l];
        sc.sl_sl += t.s_i[l] * t.s_i[l];
    }
    for (int j = 0; j < n; ++j) sc.s0l_bl += c * sj(j, nn) * y[j];
    for (int m = 0; m < n; ++m) sc.sl0_bl += c * sj(nn, m) * y[m];
    for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j) sc.sl0l += s3(l, j, l) * y[j];
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) sc.sjl_slj += -s2(j, l) * s2(j, l);
    return sc;
}

ContractedScalars scalars_closed_form(const LieAlgebra& alg, std::span<const double> y) {
    const int n = alg.n;
    const int nn = n - 1;
    const double c = alg.c;

    // contracted structure constants; a 0 index is contraction with y
    std::vector<double> Cu(static_cast<std::size_t>(n) * n, 0.0);  // Cu[i*n+j]  = C^0_{ij}
    std::vector<double> A0j(static_cast<std::size_t>(n) * n, 0.0); // A0j[m*n+j] = C^m_{0j}
    std::vector<double> Ai0(static_cast<std::size_t>(n) * n, 0.0); // Ai0[m*n+i] = C^m_{i0}
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int m = 0; m < n; ++m) {
                Cu[static_cast<std::size_t>(i) * n + j] += alg.cc(i, j, m) * y[m];
                A0j[static_cast<std::size_t>(m) * n + j] += alg.cc(i, j, m) * y[i];
                Ai0[static_cast<std::size_t>(m) * n + i] += alg.cc(i, j, m) * y[j];
            }
    auto cu = [&](int i, int j) { return Cu[static_cast<std::size_t>(i) * n + j]; };
    auto c0j = [&](int m, int j) { return A0j[static_cast<std::size_t>(m) * n + j]; };
    auto ci0 = [&](int m, int i) { return Ai0[static_cast<std::size_t>(m) * n + i]; };
    std::vector<double> C00(n, 0.0), Cu0(n, 0.0), trC(n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            C00[j] += cu(i, j) * y[i]; // C^0_{0j}
            Cu0[j] += cu(j, i) * y[i]; // C^0_{j0}
            trC[j] += alg.cc(i, j, i); // C^l_{lj}
        }

    ContractedScalars sc;
    sc.r00 = c * C00[nn];
    sc.s0 = 0.5 * c * c * ci0(nn, nn);
    sc.r0 = 0.5 * c * c * c0j(nn, nn);
    sc.r = 0.0;
    for (int i = 0; i < n; ++i) sc.r00_0 += c * C00[i] * (cu(i, nn) + c0j(i, nn));
    for (int l = 0; l < n; ++l) sc.rll += c * alg.cc(l, nn, l);
    for (int l = 0; l < n; ++l) sc.r0l_rl0 += 0.25 * c * c * sq(cu(nn, l) + ci0(l, nn));
    for (int u = 0; u < n; ++u)
        sc.r00l_bl += 0.5 * c * c * (c0j(u, nn) + cu(u, nn)) *
                      (c0j(nn, u) + cu(nn, u) + c0j(u, nn));
    {
        double acc = 0.0;
        for (int u = 0; u < n; ++u) {
            acc += 2.0 * alg.cc(nn, u, nn) * Cu0[u];
            acc += (ci0(nn, u) + cu(u, nn) + c0j(u, nn)) * (cu(nn, u) + ci0(u, nn));
        }
        sc.r0l0_bl = 0.25 * c * c * acc;
    }
    for (int l = 0; l < n; ++l)
        sc.r0l_sl0 += 0.25 * c * c * (cu(nn, l) + ci0(l, nn)) * c0j(nn, l);
    for (int u = 0; u < n; ++u) sc.s00 += 0.5 * c * c * alg.cc(nn, u, nn) * C00[u];
    for (int l = 0; l < n; ++l) sc.s0l_sl0 += -0.25 * c * c * sq(c0j(nn, l));
    for (int l = 0; l < n; ++l) {
        sc.sl_sl0 += 0.25 * c * c * c * alg.cc(nn, l, nn) * ci0(nn, l);
        sc.sl_rl0 += -0.25 * c * c * c * alg.cc(nn, l, nn) * (cu(nn, l) + ci0(l, nn));
        sc.rl_sl0 += 0.25 * c * c * c * alg.cc(l, nn, nn) * ci0(nn, l);
        sc.sl_sl += 0.25 * c * c * c * c * sq(alg.cc(nn, l, nn));
    }
    for (int u = 0; u < n; ++u) {
        sc.s0l_bl += 0.25 * c * c * c * alg.cc(nn, u, nn) * (c0j(u, nn) + cu(nn, u) + c0j(nn, u));
        sc.sl0_bl += -0.25 * c * c * c * alg.cc(u, nn, nn) * (c0j(nn, u) + cu(nn, u) + ci0(u, nn));
    }
    {
        double acc = 0.0;
        for (int u = 0; u < n; ++u) acc += 2.0 * ci0(nn, u) * trC[u];
        for (int l = 0; l < n; ++l)
            for (int u = 0; u < n; ++u)
                acc += alg.cc(l, u, nn) * (c0j(u, l) + c0j(l, u) + cu(l, u));
        sc.sl0l = 0.25 * c * acc;
    }
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) sc.sjl_slj += -0.25 * c * c * sq(alg.cc(j, l, nn));
    return sc;
}

const char* kScalarNames[] = {"r00", "s0", "r0", "r", "r00_0", "rll", "r0l_rl0",
                              "r00l_bl", "r0l0_bl", "r0l_sl0", "s00", "s0l_sl0",
                              "sl_sl0", "sl_rl0", "rl_sl0", "s0l_bl", "sl0_bl",
                              "sl0l", "sl_sl", "sjl_slj"};

std::vector<double> as_list(const ContractedScalars& s) {
    return {s.r00, s.s0, s.r0, s.r, s.r00_0, s.rll, s.r0l_rl0, s.r00l_bl, s.r0l0_bl,
            s.r0l_sl0, s.s00, s.s0l_sl0, s.sl_sl0, s.sl_rl0, s.rl_sl0, s.s0l_bl,
            s.sl0_bl, s.sl0l, s.sl_sl, s.sjl_slj};
}

} // namespace

ContractedScalars contracted_scalars(const LieAlgebra& alg, std::span<const double> Z) {
    if (static_cast<int>(Z.size()) != alg.n) throw ValidationError("direction has wrong dimension");
    double norm2 = 0.0;
    for (double v : Z) norm2 += v * v;
    if (norm2 == 0.0) throw ValidationError("direction must be nonzero");

    const BetaTensors t = beta_tensors(alg);
    ContractedScalars a = scalars_tensor_path(alg, Z, t);
    ContractedScalars b = scalars_closed_form(alg, Z);
    const auto la = as_list(a), lb = as_list(b);
    for (std::size_t i = 0; i < la.size(); ++i)
        if (std::abs(la[i] - lb[i]) > 1e-10)
            throw MathDomainError(std::string("dual-path disagreement on scalar ") + kScalarNames[i] +
                                  ": tensor=" + std::to_string(la[i]) +
                                  " closed-form=" + std::to_string(lb[i]));

    a.alpha = std::sqrt(norm2);
    a.beta = alg.c * Z[static_cast<std::size_t>(alg.n - 1)];
    a.s_ratio = a.beta / a.alpha;
    return a;
}

bool s_curvature_vanishes(const LieAlgebra& alg, double tol) {
    const BetaTensors t = beta_tensors(alg);
    for (double v : t.r_ij)
        if (std::abs(v) > tol) return false;
    for (double v : t.s_i)
        if (std::abs(v) > tol) return false;
    return true;
}

double alpha_ricci(const LieAlgebra& alg, std::span<const double> Z, const AlphaRicciMode& mode) {
    const int n = alg.n;
    if (static_cast<int>(Z.size()) != n) throw ValidationError("direction has wrong dimension");

    if (mode.kind == AlphaRicciMode::Kind::Explicit) {
        if (mode.matrix.size() != static_cast<std::size_t>(n) * n)
            throw ValidationError("explicit alpha-Ricci matrix has wrong size");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (std::abs(mode.matrix[static_cast<std::size_t>(i) * n + j] -
                             mode.matrix[static_cast<std::size_t>(j) * n + i]) > 1e-12)
                    throw ValidationError("explicit alpha-Ricci matrix is not symmetric");
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                acc += Z[i] * mode.matrix[static_cast<std::size_t>(i) * n + j] * Z[j];
        return acc;
    }

    // Left-invariant metric on the group itself: Koszul connection in the
    // orthonormal frame, then the curvature-tensor trace.
    std::vector<double> lc(static_cast<std::size_t>(n) * n * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int m = 0; m < n; ++m)
                lc[static_cast<std::size_t>(i * n + j) * n + m] =
                    0.5 * (alg.cc(i, j, m) - alg.cc(j, m, i) + alg.cc(m, i, j));
    auto nab = [&](std::span<const double> u, std::span<const double> v) {
        std::vector<double> out(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int m = 0; m < n; ++m)
                    out[m] += u[i] * v[j] * lc[static_cast<std::size_t>(i * n + j) * n + m];
        return out;
    };
    auto bracket = [&](std::span<const double> u, std::span<const double> v) {
        std::vector<double> out(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int m = 0; m < n; ++m) out[m] += u[i] * v[j] * alg.cc(i, j, m);
        return out;
    };

    std::vector<double> y(Z.begin(), Z.end());
    std::vector<double> nyy = nab(y, y);
    double ric = 0.0;
    for (int i = 0; i < n; ++i) {
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        std::vector<double> t1 = nab(e, nyy);
        std::vector<double> t2 = nab(y, nab(e, y));
        std::vector<double> t3 = nab(bracket(e, y), y);
        ric += t1[i] - t2[i] - t3[i];
    }
    return ric;
}

} // namespace finsler
