#include "finsler/ricci.hpp"

#include "finsler/errors.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace finsler {

double rt_term(const ContractedScalars& sc, const std::array<double, 26>& zv, int n) {
    if (!(sc.alpha > 0)) throw MathDomainError("rt_term needs alpha(Z) > 0");
    auto z = [&](int k) { return zv[static_cast<std::size_t>(k - 1)]; };
    const double a = sc.alpha;
    double t = 0.0;
    t += ((n - 1) * z(1) + z(2)) * sc.r00 * sc.r00 / (a * a);
    t += (((n - 1) * z(3) + z(4)) * sc.r00 * sc.s0 + ((n - 1) * z(5) + z(6)) * sc.r00 * sc.r0 +
          ((n - 1) * z(7) + z(8)) * sc.r00_0) /
         a;
    t += ((n - 1) * z(9) + z(10)) * sc.s0 * sc.s0;
    t += (sc.r * sc.r00 - sc.r0 * sc.r0) * z(11);
    t += ((n - 1) * z(12) + z(13)) * sc.r0 * sc.s0;
    t += (sc.r00 * sc.rll - sc.r0l_rl0 + sc.r00l_bl - sc.r0l0_bl) * z(14);
    t += ((n - 1) * z(15) + z(16)) * sc.r0l_sl0;
    t += ((n - 1) * z(17) + z(18)) * sc.s00;
    t += sc.s0l_sl0 * z(19);
    t += a * (sc.r * sc.s0 * z(20) + ((n - 1) * z(21) + z(22)) * sc.sl_sl0);
    t += a * ((3 * sc.sl_rl0 - 2 * sc.s0 * sc.rll + 2 * sc.rl_sl0 - 2 * sc.s0l_bl + sc.sl0_bl) *
                  z(23) +
              sc.sl0l * z(24));
    t += a * a * (sc.sl_sl * z(25) + sc.sjl_slj * z(26));
    return t;
}

namespace {

double sq(double x) { return x * x; }

struct EvalContext {
    ContractedScalars sc;
    double s = 0.0;
    double B = 0.0;
};

EvalContext eval_context(const LieAlgebra& alg, const PhiFamily& phi, std::span<const double> Z) {
    ShenVerdict v = shen_validity(phi, alg.c);
    if (!v.valid)
        throw MathDomainError("metric " + phi.name() + " is not a Finsler metric at c=" +
                              std::to_string(alg.c) + " (violation at s=" +
                              std::to_string(v.witness_s) + ")");
    EvalContext ctx;
    ctx.sc = contracted_scalars(alg, Z);
    ctx.s = ctx.sc.s_ratio;
    ctx.B = alg.c * alg.c;
    if (std::abs(ctx.s) > alg.c + 1e-12) throw MathDomainError("|s| exceeds c; broken invariant");
    return ctx;
}

PhiFamily phi_of(TableKind kind) {
    return make_phi(kind == TableKind::Square ? PhiKind::Square : PhiKind::RandersSquare);
}

/// Deriving a zeta set costs ~0.2 s; scans and property checks evaluate the
/// same set thousands of times, so compiled sets are memoized by key.
std::shared_ptr<const CompiledZetaSet> cached_zetas(const std::string& key,
                                                    const std::function<ZetaSet()>& build) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const CompiledZetaSet>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto compiled = std::make_shared<const CompiledZetaSet>(compile_zeta(build()));
    cache.emplace(key, compiled);
    return compiled;
}

std::string phi_key(const PhiFamily& phi) {
    std::ostringstream os;
    os << "generic:";
    for (const auto& c : phi.coeffs) os << rational_str(c) << ",";
    return os.str();
}

std::shared_ptr<const CompiledZetaSet> compiled_generic(const PhiFamily& phi) {
    return cached_zetas(phi_key(phi), [&] { return generic_zeta(qtp(phi), phi.name()); });
}

std::shared_ptr<const CompiledZetaSet> compiled_for(TableKind kind, ZetaSource source) {
    if (source == ZetaSource::PaperTable) {
        std::string key = kind == TableKind::Square ? "table:square" : "table:randers-square";
        return cached_zetas(key, [&] { return table_zeta(kind); });
    }
    return compiled_generic(phi_of(kind));
}

} // namespace

RicciReport ricci_general(const LieAlgebra& alg, const PhiFamily& phi, std::span<const double> Z,
                          const AlphaRicciMode& mode, double tol) {
    EvalContext ctx = eval_context(alg, phi, Z);
    std::array<double, 26> zv = compiled_generic(phi)->eval(ctx.s, ctx.B, tol);

    RicciReport rep;
    rep.metric_name = phi.name();
    rep.zeta_source = ZetaSource::Generic;
    rep.valid = true;
    rep.s_vanishes = s_curvature_vanishes(alg);
    rep.s_ratio = ctx.s;
    rep.B_value = ctx.B;
    rep.alpha_ric = alpha_ricci(alg, Z, mode);
    rep.rt_term = rt_term(ctx.sc, zv, alg.n);
    rep.total = rep.alpha_ric + rep.rt_term;
    return rep;
}

RicciReport ricci_homogeneous(const LieAlgebra& alg, TableKind kind, std::span<const double> Z,
                              const AlphaRicciMode& mode, ZetaSource source, double tol) {
    const PhiFamily phi = phi_of(kind);
    EvalContext ctx = eval_context(alg, phi, Z);
    std::array<double, 26> zv = compiled_for(kind, source)->eval(ctx.s, ctx.B, tol);
    auto z = [&](int k) { return zv[static_cast<std::size_t>(k - 1)]; };

    const int n = alg.n;
    const int nn = n - 1;
    const double c = alg.c;
    const double a = ctx.sc.alpha;
    std::span<const double> y = Z;

    // contracted structure constants, as in the scalar module
    std::vector<double> Cu(static_cast<std::size_t>(n) * n, 0.0);  // C^0_{ij}
    std::vector<double> A0j(static_cast<std::size_t>(n) * n, 0.0); // C^m_{0j}
    std::vector<double> Ai0(static_cast<std::size_t>(n) * n, 0.0); // C^m_{i0}
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
            C00[j] += cu(i, j) * y[i];
            Cu0[j] += cu(j, i) * y[i];
            trC[j] += alg.cc(i, j, i); // C^l_{lj}
        }
    const double C00n = C00[nn];
    const double Cnn0 = ci0(nn, nn);
    double Clnl = 0.0; // C^l_{nl}
    for (int l = 0; l < n; ++l) Clnl += alg.cc(nn, l, l);

    double t = alpha_ricci(alg, Z, mode);
    const double alpha_ric = t;

    t += c * c * C00n * C00n / (a * a) * ((n - 1) * z(1) + z(2));
    t += c * c * c * C00n * Cnn0 / (2 * a) * ((n - 1) * (z(3) - z(5)) + z(4) - z(6));
    {
        double dot = 0.0;
        for (int l = 0; l < n; ++l) dot += C00[l] * (cu(nn, l) + ci0(l, nn));
        t += -c * dot / a * ((n - 1) * z(7) + z(8));
    }
    t += std::pow(c, 4) * Cnn0 * Cnn0 / 4.0 * ((n - 1) * (z(9) - z(12)) + z(10) - z(11) - z(13));
    {
        double dot = 0.0, dot2 = 0.0;
        for (int l = 0; l < n; ++l) {
            dot += (ci0(l, nn) + cu(nn, l)) * (2 * cu(nn, l) + c0j(nn, l) + 2 * c0j(l, nn));
            dot2 += alg.cc(nn, l, nn) * Cu0[l];
        }
        t += -(c * c / 4.0) * (4.0 * C00n * Clnl + dot + 2.0 * dot2) * z(14);
    }
    {
        double dot = 0.0;
        for (int l = 0; l < n; ++l) dot += c0j(nn, l) * (ci0(l, nn) + cu(nn, l));
        t += (c * c / 4.0) * dot * ((n - 1) * z(15) + z(16));
    }
    {
        double dot = 0.0;
        for (int l = 0; l < n; ++l) dot += alg.cc(nn, l, nn) * C00[l];
        t += (c * c / 2.0) * dot * ((n - 1) * z(17) + z(18));
    }
    {
        double ss = 0.0;
        for (int l = 0; l < n; ++l) ss += ci0(nn, l) * ci0(nn, l); // (C^n_{l0})^2
        t += -(c * c / 4.0) * ss * z(19);
    }
    {
        double dot = 0.0;
        for (int l = 0; l < n; ++l) dot += ci0(nn, l) * alg.cc(nn, l, nn); // C^n_{l0} C^n_{nl}
        t += (c * c * c / 4.0) * a * dot * ((n - 1) * z(21) + z(22));
    }
    {
        double dot = 0.0;
        for (int l = 0; l < n; ++l) dot += alg.cc(nn, l, nn) * (4 * cu(nn, l) - c0j(nn, l));
        t += (c * c * c / 4.0) * a * (4.0 * Cnn0 * Clnl - dot) * z(23);
    }
    {
        double acc = 0.0;
        for (int u = 0; u < n; ++u) acc += 2.0 * ci0(nn, u) * trC[u]; // 2 C^n_{t0} C^l_{lt}
        for (int l = 0; l < n; ++l)
            for (int u = 0; u < n; ++u) acc += alg.cc(l, u, nn) * cu(l, u); // C^n_{lt} C^0_{lt}
        t += (c / 4.0) * a * acc * z(24);
    }
    {
        double snn = 0.0, sall = 0.0;
        for (int l = 0; l < n; ++l) snn += sq(alg.cc(nn, l, nn));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) sall += sq(alg.cc(i, k, nn));
        t += (c * c / 4.0) * a * a * (c * c * snn * z(25) - sall * z(26));
    }

    RicciReport rep;
    rep.metric_name = phi.name();
    rep.zeta_source = source;
    rep.valid = true;
    rep.s_vanishes = s_curvature_vanishes(alg);
    rep.s_ratio = ctx.s;
    rep.B_value = ctx.B;
    rep.alpha_ric = alpha_ric;
    rep.total = t;
    rep.rt_term = t - alpha_ric;
    return rep;
}

RicciReport ricci_vanishing_s(const LieAlgebra& alg, TableKind kind, std::span<const double> Z,
                              const AlphaRicciMode& mode, ZetaSource source, double tol) {
    if (!s_curvature_vanishes(alg))
        throw MathDomainError("S-curvature does not vanish for this algebra");
    const PhiFamily phi = phi_of(kind);
    EvalContext ctx = eval_context(alg, phi, Z);
    std::array<double, 26> zv = compiled_for(kind, source)->eval(ctx.s, ctx.B, tol);
    auto z = [&](int k) { return zv[static_cast<std::size_t>(k - 1)]; };

    const int n = alg.n;
    const int nn = n - 1;
    const double c = alg.c;
    const double a = ctx.sc.alpha;

    double cnl0_sq = 0.0; // (C^n_{l0})^2
    std::vector<double> Ai0(n, 0.0);
    for (int l = 0; l < n; ++l) {
        double v = 0.0;
        for (int j = 0; j < n; ++j) v += alg.cc(l, j, nn) * Z[j];
        Ai0[l] = v;
        cnl0_sq += v * v;
    }
    double group24 = 0.0;
    {
        std::vector<double> trC(n, 0.0);
        for (int u = 0; u < n; ++u)
            for (int l = 0; l < n; ++l) trC[u] += alg.cc(l, u, l);
        for (int u = 0; u < n; ++u) group24 += 2.0 * Ai0[u] * trC[u];
        for (int l = 0; l < n; ++l)
            for (int u = 0; u < n; ++u) {
                double cu_lu = 0.0;
                for (int m = 0; m < n; ++m) cu_lu += alg.cc(l, u, m) * Z[m];
                group24 += alg.cc(l, u, nn) * cu_lu;
            }
    }
    double cnik_sq = 0.0;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) cnik_sq += sq(alg.cc(i, k, nn));

    RicciReport rep;
    rep.metric_name = phi.name();
    rep.zeta_source = source;
    rep.valid = true;
    rep.s_vanishes = true;
    rep.s_ratio = ctx.s;
    rep.B_value = alg.c * alg.c;
    rep.alpha_ric = alpha_ricci(alg, Z, mode);
    rep.rt_term = -(c * c / 4.0) * cnl0_sq * z(19) + (c / 4.0) * a * group24 * z(24) -
                  (c * c / 4.0) * a * a * cnik_sq * z(26);
    rep.total = rep.alpha_ric + rep.rt_term;
    return rep;
}

std::vector<std::vector<double>> direction_grid(int n, int samples) {
    if (samples < 1) throw ValidationError("direction grid needs samples >= 1");
    std::vector<std::vector<double>> dirs;
    dirs.reserve(static_cast<std::size_t>(samples));
    if (n == 2) {
        for (int i = 0; i < samples; ++i) {
            double th = 2.0 * std::numbers::pi * i / samples;
            dirs.push_back({std::cos(th), std::sin(th)});
        }
    } else if (n == 3) {
        // Fibonacci sphere
        const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
        for (int i = 0; i < samples; ++i) {
            double zc = samples == 1 ? 0.0 : 1.0 - 2.0 * i / (samples - 1.0);
            double r = std::sqrt(std::max(0.0, 1.0 - zc * zc));
            double th = 2.0 * std::numbers::pi * i / golden;
            dirs.push_back({r * std::cos(th), r * std::sin(th), zc});
        }
    } else {
        // deterministic congruential stream, normalized; reproducible for any n
        std::uint64_t state = 0x9e3779b97f4a7c15ULL ^ (static_cast<std::uint64_t>(samples) << 17);
        auto next_unit = [&]() {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            return static_cast<double>(state >> 11) / 9007199254740992.0; // [0,1)
        };
        for (int i = 0; i < samples; ++i) {
            std::vector<double> v(n);
            double norm2 = 0.0;
            do {
                norm2 = 0.0;
                for (int k = 0; k < n; ++k) {
                    // Box-Muller from the deterministic stream
                    double u1 = std::max(next_unit(), 1e-12), u2 = next_unit();
                    v[k] = std::sqrt(-2.0 * std::log(u1)) *
                           std::cos(2.0 * std::numbers::pi * u2);
                    norm2 += v[k] * v[k];
                }
            } while (norm2 < 1e-12);
            for (int k = 0; k < n; ++k) v[k] /= std::sqrt(norm2);
            dirs.push_back(std::move(v));
        }
    }
    return dirs;
}

ScanReport riemannian_implication(const LieAlgebra& alg, const PhiFamily& phi, int samples,
                                  ZetaSource source, const AlphaRicciMode& mode, double tol) {
    ScanReport rep;
    rep.s_vanishes = s_curvature_vanishes(alg);
    rep.directions = direction_grid(alg.n, samples);

    std::shared_ptr<const CompiledZetaSet> zs;
    bool named = phi.kind == PhiKind::Square || phi.kind == PhiKind::RandersSquare;
    if (source == ZetaSource::PaperTable) {
        if (!named) throw ValidationError("paper-table zetas exist only for the named metrics");
        zs = compiled_for(phi.kind == PhiKind::Square ? TableKind::Square : TableKind::RandersSquare,
                          source);
    } else {
        zs = compiled_generic(phi);
    }

    ShenVerdict v = shen_validity(phi, alg.c);
    if (!v.valid)
        throw MathDomainError("metric " + phi.name() + " invalid at c=" + std::to_string(alg.c));

    bool first = true;
    for (const auto& d : rep.directions) {
        ContractedScalars sc = contracted_scalars(alg, d);
        std::array<double, 26> zv = zs->eval(sc.s_ratio, alg.c * alg.c, tol);
        double total = alpha_ricci(alg, d, mode) + rt_term(sc, zv, alg.n);
        rep.values.push_back(total);
        if (first || total < rep.min_ric) rep.min_ric = total;
        if (first || total > rep.max_ric) rep.max_ric = total;
        first = false;
        constexpr double kZeroTol = 1e-12;
        if (total < -kZeroTol)
            ++rep.negative;
        else if (total > kZeroTol)
            ++rep.positive;
        else
            ++rep.zero;
    }

    if (!rep.s_vanishes) {
        rep.message = "S-curvature nonvanishing; corollary not applicable";
    } else if (rep.negative == static_cast<int>(rep.values.size()) && rep.negative > 0) {
        rep.riemannian_flag = true;
        rep.message = "vanishing S-curvature and negative Ricci curvature at all sampled "
                      "directions: such a space must be Riemannian";
    } else {
        rep.message = "vanishing S-curvature but Ricci is not negative at all sampled "
                      "directions; corollary not triggered";
    }
    return rep;
}

} // namespace finsler
