#include "finsler/zeta.hpp"

namespace finsler {

namespace {

// The 26 coefficient functions assembled from Q, Theta, Psi exactly as the
// general curvature formula lists them. One transcription serves both the
// exact rational-function build (F = RatFun) and plain numeric evaluation
// (F = double); S is the symbol/value s and X is (B - s^2).
template <typename F>
std::array<F, 26> assemble_zeta(const F& Q, const F& Qs, const F& Qss, const F& T, const F& Ts,
                                const F& TB, const F& P, const F& Ps, const F& Pss, const F& PB,
                                const F& PsB, const F& S, const F& X) {
    std::array<F, 26> z;
    z[0] = 2 * P * Ts * X - 2 * S * P * T + T * T - Ts;
    z[1] = 2 * P * Pss * X * X - (6 * S * P * Ps + Pss) * X + 2 * S * Ps;
    z[2] = F(-4) * (2 * Q * Ts + Qs * T) * P * X + 4 * Q * Ts + 2 * Qs * T
           + 4 * Q * T * (S * P - T) - 2 * TB;
    z[3] = F(-4) * P * (2 * Q * Pss + Qs * Ps + Qss * Ps * Ps) * X * X
           + (F(-4) * P * P * (Q - S * Qs) + 4 * Qss * P + 2 * Qs * Ps + 4 * Q * Pss
              - 2 * PsB + 20 * S * Q * P * Ps) * X
           + 2 * P * (Q - S * Qs) - 4 * Ps - Qss - 10 * S * Q * Ps;
    z[4] = 4 * P * T - 2 * TB;
    z[5] = 2 * (2 * P * Ps - PsB) * X - 2 * Ps;
    z[6] = F(0) - T;
    z[7] = F(0) - Ps * X;
    z[8] = 8 * Q * P * (Q * Ts + Qs * T) * X + 4 * Q * Q * (T * T - Ts) + 4 * Q * (TB - Qs);
    z[9] = (4 * P * P * (2 * Q * Qss - Qs * Qs) + 8 * Q * P * (Q * Pss + Qs * Ps)
            - 4 * Q * Q * Ps * Ps) * X * X
           + (F(-16) * S * Q * P * (Q * Ps + Qs * P) - 4 * P * (2 * Q * Qss - Qs * Qs)
              - 4 * Q * (Q * Pss + Qs * Ps) + 4 * Q * PsB + 4 * Qs * PB) * X
           - 4 * S * S * Q * Q * P * P + 4 * (F(2) + 3 * S * Q) * (Q * Ps + Qs * P)
           - 8 * Q * Q * P + 2 * Q * Qss - Qs * Qs + 4 * S * Q * PB;
    z[10] = 4 * P * P + 4 * PB;
    z[11] = 4 * Q * (F(-2) * P * T + TB);
    z[12] = (8 * P * (Qs * P - Q * Ps) + 4 * Q * PsB + 4 * Qs * PB) * X
            + 8 * S * Q * P * P + 4 * Q * Ps - 4 * (F(1) - S * Q) * PB;
    z[13] = 2 * P;
    z[14] = 4 * Q * T;
    z[15] = 4 * (Q * Ps - Qs * P) * X + 2 * Qs - 2 * (F(1) + 2 * S * Q) * P;
    z[16] = 2 * Q * T;
    z[17] = 2 * (Q * Ps + Qs * P) * X + 2 * S * Q * P - Qs;
    z[18] = 2 * (F(1) + S * Q) * Qs - 2 * Q * Q;
    z[19] = F(-8) * (P * P + PB) * Q;
    z[20] = F(-4) * Q * Q * T;
    z[21] = 2 * Q * P - 4 * Q * Q * Ps * X;
    z[22] = 2 * Q * P;
    z[23] = 2 * Q;
    z[24] = F(-4) * Q * Q * P;
    z[25] = F(0) - Q * Q;
    return z;
}

} // namespace

ZetaSet generic_zeta(const QtpSymbols& q, std::string metric_name) {
    const RatFun S{Poly2::var_s()};
    const RatFun X{Poly2::var_b() - Poly2::var_s() * Poly2::var_s()};
    ZetaSet out;
    out.provenance = ZetaProvenance::Generic;
    out.metric_name = std::move(metric_name);
    out.symbols = std::make_shared<const QtpSymbols>(q);
    out.zeta = assemble_zeta<RatFun>(q.Q, q.Q_s, q.Q_ss, q.Theta, q.Theta_s, q.Theta_B, q.Psi,
                                     q.Psi_s, q.Psi_ss, q.Psi_B, q.Psi_sB, S, X);
    return out;
}

std::array<double, 26> zeta_formula_values(const QtpValues& v, double s, double B) {
    return assemble_zeta<double>(v.Q, v.Q_s, v.Q_ss, v.Theta, v.Theta_s, v.Theta_B, v.Psi, v.Psi_s,
                                 v.Psi_ss, v.Psi_B, v.Psi_sB, s, B - s * s);
}

} // namespace finsler
