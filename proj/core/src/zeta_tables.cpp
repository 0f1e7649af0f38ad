#include "finsler/zeta.hpp"

namespace finsler {

namespace {

const Poly2 S = Poly2::var_s();
const Poly2 B = Poly2::var_b();
const Poly2 D = Poly2(1) - Poly2(3) * S * S + Poly2(2) * B; // 1 - 3s^2 + 2B
const Poly2 X = B - S * S;                                  // B - s^2

Poly2 sp(int k) { return S.pow(k); }

void set_entry(ZetaSet& out, int index, std::vector<RatFun> fractions) {
    RatFun sum;
    for (const RatFun& f : fractions) sum = sum + f;
    out.zeta[static_cast<std::size_t>(index)] = std::move(sum);
    out.parts[static_cast<std::size_t>(index)] = std::move(fractions);
}

// Verbatim transcription of the closed-form table for the square metric,
// one RatFun per printed fraction.
void square_table(ZetaSet& z) {
    const Poly2 W = Poly2(1) - S; // 1 - s
    set_entry(z, 0,
              {RatFun(-3 * (10 * sp(4) - 8 * sp(3) - (4 * B + 3) * sp(2) + (4 + 4 * B) * S - 1 -
                            2 * B),
                      D.pow(3))});
    set_entry(z, 1,
              {RatFun(-6 * (15 * sp(6) + (-25 * B - 2) * sp(4) + (4 * B + 8 * B * B - 3) * sp(2) +
                            2 * B * B + B),
                      D.pow(4))});
    set_entry(z, 2,
              {RatFun(-8 * (-24 * sp(4) + 15 * sp(3) + (10 + 8 * B) * sp(2) + (-9 - 6 * B) * S +
                            4 * B + 2),
                      W * D.pow(3))});
    set_entry(
        z, 3,
        {RatFun(-48 * X * X *
                    (-63 * sp(6) + 117 * sp(5) + (36 * B - 36) * sp(4) - (30 + 60 * B) * sp(3) +
                     (4 * B * B + 28 * B + 25) * sp(2) - (12 * B + 3 + 12 * B * B) * S + 2 +
                     8 * B + 8 * B * B),
                W.pow(3) * D.pow(5)),
         RatFun(8 *
                    (111 * sp(4) - 168 * sp(3) + (58 - 22 * B) * sp(2) - 12 * B * S + 7 + 18 * B +
                     8 * B * B) *
                    X,
                D.pow(3) * W.pow(3)),
         -RatFun(4 * (39 * sp(4) - 51 * sp(3) + (7 - 16 * B) * sp(2) + (9 + 6 * B) * S + 2 * B +
                      4 * B * B),
                 D.pow(2) * W.pow(3))});
    set_entry(z, 4, {RatFun(8 * (1 - 2 * S), D.pow(2))});
    set_entry(z, 5, {RatFun(12 * S * (4 * B - 3 * sp(2) - 1), D.pow(3))});
    set_entry(z, 6, {RatFun(-1 + 2 * S, D)});
    set_entry(z, 7, {RatFun(-6 * S * X, D.pow(2))});
    set_entry(z, 8,
              {RatFun(-16 * (-27 * sp(6) + (54 * B + 42) * sp(4) - (20 * B + 7) * sp(3) -
                             (28 * B + 20 + 36 * B * B) * sp(2) + (9 + 10 * B + 8 * B * B) * S -
                             1 + 8 * B.pow(3) + 8 * B * B),
                      W.pow(3) * D.pow(3))});
    set_entry(
        z, 9,
        {RatFun(48 *
                    (45 * sp(4) - 60 * sp(3) + (18 - 12 * B) * sp(2) + (-4 - 8 * B) * S + 5 +
                     4 * B * B + 12 * B) *
                    (B * B - 2 * sp(2) * B + sp(4)),
                D.pow(4) * W.pow(4)),
         -RatFun(32 *
                     (60 * sp(4) - 72 * sp(3) + (9 - 21 * B) * sp(2) + (4 - 4 * B) * S + 5 +
                      13 * B + 6 * B * B) *
                     X,
                 W.pow(4) * D.pow(3)),
         RatFun(16 * (-17 * sp(3) + 2 * sp(2) + (4 * B + 8) * S + 1 + 2 * B),
                W.pow(3) * D.pow(2)),
         RatFun(4 * (55 * sp(4) - 60 * sp(3) + (10 - 52 * B) * sp(2) + (32 * B + 12) * S - 5 -
                     4 * B + 12 * B * B),
                W.pow(4) * D.pow(2))});
    set_entry(z, 10, {RatFun(Poly2(-4), D.pow(2))});
    set_entry(z, 11, {RatFun(-32 * (1 - 2 * S), W * D.pow(2))});
    set_entry(z, 12,
              {RatFun(8 * (21 * sp(3) - 3 * sp(2) - (26 * B - 5) * S + 2 * B + 1), W * D.pow(3))});
    set_entry(z, 13, {RatFun(Poly2(2), D)});
    set_entry(z, 14, {RatFun(8 * (1 - 2 * S), W * D)});
    set_entry(z, 15,
              {RatFun(2 * (21 * sp(4) - 18 * sp(3) + (-2 - 22 * B) * sp(2) + (-2 + 20 * B) * S +
                           1 + 2 * B),
                      W.pow(2) * D.pow(2))});
    set_entry(z, 16, {RatFun(4 * (1 - 2 * S), W * D)});
    set_entry(z, 17,
              {RatFun(2 * (15 * sp(4) - 18 * sp(3) + (2 - 14 * B) * sp(2) + (2 + 16 * B) * S -
                           2 * B - 1),
                      W.pow(2) * D.pow(2))});
    set_entry(z, 18, {RatFun(-4 * (1 - 3 * S), W.pow(3))});
    set_entry(z, 19, {RatFun(Poly2(16), W * D.pow(2))});
    set_entry(z, 20, {RatFun(-16 * (1 - 2 * S), W.pow(2) * D)});
    set_entry(z, 21,
              {RatFun(4 * (27 * sp(3) - 3 * sp(2) - (26 * B + 1) * S + 1 + 2 * B),
                      W.pow(2) * D.pow(2))});
    set_entry(z, 22, {RatFun(Poly2(4), W * D)});
    set_entry(z, 23, {RatFun(Poly2(4), W)});
    set_entry(z, 24, {RatFun(Poly2(-16), W.pow(2) * D)});
    set_entry(z, 25, {RatFun(Poly2(-4), W.pow(2))});
}

// Verbatim transcription of the closed-form table for the Randers change of
// the square metric.
void randers_square_table(ZetaSet& z) {
    const Poly2 E = Poly2(1) - S * S;         // 1 - s^2
    const Poly2 R = Poly2(1) + 3 * S + S * S; // 1 + 3s + s^2
    const Poly2 big = 12 * sp(6) + 54 * sp(5) + (73 + 8 * B) * sp(4) + (48 * B - 12) * sp(3) +
                      (-42 + 78 * B) * sp(2) + (6 + 48 * B) * S + 18 * B + 9;
    set_entry(z, 0,
              {RatFun(3 * (-40 * sp(8) - 192 * sp(7) + (16 * B - 235) * sp(6) +
                           (72 * B + 96) * sp(5) + (235 + 90 * B) * sp(4) - (73 + 20 * B) * sp(2) +
                           24 * S * B + 18 * B + 9),
                      4 * D.pow(3) * R.pow(2))});
    set_entry(z, 1,
              {RatFun(-6 * (9 * sp(6) + (-13 * B - 2) * sp(4) + (2 * B * B + 4 * B - 3) * sp(2) +
                            B + 2 * B * B),
                      D.pow(4))});
    set_entry(
        z, 2,
        {RatFun(4 * (2 * S + 3) * big * X, E * R.pow(2) * D.pow(3)),
         -RatFun(4 * (3 - 9 * sp(2) - 4 * sp(3)) * X, E.pow(2) * D.pow(2)),
         -RatFun(2 * (2 * S + 3) * (-3 + 9 * sp(2) + 4 * sp(3)) * S, E * R * D.pow(2)),
         -RatFun((2 * S + 3) * (40 * sp(6) + 180 * sp(5) + (227 + 16 * B) * sp(4) +
                                (96 * B - 48) * sp(3) - (138 - 156 * B) * sp(2) +
                                (12 + 96 * B) * S + 36 * B + 27),
                 R.pow(2) * D.pow(2) * E),
         -RatFun(2 * (-3 + 9 * sp(2) + 4 * sp(3)) *
                     (2 - 4 * sp(2) + 2 * B + 3 * S - 9 * sp(3) + 6 * S * B - 2 * sp(4) +
                      2 * sp(2) * B),
                 E.pow(2) * R * D.pow(2))});
    set_entry(
        z, 3,
        {-RatFun(24 * (2 * S + 3) * (18 * sp(2) + 2 + 4 * B + S - 3 * sp(3) + 2 * B * S) * X * X,
                 D.pow(4) * E),
         -RatFun(24 * 12 * (6 * S + 2 * sp(3) + 9 * sp(2) + 3) * sp(2) * X * X,
                 E.pow(3) * D.pow(5)),
         RatFun(4 * (10 * sp(3) - 3 + 27 * sp(2) + 6 * S) * X, E.pow(2) * D.pow(2)),
         RatFun(4 * 2 * (6 * S + 2 * sp(3) + 9 * sp(2) + 3) * X, E.pow(3) * D),
         RatFun(4 * 6 * (2 * S + 3) * (14 * sp(2) + 1 + 2 * B) * X, D.pow(3) * E),
         RatFun(4 * 12 * S * X, D.pow(3)),
         -RatFun(2 * (4 * sp(3) - 3 + 9 * sp(2)), D * E.pow(2)),
         -RatFun(12 * S * (2 + 8 * sp(2) + 15 * S), D.pow(2) * E),
         -RatFun(2 * (6 * S + 2 * sp(3) + 9 * sp(2) + 3), E.pow(3))});
    set_entry(z, 4, {RatFun(-4 * (-3 + 9 * sp(2) + 4 * sp(3)), R * D.pow(2))});
    set_entry(z, 5, {RatFun(12 * S * (4 * B - 3 * sp(2) - 1), D.pow(3))});
    set_entry(z, 6, {RatFun(-3 + 9 * sp(2) + 4 * sp(3), 2 * R * D)});
    set_entry(z, 7, {RatFun(-6 * S * X, D.pow(2))});
    set_entry(
        z, 8,
        {RatFun(8 * (3 + 2 * S) * (-3 + 9 * sp(2) + 4 * sp(3)) * X, E.pow(3) * D.pow(2)),
         -RatFun(4 * (3 + 2 * S).pow(2) * big * X, E.pow(2) * R.pow(2) * D.pow(3)),
         RatFun((3 + 2 * S).pow(2) * (3 - 9 * sp(2) - 4 * sp(3)).pow(2),
                E.pow(2) * R.pow(2) * D.pow(2)),
         RatFun(2 * (3 + 2 * S).pow(2) * big, E.pow(2) * R.pow(2) * D.pow(2)),
         -RatFun(4 * (3 + 2 * S) * (3 - 9 * sp(2) - 4 * sp(3)), E * R * D.pow(2)),
         -RatFun(8 * (3 + 2 * S) * R, E.pow(3))});
    set_entry(
        z, 9,
        {RatFun(16 * (18 * S + 28 * sp(2) + 18 * sp(3) + 3 * sp(4) + 8) * X * X,
                E.pow(4) * D.pow(2)),
         -RatFun(144 * sp(2) * (3 + 2 * S).pow(2) * X * X, D.pow(4) * E.pow(2)),
         RatFun(48 * (3 + 2 * S) *
                    (-24 * sp(5) - 45 * sp(4) + 12 * sp(3) + (6 * B + 30) * sp(2) +
                     (4 + 8 * B) * S + 3 + 6 * B) *
                    X * X,
                D.pow(4) * E.pow(3)),
         -RatFun(8 * (3 + 2 * S) *
                     (-108 * sp(5) - 207 * sp(4) + (8 * B + 52) * sp(3) + (42 * B + 138) * sp(2) +
                      (16 + 32 * B) * S + 9 + 18 * B) *
                     X,
                 E.pow(3) * D.pow(3)),
         -RatFun(16 * (18 * S + 28 * sp(2) + 18 * sp(3) + 3 * sp(4) + 8) * X, E.pow(4) * D),
         -RatFun(16 *
                     (-15 * sp(4) - 27 * sp(3) + (2 * B + 10) * sp(2) + (6 * B + 21) * S + 1 +
                      2 * B) *
                     X,
                 D.pow(3) * E.pow(2)),
         RatFun(8 * (2 + 4 * sp(2) + 9 * S) *
                    (-9 * sp(4) - 18 * sp(3) + (2 * B + 4) * sp(2) + (6 * B + 12) * S + 1 + 2 * B),
                E.pow(3) * D.pow(2)),
         -RatFun(4 * (3 + 2 * S) * (-12 * sp(3) - 15 * sp(2) + (6 + 8 * B) * S + 6 + 12 * B),
                 D.pow(2) * E.pow(2)),
         RatFun(418 * S + 28 * sp(2) + 18 * sp(3) + 3 * sp(4) + 8, E.pow(4))});
    set_entry(z, 10, {RatFun(Poly2(-4), D.pow(2))});
    set_entry(z, 11, {RatFun(8 * (3 + 2 * S) * (-3 + 9 * sp(2) + 4 * sp(3)), R * D.pow(2) * E)});
    set_entry(z, 12,
              {RatFun(8 * (21 * sp(4) + 27 * sp(3) - (26 * B - 2) * sp(2) - (36 * B - 9) * S + 1 +
                           2 * B),
                      D.pow(3) * E)});
    set_entry(z, 13, {RatFun(Poly2(2), D)});
    set_entry(z, 14, {RatFun(2 * (2 * S + 3) * (3 - 9 * sp(2) - 4 * sp(3)), E * R * D)});
    set_entry(z, 15,
              {RatFun(2 * (-21 * sp(4) - 36 * sp(3) + (22 * B - 4) * sp(2) + 36 * S * B + 2 * B +
                           1),
                      D.pow(2) * E)});
    set_entry(z, 16, {RatFun((2 * S + 3) * (3 - 9 * sp(2) - 4 * sp(3)), E * R * D)});
    set_entry(z, 17,
              {RatFun(-2 * (15 * sp(4) + 18 * sp(3) - (14 * B + 4) * sp(2) - 18 * B * S + 1 +
                            2 * B),
                      E * D.pow(2))});
    set_entry(z, 18, {RatFun(2 * (-7 + 27 * sp(2) + 24 * sp(3) + 6 * sp(4)), E.pow(3))});
    set_entry(z, 19, {RatFun(8 * (2 * S + 3), D.pow(2) * E)});
    set_entry(z, 20,
              {RatFun(2 * (2 * S + 3).pow(2) * (-3 + 9 * sp(2) + 4 * sp(3)), E.pow(2) * R * D)});
    set_entry(z, 21,
              {RatFun(-2 * (2 * S + 3) *
                          (-27 * sp(4) - 36 * sp(3) + (26 * B + 4) * sp(2) + 36 * B * S - 1 -
                           2 * B),
                      D.pow(2) * E.pow(2))});
    set_entry(z, 22, {RatFun(2 * (2 * S + 3), E * D)});
    set_entry(z, 23, {RatFun(2 * (2 * S + 3), E)});
    set_entry(z, 24, {RatFun(-4 * (9 + 4 * sp(2) + 12 * S), E.pow(2) * D)});
    set_entry(z, 25, {RatFun(-4 * (9 + 4 * sp(2) + 12 * S), E.pow(2))});
}

} // namespace

ZetaSet table_zeta(TableKind kind) {
    ZetaSet out;
    out.provenance = ZetaProvenance::Table;
    if (kind == TableKind::Square) {
        out.metric_name = "square";
        square_table(out);
    } else {
        out.metric_name = "randers-square";
        randers_square_table(out);
    }
    return out;
}

} // namespace finsler
