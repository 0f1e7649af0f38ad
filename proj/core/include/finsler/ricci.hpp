#pragma once

#include "finsler/algebra.hpp"
#include "finsler/zeta.hpp"

#include <string>
#include <vector>

namespace finsler {

enum class ZetaSource { Generic, PaperTable };

struct RicciReport {
    double alpha_ric = 0.0;
    double rt_term = 0.0;
    double total = 0.0; // alpha_ric + rt_term
    bool s_vanishes = false;
    ZetaSource zeta_source = ZetaSource::Generic;
    double s_ratio = 0.0;
    double B_value = 0.0;
    bool valid = false;
    std::string metric_name;
};

/// The eleven-group sum of the general curvature formula, evaluated from
/// direction-contracted scalars and the 26 zeta values.
double rt_term(const ContractedScalars& sc, const std::array<double, 26>& zv, int n);

/// General path: zetas derived from phi, evaluated at (s = c y^n / alpha, B = c^2).
RicciReport ricci_general(const LieAlgebra& alg, const PhiFamily& phi, std::span<const double> Z,
                          const AlphaRicciMode& mode, double tol = kPoleTol);

/// Specialized homogeneous formula assembled term-by-term from contracted
/// structure constants, with zetas from the chosen source.
RicciReport ricci_homogeneous(const LieAlgebra& alg, TableKind kind, std::span<const double> Z,
                              const AlphaRicciMode& mode, ZetaSource source = ZetaSource::Generic,
                              double tol = kPoleTol);

/// Reduced three-term formula; requires the vanishing S-curvature criterion.
RicciReport ricci_vanishing_s(const LieAlgebra& alg, TableKind kind, std::span<const double> Z,
                              const AlphaRicciMode& mode, ZetaSource source = ZetaSource::Generic,
                              double tol = kPoleTol);

/// Deterministic unit-direction grid (Fibonacci sphere for n = 3).
std::vector<std::vector<double>> direction_grid(int n, int samples);

struct ScanReport {
    bool s_vanishes = false;
    double min_ric = 0.0;
    double max_ric = 0.0;
    int negative = 0, zero = 0, positive = 0;
    bool riemannian_flag = false; // vanishing S + everywhere-negative Ricci
    std::string message;
    std::vector<std::vector<double>> directions;
    std::vector<double> values;
};

/// Scans Ricci over the direction grid and reports the sign pattern plus the
/// must-be-Riemannian implication when it applies.
ScanReport riemannian_implication(const LieAlgebra& alg, const PhiFamily& phi, int samples,
                                  ZetaSource source = ZetaSource::Generic,
                                  const AlphaRicciMode& mode = {}, double tol = kPoleTol);

} // namespace finsler
