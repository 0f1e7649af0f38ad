#pragma once

#include "finsler/phi.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace finsler {

enum class ZetaProvenance { Generic, Table };
enum class TableKind { Square, RandersSquare };

/// Numeric values of the eleven auxiliary symbols at one (s, B) point.
struct QtpValues {
    double Q, Q_s, Q_ss;
    double Theta, Theta_s, Theta_B;
    double Psi, Psi_s, Psi_ss, Psi_B, Psi_sB;
};

QtpValues eval_qtp(const QtpSymbols& q, double s, double B, double tol = kPoleTol);

/// The 26 coefficient functions of the Ricci curvature formula.
struct ZetaSet {
    std::array<RatFun, 26> zeta;
    ZetaProvenance provenance = ZetaProvenance::Generic;
    std::string metric_name;
    /// present on derived sets; numeric evaluation goes through the symbols
    /// instead of the expanded entries, which cancel catastrophically
    std::shared_ptr<const QtpSymbols> symbols;
    /// present on table sets: the printed fractions of each entry. Numeric
    /// evaluation sums them; folding over the common denominator first loses
    /// most of the significand.
    std::array<std::vector<RatFun>, 26> parts;

    /// 1-based access matching the published numbering.
    const RatFun& at(int k) const { return zeta.at(static_cast<std::size_t>(k - 1)); }
};

/// The 26 formulas evaluated from numeric values of Q, Theta, Psi and their
/// partials (same transcription as the exact assembly, instantiated on
/// doubles).
std::array<double, 26> zeta_formula_values(const QtpValues& v, double s, double B);

ZetaSet generic_zeta(const QtpSymbols& q, std::string metric_name = "generic");
ZetaSet table_zeta(TableKind kind);

/// Sample point used in mismatch witnesses; inside the validity domain of
/// both metrics and with B != s^2 so no structural factor vanishes.
inline constexpr double kWitnessS = 0.2;
inline constexpr double kWitnessB = 0.09;

struct ZetaWitness {
    double s = kWitnessS;
    double B = kWitnessB;
    double lhs_value = 0.0;
    double rhs_value = 0.0;
};

struct ZetaVerdict {
    int index = 0;
    bool exact_match = false;
    std::optional<ZetaWitness> witness; // present iff mismatch
};

struct ZetaComparison {
    std::array<ZetaVerdict, 26> verdicts;
    bool all_match() const;
    std::vector<int> mismatched_indices() const;
};

/// Exact per-index equality of two zeta sets (cross multiplication).
ZetaComparison compare_zeta(const ZetaSet& a, const ZetaSet& b);

std::array<double, 26> eval_zeta(const ZetaSet& z, double s, double B, double tol = kPoleTol);

/// Flattened form for the repeated evaluations the curvature scans do.
/// Derived sets are kept as their eleven compiled symbols and combined per
/// evaluation; table sets are compiled entrywise.
class CompiledZetaSet {
public:
    std::array<double, 26> eval(double s, double B, double tol = kPoleTol) const;

private:
    friend CompiledZetaSet compile_zeta(const ZetaSet& z);
    bool structured_ = false;
    // structured: one list with the 11 symbols; otherwise 26 fraction lists
    std::vector<std::vector<CompiledRatFun>> entries_;
};

CompiledZetaSet compile_zeta(const ZetaSet& z);

} // namespace finsler
