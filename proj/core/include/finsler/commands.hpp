#pragma once

#include "finsler/ricci.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace finsler {

/// CLI exit codes: 0 success, 1 validation/parse, 2 math domain, 3 zeta mismatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitMathDomain = 2;
inline constexpr int kExitZetaMismatch = 3;

enum class EmitFormat { Object, Table };

struct VerifyZetaOptions {
    std::string metric = "square"; // "square" | "randers-square"
    EmitFormat emit = EmitFormat::Object;
};

struct RicciOptions {
    std::filesystem::path input;
    std::vector<double> direction;
    ZetaSource zeta_source = ZetaSource::Generic;
    bool vanishing_s = false;
    EmitFormat emit = EmitFormat::Object;
    double tol = kPoleTol;
};

struct ScanOptions {
    std::filesystem::path input;
    int grid = 100;
    ZetaSource zeta_source = ZetaSource::Generic;
    EmitFormat emit = EmitFormat::Object;
    double tol = kPoleTol;
};

int run_verify_zeta(const VerifyZetaOptions& opts, std::ostream& out);
int run_ricci(const RicciOptions& opts, std::ostream& out);
int run_scan(const ScanOptions& opts, std::ostream& out);

EmitFormat emit_from_string(const std::string& s);
ZetaSource zeta_source_from_string(const std::string& s);
std::vector<double> parse_direction(const std::string& csv);

} // namespace finsler
