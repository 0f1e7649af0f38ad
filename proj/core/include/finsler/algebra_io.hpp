#pragma once

#include "finsler/algebra.hpp"

#include <nlohmann/json_fwd.hpp>

#include <filesystem>
#include <string>

namespace finsler {

/// Everything a problem file specifies: the algebra, the metric, and how to
/// obtain the Riemannian Ricci of alpha.
struct ProblemSpec {
    LieAlgebra algebra;
    PhiFamily phi;
    AlphaRicciMode alpha_mode;
};

/// Parses and validates an algebra file. Bracket entries are given for i < j
/// only; the antisymmetric completion is automatic.
ProblemSpec parse_algebra(const std::filesystem::path& path);
ProblemSpec parse_algebra_json(const nlohmann::json& j, const std::string& origin = "<memory>");

/// Inverse of parse_algebra on validated specs (semantic round-trip).
nlohmann::json serialize_algebra(const ProblemSpec& spec);

} // namespace finsler
