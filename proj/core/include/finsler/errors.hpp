#pragma once

#include <stdexcept>
#include <string>

namespace finsler {

/// Bad input: malformed files, broken invariants, out-of-range parameters.
/// Maps to CLI exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Math-domain failure: pole hit, metric validity bound exceeded, failed
/// precondition of a curvature formula. Maps to CLI exit code 2.
struct MathDomainError : std::runtime_error {
    explicit MathDomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace finsler
