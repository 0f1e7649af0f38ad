#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace finsler {

/// Machine-readable wrapper for command output. Deterministic for identical
/// inputs apart from the timestamp field.
struct ReportEnvelope {
    std::string command;
    std::string input_digest;
    std::string timestamp;
    nlohmann::ordered_json results;
    std::vector<std::string> warnings;

    nlohmann::ordered_json to_json() const;
    std::string to_object_text() const; // pretty JSON, trailing newline
};

/// FNV-1a 64-bit digest as 16 hex chars.
std::string fnv1a_hex(const std::string& bytes);
std::string utc_timestamp();

} // namespace finsler
