#include "finsler/report.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>

namespace finsler {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string utc_timestamp() {
    using namespace std::chrono;
    auto now = time_point_cast<seconds>(system_clock::now());
    std::time_t t = system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::ordered_json ReportEnvelope::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["timestamp"] = timestamp;
    j["results"] = results;
    j["warnings"] = warnings;
    return j;
}

std::string ReportEnvelope::to_object_text() const { return to_json().dump(2) + "\n"; }

} // namespace finsler
