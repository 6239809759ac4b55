#pragma once

#include "menon/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace menon {

inline constexpr int record_version = 1;

struct SuiteTally {
    std::int64_t cases = 0;
    std::vector<std::string> failures;

    bool operator==(const SuiteTally&) const = default;
};

// One CLI invocation: command echo, structured inputs/outputs, timing, and
// (for verify runs) the suite tallies. Rationals are serialized as decimal
// strings in {num, den} pairs, never as floating point, so records
// round-trip losslessly.
struct RunRecord {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json outputs = nlohmann::json::object();
    std::uint64_t timing_ns = 0;
    std::optional<SuiteTally> suite;

    bool operator==(const RunRecord&) const = default;
};

nlohmann::json rational_to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& value);

nlohmann::json record_to_json(const RunRecord& record);
RunRecord record_from_json(const nlohmann::json& value);

}  // namespace menon
