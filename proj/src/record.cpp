#include "menon/record.hpp"

#include <stdexcept>

namespace menon {

nlohmann::json rational_to_json(const Rational& value) {
    return {{"num", to_string(value.num())}, {"den", to_string(value.den())}};
}

Rational rational_from_json(const nlohmann::json& value) {
    if (!value.is_object() || !value.contains("num") || !value.contains("den"))
        throw std::invalid_argument("rational_from_json: expected {num, den}");
    return Rational(parse_int128(value.at("num").get<std::string>()),
                    parse_int128(value.at("den").get<std::string>()));
}

nlohmann::json record_to_json(const RunRecord& record) {
    nlohmann::json out{
        {"record_version", record_version},
        {"command", record.command},
        {"inputs", record.inputs},
        {"outputs", record.outputs},
        {"timing_ns", record.timing_ns},
    };
    if (record.suite) {
        out["suite"] = {{"cases", record.suite->cases}, {"failures", record.suite->failures}};
    }
    return out;
}

RunRecord record_from_json(const nlohmann::json& value) {
    if (!value.is_object()) throw std::invalid_argument("record_from_json: expected an object");
    if (value.at("record_version").get<int>() != record_version)
        throw std::invalid_argument("record_from_json: unsupported record version");
    RunRecord record;
    record.command = value.at("command").get<std::string>();
    record.inputs = value.at("inputs");
    record.outputs = value.at("outputs");
    record.timing_ns = value.at("timing_ns").get<std::uint64_t>();
    if (value.contains("suite")) {
        SuiteTally tally;
        tally.cases = value.at("suite").at("cases").get<std::int64_t>();
        tally.failures = value.at("suite").at("failures").get<std::vector<std::string>>();
        record.suite = std::move(tally);
    }
    return record;
}

}  // namespace menon
