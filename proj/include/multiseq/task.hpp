#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "multiseq/parse.hpp"

namespace multiseq {

using Json = nlohmann::ordered_json;

/// CLI-level overrides; precedence is CLI flags > file options > defaults.
struct RunOverrides {
    std::optional<std::string> task_name;
    std::optional<unsigned long> characteristic;
    std::optional<std::uint64_t> seed;
    std::optional<char> route;
    std::optional<bool> oracle;
    bool include_timings = true;
};

/// Execute the problem and build the machine-readable report. Deterministic
/// given the file contents and seed (timings excluded when disabled).
Json run_task(ProblemFile file, const RunOverrides& overrides = {});

/// Render a report: stable JSON bytes, or a human-readable text block.
std::string emit_report(const Json& report, bool as_json);

}  // namespace multiseq
