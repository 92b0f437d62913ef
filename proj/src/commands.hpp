// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstdint>
#include <string_view>

#include "json_io.hpp"

namespace cflab {

/// Runs one CLI-level command and returns its report:
/// {command, inputs, verdict, payload, elapsed_ms}. Verdict is "pass",
/// "fail" (payload carries a counterexample) or "inconclusive". Usage and
/// input errors are thrown.
Json run_command(std::string_view command, const nlohmann::json& args);

/// The acceptance battery, {criteria: [{id, name, pass, detail}], pass}.
Json run_suite(std::uint64_t seed);

}  // namespace cflab
