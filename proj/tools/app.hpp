#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "adele/error.hpp"
#include "adele/signs.hpp"
#include "json.hpp"

namespace adele::app {

using nlohmann::json;

inline constexpr const char* kVersion = "adele-forge 1.0.0";

struct Options {
    std::optional<uint64_t> seed;  // overrides the config seed when set
    int ext_bound = 6;
    SignConventions signs = kSignConventions;
};

/// Validates a configuration document and produces its report. Throws Error.
/// `status` receives the exit code (nonzero only for a failing selfcheck task).
json run(const json& config, const Options& opt, int& status);

/// Runs the full oracle suite. `ok` is set to whether every check passed and
/// `audit_ok` to whether the sign audit did.
json selfcheck(const Options& opt, bool& ok, bool& audit_ok);

json error_report(ErrorCode code, const std::string& message);
int exit_code(ErrorCode code);
const char* code_name(ErrorCode code);

/// Stable text form: sorted keys, two-space indent, trailing newline.
std::string render(const json& report);

}  // namespace adele::app
