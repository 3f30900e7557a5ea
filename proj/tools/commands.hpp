#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "parkhedron/symfunc.hpp"

namespace parkhedron::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Runs one command line. Everything goes to `out`/`err`; nothing touches
/// the process streams, so tests can call this directly.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Worker count from PARKHEDRON_THREADS: unset or 0 means auto (returned as 0).
/// Returns nullopt when the variable is set but not a nonnegative integer.
std::optional<unsigned> threads_from_env();

// JSON forms shared by all commands.
nlohmann::json to_json(const BigInt& v);
BigInt big_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const nlohmann::json& j);

}  // namespace parkhedron::cli
