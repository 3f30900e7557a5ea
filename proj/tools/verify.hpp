#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace parkhedron::cli {

struct CheckResult {
    std::string name;
    std::string params;
    std::string expected;
    std::string actual;
    bool pass = false;
    bool skipped = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const;
    /// First failing check, if any.
    const CheckResult* first_failure() const;
    nlohmann::json to_json() const;
};

enum class Suite { words, orbits, permutahedron, restriction, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct VerifyBounds {
    int max_n = 7;
    int max_m = 2;
};

using Check = std::function<CheckResult()>;

/// The checks of a suite in their fixed report order.
std::vector<Check> build_checks(Suite suite, const VerifyBounds& bounds);

/// Runs the suite on up to `workers` threads (0 = hardware concurrency).
/// Check order in the report does not depend on completion order.
VerifyReport run_verify(Suite suite, const VerifyBounds& bounds, unsigned workers);

}  // namespace parkhedron::cli
