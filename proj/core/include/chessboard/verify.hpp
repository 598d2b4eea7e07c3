#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace chessboard {

struct VerifyOptions {
    std::uint64_t seed = 0xC4B1C;
    /// Swaps the graded differential for its pinned-twist variant inside the
    /// d³ = 0 check.  That variant genuinely breaks nilpotency (a uniform
    /// exponent shift would not), so this is a real mutation, useful for
    /// exercising the failure-reporting path end to end.
    bool inject_fault_jfactor = false;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Failure payload (empty object when the check passed).
    nlohmann::json counterexample = nlohmann::json(nullptr);
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    /// Wall-clock for the whole suite.  Deliberately not serialized: the
    /// JSON report stays byte-deterministic for fixed (flags, seed).
    double seconds = 0;

    bool passed() const;
};

/// The individually addressable suites, in execution order.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite.  Throws std::invalid_argument for unknown names
/// ("all" is handled by run_verification, not here).
SuiteReport run_suite(const std::string& suite, const VerifyOptions& options);

/// Runs the named suite, or every suite for "all".
std::vector<SuiteReport> run_verification(const std::string& suite,
                                          const VerifyOptions& options);

bool all_passed(const std::vector<SuiteReport>& reports);

/// {"seed": …, "fault": null|"jfactor", "passed": …, "suites": [...]} —
/// one entry per check with its pass flag and counterexample payload.
nlohmann::json verification_report_json(const std::vector<SuiteReport>& reports,
                                        const VerifyOptions& options);

}  // namespace chessboard
