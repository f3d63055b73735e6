#pragma once

#include <string>
#include <vector>

#include "qgarnier/verify/config.hpp"
#include "qgarnier/verify/report.hpp"

namespace qgarnier::verify {

// The thirteen suite ids in acceptance order.
const std::vector<std::string>& suite_ids();

bool is_suite_id(const std::string& id);

// Default orders when SuiteConfig::n is unset.
std::vector<int> default_orders(const std::string& suite);

// Base residual bound of a numeric check at tol = 1e-45; thresholds scale
// linearly with the configured tolerance.
struct Bounds {
    static constexpr const char* kHgfTauc = "1e-40";
    static constexpr const char* kHgfWeyl = "1e-38";
    static constexpr const char* kSecondSolution = "1e-35";
    static constexpr const char* kIndependenceGap = "1e-10";
    static constexpr const char* kLemma = "1e-38";
    static constexpr const char* kLadder = "1e-36";
    static constexpr const char* kLadderProduct = "1e-40";
    static constexpr const char* kLauricella = "1e-30";
    static constexpr const char* kRiccati = "1e-35";
    static constexpr const char* kTaucProduct = "1e-44";
    static constexpr const char* kPi2Proof = "1e-40";
    static constexpr const char* kDetFloor = "1e-30";
};

// Runs cfg.suites ("all" expands to every id) and returns one report. Sets the
// BigReal precision for the duration. Throws ConfigError on a bad config.
Report run_suite(const SuiteConfig& cfg);

}  // namespace qgarnier::verify
