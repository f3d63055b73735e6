#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgarnier/cparams.hpp"

namespace qgarnier::verify {

struct SuiteConfig {
    std::optional<int> n;       // unset: each suite runs its default orders
    std::uint64_t seed = 1;
    std::optional<int> trials;  // unset: per-suite default
    unsigned precision = kDefaultPrecision;
    std::string tol = "1e-45";
    std::vector<std::string> suites;
    std::optional<CParams<ExactQ>> params_override;
    unsigned threads = 0;       // 0: hardware concurrency
    bool experimental = false;  // also run mixed words outside the proven scope
};

// Throws ConfigError unless n >= 1, trials >= 1, precision >= 30, tol > 0,
// tol >= 10^-(precision-10) and every suite id is known.
void validate(const SuiteConfig& cfg);

// Reads "key = value" lines ('#' starts a comment). Keys: n, seed, trials,
// precision, tol, suites (comma list), threads, experimental, and the explicit
// point q, a, b, c given as exact rationals ("p/q", comma lists for a and b).
SuiteConfig load_config_file(const std::string& path);

// Comma-separated exact rationals.
std::vector<ExactQ> parse_rational_list(const std::string& text);

// Explicit parameters from text fields; b may omit b_{n+1} = q.
CParams<ExactQ> params_from_text(int n, const std::string& q, const std::string& a, const std::string& b,
                                 const std::string& c);

}  // namespace qgarnier::verify
