#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgarnier/scalar.hpp"

namespace qgarnier::verify {

enum class Status { Pass, Fail, Skip };

std::string to_string(Status s);

struct Check {
    std::string id;
    Status status = Status::Skip;
    std::optional<BigReal> max_residual;  // absent for exact checks
    std::optional<BigReal> tolerance;     // absent for exact checks
    int trials = 0;
    double elapsed_ms = 0;
    std::string detail;  // counterexample or note; not part of the JSON schema
};

struct Report {
    static constexpr int kSchemaVersion = 1;
    std::string suite;
    std::optional<int> n;
    std::uint64_t seed = 0;
    unsigned precision = 0;
    std::vector<Check> checks;

    // No check failed and at least one passed; skipped checks are informational.
    bool overall() const;
};

enum class Format { Json, Table };

std::string render(const Report& r, Format f);

// Writes render(r, f) to path ("-" is stdout). Throws IoError.
void emit_report(const Report& r, const std::string& path, Format f);

}  // namespace qgarnier::verify
