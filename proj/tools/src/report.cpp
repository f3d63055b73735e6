#include "qgarnier/verify/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace qgarnier::verify {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "skip";
}

bool Report::overall() const {
    bool any = false;
    for (const auto& c : checks) {
        if (c.status == Status::Fail) return false;
        any = any || c.status == Status::Pass;
    }
    return any;
}

namespace {

nlohmann::json number_or_null(const std::optional<BigReal>& v) {
    if (!v) return nullptr;
    return v->convert_to<double>();
}

std::string render_json(const Report& r) {
    nlohmann::json j;
    j["schema_version"] = Report::kSchemaVersion;
    j["suite"] = r.suite;
    j["n"] = r.n ? nlohmann::json(*r.n) : nlohmann::json(nullptr);
    j["seed"] = r.seed;
    j["precision"] = r.precision;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        j["checks"].push_back({{"id", c.id},
                               {"status", to_string(c.status)},
                               {"max_residual", number_or_null(c.max_residual)},
                               {"tolerance", number_or_null(c.tolerance)},
                               {"trials", c.trials},
                               {"elapsed_ms", c.elapsed_ms}});
    }
    j["overall"] = r.overall();
    return j.dump(2) + "\n";
}

std::string short_real(const std::optional<BigReal>& v) {
    if (!v) return "exact";
    return qgarnier::to_string(*v, 3);
}

std::string render_table(const Report& r) {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-52s %-6s %12s %12s %7s %10s\n", "check", "status", "residual", "tolerance",
                  "trials", "ms");
    os << line << std::string(104, '-') << "\n";
    for (const auto& c : r.checks) {
        std::snprintf(line, sizeof line, "%-52s %-6s %12s %12s %7d %10.1f\n", c.id.c_str(),
                      to_string(c.status).c_str(), short_real(c.max_residual).c_str(),
                      c.tolerance ? short_real(c.tolerance).c_str() : "-", c.trials, c.elapsed_ms);
        os << line;
        if (c.status == Status::Fail && !c.detail.empty()) os << "    " << c.detail << "\n";
    }
    os << std::string(104, '-') << "\n"
       << "suite " << r.suite << "  seed " << r.seed << "  precision " << r.precision << "  overall "
       << (r.overall() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace

std::string render(const Report& r, Format f) { return f == Format::Json ? render_json(r) : render_table(r); }

void emit_report(const Report& r, const std::string& path, Format f) {
    const std::string text = render(r, f);
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        if (!std::cout) throw IoError("cannot write report to stdout");
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace qgarnier::verify
