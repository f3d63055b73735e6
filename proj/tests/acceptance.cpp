// Acceptance runner: one PASS/FAIL line per criterion.
//
//   qgarnier_acceptance [--criterion <1..13 | suite-id>]...
//
// Each criterion runs its suite under the default configuration and then
// re-checks the report against bounds pinned here, independent of the
// thresholds the suite itself applied.

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgarnier/errors.hpp"
#include "qgarnier/verify/suites.hpp"

namespace {

using qgarnier::BigReal;
using namespace qgarnier::verify;

struct Pin {
    std::string match;  // substring of the check name after "/n=k/"; empty matches all
    const char* bound;
};

struct Criterion {
    int number;
    std::string suite;
    std::vector<int> orders;
    std::vector<Pin> pins;                // numeric checks must sit under the first matching pin
    std::map<std::string, int> min_trials;  // check-name substring -> trials
    std::optional<double> max_seconds;
    std::vector<std::string> informational;  // checks reported but not judged
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "weyl-relations", {1, 2, 3}, {}, {{"", 16}}, 30.0, {}},
        {2, "thm-specialization", {1, 2}, {}, {{"", 8}}, std::nullopt, {}},
        {3, "closed-form-agreement", {1, 2}, {}, {{"", 16}}, std::nullopt, {}},
        {4, "prop-relations", {1, 2}, {}, {}, std::nullopt, {}},
        {5, "riccati-word", {1, 2}, {}, {{"", 8}}, std::nullopt, {}},
        {6, "hgf-tauc", {1, 2}, {{"", "1e-40"}}, {{"", 8}}, 60.0, {}},
        {7, "hgf-weyl", {1, 2}, {{"", "1e-38"}}, {{"random words", 8}}, std::nullopt, {"experimental mixed words"}},
        {8, "hgf-second-solutions", {1, 2}, {{"", "1e-35"}}, {}, std::nullopt, {}},
        {9, "lemma-pn-pi1", {1, 2}, {{"", "1e-38"}}, {}, std::nullopt, {}},
        {10, "ladders", {1, 2}, {{"/solution", "1e-36"}, {"/word product", "1e-40"}}, {}, std::nullopt, {}},
        {11, "lauricella", {1, 2}, {{"corollary", "1e-30"}, {"andrews", "1e-30"}}, {{"andrews", 4}}, std::nullopt,
         {"corollary with product ratio"}},
        {12, "riccati-solution", {1, 2}, {{"", "1e-35"}}, {}, std::nullopt, {}},
        {13, "proof-layer", {1, 2}, {{"tau_c = sigma'(M_sigma) M_sigma'", "1e-44"}}, {}, std::nullopt, {}},
    };
    return all;
}

// "suite/n=1/what" -> {1, "what"}
std::pair<int, std::string> split_id(const std::string& id) {
    const auto a = id.find("/n=");
    if (a == std::string::npos) return {0, ""};
    const auto b = id.find('/', a + 1);
    const int n = std::stoi(id.substr(a + 3, b == std::string::npos ? std::string::npos : b - a - 3));
    return {n, b == std::string::npos ? "" : id.substr(b + 1)};
}

bool contains(const std::string& s, const std::string& sub) { return s.find(sub) != std::string::npos; }

bool is_informational(const Criterion& c, const std::string& what) {
    for (const auto& s : c.informational)
        if (what == s) return true;
    return false;
}

// Runs one criterion and prints its verdict line plus indented reasons.
bool run_criterion(const Criterion& c) {
    SuiteConfig cfg;
    cfg.suites = {c.suite};
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    try {
        rep = run_suite(cfg);
    } catch (const std::exception& e) {
        std::cout << "FAIL criterion " << c.number << " " << c.suite << ": " << e.what() << "\n";
        return false;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::vector<std::string> reasons, notes;
    std::map<int, int> per_order;
    for (const auto& chk : rep.checks) {
        const auto [n, what] = split_id(chk.id);
        ++per_order[n];
        if (is_informational(c, what)) {
            std::string line = chk.id + ": " + to_string(chk.status);
            if (chk.max_residual) line += " residual " + qgarnier::to_string(*chk.max_residual, 4);
            notes.push_back(line);
            continue;
        }
        if (chk.status == Status::Fail) {
            std::string line = chk.id + " failed";
            if (chk.max_residual) line += " (residual " + qgarnier::to_string(*chk.max_residual, 4) + ")";
            if (!chk.detail.empty()) line += ": " + chk.detail;
            reasons.push_back(line);
        }
        if (chk.max_residual) {
            const Pin* pin = nullptr;
            for (const auto& p : c.pins)
                if (contains(what, p.match)) {
                    pin = &p;
                    break;
                }
            if (pin) {
                const BigReal bound(pin->bound);
                // the report's bound was rounded at the run precision
                if (!chk.tolerance || *chk.tolerance > bound * (1 + BigReal("1e-25")))
                    reasons.push_back(chk.id + " used tolerance above the pinned " + pin->bound);
                if (!(*chk.max_residual < bound))
                    reasons.push_back(chk.id + " residual " + qgarnier::to_string(*chk.max_residual, 4) +
                                      " >= pinned " + pin->bound);
            }
        }
        for (const auto& [sub, need] : c.min_trials)
            if (contains(what, sub) && chk.status != Status::Skip && chk.trials < need)
                reasons.push_back(chk.id + " ran " + std::to_string(chk.trials) + " trials, need " +
                                  std::to_string(need));
    }
    for (int n : c.orders)
        if (!per_order.count(n)) reasons.push_back("no checks for n=" + std::to_string(n));
    if (c.max_seconds && secs >= *c.max_seconds)
        reasons.push_back("runtime " + std::to_string(secs) + " s >= " + std::to_string(*c.max_seconds) + " s");

    const bool pass = reasons.empty();
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << " " << c.suite << " (" << rep.checks.size()
              << " checks, " << static_cast<long>(secs * 1000) << " ms)\n";
    for (const auto& r : reasons) std::cout << "    " << r << "\n";
    for (const auto& r : notes) std::cout << "    note: " << r << "\n";
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qgarnier acceptance criteria"};
    std::vector<std::string> selected;
    app.add_option("--criterion", selected, "criterion number (1-13) or suite id; default all");
    CLI11_PARSE(app, argc, argv);
    const qgarnier::PrecisionScope prec(qgarnier::kDefaultPrecision);

    std::vector<const Criterion*> todo;
    for (const auto& c : criteria()) {
        bool want = selected.empty();
        for (const auto& s : selected)
            if (s == std::to_string(c.number) || s == c.suite) want = true;
        if (want) todo.push_back(&c);
    }
    if (todo.empty()) {
        std::cerr << "no criterion matches\n";
        return 2;
    }
    bool ok = true;
    for (const auto* c : todo) ok = run_criterion(*c) && ok;
    return ok ? 0 : 1;
}
