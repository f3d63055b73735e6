#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>

#include "json.hpp"
#include "qgarnier/errors.hpp"
#include "qgarnier/verify/config.hpp"
#include "qgarnier/verify/relations.hpp"
#include "qgarnier/verify/report.hpp"
#include "qgarnier/verify/sampling.hpp"
#include "qgarnier/verify/suites.hpp"

namespace qgarnier::verify {
namespace {

bool q_related(const ExactQ& v, const ExactQ& w, const ExactQ& q) {
    for (long m = -3; m <= 3; ++m)
        if (v * ipow(q, m) == w) return true;
    return false;
}

TEST(Sampling, Deterministic) {
    for (auto dom : {Domain::Generic, Domain::Lauricella, Domain::Pi2})
        for (int n = 1; n <= 3; ++n) EXPECT_EQ(sample_cparams(42, n, dom), sample_cparams(42, n, dom));
    EXPECT_NE(sample_cparams(1, 2), sample_cparams(2, 2));
}

TEST(Sampling, Constraints) {
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto cp = sample_cparams(seed, n);
            EXPECT_EQ(cp.b.back(), cp.q);
            EXPECT_GT(cp.c, 0);
            EXPECT_LT(cp.c * cp.q, 1);
        }
}

TEST(Sampling, ThousandSamplesAvoidCoincidences) {
    for (int n = 1; n <= 2; ++n)
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const auto cp = sample_cparams(seed, n);
            for (long i = 1; i <= n + 1; ++i)
                for (long j = 1; j <= n; ++j) ASSERT_FALSE(q_related(cp.A(i), cp.B(j), cp.q)) << to_string(cp);
        }
}

TEST(Sampling, LauricellaDomain) {
    for (int n = 1; n <= 2; ++n)
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto cp = sample_cparams(seed, n, Domain::Lauricella);
            for (long l = 1; l <= n; ++l) EXPECT_LT(cp.A(l), cp.q);
        }
}

TEST(Sampling, Pi2Domain) {
    for (int n = 1; n <= 2; ++n)
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto cp = sample_cparams(seed, n, Domain::Pi2);
            ExactQ pa = 1, pb = 1;
            for (long l = 1; l <= n + 1; ++l) pa *= cp.A(l);
            for (long l = 1; l <= n; ++l) pb *= cp.B(l);
            EXPECT_LT(pb, pa);
        }
}

TEST(Sampling, DeriveSeedSeparatesLabels) {
    std::set<std::uint64_t> seen;
    for (const char* label : {"a", "b", "hgf-tauc/n=1", "hgf-tauc/n=2"})
        for (std::uint64_t t = 0; t < 4; ++t) seen.insert(derive_seed(7, label, t));
    EXPECT_EQ(seen.size(), 16u);
    EXPECT_EQ(derive_seed(7, "a", 1, 2), derive_seed(7, "a", 1, 2));
}

TEST(Config, Validation) {
    SuiteConfig cfg;
    cfg.suites = {"weyl-relations"};
    EXPECT_NO_THROW(validate(cfg));
    cfg.precision = 30;
    EXPECT_THROW(validate(cfg), ConfigError);  // 1e-45 unreachable at 30 digits
    cfg.tol = "1e-20";
    EXPECT_NO_THROW(validate(cfg));
    cfg.suites = {"nope"};
    EXPECT_THROW(validate(cfg), ConfigError);
    cfg.suites = {"all"};
    cfg.n = 0;
    EXPECT_THROW(validate(cfg), ConfigError);
    cfg.n = 1;
    cfg.tol = "-1";
    EXPECT_THROW(validate(cfg), ConfigError);
    cfg.tol = "zzz";
    EXPECT_THROW(validate(cfg), ConfigError);
}

TEST(Config, FileRoundTrip) {
    const std::string path = ::testing::TempDir() + "qgarnier_cfg.txt";
    {
        std::ofstream out(path);
        out << "# sample\nn = 1\nseed = 9\ntrials = 2\nprecision = 70\ntol = 1e-50\n"
            << "suites = hgf-tauc, lemma-pn-pi1\nq = 1/2\na = 1/3, 1/5\nb = 1/7\nc = 1/4\n";
    }
    const auto cfg = load_config_file(path);
    EXPECT_EQ(cfg.n, 1);
    EXPECT_EQ(cfg.seed, 9u);
    EXPECT_EQ(cfg.trials, 2);
    EXPECT_EQ(cfg.precision, 70u);
    EXPECT_EQ(cfg.tol, "1e-50");
    EXPECT_EQ(cfg.suites, (std::vector<std::string>{"hgf-tauc", "lemma-pn-pi1"}));
    ASSERT_TRUE(cfg.params_override);
    EXPECT_EQ(cfg.params_override->a[1], ExactQ(1) / 5);
    EXPECT_EQ(cfg.params_override->b[1], ExactQ(1) / 2);
    std::remove(path.c_str());
}

TEST(Config, FileErrors) {
    EXPECT_THROW(load_config_file("/nonexistent/qgarnier.cfg"), Error);
    const std::string path = ::testing::TempDir() + "qgarnier_bad.txt";
    {
        std::ofstream out(path);
        out << "colour = blue\n";
    }
    EXPECT_THROW(load_config_file(path), ConfigError);
    std::remove(path.c_str());
}

TEST(Config, Rationals) {
    EXPECT_EQ(parse_rational_list("1/2, 3/4,5"), (std::vector<ExactQ>{ExactQ(1) / 2, ExactQ(3) / 4, ExactQ(5)}));
    const auto cp = params_from_text(1, "1/2", "1/3,1/5", "1/7", "1/4");
    EXPECT_EQ(cp.b, (std::vector<ExactQ>{ExactQ(1) / 7, ExactQ(1) / 2}));
}

TEST(Relations, TablesAreNonEmpty) {
    for (int n = 1; n <= 3; ++n) {
        EXPECT_GT(fundamental_relations(n).size(), 10u);
        EXPECT_GT(derived_relations(n).size(), 10u);
    }
}

TEST(Suites, Ids) {
    EXPECT_EQ(suite_ids().size(), 13u);
    EXPECT_TRUE(is_suite_id("hgf-tauc"));
    EXPECT_FALSE(is_suite_id("all"));
    EXPECT_EQ(default_orders("weyl-relations"), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(default_orders("hgf-tauc"), (std::vector<int>{1, 2}));
}

TEST(Suites, SmallRelationRunIsFast) {
    SuiteConfig cfg;
    cfg.suites = {"weyl-relations"};
    cfg.n = 1;
    cfg.trials = 4;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = run_suite(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_TRUE(rep.overall());
    EXPECT_LT(secs, 5.0);
}

TEST(Suites, ReproducibleReports) {
    SuiteConfig cfg;
    cfg.suites = {"hgf-tauc", "thm-specialization"};
    cfg.n = 1;
    cfg.trials = 2;
    const auto a = run_suite(cfg), b = run_suite(cfg);
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t k = 0; k < a.checks.size(); ++k) {
        EXPECT_EQ(a.checks[k].id, b.checks[k].id);
        EXPECT_EQ(a.checks[k].status, b.checks[k].status);
        EXPECT_EQ(a.checks[k].max_residual, b.checks[k].max_residual);
    }
}

TEST(Suites, AllAtOrderTwo) {
    SuiteConfig cfg;
    cfg.suites = {"all"};
    cfg.n = 2;
    cfg.trials = 1;
    const auto rep = run_suite(cfg);
    EXPECT_GE(rep.checks.size(), 12u);
    std::set<std::string> suites;
    for (const auto& c : rep.checks) suites.insert(c.id.substr(0, c.id.find('/')));
    EXPECT_EQ(suites.size(), 13u);
}

TEST(Suites, ThresholdsScaleWithTolerance) {
    SuiteConfig cfg;
    cfg.suites = {"hgf-tauc"};
    cfg.n = 1;
    cfg.trials = 1;
    cfg.tol = "1e-40";
    const auto rep = run_suite(cfg);
    ASSERT_FALSE(rep.checks.empty());
    ASSERT_TRUE(rep.checks[0].tolerance);
    EXPECT_LT(abs(*rep.checks[0].tolerance - BigReal("1e-35")), BigReal("1e-45"));
}

TEST(Suites, ExplicitParameters) {
    SuiteConfig cfg;
    cfg.suites = {"hgf-tauc"};
    cfg.n = 1;
    cfg.trials = 1;
    cfg.params_override = params_from_text(1, "1/2", "1/3,1/5", "1/7", "1/4");
    EXPECT_TRUE(run_suite(cfg).overall());
    cfg.params_override = params_from_text(2, "1/2", "1/3,1/5,1/9", "1/7,1/11", "1/4");
    EXPECT_THROW(run_suite(cfg), ConfigError);
}

Report sample_report() {
    Report r;
    r.suite = "demo";
    r.n = 1;
    r.seed = 3;
    r.precision = 60;
    Check exact{"demo/n=1/exact", Status::Pass, std::nullopt, std::nullopt, 4, 1.5, ""};
    Check num{"demo/n=1/numeric", Status::Fail, BigReal("2e-30"), BigReal("1e-40"), 2, 3.0, "too big"};
    r.checks = {exact, num};
    return r;
}

TEST(Report, JsonSchema) {
    const auto j = nlohmann::json::parse(render(sample_report(), Format::Json));
    EXPECT_EQ(j.at("schema_version"), Report::kSchemaVersion);
    EXPECT_EQ(j.at("suite"), "demo");
    EXPECT_EQ(j.at("n"), 1);
    EXPECT_EQ(j.at("seed"), 3);
    EXPECT_EQ(j.at("precision"), 60);
    EXPECT_EQ(j.at("overall"), false);
    ASSERT_EQ(j.at("checks").size(), 2u);
    for (const auto& c : j.at("checks"))
        for (const char* key : {"id", "status", "max_residual", "tolerance", "trials", "elapsed_ms"})
            EXPECT_TRUE(c.contains(key)) << key;
    EXPECT_TRUE(j["checks"][0]["max_residual"].is_null());
    EXPECT_NEAR(j["checks"][1]["max_residual"].get<double>(), 2e-30, 1e-40);
    EXPECT_EQ(j["checks"][1]["status"], "fail");
}

TEST(Report, Overall) {
    Report r = sample_report();
    EXPECT_FALSE(r.overall());
    r.checks[1].status = Status::Skip;
    EXPECT_TRUE(r.overall());
    r.checks[0].status = Status::Skip;
    EXPECT_FALSE(r.overall());  // nothing passed
}

TEST(Report, Table) {
    const std::string t = render(sample_report(), Format::Table);
    EXPECT_NE(t.find("demo/n=1/numeric"), std::string::npos);
    EXPECT_NE(t.find("fail"), std::string::npos);
    EXPECT_NE(t.find("overall FAIL"), std::string::npos);
}

TEST(Report, UnwritablePath) {
    EXPECT_THROW(emit_report(sample_report(), "/nonexistent/dir/report.json", Format::Json), IoError);
}

}  // namespace
}  // namespace qgarnier::verify
