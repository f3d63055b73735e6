#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qgarnier/verify/config.hpp"
#include "qgarnier/verify/sampling.hpp"
#include "qgarnier/verify/suites.hpp"
#include "qgarnier/weyl_matrices.hpp"

namespace {

using namespace qgarnier;
using namespace qgarnier::verify;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct PointArgs {
    int n = 1;
    std::string q = "1/2", a, b, c;
    std::uint64_t seed = 1;

    void add_to(CLI::App& app) {
        app.add_option("--n", n, "order n >= 1")->check(CLI::PositiveNumber);
        app.add_option("--q", q, "base q as an exact rational");
        app.add_option("--a", a, "a_1..a_{n+1}, comma separated rationals");
        app.add_option("--b", b, "b_1..b_n (b_{n+1} = q may be appended)");
        app.add_option("--c", c, "c as an exact rational");
        app.add_option("--seed", seed, "seed for a sampled point when a, b, c are omitted");
    }

    CParams<ExactQ> resolve() const {
        const int given = !a.empty() + !b.empty() + !c.empty();
        if (given == 0) return sample_cparams(seed, n);
        if (given != 3) throw ConfigError("give all of --a, --b, --c or none of them");
        return params_from_text(n, q, a, b, c);
    }
};

int cmd_verify(const std::string& suite, const std::optional<std::string>& params_file, std::optional<int> n,
               std::optional<int> trials, std::optional<std::uint64_t> seed, std::optional<unsigned> prec,
               std::optional<std::string> tol, std::optional<unsigned> threads, bool experimental,
               const std::string& out, const std::string& format) {
    SuiteConfig cfg = params_file ? load_config_file(*params_file) : SuiteConfig{};
    cfg.suites = {suite};
    if (n) cfg.n = n;
    if (trials) cfg.trials = trials;
    if (seed) cfg.seed = *seed;
    if (prec) cfg.precision = *prec;
    if (tol) cfg.tol = *tol;
    if (threads) cfg.threads = *threads;
    cfg.experimental = cfg.experimental || experimental;
    const Report r = run_suite(cfg);
    emit_report(r, out, format == "json" ? Format::Json : Format::Table);
    return r.overall() ? kExitPass : kExitFail;
}

int cmd_eval(const std::string& which, const PointArgs& pa, unsigned prec, const std::string& tol) {
    PrecisionScope scope(prec);
    SuiteConfig probe;
    probe.suites = {"hgf-tauc"};
    probe.precision = prec;
    probe.tol = tol;
    validate(probe);
    const auto cp = pa.resolve();
    SeriesConfig cfg;
    cfg.tol = BigReal(tol);
    const HgVector v = which == "x" ? eval_x(cp, cfg) : eval_y(cp, cfg);
    std::cout << "params " << to_string(cp) << "\n";
    for (std::size_t j = 0; j < v.vals.size(); ++j) {
        const auto& t = v.trunc[j];
        std::cout << which << "_" << (j + 1) << " = " << to_string(v.vals[j], static_cast<int>(prec) - 5)
                  << "   N=" << t.N << " rho_hat=" << to_string(t.rho_hat, 4) << " bound=" << to_string(t.bound, 3)
                  << " precision=" << t.precision << "\n";
    }
    return kExitPass;
}

int cmd_matrix(const std::string& token, const PointArgs& pa, unsigned prec) {
    PrecisionScope scope(prec);
    const auto cp = pa.resolve();
    const QMatrix M = gen_matrix(parse_token(token), cp);
    std::cout << "params " << to_string(cp) << "\n";
    if (M.prefactor.empty()) {
        std::cout << "gamma 0\n";
    } else {
        std::cout << "gamma " << to_string(M.gamma(), 20) << "\n";
    }
    std::cout << "core\n";
    for (int i = 1; i <= M.core.dim(); ++i) {
        std::cout << "  ";
        for (int j = 1; j <= M.core.dim(); ++j) std::cout << (j > 1 ? "  " : "") << to_string(M.core(i, j));
        std::cout << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-Garnier / hypergeometric identity verifier"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::optional<std::string> params_file, tol;
    std::optional<int> n, trials;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> prec, threads;
    bool experimental = false;
    std::string out = "-", format = "table";
    verify->add_option("suite", suite, "suite id or 'all'")->required();
    verify->add_option("--n", n, "order n (default: the suite's orders)");
    verify->add_option("--trials", trials, "trials per check");
    verify->add_option("--seed", seed, "base seed");
    verify->add_option("--prec", prec, "decimal digits of working precision");
    verify->add_option("--tol", tol, "series tolerance");
    verify->add_option("--params", params_file, "key = value config file");
    verify->add_option("--out", out, "report path, '-' for stdout");
    verify->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    verify->add_option("--threads", threads, "worker threads (0: all cores)");
    verify->add_flag("--experimental", experimental, "also report mixed words outside the proven scope");

    auto* eval = app.add_subcommand("eval", "evaluate the series vector x or y");
    std::string which;
    PointArgs eval_pt;
    unsigned eval_prec = kDefaultPrecision;
    std::string eval_tol = "1e-45";
    eval->add_option("which", which, "x or y")->required()->check(CLI::IsMember({"x", "y"}));
    eval_pt.add_to(*eval);
    eval->add_option("--prec", eval_prec, "decimal digits");
    eval->add_option("--tol", eval_tol, "tail-bound tolerance");

    auto* matrix = app.add_subcommand("matrix", "print gamma and the core of a generator matrix");
    std::string token;
    PointArgs mat_pt;
    unsigned mat_prec = kDefaultPrecision;
    matrix->add_option("token", token, "e.g. sigma, p'0, pi2, tau_c, tau_1_2, sigma^-1")->required();
    mat_pt.add_to(*matrix);
    matrix->add_option("--prec", mat_prec, "decimal digits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (*verify)
            return cmd_verify(suite, params_file, n, trials, seed, prec, tol, threads, experimental, out, format);
        if (*eval) return cmd_eval(which, eval_pt, eval_prec, eval_tol);
        return cmd_matrix(token, mat_pt, mat_prec);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const ConstraintViolated& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitFail;
    }
}
