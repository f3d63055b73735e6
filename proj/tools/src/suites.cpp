#include "qgarnier/verify/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "qgarnier/verify/relations.hpp"
#include "qgarnier/verify/sampling.hpp"
#include "qgarnier/weyl_matrices.hpp"

namespace qgarnier::verify {

namespace {

using qgarnier::to_string;

constexpr int kMaxResamples = 50;

using Task = std::function<Check()>;

const std::map<std::string, int>& default_trials() {
    static const std::map<std::string, int> m{
        {"weyl-relations", 16}, {"thm-specialization", 8}, {"closed-form-agreement", 16},
        {"prop-relations", 16}, {"riccati-word", 8},       {"hgf-tauc", 8},
        {"hgf-weyl", 8},        {"hgf-second-solutions", 8}, {"lemma-pn-pi1", 8},
        {"ladders", 4},         {"lauricella", 4},         {"riccati-solution", 8},
        {"proof-layer", 8},
    };
    return m;
}

struct Ctx {
    const SuiteConfig& cfg;
    BigReal scale;  // configured tol / 1e-45
    SeriesConfig series;

    int trials(const std::string& suite) const { return cfg.trials ? *cfg.trials : default_trials().at(suite); }

    BigReal bound(const char* base) const { return BigReal(base) * scale; }

    CParams<ExactQ> point(const std::string& label, int n, int trial, int attempt, Domain dom) const {
        if (cfg.params_override) return *cfg.params_override;
        return sample_cparams(derive_seed(cfg.seed, label, static_cast<std::uint64_t>(n),
                                          static_cast<std::uint64_t>(trial) * 1000 + static_cast<std::uint64_t>(attempt)),
                              n, dom);
    }

    std::mt19937_64 rng(const std::string& label, int n, int trial) const {
        return std::mt19937_64(derive_seed(cfg.seed, label + "/rng", static_cast<std::uint64_t>(n),
                                           static_cast<std::uint64_t>(trial)));
    }
};

std::string check_id(const std::string& suite, int n, const std::string& what) {
    return suite + "/n=" + std::to_string(n) + (what.empty() ? "" : "/" + what);
}

Task timed(std::string id, std::function<void(Check&)> body) {
    return [id = std::move(id), body = std::move(body)]() {
        Check c;
        c.id = id;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.status = Status::Fail;
            c.detail = e.what();
        }
        c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return c;
    };
}

bool resamplable(const std::exception& e) {
    return dynamic_cast<const DivisionByZero*>(&e) || dynamic_cast<const DomainError*>(&e) ||
           dynamic_cast<const PoleAtZero*>(&e);
}

// Runs eval at `points` sampled parameter points, resampling points where the
// evaluation is undefined, and compares the largest residual with bound.
Task numeric_task(const Ctx& ctx, std::string id, int n, Domain dom, BigReal bound, int points,
                  std::function<BigReal(const CParams<ExactQ>&)> eval) {
    return timed(id, [&ctx, id, n, dom, bound, points, eval](Check& c) {
        BigReal worst = 0;
        for (int t = 0; t < points; ++t) {
            bool done = false;
            std::string last;
            for (int attempt = 0; attempt < kMaxResamples && !done; ++attempt) {
                const auto cp = ctx.point(id, n, t, attempt, dom);
                try {
                    worst = std::max(worst, eval(cp));
                    done = true;
                } catch (const std::exception& e) {
                    if (!resamplable(e) || ctx.cfg.params_override) throw;
                    last = e.what();
                }
            }
            if (!done) throw SamplerExhausted("no usable point for trial " + std::to_string(t) + ": " + last);
            ++c.trials;
        }
        c.max_residual = worst;
        c.tolerance = bound;
        c.status = worst < bound ? Status::Pass : Status::Fail;
    });
}

using ExactBody = std::function<std::optional<std::string>(const CParams<ExactQ>&, std::mt19937_64&)>;

// Exact trials: body returns a failure description or nothing; an exception
// from a vanishing denominator at the sampled point draws a new point.
Task exact_task(const Ctx& ctx, std::string id, int n, int trials, Domain dom, ExactBody body) {
    return timed(id, [&ctx, id, n, trials, dom, body](Check& c) {
        for (int t = 0; t < trials; ++t) {
            auto rng = ctx.rng(id, n, t);
            bool done = false;
            std::string last;
            for (int attempt = 0; attempt < kMaxResamples && !done; ++attempt) {
                const auto cp = ctx.point(id, n, t, attempt, dom);
                try {
                    if (auto fail = body(cp, rng)) {
                        c.status = Status::Fail;
                        c.detail = "trial " + std::to_string(t) + ": " + *fail;
                        ++c.trials;
                        return;
                    }
                    done = true;
                } catch (const std::exception& e) {
                    if (!resamplable(e)) throw;
                    last = e.what();
                }
            }
            if (!done) throw SamplerExhausted("no usable point for trial " + std::to_string(t) + ": " + last);
            ++c.trials;
        }
        c.status = Status::Pass;
    });
}

BigReal rel_gap(const Matrix<BigReal>& a, const Matrix<BigReal>& b) { return norm_inf(a - b) / norm_inf(b); }

BigReal rel_gap(const std::vector<BigReal>& a, const std::vector<BigReal>& b) {
    std::vector<BigReal> d;
    for (std::size_t k = 0; k < a.size(); ++k) d.push_back(a[k] - b[k]);
    return norm_inf(d) / norm_inf(b);
}

std::vector<Token> derived_generators(int n) {
    std::vector<Token> g;
    for (int i = 0; i <= n; ++i) g.push_back(tok::p(i));
    for (int i = 0; i <= n; ++i) g.push_back(tok::pp(i));
    for (auto t : {tok::sigma(), tok::sigmap(), tok::pi1(), tok::pi2(), tok::tau_c()}) g.push_back(t);
    return g;
}

std::vector<Token> translations(int n) {
    std::vector<Token> t{tok::tau_c()};
    for (int i = 1; i <= n + 1; ++i) t.push_back(tok::tau_i(i));
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) t.push_back(tok::tau_ij(i, j));
    return t;
}

// Generators of <F, p'_1..p'_{n-1}> x| <sigma, sigma'>, with the inverses of
// sigma and sigma' for random words.
std::vector<Token> weyl_alphabet(int n, bool with_inverses) {
    std::vector<Token> g;
    for (int i = 0; i <= n; ++i) g.push_back(tok::p(i));
    for (int i = 1; i < n; ++i) g.push_back(tok::pp(i));
    g.push_back(tok::sigma());
    g.push_back(tok::sigmap());
    if (with_inverses) {
        g.push_back(tok::inv(tok::sigma()));
        g.push_back(tok::inv(tok::sigmap()));
    }
    return g;
}

std::string key(const Token& t) { return to_string(t); }

// ---------------------------------------------------------------------------

void weyl_relations(const Ctx& ctx, int n, std::vector<Task>& out) {
    const std::string suite = "weyl-relations";
    const int T = ctx.trials(suite);
    std::vector<std::string> order;
    std::map<std::string, std::vector<Relation>> fam;
    for (auto& r : fundamental_relations(n)) {
        if (!fam.count(r.family)) order.push_back(r.family);
        fam[r.family].push_back(std::move(r));
    }
    for (const auto& f : order) {
        const std::string id = check_id(suite, n, f);
        out.push_back(timed(id, [&ctx, id, n, T, rels = fam[f]](Check& c) {
            PhiSampler sampler(derive_seed(ctx.cfg.seed, id, static_cast<std::uint64_t>(n)));
            c.status = Status::Pass;
            c.trials = T;
            for (const auto& r : rels) {
                const auto rep = check_relation(r.lhs, r.rhs, n, T, sampler);
                if (!rep.holds) {
                    c.status = Status::Fail;
                    c.detail = to_string(r.lhs) + " != " + to_string(r.rhs) + " at " + rep.counterexample;
                    return;
                }
            }
        }));
    }

    const std::string pid = check_id(suite, n, "parameter actions");
    out.push_back(timed(pid, [&ctx, pid, n, T](Check& c) {
        std::vector<Token> gens;
        for (int j = 0; j < 2 * n + 2; ++j) gens.push_back(tok::r(j));
        for (int i = 0; i < 2; ++i) {
            gens.push_back(tok::s(i));
            gens.push_back(tok::sp(i));
        }
        for (auto t : {tok::pi(), tok::pip(), tok::rho(), tok::inv(tok::pi()), tok::inv(tok::pip())}) gens.push_back(t);
        PhiSampler sampler(derive_seed(ctx.cfg.seed, pid, static_cast<std::uint64_t>(n)));
        c.status = Status::Pass;
        c.trials = T;
        for (int t = 0; t < T; ++t) {
            const auto s = sampler(n);
            const auto o = observables(s);
            for (const auto& g : gens) {
                if (!(observables(apply_generator(g, s)) == act_on_observables(g, o))) {
                    c.status = Status::Fail;
                    c.detail = "observables disagree for " + to_string(g) + " at " + to_string(s);
                    return;
                }
            }
        }
    }));

    const std::string sid = check_id(suite, n, "s' transcription = rho s rho");
    out.push_back(timed(sid, [&ctx, sid, n, T](Check& c) {
        PhiSampler sampler(derive_seed(ctx.cfg.seed, sid, static_cast<std::uint64_t>(n)));
        c.status = Status::Pass;
        c.trials = T;
        for (int t = 0; t < T; ++t) {
            const auto s = sampler(n);
            for (int i = 0; i < 2; ++i)
                if (!(apply_s_prime_transcribed(i, s) == apply_generator(tok::sp(i), s))) {
                    c.status = Status::Fail;
                    c.detail = "s'_" + std::to_string(i) + " at " + to_string(s);
                    return;
                }
        }
    }));
}

void thm_specialization(const Ctx& ctx, int n, std::vector<Task>& out) {
    const std::string suite = "thm-specialization";
    const int T = ctx.trials(suite);
    for (const auto& g : derived_generators(n)) {
        out.push_back(exact_task(ctx, check_id(suite, n, key(g)), n, T, Domain::Generic,
                                 [g](const CParams<ExactQ>& cp, std::mt19937_64& rng) -> std::optional<std::string> {
                                     const auto rep = preserves_specialization(g, cp, 1, rng);
                                     if (rep.preserved) return std::nullopt;
                                     return rep.detail;
                                 }));
    }
    // negative control: r_0 must leave the locus
    out.push_back(exact_task(ctx, check_id(suite, n, "control r0 leaves the locus"), n, T, Domain::Generic,
                             [](const CParams<ExactQ>& cp, std::mt19937_64& rng) -> std::optional<std::string> {
                                 const auto rep = preserves_specialization(tok::r(0), cp, 1, rng);
                                 if (!rep.preserved) return std::nullopt;
                                 return "r0 preserved the locus at " + to_string(cp);
                             }));
}

// Word realization through eps-limits against the closed form, with one
// direction resample on a pole.
std::optional<std::string> word_vs_closed(const Token& g, const CParams<ExactQ>& cp, std::mt19937_64& rng) {
    const auto s = random_locus_point(cp, rng);
    const auto closed = apply_derived_closed(g, s);
    const auto w = derived_word(g, cp.n);
    LimitResult lim{PhiState<ExactQ>(cp.n), 0};
    try {
        lim = word_limit(w, s, random_directions(cp.n, rng));
    } catch (const PoleAtZero&) {
        try {
            lim = word_limit(w, s, random_directions(cp.n, rng));
        } catch (const PoleAtZero& e) {
            return std::string("pole after resample: ") + e.what();
        }
    }
    if (!on_locus(lim.state)) return "word image leaves the locus";
    const auto via_word = special_from_phi(lim.state);
    if (via_word == closed) return std::nullopt;
    return "closed form differs from the word image";
}

void closed_form_agreement(const Ctx& ctx, int n, std::vector<Task>& out) {
    const std::string suite = "closed-form-agreement";
    const int T = ctx.trials(suite);
    auto gens = derived_generators(n);
    for (int i = 1; i <= n + 1; ++i) gens.push_back(tok::tau_i(i));
    for (const auto& g : gens)
        out.push_back(exact_task(ctx, check_id(suite, n, key(g)), n, T, Domain::Generic,
                                 [g](const CParams<ExactQ>& cp, std::mt19937_64& rng) { return word_vs_closed(g, cp, rng); }));
}

void prop_relations(const Ctx& ctx, int n, std::vector<Task>& out) {
    const std::string suite = "prop-relations";
    const int T = ctx.trials(suite);
    std::vector<std::string> order;
    std::map<std::string, std::vector<Relation>> fam;
    for (auto& r : derived_relations(n)) {
        if (!fam.count(r.family)) order.push_back(r.family);
        fam[r.family].push_back(std::move(r));
    }
    for (const auto& f : order) {
        out.push_back(exact_task(ctx, check_id(suite, n, f), n, T, Domain::Generic,
                                 [rels = fam[f]](const CParams<ExactQ>& cp, std::mt19937_64& rng) -> std::optional<std::string> {
                                     const auto s = random_locus_point(cp, rng);
                                     for (const auto& r : rels) {
                                         const auto l = apply_closed_word(r.lhs, s);
                                         const auto rr = apply_closed_word(r.rhs, s);
                                         if (!(l == rr)) return to_string(r.lhs) + " != " + to_string(r.rhs) + " at " + to_string(cp);
                                     }
                                     return std::nullopt;
                                 }));
    }
    out.push_back(exact_task(ctx, check_id(suite, n, "translation parameter actions"), n, T, Domain::Generic,
                             [n](const CParams<ExactQ>& cp, std::mt19937_64&) -> std::optional<std::string> {
                                 for (const auto& t : translations(n))
                                     if (!(act_on_cparams(t, cp) == translation_on_cparams(t, cp)))
                                         return "word action of " + to_string(t) + " is not the diagonal shift";
                                 return std::nullopt;
                             }));
}

void riccati_word(const Ctx& ctx, int n, std::vector<Task>& out) {
    const std::string suite = "riccati-word";
    out.push_back(exact_task(ctx, check_id(suite, n, ""), n, ctx.trials(suite), Domain::Generic,
                             [](const CParams<ExactQ>& cp, std::mt19937_64& rng) { return word_vs_closed(tok::tau_c(), cp, rng); }));
}

void hgf_tauc(const Ctx& ctx, int n, std::vector<Task>& out) {
    const std::string suite = "hgf-tauc";
    const auto cfg = ctx.series;
    out.push_back(numeric_task(ctx, check_id(suite, n, ""), n, Domain::Generic, ctx.bound(Bounds::kHgfTauc),
                               ctx.trials(suite), [cfg](const CParams<ExactQ>& cp) {
                                   return solution_residual(gen_matrix(tok::tau_c(), cp),
                                                            translation_on_cparams(tok::tau_c(), cp), cp, cfg);
                               }));
}

void hgf_weyl(const Ctx& ctx, int n, std::vector<Task>& out) {
    const std::string suite = "hgf-weyl";
    const auto cfg = ctx.series;
    const int T = ctx.trials(suite);
    for (const auto& g : weyl_alphabet(n, false))
        out.push_back(numeric_task(ctx, check_id(suite, n, key(g)), n, Domain::Generic, ctx.bound(Bounds::kHgfWeyl), T,
                                   [g, cfg](const CParams<ExactQ>& cp) { return word_solution_residual({g}, cp, cfg); }));

    // random words of length <= 4; a word leaving the domain is redrawn with its point
    auto word_check = [&ctx, n, cfg](const std::string& id, std::vector<Token> alphabet, int words) {
        return timed(id, [&ctx, id, n, cfg, alphabet, words](Check& c) {
            BigReal worst = 0;
            std::string last;
            for (int t = 0; t < words; ++t) {
                auto rng = ctx.rng(id, n, t);
                std::uniform_int_distribution<int> len(1, 4);
                std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
                bool done = false;
                for (int attempt = 0; attempt < kMaxResamples && !done; ++attempt) {
                    GroupWord w;
                    const int L = len(rng);
                    for (int k = 0; k < L; ++k) w.push_back(alphabet[pick(rng)]);
                    const auto cp = ctx.point(id, n, t, attempt, Domain::Generic);
                    try {
                        worst = std::max(worst, word_solution_residual(w, cp, cfg));
                        done = true;
                    } catch (const std::exception& e) {
                        if (!resamplable(e)) throw;
                        last = e.what();
                    }
                }
                if (!done) throw SamplerExhausted("no usable word for trial " + std::to_string(t) + ": " + last);
                ++c.trials;
            }
            c.max_residual = worst;
            c.tolerance = ctx.bound(Bounds::kHgfWeyl);
            c.status = worst < *c.tolerance ? Status::Pass : Status::Fail;
        });
    };
    out.push_back(word_check(check_id(suite, n, "random words"), weyl_alphabet(n, true), std::max(8, T)));

    if (ctx.cfg.experimental) {
        auto alphabet = weyl_alphabet(n, true);
        for (auto t : {tok::pp(0), tok::pp(n), tok::pi1(), tok::pi2()}) alphabet.push_back(t);
        Task inner = word_check(check_id(suite, n, "experimental mixed words"), alphabet, std::max(8, T));
        // reported, never asserted
        out.push_back([inner]() {
            Check c = inner();
            c.status = Status::Skip;
            return c;
        });
    }
}

void hgf_second_solutions(const Ctx& ctx, int n, std::vector<Task>& out) {
    const std::string suite = "hgf-second-solutions";
    const auto cfg = ctx.series;
    const int T = ctx.trials(suite);
    for (auto g : {tok::pp(0), tok::pp(n), tok::pi1(), tok::pi2()}) {
        const Domain dom = g.gen == Gen::Pi2 ? Domain::Pi2 : Domain::Generic;
        const std::string id = check_id(suite, n, key(g));
        const BigReal bound = ctx.bound(Bounds::kSecondSolution);
        out.push_back(timed(id, [&ctx, id, n, g, dom, bound, cfg, T](Check& c) {
            BigReal worst = 0, min_gap = -1;
            for (int t = 0; t < T; ++t) {
                bool done = false;
                std::string last;
                for (int attempt = 0; attempt < kMaxResamples && !done; ++attempt) {
                    const auto cp = ctx.point(id, n, t, attempt, dom);
                    try {
                        const auto s = second_solution(g, cp, cfg);
                        worst = std::max(worst, s.residual);
                        min_gap = (min_gap < 0) ? s.gap : std::min(min_gap, s.gap);
                        done = true;
                    } catch (const std::exception& e) {
                        if (!resamplable(e) || ctx.cfg.params_override) throw;
                        last = e.what();
                    }
                }
                if (!done) throw SamplerExhausted("no usable point for trial " + std::to_string(t) + ": " + last);
                ++c.trials;
            }
            c.max_residual = worst;
            c.tolerance = bound;
            const bool gap_ok = min_gap > BigReal(Bounds::kIndependenceGap);
            c.detail = "min independence gap " + to_string(min_gap, 6);
            c.status = (worst < bound && gap_ok) ? Status::Pass : Status::Fail;
        }));
    }
}

void lemma(const Ctx& ctx, int n, std::vector<Task>& out) {
    const std::string suite = "lemma-pn-pi1";
    const auto cfg = ctx.series;
    out.push_back(numeric_task(ctx, check_id(suite, n, ""), n, Domain::Generic, ctx.bound(Bounds::kLemma),
                               ctx.trials(suite),
                               [cfg](const CParams<ExactQ>& cp) { return lemma_pn_pi1_residual(cp, cfg); }));
}

void ladders(const Ctx& ctx, int n, std::vector<Task>& out) {
    const std::string suite = "ladders";
    const auto cfg = ctx.series;
    const int T = ctx.trials(suite);
    for (const auto& t : translations(n)) {
        if (t.gen == Gen::TauC) continue;
        auto stated = [t](const CParams<ExactQ>& cp) {
            return t.gen == Gen::TauI ? tau_i_matrix(t.i, cp) : tau_ij_matrix(t.i, t.j, cp);
        };
        out.push_back(numeric_task(ctx, check_id(suite, n, key(t) + "/solution"), n, Domain::Generic,
                                   ctx.bound(Bounds::kLadder), T, [t, stated, cfg](const CParams<ExactQ>& cp) {
                                       return solution_residual(stated(cp), translation_on_cparams(t, cp), cp, cfg);
                                   }));
        out.push_back(numeric_task(ctx, check_id(suite, n, key(t) + "/word product"), n, Domain::Generic,
                                   ctx.bound(Bounds::kLadderProduct), T, [t, stated](const CParams<ExactQ>& cp) {
                                       QMatrix w = word_matrix(derived_word(t, cp.n), cp);
                                       if (t.gen == Gen::TauIJ)
                                           w.core *= checked_div(ExactQ(1), delta_ij(t.i, t.j, cp), "Delta_{i,j}");
                                       return rel_gap(w.value(), stated(cp).value());
                                   }));
    }
}

void lauricella(const Ctx& ctx, int n, std::vector<Task>& out) {
    const std::string suite = "lauricella";
    const int T = ctx.trials(suite);
    SeriesConfig ycfg = ctx.series;
    ycfg.tol = ctx.series.tol * BigReal("1e12");
    const BigReal bound = ctx.bound(Bounds::kLauricella);

    // y(tau_ij(c)) against scalar * M_{tau_ij} y(c) over all (i, j)
    auto corollary = [n, ycfg](bool literal) {
        return [n, ycfg, literal](const CParams<ExactQ>& cp) {
            BigReal worst = 0;
            const auto y = eval_y(cp, ycfg).vals;
            const BigReal pref = literal ? BigReal(0) : andrews_prefactor(cp, ycfg);
            for (int i = 1; i <= n + 1; ++i)
                for (int j = 1; j <= n + 1; ++j) {
                    const auto target = translation_on_cparams(tok::tau_ij(i, j), cp);
                    const auto lhs = eval_y(target, ycfg).vals;
                    BigReal scalar;
                    if (literal)
                        scalar = to_big(checked_div(ExactQ(1 - cp.A(i)), ExactQ(1 - cp.q * cp.B(j)), "1 - q b_j"));
                    else
                        scalar = andrews_prefactor(target, ycfg) / pref;
                    auto rhs = tau_ij_matrix(i, j, cp).value().apply(y);
                    for (auto& v : rhs) v *= scalar;
                    worst = std::max(worst, rel_gap(rhs, lhs));
                }
            return worst;
        };
    };
    out.push_back(numeric_task(ctx, check_id(suite, n, "corollary"), n, Domain::Lauricella, bound, T, corollary(true)));
    out.push_back(numeric_task(ctx, check_id(suite, n, "corollary with product ratio"), n, Domain::Lauricella, bound, T,
                               corollary(false)));
    out.push_back(numeric_task(ctx, check_id(suite, n, "andrews"), n, Domain::Lauricella, bound, T,
                               [ycfg](const CParams<ExactQ>& cp) { return andrews_residual(cp, ycfg); }));
}

void riccati_solution(const Ctx& ctx, int n, std::vector<Task>& out) {
    const std::string suite = "riccati-solution";
    const auto cfg = ctx.series;
    out.push_back(numeric_task(ctx, check_id(suite, n, ""), n, Domain::Generic, ctx.bound(Bounds::kRiccati),
                               ctx.trials(suite), [cfg](const CParams<ExactQ>& cp) { return riccati_residual(cp, cfg); }));
}

void proof_layer(const Ctx& ctx, int n, std::vector<Task>& out) {
    const std::string suite = "proof-layer";
    const int T = ctx.trials(suite);
    out.push_back(exact_task(ctx, check_id(suite, n, "sigma' recurrences k<=5"), n, T, Domain::Generic,
                             [](const CParams<ExactQ>& cp, std::mt19937_64&) -> std::optional<std::string> {
                                 const auto r = sigma_prime_recurrences(cp, 5);
                                 if (r.holds) return std::nullopt;
                                 return r.detail;
                             }));
    out.push_back(exact_task(ctx, check_id(suite, n, "tilde identities"), n, T, Domain::Generic,
                             [](const CParams<ExactQ>& cp, std::mt19937_64&) -> std::optional<std::string> {
                                 const auto r = tilde_identities(cp);
                                 if (r.holds) return std::nullopt;
                                 return r.detail;
                             }));
    out.push_back(numeric_task(ctx, check_id(suite, n, "tau_c = sigma'(M_sigma) M_sigma'"), n, Domain::Generic,
                               ctx.bound(Bounds::kTaucProduct), T, [](const CParams<ExactQ>& cp) {
                                   const auto closed = gen_matrix(tok::tau_c(), cp).value();
                                   return rel_gap(word_matrix({tok::sigmap(), tok::sigma()}, cp).value(), closed);
                               }));
    out.push_back(numeric_task(ctx, check_id(suite, n, "pi_2 proof identity"), n, Domain::Generic,
                               ctx.bound(Bounds::kPi2Proof), T,
                               [](const CParams<ExactQ>& cp) { return pi2_proof_identity_residual(cp); }));
    out.push_back(exact_task(ctx, check_id(suite, n, "det M_tau_c > 1e-30"), n, T, Domain::Generic,
                             [](const CParams<ExactQ>& cp, std::mt19937_64&) -> std::optional<std::string> {
                                 const ExactQ d = determinant(gen_matrix(tok::tau_c(), cp).core);
                                 if (abs(to_big(d)) > BigReal(Bounds::kDetFloor)) return std::nullopt;
                                 return "det M_tau_c = " + to_string(d);
                             }));
}

using SuiteFn = void (*)(const Ctx&, int, std::vector<Task>&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"weyl-relations", weyl_relations},
        {"thm-specialization", thm_specialization},
        {"closed-form-agreement", closed_form_agreement},
        {"prop-relations", prop_relations},
        {"riccati-word", riccati_word},
        {"hgf-tauc", hgf_tauc},
        {"hgf-weyl", hgf_weyl},
        {"hgf-second-solutions", hgf_second_solutions},
        {"lemma-pn-pi1", lemma},
        {"ladders", ladders},
        {"lauricella", lauricella},
        {"riccati-solution", riccati_solution},
        {"proof-layer", proof_layer},
    };
    return r;
}

std::vector<Check> run_pool(const std::vector<Task>& tasks, unsigned threads) {
    std::vector<Check> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t k = next++; k < tasks.size(); k = next++) results[k] = tasks[k]();
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

bool is_suite_id(const std::string& id) {
    const auto& ids = suite_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<int> default_orders(const std::string& suite) {
    if (suite == "weyl-relations") return {1, 2, 3};
    return {1, 2};
}

Report run_suite(const SuiteConfig& cfg) {
    validate(cfg);
    // the BigReal default precision is process wide; fix it before any worker starts
    PrecisionScope scope(cfg.precision);
    Ctx ctx{cfg, BigReal(cfg.tol) / BigReal("1e-45"), SeriesConfig{}};
    ctx.series.tol = BigReal(cfg.tol);

    std::vector<std::string> chosen;
    for (const auto& s : cfg.suites) {
        if (s == "all") {
            chosen = suite_ids();
            break;
        }
        if (std::find(chosen.begin(), chosen.end(), s) == chosen.end()) chosen.push_back(s);
    }

    std::vector<Task> tasks;
    for (const auto& [id, fn] : registry()) {
        if (std::find(chosen.begin(), chosen.end(), id) == chosen.end()) continue;
        std::vector<int> orders = cfg.n ? std::vector<int>{*cfg.n} : default_orders(id);
        if (cfg.params_override) orders = {cfg.params_override->n};
        for (int n : orders) fn(ctx, n, tasks);
    }

    Report r;
    r.suite = chosen.size() == suite_ids().size() ? "all" : [&] {
        std::string s;
        for (const auto& c : chosen) s += (s.empty() ? "" : ",") + c;
        return s;
    }();
    r.n = cfg.n;
    r.seed = cfg.seed;
    r.precision = cfg.precision;
    r.checks = run_pool(tasks, cfg.threads);
    return r;
}

}  // namespace qgarnier::verify
