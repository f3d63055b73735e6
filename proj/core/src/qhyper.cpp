#include "qgarnier/qhyper.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "qgarnier/weyl_matrices.hpp"

namespace qgarnier {

namespace {

constexpr int kRatioWindow = 5;
const char* const kRhoCeiling = "0.999";

// Tracks the last few |term_{k+1}/term_k| and the geometric tail bound.
class TailTracker {
public:
    void push(const BigReal& ratio) {
        window_.push_back(abs(ratio));
        if (window_.size() > kRatioWindow) window_.pop_front();
    }

    // Updates rep from the latest term magnitude; true when the bound is met.
    bool done(const BigReal& last_mag, const BigReal& tol, TruncationReport& rep) const {
        if (last_mag == 0) {
            rep.rho_hat = 0;
            rep.bound = 0;
            return true;
        }
        if (window_.size() < kRatioWindow) return false;
        rep.rho_hat = *std::max_element(window_.begin(), window_.end());
        if (!(rep.rho_hat < BigReal(kRhoCeiling))) return false;
        rep.bound = last_mag * rep.rho_hat / (1 - rep.rho_hat);
        return rep.bound < tol;
    }

private:
    std::deque<BigReal> window_;
};

bool is_nonneg_power_of_inverse_q(const ExactQ& b, const ExactQ& q) {
    // b == q^{-m} for some m >= 0
    ExactQ v = b;
    for (int guard = 0; guard < 4096; ++guard) {
        if (v == 1) return true;
        if (v < 1) return false;
        v *= q;
    }
    return false;
}

struct BigParams {
    BigReal q, c;
    std::vector<BigReal> A, B;  // index l = 1..n+1 stored at l
};

BigParams big_params(const CParams<ExactQ>& cp) {
    BigParams p;
    p.q = to_big(cp.q);
    p.c = to_big(cp.c);
    p.A.resize(static_cast<std::size_t>(cp.n + 2));
    p.B.resize(static_cast<std::size_t>(cp.n + 2));
    for (long l = 1; l <= cp.n + 1; ++l) {
        p.A[static_cast<std::size_t>(l)] = to_big(cp.A(l));
        p.B[static_cast<std::size_t>(l)] = to_big(cp.B(l));
    }
    return p;
}

}  // namespace

SeriesConfig make_series_config(int tol_exp10) {
    SeriesConfig cfg;
    cfg.tol = pow(BigReal(10), -tol_exp10);
    return cfg;
}

void check_series_domain(const CParams<ExactQ>& cp) {
    if (!(cp.q > 0 && cp.q < 1)) throw DomainError("need 0 < q < 1");
    if (cp.c < 0 || cp.c * cp.q >= 1) throw DomainError("need 0 <= c < 1/q, got c=" + to_string(cp.c));
    for (long l = 1; l <= cp.n + 1; ++l) {
        if (!(cp.A(l) > 0)) throw DomainError("need a_" + std::to_string(l) + " > 0");
        if (cp.A(l) == 1) throw DomainError("a_" + std::to_string(l) + " = 1");
        if (l <= cp.n) {
            if (!(cp.B(l) > 0)) throw DomainError("need b_" + std::to_string(l) + " > 0");
            if (is_nonneg_power_of_inverse_q(cp.B(l), cp.q))
                throw DomainError("b_" + std::to_string(l) + " is a power of 1/q");
        }
    }
}

HgVector eval_x(const CParams<ExactQ>& cp, const SeriesConfig& cfg) {
    check_series_domain(cp);
    const long n = cp.n;
    const BigParams p = big_params(cp);
    HgVector out;
    for (long j = 1; j <= n + 1; ++j) {
        BigReal pre = 1;
        for (long l = 1; l <= n - j + 1; ++l) pre *= 1 - p.A[l];
        for (long l = n - j + 2; l <= n; ++l) pre *= 1 - p.B[l];
        const BigReal apre = abs(pre);

        TruncationReport rep;
        rep.precision = BigReal::default_precision();
        TailTracker tail;
        BigReal term = 1, sum = 1, qk = 1;  // qk = q^k
        for (long k = 0;; ++k) {
            if (k >= cfg.max_terms) throw NonConvergent("eval_x hit max_terms for component " + std::to_string(j));
            const BigReal qk1 = qk * p.q;
            BigReal r = p.q * p.c;
            for (long l = 1; l <= n - j + 1; ++l) r *= (1 - qk1 * p.A[l]) / (1 - qk1 * p.B[l]);
            for (long l = n - j + 2; l <= n + 1; ++l) r *= (1 - qk * p.A[l]) / (1 - qk * p.B[l]);
            term *= r;
            sum += term;
            qk = qk1;
            tail.push(r);
            rep.N = k + 2;  // terms 0..k+1
            if (tail.done(apre * abs(term), cfg.tol, rep)) break;
        }
        rep.converged = true;
        out.vals.push_back(pre * sum);
        out.trunc.push_back(rep);
    }
    return out;
}

HgVector eval_y(const CParams<ExactQ>& cp, const SeriesConfig& cfg) {
    check_series_domain(cp);
    const long n = cp.n;
    const BigParams p = big_params(cp);
    HgVector out;
    for (long j = 1; j <= n + 1; ++j) {
        // f[l][k] = (b_l/a_l;q)_k / (q;q)_k z_l^k
        std::vector<BigReal> z(static_cast<std::size_t>(n + 1));
        std::vector<BigReal> ba(static_cast<std::size_t>(n + 1));
        for (long l = 1; l <= n; ++l) {
            z[l] = (l <= n - j + 1) ? BigReal(p.q * p.A[l]) : p.A[l];
            ba[l] = p.B[l] / p.A[l];
        }
        std::vector<std::vector<BigReal>> f(static_cast<std::size_t>(n + 1), std::vector<BigReal>{BigReal(1)});
        BigReal C = 1;  // (qc;q)_S / (q a_{n+1} c;q)_S
        BigReal qS = 1; // q^S
        BigReal total = 0;
        BigReal prev_mag = 0;
        TruncationReport rep;
        rep.precision = BigReal::default_precision();
        TailTracker tail;
        for (long S = 0;; ++S) {
            if (S >= cfg.max_shells) throw NonConvergent("eval_y hit max_shells for component " + std::to_string(j));
            if (S > 0) {
                const BigReal qs = qS * p.q;  // q^S
                C *= (1 - qs * p.c) / (1 - qs * p.A[n + 1] * p.c);
                for (long l = 1; l <= n; ++l) {
                    const BigReal& last = f[l].back();
                    f[l].push_back(last * (1 - qS * ba[l]) / (1 - qs) * z[l]);
                }
                qS = qs;
            }
            BigReal shell = 0, mag = 0;
            // enumerate k_1 + ... + k_n = S
            std::function<void(long, long, const BigReal&)> walk = [&](long l, long rem, const BigReal& acc) {
                if (l == n) {
                    const BigReal t = acc * f[n][rem];
                    shell += t;
                    mag += abs(t);
                    return;
                }
                for (long k = 0; k <= rem; ++k) walk(l + 1, rem - k, acc * f[l][k]);
            };
            walk(1, S, C);
            total += shell;
            rep.N = S + 1;
            if (S > 0) tail.push(prev_mag == 0 ? BigReal(0) : BigReal(mag / prev_mag));
            prev_mag = mag;
            if (S > 0 && tail.done(mag, cfg.tol, rep)) break;
        }
        rep.converged = true;
        out.vals.push_back(total);
        out.trunc.push_back(rep);
    }
    return out;
}

BigReal andrews_prefactor(const CParams<ExactQ>& cp, const SeriesConfig& cfg) {
    const BigParams p = big_params(cp);
    QPochConfig qc{p.q, cfg.tol * BigReal("1e-5"), 100000};
    BigReal num = qpoch_inf(BigReal(p.q * p.c), qc).value;
    BigReal den = qpoch_inf(BigReal(p.q * p.A[cp.n + 1] * p.c), qc).value;
    for (long l = 1; l <= cp.n; ++l) {
        num *= qpoch_inf(BigReal(p.q * p.B[l]), qc).value;
        den *= qpoch_inf(p.A[l], qc).value;
    }
    return checked_div(num, den, "(q a_{n+1} c, a_1..a_n;q)_inf");
}

BigReal andrews_residual(const CParams<ExactQ>& cp, const SeriesConfig& cfg) {
    const HgVector y = eval_y(cp, cfg);
    const HgVector x = eval_x(cp, cfg);
    const BigReal pref = andrews_prefactor(cp, cfg);
    std::vector<BigReal> rhs, diff;
    for (std::size_t k = 0; k < x.vals.size(); ++k) {
        rhs.push_back(pref * x.vals[k]);
        diff.push_back(y.vals[k] - rhs.back());
    }
    return norm_inf(diff) / norm_inf(rhs);
}

SpecialState<BigReal> riccati_state(const CParams<ExactQ>& cp, const SeriesConfig& cfg) {
    const HgVector x = eval_x(cp, cfg);
    const long n = cp.n;
    SpecialState<BigReal> s;
    s.params = to_big(cp);
    for (long j = 0; j < n; ++j)
        s.even.push_back(checked_div(BigReal(-x.vals[j + 1]), x.vals[j], "x_" + std::to_string(j + 1)));
    s.even.push_back(checked_div(BigReal(-s.params.q * s.params.c * x.vals[0]), x.vals[n], "x_{n+1}"));
    return s;
}

BigReal riccati_residual(const CParams<ExactQ>& cp, const SeriesConfig& cfg) {
    const auto stepped = tau_c_step(riccati_state(cp, cfg));
    const auto direct = riccati_state(translation_on_cparams(tok::tau_c(), cp), cfg);
    BigReal worst = 0;
    for (std::size_t j = 0; j < direct.even.size(); ++j)
        worst = std::max(worst, BigReal(abs(stepped.even[j] - direct.even[j]) / abs(direct.even[j])));
    return worst;
}

ExactCheckReport sigma_prime_recurrences(const CParams<ExactQ>& cp, int K) {
    ExactCheckReport rep;
    const auto cp2 = act_on_cparams(tok::sigmap(), cp);
    const auto M0 = sigma_prime_part0(cp);
    const auto M1 = sigma_prime_part1(cp);
    std::vector<ExactQ> prev_shift, prev;
    for (int k = 0; k <= K; ++k) {
        const auto xs = x_coeff<ExactQ>(k, cp2);
        const auto x = x_coeff<ExactQ>(k, cp);
        std::vector<ExactQ> lhs, rhs;
        if (k == 0) {
            lhs = xs;
            rhs = M0.apply(x);
        } else {
            const ExactQ qk = ipow(cp.q, -k);
            const ExactQ qk1 = ipow(cp.q, -k + 1);
            const auto a = M0.apply(x);
            const auto b = M1.apply(prev);
            for (std::size_t j = 0; j < x.size(); ++j) {
                lhs.push_back(qk * xs[j]);
                rhs.push_back(qk1 * prev_shift[j] + a[j] + b[j]);
            }
        }
        ++rep.checked;
        if (lhs != rhs) {
            rep.holds = false;
            rep.detail = "recurrence fails at k=" + std::to_string(k);
            return rep;
        }
        prev_shift = xs;
        prev = x;
    }
    return rep;
}

}  // namespace qgarnier
