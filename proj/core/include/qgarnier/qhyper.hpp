#pragma once

#include <string>
#include <vector>

#include "qgarnier/cparams.hpp"
#include "qgarnier/qpoch.hpp"
#include "qgarnier/specialization.hpp"

namespace qgarnier {

struct SeriesConfig {
    BigReal tol{"1e-45"};
    long max_terms = 10000;
    long max_shells = 4000;  // multi-sum cap for eval_y
};

// Tolerance 10^-tol_exp10 at the current default precision.
SeriesConfig make_series_config(int tol_exp10);

struct TruncationReport {
    long N = 0;         // terms (or shells) summed
    BigReal rho_hat{0};  // max of the last few term ratios
    BigReal bound{0};    // |term_N| rho_hat / (1 - rho_hat)
    bool converged = false;
    unsigned precision = 0;
};

struct HgVector {
    std::vector<BigReal> vals;             // components 1..n+1 at index 0..n
    std::vector<TruncationReport> trunc;  // per component
};

// k-th coefficient vector of x = sum_k x_k c^k, exact:
// x_{k,j} = q^k prod_{l<=n-j+1}(1-a_l) prod_{l=n-j+2}^{n}(1-b_l)
//           prod_{l<=n-j+1} (q a_l;q)_k/(q b_l;q)_k prod_{l>=n-j+2}^{n+1} (a_l;q)_k/(b_l;q)_k
template <class F>
std::vector<F> x_coeff(long k, const CParams<F>& cp) {
    const long n = cp.n;
    std::vector<F> out;
    for (long j = 1; j <= n + 1; ++j) {
        F v = ipow(cp.q, k);
        for (long l = 1; l <= n - j + 1; ++l) {
            v *= F(1) - cp.A(l);
            v *= checked_div(qpoch(F(cp.q * cp.A(l)), cp.q, k), qpoch(F(cp.q * cp.B(l)), cp.q, k),
                             "(q b_" + std::to_string(l) + ";q)_k");
        }
        for (long l = n - j + 2; l <= n + 1; ++l) {
            if (l <= n) v *= F(1) - cp.B(l);
            v *= checked_div(qpoch(cp.A(l), cp.q, k), qpoch(cp.B(l), cp.q, k),
                             "(b_" + std::to_string(l) + ";q)_k");
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Rejects points where the series is undefined or divergent:
// q outside (0,1), a_l, b_l <= 0, a_l = 1, b_l in q^{-m}, c outside [0, 1/q).
void check_series_domain(const CParams<ExactQ>& cp);

// x_j summed until the geometric tail bound drops below cfg.tol.
HgVector eval_x(const CParams<ExactQ>& cp, const SeriesConfig& cfg);

// q-Lauricella vector y, summed by total-degree shells.
HgVector eval_y(const CParams<ExactQ>& cp, const SeriesConfig& cfg);

// (qc, qb_1..qb_n; q)_inf / (q a_{n+1} c, a_1..a_n; q)_inf, the factor with y = factor * x.
BigReal andrews_prefactor(const CParams<ExactQ>& cp, const SeriesConfig& cfg);

// max_j |y_j - factor x_j| / max_j |factor x_j|.
BigReal andrews_residual(const CParams<ExactQ>& cp, const SeriesConfig& cfg);

// Locus point built from x: phi_{2j,0} = -x_{j+2}/x_{j+1} (j < n), phi_{2n,0} = -q c x_1/x_{n+1}.
SpecialState<BigReal> riccati_state(const CParams<ExactQ>& cp, const SeriesConfig& cfg);

// Componentwise relative gap between tau_c_step(riccati_state(cp)) and
// riccati_state(tau_c(cp)).
BigReal riccati_residual(const CParams<ExactQ>& cp, const SeriesConfig& cfg);

struct ExactCheckReport {
    bool holds = true;
    int checked = 0;
    std::string detail;
};

// x_0(sigma'(c)) = M_{sigma',0} x_0(c) and, for k = 1..K,
// q^{-k} x_k(sigma'(c)) = q^{-k+1} x_{k-1}(sigma'(c)) + M_{sigma',0} x_k(c) + M_{sigma',1} x_{k-1}(c).
ExactCheckReport sigma_prime_recurrences(const CParams<ExactQ>& cp, int K);

}  // namespace qgarnier
