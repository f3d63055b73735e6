#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qgarnier/matrix.hpp"
#include "qgarnier/qhyper.hpp"
#include "qgarnier/specialization.hpp"

namespace qgarnier {

// One prefactor c_k^{log_q base_k}: c_k is the value of c at which the
// factor was built, base_k the displayed base (b_1, b_n/q, q a_{n-1}).
struct PowerFactor {
    ExactQ c;
    ExactQ base;
};

// core times the product of power factors; core is exact.
struct QMatrix {
    Matrix<ExactQ> core;
    std::vector<PowerFactor> prefactor;  // empty when there is no c^gamma factor
    CParams<ExactQ> params_at;

    // Exponent gamma with prod_k c_k^{log_q base_k} = c^gamma, c = params_at.c.
    BigReal gamma() const;
    // prod_k c_k^{log_q base_k}.
    BigReal prefactor_value() const;
    // Numeric matrix c^gamma * core.
    Matrix<BigReal> value() const;
};

// Matrix of one derived generator (p_i, p'_i, sigma, sigma', pi_1, pi_2, tau_c,
// tau_i, tau_i_j) at cp. Inverse tokens use M_{w^-1} = (w^-1(M_w))^-1.
QMatrix gen_matrix(const Token& g, const CParams<ExactQ>& cp);

// g(M): the builder re-evaluated at g's parameter image.
QMatrix act_on_matrix(const Token& g, const std::function<QMatrix(const CParams<ExactQ>&)>& builder,
                      const CParams<ExactQ>& cp);

// Cocycle product M_{w_1...w_m} = (w_1...w_{m-1})(M_{w_m}) ... w_1(M_{w_2}) M_{w_1}.
QMatrix word_matrix(const GroupWord& w, const CParams<ExactQ>& cp);

// Delta_{i,j} normalizing the tau_i_j product.
ExactQ delta_ij(int i, int j, const CParams<ExactQ>& cp);

// The displayed ordered products, each factor evaluated at its own
// parameter image; tau_ij_matrix divides by Delta_{i,j}.
QMatrix tau_i_matrix(int i, const CParams<ExactQ>& cp);
QMatrix tau_ij_matrix(int i, int j, const CParams<ExactQ>& cp);

// M_{sigma',0} (upper triangle with diagonal) and M_{sigma',1} (strict lower
// triangle), with (1-c) M_{sigma'} = M_{sigma',0} + c M_{sigma',1}.
Matrix<ExactQ> sigma_prime_part0(const CParams<ExactQ>& cp);
Matrix<ExactQ> sigma_prime_part1(const CParams<ExactQ>& cp);

// M x for a numeric vector.
std::vector<BigReal> apply_matrix(const QMatrix& M, const std::vector<BigReal>& x);

// ||x(target) - M x(cp)||_inf / ||x(cp)||_inf.
BigReal solution_residual(const QMatrix& M, const CParams<ExactQ>& target, const CParams<ExactQ>& cp,
                          const SeriesConfig& cfg);

// solution_residual for the matrix and parameter image of a word.
BigReal word_solution_residual(const GroupWord& w, const CParams<ExactQ>& cp, const SeriesConfig& cfg);

struct SecondSolution {
    std::vector<BigReal> z;
    BigReal residual{0};  // ||z(tau_c c) - M_{tau_c} z(c)|| / ||z(tau_c c)||
    BigReal gap{0};       // max |z_j/x_j - z_k/x_k|
};

// z(c) = g^-1(M_g) x(g^-1(c)) for g in {p'_0, p'_n, pi_1, pi_2}.
SecondSolution second_solution(const Token& g, const CParams<ExactQ>& cp, const SeriesConfig& cfg);

// x(p'_n pi_1(c)) against (1-a_0)/(1-b_n) p'_n(M_{pi_1}) M_{p'_n} x(c).
BigReal lemma_pn_pi1_residual(const CParams<ExactQ>& cp, const SeriesConfig& cfg);

// The three exact identities for prefactor-free matrices:
// M~_{pi_1}^{n+1} = q c I, p'_i(M~_{p'_i}) M~_{p'_i} = I,
// M~_{pi_1} M~_{p'_i} = pi_1(M~_{p'_{i+1}}) M~_{pi_1}.
ExactCheckReport tilde_identities(const CParams<ExactQ>& cp);

// Relative gap of tau_c^-1(M_{tau_c}^-1) = tau_c^-1(M_{pi_2}^-1) pi_2(M_{tau_c}) M_{pi_2},
// prefactors included.
BigReal pi2_proof_identity_residual(const CParams<ExactQ>& cp);

}  // namespace qgarnier
