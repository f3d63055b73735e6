#include <gtest/gtest.h>

#include <random>

#include "qgarnier/weyl_matrices.hpp"
#include "qgarnier/verify/sampling.hpp"

namespace qgarnier {
namespace {

using namespace tok;

ExactQ Q(long p, long q = 1) { return ExactQ(p) / ExactQ(q); }

class WeylMatrices : public ::testing::Test {
protected:
    PrecisionScope prec{60};
    SeriesConfig cfg = make_series_config(45);
};

CParams<ExactQ> point(int n, std::uint64_t seed) { return verify::sample_cparams(seed, n); }

BigReal gap(const Matrix<BigReal>& a, const Matrix<BigReal>& b) { return norm_inf(a - b) / norm_inf(b); }

TEST_F(WeylMatrices, Pi1OrderOne) {
    const auto cp = point(1, 1);
    const auto M = gen_matrix(pi1(), cp);
    Matrix<ExactQ> want(2);
    want(1, 2) = 1;
    want(2, 1) = cp.q * cp.c;
    EXPECT_EQ(M.core, want);
    const BigReal g = log_base_q(to_big(cp.b[0] / cp.q), to_big(cp.q));
    EXPECT_LT(abs(M.gamma() - g), BigReal("1e-55"));
}

TEST_F(WeylMatrices, TauCOrderOne) {
    const auto cp = point(1, 2);
    const auto M = gen_matrix(tau_c(), cp);
    const ExactQ &a1 = cp.a[0], &a2 = cp.a[1], &b1 = cp.b[0], &c = cp.c;
    Matrix<ExactQ> want(2);
    want(1, 1) = b1 - a2 * c;
    want(1, 2) = 1 - a1;
    want(2, 1) = (b1 - a2) * c;
    want(2, 2) = 1 - a1 * c;
    EXPECT_EQ(M.core * ExactQ(1 - c), want);
    EXPECT_TRUE(M.prefactor.empty());
}

TEST_F(WeylMatrices, PiAtCoincidentAIsIdentity) {
    for (int n = 1; n <= 2; ++n)
        for (int i = 1; i < n + 1; ++i) {
            auto cp = point(n, 3);
            cp.a[static_cast<std::size_t>(i)] = cp.a[static_cast<std::size_t>(i - 1)];
            EXPECT_EQ(gen_matrix(p(i), cp).core, Matrix<ExactQ>::identity(n + 1));
        }
}

TEST_F(WeylMatrices, EmptyWordIsIdentity) {
    const auto M = word_matrix({}, point(2, 4));
    EXPECT_EQ(M.core, Matrix<ExactQ>::identity(3));
    EXPECT_EQ(M.gamma(), BigReal(0));
}

TEST_F(WeylMatrices, ActOnMatrixShiftsParameters) {
    const auto cp = point(2, 5);
    auto builder = [](const CParams<ExactQ>& c) { return gen_matrix(sigma(), c); };
    const auto moved = act_on_matrix(sigmap(), builder, cp);
    EXPECT_EQ(moved.core, gen_matrix(sigma(), act_on_cparams(sigmap(), cp)).core);
    EXPECT_EQ(moved.params_at.c, cp.c / cp.q);
}

TEST_F(WeylMatrices, InvolutionsSquareToIdentity) {
    for (int n = 1; n <= 2; ++n) {
        const auto cp = point(n, 6);
        for (int i = 0; i <= n; ++i) {
            const auto M = word_matrix({p(i), p(i)}, cp);
            EXPECT_EQ(M.core, Matrix<ExactQ>::identity(n + 1)) << "p" << i;
            // p_i(M_{p_i}) against an independent exact inverse
            const auto back = gen_matrix(p(i), act_on_cparams(p(i), cp)).core;
            EXPECT_EQ(back, inverse(gen_matrix(p(i), cp).core));
        }
    }
}

TEST_F(WeylMatrices, TauCIsSigmaPrimeThenSigma) {
    for (int n = 1; n <= 2; ++n) {
        const auto cp = point(n, 7);
        EXPECT_LT(gap(word_matrix({sigmap(), sigma()}, cp).value(), gen_matrix(tau_c(), cp).value()), BigReal("1e-45"));
    }
}

TEST_F(WeylMatrices, DeltaOneTwo) {
    const auto cp = point(2, 8);
    EXPECT_EQ(delta_ij(1, 2, cp), (1 - cp.b[1]) / (1 - cp.a[0] / cp.q));
}

TEST_F(WeylMatrices, TauIMatchesWordProduct) {
    for (int n = 1; n <= 2; ++n) {
        const auto cp = point(n, 9);
        for (int i = 1; i <= n + 1; ++i) {
            GroupWord w;
            for (int k = 0; k < n; ++k) w.push_back(p(i + k));
            w.push_back(sigma());
            EXPECT_LT(gap(tau_i_matrix(i, cp).value(), word_matrix(w, cp).value()), BigReal("1e-40")) << i;
        }
    }
}

TEST_F(WeylMatrices, CocycleRule) {
    const auto cp = point(2, 10);
    const GroupWord w1{p(1), sigma()}, w2{pp(1), sigmap()};
    GroupWord w = w1;
    w.insert(w.end(), w2.begin(), w2.end());
    const auto lhs = word_matrix(w, cp).value();
    const auto rhs = word_matrix(w2, act_word_on_cparams(w1, cp)).value() * word_matrix(w1, cp).value();
    EXPECT_LT(gap(lhs, rhs), BigReal("1e-50"));
}

TEST_F(WeylMatrices, SingleGeneratorResiduals) {
    EXPECT_LT(word_solution_residual({sigmap()}, point(1, 11), cfg), BigReal("1e-40"));
    for (int n = 1; n <= 2; ++n) {
        const auto cp = point(n, 12);
        for (auto g : {sigma(), sigmap(), tau_c()}) EXPECT_LT(word_solution_residual({g}, cp, cfg), BigReal("1e-38"));
        for (int i = 0; i <= n; ++i) EXPECT_LT(word_solution_residual({p(i)}, cp, cfg), BigReal("1e-38"));
        for (int i = 1; i < n; ++i) EXPECT_LT(word_solution_residual({pp(i)}, cp, cfg), BigReal("1e-38"));
    }
}

TEST_F(WeylMatrices, TauCResidual) {
    EXPECT_LT(word_solution_residual({tau_c()}, point(1, 13), cfg), BigReal("1e-40"));
    EXPECT_LT(word_solution_residual({tau_c()}, point(2, 13), cfg), BigReal("1e-40"));
}

TEST_F(WeylMatrices, RandomWordResiduals) {
    std::mt19937_64 rng(14);
    for (int n = 1; n <= 2; ++n) {
        std::vector<Token> alphabet{sigma(), sigmap()};
        for (int i = 1; i <= n; ++i) alphabet.push_back(p(i));
        for (int i = 1; i < n; ++i) alphabet.push_back(pp(i));
        std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
        int evaluated = 0;
        for (int t = 0; t < 40 && evaluated < 8; ++t) {
            GroupWord w;
            for (int k = 0; k < 4; ++k) w.push_back(alphabet[pick(rng)]);
            try {
                EXPECT_LT(word_solution_residual(w, point(n, 15 + static_cast<std::uint64_t>(t)), cfg), BigReal("1e-38"))
                    << to_string(w);
                ++evaluated;
            } catch (const DomainError&) {
                // image point left the convergence domain
            } catch (const DivisionByZero&) {
                // a prefix image hit c = 1
            }
        }
        EXPECT_EQ(evaluated, 8);
    }
}

TEST_F(WeylMatrices, LadderResiduals) {
    for (int n = 1; n <= 2; ++n) {
        const auto cp = point(n, 16);
        for (int i = 1; i <= n + 1; ++i) {
            EXPECT_LT(word_solution_residual({tau_i(i)}, cp, cfg), BigReal("1e-36"));
            for (int j = 1; j <= n + 1; ++j) EXPECT_LT(word_solution_residual({tau_ij(i, j)}, cp, cfg), BigReal("1e-36"));
        }
    }
}

TEST_F(WeylMatrices, SecondSolutions) {
    const auto pi1_rep = second_solution(pi1(), point(1, 17), cfg);
    EXPECT_LT(pi1_rep.residual, BigReal("1e-38"));
    EXPECT_GT(pi1_rep.gap, BigReal("1e-10"));
    const auto p0_rep = second_solution(pp(0), point(1, 18), cfg);
    EXPECT_LT(p0_rep.residual, BigReal("1e-38"));
    EXPECT_GT(p0_rep.gap, BigReal("1e-10"));
}

TEST_F(WeylMatrices, SecondSolutionPi2) {
    const auto cp = CParams<ExactQ>::make(1, {Q(7, 10), Q(8, 10)}, {Q(3, 10)}, Q(3, 4), Q(1, 2));
    const auto rep = second_solution(pi2(), cp, cfg);
    EXPECT_LT(rep.residual, BigReal("1e-35"));
    EXPECT_GT(rep.gap, BigReal("1e-10"));
}

TEST_F(WeylMatrices, SecondSolutionPi2NeedsSmallB) {
    const auto cp = CParams<ExactQ>::make(1, {Q(1, 10), Q(2, 10)}, {Q(9, 10)}, Q(3, 4), Q(1, 2));
    EXPECT_THROW(second_solution(pi2(), cp, cfg), DomainError);
    EXPECT_THROW(second_solution(sigma(), point(1, 19), cfg), DomainError);
}

TEST_F(WeylMatrices, LemmaPnPi1) {
    EXPECT_LT(lemma_pn_pi1_residual(point(1, 20), cfg), BigReal("1e-40"));
    EXPECT_LT(lemma_pn_pi1_residual(point(2, 20), cfg), BigReal("1e-38"));
}

TEST_F(WeylMatrices, TildeIdentities) {
    for (int n = 1; n <= 3; ++n) {
        const auto rep = tilde_identities(point(n, 21));
        EXPECT_TRUE(rep.holds) << rep.detail;
        EXPECT_GT(rep.checked, 0);
    }
}

TEST_F(WeylMatrices, Pi2ProofIdentity) {
    for (int n = 1; n <= 2; ++n) {
        auto cp = verify::sample_cparams(22, n, verify::Domain::Pi2);
        EXPECT_LT(pi2_proof_identity_residual(cp), BigReal("1e-40"));
    }
}

TEST_F(WeylMatrices, PrefactorOfInverseCancels) {
    for (int n = 1; n <= 2; ++n) {
        const auto cp = point(n, 23);
        for (auto g : {pi1(), pp(0), pp(n)}) {
            const auto M = word_matrix({g, inv(g)}, cp);
            EXPECT_LT(norm_inf(M.value() - to_big(Matrix<ExactQ>::identity(n + 1))), BigReal("1e-50")) << to_string(g);
        }
    }
}

}  // namespace
}  // namespace qgarnier
