#include <gtest/gtest.h>

#include "qgarnier/qhyper.hpp"
#include "qgarnier/verify/sampling.hpp"

namespace qgarnier {
namespace {

ExactQ Q(long p, long q = 1) { return ExactQ(p) / ExactQ(q); }

class Qhyper : public ::testing::Test {
protected:
    PrecisionScope prec{60};
    SeriesConfig cfg = make_series_config(45);
};

CParams<ExactQ> sample_n1() {
    return CParams<ExactQ>::make(1, {Q(1, 3), Q(1, 5)}, {Q(1, 7)}, Q(1, 4), Q(1, 2));
}

// a_l = b_l for every l, so a_{n+1} = q.
CParams<ExactQ> diagonal(int n) {
    std::vector<ExactQ> a, b;
    for (int l = 1; l <= n; ++l) {
        a.push_back(Q(l, 4 * l + 3));
        b.push_back(a.back());
    }
    a.push_back(Q(1, 2));
    return CParams<ExactQ>::make(n, a, b, Q(3, 8), Q(1, 2));
}

// Term-by-term partial sum with every q-Pochhammer recomputed from scratch.
std::vector<BigReal> brute_force_x(const CParams<ExactQ>& e, long terms) {
    const CParams<BigReal> cp = to_big(e);
    const long n = cp.n;
    std::vector<BigReal> out;
    for (long j = 1; j <= n + 1; ++j) {
        BigReal sum = 0;
        for (long k = 0; k < terms; ++k) {
            BigReal t = pow(cp.q * cp.c, BigReal(k));
            for (long l = 1; l <= n - j + 1; ++l)
                t *= (1 - cp.A(l)) * qpoch(BigReal(cp.q * cp.A(l)), cp.q, k) / qpoch(BigReal(cp.q * cp.B(l)), cp.q, k);
            for (long l = n - j + 2; l <= n + 1; ++l) {
                if (l <= n) t *= 1 - cp.B(l);
                t *= qpoch(cp.A(l), cp.q, k) / qpoch(cp.B(l), cp.q, k);
            }
            sum += t;
        }
        out.push_back(sum);
    }
    return out;
}

TEST_F(Qhyper, CoefficientZeroOrderOne) {
    const auto cp = sample_n1();
    EXPECT_EQ(x_coeff<ExactQ>(0, cp), (std::vector<ExactQ>{1 - cp.a[0], 1 - cp.b[0]}));
}

TEST_F(Qhyper, CoefficientsOnDiagonal) {
    for (int n = 1; n <= 3; ++n) {
        const auto cp = diagonal(n);
        ExactQ pre = 1;
        for (int l = 1; l <= n; ++l) pre *= 1 - cp.A(l);
        for (long k = 0; k <= 6; ++k)
            for (const auto& v : x_coeff<ExactQ>(k, cp)) EXPECT_EQ(v, ipow(cp.q, k) * pre);
    }
}

TEST_F(Qhyper, EvalXAtZeroC) {
    auto cp = sample_n1();
    cp.c = 0;
    const auto x = eval_x(cp, cfg);
    EXPECT_LT(abs(x.vals[0] - to_big(1 - cp.a[0])), BigReal("1e-58"));
    EXPECT_LT(abs(x.vals[1] - to_big(1 - cp.b[0])), BigReal("1e-58"));
}

TEST_F(Qhyper, EvalXGeometricOnDiagonal) {
    for (int n = 1; n <= 3; ++n) {
        const auto cp = diagonal(n);
        BigReal want = 1 / (1 - to_big(cp.q * cp.c));
        for (int l = 1; l <= n; ++l) want *= 1 - to_big(cp.A(l));
        for (const auto& v : eval_x(cp, cfg).vals) EXPECT_LT(abs(v - want), BigReal("1e-45"));
    }
}

TEST_F(Qhyper, EvalXAgainstBruteForce) {
    const auto cp = sample_n1();
    const auto x = eval_x(cp, cfg);
    const auto oracle = brute_force_x(cp, 200);
    for (std::size_t j = 0; j < oracle.size(); ++j) {
        EXPECT_LT(abs(x.vals[j] - oracle[j]), BigReal("1e-45"));
        EXPECT_TRUE(x.trunc[j].converged);
        EXPECT_LT(x.trunc[j].bound, BigReal("1e-45"));
    }
}

TEST_F(Qhyper, EvalXAgainstCoefficientSums) {
    for (int n = 1; n <= 2; ++n) {
        const auto cp = verify::sample_cparams(7, n);
        std::vector<BigReal> partial(static_cast<std::size_t>(n + 1), BigReal(0));
        for (long k = 0; k < 200; ++k) {
            const auto xk = x_coeff<ExactQ>(k, cp);
            const BigReal ck = to_big(ipow(cp.c, k));
            for (std::size_t j = 0; j < xk.size(); ++j) partial[j] += to_big(xk[j]) * ck;
        }
        const auto x = eval_x(cp, cfg);
        for (std::size_t j = 0; j < partial.size(); ++j) EXPECT_LT(abs(x.vals[j] - partial[j]), BigReal("1e-44"));
    }
}

TEST_F(Qhyper, TermRatioTendsToQC) {
    for (int n = 1; n <= 2; ++n) {
        const auto cp = verify::sample_cparams(9, n);
        const BigReal qc = to_big(cp.q * cp.c);
        for (const auto& t : eval_x(cp, cfg).trunc) {
            if (t.N < 30) continue;
            EXPECT_LT(abs(t.rho_hat - qc) / qc, BigReal("0.01"));
        }
    }
}

TEST_F(Qhyper, DomainChecks) {
    auto cp = sample_n1();
    cp.c = 2;
    EXPECT_THROW(eval_x(cp, cfg), DomainError);
    cp = sample_n1();
    cp.a[0] = 1;
    EXPECT_THROW(eval_x(cp, cfg), DomainError);
    cp = sample_n1();
    cp.b[0] = 4;  // q^-2
    EXPECT_THROW(eval_x(cp, cfg), DomainError);
    cp = sample_n1();
    cp.q = Q(3, 2);
    EXPECT_THROW(eval_x(cp, cfg), DomainError);
}

TEST_F(Qhyper, NonConvergentCap) {
    SeriesConfig tight = cfg;
    tight.max_terms = 5;
    EXPECT_THROW(eval_x(sample_n1(), tight), NonConvergent);
}

TEST_F(Qhyper, EvalYOnDiagonalIsOne) {
    for (int n = 1; n <= 2; ++n)
        for (const auto& v : eval_y(diagonal(n), cfg).vals) EXPECT_LT(abs(v - 1), BigReal("1e-45"));
}

TEST_F(Qhyper, AndrewsOnDiagonal) {
    EXPECT_LT(andrews_residual(diagonal(1), cfg), BigReal("1e-44"));
}

TEST_F(Qhyper, AndrewsAtSamples) {
    const SeriesConfig ycfg = make_series_config(33);
    for (int n = 1; n <= 2; ++n)
        EXPECT_LT(andrews_residual(verify::sample_cparams(3, n, verify::Domain::Lauricella), ycfg), BigReal("1e-30"));
}

TEST_F(Qhyper, RiccatiResidual) {
    EXPECT_LT(riccati_residual(verify::sample_cparams(5, 1), cfg), BigReal("1e-38"));
    EXPECT_LT(riccati_residual(verify::sample_cparams(5, 2), cfg), BigReal("1e-35"));
}

TEST_F(Qhyper, RiccatiStateConstraint) {
    for (int n = 1; n <= 2; ++n) {
        const auto cp = verify::sample_cparams(11, n);
        const auto s = riccati_state(cp, cfg);
        BigReal prod = 1;
        for (const auto& e : s.even) prod *= e;
        const BigReal target = to_big(even_product_target(cp));
        EXPECT_LT(abs(prod - target) / abs(target), BigReal("1e-44"));
    }
}

TEST_F(Qhyper, SigmaPrimeRecurrences) {
    const auto one = sigma_prime_recurrences(sample_n1(), 1);
    EXPECT_TRUE(one.holds) << one.detail;
    EXPECT_EQ(one.checked, 2);
    const auto diag = sigma_prime_recurrences(diagonal(2), 0);
    EXPECT_TRUE(diag.holds) << diag.detail;
    const auto five = sigma_prime_recurrences(verify::sample_cparams(13, 2), 5);
    EXPECT_TRUE(five.holds) << five.detail;
    EXPECT_EQ(five.checked, 6);
}

}  // namespace
}  // namespace qgarnier
