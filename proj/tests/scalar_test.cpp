#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qgarnier/errors.hpp"
#include "qgarnier/perturb.hpp"
#include "qgarnier/qpoch.hpp"
#include "qgarnier/scalar.hpp"

namespace qgarnier {
namespace {

ExactQ Q(long p, long q = 1) { return ExactQ(p) / ExactQ(q); }

TEST(Qpoch, EmptyProductIsOne) {
    EXPECT_EQ(qpoch(Q(3, 7), Q(1, 2), 0), Q(1));
    EXPECT_EQ(qpoch(Q(0), Q(1, 3), 0), Q(1));
}

TEST(Qpoch, MatchesExpandedProduct) {
    // (1 - 1/2)(1 - 1/4)
    EXPECT_EQ(qpoch(Q(1, 2), Q(1, 2), 2), Q(3, 8));
}

TEST(Qpoch, VanishesWhenFirstFactorDoes) {
    EXPECT_EQ(qpoch(Q(1), Q(1, 2), 3), Q(0));
    EXPECT_EQ(qpoch(Q(1), Q(2, 3), 1), Q(0));
}

TEST(Qpoch, SplitsAcrossLengths) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(1, 30);
    for (int t = 0; t < 20; ++t) {
        const ExactQ a = Q(d(rng), d(rng)), q = Q(d(rng), 31);
        for (long k = 0; k <= 5; ++k)
            for (long l = 0; l <= 5; ++l)
                EXPECT_EQ(qpoch(a, q, k + l), qpoch(a, q, k) * qpoch(a * ipow(q, k), q, l));
    }
}

class QpochInfTest : public ::testing::Test {
protected:
    PrecisionScope prec{60};
};

TEST_F(QpochInfTest, ZeroArgumentIsOne) {
    const auto r = qpoch_inf(BigReal(0), {BigReal("0.5"), BigReal("1e-40")});
    EXPECT_EQ(r.value, BigReal(1));
}

TEST_F(QpochInfTest, FirstFactorZero) {
    const auto r = qpoch_inf(BigReal(1), {BigReal("0.5"), BigReal("1e-40")});
    EXPECT_EQ(r.value, BigReal(0));
}

TEST_F(QpochInfTest, AgreesWithLongerFiniteProduct) {
    const BigReal q("0.5"), a("0.5");
    const auto r = qpoch_inf(a, {q, BigReal("1e-40")});
    ASSERT_GT(r.terms, 0);
    // direct finite product with ten extra factors
    BigReal direct = 1, t = a;
    for (long m = 0; m < r.terms + 10; ++m) {
        direct *= 1 - t;
        t *= q;
    }
    EXPECT_LT(abs(direct - r.value), BigReal("1e-40"));
}

TEST_F(QpochInfTest, EulerPentagonalOracle) {
    // (q;q)_inf = sum_k (-1)^k q^{k(3k-1)/2}, k over Z
    const BigReal q("0.3");
    BigReal series = 0;
    for (long k = -60; k <= 60; ++k) {
        const BigReal term = pow(q, BigReal(k * (3 * k - 1)) / 2);
        series += (k % 2 == 0) ? term : BigReal(-term);
    }
    const auto r = qpoch_inf(q, {q, BigReal("1e-50")});
    EXPECT_LT(abs(series - r.value), BigReal("1e-48"));
}

TEST_F(QpochInfTest, RejectsBadQ) {
    EXPECT_THROW(qpoch_inf(BigReal("0.5"), {BigReal("1.5"), BigReal("1e-40")}), DomainError);
}

TEST_F(QpochInfTest, LogBaseQ) {
    EXPECT_LT(abs(log_base_q(BigReal("0.25"), BigReal("0.5")) - 2), BigReal("1e-55"));
    EXPECT_EQ(log_base_q(BigReal(1), BigReal("0.5")), BigReal(0));
    const BigReal oracle = log(BigReal(1) / 3) / log(BigReal("0.5"));
    EXPECT_LT(abs(log_base_q(BigReal(1) / 3, BigReal("0.5")) - oracle), BigReal("1e-55"));
    EXPECT_LT(abs(log_base_q(BigReal(1) / 3, BigReal("0.5")) - BigReal("1.5849625007211561814537389439478165087598")),
              BigReal("1e-40"));
    EXPECT_THROW(log_base_q(BigReal(-1), BigReal("0.5")), DomainError);
    EXPECT_THROW(log_base_q(BigReal(2), BigReal(1)), DomainError);
}

TEST(ParseRational, AcceptsFractionsIntegersAndDecimals) {
    EXPECT_EQ(parse_rational("3/4"), Q(3, 4));
    EXPECT_EQ(parse_rational("-6/8"), Q(-3, 4));
    EXPECT_EQ(parse_rational("7"), Q(7));
    EXPECT_EQ(parse_rational("0.75"), Q(3, 4));
    EXPECT_EQ(parse_rational("-1.5e-2"), Q(-3, 200));
    EXPECT_EQ(parse_rational("0075"), Q(75));
    EXPECT_EQ(parse_rational("-010/08"), Q(-5, 4));
}

TEST(ParseRational, RejectsGarbage) {
    EXPECT_THROW(parse_rational("abc"), Error);
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational(""), Error);
}

TEST(Ipow, NegativePowersAndZero) {
    EXPECT_EQ(ipow(Q(2, 3), -2), Q(9, 4));
    EXPECT_EQ(ipow(Q(5), 0), Q(1));
    EXPECT_THROW(ipow(Q(0), -1), DivisionByZero);
}

TEST(PerturbQ, LimitOfLowestOrderRatio) {
    const PerturbQ e = PerturbQ::eps();
    EXPECT_EQ(limit_eps0((3 * e * e + e) / (2 * e)), Q(1, 2));
    EXPECT_EQ(limit_eps0(PerturbQ(5)), Q(5));
    EXPECT_THROW(limit_eps0(e / (e * e)), PoleAtZero);
}

TEST(PerturbQ, VanishingLimit) {
    const PerturbQ e = PerturbQ::eps();
    EXPECT_EQ(limit_eps0(e * e / (e + 1)), Q(0));
}

TEST(PerturbQ, NormalizedFormIsCanonical) {
    const PerturbQ e = PerturbQ::eps();
    const PerturbQ x = (e * e - 1) / (e - 1);
    EXPECT_EQ(x, e + 1);
    EXPECT_EQ((2 * e) / (4 * e * e), PerturbQ(Q(1, 2)) / e);
}

TEST(PerturbQ, FieldAxiomsOnRandomValues) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-9, 9);
    auto draw = [&] {
        PerturbQ::Poly num{Q(d(rng)), Q(d(rng)), Q(d(rng))};
        PerturbQ::Poly den{Q(d(rng) == 0 ? 1 : d(rng)), Q(d(rng)), Q(1)};
        return PerturbQ::from_polys(num, den);
    };
    for (int t = 0; t < 30; ++t) {
        const PerturbQ a = draw(), b = draw(), c = draw();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a - b) + b, a);
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
}

TEST(PerturbQ, DivisionByZeroPolynomial) {
    EXPECT_THROW(PerturbQ(3) / PerturbQ(0), DivisionByZero);
}

TEST(PerturbQ, DegreeCap) {
    const int saved = PerturbQ::degree_cap();
    PerturbQ::set_degree_cap(4);
    PerturbQ x = PerturbQ::linear(Q(1), Q(1));
    EXPECT_THROW(
        {
            for (int k = 0; k < 6; ++k) x *= PerturbQ::linear(Q(1), Q(k + 2));
        },
        DegreeCapExceeded);
    PerturbQ::set_degree_cap(saved);
}

}  // namespace
}  // namespace qgarnier
