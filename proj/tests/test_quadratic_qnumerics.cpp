#include "qform/qform.hpp"

#include <gtest/gtest.h>

using namespace qform;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }

} // namespace

TEST(Quadratic, HermiteSplitsIntoLaguerreHalfIntegers) {
    // sigma of the Gaussian is Laguerre(-1/2), x sigma of it is Laguerre(1/2) up to the factor 1/2
    const PRPair pr = decompose([](std::size_t n) { return R(static_cast<long>(n), 2); }, 12);
    for (std::size_t n = 0; n <= 12; ++n) {
        const long k = static_cast<long>(n);
        EXPECT_EQ(pr.beta_p[n], R(4 * k + 1, 2));
        EXPECT_EQ(pr.gamma_p[n], R(k + 1) * R(2 * k + 1, 2));
        EXPECT_EQ(pr.beta_r[n], R(4 * k + 3, 2));
        EXPECT_EQ(pr.gamma_r[n], R(k + 1) * R(2 * k + 3, 2));
    }
}

TEST(Quadratic, RecomposeInvertsDecompose) {
    auto g = [](std::size_t n) { return R(static_cast<long>(n * n + 1), static_cast<long>(n + 2)); };
    const PRPair pr = decompose(g, 10);
    const auto back = recompose(pr, 10);
    ASSERT_GE(back.size(), 21u);
    for (std::size_t k = 1; k <= back.size(); ++k) EXPECT_EQ(back[k - 1], g(k)) << k;
}

TEST(Quadratic, DecomposeRejectsZeroGamma) {
    EXPECT_THROW(decompose([](std::size_t n) { return n == 4 ? R(0) : R(1); }, 5), ZeroGamma);
}

TEST(Quadratic, LiftedMomentsAndCombs) {
    const RForm su = RForm::from_function([](std::size_t n) { return R(static_cast<long>(n * 3 + 1)); }, "s");
    const RForm u = sym_moments_from_sigma(su);
    for (std::size_t n = 0; n < 10; ++n) {
        EXPECT_EQ(u.moment(2 * n), su.moment(n));
        EXPECT_EQ(u.moment(2 * n + 1), R(0));
    }
    PrecisionGuard guard(60);
    const auto policy = TruncationPolicy::for_digits(60);
    const DiracComb c = finite_comb({{ComplexBF(BigFloat(1)), ComplexBF(BigFloat(4))}});
    const CombSum lifted = comb_moments(sym_comb_from_sigma(c), 8, policy);
    for (std::size_t n = 0; n <= 8; ++n) {
        const BigFloat expected = n % 2 ? BigFloat(0) : pow(BigFloat(2), n);
        EXPECT_LT(abs(lifted.moments[n].re - expected), BigFloat("1e-55"));
    }
}

TEST(QNumerics, FinitePochhammer) {
    EXPECT_EQ(qpoch(R(1, 2), R(1, 2), 3), R(21, 64));
    EXPECT_EQ(qpoch(R(5), R(3), 0), R(1));
    EXPECT_EQ(qpoch(R(1, 9), R(3), 3), R(0));
}

TEST(QNumerics, EulerPentagonalNumbers) {
    // (q;q)_inf = sum_k (-1)^k q^{k(3k-1)/2}, k over all integers
    PrecisionGuard guard(70);
    const auto policy = TruncationPolicy::for_digits(70);
    const BigFloat q = BigFloat(2) / 5;
    BigFloat series = 1;
    for (int k = 1; k < 60; ++k) {
        const BigFloat sign = k % 2 ? -1 : 1;
        series += sign * (pow(q, k * (3 * k - 1) / 2) + pow(q, k * (3 * k + 1) / 2));
    }
    EXPECT_LT(abs(qpoch_inf(q, q, policy) - series), BigFloat("1e-58"));
}

TEST(QNumerics, EulerExponentialIdentity) {
    // sum z^n/(q;q)_n = 1/(z;q)_inf, the a = 0 case of the q-binomial theorem
    PrecisionGuard guard(70);
    const auto policy = TruncationPolicy::for_digits(70);
    const BigFloat q = BigFloat(1) / 3, z = BigFloat(-1) / 2;
    const BigFloat lhs = qbinomial_sum(BigFloat(0), z, q, policy);
    EXPECT_LT(abs(lhs - 1 / qpoch_inf(z, q, policy)), BigFloat("1e-58"));
    EXPECT_LT(abs(lhs - qbinomial_product(BigFloat(0), z, q, policy)), BigFloat("1e-58"));
}

TEST(QNumerics, TerminatingBinomialTheorem) {
    // a = q^{-3}: the sum is a polynomial in z, equal to (q^{-3} z; q)_3
    PrecisionGuard guard(60);
    const auto policy = TruncationPolicy::for_digits(60);
    const BigFloat q = BigFloat(1) / 2, z = BigFloat(1) / 5;
    const BigFloat a = pow(q, -3);
    BigFloat expected = 1;
    for (int k = 0; k < 3; ++k) expected *= 1 - a * z * pow(q, k);
    EXPECT_LT(abs(qbinomial_sum(a, z, q, policy) - expected), BigFloat("1e-50"));
}

TEST(QNumerics, MellinClosedFormAgainstQuadrature) {
    PrecisionGuard guard(60);
    const auto policy = TruncationPolicy::for_digits(60);
    const BigFloat closed = q_mellin_integral(R(1), R(1, 4), R(1, 2), policy);
    const auto quad = q_mellin_quadrature(R(1), R(1, 4), R(1, 2), policy);
    EXPECT_LT(abs(closed - quad.values[0]), BigFloat("1e-25"));
}

TEST(QNumerics, TruncationThreshold) {
    PrecisionGuard guard(60);
    EXPECT_LT(abs(TruncationPolicy::for_digits(50).epsilon_rel * pow(BigFloat(10), 40) - 1), BigFloat("1e-50"));
}
