#include "qform/qform.hpp"

#include <gtest/gtest.h>

using namespace qform;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }

// Hermite with weight exp(-x^2): beta_n = 0, gamma_n = n/2.
Recurrence<Rational> hermite() {
    return {[](std::size_t) { return Rational(0); }, [](std::size_t n) { return R(static_cast<long>(n), 2); }, "hermite"};
}

// Laguerre with weight x^al exp(-x): beta_n = 2n + al + 1, gamma_n = n(n + al).
Recurrence<Rational> laguerre(Rational al) {
    return {[al](std::size_t n) { return Rational(2 * static_cast<long>(n) + al + 1); },
            [al](std::size_t n) { return Rational(static_cast<long>(n) * (static_cast<long>(n) + al)); }, "laguerre"};
}

Rational double_factorial_over_power(std::size_t n) {
    // (2n-1)!!/2^n
    Rational r = 1;
    for (std::size_t k = 1; k <= n; ++k) r *= R(2 * static_cast<long>(k) - 1, 2);
    return r;
}

Rational rising(Rational a, std::size_t n) {
    Rational r = 1;
    for (std::size_t k = 0; k < n; ++k) r *= a + static_cast<long>(k);
    return r;
}

// (aq;q)_n by the defining product
Rational little_laguerre_moment(const Rational& a, const Rational& q, std::size_t n) {
    Rational r = 1, p = q;
    for (std::size_t k = 0; k < n; ++k, p *= q) r *= 1 - a * p;
    return r;
}

} // namespace

TEST(Mops, HermitePolynomialsAndMoments) {
    const auto t = generate_mops(hermite(), 4);
    EXPECT_EQ(t.polynomials[2], parse_poly("x^2 - 1/2"));
    EXPECT_EQ(t.polynomials[3], parse_poly("x^3 - (3/2)*x"));
    EXPECT_EQ(t.polynomials[4], parse_poly("x^4 - 3*x^2 + 3/4"));
    EXPECT_EQ(t.squared_norms[3], R(3, 4));
    const auto m = moments_from_recurrence(hermite(), 12);
    for (std::size_t n = 0; n <= 6; ++n) {
        EXPECT_EQ(m[2 * n], double_factorial_over_power(n));
        if (2 * n + 1 <= 12) {
            EXPECT_EQ(m[2 * n + 1], R(0));
        }
    }
}

TEST(Mops, LaguerreMomentsArePochhammer) {
    const Rational al = R(1, 3);
    const auto m = moments_from_recurrence(laguerre(al), 20);
    for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(m[n], rising(al + 1, n));
}

TEST(Mops, StieltjesRecoversRecurrence) {
    const Rational al = R(-1, 2);
    const RForm u = RForm::from_function([al](std::size_t n) { return rising(al + 1, n); }, "laguerre");
    const auto rec = rec_from_form(u, 10);
    for (std::size_t n = 0; n < 10; ++n) {
        EXPECT_EQ(rec.beta(n), laguerre(al).beta(n));
        EXPECT_EQ(rec.gamma(n + 1), laguerre(al).gamma(n + 1));
    }
}

TEST(Mops, OrthogonalityAndItsViolations) {
    const RForm u = RForm::from_function([](std::size_t n) { return rising(R(1), n); }, "laguerre0");
    const auto t = generate_mops(laguerre(0), 10);
    EXPECT_TRUE(check_orthogonality(u, t, 10).empty());
    const RForm bad = RForm::from_function([](std::size_t n) { return n == 5 ? R(119) : rising(R(1), n); }, "bad");
    EXPECT_FALSE(check_orthogonality(bad, t, 10).empty());
}

TEST(Mops, HankelDeterminantsAreGammaProducts) {
    // det H_n = prod_{k=1}^{n-1} (gamma_1 ... gamma_k)
    const Rational al = R(2, 3);
    const RForm u = RForm::from_function([al](std::size_t n) { return rising(al + 1, n); }, "laguerre");
    Rational expected = 1, partial = 1;
    for (std::size_t n = 1; n <= 7; ++n) {
        EXPECT_EQ(hankel_determinant(u, n), expected);
        partial *= laguerre(al).gamma(n);
        expected *= partial;
    }
}

TEST(Mops, PositiveDefiniteness) {
    EXPECT_TRUE(is_positive_definite(laguerre(R(1, 2)), 30));
    EXPECT_FALSE(is_positive_definite(laguerre(R(-5, 2)), 30));
}

TEST(Pearson, LittleQLaguerreFromItsMomentRecursion) {
    // (u)_{n+1} = (1 - a q^{n+1}) (u)_n with Phi = x forces
    // psi_1 = -1/(a q (q-1)), psi_0 = -1/(q-1) - psi_1.
    for (const auto& [a, q] : std::vector<std::pair<Rational, Rational>>{{R(1, 2), R(1, 3)}, {R(-2), R(3)}, {R(3, 5), R(2, 7)}}) {
        const Rational p1 = -1 / (a * q * (q - 1));
        const Rational p0 = -1 / (q - 1) - p1;
        const PearsonPair pair = PearsonPair::make(RPoly::x(), RPoly(std::vector<Rational>{p0, p1}), q);
        const RForm u = moments_from_pearson(pair, 40);
        for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(u.moment(n), little_laguerre_moment(a, q, n));
        for (const auto& r : pearson_residual(pair, u, 39)) EXPECT_EQ(r, R(0));
        EXPECT_EQ(certified_class(pair, u), 0);
    }
}

TEST(Pearson, ResidualSeesAPerturbedMoment) {
    const Rational a = R(1, 2), q = R(1, 3);
    const Rational p1 = -1 / (a * q * (q - 1));
    const PearsonPair pair = PearsonPair::make(RPoly::x(), RPoly(std::vector<Rational>{-1 / (q - 1) - p1, p1}), q);
    const RForm bad = RForm::from_function([&](std::size_t n) {
        return n == 3 ? R(0) : little_laguerre_moment(a, q, n);
    }, "bad");
    const auto res = pearson_residual(pair, bad, 6);
    EXPECT_TRUE(std::any_of(res.begin(), res.end(), [](const Rational& r) { return r != 0; }));
}

TEST(Pearson, EnlargedPairReducesBackToClassZero) {
    // From the product rule, u also satisfies ((x-c) Phi, (x/q - c) Psi - Phi/q).
    const Rational a = R(1, 2), q = R(1, 3), c = R(5, 2);
    const Rational p1 = -1 / (a * q * (q - 1));
    const RPoly phi = RPoly::x(), psi(std::vector<Rational>{-1 / (q - 1) - p1, p1});
    const PearsonPair small = PearsonPair::make(phi, psi, q);
    const RForm u = moments_from_pearson(small, 60);
    const RPoly big_phi = RPoly::linear(c) * phi;
    const RPoly big_psi = RPoly(std::vector<Rational>{-c, 1 / q}) * psi - phi * RPoly(1 / q);
    const PearsonPair big = PearsonPair::make(big_phi, big_psi, q);
    for (const auto& r : pearson_residual(big, u, 50)) EXPECT_EQ(r, R(0));
    EXPECT_EQ(big.class_estimate(), 1);
    bool reducible_at_c = false;
    for (const auto& e : class_criterion(big, u))
        if (e.root.exact && *e.root.exact == c) reducible_at_c = e.reducible;
    EXPECT_TRUE(reducible_at_c);
    const PearsonPair red = reduce_class(big, u);
    EXPECT_EQ(red.class_estimate(), 0);
    EXPECT_EQ(red.phi_dense(), small.phi_dense());
    EXPECT_EQ(red.psi, small.psi);
    EXPECT_THROW(reduce_class(small, u), NotReducible);
}

TEST(Pearson, RejectsDegeneratePairs) {
    EXPECT_THROW(PearsonPair::make(RPoly(), RPoly::x(), R(2)), ShapeViolation);
    EXPECT_THROW(PearsonPair::make(RPoly::x(), RPoly(3), R(2)), ShapeViolation);
    EXPECT_THROW(PearsonPair::make(RPoly::x(), RPoly::x(), R(1)), InvalidQ);
}
