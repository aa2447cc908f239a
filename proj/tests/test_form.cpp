#include "qform/qform.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qform;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }

struct Gen {
    std::mt19937_64 rng;
    Rational small() {
        std::uniform_int_distribution<int> a(-9, 9), b(1, 6);
        return R(a(rng), b(rng));
    }
    RPoly poly(int max_deg) {
        std::uniform_int_distribution<int> d(0, max_deg);
        std::vector<Rational> c(d(rng) + 1);
        for (auto& x : c) x = small();
        return RPoly(c);
    }
    RForm form(std::size_t count) {
        std::vector<Rational> m(count);
        for (auto& x : m) x = small();
        return RForm::from_moments(m, "u");
    }
};

} // namespace

TEST(Form, DiracPairsByEvaluation) {
    Gen g{std::mt19937_64(1)};
    for (int i = 0; i < 50; ++i) {
        const Rational c = g.small();
        const RPoly f = g.poly(6);
        EXPECT_EQ(apply(dirac(c), f), f(c));
    }
}

TEST(Form, HahnOperatorIsMinusTransposeOnPolynomials) {
    Gen g{std::mt19937_64(2)};
    for (int i = 0; i < 50; ++i) {
        const RForm u = g.form(20);
        const RPoly f = g.poly(8);
        const Rational q = R(3, 2);
        EXPECT_EQ(apply(hq_form(u, q), f), -apply(u, hq_poly(f, q)));
    }
}

TEST(Form, HahnOperatorOnDirac) {
    // <H_q delta_c, f> = -(f(qc) - f(c))/((q - 1) c)
    Gen g{std::mt19937_64(3)};
    const Rational q = R(2, 5), c = R(7, 3);
    for (int i = 0; i < 20; ++i) {
        const RPoly f = g.poly(6);
        EXPECT_EQ(apply(hq_form(dirac(c), q), f), -(f(q * c) - f(c)) / ((q - 1) * c));
    }
}

TEST(Form, LeftMultiplicationDilationTranslationSigma) {
    Gen g{std::mt19937_64(4)};
    for (int i = 0; i < 50; ++i) {
        const RForm u = g.form(24);
        const RPoly f = g.poly(5), h = g.poly(4);
        EXPECT_EQ(apply(mul_poly_form(h, u), f), apply(u, h * f));
        const Rational a = g.small(), b = g.small(), c = g.small();
        if (a != 0) {
            EXPECT_EQ(apply(dilate_form(dirac(c), a), f), f(a * c));
        }
        EXPECT_EQ(apply(translate_form(dirac(c), b), f), f(c + b));
        EXPECT_EQ(apply(sigma_form(dirac(c)), f), f(c * c));
    }
}

TEST(Form, DivisionByLinearFactorPairsWithTheta) {
    // <(x - c)^{-1} u, f> = <u, theta_c f>
    Gen g{std::mt19937_64(5)};
    for (int i = 0; i < 50; ++i) {
        const RForm u = g.form(20);
        const RPoly f = g.poly(8);
        const Rational c = g.small();
        EXPECT_EQ(apply(div_xc_form(u, c), f), apply(u, theta(f, c)));
    }
}

TEST(Form, FiniteCombMoments) {
    const RForm u = comb_form<Rational>({{R(1, 3), R(2)}, {R(2, 3), R(-1)}});
    for (std::size_t n = 0; n < 10; ++n) EXPECT_EQ(u.moment(n), R(1, 3) * ipow(R(2), n) + R(2, 3) * ipow(R(-1), n));
}

TEST(Form, FiniteMomentListRefusesHigherOrders) {
    const RForm u = RForm::from_moments({R(1), R(2), R(3)}, "short");
    EXPECT_EQ(u.moment(2), R(3));
    EXPECT_THROW(u.moment(3), OrderLimit);
}

TEST(Form, SymmetricFormsHaveZeroOddMoments) {
    const RForm u = RForm::from_function([](std::size_t n) { return Rational(static_cast<long>(n + 1)); }, "s", true);
    EXPECT_EQ(u.moment(3), R(0));
    EXPECT_EQ(u.moment(4), R(5));
}

TEST(Series, FiniteCombSumsExactly) {
    PrecisionGuard guard(60);
    const auto policy = TruncationPolicy::for_digits(60);
    const DiracComb c = finite_comb({{ComplexBF(BigFloat(1) / 4), ComplexBF(BigFloat(3))},
                                     {ComplexBF(BigFloat(3) / 4), ComplexBF(BigFloat(-1))}});
    const CombSum s = comb_moments(c, 6, policy);
    for (std::size_t n = 0; n <= 6; ++n) {
        const BigFloat expected = pow(BigFloat(3), n) / 4 + 3 * pow(BigFloat(-1), n) / 4;
        EXPECT_LT(abs(s.moments[n].re - expected), BigFloat("1e-55"));
        EXPECT_EQ(s.moments[n].im, BigFloat(0));
    }
}

TEST(Series, GeometricCombConverges) {
    // masses (1-p) p^k at the point p^k: moments (1-p)/(1-p^{n+1})
    PrecisionGuard guard(70);
    const auto policy = TruncationPolicy::for_digits(70);
    const BigFloat p = BigFloat(1) / 3;
    DiracComb c;
    c.group = [p](std::size_t k) {
        const BigFloat pk = pow(p, k);
        return std::vector<NumAtom>{{ComplexBF((1 - p) * pk), ComplexBF(pk)}};
    };
    c.label = "geometric";
    const CombSum s = comb_moments(c, 8, policy);
    for (std::size_t n = 0; n <= 8; ++n)
        EXPECT_LT(abs(s.moments[n].re - (1 - p) / (1 - pow(p, n + 1))), BigFloat("1e-58")) << n;
}
