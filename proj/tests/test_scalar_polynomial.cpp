#include "qform/qform.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qform;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }

RPoly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), num(-9, 9), den(1, 5);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) x = R(num(rng), den(rng));
    return RPoly(c);
}

} // namespace

TEST(ParseRational, FractionsDecimalsExponents) {
    EXPECT_EQ(parse_rational("3/6"), R(1, 2));
    EXPECT_EQ(parse_rational(" -0.25 "), R(-1, 4));
    EXPECT_EQ(parse_rational("1e3"), R(1000));
    EXPECT_EQ(parse_rational("2.5e-1"), R(1, 4));
    EXPECT_EQ(parse_rational("-7/-14"), R(1, 2));
    EXPECT_EQ(parse_rational("010"), R(10));
    EXPECT_EQ(parse_rational("0.0625"), R(1, 16));
}

TEST(ParseRational, RejectsMalformedInput) {
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("1.2.3"), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ZeroDenominator);
}

TEST(Scalar, IntegerPowersAndBrackets) {
    EXPECT_EQ(ipow(R(2, 3), -2), R(9, 4));
    EXPECT_EQ(ipow(R(-1, 2), 3), R(-1, 8));
    EXPECT_EQ(qbracket(3, R(2)), R(7));
    EXPECT_EQ(qbracket(0, R(5)), R(0));
    // [-1]_q = (q^{-1} - 1)/(q - 1) = -1/q
    EXPECT_EQ(qbracket(-1, R(3)), R(-1, 3));
    EXPECT_THROW(ipow(R(0), -1), ZeroDenominator);
}

TEST(Scalar, ExactSquareRoots) {
    EXPECT_EQ(exact_sqrt(R(9, 4)), R(3, 2));
    EXPECT_FALSE(exact_sqrt(R(2)).has_value());
    EXPECT_FALSE(exact_sqrt(R(-4)).has_value());
}

TEST(Scalar, QParamRejectsZeroAndUnitModulus) {
    EXPECT_THROW(QParam(R(0)), InvalidQ);
    EXPECT_THROW(QParam(R(1)), InvalidQ);
    EXPECT_THROW(QParam(R(-1)), InvalidQ);
    EXPECT_NO_THROW(QParam(R(1, 2)));
}

TEST(Scalar, PrecisionGuardRestores) {
    const unsigned before = BigFloat::default_precision();
    {
        PrecisionGuard g(123);
        EXPECT_EQ(BigFloat::default_precision(), 123u);
    }
    EXPECT_EQ(BigFloat::default_precision(), before);
}

TEST(Polynomial, ParsesTextForm) {
    const RPoly f = parse_poly("x^3 - (1/2)*x + 3");
    EXPECT_EQ(f, RPoly(std::vector<Rational>{R(3), R(-1, 2), R(0), R(1)}));
    EXPECT_EQ(parse_poly("0"), RPoly());
}

TEST(Polynomial, TextRoundTrip) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const RPoly f = random_poly(rng, 6);
        EXPECT_EQ(parse_poly(to_string(f)), f) << to_string(f);
    }
}

TEST(Polynomial, HahnOperatorMatchesDifferenceQuotient) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        const RPoly f = random_poly(rng, 7);
        const Rational q = R(static_cast<long>(rng() % 5) + 2, static_cast<long>(rng() % 3) + 1);
        const Rational x0 = R(static_cast<long>(rng() % 11) - 5, 3);
        if (x0 == 0 || q == 1) continue;
        EXPECT_EQ(hq_poly(f, q)(x0), (f(q * x0) - f(x0)) / ((q - 1) * x0));
    }
}

TEST(Polynomial, HahnOperatorOnMonomials) {
    const Rational q = R(3, 2);
    for (std::size_t n = 1; n < 8; ++n)
        EXPECT_EQ(hq_poly(RPoly::monomial(n), q), RPoly::monomial(n - 1, qbracket(static_cast<long>(n), q)));
}

TEST(Polynomial, DilationTranslationThetaSigmaPointwise) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const RPoly f = random_poly(rng, 6);
        const Rational a = R(static_cast<long>(rng() % 7) - 3, 2), c = R(static_cast<long>(rng() % 9) - 4, 3);
        const Rational x0 = R(static_cast<long>(rng() % 13) - 6, 5);
        if (a != 0) {
            EXPECT_EQ(dilate(f, a)(x0), f(a * x0));
        }
        EXPECT_EQ(translate(f, c)(x0), f(x0 + c));
        if (x0 != c) {
            EXPECT_EQ(theta(f, c)(x0), (f(x0) - f(c)) / (x0 - c));
        }
        EXPECT_EQ(sigma_poly(f)(x0), f(x0 * x0));
        const auto [fe, fo] = even_odd_split(f);
        EXPECT_EQ(sigma_poly(fe) + RPoly::x() * sigma_poly(fo), f);
    }
    EXPECT_THROW(dilate(RPoly::x(), R(0)), ZeroDilation);
}

TEST(Polynomial, FactoredRoots) {
    const RPoly f = RPoly::x() * (RPoly::monomial(2) - RPoly(1));
    const FactoredPoly fp = FactoredPoly::from_dense(f);
    EXPECT_EQ(fp.dense(), f);
    std::vector<Rational> roots;
    for (const auto& r : fp.roots())
        if (r.exact) roots.push_back(*r.exact);
    std::sort(roots.begin(), roots.end());
    EXPECT_EQ(roots, (std::vector<Rational>{R(-1), R(0), R(1)}));
}
