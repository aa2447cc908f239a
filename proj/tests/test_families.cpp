#include "qform/qform.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qform;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }

// (a;q)_n by the defining product
Rational poch(const Rational& a, const Rational& q, std::size_t n) {
    Rational r = 1, p = 1;
    for (std::size_t k = 0; k < n; ++k, p *= q) r *= 1 - a * p;
    return r;
}

} // namespace

TEST(Catalog, TwentyTwoFamiliesElevenSymmetric) {
    const auto& c = catalog();
    ASSERT_EQ(c.size(), 22u);
    std::set<std::string> names;
    std::size_t sym = 0;
    for (const auto& d : c) {
        names.insert(d.name);
        sym += d.symmetric;
        EXPECT_GE(d.samples.size(), 5u) << d.name;
        EXPECT_FALSE(d.provenance.empty()) << d.name;
    }
    EXPECT_EQ(names.size(), 22u);
    EXPECT_EQ(sym, 11u);
    EXPECT_THROW(family_def("NoSuchFamily"), NotFound);
}

TEST(Catalog, EverySampleInstantiates) {
    for (const auto& d : catalog())
        for (const auto& in : d.samples) EXPECT_NO_THROW(instantiate(d.name, in)) << d.name;
}

TEST(Catalog, RandomInstancesAreValid) {
    std::mt19937_64 rng(99);
    for (const auto& d : catalog())
        for (int i = 0; i < 5; ++i) EXPECT_NO_THROW(instantiate(d.name, random_instance(d.name, rng))) << d.name;
}

TEST(Families, GeneralizedHermiteRecurrenceRows) {
    const FamilySpec s = instantiate("H_mu_q", {{"mu", R(1, 2)}}, R(2));
    const std::vector<Rational> gamma{R(1), R(1), R(8), R(20)};
    for (std::size_t n = 0; n < 4; ++n) {
        EXPECT_EQ(s.recurrence.beta(n), R(0));
        EXPECT_EQ(s.recurrence.gamma(n + 1), gamma[n]);
    }
    EXPECT_EQ(s.q, R(4));
}

TEST(Families, LittleQLaguerreMomentsArePochhammer) {
    const Rational a = R(1, 3), q = R(1, 2);
    const FamilySpec s = instantiate("LittleQLaguerre_12", {{"a", a}}, q);
    for (std::size_t n = 0; n <= 30; ++n) EXPECT_EQ(s.moments.moment(n), poch(a * q, q, n));
}

TEST(Families, SymmetricLittleQLaguerreLiftsItsImage) {
    const Rational a = R(1, 2), Q = R(2, 3);
    const FamilySpec s = instantiate("SV", {{"a", a}}, Q);
    for (std::size_t n = 0; n <= 20; ++n) {
        EXPECT_EQ(s.moments.moment(2 * n), poch(a * Q * Q, Q * Q, n));
        EXPECT_EQ(s.moments.moment(2 * n + 1), R(0));
    }
}

TEST(Families, ConstraintViolationsCarryTheirCase) {
    const Rational Q = R(1, 2);
    try {
        instantiate("SV", {{"a", 1 / (Q * Q)}}, Q);
        FAIL() << "a = q^{-1} accepted";
    } catch (const ConstraintViolation& e) {
        EXPECT_NE(std::string(e.what()).find("case A3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(instantiate("H_mu_q", {{"mu", R(-1, 2)}}, R(2)), ConstraintViolation);
    EXPECT_THROW(instantiate("LittleQLaguerre_12", {{"a", R(0)}}, R(1, 2)), Error);
    EXPECT_THROW(instantiate("SV", {}, R(2)), ParameterOutOfRange);
}

TEST(Families, ShowTextCarriesConstraintAndProposition) {
    const FamilyDef& d = family_def("SV");
    EXPECT_NE(std::find(d.constraint_text.begin(), d.constraint_text.end(), "a != q^{-n-1}, n >= 0"),
              d.constraint_text.end());
    EXPECT_NE(std::find(d.provenance.begin(), d.provenance.end(), "Proposition 4"), d.provenance.end());
    EXPECT_EQ(d.anchor, "case A3");
}

TEST(Families, SymmetricPearsonPairsTransportToTheImages) {
    for (const auto& d : catalog()) {
        if (!d.symmetric) continue;
        const FamilySpec s = instantiate(d.name, d.samples.front());
        const auto [phi_e, phi_o] = even_odd_split(s.pearson.phi_dense());
        const auto [psi_e, psi_o] = even_odd_split(s.pearson.psi);
        ASSERT_TRUE(phi_e.is_zero()) << d.name;
        ASSERT_TRUE(psi_o.is_zero()) << d.name;
        const auto [sp, xsp] = transport_pearson(phi_o, psi_e, QParam(*s.sqrtq));
        const RForm su = sigma_form(s.moments);
        const RForm xsu = sigma_form(mul_poly_form(RPoly::monomial(2), s.moments));
        for (const auto& r : pearson_residual(sp, su, 30)) EXPECT_EQ(r, R(0)) << d.name;
        for (const auto& r : pearson_residual(xsp, xsu, 30)) EXPECT_EQ(r, R(0)) << d.name;
    }
}

TEST(Families, SymmetricFamiliesAreClassOne) {
    for (const auto& d : catalog()) {
        if (!d.symmetric) continue;
        for (std::size_t i = 0; i < 3; ++i) {
            const FamilySpec s = instantiate(d.name, d.samples[i]);
            for (const auto& r : pearson_residual(s.pearson, s.moments, 40)) ASSERT_EQ(r, R(0)) << d.name;
            EXPECT_EQ(certified_class(s.pearson, s.moments), 1) << d.name;
        }
    }
}

TEST(Families, ExcludedSVPointIsTheDiscreteHermiteForm) {
    // The reduced pair is (1, -x/(Q-1)); its moments are (u)_{2n} = (Q;Q^2)_n.
    for (const Rational& Q : {R(2), R(1, 2), R(2, 3), R(3, 2)}) {
        const FamilySpec sv = instantiate("SV", {{"a", 1 / Q}}, Q);
        const PearsonPair red = reduce_class(sv.pearson, sv.moments);
        EXPECT_EQ(red.phi_dense(), RPoly(1));
        EXPECT_EQ(red.psi, RPoly::monomial(1, -1 / (Q - 1)));
        const DerivedSpec hy = dilated_brenke_at_sqrtq(Q);
        for (std::size_t n = 0; n <= 15; ++n) {
            EXPECT_EQ(sv.moments.moment(2 * n), poch(Q, Q * Q, n));
            EXPECT_EQ(hy.moments.moment(2 * n), poch(Q, Q * Q, n));
        }
    }
}

TEST(Families, DilationCovariance) {
    const FamilySpec s = instantiate("B_nu_q", {{"nu", R(1, 2)}}, R(2));
    const Rational a = R(3, 2);
    const DerivedSpec d = dilated_spec(s, a);
    for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(d.moments.moment(n), s.moments.moment(n) / ipow(a, static_cast<long>(n)));
    for (const auto& r : pearson_residual(d.pearson, d.moments, 30)) EXPECT_EQ(r, R(0));
    const auto rm = moments_from_recurrence(d.recurrence, 20);
    for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(rm[n], d.moments.moment(n));
}

TEST(Families, GeneralizedHermitePositivity) {
    for (const Rational& Q : {R(2), R(1, 2)}) {
        EXPECT_TRUE(is_positive_definite(instantiate("H_mu_q", {{"mu", R(-1, 4)}}, Q).recurrence, 40));
        EXPECT_FALSE(is_positive_definite(instantiate("H_mu_q", {{"mu", R(-3, 4)}}, Q).recurrence, 40));
    }
}

TEST(Families, QToOneDeviationIsOrderEpsilon) {
    PrecisionGuard guard(70);
    const BigFloat eps("1e-6");
    for (const auto& f : q1_families()) {
        const Q1Report r = q1_limit_check(f, eps);
        EXPECT_LT(r.max_relative_deviation, 100 * eps) << f;
        EXPECT_GT(r.max_relative_deviation, BigFloat(0)) << f;
    }
}

TEST(Representations, WallCombMatchesTheMoments) {
    PrecisionGuard guard(70);
    const auto policy = TruncationPolicy::for_digits(70);
    const FamilySpec s = instantiate("Wall_13", {{"b", R(1, 3)}}, R(2));
    bool seen = false;
    for (const auto& rep : s.representations) {
        if (rep.kind != Representation::Kind::Discrete || !rep.applies) continue;
        seen = true;
        const RepMoments m = representation_moments(rep, 20, policy);
        for (std::size_t n = 0; n <= 20; ++n) {
            const BigFloat e = to_bf(s.moments.moment(n));
            EXPECT_LT(abs(m.values[n] - e) / std::max(BigFloat(1), BigFloat(abs(e))), BigFloat("1e-45")) << n;
        }
    }
    EXPECT_TRUE(seen);
}

TEST(Representations, RefusedOutsideTheirRegion) {
    const FamilySpec s = instantiate("SV", {{"a", R(1, 2)}}, R(1, 2));
    bool refused = false;
    for (const auto& rep : s.representations)
        if (!rep.applies) {
            EXPECT_THROW(representation_moments(rep, 4, TruncationPolicy::for_digits(50)), ParameterOutOfRange);
            refused = true;
        }
    EXPECT_TRUE(refused);
}

TEST(Representations, PrintedUCombIsDetectedThetaCombIsNot) {
    PrecisionGuard guard(70);
    const auto policy = TruncationPolicy::for_digits(70);
    const FamilySpec s = instantiate("U_11", {}, R(2));
    std::size_t defective = 0, sound = 0;
    for (const auto& rep : s.representations) {
        if (rep.kind != Representation::Kind::Discrete || !rep.applies) continue;
        const RepMoments m = representation_moments(rep, 10, policy);
        BigFloat worst = 0;
        for (std::size_t n = 0; n <= 10; ++n) {
            const BigFloat e = to_bf(s.moments.moment(n));
            worst = std::max(worst, BigFloat(abs(m.values[n] - e) / std::max(BigFloat(1), BigFloat(abs(e)))));
        }
        if (rep.known_defect.empty()) {
            ++sound;
            EXPECT_LT(worst, BigFloat("1e-40")) << rep.region;
        } else {
            ++defective;
            EXPECT_GT(worst, BigFloat("1e-3")) << rep.region;
        }
    }
    EXPECT_EQ(defective, 1u);
    EXPECT_EQ(sound, 1u);
}
