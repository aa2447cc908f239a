#pragma once

/**
 * @file families.hpp
 * @brief Catalog of H_q-classical families and of the symmetric H_sqrt(q)-semiclassical
 *        class-one families: recurrences, moments, Pearson pairs, constraints, representations.
 *
 * Classical families are parameterized by q, except GenStieltjesWigert_18 which, like every
 * symmetric family, takes Q = sqrt(q) as its primitive so that q^{1/2} powers stay rational.
 */

#include "mops.hpp"
#include "pearson.hpp"
#include "qnumerics.hpp"
#include "quadratic.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qform {

using Params = std::map<std::string, Rational>;

// ---------------------------------------------------------------------------
// Formulas shared by the exact layer and the q -> 1 check

template <class T>
T tpow(const T& q, long k);
template <>
inline Rational tpow(const Rational& q, long k) { return ipow(q, k); }
template <>
inline BigFloat tpow(const BigFloat& q, long k) { return pow(q, BigFloat(k)); }

/// q-powers and brackets; in limit mode pw(k) = 1 and br(n) = n.
template <class T>
struct QCtx {
    T q;
    bool limit = false;
    T pw(long k) const { return limit ? T(1) : tpow(q, k); }
    T br(long n) const { return limit ? T(n) : T((tpow(q, n) - T(1)) / (q - T(1))); }
};

namespace formulas {

template <class T>
T sq(const T& x) { return x * x; }

// q-Laguerre L(alpha, q)
template <class T>
T laguerre_beta(const QCtx<T>& c, long n, const T& al) {
    return c.pw(n) * ((T(1) + c.pw(-1)) * c.br(n) + T(1) + al);
}
template <class T>
T laguerre_gamma(const QCtx<T>& c, long n, const T& al) {
    const long m = n - 1;
    return c.pw(2 * m) * c.br(m + 1) * (c.br(m) + T(1) + al);
}

// q-Bessel B(alpha, q); n = 0 rows use the cancelled forms
template <class T>
T bessel_beta(const QCtx<T>& c, long n, const T& al) {
    if (n == 0) return T(-1) / al;
    const T a2 = T(2) * al;
    return T(-2) * c.pw(n) * (a2 + (T(1) + c.pw(-1)) * c.br(n - 1) - c.pw(-1) * c.br(2 * n)) /
           ((a2 + c.br(2 * n - 2)) * (a2 + c.br(2 * n)));
}
template <class T>
T bessel_gamma(const QCtx<T>& c, long n, const T& al) {
    const long m = n - 1;
    const T a2 = T(2) * al;
    if (m == 0) return T(-1) / (al * al * (a2 + T(1)));
    return T(-4) * c.pw(3 * m) * c.br(m + 1) * (a2 + c.br(m - 1)) /
           ((a2 + c.br(2 * m - 1)) * sq(T(a2 + c.br(2 * m))) * (a2 + c.br(2 * m + 1)));
}

// q-Jacobi J(alpha, beta, q), s = alpha + beta + 2
template <class T>
T jacobi_beta(const QCtx<T>& c, long n, const T& al, const T& be) {
    const T s = al + be + T(2);
    if (n == 0) return (be + T(1)) / s;
    return c.pw(n - 1) *
           ((T(1) + c.pw(1)) * (s + c.br(n - 1)) * (be + T(1) + c.br(n)) - (be + T(1)) * (s + c.br(2 * n))) /
           ((s + c.br(2 * n - 2)) * (s + c.br(2 * n)));
}
template <class T>
T jacobi_gamma(const QCtx<T>& c, long n, const T& al, const T& be) {
    const T s = al + be + T(2);
    const long m = n - 1;
    if (m == 0) return (be + T(1)) * (al + T(1)) / (s * s * (s + T(1)));
    return c.pw(2 * m) * c.br(m + 1) * (s + c.br(m - 1)) * (c.br(m) + be + T(1)) *
           (s - (be + T(1)) * c.pw(m) + c.br(m)) /
           ((s + c.br(2 * m - 1)) * sq(T(s + c.br(2 * m))) * (s + c.br(2 * m + 1)));
}

// Generalized q-Hermite H(mu, q), alpha = mu - 1/2
template <class T>
T hermite_sym_gamma(const QCtx<T>& c, long n, const T& mu) {
    const T al = mu - T(1) / T(2);
    if (n % 2 == 1) {
        const long k = (n - 1) / 2;
        return c.pw(k) * (c.br(k) + T(1) + al);
    }
    const long k = (n - 2) / 2;
    return c.pw(k) * c.br(k + 1);
}

// Symmetric q-Bessel B[nu, q], alpha = (nu + 1)/2
template <class T>
T bessel_sym_gamma(const QCtx<T>& c, long n, const T& nu) {
    const T al = (nu + T(1)) / T(2);
    const T a2 = T(2) * al;
    if (n == 1) return T(-1) / al;
    if (n % 2 == 1) {
        const long k = (n - 3) / 2;
        return T(-2) * c.pw(k + 1) * (a2 + c.br(k)) / ((a2 + c.br(2 * k + 1)) * (a2 + c.br(2 * k + 2)));
    }
    const long k = (n - 2) / 2;
    return T(2) * c.pw(2 * k) * c.br(k + 1) / ((a2 + c.br(2 * k)) * (a2 + c.br(2 * k + 1)));
}

// Symmetric q-Jacobi G(alpha, beta, q)
template <class T>
T jacobi_sym_gamma(const QCtx<T>& c, long n, const T& al, const T& be) {
    const T s = al + be + T(2);
    if (n == 1) return (be + T(1)) / s;
    if (n % 2 == 1) {
        const long k = (n - 1) / 2;
        return c.pw(k) * (s + c.br(k - 1)) * (be + T(1) + c.br(k)) / ((s + c.br(2 * k - 1)) * (s + c.br(2 * k)));
    }
    const long k = (n - 2) / 2;
    return c.pw(k) * c.br(k + 1) * (s - (be + T(1)) * c.pw(k) + c.br(k)) /
           ((s + c.br(2 * k)) * (s + c.br(2 * k + 1)));
}

} // namespace formulas

// ---------------------------------------------------------------------------
// Catalog records

/// One catalogued representation: a comb, a weight, or a mix of both.
struct Representation {
    enum class Kind { Discrete, Integral };
    struct Parts {
        std::vector<DiracComb> combs;
        std::vector<WeightDescriptor> weights;
    };

    Kind kind = Kind::Discrete;
    std::string region;          // validity region as printed
    bool applies = false;        // region holds at this instance
    std::string known_defect;    // nonempty when the printed formula is known not to reproduce the moments
    std::function<Parts()> build;   // evaluated lazily at the caller's precision
};

/// x sigma u = prefactor * h_dilation(image).
struct XSigmaImage {
    std::string family;
    Params params;
    Rational prefactor;
    Rational dilation;
};

struct SigmaImage {
    std::string family;   // sigma u
    Params params;
    XSigmaImage x_sigma;
};

struct FamilySpec {
    std::string name;
    std::string anchor;
    std::string title;
    bool symmetric = false;
    Params params;
    Rational q;
    std::optional<Rational> sqrtq;
    std::vector<std::string> constraints;
    std::string class_one_condition;   // symmetric families only
    Recurrence<Rational> recurrence;
    RForm moments;
    PearsonPair pearson;
    std::vector<Representation> representations;
    std::optional<SigmaImage> sigma;
    std::string positivity_text;
    bool positivity_iff = false;
    std::function<bool()> positivity_region;   // empty when no region is stated

    /// gamma_1..gamma_n
    std::vector<Rational> gammas(std::size_t n) const {
        std::vector<Rational> out;
        for (std::size_t k = 1; k <= n; ++k) out.push_back(recurrence.gamma(k));
        return out;
    }
};

struct ParamInfo {
    std::string name;
    bool integer = false;
};

/// A concrete catalog point: parameters plus q (or Q for sqrt-primitive families).
struct Instance {
    Params params;
    Rational primitive;
};

struct FamilyDef {
    std::string name;
    std::string anchor;
    std::string title;
    bool symmetric = false;
    bool sqrtq_primitive = false;
    std::vector<ParamInfo> params;
    std::vector<std::string> constraint_text;
    std::string class_one_text;
    std::vector<std::string> provenance;   // anchors: case, table, proposition
    std::function<FamilySpec(const Params&, const Rational& primitive)> build;
    std::vector<Instance> samples;   // curated valid points; the first five feed the exact suites
    /// Parameter point (for a given Q) where the pair reduces at 0, if any.
    std::function<std::optional<Params>(const Rational& Q)> excluded_point;
};

// ---------------------------------------------------------------------------
// Helpers

namespace detail {

inline Rational param(const Params& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw ParameterOutOfRange("missing parameter " + name);
    return it->second;
}

inline long int_param(const Params& p, const std::string& name) {
    const Rational v = param(p, name);
    if (denominator(v) != 1) throw ConstraintViolation(name + " must be an integer in exact mode");
    return numerator(v).convert_to<long>();
}

/// Smallest k in [lo, hi] with v = base^k.
inline std::optional<long> lattice_index(const Rational& v, const Rational& base, long lo, long hi) {
    Rational p = ipow(base, lo);
    for (long k = lo; k <= hi; ++k) {
        if (p == v) return k;
        p *= base;
    }
    return std::nullopt;
}

inline void require(bool ok, const std::string& what, const std::string& anchor) {
    if (!ok) throw ConstraintViolation(what + " (" + anchor + ")");
}

/// v != base^{sign*n + shift} for 0 <= n <= N_max.
inline void off_lattice(const Rational& v, const Rational& base, long sign, long shift, const std::string& what,
                        const std::string& anchor) {
    const long n_max = static_cast<long>(kNMax);
    const long a = shift, b = sign * n_max + shift;
    if (auto k = lattice_index(v, base, std::min(a, b), std::max(a, b)))
        throw ConstraintViolation(what + " with n = " + std::to_string((*k - shift) * sign) + " (" + anchor + ")");
}

/// (u)_n = prod_{k<n} factor(k).
inline RForm product_form(std::function<Rational(std::size_t)> factor, std::string label) {
    return RForm([factor = std::move(factor)](std::size_t n, const RForm& self) {
        if (n == 0) return Rational(1);
        return Rational(self.moment(n - 1) * factor(n - 1));
    }, std::move(label));
}

inline Recurrence<Rational> classical_rec(std::function<Rational(long)> beta, std::function<Rational(long)> gamma_next,
                                          std::string source) {
    Recurrence<Rational> r;
    r.beta = [beta](std::size_t n) { return beta(static_cast<long>(n)); };
    // gamma_n = gamma-hat_{(n-1)+1}
    r.gamma = [gamma_next](std::size_t n) {
        if (n == 0) throw OrderLimit(0, "gamma is indexed from 1");
        return gamma_next(static_cast<long>(n) - 1);
    };
    r.source = std::move(source);
    return r;
}

inline Recurrence<Rational> symmetric_rec(std::function<Rational(long)> gamma, std::string source) {
    Recurrence<Rational> r;
    r.beta = [](std::size_t) { return Rational(0); };
    r.gamma = [gamma](std::size_t n) {
        if (n == 0) throw OrderLimit(0, "gamma is indexed from 1");
        return gamma(static_cast<long>(n));
    };
    r.source = std::move(source);
    return r;
}

inline RPoly lin(const Rational& c1, const Rational& c0) { return RPoly(std::vector<Rational>{c0, c1}); }

// Numeric building blocks. All BigFloat values are created when the lambdas run.

using AtomFn = std::function<std::pair<BigFloat, BigFloat>(std::size_t)>;

inline DiracComb real_comb(std::string label, AtomFn atom) {
    DiracComb c;
    c.label = std::move(label);
    c.group = [atom = std::move(atom)](std::size_t k) {
        auto [m, s] = atom(k);
        return std::vector<NumAtom>{{ComplexBF(m), ComplexBF(s)}};
    };
    return c;
}

inline BigFloat bf(const Rational& r) { return to_bf(r); }
inline BigFloat bpow(const BigFloat& x, double k) { return pow(x, BigFloat(k)); }
inline BigFloat bpow(const BigFloat& x, long k) { return pow(x, BigFloat(k)); }
inline BigFloat bpow(const BigFloat& x, std::size_t k) { return pow(x, BigFloat(k)); }

inline TruncationPolicy current_policy() { return TruncationPolicy::for_digits(BigFloat::default_precision()); }

inline LogExponent log_exponent(const Rational& offset, const Rational& coeff, const Rational& num,
                                const Rational& den) {
    return LogExponent{offset, coeff, num, den};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Representation pieces of the classical families (in base q, with q > 1 rewritten in p = 1/q)

namespace reps {

using detail::bf;
using detail::bpow;
using Parts = Representation::Parts;

/// Case 1.1, q > 1, as printed: s(k) carries (1/q;1/q)_k in its denominator.
inline DiracComb comb_11_printed(const Rational& qr) {
    return detail::real_comb("U comb (printed)", [qr](std::size_t k) {
        const BigFloat q = bf(qr), p = 1 / q;
        const auto pol = detail::current_policy();
        const BigFloat pk = qpoch_n(p, p, k);
        BigFloat s(0);
        int quiet = 0;
        for (std::size_t m = 0; m < pol.k_max; ++m) {
            if ((m + k) % 2) continue;
            const BigFloat term = bpow(p, m * (m + 1) / 2 + k * m) * bpow(BigFloat(q - 1), (m + k) / 2) / pk;
            s += term;
            quiet = abs(term) <= pol.epsilon_rel * abs(s) ? quiet + 1 : 0;
            if (quiet >= 2) break;
        }
        const BigFloat sign = k % 2 ? BigFloat(-1) : BigFloat(1);
        return std::make_pair(BigFloat(sign * bpow(q, -static_cast<long>(k * k)) * s / pk), BigFloat(-bpow(q, k)));
    });
}

/**
 * Case 1.1, q > 1, from theta interpolation: f(z) = sum rho_k z^k with f(q^n) = q^{n(n-1)/2}.
 * rho_k = (p^{k(k+1)/2} - sum_{r>=1} c_{k+r} p^{r(r-1)/2} (-p^r;p)_inf) / theta,
 * c_j = (-1)^j p^{j(j-1)/2}/(p;p)_j, theta = sum_{j in Z} p^{j(j+1)/2}, p = 1/q.
 */
inline DiracComb comb_11_theta(const Rational& qr) {
    return detail::real_comb("U comb (theta)", [qr](std::size_t k) {
        const BigFloat q = bf(qr), p = 1 / q;
        const auto pol = detail::current_policy();
        BigFloat theta(0);
        for (std::size_t j = 0; j < pol.k_max; ++j) {
            const BigFloat t = bpow(p, j * (j + 1) / 2);
            theta += 2 * t;
            if (t <= pol.epsilon_rel * theta) break;
        }
        BigFloat corr(0);
        for (std::size_t r = 1; r < pol.k_max; ++r) {
            const std::size_t j = k + r;
            const BigFloat cj = (j % 2 ? BigFloat(-1) : BigFloat(1)) * bpow(p, j * (j - 1) / 2) / qpoch_n(p, p, j);
            const BigFloat t = cj * bpow(p, r * (r - 1) / 2) * qpoch_inf(BigFloat(-bpow(p, r)), p, pol);
            corr += t;
            if (abs(t) <= pol.epsilon_rel * bpow(p, k * (k + 1) / 2) * pol.epsilon_rel) break;
        }
        return std::make_pair(BigFloat((bpow(p, k * (k + 1) / 2) - corr) / theta), BigFloat(-bpow(q, k)));
    });
}

/// Case 1.2, 0 < q < 1: (aq;q)_inf (aq)^k/(q;q)_k at q^k.
inline DiracComb comb_12_small(const Rational& ar, const Rational& qr, const Rational& scale) {
    return detail::real_comb("L comb", [=](std::size_t k) {
        const BigFloat q = bf(qr), aq = bf(ar * qr);
        return std::make_pair(BigFloat(bf(scale) * qpoch_inf(aq, q, detail::current_policy()) * bpow(aq, k) /
                                       qpoch_n(q, q, k)),
                              bpow(q, k));
    });
}

/// Case 1.2, q > 1, a < 0.
inline DiracComb comb_12_large(const Rational& ar, const Rational& qr) {
    return detail::real_comb("L comb", [=](std::size_t k) {
        const BigFloat q = bf(qr), p = 1 / q, a = bf(ar);
        return std::make_pair(BigFloat(bpow(p, k * (k - 1) / 2 + 0 * k) * bpow(BigFloat(-a), k) /
                                       (qpoch_inf(a, p, detail::current_policy()) * qpoch_n(p, p, k))),
                              bpow(q, k));
    });
}

/// x^{ln a/ln q} (qx;q)_inf as a Jackson integral on (0, 1/q).
inline WeightDescriptor jackson_12(const Rational& a, const Rational& q, const Rational& mass) {
    WeightDescriptor w;
    w.measure = WeightDescriptor::Measure::Jackson;
    w.exponent = detail::log_exponent(0, 1, a, q);
    w.pochs = {{q, 1, q, false}};
    w.upper = 1 / q;
    w.jackson_base = q;
    w.mass = mass;
    w.formula = "x^{ln a/ln q} (qx;q)_inf d_q x on (0, 1/q)";
    return w;
}

/// Case 1.3, 0 < q < 1: half comb at q^{k+1}.
inline DiracComb comb_13_small(const Rational& br, const Rational& qr, const Rational& scale) {
    return detail::real_comb("W comb", [=](std::size_t k) {
        const BigFloat q = bf(qr), b = bf(br);
        return std::make_pair(
            BigFloat(bf(scale) * qpoch_inf(b, q, detail::current_policy()) * bpow(b, k) / qpoch_n(q, q, k)),
            bpow(q, k + 1));
    });
}

inline WeightDescriptor jackson_13(const Rational& b, const Rational& q, const Rational& mass) {
    WeightDescriptor w;
    w.measure = WeightDescriptor::Measure::Jackson;
    w.exponent = detail::log_exponent(-1, 1, b, q);
    w.pochs = {{1, 1, q, false}};
    w.upper = 1;
    w.jackson_base = q;
    w.mass = mass;
    w.formula = "x^{ln b/ln q - 1} (x;q)_inf d_q x on (0, 1)";
    return w;
}

/// Case 1.3, q > 1.
inline DiracComb comb_13_large(const Rational& br, const Rational& qr) {
    return detail::real_comb("W comb", [=](std::size_t k) {
        const BigFloat q = bf(qr), p = 1 / q, b = bf(br);
        return std::make_pair(BigFloat(bpow(p, k * (k + 1) / 2) * bpow(BigFloat(-b), k) /
                                       (qpoch_inf(BigFloat(b * p), p, detail::current_policy()) * qpoch_n(p, p, k))),
                              bpow(q, k + 1));
    });
}

/// Case 1.4, 0 < q < 1, b > q^{alpha+1}: z = q^{alpha+1}/b at -b q^k.
inline DiracComb comb_14_small(long al, const Rational& br, const Rational& qr) {
    return detail::real_comb("U^alpha comb", [=](std::size_t k) {
        const BigFloat q = bf(qr), b = bf(br), z = bf(ipow(qr, al + 1) / br);
        return std::make_pair(BigFloat(qpoch_inf(z, q, detail::current_policy()) * bpow(z, k) / qpoch_n(q, q, k)),
                              BigFloat(-b * bpow(q, k)));
    });
}

/// Case 1.4, q > 1: z' = q^alpha/b at -b q^k, scaled.
inline DiracComb comb_14_large(long al, const Rational& br, const Rational& qr, const Rational& scale) {
    return detail::real_comb("U^alpha comb", [=](std::size_t k) {
        const BigFloat q = bf(qr), p = 1 / q, b = bf(br), z = bf(ipow(qr, al) / br);
        return std::make_pair(BigFloat(bf(scale) * bpow(p, k * (k - 1) / 2 + 0 * k) * bpow(BigFloat(-z), k) /
                                       (qpoch_inf(z, p, detail::current_policy()) * qpoch_n(p, p, k))),
                              BigFloat(-b * bpow(q, k)));
    });
}

/// x^{alpha - ln b/ln q} / (-x/b; 1/q)_inf on (0, inf).
inline WeightDescriptor riemann_14(long al, const Rational& b, const Rational& q, const Rational& mass) {
    WeightDescriptor w;
    w.exponent = detail::log_exponent(al, -1, b, q);
    w.pochs = {{-1 / b, 1, 1 / q, true}};
    w.mass = mass;
    w.formula = "x^{alpha - ln b/ln q} / (-x/b; 1/q)_inf on (0, inf)";
    return w;
}

/// Case 1.5 comb at q^k, scaled.
inline DiracComb comb_15(const Rational& ar, const Rational& qr, const Rational& scale) {
    return detail::real_comb("A comb", [=](std::size_t k) {
        const BigFloat q = bf(qr), a = bf(ar);
        return std::make_pair(BigFloat(bf(scale) * bpow(q, k * (k + 1) / 2) * bpow(a, k) /
                                       (qpoch_inf(BigFloat(-a * q), q, detail::current_policy()) * qpoch_n(q, q, k))),
                              bpow(q, k));
    });
}

/// Case 1.5 continuous part with its printed constant times `factor`.
inline WeightDescriptor integral_15(const Rational& a, const Rational& q, const Rational& factor) {
    WeightDescriptor w;
    w.exponent = detail::log_exponent(Rational(-1, 2), 1, a, q);
    w.pochs = {{q, 1, q, false}};
    w.gauss_q = q;
    w.explicit_constant = [a, q, factor] {
        const BigFloat qb = bf(q), L = log(1 / qb);
        const BigFloat th = log(bf(a)) / log(qb);
        const BigFloat pi = boost::math::constants::pi<BigFloat>();
        const BigFloat e = (th + BigFloat(0.5)) * (th + BigFloat(0.5)) / 2;
        return BigFloat(bf(factor) * pow(qb, e) * qpoch_inf(BigFloat(-1 / bf(a)), qb, detail::current_policy()) /
                        (2 * sqrt(2 * pi * L)));
    };
    w.formula = "x^{ln a/ln q - 1/2} (qx;q)_inf exp(-ln^2 x/(2 ln(1/q))) on (0, inf), explicit constant";
    return w;
}

/// Case 1.6, 0 < q < 1 comb at q^k.
inline DiracComb comb_16_small(const Rational& ar, const Rational& br, const Rational& qr, const Rational& scale) {
    return detail::real_comb("U(a,b) comb", [=](std::size_t k) {
        const BigFloat q = bf(qr), a = bf(ar), b = bf(br);
        const auto pol = detail::current_policy();
        const BigFloat lead = qpoch_inf(BigFloat(a * q), q, pol) / qpoch_inf(BigFloat(a * b * q * q), q, pol);
        return std::make_pair(BigFloat(bf(scale) * lead * qpoch_n(BigFloat(b * q), q, k) * bpow(BigFloat(a * q), k) /
                                       qpoch_n(q, q, k)),
                              bpow(q, k));
    });
}

inline WeightDescriptor jackson_16_small(const Rational& a, const Rational& b, const Rational& q, const Rational& mass) {
    WeightDescriptor w;
    w.measure = WeightDescriptor::Measure::Jackson;
    w.exponent = detail::log_exponent(0, 1, a, q);
    w.pochs = {{q, 1, q, false}, {b * q, 1, q, true}};
    w.upper = 1 / q;
    w.jackson_base = q;
    w.mass = mass;
    w.formula = "x^{ln a/ln q} (qx;q)_inf/(bqx;q)_inf d_q x on (0, 1/q)";
    return w;
}

/// Case 1.6, q > 1 comb at p^{k+1}/b.
inline DiracComb comb_16_large(const Rational& ar, const Rational& br, const Rational& qr, const Rational& scale) {
    return detail::real_comb("U(a,b) comb", [=](std::size_t k) {
        const BigFloat q = bf(qr), p = 1 / q, a = bf(ar), b = bf(br);
        const auto pol = detail::current_policy();
        const BigFloat lead = qpoch_inf(BigFloat(p / a), p, pol) / qpoch_inf(BigFloat(p * p / (a * b)), p, pol);
        return std::make_pair(BigFloat(bf(scale) * lead * qpoch_n(BigFloat(p / b), p, k) *
                                       bpow(BigFloat(a * q), -static_cast<long>(k)) / qpoch_n(p, p, k)),
                              BigFloat(bpow(p, k + 1) / b));
    });
}

inline WeightDescriptor jackson_16_large(const Rational& a, const Rational& b, const Rational& q, const Rational& mass) {
    WeightDescriptor w;
    w.measure = WeightDescriptor::Measure::Jackson;
    w.exponent = detail::log_exponent(0, 1, a, q);
    w.pochs = {{b, 1, 1 / q, false}, {1, 1, 1 / q, true}};
    w.upper = 1 / b;
    w.jackson_base = 1 / q;
    w.mass = mass;
    w.formula = "x^{ln a/ln q} (bx;1/q)_inf/(x;1/q)_inf d_{1/q} x on (0, 1/b)";
    return w;
}

/// Case 1.7, q > 1, mu < 0 at p^{k+1}/mu.
inline DiracComb comb_17(const Rational& mur, const Rational& qr) {
    return detail::real_comb("U(mu) comb", [=](std::size_t k) {
        const BigFloat q = bf(qr), p = 1 / q, mu = bf(mur);
        return std::make_pair(BigFloat(bpow(p, k * (k + 1) / 2) * bpow(BigFloat(-1 / mu), k) /
                                       (qpoch_inf(BigFloat(p / mu), p, detail::current_policy()) * qpoch_n(p, p, k))),
                              BigFloat(bpow(p, k + 1) / mu));
    });
}

/// Case 1.8, q > 1, omega > 1 at -omega q^{-k} Q^{-3}.
inline DiracComb comb_18(const Rational& omr, const Rational& Qr) {
    return detail::real_comb("S comb", [=](std::size_t k) {
        const BigFloat Q = bf(Qr), q = Q * Q, p = 1 / q, om = bf(omr);
        return std::make_pair(BigFloat(qpoch_inf(BigFloat(1 / om), p, detail::current_policy()) *
                                       bpow(om, -static_cast<long>(k)) / qpoch_n(p, p, k)),
                              BigFloat(-om * bpow(q, -static_cast<long>(k)) / (Q * Q * Q)));
    });
}

/// Case 1.8, 0 < q < 1, 0 < omega < 1: x^{ln omega/ln q - 1} / (-Q^3 x/omega; q)_inf.
inline WeightDescriptor riemann_18(const Rational& om, const Rational& Q) {
    const Rational q = Q * Q;
    WeightDescriptor w;
    w.exponent = detail::log_exponent(-1, 1, om, q);
    w.pochs = {{-Q * Q * Q / om, 1, q, true}};
    w.formula = "x^{ln omega/ln q - 1} / (-q^{3/2} x/omega; q)_inf on (0, inf)";
    return w;
}

/// Case 1.8 at omega = 0: the log-normal weight with constant sqrt(q/(2 pi ln(1/q))).
inline WeightDescriptor gauss_18(const Rational& Q) {
    const Rational q = Q * Q;
    WeightDescriptor w;
    w.gauss_q = q;
    w.explicit_constant = [q] {
        const BigFloat qb = bf(q);
        const BigFloat pi = boost::math::constants::pi<BigFloat>();
        return BigFloat(sqrt(qb / (2 * pi * log(1 / qb))));
    };
    w.formula = "exp(-ln^2 x/(2 ln(1/q))) on (0, inf), explicit constant";
    return w;
}

/// Case 1.8, omega < 0: (-q^{-1/2}|omega|/x; q)_inf times the log-normal factor on (q^{-1/2}|omega|, inf).
inline WeightDescriptor negative_18(const Rational& om, const Rational& Q) {
    const Rational q = Q * Q;
    const Rational c = abs(om) / Q;
    WeightDescriptor w;
    w.pochs = {{-c, -1, q, false}};
    w.gauss_q = q;
    w.lower = c;
    w.formula = "(-q^{-1/2}|omega|/x; q)_inf exp(-ln^2 x/(2 ln(1/q))) on (q^{-1/2}|omega|, inf)";
    return w;
}

/// Weight in t lifted to |x| V(x^2) on the real line.
inline WeightDescriptor lift(WeightDescriptor w) {
    w.symmetric_lift = true;
    w.formula = "|x| V(x^2), V = " + w.formula;
    return w;
}

} // namespace reps

// ---------------------------------------------------------------------------
// The catalog

namespace detail {

inline Representation make_rep(Representation::Kind kind, std::string region, bool applies,
                               std::function<Representation::Parts()> build, std::string defect = "") {
    Representation r;
    r.kind = kind;
    r.region = std::move(region);
    r.applies = applies;
    r.build = std::move(build);
    r.known_defect = std::move(defect);
    return r;
}

constexpr auto kDiscrete = Representation::Kind::Discrete;
constexpr auto kIntegral = Representation::Kind::Integral;

inline const std::string kDefect11 = "printed masses do not reproduce the moments";
inline const std::string kDefect15 =
    "printed weight is not absolutely integrable; the explicit constant does not normalize it";
inline const std::string kDefect18 = "printed weight does not reproduce the moments for omega < 0";

inline Representation::Parts lift_parts(const Representation::Parts& in) {
    Representation::Parts out;
    for (const auto& c : in.combs) out.combs.push_back(sym_comb_from_sigma(c));
    for (const auto& w : in.weights) out.weights.push_back(reps::lift(w));
    return out;
}

inline Instance inst(std::initializer_list<std::pair<const std::string, Rational>> p, const Rational& prim) {
    return Instance{Params(p), prim};
}

inline Rational R(long p, long q = 1) { return make_rational(p, q); }

// Classical builders ---------------------------------------------------------

inline FamilySpec base_spec(const std::string& name, const std::string& anchor, const std::string& title,
                            const Params& p, const Rational& q) {
    FamilySpec s;
    s.name = name;
    s.anchor = anchor;
    s.title = title;
    s.params = p;
    s.q = q;
    return s;
}

inline FamilySpec build_11(const Params& P, const Rational& q) {
    QParam check(q);
    auto s = base_spec("U_11", "case 1.1", "U(q)", P, q);
    s.recurrence = classical_rec([q](long n) { return Rational((1 - (1 + q) * ipow(q, n)) * ipow(q, n - 1)); },
                                 [q](long n) { return Rational((ipow(q, n + 1) - 1) * ipow(q, 3 * n)); }, "U_11");
    s.moments = product_form([q](std::size_t k) { return Rational(-ipow(q, static_cast<long>(k))); }, "U_11");
    s.pearson = PearsonPair::make(RPoly::x(), lin(-1 / (q - 1), -1 / (q - 1)), q, "U_11");
    s.representations.push_back(make_rep(kDiscrete, "q > 1 (printed masses)", q > 1, [q] {
        return Representation::Parts{{reps::comb_11_printed(q)}, {}};
    }, kDefect11));
    s.representations.push_back(make_rep(kDiscrete, "q > 1 (theta interpolation)", q > 1, [q] {
        return Representation::Parts{{reps::comb_11_theta(q)}, {}};
    }));
    return s;
}

inline FamilySpec build_12(const Params& P, const Rational& q) {
    QParam check(q);
    const Rational a = param(P, "a");
    const std::string anc = "case 1.2";
    require(a != 0, "a != 0", anc);
    off_lattice(a, q, -1, -1, "a = q^{-n-1}", anc);
    auto s = base_spec("LittleQLaguerre_12", anc, "little q-Laguerre L(a,q)", P, q);
    s.recurrence = classical_rec(
        [a, q](long n) { return Rational((1 + a - a * (1 + q) * ipow(q, n)) * ipow(q, n)); },
        [a, q](long n) { return Rational(a * (1 - ipow(q, n + 1)) * (1 - a * ipow(q, n + 1)) * ipow(q, 2 * n + 1)); },
        "LittleQLaguerre_12");
    s.moments = product_form([a, q](std::size_t k) { return Rational(1 - a * ipow(q, static_cast<long>(k) + 1)); },
                             "LittleQLaguerre_12");
    const Rational c = -1 / (a * q * (q - 1));
    s.pearson = PearsonPair::make(RPoly::x(), lin(c, c * (a * q - 1)), q, "LittleQLaguerre_12");
    const bool small = q > 0 && q < 1 && a > 0 && a < 1 / q;
    s.representations.push_back(make_rep(kDiscrete, "0 < q < 1, 0 < a < 1/q", small, [a, q] {
        return Representation::Parts{{reps::comb_12_small(a, q, 1)}, {}};
    }));
    s.representations.push_back(make_rep(kIntegral, "0 < q < 1, 0 < a < 1/q (q-integral)", small, [a, q] {
        return Representation::Parts{{}, {reps::jackson_12(a, q, 1)}};
    }));
    s.representations.push_back(make_rep(kDiscrete, "q > 1, a < 0", q > 1 && a < 0, [a, q] {
        return Representation::Parts{{reps::comb_12_large(a, q)}, {}};
    }));
    return s;
}

inline FamilySpec build_13(const Params& P, const Rational& q) {
    QParam check(q);
    const Rational b = param(P, "b");
    const std::string anc = "case 1.3";
    require(b != 0, "b != 0", anc);
    off_lattice(b, q, -1, 0, "b = q^{-n}", anc);
    auto s = base_spec("Wall_13", anc, "Wall W(b,q)", P, q);
    s.recurrence = classical_rec(
        [b, q](long n) { return Rational((b + q - b * (1 + q) * ipow(q, n)) * ipow(q, n)); },
        [b, q](long n) { return Rational(b * (1 - ipow(q, n + 1)) * (1 - b * ipow(q, n)) * ipow(q, 2 * n + 2)); },
        "Wall_13");
    s.moments = product_form([b, q](std::size_t k) { return Rational(q * (1 - b * ipow(q, static_cast<long>(k)))); },
                             "Wall_13");
    const Rational c = -1 / (b * (q - 1));
    s.pearson = PearsonPair::make(RPoly::x(), lin(c / q, c * (b - 1)), q, "Wall_13");
    s.representations.push_back(make_rep(kIntegral, "0 < q < 1, 0 < b < 1 (half comb, half q-integral)",
                                         q > 0 && q < 1 && b > 0 && b < 1, [b, q] {
        return Representation::Parts{{reps::comb_13_small(b, q, R(1, 2))}, {reps::jackson_13(b, q, R(1, 2))}};
    }));
    s.representations.push_back(make_rep(kDiscrete, "q > 1", q > 1, [b, q] {
        return Representation::Parts{{reps::comb_13_large(b, q)}, {}};
    }));
    return s;
}

inline FamilySpec build_14(const Params& P, const Rational& q) {
    QParam check(q);
    const long al = int_param(P, "alpha");
    const Rational b = param(P, "b");
    const std::string anc = "case 1.4";
    require(b != 0, "b != 0", anc);
    off_lattice(b, q, 1, al + 1, "b = q^{n+1+alpha}", anc);
    auto s = base_spec("GenQinvLaguerre_14", anc, "generalized q^{-1}-Laguerre U^(alpha)(b,q)", P, q);
    s.recurrence = classical_rec(
        [al, b, q](long n) {
            return Rational((1 - ipow(q, -n - 1) + (1 - b * ipow(q, -n - al)) / q) * ipow(q, 2 * n + al + 1));
        },
        [al, b, q](long n) {
            return Rational((1 - ipow(q, -n - 1)) * (1 - b * ipow(q, -n - 1 - al)) * ipow(q, 4 * n + 2 * al + 3));
        },
        "GenQinvLaguerre_14");
    const Rational z = ipow(q, al + 1) / b;
    s.moments = product_form([b, z, q](std::size_t k) { return Rational(-b * (1 - z * ipow(q, static_cast<long>(k)))); },
                             "GenQinvLaguerre_14");
    const Rational c = ipow(q, -al - 1) / (q - 1);
    s.pearson = PearsonPair::make(RPoly::x(), lin(c, c * (b - ipow(q, al + 1))), q, "GenQinvLaguerre_14");
    s.representations.push_back(make_rep(kDiscrete, "0 < q < 1, b > q^{alpha+1}",
                                         q > 0 && q < 1 && b > ipow(q, al + 1), [al, b, q] {
        return Representation::Parts{{reps::comb_14_small(al, b, q)}, {}};
    }));
    s.representations.push_back(make_rep(kIntegral, "q > 1, q^alpha < b < q^{alpha+1} (half comb, half integral)",
                                         q > 1 && b > ipow(q, al) && b < ipow(q, al + 1), [al, b, q] {
        return Representation::Parts{{reps::comb_14_large(al, b, q, R(1, 2))}, {reps::riemann_14(al, b, q, R(1, 2))}};
    }));
    return s;
}

inline FamilySpec build_15(const Params& P, const Rational& q) {
    QParam check(q);
    const Rational a = param(P, "a");
    const std::string anc = "case 1.5";
    require(a != 0, "a != 0", anc);
    off_lattice(-a, q, -1, 0, "a = -q^{-n}", anc);
    auto s = base_spec("AltQCharlier_15", anc, "alternative q-Charlier A(a,q)", P, q);
    s.recurrence = classical_rec(
        [a, q](long n) {
            return Rational((1 + a * ipow(q, n - 1) + a * ipow(q, n) - a * ipow(q, 2 * n)) * ipow(q, n) /
                            ((1 + a * ipow(q, 2 * n - 1)) * (1 + a * ipow(q, 2 * n + 1))));
        },
        [a, q](long n) {
            const Rational d = 1 + a * ipow(q, 2 * n + 1);
            return Rational(a * ipow(q, 3 * n + 1) * (1 - ipow(q, n + 1)) * (1 + a * ipow(q, n)) /
                            ((1 + a * ipow(q, 2 * n)) * d * d * (1 + a * ipow(q, 2 * n + 2))));
        },
        "AltQCharlier_15");
    s.moments = product_form([a, q](std::size_t k) { return Rational(1 / (1 + a * ipow(q, static_cast<long>(k) + 1))); },
                             "AltQCharlier_15");
    const Rational c = -1 / (a * q * (q - 1));
    s.pearson = PearsonPair::make(RPoly::monomial(2), lin(c * (1 + a * q), -c), q, "AltQCharlier_15");
    s.representations.push_back(make_rep(kIntegral, "0 < q < 1, a > 0 (half comb, half integral)",
                                         q > 0 && q < 1 && a > 0, [a, q] {
        return Representation::Parts{{reps::comb_15(a, q, R(1, 2))}, {reps::integral_15(a, q, 1)}};
    }, kDefect15));
    return s;
}

inline FamilySpec build_16(const Params& P, const Rational& q) {
    QParam check(q);
    const Rational a = param(P, "a"), b = param(P, "b");
    const std::string anc = "case 1.6";
    require(a * b != 0, "ab != 0", anc);
    off_lattice(a, q, -1, -1, "a = q^{-n-1}", anc);
    off_lattice(b, q, -1, -1, "b = q^{-n-1}", anc);
    off_lattice(a * b, q, -1, 0, "ab = q^{-n}", anc);
    auto s = base_spec("LittleQJacobi_16", anc, "little q-Jacobi U(a,b,q)", P, q);
    s.recurrence = classical_rec(
        [a, b, q](long n) {
            return Rational(((1 + a) * (1 + a * b * ipow(q, 2 * n + 1)) - a * (1 + b) * (1 + q) * ipow(q, n)) *
                            ipow(q, n) / ((1 - a * b * ipow(q, 2 * n)) * (1 - a * b * ipow(q, 2 * n + 2))));
        },
        [a, b, q](long n) {
            const Rational d = 1 - a * b * ipow(q, 2 * n + 2);
            return Rational(a * ipow(q, 2 * n + 1) * (1 - ipow(q, n + 1)) * (1 - a * ipow(q, n + 1)) *
                            (1 - b * ipow(q, n + 1)) * (1 - a * b * ipow(q, n + 1)) /
                            ((1 - a * b * ipow(q, 2 * n + 1)) * d * d * (1 - a * b * ipow(q, 2 * n + 3))));
        },
        "LittleQJacobi_16");
    s.moments = product_form([a, b, q](std::size_t k) {
        const long j = static_cast<long>(k);
        return Rational((1 - a * ipow(q, j + 1)) / (1 - a * b * ipow(q, j + 2)));
    }, "LittleQJacobi_16");
    const Rational c = 1 / (a * b * q * q * (q - 1));
    s.pearson = PearsonPair::make(RPoly::x() * RPoly::linear(1 / (b * q)), lin(c * (1 - a * b * q * q), c * (a * q - 1)),
                                  q, "LittleQJacobi_16");
    s.representations.push_back(make_rep(kIntegral, "0 < q < 1, 0 < a < 1/q, b <= 1, b != 0 (half comb, half q-integral)",
                                         q > 0 && q < 1 && a > 0 && a < 1 / q && b <= 1, [a, b, q] {
        return Representation::Parts{{reps::comb_16_small(a, b, q, R(1, 2))}, {reps::jackson_16_small(a, b, q, R(1, 2))}};
    }));
    s.representations.push_back(make_rep(kIntegral, "q > 1, a > 1/q, b > 1 (half comb, half q-integral)",
                                         q > 1 && a > 1 / q && b > 1, [a, b, q] {
        return Representation::Parts{{reps::comb_16_large(a, b, q, R(1, 2))}, {reps::jackson_16_large(a, b, q, R(1, 2))}};
    }));
    return s;
}

inline FamilySpec build_17(const Params& P, const Rational& q) {
    QParam check(q);
    const Rational mu = param(P, "mu");
    const std::string anc = "case 1.7";
    require(mu != 0, "mu != 0", anc);
    off_lattice(mu, q, -1, 0, "mu = q^{-n}", anc);
    auto s = base_spec("QCharlierII_17", anc, "q-Charlier II U(mu,q)", P, q);
    s.recurrence = classical_rec(
        [mu, q](long n) {
            return Rational((1 - (1 + q) * ipow(q, n) + mu * ipow(q, 2 * n)) * ipow(q, n - 1) /
                            ((1 - mu * ipow(q, 2 * n - 1)) * (1 - mu * ipow(q, 2 * n + 1))));
        },
        [mu, q](long n) {
            const Rational d = 1 - mu * ipow(q, 2 * n + 1);
            return Rational(-ipow(q, 3 * n) * (1 - ipow(q, n + 1)) * (1 - mu * ipow(q, n)) /
                            ((1 - mu * ipow(q, 2 * n)) * d * d * (1 - mu * ipow(q, 2 * n + 2))));
        },
        "QCharlierII_17");
    s.moments = product_form([mu, q](std::size_t k) {
        const long j = static_cast<long>(k);
        return Rational(-ipow(q, j) / (1 - mu * ipow(q, j + 1)));
    }, "QCharlierII_17");
    const Rational c = -1 / (mu * q * (q - 1));
    s.pearson = PearsonPair::make(RPoly::x() * RPoly::linear(1 / (mu * q)), lin(c * (mu * q - 1), -c), q,
                                  "QCharlierII_17");
    s.representations.push_back(make_rep(kDiscrete, "q > 1, mu < 0", q > 1 && mu < 0, [mu, q] {
        return Representation::Parts{{reps::comb_17(mu, q)}, {}};
    }));
    return s;
}

inline FamilySpec build_18(const Params& P, const Rational& Q) {
    if (Q <= 0) throw InvalidQ("sqrt(q) must be positive");
    const Rational q = Q * Q;
    QParam check(q);
    const Rational om = param(P, "omega");
    const std::string anc = "case 1.8";
    off_lattice(om, q, -1, 0, "omega = q^{-n}", anc);
    auto s = base_spec("GenStieltjesWigert_18", anc, "generalized Stieltjes-Wigert S(omega,q)", P, q);
    s.sqrtq = Q;
    const Rational Q3 = Q * Q * Q;
    s.recurrence = classical_rec(
        [om, q, Q3](long n) {
            return Rational(((1 + q) * ipow(q, -n) - q - om) * ipow(q, -n) / Q3);
        },
        [om, q](long n) {
            return Rational((1 - ipow(q, n + 1)) * (1 - om * ipow(q, n)) * ipow(q, -4 * n - 4));
        },
        "GenStieltjesWigert_18");
    // Q^{-n(n+2)} (omega;q)_n: ratio Q^{-2k-3} (1 - omega q^k)
    s.moments = product_form([om, q, Q](std::size_t k) {
        const long j = static_cast<long>(k);
        return Rational(ipow(Q, -2 * j - 3) * (1 - om * ipow(q, j)));
    }, "GenStieltjesWigert_18");
    s.pearson = PearsonPair::make(RPoly::x() * RPoly::linear(-om / Q3), lin(-1 / (q - 1), -(om - 1) / (Q3 * (q - 1))), q,
                                  "GenStieltjesWigert_18");
    const bool small = q < 1;
    s.representations.push_back(make_rep(kDiscrete, "q > 1, omega > 1", q > 1 && om > 1, [om, Q] {
        return Representation::Parts{{reps::comb_18(om, Q)}, {}};
    }));
    s.representations.push_back(make_rep(kIntegral, "0 < q < 1, 0 < omega < 1", small && om > 0 && om < 1, [om, Q] {
        return Representation::Parts{{}, {reps::riemann_18(om, Q)}};
    }));
    s.representations.push_back(make_rep(kIntegral, "0 < q < 1, omega = 0", small && om == 0, [Q] {
        return Representation::Parts{{}, {reps::gauss_18(Q)}};
    }));
    s.representations.push_back(make_rep(kIntegral, "0 < q < 1, omega < 0", small && om < 0, [om, Q] {
        return Representation::Parts{{}, {reps::negative_18(om, Q)}};
    }, kDefect18));
    return s;
}

inline FamilySpec build_21(const Params& P, const Rational& q) {
    QParam check(q);
    const Rational al = param(P, "alpha");
    const std::string anc = "case 2.1";
    for (long n = 0; n <= static_cast<long>(kNMax); ++n)
        require(al != -qbracket(n, q) - 1, "alpha = -[n]_q - 1 with n = " + std::to_string(n), anc);
    auto s = base_spec("QLaguerre_21", anc, "q-Laguerre L(alpha,q)", P, q);
    const QCtx<Rational> c{q};
    s.recurrence = classical_rec([c, al](long n) { return formulas::laguerre_beta(c, n, al); },
                                 [c, al](long n) { return formulas::laguerre_gamma(c, n + 1, al); }, "QLaguerre_21");
    s.moments = product_form([q, al](std::size_t k) { return Rational(qbracket(static_cast<long>(k), q) + 1 + al); },
                             "QLaguerre_21");
    s.pearson = PearsonPair::make(RPoly::x(), lin(1, -1 - al), q, "QLaguerre_21");
    return s;
}

inline FamilySpec build_22(const Params& P, const Rational& q) {
    QParam check(q);
    const Rational al = param(P, "alpha");
    const std::string anc = "case 2.2";
    require(al != 1 / (2 * (q - 1)), "alpha = (1/2)(q-1)^{-1}", anc);
    for (long n = 0; n <= static_cast<long>(kNMax); ++n)
        require(2 * al != -qbracket(n, q), "alpha = -[n]_q/2 with n = " + std::to_string(n), anc);
    auto s = base_spec("QBessel_22", anc, "q-Bessel B(alpha,q)", P, q);
    const QCtx<Rational> c{q};
    s.recurrence = classical_rec([c, al](long n) { return formulas::bessel_beta(c, n, al); },
                                 [c, al](long n) { return formulas::bessel_gamma(c, n + 1, al); }, "QBessel_22");
    s.moments = product_form([q, al](std::size_t k) { return Rational(-2 / (qbracket(static_cast<long>(k), q) + 2 * al)); },
                             "QBessel_22");
    s.pearson = PearsonPair::make(RPoly::monomial(2), lin(-2 * al, -2), q, "QBessel_22");
    return s;
}

inline void check_jacobi_constraints(const Rational& al, const Rational& be, const Rational& q, const std::string& anc) {
    const Rational s = al + be + 2;
    require(al + be != (3 - 2 * q) / (q - 1), "alpha + beta = (3-2q)/(q-1)", anc);
    for (long n = 0; n <= static_cast<long>(kNMax); ++n) {
        const Rational br = qbracket(n, q);
        const std::string at = " with n = " + std::to_string(n);
        require(al + be != -br - 2, "alpha + beta = -[n]_q - 2" + at, anc);
        require(be != -br - 1, "beta = -[n]_q - 1" + at, anc);
        require(s - (be + 1) * ipow(q, n) + br != 0, "alpha + beta + 2 - (beta+1) q^n + [n]_q = 0" + at, anc);
    }
}

inline FamilySpec build_23(const Params& P, const Rational& q) {
    QParam check(q);
    const Rational al = param(P, "alpha"), be = param(P, "beta");
    const std::string anc = "case 2.3";
    check_jacobi_constraints(al, be, q, anc);
    auto s = base_spec("QJacobi_23", anc, "q-Jacobi J(alpha,beta,q)", P, q);
    const QCtx<Rational> c{q};
    s.recurrence = classical_rec([c, al, be](long n) { return formulas::jacobi_beta(c, n, al, be); },
                                 [c, al, be](long n) { return formulas::jacobi_gamma(c, n + 1, al, be); }, "QJacobi_23");
    const Rational sp = al + be + 2;
    s.moments = product_form([q, be, sp](std::size_t k) {
        const Rational br = qbracket(static_cast<long>(k), q);
        return Rational((br + be + 1) / (br + sp));
    }, "QJacobi_23");
    s.pearson = PearsonPair::make(RPoly::x() * RPoly::linear(1), lin(-sp, be + 1), q, "QJacobi_23");
    return s;
}

// Symmetric builders ---------------------------------------------------------

/// Everything a symmetric family shares: Q, the sigma image, the symmetric pair, the lifted moments.
struct SymSetup {
    std::string name, anchor, title;
    Params params;
    Rational Q;
    std::function<Rational(long)> gamma;
    RPoly phi, psi;   // Lemma-3 shape; the symmetric pair is (x phi(x^2), psi(x^2))
    SigmaImage image;
    std::string class_one;
};

inline FamilySpec instantiate_impl(const std::string& name, const Params& params, const Rational& primitive);

inline FamilySpec finish_symmetric(const SymSetup& in) {
    const Rational Q = in.Q;
    const Rational q = Q * Q;
    FamilySpec s;
    s.name = in.name;
    s.anchor = in.anchor;
    s.title = in.title;
    s.symmetric = true;
    s.params = in.params;
    s.q = q;
    s.sqrtq = Q;
    s.sigma = in.image;
    s.class_one_condition = in.class_one;
    // sigma u carries the regularity constraints
    const bool image_sqrt = in.image.family == "GenStieltjesWigert_18";
    const FamilySpec su = instantiate_impl(in.image.family, in.image.params, image_sqrt ? Q : q);
    for (auto c : su.constraints) s.constraints.push_back(c);
    s.recurrence = symmetric_rec(in.gamma, in.name);
    s.moments = sym_moments_from_sigma(su.moments);
    s.pearson = symmetric_pair(in.phi, in.psi, QParam(Q), in.name);
    return s;
}

inline SigmaImage image(std::string fam, Params p, std::string xfam, Params xp, Rational pref, Rational dil) {
    return SigmaImage{std::move(fam), std::move(p), XSigmaImage{std::move(xfam), std::move(xp), std::move(pref), std::move(dil)}};
}

inline Rational check_Q(const Rational& Q) {
    if (Q <= 0) throw InvalidQ("sqrt(q) must be positive");
    QParam check(Q * Q);
    return Q;
}

inline FamilySpec build_A1(const Params& P, const Rational& Qin) {
    const Rational Q = check_Q(Qin), q = Q * Q;
    const Rational mu = param(P, "mu");
    const Rational al = mu - R(1, 2);
    const std::string anc = "case A1";
    for (long n = 0; n <= static_cast<long>(kNMax); ++n)
        require(mu != -qbracket(n, q) - R(1, 2), "mu = -[n]_q - 1/2 with n = " + std::to_string(n), anc);
    const QCtx<Rational> c{q};
    SymSetup in{"H_mu_q", anc, "generalized q-Hermite H(mu,q)", P, Q,
                [c, mu](long n) { return formulas::hermite_sym_gamma(c, n, mu); },
                RPoly(1), lin(Q + 1, -(Q + 1) * (mu + R(1, 2))),
                image("QLaguerre_21", {{"alpha", al}}, "QLaguerre_21", {{"alpha", (al + 2) / q - 1}}, 1 + al, q),
                "mu != 1/(sqrt(q)(sqrt(q)+1)) - 1/2"};
    auto s = finish_symmetric(in);
    s.positivity_text = "positive definite iff q > 0, mu > -1/2";
    s.positivity_iff = true;
    s.positivity_region = [mu] { return mu > R(-1, 2); };
    return s;
}

inline FamilySpec build_A2(const Params& P, const Rational& Qin) {
    const Rational Q = check_Q(Qin), q = Q * Q;
    const std::string anc = "case A2";
    SymSetup in{"U_sym", anc, "symmetric form with sigma u = U(q)", P, Q,
                [q](long n) {
                    if (n % 2 == 1) return Rational(-ipow(q, n - 1));   // -q^{2k}, n = 2k+1
                    const long k = (n - 2) / 2;
                    return Rational((1 - ipow(q, k + 1)) * ipow(q, k));
                },
                RPoly(1), lin(-1 / (Q - 1), -1 / (Q - 1)), image("U_11", {}, "U_11", {}, -1, q), "always"};
    auto s = finish_symmetric(in);
    s.representations.push_back(make_rep(kDiscrete, "q > 1 (printed masses)", q > 1, [q] {
        return lift_parts(Representation::Parts{{reps::comb_11_printed(q)}, {}});
    }, kDefect11));
    s.representations.push_back(make_rep(kDiscrete, "q > 1 (theta interpolation)", q > 1, [q] {
        return lift_parts(Representation::Parts{{reps::comb_11_theta(q)}, {}});
    }));
    return s;
}

inline FamilySpec build_A3(const Params& P, const Rational& Qin) {
    const Rational Q = check_Q(Qin), q = Q * Q;
    const Rational a = param(P, "a");
    const std::string anc = "case A3";
    require(a != 0, "a != 0", anc);
    off_lattice(a, q, -1, -1, "a = q^{-n-1}", anc);
    const Rational c = -1 / (a * q * (Q - 1));
    SymSetup in{"SV", anc, "symmetric little q-Laguerre SV(a,q)", P, Q,
                [a, q](long n) {
                    if (n % 2 == 1) {
                        const long k = (n - 1) / 2;
                        return Rational(ipow(q, k) * (1 - a * ipow(q, k + 1)));
                    }
                    const long k = (n - 2) / 2;
                    return Rational(a * ipow(q, k + 1) * (1 - ipow(q, k + 1)));
                },
                RPoly(1), lin(c, c * (a * q - 1)),
                image("LittleQLaguerre_12", {{"a", a}}, "LittleQLaguerre_12", {{"a", a * q}}, 1 - a * q, 1),
                "a != q^{-1/2}"};
    auto s = finish_symmetric(in);
    const bool small = q < 1 && a > 0 && a < 1 / q;
    s.representations.push_back(make_rep(kIntegral, "0 < q < 1, 0 < a < 1/q (half comb, half q-integral)", small, [a, q] {
        return lift_parts(Representation::Parts{{reps::comb_12_small(a, q, R(1, 2))}, {reps::jackson_12(a, q, R(1, 2))}});
    }));
    s.representations.push_back(make_rep(kDiscrete, "q > 1, a < 0", q > 1 && a < 0, [a, q] {
        return lift_parts(Representation::Parts{{reps::comb_12_large(a, q)}, {}});
    }));
    s.positivity_text = "positive definite iff 0 < q < 1, 0 < a < 1/q or q > 1, a < 0";
    s.positivity_iff = true;
    s.positivity_region = [a, q] { return (q < 1 && a > 0 && a < 1 / q) || (q > 1 && a < 0); };
    return s;
}

inline FamilySpec build_A4(const Params& P, const Rational& Qin) {
    const Rational Q = check_Q(Qin), q = Q * Q;
    const Rational b = param(P, "b");
    const std::string anc = "case A4";
    require(b != 0, "b != 0", anc);
    off_lattice(b, q, -1, 0, "b = q^{-n}", anc);
    const Rational c = -1 / (b * (Q - 1));
    SymSetup in{"Y_Brenke", anc, "Brenke-type symmetric form Y(b,q)", P, Q,
                [b, q](long n) {
                    if (n % 2 == 1) {
                        const long k = (n - 1) / 2;
                        return Rational(ipow(q, k + 1) * (1 - b * ipow(q, k)));
                    }
                    const long k = (n - 2) / 2;
                    return Rational(b * ipow(q, k + 1) * (1 - ipow(q, k + 1)));
                },
                RPoly(1), lin(c / q, c * (b - 1)),
                image("Wall_13", {{"b", b}}, "Wall_13", {{"b", b * q}}, q * (1 - b), 1), "b != sqrt(q)"};
    return finish_symmetric(in);
}

inline FamilySpec build_A5(const Params& P, const Rational& Qin) {
    const Rational Q = check_Q(Qin), q = Q * Q;
    const long al = int_param(P, "alpha");
    const Rational b = param(P, "b");
    const std::string anc = "case A5";
    require(b != 0, "b != 0", anc);
    off_lattice(b, q, 1, al + 1, "b = q^{n+1+alpha}", anc);
    const Rational c = ipow(q, -al - 1) / (Q - 1);
    SymSetup in{"Usym_alpha_b", anc, "symmetric generalized q^{-1}-Laguerre", P, Q,
                [al, b, q](long n) {
                    if (n % 2 == 1) {
                        const long k = (n - 1) / 2;
                        return Rational((1 - b * ipow(q, -k - 1 - al)) * ipow(q, 2 * k + al + 1));
                    }
                    const long k = (n - 2) / 2;
                    return Rational((1 - ipow(q, -k - 1)) * ipow(q, 2 * k + al + 2));
                },
                RPoly(1), lin(c, c * (b - ipow(q, al + 1))),
                image("GenQinvLaguerre_14", {{"alpha", Rational(al)}, {"b", b}}, "GenQinvLaguerre_14",
                      {{"alpha", Rational(al + 1)}, {"b", b}}, ipow(q, al + 1) - b, 1),
                "b != q^{alpha+1/2}"};
    auto s = finish_symmetric(in);
    s.representations.push_back(make_rep(kIntegral, "q > 1, 0 < b < q^{alpha+1}", q > 1 && b > 0 && b < ipow(q, al + 1),
                                         [al, b, q] {
        return lift_parts(Representation::Parts{{}, {reps::riemann_14(al, b, q, 1)}});
    }));
    s.representations.push_back(make_rep(kDiscrete, "q > 1, b < 0", q > 1 && b < 0, [al, b, q] {
        return lift_parts(Representation::Parts{{reps::comb_14_large(al, b, q, 1)}, {}});
    }));
    s.representations.push_back(make_rep(kDiscrete, "0 < q < 1, b > q^{alpha+1}", q < 1 && b > ipow(q, al + 1), [al, b, q] {
        return lift_parts(Representation::Parts{{reps::comb_14_small(al, b, q)}, {}});
    }));
    s.positivity_text = "positive definite for q > 1, b < q^{alpha+1}";
    s.positivity_region = [al, b, q] { return q > 1 && b < ipow(q, al + 1); };
    return s;
}

inline FamilySpec build_B1(const Params& P, const Rational& Qin) {
    const Rational Q = check_Q(Qin), q = Q * Q;
    const Rational nu = param(P, "nu");
    const Rational al = (nu + 1) / 2;
    const std::string anc = "case B1";
    require(nu != (2 - q) / (q - 1), "nu = (2-q)/(q-1)", anc);
    for (long n = 0; n <= static_cast<long>(kNMax); ++n)
        require(nu != -qbracket(n, q) - 1, "nu = -[n]_q - 1 with n = " + std::to_string(n), anc);
    const QCtx<Rational> c{q};
    SymSetup in{"B_nu_q", anc, "symmetric q-Bessel B[nu,q]", P, Q,
                [c, nu](long n) { return formulas::bessel_sym_gamma(c, n, nu); },
                RPoly::x(), lin(-2 * (Q + 1) * al, -2 * (Q + 1)),
                image("QBessel_22", {{"alpha", al}}, "QBessel_22", {{"alpha", (al + R(1, 2)) / q}}, -1 / al, 1 / q),
                "always"};
    auto s = finish_symmetric(in);
    return s;
}

inline FamilySpec build_B2(const Params& P, const Rational& Qin) {
    const Rational Q = check_Q(Qin), q = Q * Q;
    const Rational a = param(P, "a");
    const std::string anc = "case B2";
    require(a != 0, "a != 0", anc);
    off_lattice(-a, q, -1, 0, "a = -q^{-n}", anc);
    const Rational c = -1 / (a * q * (Q - 1));
    SymSetup in{"AltQCharlier_sym", anc, "symmetric alternative q-Charlier", P, Q,
                [a, q](long n) {
                    if (n % 2 == 1) {
                        const long k = (n - 1) / 2;
                        return Rational(ipow(q, k) * (1 + a * ipow(q, k)) /
                                        ((1 + a * ipow(q, 2 * k)) * (1 + a * ipow(q, 2 * k + 1))));
                    }
                    const long k = (n - 2) / 2;
                    return Rational(a * ipow(q, 2 * k + 1) * (1 - ipow(q, k + 1)) /
                                    ((1 + a * ipow(q, 2 * k + 1)) * (1 + a * ipow(q, 2 * k + 2))));
                },
                RPoly::x(), lin(c * (1 + a * q), -c),
                image("AltQCharlier_15", {{"a", a}}, "AltQCharlier_15", {{"a", a * q}}, 1 / (1 + a * q), 1), "always"};
    auto s = finish_symmetric(in);
    const bool small = q < 1 && a > 0;
    s.representations.push_back(make_rep(kIntegral, "0 < q < 1, a > 0", small, [a, q] {
        return lift_parts(Representation::Parts{{}, {reps::integral_15(a, q, 2)}});
    }, kDefect15));
    s.representations.push_back(make_rep(kDiscrete, "0 < q < 1, a > 0", small, [a, q] {
        return lift_parts(Representation::Parts{{reps::comb_15(a, q, 1)}, {}});
    }));
    s.positivity_text = "positive definite for 0 < q < 1, a > 0";
    s.positivity_region = [a, q] { return q < 1 && a > 0; };
    return s;
}

inline FamilySpec build_C(const Params& P, const Rational& Qin) {
    const Rational Q = check_Q(Qin), q = Q * Q;
    const Rational al = param(P, "alpha"), be = param(P, "beta");
    const std::string anc = "case C";
    check_jacobi_constraints(al, be, q, anc);
    const Rational sp = al + be + 2;
    const QCtx<Rational> c{q};
    SymSetup in{"G_alpha_beta_q", anc, "symmetric q-Jacobi G(alpha,beta,q)", P, Q,
                [c, al, be](long n) { return formulas::jacobi_sym_gamma(c, n, al, be); },
                RPoly::linear(1), lin(-(Q + 1) * sp, (Q + 1) * (be + 1)),
                image("QJacobi_23", {{"alpha", al}, {"beta", be}}, "QJacobi_23",
                      {{"alpha", (al + 1) / q - 1}, {"beta", (be + 2) / q - 1}}, (be + 1) / sp, 1),
                "beta != 1/(sqrt(q)(sqrt(q)+1)) - 1"};
    return finish_symmetric(in);
}

inline FamilySpec build_D(const Params& P, const Rational& Qin) {
    const Rational Q = check_Q(Qin), q = Q * Q;
    const Rational a = param(P, "a"), b = param(P, "b");
    const std::string anc = "case D";
    require(a * b != 0, "ab != 0", anc);
    const Rational c = 1 / (a * b * q * q * (Q - 1));
    SymSetup in{"LittleQJacobi_sym", anc, "symmetric little q-Jacobi", P, Q,
                [a, b, q](long n) {
                    if (n % 2 == 1) {
                        const long k = (n - 1) / 2;
                        return Rational(ipow(q, k) * (1 - a * ipow(q, k + 1)) * (1 - a * b * ipow(q, k + 1)) /
                                        ((1 - a * b * ipow(q, 2 * k + 1)) * (1 - a * b * ipow(q, 2 * k + 2))));
                    }
                    const long k = (n - 2) / 2;
                    return Rational(a * ipow(q, k + 1) * (1 - ipow(q, k + 1)) * (1 - b * ipow(q, k + 1)) /
                                    ((1 - a * b * ipow(q, 2 * k + 2)) * (1 - a * b * ipow(q, 2 * k + 3))));
                },
                RPoly::linear(1 / (b * q)), RPoly(),
                image("LittleQJacobi_16", {{"a", a}, {"b", b}}, "LittleQJacobi_16", {{"a", a * q}, {"b", b}},
                      (1 - a * q) / (1 - a * b * q * q), 1),
                "a != q^{-1/2}"};
    in.psi = lin(c * (1 - a * b * q * q), c * (a * q - 1));
    auto s = finish_symmetric(in);
    const bool small = q < 1 && a > 0 && a < 1 / q && b <= 1 && b != 0;
    const bool large = q > 1 && a > 1 / q && b > 1;
    s.representations.push_back(make_rep(kDiscrete, "0 < q < 1, 0 < a < 1/q, b < 1, b != 0", small, [a, b, q] {
        return lift_parts(Representation::Parts{{reps::comb_16_small(a, b, q, 1)}, {}});
    }));
    s.representations.push_back(make_rep(kIntegral, "0 < q < 1, 0 < a < 1/q, b < 1, b != 0 (q-integral)", small, [a, b, q] {
        return lift_parts(Representation::Parts{{}, {reps::jackson_16_small(a, b, q, 1)}});
    }));
    s.representations.push_back(make_rep(kDiscrete, "q > 1, a > 1/q, b >= 1", large, [a, b, q] {
        return lift_parts(Representation::Parts{{reps::comb_16_large(a, b, q, 1)}, {}});
    }));
    s.representations.push_back(make_rep(kIntegral, "q > 1, a > 1/q, b > 1 (q-integral)", large, [a, b, q] {
        return lift_parts(Representation::Parts{{}, {reps::jackson_16_large(a, b, q, 1)}});
    }));
    s.positivity_text = "positive definite for 0 < q < 1, 0 < a < 1/q, b < 1, b != 0 or q > 1, a > 1/q, b >= 1";
    s.positivity_region = [a, b, q] {
        return (q < 1 && a > 0 && a < 1 / q && b < 1 && b != 0) || (q > 1 && a > 1 / q && b >= 1);
    };
    return s;
}

inline FamilySpec build_E(const Params& P, const Rational& Qin) {
    const Rational Q = check_Q(Qin), q = Q * Q;
    const Rational mu = param(P, "mu");
    const std::string anc = "case E";
    require(mu != 0, "mu != 0", anc);
    const Rational c = -1 / (mu * q * (Q - 1));
    SymSetup in{"QCharlierII_sym", anc, "symmetric q-Charlier II", P, Q,
                [mu, q](long n) {
                    if (n % 2 == 1) {
                        const long k = (n - 1) / 2;
                        return Rational(-ipow(q, 2 * k) * (1 - mu * ipow(q, k)) /
                                        ((1 - mu * ipow(q, 2 * k)) * (1 - mu * ipow(q, 2 * k + 1))));
                    }
                    const long k = (n - 2) / 2;
                    return Rational(ipow(q, k) * (1 - ipow(q, k + 1)) /
                                    ((1 - mu * ipow(q, 2 * k + 1)) * (1 - mu * ipow(q, 2 * k + 2))));
                },
                RPoly::linear(1 / (mu * q)), lin(c * (mu * q - 1), -c),
                image("QCharlierII_17", {{"mu", mu}}, "QCharlierII_17", {{"mu", mu * q}}, 1 / (mu * q - 1), q),
                "always"};
    auto s = finish_symmetric(in);
    s.representations.push_back(make_rep(kDiscrete, "q > 1, mu < 0", q > 1 && mu < 0, [mu, q] {
        return lift_parts(Representation::Parts{{reps::comb_17(mu, q)}, {}});
    }));
    return s;
}

inline FamilySpec build_F(const Params& P, const Rational& Qin) {
    const Rational Q = check_Q(Qin), q = Q * Q;
    const Rational om = param(P, "omega");
    const std::string anc = "case F";
    const Rational Q3 = Q * Q * Q;
    SymSetup in{"T_omega_q", anc, "Brenke-type symmetric form T(omega,q)", P, Q,
                [om, q, Q](long n) {
                    if (n % 2 == 1) {
                        const long k = (n - 1) / 2;
                        return Rational(ipow(Q, -4 * k - 3) * (1 - om * ipow(q, k)));
                    }
                    const long k = (n - 2) / 2;
                    return Rational(ipow(Q, -4 * k - 5) * (1 - ipow(q, k + 1)));
                },
                RPoly::linear(-om / Q3), lin(-1 / (Q - 1), -(om - 1) / (Q3 * (Q - 1))),
                image("GenStieltjesWigert_18", {{"omega", om}}, "GenStieltjesWigert_18", {{"omega", om * q}},
                      (1 - om) / Q3, 1 / q),
                "omega != sqrt(q)"};
    auto s = finish_symmetric(in);
    s.representations.push_back(make_rep(kDiscrete, "q > 1, omega > 1", q > 1 && om > 1, [om, Q] {
        return lift_parts(Representation::Parts{{reps::comb_18(om, Q)}, {}});
    }));
    s.representations.push_back(make_rep(kIntegral, "0 < q < 1, 0 < omega < 1", q < 1 && om > 0 && om < 1, [om, Q] {
        return lift_parts(Representation::Parts{{}, {reps::riemann_18(om, Q)}});
    }));
    s.representations.push_back(make_rep(kIntegral, "0 < q < 1, omega = 0", q < 1 && om == 0, [Q] {
        return lift_parts(Representation::Parts{{}, {reps::gauss_18(Q)}});
    }));
    s.positivity_text = "positive definite for 0 < q < 1, omega < 1";
    s.positivity_region = [om, q] { return q < 1 && om < 1; };
    return s;
}

inline std::vector<FamilyDef> make_catalog() {
    std::vector<FamilyDef> c;
    auto add = [&](std::string name, std::string anchor, std::string title, bool sym, bool sqrt_prim,
                   std::vector<ParamInfo> params, std::vector<std::string> constraints, std::string class_one,
                   std::function<FamilySpec(const Params&, const Rational&)> build, std::vector<Instance> samples) {
        FamilyDef d;
        d.name = std::move(name);
        d.anchor = std::move(anchor);
        d.title = std::move(title);
        d.symmetric = sym;
        d.sqrtq_primitive = sqrt_prim;
        d.params = std::move(params);
        d.constraint_text = std::move(constraints);
        d.class_one_text = std::move(class_one);
        d.provenance = {d.anchor};
        if (!sym) d.provenance.push_back(d.anchor.rfind("case 1.", 0) == 0 ? "Table 1" : "Table 2");
        d.build = std::move(build);
        d.samples = std::move(samples);
        c.push_back(std::move(d));
    };
    // Classical (primitive q unless noted)
    add("U_11", "case 1.1", "U(q)", false, false, {}, {}, "", build_11,
        {inst({}, 2), inst({}, 3), inst({}, R(1, 2)), inst({}, R(5, 2)), inst({}, R(2, 3))});
    add("LittleQLaguerre_12", "case 1.2", "little q-Laguerre L(a,q)", false, false, {{"a"}},
        {"a != 0", "a != q^{-n-1}, n >= 0"}, "", build_12,
        {inst({{"a", R(1, 2)}}, R(1, 2)), inst({{"a", R(1, 3)}}, R(1, 3)), inst({{"a", R(3, 2)}}, R(1, 2)),
         inst({{"a", -1}}, 2), inst({{"a", -2}}, 3), inst({{"a", R(-1, 2)}}, R(5, 2)), inst({{"a", 1}}, R(1, 3))});
    add("Wall_13", "case 1.3", "Wall W(b,q)", false, false, {{"b"}}, {"b != 0", "b != q^{-n}, n >= 0"}, "", build_13,
        {inst({{"b", R(1, 3)}}, R(1, 2)), inst({{"b", R(1, 2)}}, R(1, 3)), inst({{"b", R(1, 3)}}, 2),
         inst({{"b", -1}}, 3), inst({{"b", R(2, 3)}}, R(5, 2))});
    add("GenQinvLaguerre_14", "case 1.4", "generalized q^{-1}-Laguerre U^(alpha)(b,q)", false, false,
        {{"alpha", true}, {"b"}}, {"b != 0", "b != q^{n+1+alpha}, n >= 0", "alpha integer in exact mode"}, "", build_14,
        {inst({{"alpha", 0}, {"b", 1}}, R(1, 2)), inst({{"alpha", 1}, {"b", 1}}, R(1, 2)),
         inst({{"alpha", 0}, {"b", 2}}, R(1, 3)), inst({{"alpha", 0}, {"b", R(3, 2)}}, 2),
         inst({{"alpha", 1}, {"b", 3}}, 2), inst({{"alpha", 0}, {"b", 2}}, 3)});
    add("AltQCharlier_15", "case 1.5", "alternative q-Charlier A(a,q)", false, false, {{"a"}},
        {"a != 0", "a != -q^{-n}, n >= 0"}, "", build_15,
        {inst({{"a", 1}}, R(1, 2)), inst({{"a", R(1, 3)}}, R(1, 2)), inst({{"a", 2}}, R(1, 3)), inst({{"a", -3}}, 2),
         inst({{"a", R(1, 2)}}, 3)});
    add("LittleQJacobi_16", "case 1.6", "little q-Jacobi U(a,b,q)", false, false, {{"a"}, {"b"}},
        {"ab != 0", "a != q^{-n-1}", "b != q^{-n-1}", "ab != q^{-n}, n >= 0"}, "", build_16,
        {inst({{"a", R(1, 2)}, {"b", R(1, 2)}}, R(1, 2)), inst({{"a", 1}, {"b", -1}}, R(1, 3)),
         inst({{"a", R(3, 2)}, {"b", R(1, 3)}}, R(1, 2)), inst({{"a", 1}, {"b", 2}}, 2),
         inst({{"a", 2}, {"b", 3}}, 2), inst({{"a", 1}, {"b", R(3, 2)}}, 3)});
    add("QCharlierII_17", "case 1.7", "q-Charlier II U(mu,q)", false, false, {{"mu"}},
        {"mu != 0", "mu != q^{-n}, n >= 0"}, "", build_17,
        {inst({{"mu", -1}}, 2), inst({{"mu", -2}}, 3), inst({{"mu", R(-1, 2)}}, R(5, 2)), inst({{"mu", 3}}, R(1, 2)),
         inst({{"mu", R(1, 3)}}, R(2, 3))});
    add("GenStieltjesWigert_18", "case 1.8", "generalized Stieltjes-Wigert S(omega,q)", false, true, {{"omega"}},
        {"omega != q^{-n}, n >= 0"}, "", build_18,
        {inst({{"omega", 3}}, R(3, 2)), inst({{"omega", 2}}, 2), inst({{"omega", R(5, 2)}}, R(3, 2)),
         inst({{"omega", R(1, 2)}}, R(1, 2)), inst({{"omega", R(1, 3)}}, R(2, 3)), inst({{"omega", 0}}, R(1, 2)),
         inst({{"omega", 0}}, R(2, 3)), inst({{"omega", R(-1, 2)}}, R(1, 2)), inst({{"omega", -1}}, R(2, 3))});
    add("QLaguerre_21", "case 2.1", "q-Laguerre L(alpha,q)", false, false, {{"alpha"}}, {"alpha != -[n]_q - 1, n >= 0"},
        "", build_21,
        {inst({{"alpha", R(1, 2)}}, 2), inst({{"alpha", 0}}, R(1, 2)), inst({{"alpha", R(-1, 3)}}, 3),
         inst({{"alpha", 2}}, R(2, 3)), inst({{"alpha", R(5, 4)}}, R(3, 2))});
    add("QBessel_22", "case 2.2", "q-Bessel B(alpha,q)", false, false, {{"alpha"}},
        {"alpha != (1/2)(q-1)^{-1}", "alpha != -[n]_q/2, n >= 0"}, "", build_22,
        {inst({{"alpha", R(3, 4)}}, 2), inst({{"alpha", R(1, 3)}}, R(1, 2)), inst({{"alpha", R(-1, 3)}}, 3),
         inst({{"alpha", 2}}, R(2, 3)), inst({{"alpha", R(5, 4)}}, R(3, 2))});
    add("QJacobi_23", "case 2.3", "q-Jacobi J(alpha,beta,q)", false, false, {{"alpha"}, {"beta"}},
        {"alpha + beta != (3-2q)/(q-1)", "alpha + beta != -[n]_q - 2", "beta != -[n]_q - 1",
         "alpha + beta + 2 - (beta+1) q^n + [n]_q != 0, n >= 0"},
        "", build_23,
        {inst({{"alpha", R(1, 2)}, {"beta", R(1, 3)}}, 2), inst({{"alpha", 0}, {"beta", 0}}, R(1, 2)),
         inst({{"alpha", 1}, {"beta", R(-1, 2)}}, 3), inst({{"alpha", R(-1, 3)}, {"beta", 2}}, R(2, 3)),
         inst({{"alpha", R(5, 4)}, {"beta", R(1, 5)}}, R(3, 2))});
    // Symmetric (primitive sqrt(q))
    add("H_mu_q", "case A1", "generalized q-Hermite H(mu,q)", true, true, {{"mu"}}, {"mu != -[n]_q - 1/2, n >= 0"},
        "mu != 1/(sqrt(q)(sqrt(q)+1)) - 1/2", build_A1,
        {inst({{"mu", R(1, 2)}}, 2), inst({{"mu", R(1, 3)}}, R(1, 2)), inst({{"mu", R(-1, 4)}}, R(3, 2)),
         inst({{"mu", 2}}, R(2, 3)), inst({{"mu", 0}}, 3)});
    add("U_sym", "case A2", "symmetric form with sigma u = U(q)", true, true, {}, {}, "always", build_A2,
        {inst({}, 2), inst({}, 3), inst({}, R(3, 2)), inst({}, R(1, 2)), inst({}, R(2, 3))});
    add("SV", "case A3", "symmetric little q-Laguerre SV(a,q)", true, true, {{"a"}}, {"a != 0", "a != q^{-n-1}, n >= 0"},
        "a != q^{-1/2}", build_A3,
        {inst({{"a", R(1, 2)}}, R(1, 2)), inst({{"a", 1}}, R(2, 3)), inst({{"a", -1}}, 2), inst({{"a", R(-1, 2)}}, R(3, 2)),
         inst({{"a", -2}}, 2), inst({{"a", R(1, 3)}}, R(1, 2))});
    add("Y_Brenke", "case A4", "Brenke-type symmetric form Y(b,q)", true, true, {{"b"}}, {"b != 0", "b != q^{-n}, n >= 0"},
        "b != sqrt(q)", build_A4,
        {inst({{"b", R(1, 3)}}, 2), inst({{"b", R(1, 3)}}, R(1, 2)), inst({{"b", 3}}, R(3, 2)), inst({{"b", -1}}, 2),
         inst({{"b", R(2, 5)}}, R(2, 3))});
    add("Usym_alpha_b", "case A5", "symmetric generalized q^{-1}-Laguerre", true, true, {{"alpha", true}, {"b"}},
        {"b != 0", "b != q^{n+1+alpha}, n >= 0", "alpha integer in exact mode"}, "b != q^{alpha+1/2}", build_A5,
        {inst({{"alpha", 0}, {"b", R(1, 2)}}, 2), inst({{"alpha", 1}, {"b", 3}}, R(3, 2)),
         inst({{"alpha", 0}, {"b", -1}}, 2), inst({{"alpha", 1}, {"b", -2}}, R(3, 2)),
         inst({{"alpha", 0}, {"b", R(-1, 2)}}, 3), inst({{"alpha", 0}, {"b", 1}}, R(1, 2)),
         inst({{"alpha", 1}, {"b", R(1, 2)}}, R(1, 2)), inst({{"alpha", 0}, {"b", 2}}, R(2, 3))});
    add("B_nu_q", "case B1", "symmetric q-Bessel B[nu,q]", true, true, {{"nu"}},
        {"nu != (2-q)/(q-1)", "nu != -[n]_q - 1, n >= 0"}, "always", build_B1,
        {inst({{"nu", R(1, 2)}}, 2), inst({{"nu", 0}}, R(1, 2)), inst({{"nu", R(-1, 3)}}, R(3, 2)),
         inst({{"nu", 2}}, R(2, 3)), inst({{"nu", R(7, 3)}}, 3)});
    add("AltQCharlier_sym", "case B2", "symmetric alternative q-Charlier", true, true, {{"a"}},
        {"a != 0", "a != -q^{-n}, n >= 0"}, "always", build_B2,
        {inst({{"a", 1}}, R(1, 2)), inst({{"a", R(1, 3)}}, R(2, 3)), inst({{"a", 2}}, R(1, 2)), inst({{"a", -3}}, 2),
         inst({{"a", R(1, 2)}}, 3)});
    add("G_alpha_beta_q", "case C", "symmetric q-Jacobi G(alpha,beta,q)", true, true, {{"alpha"}, {"beta"}},
        {"alpha + beta != (3-2q)/(q-1)", "alpha + beta != -[n]_q - 2", "beta != -[n]_q - 1",
         "alpha + beta + 2 - (beta+1) q^n + [n]_q != 0, n >= 0"},
        "beta != 1/(sqrt(q)(sqrt(q)+1)) - 1", build_C,
        {inst({{"alpha", R(1, 2)}, {"beta", R(1, 3)}}, 2), inst({{"alpha", 0}, {"beta", 0}}, R(1, 2)),
         inst({{"alpha", 1}, {"beta", R(-1, 2)}}, R(3, 2)), inst({{"alpha", R(-1, 3)}, {"beta", 2}}, R(2, 3)),
         inst({{"alpha", R(5, 4)}, {"beta", R(1, 5)}}, 3)});
    add("LittleQJacobi_sym", "case D", "symmetric little q-Jacobi", true, true, {{"a"}, {"b"}},
        {"ab != 0", "a != q^{-n-1}", "b != q^{-n-1}", "ab != q^{-n}, n >= 0"}, "a != q^{-1/2}", build_D,
        {inst({{"a", R(1, 2)}, {"b", R(1, 2)}}, R(1, 2)), inst({{"a", 1}, {"b", -1}}, R(2, 3)),
         inst({{"a", R(3, 2)}, {"b", R(1, 3)}}, R(1, 2)), inst({{"a", 1}, {"b", 2}}, 2),
         inst({{"a", R(1, 2)}, {"b", 3}}, R(3, 2)), inst({{"a", 2}, {"b", R(3, 2)}}, 2)});
    add("QCharlierII_sym", "case E", "symmetric q-Charlier II", true, true, {{"mu"}}, {"mu != 0", "mu != q^{-n}, n >= 0"},
        "always", build_E,
        {inst({{"mu", -1}}, 2), inst({{"mu", -2}}, R(3, 2)), inst({{"mu", R(-1, 2)}}, 3), inst({{"mu", 3}}, R(1, 2)),
         inst({{"mu", R(1, 3)}}, R(2, 3))});
    add("T_omega_q", "case F", "Brenke-type symmetric form T(omega,q)", true, true, {{"omega"}},
        {"omega != q^{-n}, n >= 0"}, "omega != sqrt(q)", build_F,
        {inst({{"omega", 3}}, 2), inst({{"omega", R(5, 2)}}, R(3, 2)), inst({{"omega", 2}}, 3),
         inst({{"omega", R(1, 3)}}, R(1, 2)), inst({{"omega", R(1, 2)}}, R(2, 3)), inst({{"omega", 0}}, R(1, 2)),
         inst({{"omega", 0}}, R(2, 3))});

    auto set_excl = [&](const std::string& name, std::function<std::optional<Params>(const Rational&)> f) {
        for (auto& d : c)
            if (d.name == name) d.excluded_point = std::move(f);
    };
    auto cite = [&](const std::string& name, const std::string& anchor) {
        for (auto& d : c)
            if (d.name == name) d.provenance.push_back(anchor);
    };
    cite("H_mu_q", "Proposition 2");
    cite("U_sym", "Proposition 3");
    cite("SV", "Proposition 4");
    cite("Usym_alpha_b", "Proposition 5");
    set_excl("H_mu_q", [](const Rational& Q) { return Params{{"mu", 1 / (Q * (Q + 1)) - R(1, 2)}}; });
    set_excl("SV", [](const Rational& Q) { return Params{{"a", 1 / Q}}; });
    set_excl("Y_Brenke", [](const Rational& Q) { return Params{{"b", Q}}; });
    set_excl("Usym_alpha_b", [](const Rational& Q) { return Params{{"alpha", 0}, {"b", Q}}; });
    set_excl("G_alpha_beta_q", [](const Rational& Q) { return Params{{"alpha", R(1, 2)}, {"beta", 1 / (Q * (Q + 1)) - 1}}; });
    set_excl("LittleQJacobi_sym", [](const Rational& Q) { return Params{{"a", 1 / Q}, {"b", R(1, 3)}}; });
    set_excl("T_omega_q", [](const Rational& Q) { return Params{{"omega", Q}}; });
    return c;
}

} // namespace detail

/// The catalog in a fixed order: eleven classical families, then the eleven symmetric ones.
inline const std::vector<FamilyDef>& catalog() {
    static const std::vector<FamilyDef> c = detail::make_catalog();
    return c;
}

inline std::vector<std::string> catalog_list() {
    std::vector<std::string> out;
    for (const auto& d : catalog()) out.push_back(d.name);
    return out;
}

inline const FamilyDef& family_def(const std::string& name) {
    for (const auto& d : catalog())
        if (d.name == name) return d;
    throw NotFound("unknown family " + name);
}

namespace detail {

inline FamilySpec instantiate_impl(const std::string& name, const Params& params, const Rational& primitive) {
    const FamilyDef& d = family_def(name);
    for (const auto& [k, v] : params) {
        const bool known = std::any_of(d.params.begin(), d.params.end(), [&](const ParamInfo& p) { return p.name == k; });
        if (!known) throw ParameterOutOfRange("unknown parameter " + k + " for " + name);
    }
    for (const auto& p : d.params)
        if (!params.count(p.name)) throw ParameterOutOfRange("missing parameter " + p.name + " for " + name);
    FamilySpec s = d.build(params, primitive);
    s.constraints = d.constraint_text;
    s.class_one_condition = d.class_one_text;
    // The stated constraints must keep every generated gamma nonzero.
    for (std::size_t n = 1; n <= kNMax; ++n)
        if (s.recurrence.gamma(n) == 0)
            throw ConstraintViolation("gamma_" + std::to_string(n) + " vanishes (" + d.anchor + ")");
    return s;
}

} // namespace detail

/// A fully wired catalog record; throws ConstraintViolation on excluded parameters.
inline FamilySpec instantiate(const std::string& name, const Params& params, const Rational& primitive) {
    return detail::instantiate_impl(name, params, primitive);
}

inline FamilySpec instantiate(const std::string& name, const Instance& at) {
    return instantiate(name, at.params, at.primitive);
}

/// Human-readable description of sigma u and x sigma u.
inline std::string sigma_image_text(const FamilySpec& s) {
    if (!s.sigma) throw NotFound(s.name + " is not a symmetric family");
    auto params = [](const Params& p) {
        std::string out;
        for (const auto& [k, v] : p) out += (out.empty() ? "" : ", ") + k + "=" + to_string(v);
        return out;
    };
    const auto& im = *s.sigma;
    std::string x = to_string(im.x_sigma.prefactor) + " * ";
    if (im.x_sigma.dilation != 1) x += "h_{" + to_string(im.x_sigma.dilation) + "} ";
    x += im.x_sigma.family + "(" + params(im.x_sigma.params) + ")";
    return "sigma u = " + im.family + "(" + params(im.params) + "); x sigma u = " + x;
}

/// Instance of the classical image family used by sigma u / x sigma u.
inline FamilySpec image_spec(const FamilySpec& s, bool x_sigma) {
    if (!s.sigma) throw NotFound(s.name + " is not a symmetric family");
    const std::string& fam = x_sigma ? s.sigma->x_sigma.family : s.sigma->family;
    const Params& p = x_sigma ? s.sigma->x_sigma.params : s.sigma->params;
    const bool sqrt_prim = family_def(fam).sqrtq_primitive;
    return instantiate(fam, p, sqrt_prim ? *s.sqrtq : s.q);
}

/// Seeded random valid instance: small rationals, retried until the constraints hold.
inline Instance random_instance(const std::string& name, std::mt19937_64& rng) {
    const FamilyDef& d = family_def(name);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6), pick(0, 5);
    const Rational prims[] = {2, 3, make_rational(1, 2), make_rational(2, 3), make_rational(3, 2), make_rational(5, 2)};
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Instance in;
        in.primitive = prims[pick(rng)];
        for (const auto& p : d.params) {
            if (p.integer) in.params[p.name] = Rational(num(rng) % 3 + 1);
            else in.params[p.name] = make_rational(num(rng), den(rng));
        }
        try {
            FamilySpec s = instantiate(name, in);
            if (d.excluded_point) {
                auto ex = d.excluded_point(*s.sqrtq);
                bool hit = ex.has_value();
                if (ex)
                    for (const auto& [k, v] : *ex)
                        if (!in.params.count(k) || in.params.at(k) != v) hit = false;
                if (hit) continue;
            }
            return in;
        } catch (const Error&) {
        }
    }
    throw InternalError("no valid random instance for " + name);
}

/// Named derived family: h_{1/a} u with the dilation-covariant recurrence and Pearson pair.
struct DerivedSpec {
    std::string label;
    RForm moments;
    Recurrence<Rational> recurrence;
    PearsonPair pearson;
};

inline DerivedSpec dilated_spec(const FamilySpec& s, const Rational& a) {
    if (a == 0) throw ZeroDilation("dilation by zero");
    DerivedSpec d;
    d.label = "h_{1/" + to_string(a) + "} " + s.name;
    d.moments = dilate_form(s.moments, Rational(1 / a));
    auto rec = s.recurrence;
    d.recurrence.beta = [rec, a](std::size_t n) { return Rational(rec.beta(n) / a); };
    d.recurrence.gamma = [rec, a](std::size_t n) { return Rational(rec.gamma(n) / (a * a)); };
    d.recurrence.source = d.label;
    d.pearson = dilate_pair(s.pearson, a);
    d.pearson.label = d.label;
    return d;
}

/// h_{1/sqrt(q)} Y(sqrt(q), q), the discrete sqrt(q)-Hermite form.
inline DerivedSpec dilated_brenke_at_sqrtq(const Rational& Q) {
    return dilated_spec(instantiate("Y_Brenke", {{"b", Q}}, Q), Q);
}

// ---------------------------------------------------------------------------
// Numeric evaluation of representations

struct RepMoments {
    std::vector<BigFloat> values;   // n = 0..N
    BigFloat max_imag{0};
    std::size_t terms = 0;
};

inline RepMoments representation_moments(const Representation& rep, std::size_t N, const TruncationPolicy& policy) {
    if (!rep.applies) throw ParameterOutOfRange("representation valid only for " + rep.region);
    const auto parts = rep.build();
    RepMoments out;
    out.values.assign(N + 1, BigFloat(0));
    for (const auto& c : parts.combs) {
        const auto cm = comb_moments(c, N, policy);
        out.terms += cm.terms;
        for (std::size_t n = 0; n <= N; ++n) {
            out.values[n] += cm.moments[n].re;
            out.max_imag = std::max(out.max_imag, BigFloat(abs(cm.moments[n].im)));
        }
    }
    for (const auto& w : parts.weights) {
        const auto wm = weight_moments(w, N, policy);
        out.terms += wm.nodes;
        for (std::size_t n = 0; n <= N; ++n) out.values[n] += wm.values[n];
    }
    return out;
}

// ---------------------------------------------------------------------------
// q -> 1 continuity

struct Q1Report {
    std::string family;
    BigFloat epsilon;
    BigFloat max_relative_deviation{0};
    std::size_t worst_n = 0;
    std::string worst_quantity;
};

inline const std::vector<std::string>& q1_families() {
    static const std::vector<std::string> f{"H_mu_q", "B_nu_q", "G_alpha_beta_q", "QLaguerre_21", "QBessel_22", "QJacobi_23"};
    return f;
}

/**
 * Evaluates beta_n and gamma_n at q = 1 + eps and q = 1 - eps and compares with the same
 * formula with [k]_q -> k and q-powers -> 1. Uses the family's first curated sample.
 */
inline Q1Report q1_limit_check(const std::string& name, const BigFloat& eps, std::size_t n_max = 10) {
    const FamilyDef& d = family_def(name);
    const Params& P = d.samples.front().params;
    auto pv = [&](const std::string& k) { return to_bf(P.at(k)); };
    Q1Report rep;
    rep.family = name;
    rep.epsilon = eps;
    using F = std::function<BigFloat(const QCtx<BigFloat>&, long)>;
    std::vector<std::pair<std::string, F>> qty;
    if (name == "QLaguerre_21") {
        const BigFloat al = pv("alpha");
        qty = {{"beta", [al](const QCtx<BigFloat>& c, long n) { return formulas::laguerre_beta(c, n, al); }},
               {"gamma", [al](const QCtx<BigFloat>& c, long n) { return formulas::laguerre_gamma(c, n + 1, al); }}};
    } else if (name == "QBessel_22") {
        const BigFloat al = pv("alpha");
        qty = {{"beta", [al](const QCtx<BigFloat>& c, long n) { return formulas::bessel_beta(c, n, al); }},
               {"gamma", [al](const QCtx<BigFloat>& c, long n) { return formulas::bessel_gamma(c, n + 1, al); }}};
    } else if (name == "QJacobi_23") {
        const BigFloat al = pv("alpha"), be = pv("beta");
        qty = {{"beta", [al, be](const QCtx<BigFloat>& c, long n) { return formulas::jacobi_beta(c, n, al, be); }},
               {"gamma", [al, be](const QCtx<BigFloat>& c, long n) { return formulas::jacobi_gamma(c, n + 1, al, be); }}};
    } else if (name == "H_mu_q") {
        const BigFloat mu = pv("mu");
        qty = {{"gamma", [mu](const QCtx<BigFloat>& c, long n) { return formulas::hermite_sym_gamma(c, n + 1, mu); }}};
    } else if (name == "B_nu_q") {
        const BigFloat nu = pv("nu");
        qty = {{"gamma", [nu](const QCtx<BigFloat>& c, long n) { return formulas::bessel_sym_gamma(c, n + 1, nu); }}};
    } else if (name == "G_alpha_beta_q") {
        const BigFloat al = pv("alpha"), be = pv("beta");
        qty = {{"gamma", [al, be](const QCtx<BigFloat>& c, long n) { return formulas::jacobi_sym_gamma(c, n + 1, al, be); }}};
    } else {
        throw NotFound(name + " has no stated q -> 1 limit");
    }
    const QCtx<BigFloat> lim{BigFloat(1), true};
    for (int side = -1; side <= 1; side += 2) {
        const QCtx<BigFloat> c{BigFloat(1 + side * eps), false};
        for (const auto& [label, f] : qty) {
            for (std::size_t n = 0; n < n_max; ++n) {
                const BigFloat exact = f(lim, static_cast<long>(n));
                const BigFloat dev = abs(f(c, static_cast<long>(n)) - exact) / std::max(BigFloat(1), BigFloat(abs(exact)));
                if (dev > rep.max_relative_deviation) {
                    rep.max_relative_deviation = dev;
                    rep.worst_n = label == "gamma" ? n + 1 : n;
                    rep.worst_quantity = label;
                }
            }
        }
    }
    return rep;
}

} // namespace qform
