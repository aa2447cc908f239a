#pragma once

/**
 * @file qnumerics.hpp
 * @brief q-Pochhammer symbols, the q-binomial sum, the q-Mellin integral, double-exponential
 *        quadrature, Jackson sums and moments of weights.
 *
 * Everything numeric runs at the current MPFR default precision. Callers set it with a
 * PrecisionGuard (P + 20 guard digits) before building policies or evaluating.
 */

#include "series.hpp"

#include <boost/math/constants/constants.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qform {

/// (a; q)_n for finite n, exact.
inline Rational qpoch(const Rational& a, const Rational& q, std::size_t n) {
    Rational r = 1, p = a;
    for (std::size_t k = 0; k < n; ++k) {
        r *= 1 - p;
        p *= q;
    }
    return r;
}

/// (a; q)_n for finite n over BigFloat or ComplexBF.
template <class T>
T qpoch_n(const T& a, const T& q, std::size_t n) {
    T r(1), p = a;
    for (std::size_t k = 0; k < n; ++k) {
        r *= T(1) - p;
        p *= q;
    }
    return r;
}

/**
 * (a; q)_inf for |q| < 1. Stops once the tail bound
 * sum_{k>=K} |a||q|^k / (1 - |a||q|^k) <= r / ((1-|q|)(1-r)), r = |a||q|^K, drops below eps.
 */
inline BigFloat qpoch_inf(const BigFloat& a, const BigFloat& q, const TruncationPolicy& policy,
                          std::size_t* terms = nullptr) {
    const BigFloat aq = abs(q);
    if (aq >= 1) throw DivergentProduct("infinite q-Pochhammer needs |q| < 1");
    BigFloat r(1), p = a;
    const BigFloat one_minus_q = 1 - aq;
    for (std::size_t k = 0; k < policy.k_max; ++k) {
        const BigFloat ap = abs(p);
        if (ap < BigFloat(0.5)) {
            const BigFloat bound = ap / (one_minus_q * (1 - ap));
            if (bound < policy.epsilon_rel) {
                if (terms) *terms = k;
                return r;
            }
        }
        r *= 1 - p;
        if (r == 0) {
            if (terms) *terms = k + 1;
            return r;
        }
        p *= q;
    }
    throw NonConvergent(policy.k_max, "infinite q-Pochhammer");
}

inline BigFloat qpoch_inf(const Rational& a, const Rational& q, const TruncationPolicy& policy) {
    return qpoch_inf(to_bf(a), to_bf(q), policy);
}

/// sum_k (a;q)_k/(q;q)_k z^k, the left side of the q-binomial theorem.
inline BigFloat qbinomial_sum(const BigFloat& a, const BigFloat& z, const BigFloat& q, const TruncationPolicy& policy) {
    if (abs(q) >= 1 || abs(z) >= 1) throw ParameterOutOfRange("q-binomial sum needs |z| < 1 and |q| < 1");
    BigFloat term(1), sum(1), qk(1);
    int quiet = 0;
    for (std::size_t k = 0; k < policy.k_max; ++k) {
        // term_{k+1} = term_k (1 - a q^k) / (1 - q^{k+1}) z
        const BigFloat next_q = qk * q;
        term *= (1 - a * qk) / (1 - next_q) * z;
        qk = next_q;
        sum += term;
        quiet = abs(term) <= policy.epsilon_rel * abs(sum) ? quiet + 1 : 0;
        if (quiet >= 2) return sum;
    }
    throw NonConvergent(policy.k_max, "q-binomial sum");
}

/// Right side of the q-binomial theorem, (az;q)_inf/(z;q)_inf.
inline BigFloat qbinomial_product(const BigFloat& a, const BigFloat& z, const BigFloat& q, const TruncationPolicy& policy) {
    return qpoch_inf(a * z, q, policy) / qpoch_inf(z, q, policy);
}

// ---------------------------------------------------------------------------
// Quadrature

struct QuadratureResult {
    std::vector<BigFloat> values;
    std::size_t nodes = 0;
    int levels = 0;
};

/// Vector-valued integrand: fills out[0..dim) at one point.
using VectorIntegrand = std::function<void(const BigFloat& x, std::vector<BigFloat>& out)>;

namespace detail {

/**
 * Trapezoid sums of g(t) on a ladder of halving steps, with the outer range fixed at
 * level 0. Every node is evaluated once; level L reuses the sum of all coarser nodes.
 * `node` maps t to (x, jacobian) or nullopt when the point is out of range.
 */
template <class Node>
QuadratureResult de_ladder(const VectorIntegrand& f, std::size_t dim, const TruncationPolicy& policy, Node&& node,
                           const BigFloat& t_right_cap, const std::string& what) {
    const BigFloat& tiny = policy.epsilon_rel;
    std::vector<BigFloat> raw(dim, BigFloat(0)), vals(dim);
    QuadratureResult res;
    auto add = [&](const BigFloat& t, bool& negligible) {
        auto nj = node(t);
        if (!nj) {
            negligible = true;
            return;
        }
        f(nj->first, vals);
        ++res.nodes;
        negligible = true;
        for (std::size_t i = 0; i < dim; ++i) {
            const BigFloat c = vals[i] * nj->second;
            raw[i] += c;
            if (abs(c) > tiny * abs(raw[i]) && c != 0) negligible = false;
        }
    };
    BigFloat h(0.5);
    bool neg = false;
    add(BigFloat(0), neg);
    // Level 0: walk outwards until two consecutive negligible nodes.
    BigFloat t_left(0), t_right(0);
    for (int side = -1; side <= 1; side += 2) {
        int quiet = 0;
        BigFloat t(0);
        for (;;) {
            t += h;
            if (side > 0 && t > t_right_cap) throw QuadratureNonConvergent(res.nodes, what + ": integrand not negligible at the upper cut");
            if (t > 6) throw QuadratureNonConvergent(res.nodes, what + ": integrand not negligible at the lower cut");
            bool n = false;
            add(side * t, n);
            quiet = n ? quiet + 1 : 0;
            if (quiet >= 2) break;
        }
        (side < 0 ? t_left : t_right) = t;
    }
    std::vector<BigFloat> prev(dim);
    for (std::size_t i = 0; i < dim; ++i) prev[i] = raw[i] * h;
    const int max_levels = 14;
    for (int level = 1; level <= max_levels; ++level) {
        h /= 2;
        for (BigFloat t = h; t <= t_right; t += 2 * h) {
            bool n = false;
            add(t, n);
        }
        for (BigFloat t = h; t <= t_left; t += 2 * h) {
            bool n = false;
            add(-t, n);
        }
        bool done = level >= 3;
        std::vector<BigFloat> cur(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            cur[i] = raw[i] * h;
            const BigFloat scale = std::max(abs(cur[i]), BigFloat(tiny * tiny));
            if (abs(cur[i] - prev[i]) > policy.epsilon_rel * scale) done = false;
        }
        prev = std::move(cur);
        res.levels = level;
        if (done) {
            res.values = std::move(prev);
            return res;
        }
    }
    throw QuadratureNonConvergent(res.nodes, what + ": step halving did not settle");
}

} // namespace detail

/**
 * Integral of f over (lo, inf) through x = lo + e^s followed by the sinh-sinh map
 * s = sinh(pi/2 sinh t). Handles algebraic endpoint behaviour at lo and log-normal or
 * faster decay at infinity. The right tail is cut near s = 10^4.
 */
inline QuadratureResult integrate_half_line(const VectorIntegrand& f, std::size_t dim, const BigFloat& lo,
                                            const TruncationPolicy& policy, const std::string& what = "integral") {
    const BigFloat half_pi = boost::math::constants::half_pi<BigFloat>();
    auto node = [&](const BigFloat& t) -> std::optional<std::pair<BigFloat, BigFloat>> {
        const BigFloat st = sinh(t);
        const BigFloat s = sinh(half_pi * st);
        const BigFloat ds = half_pi * cosh(t) * cosh(half_pi * st);
        const BigFloat es = exp(s);
        if (es == 0) return std::nullopt;
        return std::make_pair(lo + es, es * ds);
    };
    // s reaches 10^4 at t ~ 2.55
    return detail::de_ladder(f, dim, policy, node, BigFloat(2.6), what);
}

/// Tanh-sinh quadrature on the finite interval (a, b).
inline QuadratureResult integrate_interval(const VectorIntegrand& f, std::size_t dim, const BigFloat& a,
                                           const BigFloat& b, const TruncationPolicy& policy,
                                           const std::string& what = "integral") {
    const BigFloat half_pi = boost::math::constants::half_pi<BigFloat>();
    const BigFloat width = b - a;
    auto node = [&](const BigFloat& t) -> std::optional<std::pair<BigFloat, BigFloat>> {
        const BigFloat u = half_pi * sinh(t);
        // x - a = width / (1 + e^{-2u}), accurate near a; symmetric form near b.
        const BigFloat e = exp(-2 * u);
        const BigFloat x = t <= 0 ? a + width / (1 + e) : b - width * e / (1 + e);
        if (x <= a || x >= b) return std::nullopt;
        const BigFloat ch = cosh(u);
        const BigFloat w = width / 2 * half_pi * cosh(t) / (ch * ch);
        return std::make_pair(x, w);
    };
    return detail::de_ladder(f, dim, policy, node, BigFloat(6), what);
}

/// Jackson sum int_0^c f d_p x = c (1-p) sum_k f(c p^k) p^k for 0 < p < 1, vector valued.
inline QuadratureResult jackson_integral(const VectorIntegrand& f, std::size_t dim, const BigFloat& c,
                                         const BigFloat& p, const TruncationPolicy& policy,
                                         const std::string& what = "Jackson integral") {
    if (!(p > 0 && p < 1)) throw ParameterOutOfRange("Jackson base must lie in (0, 1)");
    std::vector<BigFloat> sum(dim, BigFloat(0)), vals(dim);
    QuadratureResult res;
    BigFloat pk(1);
    int quiet = 0;
    for (std::size_t k = 0; k < policy.k_max; ++k) {
        const BigFloat x = c * pk;
        f(x, vals);
        ++res.nodes;
        bool small = true;
        for (std::size_t i = 0; i < dim; ++i) {
            const BigFloat term = vals[i] * pk;
            sum[i] += term;
            if (term != 0 && abs(term) > policy.epsilon_rel * abs(sum[i])) small = false;
        }
        quiet = small ? quiet + 1 : 0;
        if (quiet >= 2 && k > 2) {
            for (auto& s : sum) s *= c * (1 - p);
            res.values = std::move(sum);
            return res;
        }
        pk *= p;
    }
    throw QuadratureNonConvergent(res.nodes, what);
}

// ---------------------------------------------------------------------------
// The q-Mellin integral int_0^inf t^{x-1} (-at;q)_inf/(-t;q)_inf dt

namespace detail {

inline void check_mellin(const Rational& x, const Rational& a, const Rational& q) {
    if (!(q > 0 && q < 1)) throw ParameterOutOfRange("q-Mellin integral needs 0 < q < 1");
    if (!(x > 0)) throw ParameterOutOfRange("q-Mellin integral needs x > 0");
    if (!(to_bf(abs(a)) < pow(to_bf(q), to_bf(x))))
        throw ParameterOutOfRange("q-Mellin integral needs |a| < q^x");
}

} // namespace detail

/// Closed form of the q-Mellin integral; the integer branch is used when x is a positive integer.
inline BigFloat q_mellin_integral(const Rational& x, const Rational& a, const Rational& q, const TruncationPolicy& policy) {
    detail::check_mellin(x, a, q);
    const BigFloat qb = to_bf(q), ab = to_bf(a), xb = to_bf(x);
    if (denominator(x) == 1) {
        const long m = static_cast<long>(numerator(x));
        const BigFloat qi = 1 / qb;
        // (-q)^m/(1-q^m) (q^{-1};q^{-1})_m/(a q^{-1};q^{-1})_m ln(1/q)
        const BigFloat qm = pow(qb, m);
        const BigFloat sign = m % 2 ? BigFloat(-1) : BigFloat(1);
        return sign * qm / (1 - qm) * qpoch_n(qi, qi, static_cast<std::size_t>(m)) /
               qpoch_n(BigFloat(ab * qi), qi, static_cast<std::size_t>(m)) * log(qi);
    }
    const BigFloat pi = boost::math::constants::pi<BigFloat>();
    return pi / sin(pi * xb) * qpoch_inf(ab, qb, policy) / qpoch_inf(BigFloat(ab * pow(qb, -xb)), qb, policy) *
           qpoch_inf(BigFloat(pow(qb, 1 - xb)), qb, policy) / qpoch_inf(qb, qb, policy);
}

/// The same integral by quadrature.
inline QuadratureResult q_mellin_quadrature(const Rational& x, const Rational& a, const Rational& q,
                                            const TruncationPolicy& policy) {
    detail::check_mellin(x, a, q);
    const BigFloat qb = to_bf(q), ab = to_bf(a), xm1 = to_bf(x) - 1;
    VectorIntegrand f = [&](const BigFloat& t, std::vector<BigFloat>& out) {
        out[0] = pow(t, xm1) * qpoch_inf(BigFloat(-ab * t), qb, policy) / qpoch_inf(BigFloat(-t), qb, policy);
    };
    return integrate_half_line(f, 1, BigFloat(0), policy, "q-Mellin integral");
}

// ---------------------------------------------------------------------------
// Weights

/// offset + coeff * ln(num)/ln(den); coeff = 0 gives a plain rational.
struct LogExponent {
    Rational offset = 0;
    Rational coeff = 0;
    Rational num = 1;
    Rational den = 2;

    BigFloat value() const {
        BigFloat v = to_bf(offset);
        if (coeff != 0) {
            if (num <= 0 || den <= 0 || den == 1) throw ParameterOutOfRange("logarithmic exponent out of range");
            v += to_bf(coeff) * log(to_bf(num)) / log(to_bf(den));
        }
        return v;
    }
    std::string str() const {
        std::string s = to_string(offset);
        if (coeff != 0) s += " + (" + to_string(coeff) + ") ln(" + to_string(num) + ")/ln(" + to_string(den) + ")";
        return s;
    }
};

/// (coef x^power; base)_inf in the numerator, or in the denominator.
struct PochFactor {
    Rational coef;
    int power = 1;
    Rational base;
    bool denominator = false;
};

/**
 * A weight on (0, inf), (lower, inf) or a Jackson lattice:
 * x^exponent * prod (coef x^k; base)_inf^{+-1} * exp(-ln^2 x / (2 ln(1/g))).
 * With symmetric_lift the weight is written in t = x^2 and stands for |x| V(x^2) on the
 * real line, so the form's moment 2n is the weight's moment n and odd moments vanish.
 */
struct WeightDescriptor {
    enum class Measure { Lebesgue, Jackson };

    Measure measure = Measure::Lebesgue;
    LogExponent exponent;
    std::vector<PochFactor> pochs;
    std::optional<Rational> gauss_q;   // g in exp(-ln^2 x/(2 ln(1/g)))
    Rational lower = 0;                // Lebesgue lower end
    Rational upper = 0;                // Jackson upper end
    Rational jackson_base = 0;
    Rational mass = 1;                 // share of the total mass carried by this part
    std::function<BigFloat()> explicit_constant;   // printed constant; otherwise K = mass / int w
    bool symmetric_lift = false;
    std::string formula;

    BigFloat density(const BigFloat& x, const BigFloat& exp_value, const TruncationPolicy& policy) const {
        BigFloat w = exp_value == 0 ? BigFloat(1) : pow(x, exp_value);
        for (const auto& p : pochs) {
            const BigFloat arg = to_bf(p.coef) * (p.power == 1 ? x : pow(x, p.power));
            const BigFloat v = qpoch_inf(arg, to_bf(p.base), policy);
            if (p.denominator) {
                if (v == 0) throw ZeroDenominator("weight pole at x = " + to_string(x, 10));
                w /= v;
            } else {
                w *= v;
            }
        }
        if (gauss_q) {
            const BigFloat lx = log(x);
            w *= exp(-lx * lx / (2 * log(1 / to_bf(*gauss_q))));
        }
        return w;
    }
};

/// Moments 0..N of a weight part (of the form u, after any lift), normalized per the descriptor.
inline QuadratureResult weight_moments(const WeightDescriptor& w, std::size_t N, const TruncationPolicy& policy) {
    const std::size_t inner = w.symmetric_lift ? N / 2 : N;
    const std::size_t dim = inner + 1;
    const BigFloat e = w.exponent.value();
    VectorIntegrand f = [&](const BigFloat& x, std::vector<BigFloat>& out) {
        BigFloat v = w.density(x, e, policy);
        for (std::size_t n = 0; n < dim; ++n) {
            out[n] = v;
            v *= x;
        }
    };
    QuadratureResult raw;
    if (w.measure == WeightDescriptor::Measure::Jackson)
        raw = jackson_integral(f, dim, to_bf(w.upper), to_bf(w.jackson_base), policy, w.formula);
    else
        raw = integrate_half_line(f, dim, to_bf(w.lower), policy, w.formula);
    BigFloat scale;
    if (w.explicit_constant) {
        scale = w.explicit_constant();
    } else {
        if (raw.values[0] == 0) throw ZeroDenominator("weight with zero mass: " + w.formula);
        scale = to_bf(w.mass) / raw.values[0];
    }
    QuadratureResult out;
    out.nodes = raw.nodes;
    out.levels = raw.levels;
    out.values.assign(N + 1, BigFloat(0));
    for (std::size_t n = 0; n <= N; ++n) {
        if (w.symmetric_lift) {
            if (n % 2 == 0) out.values[n] = raw.values[n / 2] * scale;
        } else {
            out.values[n] = raw.values[n] * scale;
        }
    }
    return out;
}

} // namespace qform
