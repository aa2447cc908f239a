#pragma once

/**
 * @file pearson.hpp
 * @brief The q-Pearson equation H_b(Phi u) + Psi u = 0: residuals, moment recursion,
 *        class criterion and class reduction.
 */

#include "form.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qform {

/**
 * A pair (Phi, Psi) together with the base b of the Hahn operator. For the symmetric
 * families b is sqrt(q), so every coefficient stays rational. Phi is kept monic.
 */
struct PearsonPair {
    FactoredPoly phi;
    RPoly psi;
    Rational base;
    std::string label;

    /// Normalizes Phi to be monic (dividing Psi by the same constant) and factors it.
    static PearsonPair make(const RPoly& phi, const RPoly& psi, const Rational& base, std::string label = "") {
        if (phi.is_zero()) throw ShapeViolation("Phi must be nonzero");
        if (psi.degree() < 1) throw ShapeViolation("Psi must have degree >= 1");
        QParam check(base);
        (void)check;
        const Rational lead = phi.lead();
        return {FactoredPoly::from_dense(phi / lead), psi / lead, base, std::move(label)};
    }

    const RPoly& phi_dense() const { return phi.dense(); }

    /// s = max(deg Psi - 1, deg Phi - 2), floored at 0.
    int class_estimate() const { return std::max({psi.degree() - 1, phi.degree() - 2, 0}); }
};

inline std::string to_string(const PearsonPair& p) {
    return "Phi = " + to_string(p.phi_dense()) + ", Psi = " + to_string(p.psi) + ", base = " + to_string(p.base);
}

/// Phi odd and Psi even.
inline bool has_symmetric_parity(const PearsonPair& p) {
    for (std::size_t k = 0; k < p.phi_dense().size(); k += 2)
        if (p.phi_dense().coeff(k) != 0) return false;
    for (std::size_t k = 1; k < p.psi.size(); k += 2)
        if (p.psi.coeff(k) != 0) return false;
    return true;
}

/// Moments 0..N of H_b(Phi u) + Psi u.
inline std::vector<Rational> pearson_residual(const PearsonPair& pair, const RForm& u, std::size_t N) {
    const RPoly& phi = pair.phi_dense();
    std::vector<Rational> out;
    out.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        Rational acc = 0;
        if (n > 0) {
            Rational s = 0;
            for (std::size_t k = 0; k < phi.size(); ++k)
                if (phi.coeff(k) != 0) s += phi.coeff(k) * u.moment(n - 1 + k);
            acc -= bracket_sum(n, pair.base) * s;
        }
        for (std::size_t k = 0; k < pair.psi.size(); ++k)
            if (pair.psi.coeff(k) != 0) acc += pair.psi.coeff(k) * u.moment(n + k);
        out.push_back(std::move(acc));
    }
    return out;
}

/**
 * The form with (u)_0 = 1 solving the Pearson equation. Equation n is solved for
 * moment n + d with d = max(deg Phi - 1, deg Psi). Moments 1..d-1 come from
 * `initial`, or are 0 at odd orders when the pair has symmetric parity.
 */
inline RForm moments_from_pearson(const PearsonPair& pair, std::size_t N, std::vector<Rational> initial = {}) {
    const RPoly phi = pair.phi_dense();
    const RPoly psi = pair.psi;
    const Rational base = pair.base;
    const int t = phi.degree(), p = psi.degree();
    const std::size_t d = static_cast<std::size_t>(std::max(t - 1, p));
    const bool parity = has_symmetric_parity(pair);

    if (initial.empty()) initial.push_back(Rational(1));
    if (initial.front() != 1) throw ParameterOutOfRange("moment 0 must be 1");
    for (std::size_t k = initial.size(); k < d; ++k) {
        if (parity && k % 2 == 1) initial.push_back(Rational(0));
        else throw Underdetermined("moment " + std::to_string(k) + " is not fixed by " + pair.label);
    }

    auto gen = [=](std::size_t k, const RForm& self) -> Rational {
        if (k < d) return initial[k];
        const std::size_t n = k - d;
        const Rational bracket = bracket_sum(n, base);
        Rational lead = 0, rest = 0;
        for (std::size_t j = 0; j < phi.size(); ++j) {
            if (phi.coeff(j) == 0 || n == 0) continue;
            const std::size_t idx = n - 1 + j;
            const Rational c = -bracket * phi.coeff(j);
            if (idx == k) lead += c;
            else rest += c * self.moment(idx);
        }
        for (std::size_t j = 0; j < psi.size(); ++j) {
            if (psi.coeff(j) == 0) continue;
            const std::size_t idx = n + j;
            if (idx == k) lead += psi.coeff(j);
            else rest += psi.coeff(j) * self.moment(idx);
        }
        if (lead == 0) throw AdmissibilityFailure(n, pair.label);
        return -rest / lead;
    };
    RForm u(gen, pair.label.empty() ? "pearson" : pair.label);
    if (N > 0) u.moment(N);   // surface admissibility failures eagerly
    return u;
}

/// (A_c, B_c) at one root c of Phi.
struct CriterionEntry {
    PolyRoot root;
    std::optional<Rational> a, b;   // exact when the root is rational
    ComplexBF a_approx, b_approx;
    bool reducible = false;
};

namespace detail {

inline Poly<ComplexBF> to_complex_poly(const RPoly& f) {
    return map_coeffs<ComplexBF>(f, [](const Rational& r) { return to_cbf(r); });
}

} // namespace detail

/**
 * A_c = b Psi(b c) + (H_b Phi)(c) and B_c = <u, b theta_{bc} Psi + theta_{bc} theta_c Phi>.
 * The pair reduces at c iff both vanish. Irrational roots are evaluated at the current
 * MPFR precision and judged against 10^-(P-10).
 */
inline std::vector<CriterionEntry> class_criterion(const PearsonPair& pair, const RForm& u) {
    const RPoly& phi = pair.phi_dense();
    const Rational& b = pair.base;
    std::vector<CriterionEntry> out;
    for (const PolyRoot& r : pair.phi.roots()) {
        CriterionEntry e;
        e.root = r;
        if (r.exact) {
            const Rational c = *r.exact;
            const Rational a = b * pair.psi(b * c) + hq_poly(phi, b)(c);
            const RPoly g = theta(pair.psi, b * c) * b + theta(theta(phi, c), b * c);
            const Rational bb = apply(u, g);
            e.a = a;
            e.b = bb;
            e.a_approx = to_cbf(a);
            e.b_approx = to_cbf(bb);
            e.reducible = a == 0 && bb == 0;
        } else {
            const ComplexBF c = r.approx;
            const ComplexBF bq = to_cbf(b);
            const auto phi_c = detail::to_complex_poly(phi);
            const auto psi_c = detail::to_complex_poly(pair.psi);
            e.a_approx = bq * psi_c.eval(bq * c) + hq_poly(phi_c, bq).eval(c);
            const auto g = theta(psi_c, bq * c) * bq + theta(theta(phi_c, c), bq * c);
            ComplexBF acc;
            for (std::size_t k = 0; k < g.size(); ++k) acc += g.coeff(k) * to_cbf(u.moment(k));
            e.b_approx = acc;
            const BigFloat tol = pow(BigFloat(10), 10 - static_cast<int>(BigFloat::default_precision()));
            e.reducible = abs(e.a_approx) < tol && abs(e.b_approx) < tol;
        }
        out.push_back(std::move(e));
    }
    return out;
}

/// Divides the equation by (x - c): Phi <- theta_c Phi, Psi <- b theta_{bc} Psi + theta_{bc} theta_c Phi.
inline PearsonPair reduce_at(const PearsonPair& pair, const Rational& c) {
    const RPoly& phi = pair.phi_dense();
    const Rational& b = pair.base;
    const RPoly new_phi = theta(phi, c);
    const RPoly new_psi = theta(pair.psi, b * c) * b + theta(theta(phi, c), b * c);
    if (new_phi.is_zero() || new_psi.degree() < 1)
        throw NotReducible("reduction at c = " + to_string(c) + " leaves a degenerate pair");
    return PearsonPair::make(new_phi, new_psi, b, pair.label);
}

/**
 * Repeatedly divides by (x - c) at rational roots with (A_c, B_c) = (0, 0). Each step is
 * re-verified with pearson_residual up to `check_order`.
 */
inline PearsonPair reduce_class(const PearsonPair& pair, const RForm& u, std::size_t check_order = 40) {
    PearsonPair cur = pair;
    bool reduced_once = false;
    for (;;) {
        std::optional<Rational> root;
        for (const auto& e : class_criterion(cur, u))
            if (e.reducible && e.root.exact) {
                root = *e.root.exact;
                break;
            }
        if (!root) break;
        PearsonPair next;
        try {
            next = reduce_at(cur, *root);
        } catch (const NotReducible&) {
            break;
        }
        for (const Rational& r : pearson_residual(next, u, check_order))
            if (r != 0) throw InternalError("reduced pair no longer satisfied by " + u.label());
        cur = std::move(next);
        reduced_once = true;
    }
    if (!reduced_once) throw NotReducible("no root of Phi satisfies the reduction criterion for " + pair.label);
    return cur;
}

/// Class of u as certified by the given pair: class_estimate after all reductions.
inline int certified_class(const PearsonPair& pair, const RForm& u) {
    try {
        return reduce_class(pair, u).class_estimate();
    } catch (const NotReducible&) {
        return pair.class_estimate();
    }
}

/**
 * Pair satisfied by v = h_{1/a} u, (v)_n = a^{-n} (u)_n:
 * Phi'(x) = a^{-t} Phi(a x), Psi'(x) = a^{1-t} Psi(a x) with t = deg Phi.
 */
inline PearsonPair dilate_pair(const PearsonPair& pair, const Rational& a) {
    if (a == 0) throw ZeroDilation("pair dilation by zero");
    const long t = pair.phi.degree();
    const RPoly phi = dilate(pair.phi_dense(), a) * ipow(a, -t);
    const RPoly psi = dilate(pair.psi, a) * ipow(a, 1 - t);
    return PearsonPair::make(phi, psi, pair.base, pair.label);
}

/// "c=..., A=..., B=..., reducible=yes/no" lines followed by "class = s".
inline std::string class_report(const PearsonPair& pair, const RForm& u) {
    std::ostringstream os;
    for (const auto& e : class_criterion(pair, u)) {
        os << "c=";
        if (e.root.exact) os << to_string(*e.root.exact);
        else os << e.root.approx;
        os << ", A=";
        if (e.a) os << to_string(*e.a);
        else os << e.a_approx;
        os << ", B=";
        if (e.b) os << to_string(*e.b);
        else os << e.b_approx;
        os << ", reducible=" << (e.reducible ? "yes" : "no") << "\n";
    }
    os << "class = " << certified_class(pair, u) << "\n";
    return os.str();
}

} // namespace qform
