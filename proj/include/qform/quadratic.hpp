#pragma once

/**
 * @file quadratic.hpp
 * @brief Quadratic decomposition of symmetric forms: u <-> (sigma u, x sigma u).
 */

#include "mops.hpp"
#include "pearson.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qform {

/// gamma_1, gamma_2, ... of a symmetric form (beta = 0).
using SymmetricGamma = std::function<Rational(std::size_t)>;

/**
 * Recurrence data of the MOPS of sigma u (P) and x sigma u (R).
 * beta_p[n] = beta^P_n, gamma_p[n] = gamma^P_{n+1}; same layout for R.
 */
struct PRPair {
    std::vector<Rational> beta_p, gamma_p, beta_r, gamma_r;

    Recurrence<Rational> p_recurrence() const { return recurrence_from_tables(beta_p, gamma_p, "P"); }
    Recurrence<Rational> r_recurrence() const { return recurrence_from_tables(beta_r, gamma_r, "R"); }
};

/// P and R data for indices 0..N (gamma up to index N+1); reads gamma_1..gamma_{2N+3}.
inline PRPair decompose(const SymmetricGamma& g, std::size_t N) {
    std::vector<Rational> gm(2 * N + 4);
    for (std::size_t k = 1; k <= 2 * N + 3; ++k) {
        gm[k] = g(k);
        if (gm[k] == 0) throw ZeroGamma(k);
    }
    PRPair pr;
    pr.beta_p.push_back(gm[1]);
    for (std::size_t n = 0; n < N; ++n) pr.beta_p.push_back(gm[2 * n + 2] + gm[2 * n + 3]);
    for (std::size_t n = 0; n <= N; ++n) {
        pr.gamma_p.push_back(gm[2 * n + 1] * gm[2 * n + 2]);
        pr.beta_r.push_back(gm[2 * n + 1] + gm[2 * n + 2]);
        pr.gamma_r.push_back(gm[2 * n + 2] * gm[2 * n + 3]);
    }
    return pr;
}

/**
 * gamma_1..gamma_{2N+3} from beta^P_0 and the products of gamma^P and gamma^R.
 * Needs gamma^P_1..gamma^P_{N+1} and gamma^R_1..gamma^R_{N+1}.
 */
inline std::vector<Rational> recompose(const PRPair& pr, std::size_t N) {
    if (pr.beta_p.empty() || pr.beta_p[0] == 0) throw ZeroDenominator("beta^P_0 vanishes");
    if (pr.gamma_p.size() < N + 1 || pr.gamma_r.size() < N + 1)
        throw OrderLimit(N, "P/R data too short to recompose");
    const Rational b0 = pr.beta_p[0];
    std::vector<Rational> out;
    out.reserve(2 * N + 3);
    Rational prod_p = 1, prod_r = 1;   // prod_{k<=n} gamma^P_k, gamma^R_k
    out.push_back(b0);
    for (std::size_t n = 0; n <= N; ++n) {
        // gamma_{2n+2} = prod_{k<=n+1} gamma^P_k / (b0 prod_{k<=n} gamma^R_k)
        prod_p *= pr.gamma_p[n];
        if (prod_r == 0) throw ZeroDenominator("vanishing gamma^R product");
        out.push_back(prod_p / (b0 * prod_r));
        // gamma_{2n+3} = b0 prod_{k<=n+1} gamma^R_k / prod_{k<=n+1} gamma^P_k
        prod_r *= pr.gamma_r[n];
        if (prod_p == 0) throw ZeroDenominator("vanishing gamma^P product");
        out.push_back(b0 * prod_r / prod_p);
    }
    return out;
}

/// (u)_{2n} = (sigma u)_n, odd moments 0.
inline RForm sym_moments_from_sigma(const RForm& su) {
    return RForm::from_function([su](std::size_t n) { return su.moment(n / 2); }, "sym(" + su.label() + ")",
                                true);
}

/// Each atom (rho, tau) becomes (rho/2, +sqrt tau) and (rho/2, -sqrt tau), principal branch.
inline DiracComb sym_comb_from_sigma(const DiracComb& comb) {
    DiracComb out = comb;
    auto inner = comb.group;
    out.group = [inner](std::size_t k) {
        std::vector<NumAtom> atoms;
        for (const auto& a : inner(k)) {
            if (a.support == ComplexBF()) {
                atoms.push_back(a);
                continue;
            }
            const ComplexBF half = a.mass / ComplexBF(BigFloat(2));
            const ComplexBF s = sqrt_principal(a.support);
            atoms.push_back({half, s});
            atoms.push_back({half, -s});
        }
        return atoms;
    };
    out.label = "sym(" + comb.label + ")";
    return out;
}

/**
 * If the symmetric u satisfies H_Q(x phi(x^2) u) + psi(x^2) u = 0, then sigma u and
 * x sigma u satisfy H_q-equations with q = Q^2. Returns (sigma u pair, x sigma u pair).
 */
inline std::pair<PearsonPair, PearsonPair> transport_pearson(const RPoly& phi, const RPoly& psi, const QParam& sqrtq) {
    if (phi.is_zero() || phi.degree() > 1 || psi.degree() != 1)
        throw ShapeViolation("transport needs deg phi <= 1 and deg psi = 1");
    const Rational Q = sqrtq.value();
    const Rational q = Q * Q;
    const RPoly x = RPoly::x();
    const RPoly psi_scaled = psi / Rational(Q + 1);
    auto s = PearsonPair::make(x * phi, psi_scaled, q, "sigma u");
    auto r = PearsonPair::make(x * phi, (psi_scaled - phi) / q, q, "x sigma u");
    return {s, r};
}

/// The symmetric pair (x phi(x^2), psi(x^2)) with base Q.
inline PearsonPair symmetric_pair(const RPoly& phi, const RPoly& psi, const QParam& sqrtq, std::string label = "") {
    return PearsonPair::make(RPoly::x() * sigma_poly(phi), sigma_poly(psi), sqrtq.value(), std::move(label));
}

} // namespace qform
