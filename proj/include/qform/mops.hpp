#pragma once

/**
 * @file mops.hpp
 * @brief Three-term recurrences, monic orthogonal polynomial tables and moment extraction.
 */

#include "form.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace qform {

/// Recurrence B_{n+1} = (x - beta_n) B_n - gamma_n B_{n-1}; gamma is indexed from 1.
template <class T>
struct Recurrence {
    std::function<T(std::size_t)> beta;
    std::function<T(std::size_t)> gamma;
    std::string source;
};

/// Recurrence over finite tables; beta[n] = beta_n and gamma[n-1] = gamma_n.
template <class T>
Recurrence<T> recurrence_from_tables(std::vector<T> beta, std::vector<T> gamma, std::string source) {
    auto b = std::make_shared<std::vector<T>>(std::move(beta));
    auto g = std::make_shared<std::vector<T>>(std::move(gamma));
    Recurrence<T> r;
    r.beta = [b, source](std::size_t n) {
        if (n >= b->size()) throw OrderLimit(n, "beta table of " + source);
        return (*b)[n];
    };
    r.gamma = [g, source](std::size_t n) {
        if (n == 0 || n > g->size()) throw OrderLimit(n, "gamma table of " + source);
        return (*g)[n - 1];
    };
    r.source = std::move(source);
    return r;
}

template <class T>
struct MopsTable {
    std::vector<Poly<T>> polynomials;   // B_0..B_N
    std::vector<T> squared_norms;       // r_n = <u, B_n^2>
};

/// B_0..B_N from the recurrence; r_n = gamma_1...gamma_n (u)_0.
template <class T>
MopsTable<T> generate_mops(const Recurrence<T>& rec, std::size_t N, const T& u0 = T(1)) {
    MopsTable<T> t;
    t.polynomials.reserve(N + 1);
    t.polynomials.emplace_back(T(1));
    t.squared_norms.push_back(u0);
    const Poly<T> x = Poly<T>::x();
    for (std::size_t n = 0; n < N; ++n) {
        Poly<T> next = (x - Poly<T>(rec.beta(n))) * t.polynomials[n];
        if (n > 0) {
            const T g = rec.gamma(n);
            if (g == T(0)) throw ZeroGamma(n, rec.source);
            next -= t.polynomials[n - 1] * g;
        }
        t.polynomials.push_back(std::move(next));
    }
    for (std::size_t n = 1; n <= N; ++n) {
        const T g = rec.gamma(n);
        if (g == T(0)) throw ZeroGamma(n, rec.source);
        t.squared_norms.push_back(t.squared_norms.back() * g);
    }
    return t;
}

/// Same as above, cross-checking every r_n against the pairing <u, B_n^2>.
template <class T>
MopsTable<T> generate_mops(const Recurrence<T>& rec, std::size_t N, const Form<T>& u) {
    MopsTable<T> t = generate_mops(rec, N, u.moment(0));
    for (std::size_t n = 0; n <= N; ++n) {
        const Poly<T>& b = t.polynomials[n];
        if (apply(u, b * b) != t.squared_norms[n])
            throw InternalError("squared norm mismatch at n = " + std::to_string(n) + " for " + rec.source);
    }
    return t;
}

/**
 * Stieltjes procedure on the moments: beta_0..beta_{N-1} and gamma_1..gamma_N,
 * using moments up to order 2N.
 */
template <class T>
Recurrence<T> rec_from_form(const Form<T>& u, std::size_t N) {
    std::vector<T> beta, gamma;
    const Poly<T> x = Poly<T>::x();
    Poly<T> prev, cur(T(1));
    T r = u.moment(0);
    if (r == T(0)) throw NotRegular(0, u.label());
    for (std::size_t n = 0; n < N; ++n) {
        const Poly<T> sq = cur * cur;
        const T b = apply(u, x * sq) / r;
        beta.push_back(b);
        Poly<T> next = (x - Poly<T>(b)) * cur;
        if (n > 0) next -= prev * gamma.back();
        const T r_next = apply(u, next * next);
        if (r_next == T(0)) throw NotRegular(n + 1, u.label());
        gamma.push_back(r_next / r);
        r = r_next;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return recurrence_from_tables(std::move(beta), std::move(gamma), "moments of " + u.label());
}

/// One (m, n) pair whose pairing violates orthogonality.
template <class T>
struct OrthogonalityViolation {
    std::size_t m, n;
    T value;
};

/// Checks <u, B_m B_n> = r_n delta_{mn} for m, n <= N.
template <class T>
std::vector<OrthogonalityViolation<T>> check_orthogonality(const Form<T>& u, const MopsTable<T>& table,
                                                           std::size_t N) {
    std::vector<OrthogonalityViolation<T>> bad;
    const std::size_t top = std::min(N, table.polynomials.size() - 1);
    for (std::size_t n = 0; n <= top; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            const T v = apply(u, table.polynomials[m] * table.polynomials[n]);
            if (m == n) {
                if (v == T(0) || v != table.squared_norms[n]) bad.push_back({m, n, v});
            } else if (v != T(0)) {
                bad.push_back({m, n, v});
            }
        }
    }
    return bad;
}

/// gamma_n > 0 for 1 <= n <= N.
template <class T>
bool is_positive_definite(const Recurrence<T>& rec, std::size_t N) {
    for (std::size_t n = 1; n <= N; ++n)
        if (!(rec.gamma(n) > T(0))) return false;
    return true;
}

/// Moments m_0..m_N of the form with the given recurrence and (u)_0 = u0 (Jacobi-matrix powers).
template <class T>
std::vector<T> moments_from_recurrence(const Recurrence<T>& rec, std::size_t N, const T& u0 = T(1)) {
    // c holds the expansion of x^n in the basis B_0, B_1, ...; (u)_n = c_0 u0.
    std::vector<T> c{T(1)}, out;
    out.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        out.push_back(c[0] * u0);
        if (n == N) break;
        std::vector<T> next(c.size() + 1, T(0));
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] == T(0)) continue;
            next[j + 1] += c[j];
            next[j] += rec.beta(j) * c[j];
            if (j > 0) next[j - 1] += rec.gamma(j) * c[j];
        }
        // Entries beyond N - n never reach c_0 again.
        const std::size_t keep = std::min(next.size(), N - n + 1);
        next.resize(keep);
        c = std::move(next);
    }
    return out;
}

/// det[(u)_{i+j}]_{i,j=0..n-1} by fraction-free Bareiss elimination.
template <class T>
T hankel_determinant(const Form<T>& u, std::size_t n) {
    if (n == 0) return T(1);
    std::vector<std::vector<T>> a(n, std::vector<T>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = u.moment(i + j);
    T prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == T(0)) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == T(0)) ++p;
            if (p == n) return T(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : T(-a[n - 1][n - 1]);
}

} // namespace qform
