#pragma once

/**
 * @file form.hpp
 * @brief Linear functionals as lazy memoized moment sequences, and their dual operations.
 */

#include "polynomial.hpp"
#include "series.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace qform {

/// [n]_q for n >= 0 as 1 + q + ... + q^{n-1}; well defined at q = 1.
template <class T>
T bracket_sum(std::size_t n, const T& q) {
    T acc(0), p(1);
    for (std::size_t k = 0; k < n; ++k) {
        acc += p;
        p *= q;
    }
    return acc;
}

/**
 * A linear form u known through its moments (u)_n = <u, x^n>.
 *
 * Copies share one memo table. The table is filled bottom-up under a recursive
 * mutex, so generators may look up lower moments of the same form.
 */
template <class T>
class Form {
public:
    using Generator = std::function<T(std::size_t n, const Form& self)>;

    Form() : Form([](std::size_t, const Form&) { return T(0); }, "0") {}

    Form(Generator gen, std::string label, bool symmetric = false, std::size_t max_order = kMaxOrder)
        : s_(std::make_shared<State>()) {
        s_->gen = std::move(gen);
        s_->label = std::move(label);
        s_->symmetric = symmetric;
        s_->max_order = max_order;
    }

    /// Convenience for generators that do not need the form itself.
    static Form from_function(std::function<T(std::size_t)> f, std::string label, bool symmetric = false) {
        return Form([f = std::move(f)](std::size_t n, const Form&) { return f(n); }, std::move(label), symmetric);
    }

    /// A form with finitely many known moments; asking past them is an OrderLimit.
    static Form from_moments(std::vector<T> m, std::string label, bool symmetric = false) {
        const std::size_t size = m.size();
        auto data = std::make_shared<std::vector<T>>(std::move(m));
        return Form([data](std::size_t n, const Form&) { return (*data)[n]; }, std::move(label), symmetric,
                    size == 0 ? 0 : size - 1);
    }

    T moment(std::size_t n) const {
        if (s_->symmetric && n % 2 == 1) return T(0);
        if (n > s_->max_order) throw OrderLimit(n, s_->label);
        std::lock_guard<std::recursive_mutex> lock(s_->mutex);
        if (n < s_->memo.size() && s_->memo[n]) return *s_->memo[n];
        if (s_->memo.size() <= n) s_->memo.resize(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            if (s_->memo[k]) continue;
            if (s_->symmetric && k % 2 == 1) {
                s_->memo[k] = T(0);
                continue;
            }
            s_->memo[k] = s_->gen(k, *this);
        }
        return *s_->memo[n];
    }
    T operator()(std::size_t n) const { return moment(n); }

    /// Moments 0..count-1.
    std::vector<T> moments(std::size_t count) const {
        std::vector<T> out;
        out.reserve(count);
        for (std::size_t n = 0; n < count; ++n) out.push_back(moment(n));
        return out;
    }

    const std::string& label() const { return s_->label; }
    bool symmetric() const { return s_->symmetric; }
    std::size_t max_order() const { return s_->max_order; }

private:
    struct State {
        Generator gen;
        std::string label;
        bool symmetric = false;
        std::size_t max_order = kMaxOrder;
        std::recursive_mutex mutex;
        std::vector<std::optional<T>> memo;
    };
    std::shared_ptr<State> s_;
};

using RForm = Form<Rational>;

/// <u, f> = sum_k f_k (u)_k.
template <class T>
T apply(const Form<T>& u, const Poly<T>& f) {
    T acc(0);
    for (std::size_t k = 0; k < f.size(); ++k)
        if (f.coeff(k) != T(0)) acc += f.coeff(k) * u.moment(k);
    return acc;
}

/// delta_c with moments c^n.
template <class T>
Form<T> dirac(const T& c) {
    return Form<T>::from_function([c](std::size_t n) {
        T p(1);
        for (std::size_t k = 0; k < n; ++k) p *= c;
        return p;
    }, "delta");
}

/// Exact finite comb sum_k m_k delta_{c_k}.
template <class T>
Form<T> comb_form(const std::vector<std::pair<T, T>>& atoms, std::string label = "comb") {
    return Form<T>::from_function([atoms](std::size_t n) {
        T acc(0);
        for (const auto& [m, c] : atoms) {
            T p = m;
            for (std::size_t k = 0; k < n; ++k) p *= c;
            acc += p;
        }
        return acc;
    }, std::move(label));
}

/// (H_q u)_0 = 0, (H_q u)_n = -[n]_q (u)_{n-1}.
template <class T>
Form<T> hq_form(const Form<T>& u, const T& q) {
    return Form<T>::from_function([u, q](std::size_t n) {
        if (n == 0) return T(0);
        return T(-bracket_sum(n, q) * u.moment(n - 1));
    }, "H(" + u.label() + ")");
}

/// (g u)_n = sum_k g_k (u)_{n+k}.
template <class T>
Form<T> mul_poly_form(const Poly<T>& g, const Form<T>& u) {
    bool even = true;
    for (std::size_t k = 1; k < g.size(); k += 2)
        if (g.coeff(k) != T(0)) even = false;
    return Form<T>::from_function([g, u](std::size_t n) {
        T acc(0);
        for (std::size_t k = 0; k < g.size(); ++k)
            if (g.coeff(k) != T(0)) acc += g.coeff(k) * u.moment(n + k);
        return acc;
    }, "(" + (std::is_same_v<T, Rational> ? to_string(g) : std::string("g")) + ")" + u.label(),
       u.symmetric() && even);
}

/// (h_a u)_n = a^n (u)_n.
template <class T>
Form<T> dilate_form(const Form<T>& u, const T& a) {
    if (a == T(0)) throw ZeroDilation("dilation of a form by zero");
    return Form<T>::from_function([u, a](std::size_t n) {
        T p = u.moment(n);
        for (std::size_t k = 0; k < n; ++k) p *= a;
        return p;
    }, "h(" + u.label() + ")", u.symmetric());
}

/// tau_b u: <tau_b u, f> = <u, f(x + b)>, so (tau_b u)_n = sum_k C(n,k) b^{n-k} (u)_k.
template <class T>
Form<T> translate_form(const Form<T>& u, const T& b) {
    return Form<T>::from_function([u, b](std::size_t n) {
        const Poly<T> shifted = translate(Poly<T>::monomial(n), b);
        return apply(u, shifted);
    }, "tau(" + u.label() + ")");
}

/// (x - c)^{-1} u: result_0 = 0, result_n = sum_{k<n} c^{n-1-k} (u)_k.
template <class T>
Form<T> div_xc_form(const Form<T>& u, const T& c) {
    return Form<T>::from_function([u, c](std::size_t n) {
        T acc(0);
        for (std::size_t k = 0; k < n; ++k) acc = acc * c + u.moment(k);
        return acc;
    }, "(x-c)^-1 " + u.label());
}

/// (sigma u)_n = (u)_{2n}.
template <class T>
Form<T> sigma_form(const Form<T>& u) {
    return Form<T>::from_function([u](std::size_t n) { return u.moment(2 * n); }, "sigma(" + u.label() + ")");
}

/// a u + b v.
template <class T>
Form<T> combine(const T& a, const Form<T>& u, const T& b, const Form<T>& v) {
    return Form<T>::from_function([=](std::size_t n) { return T(a * u.moment(n) + b * v.moment(n)); },
                                  u.label() + "+" + v.label(), u.symmetric() && v.symmetric());
}

/// Numeric form backed by a comb; each moment is summed under the policy.
inline Form<ComplexBF> comb_to_form(const DiracComb& comb, const TruncationPolicy& policy) {
    return Form<ComplexBF>::from_function([comb, policy](std::size_t n) {
        return comb_moments(comb, n, policy).moments[n];
    }, comb.label);
}

} // namespace qform
