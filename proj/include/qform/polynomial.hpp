#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials and the operators H_q, h_a, tau, theta_c, sigma.
 */

#include "scalar.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace qform {

/// Degree reported for the zero polynomial (stands in for minus infinity).
inline constexpr int kDegreeOfZero = -1;

template <class T>
class Poly {
public:
    Poly() = default;
    Poly(const T& c) : c_{c} { trim(); }
    Poly(int c) : c_{T(c)} { trim(); }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }
    static Poly monomial(std::size_t k, const T& c = T(1)) {
        std::vector<T> v(k + 1, T(0));
        v[k] = c;
        return Poly(std::move(v));
    }
    /// Monic linear factor x - c.
    static Poly linear(const T& c) { return Poly(std::vector<T>{T(-c), T(1)}); }

    int degree() const { return c_.empty() ? kDegreeOfZero : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<T>& coeffs() const { return c_; }

    /// Coefficient of x^k; zero past the degree.
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    T operator[](std::size_t k) const { return coeff(k); }
    T lead() const { return c_.empty() ? T(0) : c_.back(); }

    template <class U>
    U eval(const U& x) const {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }
    T operator()(const T& x) const { return eval<T>(x); }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }
    Poly& operator/=(const T& s) {
        if (s == T(0)) throw ZeroDenominator("polynomial divided by zero");
        for (auto& v : c_) v /= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }
    friend Poly operator/(Poly a, const T& s) { return a /= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class U, class T, class F>
Poly<U> map_coeffs(const Poly<T>& f, F&& conv) {
    std::vector<U> out;
    out.reserve(f.size());
    for (const auto& c : f.coeffs()) out.push_back(conv(c));
    return Poly<U>(std::move(out));
}

/// Hahn operator (H_q f)(x) = (f(qx) - f(x))/((q-1)x); result_k = [k+1]_q f_{k+1}.
/// The bracket is summed as 1 + q + ... so the same code evaluates the q = 1 limit.
template <class T>
Poly<T> hq_poly(const Poly<T>& f, const T& q) {
    if (f.degree() < 1) return Poly<T>();
    std::vector<T> out(f.size() - 1, T(0));
    T bracket(0), power(1);
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
        bracket += power;
        power *= q;
        out[k] = bracket * f.coeff(k + 1);
    }
    return Poly<T>(std::move(out));
}

/// (h_a f)(x) = f(ax).
template <class T>
Poly<T> dilate(const Poly<T>& f, const T& a) {
    if (a == T(0)) throw ZeroDilation("dilation by zero");
    std::vector<T> out(f.coeffs());
    T p(1);
    for (auto& c : out) {
        c *= p;
        p *= a;
    }
    return Poly<T>(std::move(out));
}

/// f(x + b).
template <class T>
Poly<T> translate(const Poly<T>& f, const T& b) {
    const Poly<T> shift(std::vector<T>{b, T(1)});
    Poly<T> acc;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * shift + Poly<T>(*it);
    return acc;
}

/// (theta_c f)(x) = (f(x) - f(c))/(x - c), by synthetic division.
template <class T>
Poly<T> theta(const Poly<T>& f, const T& c) {
    if (f.degree() < 1) return Poly<T>();
    const std::size_t n = f.size() - 1;
    std::vector<T> out(n, T(0));
    out[n - 1] = f.coeff(n);
    for (std::size_t k = n - 1; k > 0; --k) out[k - 1] = f.coeff(k) + c * out[k];
    return Poly<T>(std::move(out));
}

/// (sigma f)(x) = f(x^2).
template <class T>
Poly<T> sigma_poly(const Poly<T>& f) {
    if (f.is_zero()) return Poly<T>();
    std::vector<T> out(2 * f.size() - 1, T(0));
    for (std::size_t k = 0; k < f.size(); ++k) out[2 * k] = f.coeff(k);
    return Poly<T>(std::move(out));
}

/// Returns (f_e, f_o) with f(x) = f_e(x^2) + x f_o(x^2).
template <class T>
std::pair<Poly<T>, Poly<T>> even_odd_split(const Poly<T>& f) {
    std::vector<T> e, o;
    for (std::size_t k = 0; k < f.size(); ++k) (k % 2 == 0 ? e : o).push_back(f.coeff(k));
    return {Poly<T>(std::move(e)), Poly<T>(std::move(o))};
}

using RPoly = Poly<Rational>;

/// Text form accepted by parse_poly, e.g. "x^3 - (1/2)*x + 3".
inline std::string to_string(const RPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        const Rational c = f.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool integral = denominator(a) == 1;
        std::string coef = integral ? a.str() : "(" + a.str() + ")";
        if (k == 0) {
            out += a.str();
            continue;
        }
        if (a != 1) out += coef + "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string s) : s_(std::move(s)) {}

    RPoly parse() {
        RPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial parse error at " + std::to_string(pos_) + ": " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    RPoly expr() {
        RPoly acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return c == 'x' || c == '(' || c == '.' || std::isdigit(static_cast<unsigned char>(c));
    }
    RPoly term() {
        RPoly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                RPoly d = factor();
                if (d.degree() > 0) fail("division by a non-constant");
                if (d.is_zero()) fail("division by zero");
                acc = acc / d.coeff(0);
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }
    RPoly factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        RPoly b = base();
        if (accept('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent expected");
            const unsigned long e = std::stoul(s_.substr(start, pos_ - start));
            RPoly r(1);
            for (unsigned long i = 0; i < e; ++i) r = r * b;
            return r;
        }
        return b;
    }
    RPoly base() {
        skip();
        if (accept('(')) {
            RPoly r = expr();
            if (!accept(')')) fail("')' expected");
            return r;
        }
        if (accept('x')) return RPoly::x();
        const std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
            ++pos_;
        if (start == pos_) fail("number, 'x' or '(' expected");
        return RPoly(parse_rational(s_.substr(start, pos_ - start)));
    }

    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline RPoly parse_poly(const std::string& text) { return detail::PolyParser(text).parse(); }

/// A root of a factored polynomial: exact when rational, otherwise numeric.
struct PolyRoot {
    std::optional<Rational> exact;
    ComplexBF approx;
    int multiplicity = 1;
};

/**
 * Polynomial stored with its factorization: leading * prod (x - c_i)^{m_i} * residual,
 * where the c_i are rational and the monic residual (degree <= 2) has no rational roots.
 */
class FactoredPoly {
public:
    FactoredPoly() : dense_(1) {}

    FactoredPoly(Rational leading, std::vector<std::pair<Rational, int>> roots, RPoly residual = RPoly(1))
        : leading_(std::move(leading)), roots_(std::move(roots)), residual_(std::move(residual)) {
        if (leading_ == 0) throw ShapeViolation("factored polynomial with zero leading coefficient");
        if (residual_.lead() != 1) throw ShapeViolation("residual factor must be monic");
        if (residual_.degree() > 2) throw ShapeViolation("residual factor of degree > 2 is not supported");
        dense_ = RPoly(leading_) * residual_;
        for (const auto& [c, m] : roots_)
            for (int i = 0; i < m; ++i) dense_ = dense_ * RPoly::linear(c);
    }

    /// Factors a dense polynomial whose part without rational linear factors has degree <= 2.
    static FactoredPoly from_dense(const RPoly& f) {
        if (f.is_zero()) throw ShapeViolation("cannot factor the zero polynomial");
        RPoly rest = f / f.lead();
        std::vector<std::pair<Rational, int>> roots;
        auto strip = [&](const Rational& c) {
            int m = 0;
            while (rest.degree() >= 1 && rest(c) == 0) {
                rest = theta(rest, c);
                ++m;
            }
            if (m) roots.emplace_back(c, m);
        };
        strip(Rational(0));
        if (rest.degree() == 1) strip(Rational(-rest.coeff(0)));
        if (rest.degree() == 2) {
            const Rational b = rest.coeff(1), c = rest.coeff(0);
            if (auto s = exact_sqrt(b * b - 4 * c)) {
                const Rational r1 = (-b + *s) / 2, r2 = (-b - *s) / 2;
                strip(r1);
                if (r2 != r1) strip(r2);
            }
        }
        if (rest.degree() == 1) strip(Rational(-rest.coeff(0)));
        if (rest.degree() > 2) throw ShapeViolation("cannot factor " + to_string(f));
        FactoredPoly out(f.lead(), std::move(roots), rest);
        if (out.dense() != f) throw InternalError("factorization mismatch for " + to_string(f));
        return out;
    }

    const RPoly& dense() const { return dense_; }
    const Rational& leading() const { return leading_; }
    const std::vector<std::pair<Rational, int>>& rational_roots() const { return roots_; }
    const RPoly& residual() const { return residual_; }
    int degree() const { return dense_.degree(); }

    /// All distinct roots; the residual's roots are computed at the current MPFR precision.
    std::vector<PolyRoot> roots() const {
        std::vector<PolyRoot> out;
        for (const auto& [c, m] : roots_) out.push_back({c, to_cbf(c), m});
        if (residual_.degree() == 2) {
            const BigFloat b = to_bf(residual_.coeff(1)), c = to_bf(residual_.coeff(0));
            const ComplexBF disc(b * b - 4 * c);
            const ComplexBF s = sqrt_principal(disc);
            const ComplexBF mb(-b);
            out.push_back({std::nullopt, (mb + s) / ComplexBF(BigFloat(2)), 1});
            out.push_back({std::nullopt, (mb - s) / ComplexBF(BigFloat(2)), 1});
        }
        return out;
    }

private:
    Rational leading_ = 1;
    std::vector<std::pair<Rational, int>> roots_;
    RPoly residual_{1};
    RPoly dense_;
};

} // namespace qform
