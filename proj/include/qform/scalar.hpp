#pragma once

/**
 * @file scalar.hpp
 * @brief Coefficient field: exact rationals, MPFR floats and a small complex type.
 *
 * Exact code paths use Rational throughout. BigFloat and ComplexBF only show up
 * in the numeric layer (qnumerics.hpp) and in class criteria at irrational roots.
 */

#include "errors.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

namespace qform {

// Expression templates off: template deduction in Poly/Form needs plain value types.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

/// Default decimal precision of the numeric layer.
inline constexpr unsigned kDefaultPrecision = 50;
/// Largest moment order the exact layer is tuned for.
inline constexpr std::size_t kNMax = 128;
/// Hard cap on memoized moment orders (symmetric forms query up to 2*N_max+1).
inline constexpr std::size_t kMaxOrder = 2 * kNMax + 1;

inline Rational make_rational(long p, long q = 1) {
    if (q == 0) throw ZeroDenominator("rational with zero denominator");
    return Rational(Integer(p), Integer(q));
}

inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "p", "p/q", "-1.25" or "3e-6" into an exact rational.
inline Rational parse_rational(std::string s) {
    auto trim = [](std::string& t) {
        const auto b = t.find_first_not_of(" \t");
        const auto e = t.find_last_not_of(" \t");
        t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw ParseError("empty number");
    try {
        const auto slash = s.find('/');
        if (slash != std::string::npos) {
            Rational num = parse_rational(s.substr(0, slash));
            Rational den = parse_rational(s.substr(slash + 1));
            if (den == 0) throw ZeroDenominator("rational with zero denominator");
            return num / den;
        }
        long exp10 = 0;
        const auto epos = s.find_first_of("eE");
        if (epos != std::string::npos) {
            exp10 = std::stol(s.substr(epos + 1));
            s = s.substr(0, epos);
        }
        bool neg = false;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            neg = s[0] == '-';
            s = s.substr(1);
        }
        std::string digits;
        long frac = 0;
        bool seen_dot = false;
        for (char c : s) {
            if (c == '.') {
                if (seen_dot) throw ParseError("bad number: " + s);
                seen_dot = true;
            } else if (c >= '0' && c <= '9') {
                digits.push_back(c);
                if (seen_dot) ++frac;
            } else {
                throw ParseError("bad number: " + s);
            }
        }
        if (digits.empty()) throw ParseError("bad number: " + s);
        // a leading zero would make the Integer constructor read octal
        const auto nz = digits.find_first_not_of('0');
        digits = nz == std::string::npos ? "0" : digits.substr(nz);
        Rational r{Integer(digits)};
        const long shift = exp10 - frac;
        Integer ten = 10;
        Integer scale = boost::multiprecision::pow(ten, static_cast<unsigned>(shift < 0 ? -shift : shift));
        r = shift < 0 ? r / Rational(scale) : r * Rational(scale);
        return neg ? Rational(-r) : r;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad number: " + s);
    }
}

/// Integer power with negative exponents allowed.
inline Rational ipow(const Rational& x, long k) {
    if (k < 0) {
        if (x == 0) throw ZeroDenominator("zero raised to a negative power");
        return ipow(Rational(1) / x, -k);
    }
    Rational result = 1;
    Rational base = x;
    auto e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

/**
 * A deformation parameter q. Rejects q = 0 and every root of unity of order up
 * to N_max; over the rationals the latter are just q = 1 and q = -1.
 */
class QParam {
public:
    explicit QParam(Rational q) : q_(std::move(q)) {
        if (q_ == 0) throw InvalidQ("q must be nonzero");
        if (abs(q_) == 1) throw InvalidQ("q must not be a root of unity, got " + to_string(q_));
    }
    const Rational& value() const noexcept { return q_; }
    operator const Rational&() const noexcept { return q_; }

private:
    Rational q_;
};

/// q-bracket [n]_q = (q^n - 1)/(q - 1), valid for every integer n.
inline Rational qbracket(long n, const Rational& q) {
    if (q == 1) throw InvalidQ("q-bracket needs q != 1");
    return (ipow(q, n) - 1) / (q - 1);
}

/// Exact square root of a nonnegative rational, if it exists.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    const Integer n = numerator(r);
    const Integer d = denominator(r);
    const Integer sn = sqrt(n);
    const Integer sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

inline BigFloat to_bf(const Rational& r) {
    return BigFloat(numerator(r)) / BigFloat(denominator(r));
}

/// Decimal rendering with an explicit digit count.
inline std::string to_string(const BigFloat& x, unsigned digits) {
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

/// Sets the process-wide MPFR default precision for the lifetime of the guard.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits) : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(digits);
    }
    ~PrecisionGuard() { BigFloat::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

/// Complex number over BigFloat.
struct ComplexBF {
    BigFloat re{0};
    BigFloat im{0};

    ComplexBF() = default;
    ComplexBF(int v) : re(v), im(0) {}
    ComplexBF(BigFloat r) : re(std::move(r)), im(0) {}
    ComplexBF(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    ComplexBF& operator+=(const ComplexBF& o) { re += o.re; im += o.im; return *this; }
    ComplexBF& operator-=(const ComplexBF& o) { re -= o.re; im -= o.im; return *this; }
    ComplexBF& operator*=(const ComplexBF& o) {
        BigFloat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    ComplexBF& operator/=(const ComplexBF& o) {
        const BigFloat d = o.re * o.re + o.im * o.im;
        if (d == 0) throw ZeroDenominator("complex division by zero");
        BigFloat r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }
    friend ComplexBF operator+(ComplexBF a, const ComplexBF& b) { return a += b; }
    friend ComplexBF operator-(ComplexBF a, const ComplexBF& b) { return a -= b; }
    friend ComplexBF operator*(ComplexBF a, const ComplexBF& b) { return a *= b; }
    friend ComplexBF operator/(ComplexBF a, const ComplexBF& b) { return a /= b; }
    friend ComplexBF operator-(const ComplexBF& a) { return {-a.re, -a.im}; }
    friend bool operator==(const ComplexBF& a, const ComplexBF& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const ComplexBF& a, const ComplexBF& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const ComplexBF& z) {
        return os << z.re << (z.im < 0 ? " - " : " + ") << abs(z.im) << "i";
    }
};

inline BigFloat abs(const ComplexBF& z) { return boost::multiprecision::hypot(z.re, z.im); }
inline ComplexBF conj(const ComplexBF& z) { return {z.re, -z.im}; }

/// Principal square root (branch cut on the negative real axis, result in the right half plane).
inline ComplexBF sqrt_principal(const ComplexBF& z) {
    if (z.im == 0) {
        if (z.re >= 0) return {sqrt(z.re), BigFloat(0)};
        return {BigFloat(0), sqrt(-z.re)};
    }
    const BigFloat m = abs(z);
    BigFloat r = sqrt((m + z.re) / 2);
    BigFloat i = sqrt((m - z.re) / 2);
    if (z.im < 0) i = -i;
    return {std::move(r), std::move(i)};
}

inline ComplexBF to_cbf(const Rational& r) { return ComplexBF(to_bf(r)); }

/// Result of sqrt_param: exact when q is a rational square, otherwise numeric.
struct SqrtValue {
    bool exact = false;
    Rational value;    // valid when exact
    BigFloat approx;   // always filled
};

inline SqrtValue sqrt_param(const Rational& q) {
    if (q < 0) throw NegativeArgument("square root of negative q = " + to_string(q));
    SqrtValue out;
    if (auto s = exact_sqrt(q)) {
        out.exact = true;
        out.value = *s;
        out.approx = to_bf(*s);
    } else {
        out.approx = sqrt(to_bf(q));
    }
    return out;
}

} // namespace qform
