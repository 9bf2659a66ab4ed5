#pragma once

#include <cmath>
#include <complex>
#include <string>

#include <gmpxx.h>

#include "gdz/error.hpp"
#include "gdz/policy.hpp"

namespace gdz {

/// Complex number with exact rational real and imaginary parts.
/// mpq_class keeps every value in canonical reduced form (positive
/// denominator, gcd 1), so operator== is structural equality.
struct ExactScalar {
    mpq_class re;
    mpq_class im;

    ExactScalar() : re(0), im(0) {}
    ExactScalar(long r) : re(r), im(0) {}
    ExactScalar(mpq_class r) : re(std::move(r)), im(0) {}
    ExactScalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static ExactScalar zero() { return ExactScalar(); }
    static ExactScalar one() { return ExactScalar(1); }
    static ExactScalar rational(long num, long den) {
        if (den == 0) throw DivisionByZeroError();
        mpq_class q(num, den);
        q.canonicalize();
        return ExactScalar(q);
    }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

    ExactScalar operator-() const { return {-re, -im}; }

    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
        if (y.is_zero()) throw DivisionByZeroError();
        mpq_class n = y.re * y.re + y.im * y.im;
        return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
    }

    ExactScalar& operator+=(const ExactScalar& y) { *this = *this + y; return *this; }
    ExactScalar& operator-=(const ExactScalar& y) { *this = *this - y; return *this; }
    ExactScalar& operator*=(const ExactScalar& y) { *this = *this * y; return *this; }

    /// Magnitude surrogate max(|re|,|im|) as a double, for residual reports.
    double abs_upper() const {
        double r = std::fabs(re.get_d());
        double i = std::fabs(im.get_d());
        return r > i ? r : i;
    }
};

/// Complex double backend. Arithmetic that produces a non-finite value
/// throws OverflowError instead of letting NaN/Inf propagate.
struct FloatScalar {
    std::complex<double> v;

    FloatScalar() : v(0.0, 0.0) {}
    FloatScalar(long r) : v(static_cast<double>(r), 0.0) {}
    FloatScalar(double r) : v(r, 0.0) {}
    FloatScalar(double r, double i) : v(r, i) {}
    FloatScalar(std::complex<double> z) : v(z) {}

    static FloatScalar zero() { return FloatScalar(); }
    static FloatScalar one() { return FloatScalar(1.0); }
    static FloatScalar rational(long num, long den) {
        if (den == 0) throw DivisionByZeroError();
        return FloatScalar(static_cast<double>(num) / static_cast<double>(den));
    }

    bool is_zero() const { return v.real() == 0.0 && v.imag() == 0.0; }

    static FloatScalar checked(std::complex<double> z) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw OverflowError("non-finite result");
        return FloatScalar(z);
    }

    friend bool operator==(const FloatScalar& x, const FloatScalar& y) { return x.v == y.v; }
    friend bool operator!=(const FloatScalar& x, const FloatScalar& y) { return !(x == y); }

    FloatScalar operator-() const { return FloatScalar(-v); }

    friend FloatScalar operator+(const FloatScalar& x, const FloatScalar& y) {
        return checked(x.v + y.v);
    }
    friend FloatScalar operator-(const FloatScalar& x, const FloatScalar& y) {
        return checked(x.v - y.v);
    }
    friend FloatScalar operator*(const FloatScalar& x, const FloatScalar& y) {
        return checked(x.v * y.v);
    }
    friend FloatScalar operator/(const FloatScalar& x, const FloatScalar& y) {
        if (y.is_zero()) throw DivisionByZeroError();
        return checked(x.v / y.v);
    }

    FloatScalar& operator+=(const FloatScalar& y) { *this = *this + y; return *this; }
    FloatScalar& operator-=(const FloatScalar& y) { *this = *this - y; return *this; }
    FloatScalar& operator*=(const FloatScalar& y) { *this = *this * y; return *this; }

    double abs_upper() const {
        double r = std::fabs(v.real());
        double i = std::fabs(v.imag());
        return r > i ? r : i;
    }
};

// ---- backend traits ---------------------------------------------------------

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactScalar> {
    static constexpr bool exact = true;
    static constexpr const char* mode_name = "exact";
    static bool is_zero(const ExactScalar& s, const TolerancePolicy&) { return s.is_zero(); }
    static bool equal(const ExactScalar& x, const ExactScalar& y, const TolerancePolicy&) {
        return x == y;
    }
};

template <>
struct ScalarTraits<FloatScalar> {
    static constexpr bool exact = false;
    static constexpr const char* mode_name = "float";
    static bool is_zero(const FloatScalar& s, const TolerancePolicy& pol) {
        return std::abs(s.v) <= pol.zero_threshold;
    }
    static bool equal(const FloatScalar& x, const FloatScalar& y, const TolerancePolicy& pol) {
        double d = std::abs(x.v - y.v);
        if (d <= pol.zero_threshold) return true;
        double scale = std::max(std::abs(x.v), std::abs(y.v));
        return d <= pol.rel_threshold * scale;
    }
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Field arithmetic with the backend's division guard. Division checks
/// |y| against the policy's zero threshold in the floating backend.
template <class S>
S scalar_arith(const S& x, const S& y, ArithOp op, const TolerancePolicy& pol = {}) {
    switch (op) {
        case ArithOp::Add: return x + y;
        case ArithOp::Sub: return x - y;
        case ArithOp::Mul: return x * y;
        case ArithOp::Div:
            if (ScalarTraits<S>::is_zero(y, pol)) throw DivisionByZeroError();
            return x / y;
    }
    throw Error("unreachable");
}

// ---- textual form -----------------------------------------------------------

/// Canonical text form of an exact scalar: "p/q", "r/si" or "p/q+r/si"
/// with "/1" denominators omitted (e.g. "1/2", "-3i", "2-1/2i").
std::string to_string(const ExactScalar& s);
ExactScalar parse_exact_scalar(const std::string& text);

ExactScalar parse_rational(const std::string& text); // real rational only

inline FloatScalar to_float(const ExactScalar& s) {
    return FloatScalar(s.re.get_d(), s.im.get_d());
}

} // namespace gdz
