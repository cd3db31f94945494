#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace qcsurf {

using Rational = boost::multiprecision::cpp_rational;

/**
 * GoldenScalar: an exact element a + b*tau of the quadratic field Q(tau),
 * tau = (1+sqrt(5))/2.
 *
 * Multiplication reduces powers of tau with tau^2 = tau + 1.  The Galois
 * conjugate sends tau -> 1 - tau, so conj(a + b tau) = (a+b) - b tau, and
 * the field norm x * conj(x) = a^2 + a*b - b^2 is rational.
 *
 * Coefficients are arbitrary-precision rationals, so long window iterations
 * neither overflow nor drift.  Comparisons and sign tests are exact; the
 * only lossy operation is to_double(), intended for output boundaries.
 *
 * Immutable value type, safe to share between threads.
 */
class GoldenScalar {
public:
    GoldenScalar() = default;
    GoldenScalar(int v) : a_(v) {}
    GoldenScalar(long long v) : a_(v) {}
    explicit GoldenScalar(Rational v) : a_(std::move(v)) {}
    GoldenScalar(Rational rational_part, Rational tau_part)
        : a_(std::move(rational_part)), b_(std::move(tau_part)) {}

    static GoldenScalar tau() { return GoldenScalar(0, 1); }
    /// tau^n for any integer n; tau^-1 = tau - 1.
    static GoldenScalar tau_pow(int n);

    const Rational& rational_part() const { return a_; }
    const Rational& tau_part() const { return b_; }

    GoldenScalar galois_conjugate() const { return GoldenScalar(a_ + b_, -b_); }
    Rational field_norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

    /// Exact sign (-1, 0, +1), decided by rational arithmetic only.
    int sign() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    GoldenScalar abs() const { return sign() < 0 ? -*this : *this; }

    /// Nearest double; evaluated in extended precision to avoid cancellation.
    double to_double() const;

    GoldenScalar operator-() const { return GoldenScalar(-a_, -b_); }

    GoldenScalar& operator+=(const GoldenScalar& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    GoldenScalar& operator-=(const GoldenScalar& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    GoldenScalar& operator*=(const GoldenScalar& o);
    /// Division by the conjugate over the norm; throws std::domain_error on /0.
    GoldenScalar& operator/=(const GoldenScalar& o);

    friend GoldenScalar operator+(GoldenScalar x, const GoldenScalar& y) { return x += y; }
    friend GoldenScalar operator-(GoldenScalar x, const GoldenScalar& y) { return x -= y; }
    friend GoldenScalar operator*(GoldenScalar x, const GoldenScalar& y) { return x *= y; }
    friend GoldenScalar operator/(GoldenScalar x, const GoldenScalar& y) { return x /= y; }

    friend bool operator==(const GoldenScalar& x, const GoldenScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const GoldenScalar& x, const GoldenScalar& y) { return !(x == y); }
    friend bool operator<(const GoldenScalar& x, const GoldenScalar& y) {
        return (x - y).sign() < 0;
    }
    friend bool operator>(const GoldenScalar& x, const GoldenScalar& y) { return y < x; }
    friend bool operator<=(const GoldenScalar& x, const GoldenScalar& y) { return !(y < x); }
    friend bool operator>=(const GoldenScalar& x, const GoldenScalar& y) { return !(x < y); }

    std::string to_string() const;

private:
    Rational a_;  // coefficient of 1
    Rational b_;  // coefficient of tau
};

std::ostream& operator<<(std::ostream& os, const GoldenScalar& x);

/**
 * Parses an exact golden-rational expression: integer literals, the symbol
 * "tau", binary + - * /, unary -, and parentheses.  Floating-point literals
 * are rejected so callers cannot silently lose exactness.
 *
 * Throws std::invalid_argument on syntax errors and std::domain_error on
 * division by zero.
 */
GoldenScalar parse_golden(std::string_view expr);

}  // namespace qcsurf
