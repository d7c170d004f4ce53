#pragma once

// Exact arithmetic in the real quadratic field Q(sqrt 5).  Every geometric
// predicate downstream (facet adjacency, isometry membership) reduces to
// exact equality or sign tests on these values, so there is no floating
// point anywhere in the pipeline.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace smallcover {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// a + b*sqrt(5) with rational a, b.  Components are kept in lowest terms
// with positive denominator by the underlying rational type.
struct QuadraticRational {
    Rational a;
    Rational b;

    QuadraticRational() = default;
    QuadraticRational(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit QuadraticRational(long v) : a(v), b(0) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend QuadraticRational operator+(const QuadraticRational& x, const QuadraticRational& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend QuadraticRational operator-(const QuadraticRational& x, const QuadraticRational& y) {
        return {x.a - y.a, x.b - y.b};
    }
    QuadraticRational operator-() const { return {-a, -b}; }
    friend QuadraticRational operator*(const QuadraticRational& x, const QuadraticRational& y) {
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 5 b1 b2 + (a1 b2 + a2 b1) s
        return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const QuadraticRational& x, const QuadraticRational& y) {
        return x.a == y.a && x.b == y.b;
    }

    // sqrt(5) is irrational, so the field norm a^2 - 5 b^2 vanishes only at 0.
    QuadraticRational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero in Q(sqrt5)");
        Rational n = a * a - 5 * b * b;
        return {a / n, -b / n};
    }
    friend QuadraticRational operator/(const QuadraticRational& x, const QuadraticRational& y) {
        return x * y.inverse();
    }

    // Exact sign of a + b*sqrt(5): decided by the signs of a, b and the
    // comparison of a^2 against 5 b^2, never by evaluating the square root.
    int sign() const {
        int sa = a == 0 ? 0 : (a > 0 ? 1 : -1);
        int sb = b == 0 ? 0 : (b > 0 ? 1 : -1);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rational lhs = a * a;
        Rational rhs = 5 * b * b;
        if (lhs == rhs) return 0;  // cannot happen for nonzero b, kept for symmetry
        return (lhs > rhs) ? sa : sb;
    }

    friend bool operator<(const QuadraticRational& x, const QuadraticRational& y) {
        return (x - y).sign() < 0;
    }
    friend bool operator>(const QuadraticRational& x, const QuadraticRational& y) { return y < x; }
    friend bool operator!=(const QuadraticRational& x, const QuadraticRational& y) { return !(x == y); }

    std::string str() const {
        std::string s = a.str();
        if (b != 0) s += (b > 0 ? "+" : "") + b.str() + "*sqrt5";
        return s;
    }
};

inline QuadraticRational golden_ratio() { return {Rational(1, 2), Rational(1, 2)}; }
inline QuadraticRational golden_ratio_inverse() { return {Rational(-1, 2), Rational(1, 2)}; }

}  // namespace smallcover
