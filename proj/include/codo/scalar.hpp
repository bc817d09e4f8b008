#pragma once

#include <optional>
#include <string>

#include "codo/rational.hpp"

namespace codo {

/**
 * Element a + b*t of the quadratic extension Q(t), t^2 = d.  The extension
 * parameter d is fixed per computation session (d = -1 hosts the imaginary
 * unit; d = 64n^4 - 4n^2 hosts the elliptic coupling constant); an element
 * with b = 0 is compatible with any session.
 */
class Scalar {
public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(long n) : a_(n), b_(0), d_(0) {}
    Scalar(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
    Scalar(Rational a, Rational b, Rational d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    // t itself in the session with t^2 = d.
    static Scalar root(Rational d) { return Scalar(Rational(0), Rational(1), std::move(d)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    // Meaningful only when b != 0.
    const Rational& d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    Scalar operator-() const { return Scalar(-a_, -b_, d_); }
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar conj() const { return Scalar(a_, -b_, d_); }
    // N(a + b t) = a^2 - d b^2; multiplicative, zero exactly on zero divisors.
    Rational norm() const { return a_ * a_ - d_ * b_ * b_; }
    Scalar inverse() const;

    // Exact square root within the same session, if one exists.
    std::optional<Scalar> sqrt() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "a" when b = 0, else "a+b*t" / "a-b*t" with display-form rationals.
    std::string to_string() const;

private:
    Rational a_, b_, d_;

    // Session of the result of combining two elements; throws MixedRing when
    // both carry a t-component over different d.
    static const Rational& merged_d(const Scalar& x, const Scalar& y);
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }
inline Scalar operator*(const Rational& r, const Scalar& s) { return Scalar(r) * s; }

} // namespace codo
