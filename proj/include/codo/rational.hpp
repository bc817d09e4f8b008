#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "codo/errors.hpp"

namespace codo {

/** Arbitrary-precision rational, always reduced with positive denominator. */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den);

    static Rational from_mpq(mpq_class q);
    // Accepts "num", "num/den", optional leading '-'. Throws InvalidRational.
    static Rational from_string(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return from_mpq(-v_); }
    Rational operator+(const Rational& o) const { return from_mpq(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return from_mpq(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return from_mpq(v_ * o.v_); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const;

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Exact square root if the value is a square in Q.
    std::optional<Rational> sqrt() const;

    // Always "num/den", e.g. "3/1", "-2/5".
    std::string to_string() const;
    // Shorter form for reports: omits "/1".
    std::string to_display() const;

private:
    mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

} // namespace codo
