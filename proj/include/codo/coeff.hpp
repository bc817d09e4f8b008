#pragma once

#include <variant>

#include "codo/laurent.hpp"
#include "codo/xpoly.hpp"

namespace codo {

enum class RingTag { Polynomial, Laurent };

/**
 * Coefficient of a differential operator: polynomial in x or truncated
 * Laurent series, both over affine forms.  Mixing the two rings in one
 * expression throws MixedRing.
 */
class CoeffElem {
public:
    CoeffElem() : v_(XPolynomial()) {}
    CoeffElem(XPolynomial p) : v_(std::move(p)) {}
    CoeffElem(TruncatedLaurent s) : v_(std::move(s)) {}

    static CoeffElem constant(RingTag tag, AffineForm f);

    RingTag tag() const {
        return std::holds_alternative<XPolynomial>(v_) ? RingTag::Polynomial
                                                       : RingTag::Laurent;
    }
    const XPolynomial& poly() const;
    const TruncatedLaurent& laurent() const;

    bool is_zero() const;
    bool has_unknowns() const;
    // The value as a plain constant, if it is one (poly of degree <= 0 or
    // series with support only at exponent 0) with no unknowns.
    std::optional<Scalar> as_constant() const;

    CoeffElem operator-() const;
    CoeffElem operator+(const CoeffElem& o) const;
    CoeffElem operator-(const CoeffElem& o) const;
    CoeffElem operator*(const CoeffElem& o) const;
    CoeffElem& operator+=(const CoeffElem& o) { return *this = *this + o; }
    CoeffElem& operator-=(const CoeffElem& o) { return *this = *this - o; }
    CoeffElem scaled(const AffineForm& f) const;
    CoeffElem scaled(const Scalar& s) const { return scaled(AffineForm(s)); }

    CoeffElem derivative() const;
    CoeffElem antiderivative(const AffineForm& constant) const;
    CoeffElem substitute(const std::map<UnknownId, Scalar>& values,
                         bool strict) const;

    // Coefficient of x^exp; for Laurent input subject to the truncation.
    AffineForm coeff(int exp) const;

    bool operator==(const CoeffElem& o) const { return v_ == o.v_; }
    bool operator!=(const CoeffElem& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::variant<XPolynomial, TruncatedLaurent> v_;

    static void check_same(const CoeffElem& x, const CoeffElem& y);
};

} // namespace codo
