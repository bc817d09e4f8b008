#pragma once

#include <map>
#include <optional>
#include <string>

#include "codo/affine.hpp"

namespace codo {

/** Sparse polynomial in x over affine forms; no zero coefficients stored. */
class XPolynomial {
public:
    XPolynomial() = default;
    XPolynomial(AffineForm cst) { set(0, std::move(cst)); }

    static XPolynomial monomial(int exp, AffineForm coeff);
    static XPolynomial x() { return monomial(1, AffineForm(Scalar(1))); }

    const std::map<int, AffineForm>& coeffs() const { return c_; }
    AffineForm coeff(int exp) const;
    void set(int exp, AffineForm coeff);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;
    bool has_unknowns() const;
    // Degree of the zero polynomial is -1.
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    AffineForm leading() const;

    XPolynomial operator-() const;
    XPolynomial operator+(const XPolynomial& o) const;
    XPolynomial operator-(const XPolynomial& o) const;
    XPolynomial operator*(const XPolynomial& o) const;
    XPolynomial& operator+=(const XPolynomial& o) { return *this = *this + o; }
    XPolynomial scaled(const AffineForm& f) const;

    XPolynomial derivative() const;
    // Primitive with the given affine form as the integration constant.
    XPolynomial antiderivative(const AffineForm& constant) const;

    XPolynomial substitute(const std::map<UnknownId, Scalar>& values,
                           bool strict) const;

    bool operator==(const XPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const XPolynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::map<int, AffineForm> c_;
};

} // namespace codo
