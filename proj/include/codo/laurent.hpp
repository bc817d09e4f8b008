#pragma once

#include <limits>
#include <string>
#include <vector>

#include "codo/affine.hpp"

namespace codo {

/**
 * Truncated Laurent series: coefficients are exact for every exponent
 * e < trunc (dense from `low` upward, zero below `low`), unknown from trunc
 * on.  Truncations are tracked tightly through arithmetic; reading past the
 * truncation throws TruncationTooShort.  trunc = kInf marks exact data
 * (polynomial content stored as a series).
 */
class TruncatedLaurent {
public:
    static constexpr int kInf = std::numeric_limits<int>::max() / 4;

    TruncatedLaurent() : low_(kInf), trunc_(kInf) {}
    explicit TruncatedLaurent(AffineForm cst, int trunc = kInf);

    static TruncatedLaurent zero(int trunc = kInf);
    static TruncatedLaurent monomial(int exp, AffineForm coeff, int trunc = kInf);
    static TruncatedLaurent from_coeffs(int low, std::vector<AffineForm> coeffs,
                                        int trunc);

    int low() const { return low_; }
    // One past the highest stored exponent; coefficients in
    // [stored_end, trunc) are known zero.
    int stored_end() const { return low_ + static_cast<int>(c_.size()); }
    int trunc() const { return trunc_; }
    bool is_exact() const { return trunc_ == kInf; }
    // All stored coefficients vanish (zero through the truncation).
    bool is_zero() const { return c_.empty(); }
    bool has_unknowns() const;

    bool known(int exp) const { return exp < trunc_; }
    // Throws TruncationTooShort for exp >= trunc.
    AffineForm coeff(int exp) const;

    TruncatedLaurent operator-() const;
    TruncatedLaurent operator+(const TruncatedLaurent& o) const;
    TruncatedLaurent operator-(const TruncatedLaurent& o) const;
    TruncatedLaurent operator*(const TruncatedLaurent& o) const;
    TruncatedLaurent& operator+=(const TruncatedLaurent& o) { return *this = *this + o; }
    TruncatedLaurent scaled(const AffineForm& f) const;

    TruncatedLaurent derivative() const;
    // Needs the x^-1 coefficient both known (else TruncationTooShort) and zero
    // (else NonIntegrableTerm); the given form becomes the constant term.
    TruncatedLaurent antiderivative(const AffineForm& constant) const;

    TruncatedLaurent substitute(const std::map<UnknownId, Scalar>& values,
                                bool strict) const;
    TruncatedLaurent truncated_to(int trunc) const;

    bool operator==(const TruncatedLaurent& o) const {
        return low_ == o.low_ && trunc_ == o.trunc_ && c_ == o.c_;
    }
    bool operator!=(const TruncatedLaurent& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    int low_;                   // == trunc_ when the series is zero
    std::vector<AffineForm> c_; // c_[i] is the coefficient of x^(low_ + i)
    int trunc_;

    static int sat_add(int a, int b);
    static int sat_min(int a, int b) { return a < b ? a : b; }
    void normalize();
};

} // namespace codo
