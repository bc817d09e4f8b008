#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codo/diffop.hpp"

namespace codo {

/** Dense univariate polynomial over the session field. */
class ScalarPoly {
public:
    ScalarPoly() = default;
    explicit ScalarPoly(Scalar c) { set(0, std::move(c)); }

    static ScalarPoly monomial(int exp, Scalar c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(int exp) const;
    void set(int exp, Scalar v);
    const Scalar& leading() const;

    ScalarPoly operator-() const;
    ScalarPoly operator+(const ScalarPoly& o) const;
    ScalarPoly operator-(const ScalarPoly& o) const;
    ScalarPoly operator*(const ScalarPoly& o) const;
    ScalarPoly scaled(const Scalar& s) const;
    ScalarPoly derivative() const;
    ScalarPoly monic() const;

    bool operator==(const ScalarPoly& o) const { return c_ == o.c_; }
    bool operator!=(const ScalarPoly& o) const { return !(*this == o); }

    // Euclidean division a = q b + r with deg r < deg b; b must be nonzero.
    static std::pair<ScalarPoly, ScalarPoly> divmod(const ScalarPoly& a,
                                                    const ScalarPoly& b);

    // Exact square root over the session field, when one exists.
    std::optional<ScalarPoly> sqrt() const;

    std::string to_string(const std::string& var) const;

private:
    std::vector<Scalar> c_;

    void normalize();
};

// Monic gcd (zero when both inputs are zero).
ScalarPoly poly_gcd(ScalarPoly a, ScalarPoly b);

// Resultant via the Sylvester determinant; zero iff a and b share a root
// over the algebraic closure (for nonzero inputs).
Scalar resultant(const ScalarPoly& a, const ScalarPoly& b);

/**
 * Polynomial relation between the commuting pair, keyed by
 * (z-degree, w-degree).  No zero coefficients are stored and the leading
 * coefficient in lexicographic (w-degree, z-degree) order is 1.
 */
struct Curve {
    std::map<std::pair<int, int>, Scalar> coeffs;

    static Curve from_w_parts(const std::vector<ScalarPoly>& parts);

    Scalar coeff(int zdeg, int wdeg) const;
    void set(int zdeg, int wdeg, Scalar v);

    int wdegree() const;
    int zdegree() const;
    bool is_zero() const { return coeffs.empty(); }

    // z-polynomial multiplying w^wdeg
    ScalarPoly w_part(int wdeg) const;

    // scales so the (w-degree, z-degree)-lex leading coefficient is 1
    Curve normalized() const;
    Curve scaled(const Scalar& s) const;

    bool operator==(const Curve& o) const { return coeffs == o.coeffs; }
    bool operator!=(const Curve& o) const { return !(*this == o); }

    // monomials in descending (w-degree, z-degree) order
    std::string to_string() const;
};

/**
 * Searches for the minimal relation R(z, w) with R(L, M) = 0, monic in the
 * highest power of w.  The linear-in-w form is tried before the quadratic
 * one, each with ascending z-degree up to degz; the first consistent system
 * wins.  `unique` is false when the winning degree still leaves free
 * coefficients (the reported relation pins them to zero).
 */
struct RelationResult {
    Curve curve;
    bool unique = true;
};

RelationResult find_quadratic_relation(const DiffOperator& l, const DiffOperator& m,
                                       int degz);

// Substitutes z -> l, w -> m into the relation.  A zero result certifies it.
DiffOperator eval_relation(const Curve& r, const DiffOperator& l,
                           const DiffOperator& m);

/**
 * Splitting of a w-quadratic relation over the session field.  When the
 * discriminant p^2 - 4q has an exact polynomial square root s, the relation
 * factors as (w + (p-s)/2)(w + (p+s)/2); otherwise it is irreducible over
 * the field (which says nothing about extensions).
 */
struct Reducibility {
    bool reducible = false;
    ScalarPoly discriminant;
    Curve f1, f2;  // linear-in-w factors, set when reducible
};

Reducibility reducibility_quadratic(const Curve& r);

// True iff f is squarefree, i.e. gcd(f, f') is constant: the affine part of
// w^2 = f(z) is then nonsingular.
bool nonsingular_hyperelliptic(const ScalarPoly& f);

}  // namespace codo
