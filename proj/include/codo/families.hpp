#pragma once

#include <optional>

#include "codo/recurrence.hpp"

namespace codo {

/**
 * Polynomial family: r1 = alpha2 x^2 + alpha0, q1 = beta x^2 + alpha2 x,
 * q2 = gamma x with gamma^2 = -n^2 alpha2^2.  The default gamma is
 * n alpha2 t with t^2 = -1; the override exists so that the constraint can
 * be probed with values that violate it.
 */
struct Theorem2Params {
    int n = 1;
    Rational alpha0 = Rational(0);
    Rational alpha2 = Rational(0);
    Rational beta = Rational(0);
    Scalar mu1 = Scalar(1);
    Scalar mu2 = Scalar(-1);
    std::optional<Scalar> gamma;

    Scalar effective_gamma() const;
};

/**
 * Elliptic family: r1 = q1 = 0 and q2 = alpha p(x) where p is the
 * Weierstrass function with (p')^2 = 4 p^3 + g2 p and
 * alpha^2 = 64 n^4 - 4 n^2.  Entries are Laurent series about the pole of
 * p; `trunc` is the working truncation order (0 picks a default that leaves
 * a comfortable certification margin after g = 2n recurrence steps).
 */
struct Theorem3Params {
    int n = 1;
    Rational g2 = Rational(0);
    Scalar mu1 = Scalar(1);
    Scalar mu2 = Scalar(-1);
    int trunc = 0;

    int effective_trunc() const { return trunc > 0 ? trunc : 8 * n + 12; }
    Rational extension() const;
};

StructuredL theorem2_operator(const Theorem2Params& p);
StructuredL theorem3_operator(const Theorem3Params& p);

/**
 * Exponent window [low, trunc) on which every coefficient of [a, b] is
 * known exactly.  `low` is a lower bound for the deepest pole any entry of
 * the products a b and b a can reach; exact rings report an unbounded
 * window.
 */
struct CommutationWindow {
    int low = 0;
    int trunc = TruncatedLaurent::kInf;

    bool unbounded() const { return trunc == TruncatedLaurent::kInf; }
    int orders() const { return unbounded() ? TruncatedLaurent::kInf : trunc - low; }
};

CommutationWindow commutation_window(const DiffOperator& a, const DiffOperator& b);

struct BuiltPair {
    StructuredL coeffs;
    DiffOperator L;
    DiffOperator M;
    Rational d;  // quadratic extension the entries live in
    ConstantSolution constants;
    CommutationWindow window;
};

/**
 * Runs the recurrence for g = 2n levels, solves the termination conditions
 * for the integration constants and assembles the companion M of order 4n.
 * Commutation of the result is re-checked from scratch.  Throws
 * InconsistentSystem when the termination conditions cannot be met, e.g.
 * for a gamma override violating gamma^2 = -n^2 alpha2^2.
 */
BuiltPair build_theorem2(const Theorem2Params& p);
BuiltPair build_theorem3(const Theorem3Params& p);

enum class FixtureVariant { AsPrinted, Corrected };

/**
 * Hand-expanded companions of theorem2_operator at n = 1, kept as
 * independent cross-checks of the recurrence path.  example1 pairs with
 * mu = (1, -1), example2 with mu = (1, 2); c1 and c0 select the member
 * M + c1 L + c0 of the commuting family.  Corrected applies any entry
 * adjustments forced by the commutation oracle; the variants currently
 * coincide (the one doubtful table coefficient cross-checked clean).
 */
DiffOperator example1_M(const Rational& alpha0, const Rational& alpha2,
                        const Rational& beta, const Scalar& c1, const Scalar& c0,
                        FixtureVariant variant = FixtureVariant::Corrected);
DiffOperator example2_M(const Rational& alpha0, const Rational& alpha2,
                        const Rational& beta, const Scalar& c1, const Scalar& c0,
                        FixtureVariant variant = FixtureVariant::Corrected);

}  // namespace codo
