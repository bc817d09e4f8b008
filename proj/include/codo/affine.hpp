#pragma once

#include <map>
#include <string>

#include "codo/scalar.hpp"

namespace codo {

/**
 * Identifier of an integration constant C_i^k: kind i in {1..4}, level k =
 * the recurrence step that introduced it.  Ordered by (level, kind).
 */
struct UnknownId {
    int kind;   // 1..4
    int level;  // >= 0

    bool operator==(const UnknownId& o) const {
        return kind == o.kind && level == o.level;
    }
    bool operator<(const UnknownId& o) const {
        if (level != o.level)
            return level < o.level;
        return kind < o.kind;
    }

    std::string to_string() const {
        return "C" + std::to_string(kind) + "^" + std::to_string(level);
    }
};

/**
 * Scalar-valued expression affine in the integration constants:
 * cst + sum coeff_u * u.  The whole construction stays linear in the
 * constants, so a product of two forms is only defined when at least one
 * side is constant.
 */
class AffineForm {
public:
    AffineForm() = default;
    AffineForm(Scalar cst) : cst_(std::move(cst)) {}
    AffineForm(long n) : cst_(Scalar(n)) {}
    static AffineForm unknown(UnknownId id, Scalar coeff = Scalar(1));

    const Scalar& constant() const { return cst_; }
    const std::map<UnknownId, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return cst_.is_zero() && terms_.empty(); }
    bool is_constant() const { return terms_.empty(); }
    bool has_unknowns() const { return !terms_.empty(); }
    Scalar coeff_of(const UnknownId& id) const;

    AffineForm operator-() const;
    AffineForm operator+(const AffineForm& o) const;
    AffineForm operator-(const AffineForm& o) const;
    // Throws NonlinearInUnknowns when both operands carry unknowns.
    AffineForm operator*(const AffineForm& o) const;
    AffineForm& operator+=(const AffineForm& o) { return *this = *this + o; }
    AffineForm& operator-=(const AffineForm& o) { return *this = *this - o; }

    AffineForm scaled(const Scalar& s) const;

    // Replaces unknowns by values.  strict: every unknown present in the form
    // must be bound, otherwise UnboundUnknown; non-strict leaves unbound
    // unknowns symbolic.
    AffineForm substitute(const std::map<UnknownId, Scalar>& values,
                          bool strict) const;

    bool operator==(const AffineForm& o) const {
        return cst_ == o.cst_ && terms_ == o.terms_;
    }
    bool operator!=(const AffineForm& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Scalar cst_;
    std::map<UnknownId, Scalar> terms_;  // no zero coefficients stored

    void prune(const UnknownId& id);
};

} // namespace codo
