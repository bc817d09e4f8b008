#pragma once

#include <string>

#include "codo/diffop.hpp"

namespace codo {

inline constexpr const char* kFormatVersion = "1";

/**
 * Canonical text document for an operator.  The session's extension d is
 * embedded so files are self-describing; rationals are rendered as
 * "num/den" strings throughout.  Laurent entries are normalized to the
 * smallest truncation order present in the operator, so rendering is
 * canonicalizing: parse(render(op)) = op exactly when all entries already
 * share one truncation order.
 */
std::string render_operator(const DiffOperator& op, const Rational& d);

struct ParsedOperator {
    DiffOperator op;
    Rational d = Rational(0);
};

ParsedOperator parse_operator(const std::string& text);

}  // namespace codo
