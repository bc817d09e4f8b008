#pragma once

#include "codo/laurent.hpp"

namespace codo {

/**
 * The even Laurent solution p(x) = x^-2 + sum_{k>=1} c_k x^{2k} of
 * (p')^2 = 4 p^3 + g2 p, determined order by order from the equation itself
 * (the first coefficient comes out as c_1 = -g2/20).  Coefficients are exact
 * for all exponents below trunc.
 */
TruncatedLaurent weierstrass_p(const Scalar& g2, int trunc);

// Residual (p')^2 - 4 p^3 - g2 p of a candidate series; zero through its
// truncation exactly when p solves the defining equation.
TruncatedLaurent weierstrass_residual(const TruncatedLaurent& p, const Scalar& g2);

} // namespace codo
