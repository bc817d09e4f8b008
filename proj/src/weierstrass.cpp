#include "codo/weierstrass.hpp"

#include "codo/errors.hpp"

namespace codo {

TruncatedLaurent weierstrass_residual(const TruncatedLaurent& p, const Scalar& g2) {
    TruncatedLaurent dp = p.derivative();
    TruncatedLaurent p2 = p * p;
    return dp * dp - (p2 * p).scaled(AffineForm(Scalar(4))) -
           p.scaled(AffineForm(g2));
}

TruncatedLaurent weierstrass_p(const Scalar& g2, int trunc) {
    if (trunc <= -2)
        throw TruncationTooShort("weierstrass_p: truncation below the pole");
    // Work far enough past the target that every residual read stays certain:
    // the residual of a series known below T is known below T - 5.
    int work = trunc + 8;
    std::vector<AffineForm> c;  // c[m-1] multiplies x^{2m}
    auto assemble = [&](int t) {
        TruncatedLaurent p = TruncatedLaurent::monomial(-2, AffineForm(Scalar(1)), t);
        for (size_t m = 1; m <= c.size(); ++m)
            p += TruncatedLaurent::monomial(2 * static_cast<int>(m), c[m - 1], t);
        return p;
    };
    // Adding a correction c_m x^{2m} shifts the residual coefficient of
    // x^{2m-4} by -(8m + 12) c_m and touches nothing below it, so each order
    // is solved by one linear division.
    for (int m = 1; 2 * m < work; ++m) {
        TruncatedLaurent r = weierstrass_residual(assemble(work + 8), g2);
        AffineForm mism = r.coeff(2 * m - 4);
        c.push_back(mism.scaled(Scalar(Rational(1, 8 * m + 12))));
    }
    return assemble(trunc);
}

} // namespace codo
