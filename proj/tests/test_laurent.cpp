#include "doctest.h"

#include "codo/errors.hpp"
#include "codo/laurent.hpp"

using codo::AffineForm;
using codo::Rational;
using codo::Scalar;
using codo::TruncatedLaurent;

namespace {

constexpr int kInf = TruncatedLaurent::kInf;

AffineForm af(long v) { return AffineForm(Scalar(v)); }
AffineForm af(long n, long d) { return AffineForm(Scalar(Rational(n, d))); }

}  // namespace

TEST_CASE("zero series carries only its truncation") {
    TruncatedLaurent z = TruncatedLaurent::zero(5);
    CHECK(z.is_zero());
    CHECK(z.low() == 5);
    CHECK(z.trunc() == 5);
    CHECK(z.coeff(4).is_zero());
    CHECK_THROWS_AS(z.coeff(5), codo::TruncationTooShort);
    CHECK(TruncatedLaurent::zero().is_exact());
}

TEST_CASE("monomial and coefficient access") {
    TruncatedLaurent m = TruncatedLaurent::monomial(-2, af(3), 4);
    CHECK(m.low() == -2);
    CHECK(m.stored_end() == -1);
    CHECK(m.coeff(-2) == af(3));
    CHECK(m.coeff(0).is_zero());   // beyond stored_end but below trunc
    CHECK(m.coeff(3).is_zero());
    CHECK(!m.known(4));
}

TEST_CASE("addition keeps the tighter truncation") {
    TruncatedLaurent a = TruncatedLaurent::monomial(0, af(1), 6);
    TruncatedLaurent b = TruncatedLaurent::monomial(2, af(5), 3);
    TruncatedLaurent s = a + b;
    CHECK(s.trunc() == 3);
    CHECK(s.coeff(0) == af(1));
    CHECK(s.coeff(2) == af(5));
    // exact + truncated stays truncated
    CHECK((a + TruncatedLaurent::monomial(1, af(1))).trunc() == 6);
}

TEST_CASE("exact zero absorbs into exact sums without materializing") {
    // the canonical zero stores low == trunc; at the exact sentinel that bound
    // must not become the stored range of the sum
    TruncatedLaurent z = TruncatedLaurent::zero();
    TruncatedLaurent m = TruncatedLaurent::monomial(-2, af(7));
    TruncatedLaurent s = z + m;
    CHECK(s.is_exact());
    CHECK(s.low() == -2);
    CHECK(s.stored_end() == -1);
    CHECK(s.coeff(-2) == af(7));
    CHECK((m + z).stored_end() == -1);
    CHECK((z + z).is_zero());
}

TEST_CASE("product truncation accounts for pole orders") {
    // (x^-2 + ...) known through x^3, squared: errors enter at
    // unknown * x^-2, i.e. exponent 4 + (-2) = 2.
    TruncatedLaurent p = TruncatedLaurent::monomial(-2, af(1), 4);
    TruncatedLaurent sq = p * p;
    CHECK(sq.low() == -4);
    CHECK(sq.trunc() == 2);
    CHECK(sq.coeff(-4) == af(1));
    CHECK(sq.coeff(1).is_zero());
    CHECK_THROWS_AS(sq.coeff(2), codo::TruncationTooShort);
}

TEST_CASE("exact factors keep products exact") {
    TruncatedLaurent a = TruncatedLaurent::monomial(3, af(2));
    TruncatedLaurent b = TruncatedLaurent::monomial(-1, af(1, 2));
    TruncatedLaurent p = a * b;
    CHECK(p.is_exact());
    CHECK(p.coeff(2) == af(1));
    CHECK(p.coeff(1000).is_zero());
}

TEST_CASE("full ring identities on dense data") {
    TruncatedLaurent f =
        TruncatedLaurent::from_coeffs(-1, {af(2), af(0), af(-3), af(1)}, 5);
    TruncatedLaurent g =
        TruncatedLaurent::from_coeffs(0, {af(1), af(4)}, 5);
    CHECK((f + g) - g == f.truncated_to((f + g).trunc()));
    CHECK((f * g).coeff(-1) == af(2));
    CHECK((f * g).coeff(0) == af(8));   // 2*4 + 0*1
    CHECK((f * g).coeff(1) == af(-3));  // 0*4 + (-3)*1
}

TEST_CASE("derivative loses one order, antiderivative restores it") {
    TruncatedLaurent f = TruncatedLaurent::from_coeffs(-2, {af(1), af(0), af(7)}, 6);
    TruncatedLaurent d = f.derivative();
    CHECK(d.trunc() == 5);
    CHECK(d.coeff(-3) == af(-2));
    CHECK(d.coeff(-1) == af(0));
    TruncatedLaurent back = d.antiderivative(af(7));
    CHECK(back == f.truncated_to(6));
}

TEST_CASE("antiderivative guards the residue term") {
    TruncatedLaurent pole = TruncatedLaurent::monomial(-1, af(1), 4);
    CHECK_THROWS_AS(pole.antiderivative(af(0)), codo::NonIntegrableTerm);
    // x^-1 unknown: cannot certify integrability
    TruncatedLaurent blind = TruncatedLaurent::zero(-1);
    CHECK_THROWS_AS(blind.antiderivative(af(0)), codo::TruncationTooShort);
}

TEST_CASE("truncated_to only tightens") {
    TruncatedLaurent f = TruncatedLaurent::from_coeffs(0, {af(1), af(2), af(3)}, kInf);
    TruncatedLaurent t = f.truncated_to(2);
    CHECK(t.trunc() == 2);
    CHECK(t.stored_end() == 2);
    CHECK_THROWS_AS(t.coeff(2), codo::TruncationTooShort);
}

TEST_CASE("unknown coefficients substitute through series") {
    codo::UnknownId id{1, 2};
    TruncatedLaurent f = TruncatedLaurent::monomial(-2, AffineForm::unknown(id), 3);
    CHECK(f.has_unknowns());
    TruncatedLaurent g = f.substitute({{id, Scalar(5)}}, true);
    CHECK(g.coeff(-2) == af(5));
    CHECK_THROWS_AS(TruncatedLaurent::monomial(0, AffineForm::unknown(id))
                        .substitute({}, true),
                    codo::UnboundUnknown);
}
