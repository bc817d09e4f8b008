#include "doctest.h"

#include <map>

#include "codo/affine.hpp"
#include "codo/errors.hpp"

using codo::AffineForm;
using codo::Rational;
using codo::Scalar;
using codo::UnknownId;

namespace {
const UnknownId kC12{1, 2};  // C1^2
const UnknownId kC34{3, 4};  // C3^4
}  // namespace

TEST_CASE("unknown ordering is by level, then kind") {
    CHECK(UnknownId{1, 1} < UnknownId{1, 2});
    CHECK(UnknownId{4, 1} < UnknownId{1, 2});
    CHECK(UnknownId{1, 2} < UnknownId{3, 2});
    CHECK(UnknownId{1, 2}.to_string() == "C1^2");
}

TEST_CASE("linear arithmetic") {
    AffineForm f = AffineForm(Scalar(3)) + AffineForm::unknown(kC12, Scalar(2));
    AffineForm g = AffineForm::unknown(kC12, Scalar(-2)) + AffineForm::unknown(kC34);
    AffineForm s = f + g;
    CHECK(s.constant() == Scalar(3));
    CHECK(s.terms().size() == 1);  // the C1^2 parts cancel
    CHECK(s.terms().begin()->first == kC34);

    AffineForm doubled = f.scaled(Scalar(2));
    CHECK(doubled.constant() == Scalar(6));
    CHECK(doubled.terms().at(kC12) == Scalar(4));
}

TEST_CASE("products stay linear or throw") {
    AffineForm f = AffineForm(Scalar(3)) + AffineForm::unknown(kC12);
    AffineForm c(Scalar(5));
    CHECK((f * c).constant() == Scalar(15));
    CHECK((c * f).terms().at(kC12) == Scalar(5));
    CHECK_THROWS_AS(f * f, codo::NonlinearInUnknowns);
}

TEST_CASE("substitution") {
    AffineForm f = AffineForm(Scalar(1)) + AffineForm::unknown(kC12, Scalar(2)) +
                   AffineForm::unknown(kC34, Scalar(-1));
    std::map<UnknownId, Scalar> values{{kC12, Scalar(10)}, {kC34, Scalar(4)}};
    CHECK(f.substitute(values, true) == AffineForm(Scalar(17)));

    std::map<UnknownId, Scalar> partial{{kC12, Scalar(10)}};
    CHECK_THROWS_AS(f.substitute(partial, true), codo::UnboundUnknown);
    AffineForm loose = f.substitute(partial, false);
    CHECK(loose.constant() == Scalar(21));
    CHECK(loose.terms().size() == 1);
}

TEST_CASE("zero pruning") {
    AffineForm f = AffineForm::unknown(kC12) + AffineForm::unknown(kC12, Scalar(-1));
    CHECK(f.is_zero());
    CHECK(f.is_constant());
}
