#include "doctest.h"

#include "codo/errors.hpp"
#include "codo/scalar.hpp"

using codo::Rational;
using codo::Scalar;

namespace {
const Rational kMinusOne(-1);
const Scalar kI = Scalar::root(kMinusOne);
}  // namespace

TEST_CASE("t squares to d") {
    CHECK(kI * kI == Scalar(-1));
    Scalar s = Scalar::root(Rational(60));
    CHECK(s * s == Scalar(60));
}

TEST_CASE("field arithmetic in one extension") {
    Scalar x(Rational(1, 2), Rational(3), kMinusOne);  // 1/2 + 3t
    Scalar y(Rational(2), Rational(-1), kMinusOne);    // 2 - t
    CHECK(x + y == Scalar(Rational(5, 2), Rational(2), kMinusOne));
    CHECK(x * y == Scalar(Rational(4), Rational(11, 2), kMinusOne));
    CHECK(x - x == Scalar(0));
    CHECK(x * y * y.inverse() == x);
    CHECK(x / x == Scalar(1));
}

TEST_CASE("norm and inverse") {
    Scalar x(Rational(3), Rational(2), kMinusOne);
    CHECK(x.norm() == Rational(13));
    CHECK(x * x.conj() == Scalar(Rational(13)));
    CHECK(x.inverse() == Scalar(Rational(3, 13), Rational(-2, 13), kMinusOne));
    CHECK_THROWS_AS(Scalar(0).inverse(), codo::DivisionByZero);
    // 64 - 4 = 60 is not a square, so a + bt with (a, b) != 0 is invertible
    Scalar y(Rational(2), Rational(1), Rational(60));
    CHECK((y * y.inverse()).is_one());
}

TEST_CASE("rational scalars are extension-agnostic") {
    Scalar plain(Rational(7));
    Scalar tagged(Rational(7), Rational(0), kMinusOne);
    CHECK(plain == tagged);
    CHECK(plain * kI == Scalar(Rational(0), Rational(7), kMinusOne));
}

TEST_CASE("mixing two nontrivial extensions is rejected") {
    Scalar a(Rational(1), Rational(1), kMinusOne);
    Scalar b(Rational(1), Rational(1), Rational(60));
    CHECK_THROWS_AS(a + b, codo::MixedRing);
    CHECK_THROWS_AS(a * b, codo::MixedRing);
}

TEST_CASE("square roots inside the extension") {
    // (1 + t)^2 = 2t for t^2 = -1
    Scalar target(Rational(0), Rational(2), kMinusOne);
    auto r = target.sqrt();
    REQUIRE(r.has_value());
    CHECK(*r * *r == target);

    // rational square
    CHECK(Scalar(Rational(9, 4)).sqrt() == Scalar(Rational(3, 2)));

    // -4 = (2t)^2 in d = -1: representable only given the extension tag
    Scalar minus4(Rational(-4), Rational(0), kMinusOne);
    auto rm = minus4.sqrt();
    REQUIRE(rm.has_value());
    CHECK(*rm * *rm == minus4);

    // 60 has no root in Q(t), t^2 = -1
    CHECK_FALSE(Scalar(Rational(60), Rational(0), kMinusOne).sqrt().has_value());

    // but d itself is a square in Q(sqrt(d))
    Scalar sixty(Rational(60), Rational(0), Rational(60));
    auto rs = sixty.sqrt();
    REQUIRE(rs.has_value());
    CHECK(*rs * *rs == sixty);
}

TEST_CASE("string form") {
    CHECK(Scalar(Rational(3, 2)).to_string() == "3/2");
    CHECK(kI.to_string() == "t");
    CHECK((Scalar(2) + kI).to_string() == "2+t");
}
