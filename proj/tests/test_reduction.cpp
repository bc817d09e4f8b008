#include "doctest.h"

#include <random>

#include "codo/reduction.hpp"

using codo::AffineForm;
using codo::CoeffElem;
using codo::DiffOperator;
using codo::KPTF;
using codo::KPTFTilde;
using codo::MatrixS;
using codo::Rational;
using codo::RingTag;
using codo::Scalar;
using codo::StructuredL;
using codo::TruncatedLaurent;
using codo::UnknownId;
using codo::XPolynomial;

namespace {

CoeffElem poly(std::initializer_list<std::pair<int, long>> terms) {
    XPolynomial p;
    for (const auto& [e, c] : terms) p.set(e, AffineForm(Scalar(c)));
    return CoeffElem(p);
}

MatrixS mat2(CoeffElem a, CoeffElem b, CoeffElem c, CoeffElem d) {
    MatrixS m(2, RingTag::Polynomial);
    m.set(0, 0, std::move(a));
    m.set(0, 1, std::move(b));
    m.set(1, 0, std::move(c));
    m.set(1, 1, std::move(d));
    return m;
}

struct Draw {
    std::mt19937 gen;
    explicit Draw(unsigned seed) : gen(seed) {}

    Rational rational() {
        std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
        return Rational(num(gen), den(gen));
    }
    CoeffElem polynomial(int maxdeg) {
        XPolynomial p;
        for (int e = 0; e <= maxdeg; ++e) p.set(e, AffineForm(Scalar(rational())));
        return CoeffElem(p);
    }
    MatrixS matrix(int maxdeg) {
        return mat2(polynomial(maxdeg), polynomial(maxdeg), polynomial(maxdeg),
                    polynomial(maxdeg));
    }
};

DiffOperator from_kptf(const KPTF& c) {
    DiffOperator op(2, RingTag::Polynomial);
    op.set_term(3, c.K);
    op.set_term(2, c.P);
    op.set_term(1, c.T);
    op.set_term(0, c.F);
    return op;
}

DiffOperator first_order(const MatrixS& a, const MatrixS& b) {
    DiffOperator op(2, a.tag());
    op.set_term(1, a);
    op.set_term(0, b);
    return op;
}

}  // namespace

TEST_CASE("three commutator routes agree on random draws") {
    Draw draw(20240917);
    for (int run = 0; run < 60; ++run) {
        StructuredL l{draw.polynomial(2), draw.polynomial(2), draw.polynomial(2)};
        MatrixS a = draw.matrix(2), b = draw.matrix(2);

        DiffOperator brute = commutator(expand_structured(l), first_order(a, b));
        KPTF direct = commutator_first_order(l.E(), l.R(), l.Q(), a, b);
        REQUIRE(from_kptf(direct) == brute);

        KPTFTilde reduced = reduce_mod_L(l.E(), l.R(), l.Q(), direct);
        REQUIRE(tilde_reexpand(l, reduced) == brute);

        KPTFTilde closed = tilde_specialized(l, a, b);
        REQUIRE((closed.Kt - reduced.Kt).is_zero());
        REQUIRE((closed.Pt - reduced.Pt).is_zero());
        REQUIRE((closed.Tt - reduced.Tt).is_zero());
        REQUIRE((closed.Ft - reduced.Ft).is_zero());
    }
}

TEST_CASE("routes agree with unknown-bearing A and B") {
    StructuredL l{poly({{1, 2}}), poly({{2, 1}, {0, -1}}), poly({{1, 3}})};
    MatrixS a = mat2(poly({{1, 1}}), poly({{0, 2}}), poly({}), poly({{2, -1}}));
    MatrixS b = mat2(poly({}), poly({{1, 5}}), poly({{0, 1}}), poly({}));
    XPolynomial u;
    u.set(0, AffineForm::unknown(UnknownId{1, 2}));
    a.set(0, 1, CoeffElem(u));
    XPolynomial v;
    v.set(1, AffineForm::unknown(UnknownId{3, 1}, Scalar(2)));
    b.set(1, 1, CoeffElem(v));

    DiffOperator brute = commutator(expand_structured(l), first_order(a, b));
    KPTF direct = commutator_first_order(l.E(), l.R(), l.Q(), a, b);
    CHECK(from_kptf(direct) == brute);
    KPTFTilde reduced = reduce_mod_L(l.E(), l.R(), l.Q(), direct);
    CHECK(tilde_reexpand(l, reduced) == brute);
    KPTFTilde closed = tilde_specialized(l, a, b);
    CHECK((closed.Tt - reduced.Tt).is_zero());
    CHECK((closed.Ft - reduced.Ft).is_zero());
}

TEST_CASE("diagonal A kills the third-order term") {
    StructuredL l{poly({{1, 1}}), poly({{0, 2}}), poly({{1, 1}, {0, 1}})};
    MatrixS a = mat2(poly({{2, 3}}), poly({}), poly({}), poly({{1, -1}}));
    MatrixS b = mat2(poly({{0, 1}}), poly({{1, 1}}), poly({{1, 1}}), poly({}));
    KPTF direct = commutator_first_order(l.E(), l.R(), l.Q(), a, b);
    CHECK(direct.K.is_zero());
    CHECK(commutator(expand_structured(l), first_order(a, b)).order() <= 2);
    // off-diagonal corners populate K with twice the corners of A
    MatrixS a2 = mat2(poly({}), poly({{1, 1}}), poly({{0, 4}}), poly({}));
    KPTF with_corners = commutator_first_order(l.E(), l.R(), l.Q(), a2, b);
    CHECK(with_corners.K == mat2(poly({}), poly({{1, 2}}), poly({{0, -8}}), poly({})));
    KPTFTilde t = tilde_specialized(l, a2, b);
    CHECK(t.Kt == mat2(poly({}), poly({{1, -2}}), poly({{0, -8}}), poly({})));
}

TEST_CASE("zero input reduces to zero everywhere") {
    StructuredL l{poly({{1, 1}}), poly({}), poly({{0, 1}})};
    MatrixS z(2, RingTag::Polynomial);
    KPTF direct = commutator_first_order(l.E(), l.R(), l.Q(), z, z);
    CHECK(from_kptf(direct).is_zero());
    KPTFTilde t = tilde_specialized(l, z, z);
    CHECK(t.Kt.is_zero());
    CHECK(t.Pt.is_zero());
    CHECK(t.Tt.is_zero());
    CHECK(t.Ft.is_zero());
}

TEST_CASE("routes agree over Laurent coefficients with poles") {
    auto lc = [](int exp, long v, int trunc) {
        return CoeffElem(TruncatedLaurent::monomial(exp, AffineForm(Scalar(v)), trunc));
    };
    MatrixS a(2, RingTag::Laurent), b(2, RingTag::Laurent);
    a.set(0, 0, lc(-1, 2, 7));
    a.set(0, 1, lc(-2, 1, 7));
    a.set(1, 0, lc(0, 3, 7));
    a.set(1, 1, lc(1, -1, 7));
    b.set(0, 0, lc(-2, 1, 7));
    b.set(0, 1, lc(2, 5, 7));
    b.set(1, 0, lc(-1, -2, 7));
    b.set(1, 1, lc(0, 1, 7));
    StructuredL l{lc(1, 1, 9), lc(-2, 4, 9), lc(-1, 1, 9)};

    DiffOperator brute = commutator(expand_structured(l), first_order(a, b));
    KPTF direct = commutator_first_order(l.E(), l.R(), l.Q(), a, b);
    CHECK((from_kptf(direct) - brute).is_zero());
    KPTFTilde reduced = reduce_mod_L(l.E(), l.R(), l.Q(), direct);
    CHECK((tilde_reexpand(l, reduced) - brute).is_zero());
    KPTFTilde closed = tilde_specialized(l, a, b);
    CHECK((closed.Tt - reduced.Tt).is_zero());
    CHECK((closed.Ft - reduced.Ft).is_zero());
}
