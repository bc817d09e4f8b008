#include "doctest.h"

#include <random>

#include "codo/errors.hpp"
#include "codo/families.hpp"
#include "codo/weierstrass.hpp"

using codo::AffineForm;
using codo::BuiltPair;
using codo::CoeffElem;
using codo::ConstantPolicy;
using codo::DiffOperator;
using codo::FixtureVariant;
using codo::Rational;
using codo::RecurrenceState;
using codo::Scalar;
using codo::StructuredL;
using codo::Theorem2Params;
using codo::Theorem3Params;
using codo::TruncatedLaurent;
using codo::UnknownId;

namespace {

// Splits off c1, c0 with diff == c1 L + c0 Id, if such scalars exist.
std::optional<std::pair<Scalar, Scalar>> in_pencil(const DiffOperator& diff,
                                                   const DiffOperator& l) {
    Scalar c1(0), c0(0);
    if (diff.order() > 2) return std::nullopt;
    if (diff.order() == 2) {
        auto top = diff.coeff(2).at(0, 0).as_constant();
        if (!top) return std::nullopt;
        c1 = *top;
    }
    DiffOperator rest = diff - l.scaled(c1);
    if (rest.order() > 0) return std::nullopt;
    if (rest.order() == 0) {
        auto cst = rest.coeff(0).at(0, 0).as_constant();
        if (!cst) return std::nullopt;
        c0 = *cst;
    }
    if (rest != DiffOperator::identity(2, l.tag()).scaled(c0)) return std::nullopt;
    return std::make_pair(c1, c0);
}

}  // namespace

TEST_CASE("quartic pairs commute for random parameter draws") {
    std::mt19937 gen(61507);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    auto draw = [&](bool nonzero) {
        Rational r(num(gen), den(gen));
        while (nonzero && r == Rational(0)) r = Rational(num(gen), den(gen));
        return r;
    };
    for (int n : {1, 2}) {
        for (int run = 0; run < (n == 1 ? 4 : 2); ++run) {
            Theorem2Params p;
            p.n = n;
            p.alpha0 = draw(false);
            p.alpha2 = draw(true);
            p.beta = draw(false);
            p.mu1 = Scalar(draw(false));
            p.mu2 = p.mu1 + Scalar(draw(true));
            BuiltPair pair = build_theorem2(p);
            REQUIRE(pair.L.order() == 2);
            REQUIRE(pair.M.order() == 4 * n);
            CHECK(pair.window.unbounded());
            CHECK(commutator(pair.L, pair.M).is_zero());
            CHECK(pair.constants.free_unknowns.empty());
            CHECK(pair.constants.assignment.count(UnknownId{1, 2}) == 1);
        }
    }
}

TEST_CASE("either square root of -n^2 alpha2^2 is accepted") {
    Theorem2Params p;
    p.n = 2;
    p.alpha0 = Rational(1);
    p.alpha2 = Rational(3);
    p.beta = Rational(-2);
    p.gamma = Scalar(Rational(0), Rational(-6), Rational(-1));  // -n alpha2 t
    BuiltPair pair = build_theorem2(p);
    CHECK(pair.M.order() == 8);
    CHECK(commutator(pair.L, pair.M).is_zero());
}

TEST_CASE("a slope violating the constraint is rejected") {
    Theorem2Params p;
    p.alpha0 = Rational(1);
    p.alpha2 = Rational(2);
    p.beta = Rational(3);
    p.gamma = Scalar(2);  // rational slope, gamma^2 != -alpha2^2
    CHECK_THROWS_AS(build_theorem2(p), codo::InconsistentSystem);
}

TEST_CASE("hand-expanded companions sit in the engine's pencil") {
    for (auto [a0, a2, b] : {std::tuple{Rational(1), Rational(2), Rational(3)},
                             std::tuple{Rational(0), Rational(1), Rational(-2)},
                             std::tuple{Rational(5, 2), Rational(1), Rational(1, 3)}}) {
        CAPTURE(a0.to_string());

        Theorem2Params p1;
        p1.alpha0 = a0;
        p1.alpha2 = a2;
        p1.beta = b;
        BuiltPair e1 = build_theorem2(p1);
        DiffOperator f1 = codo::example1_M(a0, a2, b, Scalar(0), Scalar(0));
        CHECK(commutator(e1.L, f1).is_zero());
        CHECK(in_pencil(f1 - e1.M, e1.L).has_value());
        CHECK(f1 == codo::example1_M(a0, a2, b, Scalar(0), Scalar(0),
                                     FixtureVariant::AsPrinted));

        Theorem2Params p2 = p1;
        p2.mu1 = Scalar(1);
        p2.mu2 = Scalar(2);
        BuiltPair e2 = build_theorem2(p2);
        DiffOperator f2 = codo::example2_M(a0, a2, b, Scalar(0), Scalar(0));
        CHECK(commutator(e2.L, f2).is_zero());
        CHECK(in_pencil(f2 - e2.M, e2.L).has_value());
    }
}

TEST_CASE("pencil parameters shift the companion exactly") {
    Rational a0(2), a2(1), b(5);
    DiffOperator base = codo::example1_M(a0, a2, b, Scalar(0), Scalar(0));
    DiffOperator shifted =
        codo::example1_M(a0, a2, b, Scalar(Rational(5, 7)), Scalar(-2));
    Theorem2Params p;
    p.alpha0 = a0;
    p.alpha2 = a2;
    p.beta = b;
    DiffOperator l = expand_structured(codo::theorem2_operator(p));
    CHECK(shifted - base ==
          l.scaled(Scalar(Rational(5, 7))) +
              DiffOperator::identity(2, l.tag()).scaled(Scalar(-2)));
    CHECK(commutator(l, shifted).is_zero());
}

TEST_CASE("elliptic family pole checkpoints") {
    Theorem3Params p;
    p.g2 = Rational(4);
    p.mu1 = Scalar(3);
    p.mu2 = Scalar(Rational(1, 2));
    Scalar alpha = Scalar::root(p.extension());
    REQUIRE(p.extension() == Rational(60));
    Scalar dm = p.mu1 - p.mu2;

    RecurrenceState st = codo::init_state(codo::theorem3_operator(p), p.mu1, p.mu2,
                                          ConstantPolicy::ProofSection);
    codo::step(st);
    codo::step(st);

    const TruncatedLaurent& b21 = st.levels[1].b2.laurent();
    CHECK(b21.coeff(-2) == AffineForm(dm * alpha * Rational(1, 2)));
    CHECK(b21.coeff(-1).is_zero());
    CHECK(b21.coeff(0).is_zero());
    CHECK(b21.coeff(1).is_zero());
    CHECK((st.levels[1].b3 + st.levels[1].b2).is_zero());

    const TruncatedLaurent& a22 = st.levels[2].a2.laurent();
    CHECK(a22.coeff(-3) == AffineForm(dm * alpha));
    CHECK(a22.coeff(-2).is_zero());
    CHECK(a22.coeff(-1).is_zero());
    CHECK(a22.coeff(0).is_zero());
    CHECK(st.levels[2].a2 == st.levels[2].a3);
    CHECK(st.levels[2].a1.is_zero());
    CHECK(st.levels[2].a4.is_zero());

    const TruncatedLaurent& b22 = st.levels[2].b2.laurent();
    CHECK(b22.coeff(-4) == AffineForm(dm * alpha * Rational(3, 2)));
    CHECK(b22.coeff(-3).is_zero());
    CHECK(b22.coeff(-2).is_zero());
    CHECK(b22.coeff(-1).is_zero());
    // constant term tracks the sign convention of (p')^2 = 4p^3 + g2 p
    CHECK(b22.coeff(0) == AffineForm(dm * p.g2 * alpha * Rational(-1, 40)));
    CHECK(st.levels[2].b2 == st.levels[2].b3);

    codo::TerminationResidual tr = codo::termination_residual(st, 2);
    CHECK(tr.a1.is_zero());
    CHECK(tr.a2.is_zero());
    CHECK(tr.a3.is_zero());
    CHECK(tr.a4.is_zero());
    const TruncatedLaurent& b23 = tr.b2.laurent();
    CHECK(b23.coeff(-6).is_zero());  // alpha^2 - 60 = 0 kills the deep pole
    CHECK(b23.coeff(-5).is_zero());
    CHECK(b23.coeff(-4).is_zero());
    CHECK(b23.coeff(-3).is_zero());
    CHECK(b23.coeff(-2) ==
          AffineForm::unknown(UnknownId{1, 2}, alpha * Rational(1, 2)) +
              AffineForm(dm * p.g2 * alpha * alpha * alpha * Rational(-1, 80)));
    CHECK((tr.b3 + tr.b2).is_zero());

    codo::ConstantSolution sol = codo::solve_constants(st, 2);
    CHECK(sol.assignment.at(UnknownId{1, 2}) ==
          dm * p.g2 * alpha * alpha * Rational(1, 40));
}

TEST_CASE("elliptic pairs commute through a certified window") {
    for (Rational g2 : {Rational(4), Rational(-3, 2)}) {
        Theorem3Params p;
        p.g2 = g2;
        BuiltPair pair = build_theorem3(p);
        CHECK(pair.M.order() == 4);
        CHECK(!pair.window.unbounded());
        CHECK(pair.window.orders() >= 12);
        CHECK(pair.window.trunc >= 12);
        CHECK(commutator(pair.L, pair.M).is_zero());
        CHECK(pair.d == Rational(60));
        CHECK(pair.constants.assignment.at(UnknownId{1, 2}) ==
              (p.mu1 - p.mu2) * p.g2 * Rational(60) * Rational(1, 40));
    }
}

TEST_CASE("wrong extension leaves the deep pole standing") {
    Scalar alpha = Scalar::root(Rational(61));
    Scalar g2(Rational(4));
    TruncatedLaurent wp = codo::weierstrass_p(g2, 20);
    StructuredL l{CoeffElem(TruncatedLaurent::zero()),
                  CoeffElem(TruncatedLaurent::zero()),
                  CoeffElem(wp.scaled(AffineForm(alpha)))};
    RecurrenceState st = codo::init_state(l, Scalar(1), Scalar(-1),
                                          ConstantPolicy::ProofSection);
    codo::step(st);
    codo::step(st);
    codo::TerminationResidual tr = codo::termination_residual(st, 2);
    // residual pole of order six carries (mu1 - mu2) alpha (alpha^2 - 60)/4
    CHECK(tr.b2.laurent().coeff(-6) == AffineForm(Scalar(2) * alpha * Rational(1, 4)));
    CHECK_THROWS_AS(codo::solve_constants(st, 2), codo::InconsistentSystem);
}

TEST_CASE("short truncations are refused rather than certified") {
    Theorem3Params p;
    p.g2 = Rational(1);
    p.trunc = 3;
    CHECK_THROWS_AS(build_theorem3(p), codo::Error);
}
