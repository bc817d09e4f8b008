#include "codo/families.hpp"

#include <algorithm>
#include <initializer_list>
#include <utility>

#include "codo/errors.hpp"
#include "codo/weierstrass.hpp"

namespace codo {

namespace {

XPolynomial poly_of(std::initializer_list<std::pair<int, Rational>> terms) {
    XPolynomial p;
    for (const auto& [exp, c] : terms)
        if (!c.is_zero()) p.set(exp, AffineForm(Scalar(c)));
    return p;
}

// sum c_e x^e scaled by the adjoined root t
XPolynomial imag_of(std::initializer_list<std::pair<int, Rational>> terms,
                    const Scalar& t) {
    XPolynomial p;
    for (const auto& [exp, c] : terms)
        if (!c.is_zero()) p.set(exp, AffineForm(Scalar(c) * t));
    return p;
}

MatrixS mat2(XPolynomial e11, XPolynomial e12, XPolynomial e21, XPolynomial e22) {
    MatrixS m(2, RingTag::Polynomial);
    m.set(0, 0, CoeffElem(std::move(e11)));
    m.set(0, 1, CoeffElem(std::move(e12)));
    m.set(1, 0, CoeffElem(std::move(e21)));
    m.set(1, 1, CoeffElem(std::move(e22)));
    return m;
}

void scan_bounds(const DiffOperator& op, CommutationWindow& w) {
    for (const auto& [deg, mat] : op.terms()) {
        (void)deg;
        for (int i = 0; i < mat.size(); ++i)
            for (int j = 0; j < mat.size(); ++j) {
                const CoeffElem& e = mat.at(i, j);
                if (e.tag() != RingTag::Laurent) continue;
                const TruncatedLaurent& s = e.laurent();
                if (!s.is_zero()) w.low = std::min(w.low, s.low());
                w.trunc = std::min(w.trunc, s.trunc());
            }
    }
}

BuiltPair finish_pair(StructuredL coeffs, Scalar mu1, Scalar mu2, int g, Rational d,
                      bool recheck_residual) {
    RecurrenceState st =
        init_state(coeffs, std::move(mu1), std::move(mu2), ConstantPolicy::ProofSection);
    for (int k = 0; k < g; ++k) step(st);
    ConstantSolution sol = solve_constants(st, g);
    if (recheck_residual) {
        // The linear solve only covers stored exponents up to 0; the higher
        // orders have to vanish on their own.
        TerminationResidual res = termination_residual(st, g);
        for (const CoeffElem* c : {&res.a1, &res.a2, &res.a3, &res.a4, &res.b2, &res.b3})
            if (!c->substitute(sol.assignment, true).is_zero())
                throw InconsistentSystem(
                    "termination residual does not vanish beyond the solved window");
    }
    BuiltPair out;
    out.coeffs = coeffs;
    out.L = expand_structured(coeffs);
    out.M = assemble_M(st, g, sol.assignment);
    out.d = std::move(d);
    out.constants = std::move(sol);
    out.window = commutation_window(out.L, out.M);
    if (!out.window.unbounded() && out.window.trunc <= out.window.low)
        throw TruncationTooShort("working order too small to certify commutation");
    DiffOperator c = commutator(out.L, out.M);
    if (!c.is_zero())
        throw InconsistentSystem("assembled operators fail to commute at " +
                                 first_nonzero(c)->to_string());
    return out;
}

}  // namespace

Scalar Theorem2Params::effective_gamma() const {
    if (gamma) return *gamma;
    return Scalar(Rational(0), Rational(n) * alpha2, Rational(-1));
}

Rational Theorem3Params::extension() const {
    long m = n;
    return Rational(64 * m * m * m * m - 4 * m * m);
}

StructuredL theorem2_operator(const Theorem2Params& p) {
    if (p.n < 1) throw Error("family parameter n must be positive");
    StructuredL l;
    l.r1 = CoeffElem(poly_of({{2, p.alpha2}, {0, p.alpha0}}));
    l.q1 = CoeffElem(poly_of({{2, p.beta}, {1, p.alpha2}}));
    XPolynomial q2;
    Scalar g = p.effective_gamma();
    if (!g.is_zero()) q2.set(1, AffineForm(g));
    l.q2 = CoeffElem(q2);
    return l;
}

StructuredL theorem3_operator(const Theorem3Params& p) {
    if (p.n < 1) throw Error("family parameter n must be positive");
    TruncatedLaurent wp = weierstrass_p(Scalar(p.g2), p.effective_trunc());
    StructuredL l;
    l.r1 = CoeffElem(TruncatedLaurent::zero());
    l.q1 = CoeffElem(TruncatedLaurent::zero());
    l.q2 = CoeffElem(wp.scaled(AffineForm(Scalar::root(p.extension()))));
    return l;
}

CommutationWindow commutation_window(const DiffOperator& a, const DiffOperator& b) {
    CommutationWindow w;
    scan_bounds(a * b, w);
    scan_bounds(b * a, w);
    return w;
}

BuiltPair build_theorem2(const Theorem2Params& p) {
    StructuredL coeffs = theorem2_operator(p);
    Scalar g = p.effective_gamma();
    Rational d = g.b().is_zero() ? Rational(-1) : g.d();
    return finish_pair(std::move(coeffs), p.mu1, p.mu2, 2 * p.n, std::move(d), false);
}

BuiltPair build_theorem3(const Theorem3Params& p) {
    return finish_pair(theorem3_operator(p), p.mu1, p.mu2, 2 * p.n, p.extension(), true);
}

DiffOperator example1_M(const Rational& alpha0, const Rational& alpha2,
                        const Rational& beta, const Scalar& c1, const Scalar& c0,
                        FixtureVariant variant) {
    const Scalar t = Scalar::root(Rational(-1));
    const Rational a0 = alpha0, a2 = alpha2, b = beta;

    XPolynomial d2 = poly_of(
        {{4, a2 * a2}, {2, 2 * (a0 * a2 + b)}, {1, 6 * a2}, {0, a0 * a0}});
    XPolynomial m1 = poly_of({{4, 2 * a2 * b},
                              {3, 4 * a2 * a2},
                              {2, 2 * a0 * b},
                              {1, 4 * (a0 * a2 + b)},
                              {0, 4 * a2}});
    XPolynomial m2 = imag_of({{3, a2 * a2}, {1, a0 * a2}, {0, a2}}, t);
    XPolynomial h1 = poly_of({{4, b * b},
                              {3, 4 * a2 * b},
                              {2, Rational(3, 2) * a2 * a2},
                              {1, 2 * a0 * b},
                              {0, 4 * b}});
    XPolynomial h2 =
        imag_of({{3, a2 * b}, {2, Rational(3, 2) * a2 * a2}, {0, Rational(1, 2) * a2 * a0}}, t);
    XPolynomial h4 = -h1 + poly_of({{0, 2 * b - a0 * a2}});

    (void)variant;  // variants coincide: no oracle-forced adjustments to date

    DiffOperator m(2, RingTag::Polynomial);
    m.set_term(4, mat2(poly_of({{0, Rational(1)}}), XPolynomial(), XPolynomial(),
                       poly_of({{0, Rational(-1)}})));
    m.set_term(3, mat2(poly_of({{2, 2 * a2}, {0, 2 * a0}}), XPolynomial(), XPolynomial(),
                       poly_of({{2, -2 * a2}, {0, -2 * a0}})));
    XPolynomial off2 = imag_of({{1, a2}}, t);
    m.set_term(2, mat2(d2, off2, off2, -d2));
    m.set_term(1, mat2(m1, m2, m2, -m1));
    m.set_term(0, mat2(h1, h2, h2, h4));

    Theorem2Params base;
    base.n = 1;
    base.alpha0 = alpha0;
    base.alpha2 = alpha2;
    base.beta = beta;
    m += expand_structured(theorem2_operator(base)).scaled(c1);
    m += DiffOperator::identity(2, RingTag::Polynomial).scaled(c0);
    return m;
}

DiffOperator example2_M(const Rational& alpha0, const Rational& alpha2,
                        const Rational& beta, const Scalar& c1, const Scalar& c0,
                        FixtureVariant variant) {
    const Scalar t = Scalar::root(Rational(-1));
    const Rational a0 = alpha0, a2 = alpha2, b = beta;

    XPolynomial d2 = poly_of(
        {{4, a2 * a2}, {2, 2 * (a0 * a2 + b)}, {1, 6 * a2}, {0, a0 * a0}});
    XPolynomial m1 = poly_of({{4, 2 * a2 * b},
                              {3, 4 * a2 * a2},
                              {2, 2 * a0 * b},
                              {1, 4 * (a0 * a2 + b)},
                              {0, 4 * a2}});
    XPolynomial m2 = imag_of({{3, Rational(-1, 2) * a2 * a2},
                              {1, Rational(-1, 2) * a0 * a2},
                              {0, Rational(-7, 2) * a2}},
                             t);
    XPolynomial m3 = imag_of({{3, Rational(-1, 2) * a2 * a2},
                              {1, Rational(-1, 2) * a0 * a2},
                              {0, Rational(5, 2) * a2}},
                             t);
    XPolynomial m4 = poly_of({{4, 4 * a2 * b},
                              {3, 8 * a2 * a2},
                              {2, 4 * a0 * b},
                              {1, 8 * (a0 * a2 + b)},
                              {0, 8 * a2}});
    XPolynomial h1 = poly_of({{4, b * b},
                              {3, 4 * a2 * b},
                              {2, Rational(3, 4) * a2 * a2},
                              {1, 2 * a0 * b},
                              {0, b + Rational(3, 2) * a2 * a0}});
    XPolynomial h2 = imag_of({{3, Rational(-1, 2) * a2 * b},
                              {2, Rational(-9, 4) * a2 * a2},
                              {0, Rational(-7, 4) * a2 * a0}},
                             t);
    XPolynomial h3 = imag_of({{3, Rational(-1, 2) * a2 * b},
                              {2, Rational(3, 4) * a2 * a2},
                              {0, Rational(5, 4) * a2 * a0}},
                             t);
    XPolynomial h4 = poly_of({{4, 2 * b * b},
                              {3, 8 * a2 * b},
                              {2, Rational(9, 4) * a2 * a2},
                              {1, 4 * a0 * b},
                              {0, 4 * b + 2 * a2 * a0}});

    (void)variant;  // variants coincide: no oracle-forced adjustments to date

    DiffOperator m(2, RingTag::Polynomial);
    m.set_term(4, mat2(poly_of({{0, Rational(1)}}), XPolynomial(), XPolynomial(),
                       poly_of({{0, Rational(2)}})));
    m.set_term(3, mat2(poly_of({{2, 2 * a2}, {0, 2 * a0}}), XPolynomial(), XPolynomial(),
                       poly_of({{2, 4 * a2}, {0, 4 * a0}})));
    XPolynomial off2 = imag_of({{1, Rational(-1, 2) * a2}}, t);
    m.set_term(2, mat2(d2, off2, off2, d2 + d2));
    m.set_term(1, mat2(m1, m3, m2, m4));
    m.set_term(0, mat2(h1, h3, h2, h4));

    Theorem2Params base;
    base.n = 1;
    base.alpha0 = alpha0;
    base.alpha2 = alpha2;
    base.beta = beta;
    m += expand_structured(theorem2_operator(base)).scaled(c1);
    m += DiffOperator::identity(2, RingTag::Polynomial).scaled(c0);
    return m;
}

}  // namespace codo
