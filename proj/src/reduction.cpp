#include "codo/reduction.hpp"

namespace codo {

KPTF commutator_first_order(const MatrixS& E, const MatrixS& R, const MatrixS& Q,
                            const MatrixS& A, const MatrixS& B) {
    MatrixS Ad = A.derivative();
    MatrixS Add = Ad.derivative();
    MatrixS Bd = B.derivative();
    MatrixS Bdd = Bd.derivative();
    KPTF c;
    c.K = E * A - A * E;
    c.P = (E * Ad).scaled(Scalar(2)) + E * B + R * A - A * E.derivative() -
          A * R - B * E;
    c.T = E * Add + (E * Bd).scaled(Scalar(2)) + R * Ad + R * B + Q * A -
          A * R.derivative() - A * Q - B * R;
    c.F = E * Bdd + R * Bd + Q * B - A * Q.derivative() - B * Q;
    return c;
}

KPTFTilde reduce_mod_L(const MatrixS& E, const MatrixS& R, const MatrixS& Q,
                       const KPTF& c) {
    MatrixS Einv = invert_unit_upper_triangular(E);
    KPTFTilde t;
    t.Kt = c.K * Einv;
    t.Pt = (c.P - t.Kt * (E.derivative() + R)) * Einv;
    t.Tt = c.T - t.Kt * (R.derivative() + Q) - t.Pt * R;
    t.Ft = c.F - t.Kt * Q.derivative() - t.Pt * Q;
    return t;
}

KPTFTilde tilde_specialized(const StructuredL& l, const MatrixS& A, const MatrixS& B) {
    const CoeffElem& r1 = l.r1;
    const CoeffElem& q1 = l.q1;
    const CoeffElem& q2 = l.q2;
    CoeffElem r1d = r1.derivative();
    CoeffElem q1d = q1.derivative();
    CoeffElem q2d = q2.derivative();

    // A = [[a1, a3], [a2, a4]], B = [[b1, b3], [b2, b4]].
    CoeffElem a1 = A.at(0, 0), a3 = A.at(0, 1), a2 = A.at(1, 0), a4 = A.at(1, 1);
    CoeffElem b1 = B.at(0, 0), b3 = B.at(0, 1), b2 = B.at(1, 0), b4 = B.at(1, 1);
    CoeffElem a1d = a1.derivative(), a2d = a2.derivative();
    CoeffElem a3d = a3.derivative(), a4d = a4.derivative();
    CoeffElem b1d = b1.derivative(), b2d = b2.derivative();
    CoeffElem b3d = b3.derivative(), b4d = b4.derivative();
    Scalar two(2);

    RingTag tag = l.tag();
    KPTFTilde t{MatrixS(2, tag), MatrixS(2, tag), MatrixS(2, tag), MatrixS(2, tag)};

    t.Kt.set(0, 1, (-a3).scaled(two));
    t.Kt.set(1, 0, (-a2).scaled(two));

    t.Pt.set(0, 0, a1d.scaled(two));
    t.Pt.set(0, 1, (b3 + a3d).scaled(-two));
    t.Pt.set(1, 0, (b2 + a2d).scaled(-two));
    t.Pt.set(1, 1, a4d.scaled(two));

    t.Tt.set(0, 0, a2 * q2 + a3 * q2 - a1d * r1 + b1d.scaled(two) - a1 * r1d +
                       a1d.derivative());
    t.Tt.set(0, 1, -(a1 * q2) + a4 * q2 - a3d * r1 + b3d.scaled(two) - a3 * r1d +
                       a3d.derivative());
    t.Tt.set(1, 0, a1 * q2 - a4 * q2 + a2d * r1 - b2d.scaled(two) + a2 * r1d -
                       a2d.derivative());
    t.Tt.set(1, 1, a2 * q2 + a3 * q2 + a4d * r1 - b4d.scaled(two) + a4 * r1d -
                       a4d.derivative());

    t.Ft.set(0, 0, b2 * q2 + b3 * q2 - (a1d * q1).scaled(two) +
                       (a3d * q2).scaled(two) + b1d * r1 - a1 * q1d + a3 * q2d +
                       b1d.derivative());
    t.Ft.set(0, 1, -(b1 * q2) + b4 * q2 - (a1d * q2).scaled(two) -
                       (a3d * q1).scaled(two) + b3d * r1 - a3 * q1d - a1 * q2d +
                       b3d.derivative());
    t.Ft.set(1, 0, b1 * q2 - b4 * q2 + (a2d * q1).scaled(two) -
                       (a4d * q2).scaled(two) - b2d * r1 + a2 * q1d - a4 * q2d -
                       b2d.derivative());
    t.Ft.set(1, 1, b2 * q2 + b3 * q2 + (a2d * q2).scaled(two) +
                       (a4d * q1).scaled(two) - b4d * r1 + a4 * q1d + a2 * q2d -
                       b4d.derivative());
    return t;
}

DiffOperator tilde_reexpand(const DiffOperator& L, const KPTFTilde& t) {
    DiffOperator d = DiffOperator::from_term(1, MatrixS::identity(L.size(), L.tag()));
    return DiffOperator::from_term(0, t.Kt) * d * L +
           DiffOperator::from_term(0, t.Pt) * L +
           DiffOperator::from_term(0, t.Tt) * d + DiffOperator::from_term(0, t.Ft);
}

DiffOperator tilde_reexpand(const StructuredL& l, const KPTFTilde& t) {
    return tilde_reexpand(expand_structured(l), t);
}

} // namespace codo
