#include "codo/recurrence.hpp"

#include "codo/errors.hpp"

namespace codo {

static CoeffElem ring_zero(RingTag tag) {
    return tag == RingTag::Polynomial ? CoeffElem(XPolynomial())
                                      : CoeffElem(TruncatedLaurent::zero());
}

MatrixS Level::A(RingTag tag) const {
    MatrixS m(2, tag);
    m.set(0, 0, a1);
    m.set(0, 1, a3);
    m.set(1, 0, a2);
    m.set(1, 1, a4);
    return m;
}

MatrixS Level::B(RingTag tag) const {
    MatrixS m(2, tag);
    m.set(0, 0, b1);
    m.set(0, 1, b3);
    m.set(1, 0, b2);
    m.set(1, 1, b4);
    return m;
}

// The integration constant C_kind^level under the given policy.
static AffineForm step_constant(ConstantPolicy policy, int kind, int level) {
    if (policy == ConstantPolicy::AllSymbolic)
        return AffineForm::unknown(UnknownId{kind, level});
    if (kind == 1 && level % 2 == 0)
        return AffineForm::unknown(UnknownId{kind, level});
    return AffineForm();
}

RecurrenceState init_state(StructuredL L, Scalar mu1, Scalar mu2,
                           ConstantPolicy policy) {
    RecurrenceState st;
    st.L = std::move(L);
    st.mu1 = mu1;
    st.mu2 = mu2;
    st.policy = policy;
    RingTag tag = st.L.tag();
    Level l0;
    l0.a1 = l0.a2 = l0.a3 = l0.a4 = ring_zero(tag);
    l0.b1 = CoeffElem::constant(tag, AffineForm(mu1));
    l0.b2 = l0.b3 = ring_zero(tag);
    l0.b4 = CoeffElem::constant(tag, AffineForm(mu2));
    l0.completed = true;
    st.levels.push_back(std::move(l0));
    return st;
}

// b1, b4 of the current level via the diagonal conditions (zero x^-1 part of
// the integrands is enforced by CoeffElem::antiderivative).
static void complete_level(RecurrenceState& st) {
    Level& lv = st.levels.back();
    if (lv.completed)
        return;
    int k = st.last();
    const CoeffElem& r1 = st.L.r1;
    const CoeffElem& q2 = st.L.q2;
    CoeffElem r1d = r1.derivative();
    Scalar half(Rational(1, 2));

    CoeffElem i1 = lv.a2 * q2 + lv.a3 * q2 - lv.a1.derivative() * r1 -
                   lv.a1 * r1d + lv.a1.derivative().derivative();
    lv.b1 = i1.antiderivative(AffineForm()).scaled(-half) +
            CoeffElem::constant(st.L.tag(), step_constant(st.policy, 1, k));

    CoeffElem i2 = lv.a2 * q2 + lv.a3 * q2 + lv.a4.derivative() * r1 +
                   lv.a4 * r1d - lv.a4.derivative().derivative();
    lv.b4 = i2.antiderivative(AffineForm()).scaled(half) +
            CoeffElem::constant(st.L.tag(), step_constant(st.policy, 2, k));
    lv.completed = true;
}

void step(RecurrenceState& st) {
    complete_level(st);
    const Level& lv = st.levels.back();
    int next = st.last() + 1;
    const CoeffElem& r1 = st.L.r1;
    const CoeffElem& q1 = st.L.q1;
    const CoeffElem& q2 = st.L.q2;
    CoeffElem r1d = r1.derivative();
    CoeffElem q1d = q1.derivative();
    CoeffElem q2d = q2.derivative();
    Scalar half(Rational(1, 2));
    Scalar two(2);

    CoeffElem a1d = lv.a1.derivative(), a2d = lv.a2.derivative();
    CoeffElem a3d = lv.a3.derivative(), a4d = lv.a4.derivative();
    CoeffElem b1d = lv.b1.derivative(), b2d = lv.b2.derivative();
    CoeffElem b3d = lv.b3.derivative(), b4d = lv.b4.derivative();

    Level nx;
    nx.a3 = (-(lv.a1 * q2) + lv.a4 * q2 - a3d * r1 + b3d.scaled(two) -
             lv.a3 * r1d + a3d.derivative())
                .scaled(half);
    nx.a2 = (lv.a1 * q2 - lv.a4 * q2 + a2d * r1 - b2d.scaled(two) +
             lv.a2 * r1d - a2d.derivative())
                .scaled(half);

    CoeffElem i3 = lv.b2 * q2 + lv.b3 * q2 - (a1d * q1).scaled(two) +
                   (a3d * q2).scaled(two) + b1d * r1 - lv.a1 * q1d +
                   lv.a3 * q2d + b1d.derivative();
    nx.a1 = i3.antiderivative(AffineForm()).scaled(-half) +
            CoeffElem::constant(st.L.tag(), step_constant(st.policy, 3, next));

    CoeffElem i4 = lv.b2 * q2 + lv.b3 * q2 + (a2d * q2).scaled(two) +
                   (a4d * q1).scaled(two) - b4d * r1 + lv.a4 * q1d +
                   lv.a2 * q2d - b4d.derivative();
    nx.a4 = i4.antiderivative(AffineForm()).scaled(-half) +
            CoeffElem::constant(st.L.tag(), step_constant(st.policy, 4, next));

    nx.b3 = (-(lv.b1 * q2) + lv.b4 * q2 - (a1d * q2).scaled(two) -
             (a3d * q1).scaled(two) + b3d * r1 - lv.a3 * q1d - lv.a1 * q2d +
             b3d.derivative())
                .scaled(half) -
            nx.a3.derivative();
    nx.b2 = (lv.b1 * q2 - lv.b4 * q2 + (a2d * q1).scaled(two) -
             (a4d * q2).scaled(two) - b2d * r1 + lv.a2 * q1d - lv.a4 * q2d -
             b2d.derivative())
                .scaled(half) -
            nx.a2.derivative();

    nx.b1 = ring_zero(st.L.tag());
    nx.b4 = ring_zero(st.L.tag());
    nx.completed = false;
    st.levels.push_back(std::move(nx));
}

TerminationResidual termination_residual(const RecurrenceState& state, int g) {
    if (state.last() != g)
        throw SizeMismatch("termination_residual: state holds " +
                           std::to_string(state.last()) + " steps, expected " +
                           std::to_string(g));
    RecurrenceState probe = state;
    step(probe);
    const Level& top = probe.levels.back();
    return TerminationResidual{top.a1, top.a2, top.a3, top.a4, top.b2, top.b3};
}

std::optional<int> parity_check(const RecurrenceState& state) {
    Scalar half(Rational(1, 2));
    for (int k = 0; k <= state.last(); ++k) {
        const Level& lv = state.levels[static_cast<size_t>(k)];
        if (k % 2 == 1) {
            if (!lv.a1.is_zero() || !lv.a2.is_zero() || !lv.a3.is_zero() ||
                !lv.a4.is_zero() || !(lv.b2 + lv.b3).is_zero())
                return k;
        } else {
            if (!lv.a1.is_zero() || !lv.a4.is_zero() || !(lv.a2 - lv.a3).is_zero())
                return k;
            if (!(lv.b2 - lv.b3).is_zero())
                return k;
            if (k > 0) {
                const Level& prev = state.levels[static_cast<size_t>(k - 1)];
                if (!(lv.a2 + prev.b2.derivative()).is_zero())
                    return k;
                CoeffElem want =
                    (state.L.r1 * lv.a2 - lv.a2.derivative()).scaled(half);
                if (!(lv.b2 - want).is_zero())
                    return k;
            }
        }
    }
    return std::nullopt;
}

// Coefficient equations of one residual component.  Polynomial: every stored
// coefficient; Laurent: stored coefficients up to and including x^0 (the
// positive part vanishes once the principal part does, and is re-checked
// after substitution by the callers).
static void collect_equations(const CoeffElem& c, const std::string& name,
                              const std::vector<UnknownId>& unknowns,
                              LinearSystem& sys) {
    auto add = [&](int e, const AffineForm& f) {
        if (f.is_zero())
            return;
        std::vector<Scalar> row;
        row.reserve(unknowns.size());
        for (const auto& u : unknowns)
            row.push_back(f.coeff_of(u));
        sys.add_row(std::move(row), -f.constant(),
                    name + " coefficient of x^" + std::to_string(e));
    };
    if (c.tag() == RingTag::Polynomial) {
        for (const auto& [e, f] : c.poly().coeffs())
            add(e, f);
    } else {
        const auto& s = c.laurent();
        for (int e = s.low(); e < s.stored_end() && e <= 0; ++e)
            add(e, s.coeff(e));
    }
}

static void collect_unknowns(const CoeffElem& c, std::map<UnknownId, bool>& seen) {
    auto scan = [&](const AffineForm& f) {
        for (const auto& [id, coef] : f.terms())
            seen.emplace(id, true);
    };
    if (c.tag() == RingTag::Polynomial) {
        for (const auto& [e, f] : c.poly().coeffs())
            scan(f);
    } else {
        const auto& s = c.laurent();
        for (int e = s.low(); e < s.stored_end(); ++e)
            scan(s.coeff(e));
    }
}

ConstantSolution solve_constants(const RecurrenceState& state, int g) {
    if (state.last() != g)
        throw SizeMismatch("solve_constants: state holds " +
                           std::to_string(state.last()) + " steps, expected " +
                           std::to_string(g));
    RecurrenceState probe = state;
    step(probe);
    const Level& top = probe.levels.back();

    std::map<UnknownId, bool> seen;
    for (const Level& lv : probe.levels)
        for (const CoeffElem* c : {&lv.a1, &lv.a2, &lv.a3, &lv.a4, &lv.b1,
                                   &lv.b2, &lv.b3, &lv.b4})
            collect_unknowns(*c, seen);
    std::vector<UnknownId> unknowns;
    for (const auto& [id, _] : seen)
        unknowns.push_back(id);

    LinearSystem sys;
    sys.cols = unknowns.size();
    std::string lvl = "^(" + std::to_string(g + 1) + ")";
    collect_equations(top.a1, "a1" + lvl, unknowns, sys);
    collect_equations(top.a2, "a2" + lvl, unknowns, sys);
    collect_equations(top.a3, "a3" + lvl, unknowns, sys);
    collect_equations(top.a4, "a4" + lvl, unknowns, sys);
    collect_equations(top.b2, "b2" + lvl, unknowns, sys);
    collect_equations(top.b3, "b3" + lvl, unknowns, sys);

    LinearSolution sol = solve_linear(std::move(sys));
    if (!sol.consistent)
        throw InconsistentSystem(
            "solve_constants: no choice of constants clears the termination "
            "residual; first unsatisfiable condition: " +
            sol.conflict_tag);
    ConstantSolution out;
    for (size_t i = 0; i < unknowns.size(); ++i)
        out.assignment[unknowns[i]] = sol.values[i];
    for (size_t col : sol.free_cols)
        out.free_unknowns.push_back(unknowns[col]);
    return out;
}

DiffOperator assemble_M(const RecurrenceState& state, int g,
                        const std::map<UnknownId, Scalar>& assignment) {
    if (state.last() != g)
        throw SizeMismatch("assemble_M: state holds " +
                           std::to_string(state.last()) + " steps, expected " +
                           std::to_string(g));
    RecurrenceState done = state;
    complete_level(done);
    RingTag tag = done.L.tag();
    DiffOperator L = expand_structured(done.L);
    DiffOperator M(2, tag);
    DiffOperator Lpow = DiffOperator::identity(2, tag);  // L^(g-k), built downward
    for (int k = g; k >= 0; --k) {
        const Level& lv = done.levels[static_cast<size_t>(k)];
        DiffOperator term(2, tag);
        term.set_term(1, lv.A(tag).substitute(assignment, true));
        term.set_term(0, lv.B(tag).substitute(assignment, true));
        M += term * Lpow;
        if (k > 0)
            Lpow = Lpow * L;
    }
    return M;
}

} // namespace codo
