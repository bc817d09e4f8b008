#pragma once

#include "codo/diffop.hpp"
#include "codo/linsolve.hpp"

namespace codo {

/**
 * Choice of the integration constants introduced by the recurrence.
 * ProofSection keeps only C1 at even levels symbolic (all other constants
 * zero, C1 at odd levels zero); AllSymbolic keeps every C_i^k symbolic.
 */
enum class ConstantPolicy { ProofSection, AllSymbolic };

/**
 * One level k of the ansatz M = sum (A_k d + B_k) L^{g-k}:
 * A = [[a1, a3], [a2, a4]], B = [[b1, b3], [b2, b4]].  A level is produced
 * with only b2, b3 known; b1, b4 follow from the next step's diagonal
 * conditions (integration with a fresh constant).
 */
struct Level {
    CoeffElem a1, a2, a3, a4;
    CoeffElem b1, b2, b3, b4;
    bool completed = false;

    MatrixS A(RingTag tag) const;
    MatrixS B(RingTag tag) const;
};

struct RecurrenceState {
    StructuredL L;
    Scalar mu1, mu2;
    ConstantPolicy policy = ConstantPolicy::ProofSection;
    std::vector<Level> levels;  // levels[k] holds (A_k, B_k)

    int last() const { return static_cast<int>(levels.size()) - 1; }
};

// What is left of the commutation conditions after g steps: the would-be
// A_{g+1} and the (b2, b3) entries of level g+1.  All must vanish for
// [L, M] = 0.
struct TerminationResidual {
    CoeffElem a1, a2, a3, a4;
    CoeffElem b2, b3;
};

RecurrenceState init_state(StructuredL L, Scalar mu1, Scalar mu2,
                           ConstantPolicy policy);

// Completes b1, b4 of the current level and produces the next level's
// a-entries and b2, b3.
void step(RecurrenceState& state);

// Runs the completion of level g plus one virtual step without mutating the
// argument.  Assumes state.last() == g.
TerminationResidual termination_residual(const RecurrenceState& state, int g);

// First level violating the parity pattern (odd level: A = 0, b2 = -b3;
// even level: a1 = a4 = 0, a2 = a3 = -(b2 of previous level)',
// b2 = b3 = (r1 a2 - a2')/2), or nullopt if all levels conform.
// Meaningful under the ProofSection policy.
std::optional<int> parity_check(const RecurrenceState& state);

struct ConstantSolution {
    std::map<UnknownId, Scalar> assignment;
    std::vector<UnknownId> free_unknowns;  // set to zero in assignment
};

// Solves "termination residual = 0" for the symbolic constants.  For Laurent
// coefficients the equations cover every stored exponent up to and including
// the constant term.  Throws InconsistentSystem naming the first equation
// that cannot be satisfied.
ConstantSolution solve_constants(const RecurrenceState& state, int g);

// M = sum_k (A_k d + B_k) L^{g-k} with all unknowns bound by the assignment.
DiffOperator assemble_M(const RecurrenceState& state, int g,
                        const std::map<UnknownId, Scalar>& assignment);

} // namespace codo
