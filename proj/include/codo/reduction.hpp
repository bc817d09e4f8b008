#pragma once

#include "codo/diffop.hpp"

namespace codo {

/**
 * Coefficients of [L, A d + B] = K d^3 + P d^2 + T d + F for
 * L = E d^2 + R d + Q.
 */
struct KPTF {
    MatrixS K, P, T, F;
};

/**
 * The same data rewritten against the basis {d L, L, d, 1}:
 * K d^3 + P d^2 + T d + F = Kt d L + Pt L + Tt d + Ft.
 */
struct KPTFTilde {
    MatrixS Kt, Pt, Tt, Ft;
};

KPTF commutator_first_order(const MatrixS& E, const MatrixS& R, const MatrixS& Q,
                            const MatrixS& A, const MatrixS& B);

// Requires E upper triangular with invertible constant diagonal.
KPTFTilde reduce_mod_L(const MatrixS& E, const MatrixS& R, const MatrixS& Q,
                       const KPTF& c);

// Closed-form tilde entries for the structured L shape; agrees with
// reduce_mod_L(commutator_first_order(...)) entry for entry.
KPTFTilde tilde_specialized(const StructuredL& l, const MatrixS& A, const MatrixS& B);

// Rebuilds Kt dL + Pt L + Tt d + Ft as an operator (oracle for the identity).
DiffOperator tilde_reexpand(const StructuredL& l, const KPTFTilde& t);
DiffOperator tilde_reexpand(const DiffOperator& L, const KPTFTilde& t);

} // namespace codo
