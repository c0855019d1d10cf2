#pragma once

#include <vector>

#include "leosys/labels.hpp"
#include "leosys/matrix.hpp"
#include "leosys/params.hpp"

namespace leosys {

/// The matrices representing the pair in the basis named by `label`.
struct RepresentationPair {
    BasisLabel label;
    MatrixF a_rep;
    MatrixF a_star_rep;
};

/// Shape of (A^g, A*^g), determined by which of the last two symbols of g
/// are starred.
enum class PairShape { DiagTridiag, LowerUpper, UpperLower, TridiagDiag };

PairShape expected_shape(const BasisLabel& g);
bool matches_expected_shape(const RepresentationPair& rep);

/// Split form: A lower bidiagonal with diagonal θ_0..θ_d and unit
/// subdiagonal, A* upper bidiagonal with diagonal θ*_0..θ*_d and
/// superdiagonal φ_1..φ_d. This is the representation for label d*00*d.
RepresentationPair split_matrices(const ParameterArray& pa);

/// Closed-form representation for any of the 24 labels.
RepresentationPair representation(const ParameterArray& pa, const BasisLabel& g);

/// E_i = Π_{j≠i} (m − θ_j I)/(θ_i − θ_j) for a multiplicity-free matrix
/// with the given eigenvalue ordering. Throws on repeated eigenvalues.
std::vector<MatrixF> primitive_idempotents(const MatrixF& m,
                                           const std::vector<FieldElement>& eigenvalues);

/// Unnormalized idempotents: e.g. Ẽ_0 = (A−θ_1 I)⋯(A−θ_d I), evaluated in
/// the representation g.
struct TildeOperators {
    MatrixF e0, ed, e0_star, ed_star;
};

TildeOperators tilde_operators(const ParameterArray& pa, const BasisLabel& g);

/// Checks the defining zero/nonzero conditions E_i A* E_j (and dually) via
/// primitive idempotents computed from the representations.
bool verify_leonard_conditions(const ParameterArray& pa);

}  // namespace leosys
