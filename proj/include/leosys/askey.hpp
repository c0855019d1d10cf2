#pragma once

#include "leosys/transition.hpp"

namespace leosys {

/// The polynomial matrices P, P* between the two standard bases, the
/// normalizers k_j, k*_j and the scalar ν with P·P* = ν·I. The first
/// column of each of P, P* is all ones.
struct AskeyData {
    MatrixF p;
    MatrixF p_star;
    std::vector<FieldElement> k;
    std::vector<FieldElement> k_star;
    FieldElement nu;
};

/// 𝒫_ij = Σ_n Π_{k<n}(θ_i−θ_k)·Π_{k<n}(θ*_j−θ*_k) / (φ_1⋯φ_n);
/// a polynomial of degree j in θ_i and degree i in θ*_j.
FieldElement p_poly_value(const ParameterArray& pa, long i, long j);

/// Assembles P_ij = k_j·𝒫_ij, P*_ij = k*_j·𝒫_ji, with k_j, k*_j and ν from
/// their closed forms. Verifies P·P* = ν·I and the all-ones first columns.
AskeyData askey_data(const ParameterArray& pa);

/// Both orthogonality sums:
///   Σ_n 𝒫_in 𝒫_jn k_n  = δ_ij ν / k*_j and
///   Σ_n 𝒫_ni 𝒫_nj k*_n = δ_ij ν / k_j.
bool orthogonality_check(const ParameterArray& pa);

/// Three-term recurrences in matrix form: B*P = PH* and BP* = P*H, where
/// (H, B*) is the representation pair for d*0*0d and (B, H*) the pair for
/// d00*d*.
bool recurrence_check(const ParameterArray& pa);

/// The standard-to-dual-standard walk whose weight realizes P.
Walk p_walk();

/// Epsilon scalars under which the weight of p_walk() equals P exactly
/// (solved from the walk weight at all-ones epsilon, not guessed).
EpsilonConfig implied_epsilon_for_p(const ParameterArray& pa);

/// Same reconciliation for P* along the reversed walk.
EpsilonConfig implied_epsilon_for_p_star(const ParameterArray& pa);

}  // namespace leosys
