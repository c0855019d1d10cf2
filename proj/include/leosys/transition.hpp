#pragma once

#include <vector>

#include "leosys/system_rep.hpp"

namespace leosys {

/// The four free scalars ε_0, ε_d, ε*_0, ε*_d fixing the normalization of
/// the defining vectors η_0, η_d, η*_0, η*_d. All nonzero.
struct EpsilonConfig {
    FieldElement eps0, epsd, eps0_star, epsd_star;

    static EpsilonConfig ones(const FieldDescriptor& desc);
    void check_nonzero() const;  // throws Error if any vanishes
};

/// The inversion matrix Z: Z_ij = 1 when i+j = d, else 0. Z² = I.
MatrixF inversion_matrix(long d);

/// Closed-form transition matrix between adjacent bases: diagonal for
/// 1-adjacent pairs, lower triangular for 2-adjacent pairs, Z for
/// 3-adjacent pairs. Throws Error for non-adjacent pairs.
MatrixF transition_adjacent(const ParameterArray& pa, const EpsilonConfig& eps,
                            const BasisLabel& g, const BasisLabel& h);

/// Ordered product of adjacent transitions along the walk; a single-vertex
/// walk gives the identity.
MatrixF walk_weight(const ParameterArray& pa, const EpsilonConfig& eps, const Walk& walk);

/// BFS shortest path with a deterministic tie-break (lexicographically
/// smallest neighbour in the symbol order 0 < d < 0* < d*).
Walk shortest_path(const BasisLabel& from, const BasisLabel& to);

/// Transition between arbitrary bases as the weight of a shortest path.
MatrixF transition_any(const ParameterArray& pa, const EpsilonConfig& eps, const BasisLabel& g,
                       const BasisLabel& h);

/// True iff t ≠ 0, A^g t = t A^h and A*^g t = t A*^h.
bool verify_intertwiner(const RepresentationPair& rep_g, const RepresentationPair& rep_h,
                        const MatrixF& t);

}  // namespace leosys
