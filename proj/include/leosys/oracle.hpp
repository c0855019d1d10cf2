#pragma once

#include "leosys/transition.hpp"

namespace leosys {

/// A concrete realization of the module V = 𝕂^{d+1} in split coordinates,
/// together with the four defining vectors η_0 ∈ E_0V, η_d ∈ E_dV,
/// η*_0 ∈ E*_0V, η*_d ∈ E*_dV normalized by the epsilon scalars.
struct ConcreteModule {
    ParameterArray pa;
    EpsilonConfig eps;
    MatrixF a, a_star;  // split-form action
    VectorF eta0, etad, eta0_star, etad_star;
    std::vector<MatrixF> e;       // primitive idempotents of a
    std::vector<MatrixF> e_star;  // primitive idempotents of a_star
};

/// Builds the module from η*_0 = e_0 and the tilde-operator relations, then
/// verifies every defining relation post-hoc. Throws Error if any η
/// vanishes or a relation fails.
ConcreteModule build_module(const ParameterArray& pa, const EpsilonConfig& eps);

struct ConcreteBasis {
    BasisLabel label;
    std::vector<VectorF> vectors;
};

/// The basis [g] built literally from its defining vectors (polynomial
/// actions on the η's, or idempotent images). Throws Error on linear
/// dependence.
ConcreteBasis build_basis_direct(const ConcreteModule& m, const BasisLabel& g);

/// Transition matrix from bG to bH by solving the exact linear systems
/// v_j(H) = Σ_i T_ij v_i(G).
MatrixF transition_direct(const ConcreteBasis& from, const ConcreteBasis& to);

/// Matrix of the action of A (or A* when `star`) on the basis [g], found
/// by direct change of basis from split coordinates.
MatrixF representation_direct(const ConcreteModule& m, const BasisLabel& g, bool star);

/// Checks that every vector of the basis lies in the decomposition
/// subspace induced by the last two symbols of its label.
bool basis_in_subspaces(const ConcreteModule& m, const ConcreteBasis& b);

/// Flag component spans and the intersection/partial-sum structure:
/// (a) the four flags are mutually opposite,
/// (b) each basis vector lies in the decomposition subspace induced by the
///     last two symbols of its label,
/// (c) partial sums of each decomposition match the flag components.
bool verify_subspace_memberships(const ConcreteModule& m);

/// The (d+1)² products A^r E*_0 A^s are linearly independent.
bool verify_generation_property(const ConcreteModule& m);

/// U_i built from its defining intersection satisfies
/// (A−θ_i)U_i = U_{i+1}, (A*−θ*_i)U_i = U_{i−1}, and
/// (A−θ_{i−1})(A*−θ*_i) acts on U_i as φ_i.
bool verify_splitting_identities(const ConcreteModule& m);

}  // namespace leosys
