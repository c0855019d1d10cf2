#pragma once

#include <optional>
#include <vector>

#include "leosys/field.hpp"

namespace leosys {

class ZeroBracketError : public Error {
public:
    using Error::Error;
};

/// β = q + q⁻¹. q itself is never materialized: every bracket value is
/// produced inside the base field by the recurrence
/// β·[n] = [n+2] + [n−2] from the seeds [0] = 0, [2] = 1 (even n) and
/// [1] = 1, [−1] = −1 (odd n).
struct Beta {
    FieldElement value;
};

/// [n]_q for any integer n; antisymmetric in n.
FieldElement bracket(long n, const Beta& beta);

/// [n]!_q = [1]_q [2]_q ⋯ [n]_q, empty product 1.
FieldElement bracket_factorial(long n, const Beta& beta);

/// [r,s,t]_q: the quotient
///   [r+s]!·[r+t]!·[s+t]!·(r,s,t) / ([r]!·[s]!·[t]!·[r+s+t]!)
/// with (r,s,t) = β+2 when r,s,t are all odd and 1 otherwise.
/// Equals 1 when any argument is 0 (no β required for that case).
/// Throws ZeroBracketError when a bracket in 1..r+s+t vanishes, and
/// Error when β is required but absent.
FieldElement triple_bracket(long r, long s, long t, const std::optional<Beta>& beta);

/// True iff [i]_q ≠ 0 for 1 ≤ i ≤ d.
bool check_brackets_nonzero(long d, const Beta& beta);

/// σ₀..σ_d with σ_{i−1} − βσᵢ + σ_{i+1} independent of i.
struct RecurrentSequence {
    std::vector<FieldElement> entries;

    long diameter() const { return static_cast<long>(entries.size()) - 1; }
};

/// Recovers β from β+1 = (σ_{i−2}−σ_{i+1})/(σ_{i−1}−σᵢ), checked constant
/// over 2 ≤ i ≤ d−1. Returns nullopt for d ≤ 2 (β unconstrained there).
/// Throws on repeated consecutive entries or a non-constant ratio.
std::optional<Beta> beta_from_sequence(const RecurrentSequence& sigma);

/// [r−s]_q(σᵢ−σⱼ) = [i−j]_q(σ_r−σ_s) over all index quadruples with
/// i+j = r+s.
bool cross_ratio_identity_check(const RecurrentSequence& sigma, const Beta& beta);

}  // namespace leosys
