#pragma once

#include "leosys/askey.hpp"

namespace leosys {

/// Data for the q-Racah parametrization. r_2 is never free: it is pinned
/// by r_1·r_2 = s·s*·q^{d+1}.
struct QRacahParams {
    long d = 0;
    FieldDescriptor field;
    FieldElement q, h, h_star, s, s_star, r1;
    FieldElement theta0, theta_star0;  // default 0

    FieldElement r2() const;
    void check_nonzero() const;  // throws Error when a parameter vanishes
};

/// θ_i = θ*_i = d−2i, φ_i = −2i(d−i+1), ϕ_i = 2i(d−i+1). Requires
/// characteristic zero or an odd prime greater than d.
ParameterArray krawtchouk_array(long d, const FieldDescriptor& field);

/// θ_i = θ_0 + h(1−q^i)(1−s q^{i+1})/q^i and its starred twin, with
///   φ_i = h h* q^{1−2i} (1−q^i)(1−q^{i−d−1})(1−r_1 q^i)(1−r_2 q^i),
///   ϕ_i = h h* q^{1−2i} (1−q^i)(1−q^{i−d−1})(r_1−s* q^i)(r_2−s* q^i)/s*.
/// Conditions (iii)–(v) hold identically for this parametrization and are
/// asserted; (i)–(ii) depend on the numbers and raise Error on violation.
ParameterArray q_racah_array(const QRacahParams& p);

/// Checks the five closed-form entry formulas for the tridiagonal matrix B
/// representing the pair in the d00*d* basis, and the (θ_0,h,s)↔(θ*_0,h*,s*)
/// swap giving B* in the d*0*0d basis.
bool q_racah_b_matrix_check(const QRacahParams& p);

/// Compares p_poly_value against the terminating basic hypergeometric sum
///   Σ_n (q^{-i};q)_n (s q^{i+1};q)_n (q^{-j};q)_n (s* q^{j+1};q)_n q^n
///       / [(r_1 q;q)_n (r_2 q;q)_n (q^{-d};q)_n (q;q)_n].
bool hypergeometric_check(const QRacahParams& p, long i, long j);

/// Krawtchouk analogue: P_ij = binom(d,j)·Σ_n (−i)_n(−j)_n 2^n/((−d)_n n!).
bool krawtchouk_hypergeometric_check(long d, long i, long j);

/// Closed forms for the q-Racah normalizers and ν (k*_j swaps s and s*).
FieldElement q_racah_k(const QRacahParams& p, long j);
FieldElement q_racah_k_star(const QRacahParams& p, long j);
FieldElement q_racah_nu(const QRacahParams& p);

/// (a;q)_n = (1−a)(1−aq)⋯(1−aq^{n−1}).
FieldElement q_shifted_factorial(const FieldElement& a, const FieldElement& q, long n);

}  // namespace leosys
