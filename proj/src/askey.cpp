#include "leosys/askey.hpp"

#include <algorithm>

namespace leosys {

namespace {

FieldElement diff_prod(const std::vector<FieldElement>& seq, const FieldElement& v, long lo,
                       long hi) {
    FieldElement acc(1);
    for (long k = lo; k <= hi; ++k) acc = acc * (v - seq[static_cast<std::size_t>(k)]);
    return acc;
}

}  // namespace

FieldElement p_poly_value(const ParameterArray& pa, long i, long j) {
    pa.check_lengths();
    const long d = pa.d;
    FieldElement sum = FieldElement::zero(pa.field);
    FieldElement term = FieldElement::one(pa.field);
    FieldElement ti = pa.theta[static_cast<std::size_t>(i)];
    FieldElement tsj = pa.theta_star[static_cast<std::size_t>(j)];
    for (long n = 0; n <= d; ++n) {
        if (n > 0) {
            term = term * (ti - pa.theta[static_cast<std::size_t>(n - 1)]) *
                   (tsj - pa.theta_star[static_cast<std::size_t>(n - 1)]) /
                   pa.varphi[static_cast<std::size_t>(n - 1)];
        }
        sum = sum + term;
    }
    return sum;
}

namespace {

std::vector<FieldElement> k_constants(const ParameterArray& pa, bool starred) {
    const long d = pa.d;
    const auto& ev = starred ? pa.theta : pa.theta_star;  // sequence entering the quotient
    std::vector<FieldElement> out;
    for (long j = 0; j <= d; ++j) {
        FieldElement num = FieldElement::one(pa.field);
        for (long k = 1; k <= j; ++k) num = num * pa.varphi[static_cast<std::size_t>(k - 1)];
        FieldElement den = FieldElement::one(pa.field);
        if (!starred) {
            for (long k = 1; k <= j; ++k) den = den * pa.phi[static_cast<std::size_t>(k - 1)];
        } else {
            for (long k = 0; k < j; ++k) den = den * pa.phi[static_cast<std::size_t>(d - 1 - k)];
        }
        FieldElement top = diff_prod(ev, ev[0], 1, d);
        FieldElement bottom = diff_prod(ev, ev[static_cast<std::size_t>(j)], 0, j - 1) *
                              diff_prod(ev, ev[static_cast<std::size_t>(j)], j + 1, d);
        out.push_back(num * top / (den * bottom));
    }
    return out;
}

}  // namespace

AskeyData askey_data(const ParameterArray& pa) {
    pa.check_lengths();
    const long d = pa.d;
    AskeyData data;
    data.k = k_constants(pa, false);
    data.k_star = k_constants(pa, true);
    data.nu = diff_prod(pa.theta, pa.theta[0], 1, d) *
              diff_prod(pa.theta_star, pa.theta_star[0], 1, d) / pa.phi_product();

    MatrixF poly(d + 1, d + 1);
    for (long i = 0; i <= d; ++i)
        for (long j = 0; j <= d; ++j) poly(i, j) = p_poly_value(pa, i, j);
    data.p = MatrixF(d + 1, d + 1);
    data.p_star = MatrixF(d + 1, d + 1);
    for (long i = 0; i <= d; ++i)
        for (long j = 0; j <= d; ++j) {
            data.p(i, j) = data.k[static_cast<std::size_t>(j)] * poly(i, j);
            data.p_star(i, j) = data.k_star[static_cast<std::size_t>(j)] * poly(j, i);
        }

    for (long i = 0; i <= d; ++i)
        if (!data.p(i, 0).is_one() || !data.p_star(i, 0).is_one())
            throw Error("first column of P/P* is not all ones; array is not a Leonard system");
    MatrixF nu_i = MatrixF::Zero(d + 1, d + 1);
    for (long i = 0; i <= d; ++i) nu_i(i, i) = data.nu;
    if (!is_zero_matrix(data.p * data.p_star - nu_i))
        throw Error("P P* != nu I; array is not a Leonard system");
    return data;
}

bool orthogonality_check(const ParameterArray& pa) {
    const long d = pa.d;
    AskeyData data = askey_data(pa);
    MatrixF poly(d + 1, d + 1);
    for (long i = 0; i <= d; ++i)
        for (long j = 0; j <= d; ++j) poly(i, j) = p_poly_value(pa, i, j);
    for (long i = 0; i <= d; ++i)
        for (long j = 0; j <= d; ++j) {
            FieldElement row_sum = FieldElement::zero(pa.field);
            FieldElement col_sum = FieldElement::zero(pa.field);
            for (long n = 0; n <= d; ++n) {
                row_sum = row_sum + poly(i, n) * poly(j, n) * data.k[static_cast<std::size_t>(n)];
                col_sum =
                    col_sum + poly(n, i) * poly(n, j) * data.k_star[static_cast<std::size_t>(n)];
            }
            FieldElement want_row = FieldElement::zero(pa.field);
            FieldElement want_col = FieldElement::zero(pa.field);
            if (i == j) {
                want_row = data.nu / data.k_star[static_cast<std::size_t>(j)];
                want_col = data.nu / data.k[static_cast<std::size_t>(j)];
            }
            if (!(row_sum == want_row) || !(col_sum == want_col)) return false;
        }
    return true;
}

bool recurrence_check(const ParameterArray& pa) {
    AskeyData data = askey_data(pa);
    RepresentationPair std_rep = representation(pa, BasisLabel::parse("d*0*0d"));
    RepresentationPair dual_rep = representation(pa, BasisLabel::parse("d00*d*"));
    const MatrixF& h = std_rep.a_rep;
    const MatrixF& b_star = std_rep.a_star_rep;
    const MatrixF& b = dual_rep.a_rep;
    const MatrixF& h_star = dual_rep.a_star_rep;
    return is_zero_matrix(b_star * data.p - data.p * h_star) &&
           is_zero_matrix(b * data.p_star - data.p_star * h);
}

Walk p_walk() {
    Walk w;
    for (const char* name :
         {"d*0*0d", "d*00*d", "0d*0*d", "0d*d0*", "0dd*0*", "d0d*0*", "d00*d*"})
        w.vertices.push_back(BasisLabel::parse(name));
    return w;
}

namespace {

EpsilonConfig reconcile(const ParameterArray& pa, const Walk& walk, bool solve_for_eps0) {
    EpsilonConfig eps = EpsilonConfig::ones(pa.field);
    MatrixF w = walk_weight(pa, eps, walk);
    FieldElement scale = w(0, 0);
    if (scale.is_zero()) throw Error("walk weight has vanishing corner entry");
    // The weight depends on the epsilon scalars only through the ratio
    // ε_0/ε*_0 (forward walk) resp. ε*_0/ε_0 (reversed walk). Absorbing
    // the observed corner entry into the denominator scalar pins column 0
    // of the weight to all ones.
    if (solve_for_eps0)
        eps.eps0 = scale;
    else
        eps.eps0_star = scale;
    return eps;
}

}  // namespace

EpsilonConfig implied_epsilon_for_p(const ParameterArray& pa) {
    return reconcile(pa, p_walk(), false);
}

EpsilonConfig implied_epsilon_for_p_star(const ParameterArray& pa) {
    Walk rev = p_walk();
    std::reverse(rev.vertices.begin(), rev.vertices.end());
    return reconcile(pa, rev, true);
}

}  // namespace leosys
