#include "leosys/transition.hpp"

#include <algorithm>
#include <map>

namespace leosys {

EpsilonConfig EpsilonConfig::ones(const FieldDescriptor& desc) {
    FieldElement one = FieldElement::one(desc);
    return EpsilonConfig{one, one, one, one};
}

void EpsilonConfig::check_nonzero() const {
    if (eps0.is_zero() || epsd.is_zero() || eps0_star.is_zero() || epsd_star.is_zero())
        throw Error("epsilon scalars must be nonzero");
}

MatrixF inversion_matrix(long d) {
    MatrixF z = MatrixF::Zero(d + 1, d + 1);
    for (long i = 0; i <= d; ++i) z(i, d - i) = FieldElement(1);
    return z;
}

namespace {

// Π_{k=lo}^{hi} (v − seq[k]); empty when lo > hi.
FieldElement diff_prod(const std::vector<FieldElement>& seq, const FieldElement& v, long lo,
                       long hi) {
    FieldElement acc(1);
    for (long k = lo; k <= hi; ++k) acc = acc * (v - seq[static_cast<std::size_t>(k)]);
    return acc;
}

struct TransitionContext {
    const ParameterArray& pa;
    const EpsilonConfig& eps;
    std::optional<Beta> beta;

    long d() const { return pa.d; }
    FieldElement th(long i) const { return pa.theta[static_cast<std::size_t>(i)]; }
    FieldElement ts(long i) const { return pa.theta_star[static_cast<std::size_t>(i)]; }

    // φ_1⋯φ_i and the reversed prefix φ_d⋯φ_{d−i+1}; likewise for ϕ.
    FieldElement vp_pre(long i) const {
        FieldElement acc(1);
        for (long k = 1; k <= i; ++k) acc = acc * pa.varphi[static_cast<std::size_t>(k - 1)];
        return acc;
    }
    FieldElement vp_suf(long i) const {
        FieldElement acc(1);
        for (long k = 0; k < i; ++k) acc = acc * pa.varphi[static_cast<std::size_t>(d() - 1 - k)];
        return acc;
    }
    FieldElement ph_pre(long i) const {
        FieldElement acc(1);
        for (long k = 1; k <= i; ++k) acc = acc * pa.phi[static_cast<std::size_t>(k - 1)];
        return acc;
    }
    FieldElement ph_suf(long i) const {
        FieldElement acc(1);
        for (long k = 0; k < i; ++k) acc = acc * pa.phi[static_cast<std::size_t>(d() - 1 - k)];
        return acc;
    }

    // [j, i−j, d−i]_q; every triple arising here has part sum d.
    FieldElement tri(long i, long j) const { return triple_bracket(j, i - j, d() - i, beta); }
};

MatrixF diag_from(long d, const std::function<FieldElement(long)>& f) {
    MatrixF m = MatrixF::Zero(d + 1, d + 1);
    for (long i = 0; i <= d; ++i) m(i, i) = f(i);
    return m;
}

MatrixF lower_from(long d, const std::function<FieldElement(long, long)>& f) {
    MatrixF m = MatrixF::Zero(d + 1, d + 1);
    for (long i = 0; i <= d; ++i)
        for (long j = 0; j <= i; ++j) m(i, j) = f(i, j);
    return m;
}

// Diagonal transition (source label -> swap of its first two symbols).
MatrixF transition_diag(const TransitionContext& c, const std::string& name) {
    const long d = c.d();
    const FieldElement vp_all = c.pa.varphi_product();
    const FieldElement ph_all = c.pa.phi_product();
    const FieldElement e0 = c.eps.eps0, ed = c.eps.epsd;
    const FieldElement e0s = c.eps.eps0_star, eds = c.eps.epsd_star;

    std::function<FieldElement(long)> entry;
    if (name == "d*00*d")
        entry = [&](long i) { return ed * vp_all / (c.vp_pre(i) * e0s); };
    else if (name == "0d*0*d")
        entry = [&](long i) { return c.vp_pre(i) * e0s / (ed * vp_all); };
    else if (name == "d*0d0*")
        entry = [&](long i) { return c.vp_suf(i) * ed / e0s; };
    else if (name == "0d*d0*")
        entry = [&](long i) { return e0s / (c.vp_suf(i) * ed); };
    else if (name == "d0*0d*")
        entry = [&](long i) { return eds * vp_all / (c.vp_pre(i) * e0); };
    else if (name == "0*d0d*")
        entry = [&](long i) { return c.vp_pre(i) * e0 / (eds * vp_all); };
    else if (name == "d0*d*0")
        entry = [&](long i) { return c.vp_suf(i) * eds / e0; };
    else if (name == "0*dd*0")
        entry = [&](long i) { return e0 / (c.vp_suf(i) * eds); };
    else if (name == "dd*00*")
        entry = [&](long i) { return e0s * ph_all / (c.ph_suf(i) * e0); };
    else if (name == "d*d00*")
        entry = [&](long i) { return c.ph_suf(i) * e0 / (e0s * ph_all); };
    else if (name == "dd*0*0")
        entry = [&](long i) { return c.ph_pre(i) * e0s / e0; };
    else if (name == "d*d0*0")
        entry = [&](long i) { return e0 / (c.ph_pre(i) * e0s); };
    else if (name == "00*dd*")
        entry = [&](long i) { return eds / (c.ph_pre(i) * ed); };
    else if (name == "0*0dd*")
        entry = [&](long i) { return c.ph_pre(i) * ed / eds; };
    else if (name == "00*d*d")
        entry = [&](long i) { return c.ph_suf(i) * eds / (ed * ph_all); };
    else if (name == "0*0d*d")
        entry = [&](long i) { return ed * ph_all / (c.ph_suf(i) * eds); };
    else if (name == "d*0*0d")
        entry = [&](long i) { return c.ph_suf(i) * eds * vp_all / (c.vp_pre(i) * e0s * ph_all); };
    else if (name == "0*d*0d")
        entry = [&](long i) { return c.vp_pre(i) * e0s * ph_all / (c.ph_suf(i) * eds * vp_all); };
    else if (name == "d*0*d0")
        entry = [&](long i) { return c.vp_suf(i) * eds / (c.ph_pre(i) * e0s); };
    else if (name == "0*d*d0")
        entry = [&](long i) { return c.ph_pre(i) * e0s / (c.vp_suf(i) * eds); };
    else if (name == "d00*d*")
        entry = [&](long i) { return c.ph_pre(i) * ed * vp_all / (c.vp_pre(i) * e0); };
    else if (name == "0d0*d*")
        entry = [&](long i) { return c.vp_pre(i) * e0 / (c.ph_pre(i) * ed * vp_all); };
    else if (name == "d0d*0*")
        entry = [&](long i) { return c.vp_suf(i) * ed * ph_all / (c.ph_suf(i) * e0); };
    else if (name == "0dd*0*")
        entry = [&](long i) { return c.ph_suf(i) * e0 / (c.vp_suf(i) * ed * ph_all); };
    else
        throw Error("unknown basis label: " + name);
    return diag_from(d, entry);
}

// Lower-triangular transition (source label -> swap of its middle two
// symbols).
MatrixF transition_lower(const TransitionContext& c, const std::string& name) {
    const long d = c.d();
    const auto& th = c.pa.theta;
    const auto& ts = c.pa.theta_star;
    auto at = [](const std::vector<FieldElement>& v, long k) {
        return v[static_cast<std::size_t>(k)];
    };

    // The four recurring entry families.
    auto inv_inc = [at](const std::vector<FieldElement>& seq) {
        return [s = &seq, at](long i, long j) {
            FieldElement den =
                diff_prod(*s, at(*s, j), 0, j - 1) * diff_prod(*s, at(*s, j), j + 1, i);
            return FieldElement(1) / den;
        };
    };
    auto inv_dec = [at, d](const std::vector<FieldElement>& seq) {
        return [s = &seq, at, d](long i, long j) {
            FieldElement den = diff_prod(*s, at(*s, d - j), d - j + 1, d) *
                               diff_prod(*s, at(*s, d - j), d - i, d - j - 1);
            return FieldElement(1) / den;
        };
    };
    auto bra_inc = [at, &c](const std::vector<FieldElement>& seq) {
        return [s = &seq, at, cp = &c](long i, long j) {
            return diff_prod(*s, at(*s, cp->d()), 0, i - j - 1) * cp->tri(i, j);
        };
    };
    auto bra_dec = [at, &c](const std::vector<FieldElement>& seq) {
        return [s = &seq, at, cp = &c](long i, long j) {
            return diff_prod(*s, at(*s, 0), cp->d() - i + j + 1, cp->d()) * cp->tri(i, j);
        };
    };
    auto plain_inc = [at](const std::vector<FieldElement>& seq) {
        return [s = &seq, at](long i, long j) { return diff_prod(*s, at(*s, i), 0, j - 1); };
    };
    auto plain_dec = [at, d](const std::vector<FieldElement>& seq) {
        return [s = &seq, at, d](long i, long j) {
            return diff_prod(*s, at(*s, d - i), d - j + 1, d);
        };
    };

    std::function<FieldElement(long, long)> entry;
    if (name == "d*00*d")
        entry = inv_inc(th);
    else if (name == "0d*0*d")
        entry = bra_inc(ts);
    else if (name == "d*0d0*")
        entry = bra_dec(th);
    else if (name == "0d*d0*")
        entry = inv_dec(ts);
    else if (name == "d0*0d*")
        entry = inv_inc(ts);
    else if (name == "0*d0d*")
        entry = bra_inc(th);
    else if (name == "d0*d*0")
        entry = bra_dec(ts);
    else if (name == "0*dd*0")
        entry = inv_dec(th);
    else if (name == "dd*00*")
        entry = inv_dec(ts);
    else if (name == "d*d00*")
        entry = bra_inc(th);
    else if (name == "dd*0*0")
        entry = bra_inc(ts);
    else if (name == "d*d0*0")
        entry = inv_dec(th);
    else if (name == "00*dd*")
        entry = inv_inc(ts);
    else if (name == "0*0dd*")
        entry = bra_dec(th);
    else if (name == "00*d*d")
        entry = bra_dec(ts);
    else if (name == "0*0d*d")
        entry = inv_inc(th);
    else if (name == "d*0*0d" || name == "0*d*0d")
        entry = plain_inc(th);
    else if (name == "d*0*d0" || name == "0*d*d0")
        entry = plain_dec(th);
    else if (name == "d00*d*" || name == "0d0*d*")
        entry = plain_inc(ts);
    else if (name == "d0d*0*" || name == "0dd*0*")
        entry = plain_dec(ts);
    else
        throw Error("unknown basis label: " + name);
    return lower_from(d, entry);
}

}  // namespace

MatrixF transition_adjacent(const ParameterArray& pa, const EpsilonConfig& eps,
                            const BasisLabel& g, const BasisLabel& h) {
    pa.check_lengths();
    eps.check_nonzero();
    auto type = adjacency_type(g, h);
    if (!type) throw Error("bases " + g.to_string() + " and " + h.to_string() + " are not adjacent");
    if (*type == 3) return inversion_matrix(pa.d);
    TransitionContext c{pa, eps, pa.beta()};
    return *type == 1 ? transition_diag(c, g.to_string()) : transition_lower(c, g.to_string());
}

MatrixF walk_weight(const ParameterArray& pa, const EpsilonConfig& eps, const Walk& walk) {
    if (walk.vertices.empty()) throw Error("empty walk");
    MatrixF acc = MatrixF::Identity(pa.d + 1, pa.d + 1);
    for (std::size_t k = 1; k < walk.vertices.size(); ++k)
        acc = acc * transition_adjacent(pa, eps, walk.vertices[k - 1], walk.vertices[k]);
    return acc;
}

Walk shortest_path(const BasisLabel& from, const BasisLabel& to) {
    std::map<BasisLabel, BasisLabel> parent;
    std::vector<BasisLabel> frontier{from};
    parent.emplace(from, from);
    while (!parent.count(to)) {
        std::vector<BasisLabel> next;
        for (const auto& g : frontier) {
            std::vector<BasisLabel> nbrs{g.swapped(0), g.swapped(1), g.swapped(2)};
            std::sort(nbrs.begin(), nbrs.end());
            for (const auto& n : nbrs)
                if (parent.emplace(n, g).second) next.push_back(n);
        }
        frontier = std::move(next);
    }
    Walk w;
    for (BasisLabel v = to;; v = parent.at(v)) {
        w.vertices.push_back(v);
        if (v == from) break;
    }
    std::reverse(w.vertices.begin(), w.vertices.end());
    return w;
}

MatrixF transition_any(const ParameterArray& pa, const EpsilonConfig& eps, const BasisLabel& g,
                       const BasisLabel& h) {
    return walk_weight(pa, eps, shortest_path(g, h));
}

bool verify_intertwiner(const RepresentationPair& rep_g, const RepresentationPair& rep_h,
                        const MatrixF& t) {
    if (is_zero_matrix(t)) return false;
    return is_zero_matrix(rep_g.a_rep * t - t * rep_h.a_rep) &&
           is_zero_matrix(rep_g.a_star_rep * t - t * rep_h.a_star_rep);
}

}  // namespace leosys
