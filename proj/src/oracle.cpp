#include "leosys/oracle.hpp"

namespace leosys {

namespace {

bool is_zero_vector(const VectorF& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

bool vectors_equal(const VectorF& a, const VectorF& b) { return is_zero_vector(a - b); }

struct Tilde {
    MatrixF e0, ed, e0_star, ed_star;
};

Tilde split_tilde(const ParameterArray& pa, const MatrixF& a, const MatrixF& a_star) {
    const long d = pa.d;
    const Index n = d + 1;
    auto prod = [&](const MatrixF& x, const std::vector<FieldElement>& evs, long lo, long hi) {
        MatrixF acc = MatrixF::Identity(n, n);
        for (long k = lo; k <= hi; ++k)
            acc = acc * (x - evs[static_cast<std::size_t>(k)] * MatrixF::Identity(n, n));
        return acc;
    };
    return Tilde{prod(a, pa.theta, 1, d), prod(a, pa.theta, 0, d - 1),
                 prod(a_star, pa.theta_star, 1, d), prod(a_star, pa.theta_star, 0, d - 1)};
}

}  // namespace

ConcreteModule build_module(const ParameterArray& pa, const EpsilonConfig& eps) {
    pa.check_lengths();
    eps.check_nonzero();
    ValidationReport report = validate(pa);
    if (!report.valid) throw Error("cannot build module from invalid array");

    ConcreteModule m{pa, eps, {}, {}, {}, {}, {}, {}, {}, {}};
    RepresentationPair split = split_matrices(pa);
    m.a = split.a_rep;
    m.a_star = split.a_star_rep;
    m.e = primitive_idempotents(m.a, pa.theta);
    m.e_star = primitive_idempotents(m.a_star, pa.theta_star);

    const long d = pa.d;
    Tilde t = split_tilde(pa, m.a, m.a_star);
    FieldElement vp = pa.varphi_product();
    FieldElement ph = pa.phi_product();

    VectorF e0vec = VectorF::Zero(d + 1);
    e0vec(0) = FieldElement::one(pa.field);
    m.eta0_star = e0vec;
    m.etad = (eps.epsd / eps.eps0_star) * (t.ed * m.eta0_star);
    m.eta0 = (eps.eps0 / (eps.eps0_star * ph)) * (t.e0 * m.eta0_star);
    m.etad_star = (eps.epsd_star / eps.eps0) * (t.ed_star * m.eta0);

    for (const VectorF* v : {&m.eta0, &m.etad, &m.eta0_star, &m.etad_star})
        if (is_zero_vector(*v)) throw Error("defining vector vanished; invalid array");

    // Eigenspace memberships.
    auto in_eigenspace = [&](const MatrixF& idem, const VectorF& v) {
        return vectors_equal(idem * v, v);
    };
    bool ok = in_eigenspace(m.e[0], m.eta0) && in_eigenspace(m.e[static_cast<std::size_t>(d)], m.etad) &&
              in_eigenspace(m.e_star[0], m.eta0_star) &&
              in_eigenspace(m.e_star[static_cast<std::size_t>(d)], m.etad_star);

    // The eight tilde-operator relations.
    auto rel = [&](const MatrixF& op, const VectorF& src, const FieldElement& src_eps,
                   const VectorF& dst, const FieldElement& dst_eps, const FieldElement& coef) {
        return vectors_equal((FieldElement(1) / src_eps) * (op * src), (coef / dst_eps) * dst);
    };
    FieldElement one(1);
    ok = ok && rel(t.ed, m.eta0_star, eps.eps0_star, m.etad, eps.epsd, one);
    ok = ok && rel(t.ed, m.etad_star, eps.epsd_star, m.etad, eps.epsd, one);
    ok = ok && rel(t.e0_star, m.eta0, eps.eps0, m.eta0_star, eps.eps0_star, one);
    ok = ok && rel(t.e0_star, m.etad, eps.epsd, m.eta0_star, eps.eps0_star, vp);
    ok = ok && rel(t.ed_star, m.eta0, eps.eps0, m.etad_star, eps.epsd_star, one);
    ok = ok && rel(t.ed_star, m.etad, eps.epsd, m.etad_star, eps.epsd_star, ph);
    ok = ok && rel(t.e0, m.eta0_star, eps.eps0_star, m.eta0, eps.eps0, ph);
    ok = ok && rel(t.e0, m.etad_star, eps.epsd_star, m.eta0, eps.eps0, vp);

    // Idempotent-image adjustments.
    const MatrixF& e_d = m.e[static_cast<std::size_t>(d)];
    const MatrixF& es_d = m.e_star[static_cast<std::size_t>(d)];
    ok = ok && rel(e_d, m.etad_star, eps.epsd_star, VectorF(e_d * m.eta0_star), eps.eps0_star, one);
    ok = ok && rel(m.e_star[0], m.etad, eps.epsd, VectorF(m.e_star[0] * m.eta0), eps.eps0, vp);
    ok = ok && rel(es_d, m.etad, eps.epsd, VectorF(es_d * m.eta0), eps.eps0, ph);
    ok = ok && rel(m.e[0], m.etad_star, eps.epsd_star, VectorF(m.e[0] * m.eta0_star),
                   eps.eps0_star, vp / ph);
    if (!ok) throw Error("defining relations failed post-hoc verification");
    return m;
}

namespace {

enum class Chain { UpLow, UpHigh, DownHigh, DownLow };

std::vector<VectorF> chain_vectors(const MatrixF& x, const std::vector<FieldElement>& sigma,
                                   const VectorF& eta, long d, Chain mode) {
    std::vector<VectorF> v(static_cast<std::size_t>(d) + 1);
    auto at = [&](long k) { return sigma[static_cast<std::size_t>(k)]; };
    auto step = [&](const VectorF& w, long k) {
        return VectorF(x * w - at(k) * w);
    };
    switch (mode) {
        case Chain::UpLow:  // v_i = (X−σ_0)⋯(X−σ_{i−1}) η
            v[0] = eta;
            for (long i = 1; i <= d; ++i)
                v[static_cast<std::size_t>(i)] = step(v[static_cast<std::size_t>(i - 1)], i - 1);
            break;
        case Chain::UpHigh:  // v_i = (X−σ_d)⋯(X−σ_{d−i+1}) η
            v[0] = eta;
            for (long i = 1; i <= d; ++i)
                v[static_cast<std::size_t>(i)] =
                    step(v[static_cast<std::size_t>(i - 1)], d - i + 1);
            break;
        case Chain::DownHigh:  // v_i = (X−σ_d)⋯(X−σ_{i+1}) η
            v[static_cast<std::size_t>(d)] = eta;
            for (long i = d - 1; i >= 0; --i)
                v[static_cast<std::size_t>(i)] = step(v[static_cast<std::size_t>(i + 1)], i + 1);
            break;
        case Chain::DownLow:  // v_i = (X−σ_0)⋯(X−σ_{d−i−1}) η
            v[static_cast<std::size_t>(d)] = eta;
            for (long i = d - 1; i >= 0; --i)
                v[static_cast<std::size_t>(i)] =
                    step(v[static_cast<std::size_t>(i + 1)], d - i - 1);
            break;
    }
    return v;
}

MatrixF columns(const std::vector<VectorF>& v) {
    MatrixF m(v.front().size(), static_cast<Index>(v.size()));
    for (std::size_t j = 0; j < v.size(); ++j) m.col(static_cast<Index>(j)) = v[j];
    return m;
}

}  // namespace

ConcreteBasis build_basis_direct(const ConcreteModule& m, const BasisLabel& g) {
    const long d = m.pa.d;
    const std::string name = g.to_string();
    std::vector<VectorF> v;

    auto idem_images = [&](const std::vector<MatrixF>& idem, const VectorF& eta, bool reversed) {
        std::vector<VectorF> out;
        for (long i = 0; i <= d; ++i) {
            long k = reversed ? d - i : i;
            out.push_back(idem[static_cast<std::size_t>(k)] * eta);
        }
        return out;
    };

    if (name == "d*00*d")
        v = chain_vectors(m.a, m.pa.theta, m.eta0_star, d, Chain::UpLow);
    else if (name == "0d*0*d")
        v = chain_vectors(m.a_star, m.pa.theta_star, m.etad, d, Chain::DownHigh);
    else if (name == "d*0d0*")
        v = chain_vectors(m.a, m.pa.theta, m.eta0_star, d, Chain::DownLow);
    else if (name == "0d*d0*")
        v = chain_vectors(m.a_star, m.pa.theta_star, m.etad, d, Chain::UpHigh);
    else if (name == "d0*0d*")
        v = chain_vectors(m.a_star, m.pa.theta_star, m.eta0, d, Chain::UpLow);
    else if (name == "0*d0d*")
        v = chain_vectors(m.a, m.pa.theta, m.etad_star, d, Chain::DownHigh);
    else if (name == "d0*d*0")
        v = chain_vectors(m.a_star, m.pa.theta_star, m.eta0, d, Chain::DownLow);
    else if (name == "0*dd*0")
        v = chain_vectors(m.a, m.pa.theta, m.etad_star, d, Chain::UpHigh);
    else if (name == "dd*00*")
        v = chain_vectors(m.a_star, m.pa.theta_star, m.eta0, d, Chain::UpHigh);
    else if (name == "d*d00*")
        v = chain_vectors(m.a, m.pa.theta, m.eta0_star, d, Chain::DownHigh);
    else if (name == "dd*0*0")
        v = chain_vectors(m.a_star, m.pa.theta_star, m.eta0, d, Chain::DownHigh);
    else if (name == "d*d0*0")
        v = chain_vectors(m.a, m.pa.theta, m.eta0_star, d, Chain::UpHigh);
    else if (name == "00*dd*")
        v = chain_vectors(m.a_star, m.pa.theta_star, m.etad, d, Chain::UpLow);
    else if (name == "0*0dd*")
        v = chain_vectors(m.a, m.pa.theta, m.etad_star, d, Chain::DownLow);
    else if (name == "00*d*d")
        v = chain_vectors(m.a_star, m.pa.theta_star, m.etad, d, Chain::DownLow);
    else if (name == "0*0d*d")
        v = chain_vectors(m.a, m.pa.theta, m.etad_star, d, Chain::UpLow);
    else if (name == "d*0*0d")
        v = idem_images(m.e, m.eta0_star, false);
    else if (name == "0*d*0d")
        v = idem_images(m.e, m.etad_star, false);
    else if (name == "d*0*d0")
        v = idem_images(m.e, m.eta0_star, true);
    else if (name == "0*d*d0")
        v = idem_images(m.e, m.etad_star, true);
    else if (name == "d00*d*")
        v = idem_images(m.e_star, m.eta0, false);
    else if (name == "0d0*d*")
        v = idem_images(m.e_star, m.etad, false);
    else if (name == "d0d*0*")
        v = idem_images(m.e_star, m.eta0, true);
    else if (name == "0dd*0*")
        v = idem_images(m.e_star, m.etad, true);
    else
        throw Error("unknown basis label: " + name);

    if (rank_exact(columns(v)) != d + 1)
        throw Error("direct basis " + name + " is linearly dependent");
    return ConcreteBasis{g, std::move(v)};
}

MatrixF transition_direct(const ConcreteBasis& from, const ConcreteBasis& to) {
    return solve_exact(columns(from.vectors), columns(to.vectors));
}

MatrixF representation_direct(const ConcreteModule& m, const BasisLabel& g, bool star) {
    MatrixF basis = columns(build_basis_direct(m, g).vectors);
    return solve_exact(basis, (star ? m.a_star : m.a) * basis);
}

namespace {

// Spanning columns for the i-th component of the flag [z].
MatrixF flag_component(const ConcreteModule& m, Symbol z, long i) {
    const long d = m.pa.d;
    const bool starred = is_starred(z);
    const auto& idem = starred ? m.e_star : m.e;
    const VectorF& seed = starred ? m.eta0 : m.eta0_star;
    MatrixF out(d + 1, i + 1);
    for (long k = 0; k <= i; ++k) {
        long idx = (z == Symbol::Zero || z == Symbol::ZeroStar) ? k : d - k;
        out.col(k) = idem[static_cast<std::size_t>(idx)] * seed;
    }
    return out;
}

}  // namespace

bool basis_in_subspaces(const ConcreteModule& m, const ConcreteBasis& b) {
    const long d = m.pa.d;
    Symbol y = b.label[2], z = b.label[3];
    for (long i = 0; i <= d; ++i) {
        const VectorF& v = b.vectors[static_cast<std::size_t>(i)];
        if (!in_span(flag_component(m, y, i), v)) return false;
        if (!in_span(flag_component(m, z, d - i), v)) return false;
    }
    return true;
}

bool verify_subspace_memberships(const ConcreteModule& m) {
    const long d = m.pa.d;
    const std::array<Symbol, 4> omega{Symbol::Zero, Symbol::D, Symbol::ZeroStar, Symbol::DStar};

    // (a) mutual opposition: F_i ∩ G_j = 0 whenever i + j < d.
    for (std::size_t a = 0; a < omega.size(); ++a)
        for (std::size_t b = a + 1; b < omega.size(); ++b)
            for (long i = 0; i <= d; ++i)
                for (long j = 0; i + j < d; ++j)
                    if (rank_of_union(flag_component(m, omega[a], i),
                                      flag_component(m, omega[b], j)) != i + j + 2)
                        return false;

    // (b) every basis vector sits in its stated intersection.
    for (const auto& g : BasisLabel::all())
        if (!basis_in_subspaces(m, build_basis_direct(m, g))) return false;

    // (c) partial sums of each decomposition agree with the flag components.
    for (const auto& g : BasisLabel::all()) {
        ConcreteBasis basis = build_basis_direct(m, g);
        MatrixF cols = columns(basis.vectors);
        for (long i = 0; i <= d; ++i) {
            if (!same_span(cols.leftCols(i + 1), flag_component(m, g[2], i))) return false;
            if (!same_span(cols.rightCols(d - i + 1), flag_component(m, g[3], d - i)))
                return false;
        }
    }
    return true;
}

bool verify_generation_property(const ConcreteModule& m) {
    const long d = m.pa.d;
    const Index n = d + 1;
    std::vector<MatrixF> powers{MatrixF::Identity(n, n)};
    for (long k = 1; k <= d; ++k) powers.push_back(powers.back() * m.a);
    MatrixF flat(n * n, n * n);
    Index col = 0;
    for (long r = 0; r <= d; ++r)
        for (long s = 0; s <= d; ++s) {
            MatrixF prod = powers[static_cast<std::size_t>(r)] * m.e_star[0] *
                           powers[static_cast<std::size_t>(s)];
            Index row = 0;
            for (Index i = 0; i < n; ++i)
                for (Index j = 0; j < n; ++j) flat(row++, col) = prod(i, j);
            ++col;
        }
    return rank_exact(flat) == n * n;
}

bool verify_splitting_identities(const ConcreteModule& m) {
    const long d = m.pa.d;
    auto th = [&](long i) { return m.pa.theta[static_cast<std::size_t>(i)]; };
    auto ts = [&](long i) { return m.pa.theta_star[static_cast<std::size_t>(i)]; };

    std::vector<VectorF> u;
    for (long i = 0; i <= d; ++i) {
        MatrixF inter = intersect_spans(flag_component(m, Symbol::ZeroStar, i),
                                        flag_component(m, Symbol::D, d - i));
        if (inter.cols() != 1) return false;
        u.push_back(inter.col(0));
    }
    for (long i = 0; i <= d; ++i) {
        VectorF raised = m.a * u[static_cast<std::size_t>(i)] - th(i) * u[static_cast<std::size_t>(i)];
        if (i == d) {
            if (!is_zero_vector(raised)) return false;
        } else if (is_zero_vector(raised) ||
                   !in_span(u[static_cast<std::size_t>(i + 1)], raised))
            return false;
        VectorF lowered =
            m.a_star * u[static_cast<std::size_t>(i)] - ts(i) * u[static_cast<std::size_t>(i)];
        if (i == 0) {
            if (!is_zero_vector(lowered)) return false;
        } else if (is_zero_vector(lowered) ||
                   !in_span(u[static_cast<std::size_t>(i - 1)], lowered))
            return false;
    }
    for (long i = 1; i <= d; ++i) {
        VectorF w = m.a_star * u[static_cast<std::size_t>(i)] - ts(i) * u[static_cast<std::size_t>(i)];
        VectorF w2 = VectorF(m.a * w) - th(i - 1) * w;
        FieldElement vp_i = m.pa.varphi[static_cast<std::size_t>(i - 1)];
        if (!is_zero_vector(w2 - vp_i * u[static_cast<std::size_t>(i)])) return false;
    }
    return true;
}

}  // namespace leosys
