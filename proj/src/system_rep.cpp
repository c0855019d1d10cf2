#include "leosys/system_rep.hpp"

#include <functional>

namespace leosys {

namespace {

using EntryFn = std::function<FieldElement(long)>;

// Π_{k=lo}^{hi} (v − seq[k]); empty when lo > hi.
FieldElement diff_prod(const std::vector<FieldElement>& seq, const FieldElement& v, long lo,
                       long hi) {
    FieldElement acc(1);
    for (long k = lo; k <= hi; ++k) acc = acc * (v - seq[static_cast<std::size_t>(k)]);
    return acc;
}

enum class Band { Sub, Sup };

MatrixF banded(long d, const EntryFn& diag, Band band, const EntryFn& off) {
    MatrixF m = MatrixF::Zero(d + 1, d + 1);
    for (long i = 0; i <= d; ++i) m(i, i) = diag(i);
    for (long i = 1; i <= d; ++i) {
        if (band == Band::Sub)
            m(i, i - 1) = off(i);
        else
            m(i - 1, i) = off(i);
    }
    return m;
}

MatrixF diagonal(long d, const EntryFn& diag) {
    MatrixF m = MatrixF::Zero(d + 1, d + 1);
    for (long i = 0; i <= d; ++i) m(i, i) = diag(i);
    return m;
}

MatrixF tridiagonal(long d, const EntryFn& sub, const EntryFn& diag, const EntryFn& sup) {
    MatrixF m = MatrixF::Zero(d + 1, d + 1);
    for (long i = 0; i <= d; ++i) m(i, i) = diag(i);
    for (long i = 1; i <= d; ++i) {
        m(i, i - 1) = sub(i);
        m(i - 1, i) = sup(i);
    }
    return m;
}

}  // namespace

PairShape expected_shape(const BasisLabel& g) {
    bool y = is_starred(g[2]), z = is_starred(g[3]);
    if (!y && !z) return PairShape::DiagTridiag;
    if (y && !z) return PairShape::LowerUpper;
    if (!y && z) return PairShape::UpperLower;
    return PairShape::TridiagDiag;
}

bool matches_expected_shape(const RepresentationPair& rep) {
    switch (expected_shape(rep.label)) {
        case PairShape::DiagTridiag:
            return is_diagonal(rep.a_rep) && is_irreducible_tridiagonal(rep.a_star_rep);
        case PairShape::LowerUpper:
            return is_lower_bidiagonal(rep.a_rep) && is_upper_bidiagonal(rep.a_star_rep);
        case PairShape::UpperLower:
            return is_upper_bidiagonal(rep.a_rep) && is_lower_bidiagonal(rep.a_star_rep);
        case PairShape::TridiagDiag:
            return is_irreducible_tridiagonal(rep.a_rep) && is_diagonal(rep.a_star_rep);
    }
    return false;
}

RepresentationPair split_matrices(const ParameterArray& pa) {
    return representation(pa, BasisLabel::parse("d*00*d"));
}

RepresentationPair representation(const ParameterArray& pa, const BasisLabel& g) {
    pa.check_lengths();
    const long d = pa.d;
    auto th = [&](long i) { return pa.theta[static_cast<std::size_t>(i)]; };
    auto ts = [&](long i) { return pa.theta_star[static_cast<std::size_t>(i)]; };
    auto vp = [&](long i) { return pa.varphi[static_cast<std::size_t>(i - 1)]; };
    auto ph = [&](long i) { return pa.phi[static_cast<std::size_t>(i - 1)]; };

    // Diagonal profiles and the off-diagonal coefficient profiles that the
    // sixteen bidiagonal rows draw from.
    EntryFn thi = [=](long i) { return th(i); };
    EntryFn thr = [=](long i) { return th(d - i); };
    EntryFn tsi = [=](long i) { return ts(i); };
    EntryFn tsr = [=](long i) { return ts(d - i); };
    EntryFn one = [](long) { return FieldElement(1); };
    EntryFn vpi = [=](long i) { return vp(i); };
    EntryFn vpr = [=](long i) { return vp(d - i + 1); };
    EntryFn phi_i = [=](long i) { return ph(i); };
    EntryFn phr = [=](long i) { return ph(d - i + 1); };

    // Tridiagonal off-diagonal entries, built over a β-recurrent sequence σ
    // (σ = θ for the A*-tridiagonal labels, σ = θ* for the A-tridiagonal
    // ones). Increasing orientation:
    //   sub(i) = c_sub(i)·Π_{k=i+1}^{d}(σ_i−σ_k) / Π_{k=i}^{d}(σ_{i−1}−σ_k)
    //   sup(i) = c_sup(i)·Π_{k=0}^{i−2}(σ_{i−1}−σ_k) / Π_{k=0}^{i−1}(σ_i−σ_k)
    // and the reversed orientation replaces i by d−i throughout.
    auto tri_inc = [d](const std::vector<FieldElement>& sigma, const EntryFn& c_sub,
                       const EntryFn& c_sup, const EntryFn& diag) {
        auto at = [&sigma](long k) { return sigma[static_cast<std::size_t>(k)]; };
        EntryFn sub = [&sigma, at, c_sub, d](long i) {
            return c_sub(i) * diff_prod(sigma, at(i), i + 1, d) /
                   diff_prod(sigma, at(i - 1), i, d);
        };
        EntryFn sup = [&sigma, at, c_sup](long i) {
            return c_sup(i) * diff_prod(sigma, at(i - 1), 0, i - 2) /
                   diff_prod(sigma, at(i), 0, i - 1);
        };
        return tridiagonal(d, sub, diag, sup);
    };
    auto tri_dec = [d](const std::vector<FieldElement>& sigma, const EntryFn& c_sub,
                       const EntryFn& c_sup, const EntryFn& diag) {
        auto at = [&sigma](long k) { return sigma[static_cast<std::size_t>(k)]; };
        EntryFn sub = [&sigma, at, c_sub, d](long i) {
            return c_sub(i) * diff_prod(sigma, at(d - i), 0, d - i - 1) /
                   diff_prod(sigma, at(d - i + 1), 0, d - i);
        };
        EntryFn sup = [&sigma, at, c_sup, d](long i) {
            return c_sup(i) * diff_prod(sigma, at(d - i + 1), d - i + 2, d) /
                   diff_prod(sigma, at(d - i), d - i + 1, d);
        };
        return tridiagonal(d, sub, diag, sup);
    };

    const std::string name = g.to_string();
    MatrixF a, as;

    // Sixteen bidiagonal labels.
    if (name == "d*00*d") {
        a = banded(d, thi, Band::Sub, one);
        as = banded(d, tsi, Band::Sup, vpi);
    } else if (name == "0d*0*d") {
        a = banded(d, thi, Band::Sub, vpi);
        as = banded(d, tsi, Band::Sup, one);
    } else if (name == "d*0d0*") {
        a = banded(d, thr, Band::Sup, one);
        as = banded(d, tsr, Band::Sub, vpr);
    } else if (name == "0d*d0*") {
        a = banded(d, thr, Band::Sup, vpr);
        as = banded(d, tsr, Band::Sub, one);
    } else if (name == "d0*0d*") {
        a = banded(d, thi, Band::Sup, vpi);
        as = banded(d, tsi, Band::Sub, one);
    } else if (name == "0*d0d*") {
        a = banded(d, thi, Band::Sup, one);
        as = banded(d, tsi, Band::Sub, vpi);
    } else if (name == "d0*d*0") {
        a = banded(d, thr, Band::Sub, vpr);
        as = banded(d, tsr, Band::Sup, one);
    } else if (name == "0*dd*0") {
        a = banded(d, thr, Band::Sub, one);
        as = banded(d, tsr, Band::Sup, vpr);
    } else if (name == "dd*00*") {
        a = banded(d, thi, Band::Sup, phr);
        as = banded(d, tsr, Band::Sub, one);
    } else if (name == "d*d00*") {
        a = banded(d, thi, Band::Sup, one);
        as = banded(d, tsr, Band::Sub, phr);
    } else if (name == "dd*0*0") {
        a = banded(d, thr, Band::Sub, phi_i);
        as = banded(d, tsi, Band::Sup, one);
    } else if (name == "d*d0*0") {
        a = banded(d, thr, Band::Sub, one);
        as = banded(d, tsi, Band::Sup, phi_i);
    } else if (name == "00*dd*") {
        a = banded(d, thr, Band::Sup, phi_i);
        as = banded(d, tsi, Band::Sub, one);
    } else if (name == "0*0dd*") {
        a = banded(d, thr, Band::Sup, one);
        as = banded(d, tsi, Band::Sub, phi_i);
    } else if (name == "00*d*d") {
        a = banded(d, thi, Band::Sub, phr);
        as = banded(d, tsr, Band::Sup, one);
    } else if (name == "0*0d*d") {
        a = banded(d, thi, Band::Sub, one);
        as = banded(d, tsr, Band::Sup, phr);
    } else {
        // Eight tridiagonal labels; the diagonal carries the local scalars.
        auto [la, las] = local_scalars(pa);
        EntryFn asi = [las](long i) { return las[static_cast<std::size_t>(i)]; };
        EntryFn asr = [las, d](long i) { return las[static_cast<std::size_t>(d - i)]; };
        EntryFn ai = [la](long i) { return la[static_cast<std::size_t>(i)]; };
        EntryFn ar = [la, d](long i) { return la[static_cast<std::size_t>(d - i)]; };

        if (name == "d*0*0d") {
            a = diagonal(d, thi);
            as = tri_inc(pa.theta, phr, vpi, asi);
        } else if (name == "0*d*0d") {
            a = diagonal(d, thi);
            as = tri_inc(pa.theta, vpi, phr, asi);
        } else if (name == "d*0*d0") {
            a = diagonal(d, thr);
            as = tri_dec(pa.theta, vpr, phi_i, asr);
        } else if (name == "0*d*d0") {
            a = diagonal(d, thr);
            as = tri_dec(pa.theta, phi_i, vpr, asr);
        } else if (name == "d00*d*") {
            a = tri_inc(pa.theta_star, phi_i, vpi, ai);
            as = diagonal(d, tsi);
        } else if (name == "0d0*d*") {
            a = tri_inc(pa.theta_star, vpi, phi_i, ai);
            as = diagonal(d, tsi);
        } else if (name == "d0d*0*") {
            a = tri_dec(pa.theta_star, vpr, phr, ar);
            as = diagonal(d, tsr);
        } else if (name == "0dd*0*") {
            a = tri_dec(pa.theta_star, phr, vpr, ar);
            as = diagonal(d, tsr);
        } else {
            throw Error("unknown basis label: " + name);
        }
    }
    return RepresentationPair{g, std::move(a), std::move(as)};
}

std::vector<MatrixF> primitive_idempotents(const MatrixF& m,
                                           const std::vector<FieldElement>& eigenvalues) {
    const Index n = m.rows();
    if (static_cast<Index>(eigenvalues.size()) != n)
        throw Error("need one eigenvalue per dimension");
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
            if (eigenvalues[i] == eigenvalues[j]) throw Error("repeated eigenvalues");

    std::vector<MatrixF> out;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        MatrixF e = MatrixF::Identity(n, n);
        FieldElement denom(1);
        for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
            if (j == i) continue;
            e = e * (m - eigenvalues[j] * MatrixF::Identity(n, n));
            denom = denom * (eigenvalues[i] - eigenvalues[j]);
        }
        FieldElement inv = denom.inverse();
        for (Index r = 0; r < n; ++r)
            for (Index c = 0; c < n; ++c) e(r, c) = e(r, c) * inv;
        out.push_back(std::move(e));
    }
    return out;
}

TildeOperators tilde_operators(const ParameterArray& pa, const BasisLabel& g) {
    RepresentationPair rep = representation(pa, g);
    const long d = pa.d;
    const Index n = d + 1;
    auto prod = [&](const MatrixF& m, const std::vector<FieldElement>& evs, long lo, long hi) {
        MatrixF acc = MatrixF::Identity(n, n);
        for (long k = lo; k <= hi; ++k)
            acc = acc * (m - evs[static_cast<std::size_t>(k)] * MatrixF::Identity(n, n));
        return acc;
    };
    TildeOperators t;
    t.e0 = prod(rep.a_rep, pa.theta, 1, d);
    t.ed = prod(rep.a_rep, pa.theta, 0, d - 1);
    t.e0_star = prod(rep.a_star_rep, pa.theta_star, 1, d);
    t.ed_star = prod(rep.a_star_rep, pa.theta_star, 0, d - 1);
    return t;
}

bool verify_leonard_conditions(const ParameterArray& pa) {
    const long d = pa.d;
    auto pattern_holds = [d](const std::vector<MatrixF>& idem, const MatrixF& x) {
        for (long i = 0; i <= d; ++i)
            for (long j = 0; j <= d; ++j) {
                MatrixF m = idem[static_cast<std::size_t>(i)] * x * idem[static_cast<std::size_t>(j)];
                bool zero = is_zero_matrix(m);
                if (std::labs(i - j) > 1 && !zero) return false;
                if (std::labs(i - j) == 1 && zero) return false;
            }
        return true;
    };
    RepresentationPair std_rep = representation(pa, BasisLabel::parse("d*0*0d"));
    auto e = primitive_idempotents(std_rep.a_rep, pa.theta);
    if (!pattern_holds(e, std_rep.a_star_rep)) return false;

    RepresentationPair dual_rep = representation(pa, BasisLabel::parse("d00*d*"));
    auto e_star = primitive_idempotents(dual_rep.a_star_rep, pa.theta_star);
    return pattern_holds(e_star, dual_rep.a_rep);
}

}  // namespace leosys
