#include "leosys/verify.hpp"

#include <algorithm>
#include <random>

#include "leosys/askey.hpp"

namespace leosys {

FieldElement seed_epsilon(const EpsilonConfig& eps, const BasisLabel& g) {
    switch (g[0]) {
        case Symbol::DStar: return eps.eps0_star;
        case Symbol::Zero: return eps.epsd;
        case Symbol::D: return eps.eps0;
        case Symbol::ZeroStar: return eps.epsd_star;
    }
    throw Error("unreachable symbol");
}

namespace {

class Suite {
public:
    Suite(const ParameterArray& pa, const VerifyOptions& opts) : pa_(pa), opts_(opts) {}

    std::vector<CheckResult> run() {
        ValidationReport report = validate(pa_);
        add("validate", pa_.field.to_string() + " d=" + std::to_string(pa_.d), report.valid);
        if (!report.valid) return results_;  // nothing downstream is defined

        closed_form_checks();
        if (opts_.deep && pa_.d <= opts_.max_d) oracle_checks();
        return results_;
    }

private:
    const ParameterArray& pa_;
    const VerifyOptions& opts_;
    std::vector<CheckResult> results_;

    void add(const std::string& name, const std::string& labels, bool pass) {
        results_.push_back({name, labels, pass});
    }

    // Wraps a check body so an exception becomes a FAIL, not an abort.
    template <typename F>
    void guarded(const std::string& name, const std::string& labels, F&& body) {
        bool pass = false;
        std::string extra;
        try {
            pass = body();
        } catch (const std::exception& e) {
            extra = std::string(" (") + e.what() + ")";
        }
        add(name, labels + extra, pass);
    }

    void closed_form_checks() {
        const long d = pa_.d;
        const Index n = d + 1;
        EpsilonConfig ones = EpsilonConfig::ones(pa_.field);

        // Representation shapes and the 4/8/8/4 census.
        int census[4] = {0, 0, 0, 0};
        bool shapes_ok = true;
        std::vector<RepresentationPair> reps;
        for (const auto& g : BasisLabel::all()) {
            reps.push_back(representation(pa_, g));
            bool ok = matches_expected_shape(reps.back());
            shapes_ok = shapes_ok && ok;
            census[static_cast<int>(expected_shape(g))]++;
            add("shape", g.to_string(), ok);
        }
        add("shape-census", "4/8/8/4",
            shapes_ok && census[0] == 4 && census[1] == 8 && census[2] == 8 && census[3] == 4);

        // Spectral data: Π(A^g−θ_iI) = 0 and trace A^g = Σθ_i, dually.
        FieldElement trace_a = FieldElement::zero(pa_.field);
        FieldElement trace_as = FieldElement::zero(pa_.field);
        for (long i = 0; i <= d; ++i) {
            trace_a = trace_a + pa_.theta[static_cast<std::size_t>(i)];
            trace_as = trace_as + pa_.theta_star[static_cast<std::size_t>(i)];
        }
        for (std::size_t k = 0; k < reps.size(); ++k) {
            const auto& rep = reps[k];
            MatrixF pa_prod = MatrixF::Identity(n, n), pas_prod = MatrixF::Identity(n, n);
            for (long i = 0; i <= d; ++i) {
                pa_prod = pa_prod * (rep.a_rep -
                                     pa_.theta[static_cast<std::size_t>(i)] * MatrixF::Identity(n, n));
                pas_prod = pas_prod * (rep.a_star_rep - pa_.theta_star[static_cast<std::size_t>(i)] *
                                                            MatrixF::Identity(n, n));
            }
            bool ok = is_zero_matrix(pa_prod) && is_zero_matrix(pas_prod) &&
                      rep.a_rep.trace() == trace_a && rep.a_star_rep.trace() == trace_as;
            add("spectral", rep.label.to_string(), ok);
        }

        guarded("leonard-conditions", "", [&] { return verify_leonard_conditions(pa_); });

        guarded("local-scalars", "trace identity", [&] {
            auto [a, a_star] = local_scalars(pa_);  // throws if the two forms disagree
            FieldElement sa = FieldElement::zero(pa_.field), sas = sa;
            for (long i = 0; i <= d; ++i) {
                sa = sa + a[static_cast<std::size_t>(i)];
                sas = sas + a_star[static_cast<std::size_t>(i)];
            }
            return sa == trace_a && sas == trace_as;
        });

        // D4 action: involutions, braid relations, validity invariance.
        guarded("d4-roundtrip", "all 8 relatives", [&] {
            for (const auto& g : D4Element::all()) {
                ParameterArray moved = relative(pa_, g);
                if (!validate(moved).valid) return false;
                ParameterArray back = relative(moved, g.inverse());
                if (!(back.theta == pa_.theta && back.theta_star == pa_.theta_star &&
                      back.varphi == pa_.varphi && back.phi == pa_.phi))
                    return false;
            }
            return true;
        });
        guarded("d4-relations", "squares and braids", [&] {
            auto same = [&](const ParameterArray& x, const ParameterArray& y) {
                return x.theta == y.theta && x.theta_star == y.theta_star &&
                       x.varphi == y.varphi && x.phi == y.phi;
            };
            for (const auto& gen : {D4Element::star(), D4Element::down(), D4Element::ddown()})
                if (!same(relative(relative(pa_, gen), gen), pa_)) return false;
            // ⇓* = *↓,  ↓* = *⇓,  ↓⇓ = ⇓↓ applied to the array
            auto chain = [&](std::initializer_list<D4Element> gens) {
                ParameterArray out = pa_;
                for (const auto& g : gens) out = relative(out, g);
                return out;
            };
            return same(chain({D4Element::ddown(), D4Element::star()}),
                        chain({D4Element::star(), D4Element::down()})) &&
                   same(chain({D4Element::down(), D4Element::star()}),
                        chain({D4Element::star(), D4Element::ddown()})) &&
                   same(chain({D4Element::down(), D4Element::ddown()}),
                        chain({D4Element::ddown(), D4Element::down()}));
        });

        guarded("beta-consistency", "theta vs theta*", [&] {
            auto b1 = beta_from_sequence(RecurrentSequence{pa_.theta});
            auto b2 = beta_from_sequence(RecurrentSequence{pa_.theta_star});
            if (!b1 || !b2) return pa_.d <= 2;
            return b1->value == b2->value &&
                   cross_ratio_identity_check(RecurrentSequence{pa_.theta}, *b1) &&
                   cross_ratio_identity_check(RecurrentSequence{pa_.theta_star}, *b1);
        });

        // Tilde operators in the split representation.
        guarded("tilde-identities", "traces, products", [&] {
            TildeOperators t = tilde_operators(pa_, BasisLabel::parse("d*00*d"));
            FieldElement vp = pa_.varphi_product(), ph = pa_.phi_product();
            if (!((t.ed * t.e0_star).trace() == vp)) return false;
            if (!((t.e0 * t.ed_star).trace() == vp)) return false;
            if (!((t.e0 * t.e0_star).trace() == ph)) return false;
            if (!((t.ed * t.ed_star).trace() == ph)) return false;
            auto scaled = [&](const MatrixF& x, const FieldElement& c, const MatrixF& y) {
                return is_zero_matrix(x - c * y);
            };
            if (!scaled(t.e0_star * t.ed * t.e0_star, vp, t.e0_star)) return false;
            if (!scaled(t.ed * t.e0_star * t.ed, vp, t.ed)) return false;
            if (!scaled(t.e0 * t.ed_star * t.e0, vp, t.e0)) return false;
            if (!scaled(t.ed_star * t.e0 * t.ed_star, vp, t.ed_star)) return false;
            if (!scaled(t.e0 * t.e0_star * t.e0, ph, t.e0)) return false;
            if (!scaled(t.e0_star * t.e0 * t.e0_star, ph, t.e0_star)) return false;
            if (!scaled(t.ed * t.ed_star * t.ed, ph, t.ed)) return false;
            if (!scaled(t.ed_star * t.ed * t.ed_star, ph, t.ed_star)) return false;
            // Swap tricks.
            if (!is_zero_matrix(t.ed_star * t.e0 * t.e0_star - t.ed_star * t.ed * t.e0_star))
                return false;
            if (!is_zero_matrix(t.ed * t.e0_star * t.e0 - t.ed * t.ed_star * t.e0)) return false;
            if (!is_zero_matrix(t.e0 * t.e0_star * t.ed - t.e0 * t.ed_star * t.ed)) return false;
            if (!is_zero_matrix(t.e0_star * t.e0 * t.ed_star - t.e0_star * t.ed * t.ed_star))
                return false;
            // Scaling against the primitive idempotents (split form).
            RepresentationPair split = split_matrices(pa_);
            auto e = primitive_idempotents(split.a_rep, pa_.theta);
            auto es = primitive_idempotents(split.a_star_rep, pa_.theta_star);
            auto diffp = [&](const std::vector<FieldElement>& s, long i) {
                FieldElement acc(1);
                for (long k = 0; k <= d; ++k)
                    if (k != i)
                        acc = acc * (s[static_cast<std::size_t>(i)] - s[static_cast<std::size_t>(k)]);
                return acc;
            };
            return scaled(t.e0, diffp(pa_.theta, 0), e[0]) &&
                   scaled(t.ed, diffp(pa_.theta, d), e[static_cast<std::size_t>(d)]) &&
                   scaled(t.e0_star, diffp(pa_.theta_star, 0), es[0]) &&
                   scaled(t.ed_star, diffp(pa_.theta_star, d), es[static_cast<std::size_t>(d)]);
        });

        // Intertwiners and inverses over all 72 ordered adjacent pairs.
        for (const auto& g : BasisLabel::all()) {
            for (int pos = 0; pos < 3; ++pos) {
                BasisLabel h = g.swapped(pos);
                guarded("intertwiner", g.to_string() + "->" + h.to_string(), [&] {
                    MatrixF fwd = transition_adjacent(pa_, ones, g, h);
                    MatrixF bwd = transition_adjacent(pa_, ones, h, g);
                    RepresentationPair rg = representation(pa_, g);
                    RepresentationPair rh = representation(pa_, h);
                    return verify_intertwiner(rg, rh, fwd) &&
                           is_zero_matrix(fwd * bwd - MatrixF::Identity(n, n));
                });
            }
        }

        // Path independence: generator-relation cycles compose to I.
        guarded("cycle-squares", "all edges", [&] {
            for (const auto& g : BasisLabel::all())
                for (int pos = 0; pos < 3; ++pos) {
                    Walk w{{g, g.swapped(pos), g}};
                    if (!is_zero_matrix(walk_weight(pa_, ones, w) - MatrixF::Identity(n, n)))
                        return false;
                }
            return true;
        });
        guarded("cycle-commuting", "(0 2) squares", [&] {
            for (const auto& g : BasisLabel::all()) {
                Walk w{{g, g.swapped(0), g.swapped(0).swapped(2), g.swapped(2), g}};
                if (!is_zero_matrix(walk_weight(pa_, ones, w) - MatrixF::Identity(n, n)))
                    return false;
            }
            return true;
        });
        guarded("cycle-braid", "(01)^3 and (12)^3 hexagons", [&] {
            for (const auto& g : BasisLabel::all())
                for (int a : {0, 1}) {
                    int b = a + 1;
                    Walk w{{g}};
                    BasisLabel cur = g;
                    for (int rep = 0; rep < 3; ++rep) {
                        cur = cur.swapped(a);
                        w.vertices.push_back(cur);
                        cur = cur.swapped(b);
                        w.vertices.push_back(cur);
                    }
                    if (cur != g) return false;
                    if (!is_zero_matrix(walk_weight(pa_, ones, w) - MatrixF::Identity(n, n)))
                        return false;
                }
            return true;
        });
        guarded("random-walk-pairs",
                std::to_string(opts_.random_walk_pairs) + " pairs, seed " +
                    std::to_string(opts_.seed),
                [&] {
                    std::mt19937 rng(opts_.seed);
                    const auto& labels = BasisLabel::all();
                    auto random_walk = [&](const BasisLabel& from, int len) {
                        Walk w{{from}};
                        for (int k = 0; k < len; ++k)
                            w.vertices.push_back(
                                w.vertices.back().swapped(static_cast<int>(rng() % 3)));
                        return w;
                    };
                    for (int trial = 0; trial < opts_.random_walk_pairs; ++trial) {
                        BasisLabel start = labels[rng() % labels.size()];
                        Walk w1 = random_walk(start, static_cast<int>(rng() % 7));
                        Walk w2 = random_walk(start, static_cast<int>(rng() % 7));
                        // Join w2 to w1's endpoint along a shortest path.
                        Walk tail = shortest_path(w2.vertices.back(), w1.vertices.back());
                        w2.vertices.insert(w2.vertices.end(), tail.vertices.begin() + 1,
                                           tail.vertices.end());
                        if (!is_zero_matrix(walk_weight(pa_, ones, w1) -
                                            walk_weight(pa_, ones, w2)))
                            return false;
                    }
                    return true;
                });

        // Epsilon covariance: a change of epsilon rescales each adjacent
        // transition by the ratio of the seed epsilons.
        guarded("epsilon-covariance", "seed-ratio law", [&] {
            auto nonzero_in_field = [&](long v) {
                FieldElement x = FieldElement::in_field(v, pa_.field);
                return x.is_zero() ? FieldElement::one(pa_.field) : x;
            };
            EpsilonConfig other{nonzero_in_field(2), nonzero_in_field(3), nonzero_in_field(5),
                                nonzero_in_field(7)};
            for (const auto& g : BasisLabel::all())
                for (int pos = 0; pos < 3; ++pos) {
                    BasisLabel h = g.swapped(pos);
                    MatrixF base = transition_adjacent(pa_, ones, g, h);
                    MatrixF moved = transition_adjacent(pa_, other, g, h);
                    FieldElement ratio =
                        pos == 0 ? seed_epsilon(other, h) / seed_epsilon(other, g)
                                 : FieldElement::one(pa_.field);
                    if (!is_zero_matrix(moved - ratio * base)) return false;
                }
            return true;
        });

        // Askey data and its identities.
        guarded("askey-inverse", "PP* = nu I, P*P = nu I", [&] {
            AskeyData data = askey_data(pa_);  // factory asserts PP* = nu I
            MatrixF nu_i = MatrixF::Zero(n, n);
            for (long i = 0; i <= d; ++i) nu_i(i, i) = data.nu;
            return is_zero_matrix(data.p_star * data.p - nu_i);
        });
        guarded("askey-orthogonality", "", [&] { return orthogonality_check(pa_); });
        guarded("askey-recurrence", "B*P = PH*, BP* = P*H", [&] { return recurrence_check(pa_); });
        guarded("askey-nu-trace", "nu tr(E0 E*0) = 1", [&] {
            AskeyData data = askey_data(pa_);
            RepresentationPair split = split_matrices(pa_);
            auto e = primitive_idempotents(split.a_rep, pa_.theta);
            auto es = primitive_idempotents(split.a_star_rep, pa_.theta_star);
            return data.nu * (e[0] * es[0]).trace() == FieldElement::one(pa_.field);
        });
        guarded("askey-walk", "P from walk weight", [&] {
            AskeyData data = askey_data(pa_);
            MatrixF w = walk_weight(pa_, implied_epsilon_for_p(pa_), p_walk());
            if (!is_zero_matrix(w - data.p)) return false;
            Walk rev = p_walk();
            std::reverse(rev.vertices.begin(), rev.vertices.end());
            MatrixF ws = walk_weight(pa_, implied_epsilon_for_p_star(pa_), rev);
            return is_zero_matrix(ws - data.p_star);
        });
        guarded("askey-degree", "divided differences", [&] {
            // 𝒫_ij is a polynomial of degree exactly j in θ_i: its order-j
            // divided differences along the θ grid are constant and nonzero
            // (the leading coefficient) and the order-(j+1) ones vanish.
            for (long j = 0; j <= d; ++j) {
                std::vector<FieldElement> level;
                for (long i = 0; i <= d; ++i) level.push_back(p_poly_value(pa_, i, j));
                for (long order = 1; order <= std::min(j + 1, d); ++order) {
                    std::vector<FieldElement> next;
                    for (std::size_t i = 0; i + 1 < level.size(); ++i) {
                        FieldElement den =
                            pa_.theta[i + static_cast<std::size_t>(order)] - pa_.theta[i];
                        next.push_back((level[i + 1] - level[i]) / den);
                    }
                    level = std::move(next);
                }
                if (j < d) {
                    // level now holds the order-(j+1) differences.
                    for (const auto& x : level)
                        if (!x.is_zero()) return false;
                } else {
                    // j = d: level holds the order-d differences; the
                    // leading coefficient must be nonzero.
                    if (level.size() != 1 || level[0].is_zero()) return false;
                }
            }
            // Leading coefficients: order-j differences constant and nonzero.
            for (long j = 0; j < d; ++j) {
                std::vector<FieldElement> level;
                for (long i = 0; i <= d; ++i) level.push_back(p_poly_value(pa_, i, j));
                for (long order = 1; order <= j; ++order) {
                    std::vector<FieldElement> next;
                    for (std::size_t i = 0; i + 1 < level.size(); ++i) {
                        FieldElement den =
                            pa_.theta[i + static_cast<std::size_t>(order)] - pa_.theta[i];
                        next.push_back((level[i + 1] - level[i]) / den);
                    }
                    level = std::move(next);
                }
                for (const auto& x : level)
                    if (!(x == level[0]) || x.is_zero()) return false;
            }
            return true;
        });
    }

    void oracle_checks() {
        const long d = pa_.d;
        EpsilonConfig ones = EpsilonConfig::ones(pa_.field);

        ConcreteModule module;
        try {
            module = build_module(pa_, ones);
            add("oracle-module", "defining relations", true);
        } catch (const std::exception& e) {
            add("oracle-module", std::string("defining relations (") + e.what() + ")", false);
            return;
        }

        bool bases_ok = true;
        for (const auto& g : BasisLabel::all()) {
            try {
                build_basis_direct(module, g);
            } catch (const Error&) {
                bases_ok = false;
            }
        }
        add("oracle-bases", "24 independent bases", bases_ok);

        guarded("oracle-subspaces", "flags, intersections, sums",
                [&] { return verify_subspace_memberships(module); });

        for (const auto& g : BasisLabel::all()) {
            guarded("oracle-representation", g.to_string(), [&] {
                RepresentationPair closed = representation(pa_, g);
                return is_zero_matrix(representation_direct(module, g, false) - closed.a_rep) &&
                       is_zero_matrix(representation_direct(module, g, true) -
                                      closed.a_star_rep);
            });
            for (int pos = 0; pos < 3; ++pos) {
                BasisLabel h = g.swapped(pos);
                guarded("oracle-transition", g.to_string() + "->" + h.to_string(), [&] {
                    ConcreteBasis bg = build_basis_direct(module, g);
                    ConcreteBasis bh = build_basis_direct(module, h);
                    return is_zero_matrix(transition_direct(bg, bh) -
                                          transition_adjacent(pa_, ones, g, h));
                });
            }
        }

        if (d <= 4)
            guarded("oracle-generation", "A^r E*0 A^s basis",
                    [&] { return verify_generation_property(module); });
        guarded("oracle-splitting", "raise/lower/eigenvalue",
                [&] { return verify_splitting_identities(module); });
    }
};

}  // namespace

std::vector<CheckResult> run_verification(const ParameterArray& pa, const VerifyOptions& opts) {
    return Suite(pa, opts).run();
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace leosys
