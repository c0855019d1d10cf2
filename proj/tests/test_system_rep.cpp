#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leosys/families.hpp"
#include "leosys/system_rep.hpp"

using namespace leosys;

namespace {

const FieldDescriptor kQ = FieldDescriptor::rationals();

ParameterArray krawtchouk3() { return krawtchouk_array(3, kQ); }

QRacahParams qracah_fixture() {
    QRacahParams p;
    p.d = 3;
    p.field = kQ;
    p.q = parse_element("2", kQ);
    p.h = parse_element("1", kQ);
    p.h_star = parse_element("1", kQ);
    p.s = parse_element("3", kQ);
    p.s_star = parse_element("5", kQ);
    p.r1 = parse_element("7", kQ);
    p.theta0 = parse_element("0", kQ);
    p.theta_star0 = parse_element("0", kQ);
    return p;
}

MatrixF from_rows(long n, const std::vector<std::vector<const char*>>& rows) {
    MatrixF m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            m(i, j) = parse_element(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                    kQ);
    return m;
}

}  // namespace

TEST_CASE("split matrices for krawtchouk d=3") {
    RepresentationPair rep = split_matrices(krawtchouk3());
    CHECK(is_zero_matrix(rep.a_rep - from_rows(4, {{"3", "0", "0", "0"},
                                                   {"1", "1", "0", "0"},
                                                   {"0", "1", "-1", "0"},
                                                   {"0", "0", "1", "-3"}})));
    CHECK(is_zero_matrix(rep.a_star_rep - from_rows(4, {{"3", "-6", "0", "0"},
                                                        {"0", "1", "-8", "0"},
                                                        {"0", "0", "-1", "-6"},
                                                        {"0", "0", "0", "-3"}})));
}

TEST_CASE("split matrices for d=0") {
    ParameterArray pa;
    pa.d = 0;
    pa.field = kQ;
    pa.theta = {parse_element("4", kQ)};
    pa.theta_star = {parse_element("9", kQ)};
    RepresentationPair rep = split_matrices(pa);
    CHECK(rep.a_rep(0, 0) == pa.theta[0]);
    CHECK(rep.a_star_rep(0, 0) == pa.theta_star[0]);
}

TEST_CASE("inverted split basis matrices") {
    // A has theta_d..theta_0 on the diagonal with unit superdiagonal; A*
    // carries varphi_d..varphi_1 on the subdiagonal.
    ParameterArray pa = krawtchouk3();
    RepresentationPair rep = representation(pa, BasisLabel::parse("d*0d0*"));
    CHECK(is_zero_matrix(rep.a_rep - from_rows(4, {{"-3", "1", "0", "0"},
                                                   {"0", "-1", "1", "0"},
                                                   {"0", "0", "1", "1"},
                                                   {"0", "0", "0", "3"}})));
    CHECK(is_zero_matrix(rep.a_star_rep - from_rows(4, {{"-3", "0", "0", "0"},
                                                        {"-6", "-1", "0", "0"},
                                                        {"0", "-8", "1", "0"},
                                                        {"0", "0", "-6", "3"}})));
}

TEST_CASE("standard basis representation is diagonal with tridiagonal partner") {
    RepresentationPair rep = representation(krawtchouk3(), BasisLabel::parse("d*0*0d"));
    CHECK(is_zero_matrix(rep.a_rep - from_rows(4, {{"3", "0", "0", "0"},
                                                   {"0", "1", "0", "0"},
                                                   {"0", "0", "-1", "0"},
                                                   {"0", "0", "0", "-3"}})));
    CHECK(is_zero_matrix(rep.a_star_rep - from_rows(4, {{"0", "3", "0", "0"},
                                                        {"1", "0", "2", "0"},
                                                        {"0", "2", "0", "1"},
                                                        {"0", "0", "3", "0"}})));
}

TEST_CASE("shape census over all 24 labels") {
    for (const ParameterArray& pa :
         {krawtchouk_array(4, kQ), q_racah_array(qracah_fixture())}) {
        int census[4] = {0, 0, 0, 0};
        for (const auto& g : BasisLabel::all()) {
            RepresentationPair rep = representation(pa, g);
            CHECK(matches_expected_shape(rep));
            census[static_cast<int>(expected_shape(g))]++;
        }
        CHECK(census[0] == 4);
        CHECK(census[1] == 8);
        CHECK(census[2] == 8);
        CHECK(census[3] == 4);
    }
}

TEST_CASE("spectral and trace consistency across representations") {
    ParameterArray pa = q_racah_array(qracah_fixture());
    const Index n = pa.d + 1;
    FieldElement trace_a(0), trace_as(0);
    for (long i = 0; i <= pa.d; ++i) {
        trace_a = trace_a + pa.theta[static_cast<std::size_t>(i)];
        trace_as = trace_as + pa.theta_star[static_cast<std::size_t>(i)];
    }
    for (const auto& g : BasisLabel::all()) {
        RepresentationPair rep = representation(pa, g);
        MatrixF prod_a = MatrixF::Identity(n, n), prod_as = MatrixF::Identity(n, n);
        for (long i = 0; i <= pa.d; ++i) {
            prod_a = prod_a *
                     (rep.a_rep - pa.theta[static_cast<std::size_t>(i)] * MatrixF::Identity(n, n));
            prod_as = prod_as * (rep.a_star_rep -
                                 pa.theta_star[static_cast<std::size_t>(i)] * MatrixF::Identity(n, n));
        }
        CHECK(is_zero_matrix(prod_a));
        CHECK(is_zero_matrix(prod_as));
        CHECK(rep.a_rep.trace() == trace_a);
        CHECK(rep.a_star_rep.trace() == trace_as);
    }
}

TEST_CASE("primitive idempotents") {
    ParameterArray pa = krawtchouk3();
    RepresentationPair rep = representation(pa, BasisLabel::parse("d*0*0d"));
    // The standard-basis A* is irreducible tridiagonal; its
    // idempotents come from the dual eigenvalues.
    auto idem = primitive_idempotents(rep.a_star_rep, pa.theta_star);
    const Index n = 4;
    MatrixF sum = MatrixF::Zero(n, n);
    for (const auto& e : idem) sum = sum + e;
    CHECK(is_zero_matrix(sum - MatrixF::Identity(n, n)));
    for (std::size_t i = 0; i < idem.size(); ++i) {
        CHECK(rank_exact(idem[i]) == 1);
        CHECK(is_zero_matrix(MatrixF(rep.a_star_rep * idem[i]) -
                             pa.theta_star[i] * idem[i]));
        for (std::size_t j = 0; j < idem.size(); ++j) {
            MatrixF prod = idem[i] * idem[j];
            if (i == j)
                CHECK(is_zero_matrix(prod - idem[i]));
            else
                CHECK(is_zero_matrix(prod));
        }
    }
    std::vector<FieldElement> repeated = pa.theta_star;
    repeated[1] = repeated[0];
    CHECK_THROWS_AS(primitive_idempotents(rep.a_star_rep, repeated), Error);
}

TEST_CASE("tilde operators") {
    ParameterArray pa = q_racah_array(qracah_fixture());
    TildeOperators t = tilde_operators(pa, BasisLabel::parse("d*00*d"));
    FieldElement vp = pa.varphi_product(), ph = pa.phi_product();
    CHECK((t.ed * t.e0_star).trace() == vp);
    CHECK((t.e0 * t.ed_star).trace() == vp);
    CHECK((t.e0 * t.e0_star).trace() == ph);
    CHECK((t.ed * t.ed_star).trace() == ph);
    CHECK(is_zero_matrix(t.e0_star * t.ed * t.e0_star - vp * t.e0_star));
    CHECK(is_zero_matrix(t.ed_star * t.e0 * t.e0_star - t.ed_star * t.ed * t.e0_star));
    CHECK(is_zero_matrix(t.ed * t.e0_star * t.e0 - t.ed * t.ed_star * t.e0));

    // Scaling law against the primitive idempotents, split form.
    RepresentationPair split = split_matrices(pa);
    auto e = primitive_idempotents(split.a_rep, pa.theta);
    FieldElement c(1);
    for (long k = 1; k <= pa.d; ++k)
        c = c * (pa.theta[0] - pa.theta[static_cast<std::size_t>(k)]);
    CHECK(is_zero_matrix(t.e0 - c * e[0]));
}

TEST_CASE("defining conditions verified from idempotents") {
    CHECK(verify_leonard_conditions(krawtchouk3()));
    CHECK(verify_leonard_conditions(q_racah_array(qracah_fixture())));
    CHECK(verify_leonard_conditions(krawtchouk_array(4, FieldDescriptor::parse("GF(101)"))));
}

TEST_CASE("matrix shape predicates") {
    MatrixF m = MatrixF::Zero(3, 3);
    CHECK(is_diagonal(m));
    CHECK(is_tridiagonal(m));
    CHECK_FALSE(is_irreducible_tridiagonal(m));
    m(1, 0) = FieldElement(1);
    CHECK(is_lower_bidiagonal(m));
    CHECK_FALSE(is_upper_bidiagonal(m));
    m(0, 1) = FieldElement(2);
    m(2, 1) = FieldElement(3);
    m(1, 2) = FieldElement(4);
    CHECK(is_irreducible_tridiagonal(m));
    m(0, 2) = FieldElement(5);
    CHECK_FALSE(is_tridiagonal(m));
}

TEST_CASE("exact elimination") {
    MatrixF m = from_rows(3, {{"1", "2", "3"}, {"2", "4", "6"}, {"0", "1", "1"}});
    CHECK(rank_exact(m) == 2);
    MatrixF ker = kernel_basis(m);
    CHECK(ker.cols() == 1);
    CHECK(is_zero_matrix(m * ker));
    CHECK_THROWS_AS(inverse_exact(m), SingularMatrixError);

    MatrixF inv = from_rows(3, {{"2", "1", "0"}, {"1", "3", "1"}, {"0", "1", "4"}});
    MatrixF id = inv * inverse_exact(inv);
    CHECK(is_zero_matrix(id - MatrixF::Identity(3, 3)));

    // GF(7): singular detection must use exact zero tests, not magnitude.
    FieldDescriptor gf7 = FieldDescriptor::parse("GF(7)");
    MatrixF g(2, 2);
    g(0, 0) = parse_element("3", gf7);
    g(0, 1) = parse_element("5", gf7);
    g(1, 0) = parse_element("6", gf7);
    g(1, 1) = parse_element("3", gf7);  // det = 9 - 30 = -21 = 0 mod 7
    CHECK(rank_exact(g) == 1);
    CHECK_THROWS_AS(inverse_exact(g), SingularMatrixError);
}
