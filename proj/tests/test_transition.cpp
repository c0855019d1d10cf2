#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leosys/families.hpp"
#include "leosys/transition.hpp"
#include "leosys/verify.hpp"

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

}  // namespace

TEST_CASE("labels: parsing and text forms") {
    BasisLabel g = BasisLabel::parse("d*00*d");
    CHECK(g.to_string() == "d*00*d");
    CHECK(BasisLabel::parse("d*,0,0*,d") == g);
    CHECK(BasisLabel::all().size() == 24);
    CHECK_THROWS_AS(BasisLabel::parse("d*00*0"), ParseError);  // repeated symbol
    CHECK_THROWS_AS(BasisLabel::parse("d*00*"), ParseError);
    CHECK_THROWS_AS(BasisLabel::parse("x*00*d"), ParseError);
}

TEST_CASE("adjacency classification") {
    BasisLabel g = BasisLabel::parse("d*00*d");
    CHECK(adjacency_type(g, BasisLabel::parse("0d*0*d")) == 1);
    CHECK(adjacency_type(g, BasisLabel::parse("d*0*0d")) == 2);
    CHECK(adjacency_type(g, BasisLabel::parse("d*0d0*")) == 3);
    CHECK(!adjacency_type(g, BasisLabel::parse("0*d*d0")).has_value());
    CHECK(!adjacency_type(g, g).has_value());
}

TEST_CASE("diagonal transition entries, krawtchouk d=3") {
    // From the split basis to its 1-adjacent neighbour with unit epsilons:
    // diag(phi, phi/varphi_1, phi/(varphi_1 varphi_2), 1) with phi = -288.
    ParameterArray pa = krawtchouk3();
    EpsilonConfig ones = EpsilonConfig::ones(kQ);
    MatrixF t = transition_adjacent(pa, ones, BasisLabel::parse("d*00*d"),
                                    BasisLabel::parse("0d*0*d"));
    CHECK(is_diagonal(t));
    CHECK(t(0, 0) == parse_element("-288", kQ));
    CHECK(t(1, 1) == parse_element("48", kQ));
    CHECK(t(2, 2) == parse_element("-6", kQ));
    CHECK(t(3, 3) == parse_element("1", kQ));
}

TEST_CASE("lower transition from the standard basis is the difference-product matrix") {
    ParameterArray pa = krawtchouk3();
    EpsilonConfig ones = EpsilonConfig::ones(kQ);
    MatrixF t = transition_adjacent(pa, ones, BasisLabel::parse("d*0*0d"),
                                    BasisLabel::parse("d*00*d"));
    for (long i = 0; i <= 3; ++i)
        for (long j = 0; j <= i; ++j) {
            FieldElement expect(1);
            for (long k = 0; k < j; ++k)
                expect = expect * (pa.theta[static_cast<std::size_t>(i)] -
                                   pa.theta[static_cast<std::size_t>(k)]);
            CHECK(t(i, j) == expect);
        }
}

TEST_CASE("3-adjacent transitions give the inversion matrix") {
    ParameterArray pa = krawtchouk3();
    EpsilonConfig ones = EpsilonConfig::ones(kQ);
    MatrixF z = inversion_matrix(3);
    CHECK(is_zero_matrix(MatrixF(z * z) - MatrixF::Identity(4, 4)));
    for (const auto& g : BasisLabel::all())
        CHECK(is_zero_matrix(transition_adjacent(pa, ones, g, g.swapped(2)) - z));
    CHECK_THROWS_AS(
        transition_adjacent(pa, ones, BasisLabel::parse("d*00*d"), BasisLabel::parse("0*d*d0")),
        Error);
}

TEST_CASE("adjacent transitions are mutually inverse intertwiners") {
    for (const ParameterArray& pa : {krawtchouk3(), q_racah_array(qracah_fixture()),
                                     krawtchouk_array(4, FieldDescriptor::parse("GF(101)"))}) {
        EpsilonConfig ones = EpsilonConfig::ones(pa.field);
        const Index n = pa.d + 1;
        for (const auto& g : BasisLabel::all())
            for (int pos = 0; pos < 3; ++pos) {
                BasisLabel h = g.swapped(pos);
                MatrixF fwd = transition_adjacent(pa, ones, g, h);
                MatrixF bwd = transition_adjacent(pa, ones, h, g);
                CHECK(is_zero_matrix(MatrixF(fwd * bwd) - MatrixF::Identity(n, n)));
                CHECK(verify_intertwiner(representation(pa, g), representation(pa, h), fwd));
            }
    }
}

TEST_CASE("transition shapes follow the adjacency type") {
    ParameterArray pa = q_racah_array(qracah_fixture());
    EpsilonConfig ones = EpsilonConfig::ones(kQ);
    for (const auto& g : BasisLabel::all()) {
        CHECK(is_diagonal(transition_adjacent(pa, ones, g, g.swapped(0))));
        MatrixF lower = transition_adjacent(pa, ones, g, g.swapped(1));
        for (long i = 0; i <= pa.d; ++i)
            for (long j = i + 1; j <= pa.d; ++j) CHECK(lower(i, j).is_zero());
    }
}

TEST_CASE("intertwiner rejects zero and generic non-intertwiners") {
    ParameterArray pa = krawtchouk3();
    BasisLabel g = BasisLabel::parse("d*00*d"), h = BasisLabel::parse("0d*0*d");
    MatrixF zero = MatrixF::Zero(4, 4);
    CHECK_FALSE(verify_intertwiner(representation(pa, g), representation(pa, h), zero));
    CHECK_FALSE(verify_intertwiner(representation(pa, g), representation(pa, h),
                                   MatrixF::Identity(4, 4)));
}

TEST_CASE("walk weights") {
    ParameterArray pa = krawtchouk3();
    EpsilonConfig ones = EpsilonConfig::ones(kQ);
    SUBCASE("single-vertex walk is the identity") {
        Walk w{{BasisLabel::parse("d*00*d")}};
        CHECK(is_zero_matrix(walk_weight(pa, ones, w) - MatrixF::Identity(4, 4)));
    }
    SUBCASE("broken adjacency is rejected") {
        Walk w{{BasisLabel::parse("d*00*d"), BasisLabel::parse("0*d*d0")}};
        CHECK_THROWS_AS(walk_weight(pa, ones, w), Error);
    }
    SUBCASE("closed walks compose to the identity") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            BasisLabel start = BasisLabel::all()[rng() % 24];
            Walk out{{start}};
            for (int step = 0; step < 5; ++step)
                out.vertices.push_back(out.vertices.back().swapped(static_cast<int>(rng() % 3)));
            Walk back = shortest_path(out.vertices.back(), start);
            out.vertices.insert(out.vertices.end(), back.vertices.begin() + 1,
                                back.vertices.end());
            CHECK(is_zero_matrix(walk_weight(pa, ones, out) - MatrixF::Identity(4, 4)));
        }
    }
}

TEST_CASE("transition between arbitrary bases") {
    ParameterArray pa = q_racah_array(qracah_fixture());
    EpsilonConfig ones = EpsilonConfig::ones(kQ);
    const Index n = pa.d + 1;
    BasisLabel g = BasisLabel::parse("d*0*0d");
    SUBCASE("identity on equal labels") {
        CHECK(is_zero_matrix(transition_any(pa, ones, g, g) - MatrixF::Identity(n, n)));
    }
    SUBCASE("matches adjacent closed form on length-1 paths") {
        BasisLabel h = g.swapped(1);
        CHECK(is_zero_matrix(transition_any(pa, ones, g, h) -
                             transition_adjacent(pa, ones, g, h)));
    }
    SUBCASE("path independence for distant pairs") {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 10; ++trial) {
            BasisLabel from = BasisLabel::all()[rng() % 24];
            BasisLabel to = BasisLabel::all()[rng() % 24];
            MatrixF direct = transition_any(pa, ones, from, to);
            Walk detour{{from}};
            for (int step = 0; step < 4; ++step)
                detour.vertices.push_back(
                    detour.vertices.back().swapped(static_cast<int>(rng() % 3)));
            Walk tail = shortest_path(detour.vertices.back(), to);
            detour.vertices.insert(detour.vertices.end(), tail.vertices.begin() + 1,
                                   tail.vertices.end());
            CHECK(is_zero_matrix(direct - walk_weight(pa, ones, detour)));
        }
    }
}

TEST_CASE("epsilon covariance follows the seed-ratio law") {
    ParameterArray pa = q_racah_array(qracah_fixture());
    EpsilonConfig ones = EpsilonConfig::ones(kQ);
    EpsilonConfig other{parse_element("2", kQ), parse_element("3", kQ), parse_element("5", kQ),
                        parse_element("7", kQ)};
    for (const auto& g : BasisLabel::all())
        for (int pos = 0; pos < 3; ++pos) {
            BasisLabel h = g.swapped(pos);
            MatrixF base = transition_adjacent(pa, ones, g, h);
            MatrixF moved = transition_adjacent(pa, other, g, h);
            FieldElement ratio = pos == 0 ? seed_epsilon(other, h) / seed_epsilon(other, g)
                                          : FieldElement(1);
            CHECK(is_zero_matrix(moved - ratio * base));
        }
    CHECK_THROWS_AS(
        transition_adjacent(pa, EpsilonConfig{FieldElement(0), FieldElement(1), FieldElement(1),
                                              FieldElement(1)},
                            BasisLabel::parse("d*00*d"), BasisLabel::parse("0d*0*d")),
        Error);
}

TEST_CASE("walks parse from comma-separated labels") {
    Walk w = parse_walk("d*0*0d,d*00*d,0d*0*d");
    CHECK(w.vertices.size() == 3);
    CHECK(w.vertices[1] == BasisLabel::parse("d*00*d"));
    CHECK_THROWS_AS(parse_walk(""), ParseError);
}
