#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leosys/bracket.hpp"

using namespace leosys;

namespace {

FieldElement rat(long num, long den = 1) {
    return FieldElement::from_rational(mpq_class(num, den));
}

// Independent oracle: for a rational q, [n]_q as the explicit power sum
//   n odd:  q^{(n-1)/2} + q^{(n-3)/2} + ... + q^{(1-n)/2}   (n terms)
//   n even: q^{n/2-1}   + q^{n/2-3}   + ... + q^{1-n/2}     (n/2 terms)
// extended to negative n by antisymmetry. Never touches the recurrence.
FieldElement bracket_power_sum(long n, const FieldElement& q) {
    if (n < 0) return -bracket_power_sum(-n, q);
    FieldElement sum(0);
    if (n % 2 == 1) {
        for (long e = (n - 1) / 2; e >= (1 - n) / 2; --e) sum = sum + pow_int(q, e);
    } else {
        for (long e = n / 2 - 1; e >= 1 - n / 2; e -= 2) sum = sum + pow_int(q, e);
    }
    return sum;
}

Beta beta_of(const FieldElement& q) { return Beta{q + FieldElement(1) / q}; }

}  // namespace

TEST_CASE("recurrence values match the power-sum oracle") {
    for (long qn : {2, 3, -2, 5}) {
        for (long qd : {1, 3, 7}) {
            if (qn % qd == 0 && qd != 1) continue;
            FieldElement q = rat(qn, qd);
            Beta beta = beta_of(q);
            for (long n = -21; n <= 21; ++n)
                CHECK(bracket(n, beta) == bracket_power_sum(n, q));
        }
    }
}

TEST_CASE("frozen bracket values") {
    FieldElement b = rat(5, 7);  // generic beta
    Beta beta{b};
    CHECK(bracket(0, beta) == FieldElement(0));
    CHECK(bracket(1, beta) == FieldElement(1));
    CHECK(bracket(2, beta) == FieldElement(1));
    CHECK(bracket(3, beta) == b + FieldElement(1));
    CHECK(bracket(4, beta) == b);
    CHECK(bracket(5, beta) == b * b + b - FieldElement(1));
}

TEST_CASE("recurrence and antisymmetry as properties") {
    Beta beta{rat(9, 4)};
    long d = 10;
    for (long n = -2 * d; n <= 2 * d; ++n) {
        CHECK(beta.value * bracket(n, beta) == bracket(n + 2, beta) + bracket(n - 2, beta));
        CHECK(bracket(-n, beta) == -bracket(n, beta));
    }
}

TEST_CASE("bracket factorial") {
    Beta beta{rat(5, 7)};
    CHECK(bracket_factorial(0, beta) == FieldElement(1));
    CHECK(bracket_factorial(3, beta) == beta.value + FieldElement(1));
    Beta two{rat(2)};
    CHECK(bracket_factorial(4, two) == rat(6));  // 1*1*3*2
}

TEST_CASE("triple bracket special values") {
    Beta two{rat(2)};
    CHECK(triple_bracket(0, 5, 7, std::nullopt) == FieldElement(1));
    CHECK(triple_bracket(0, 5, 7, two) == FieldElement(1));
    CHECK(triple_bracket(1, 1, 1, two) == rat(4, 3));
    CHECK(triple_bracket(1, 1, 1, Beta{rat(-2)}) == FieldElement(0));
    CHECK(triple_bracket(1, 1, 2, two) == rat(3, 2));
    CHECK_THROWS_AS(triple_bracket(1, 1, 1, std::nullopt), Error);
}

TEST_CASE("triple bracket factorial form at q = 1") {
    // At beta = 2 (q = 1) the triple bracket equals
    // (r+s)!(r+t)!(s+t)! / (r! s! t! (r+s+t)!).
    Beta two{rat(2)};
    auto factorial = [](long n) {
        mpz_class acc = 1;
        for (long k = 2; k <= n; ++k) acc *= k;
        return acc;
    };
    for (long r = 0; r <= 6; ++r)
        for (long s = 0; s <= 6; ++s)
            for (long t = 0; t <= 6; ++t) {
                mpq_class expect(factorial(r + s) * factorial(r + t) * factorial(s + t),
                                 factorial(r) * factorial(s) * factorial(t) *
                                     factorial(r + s + t));
                CHECK(triple_bracket(r, s, t, two) == FieldElement::from_rational(expect));
            }
}

TEST_CASE("triple bracket identity") {
    // [r−t]·[r+t]⁻¹·[r,s−1,t] = [r−1,s,t] − [r,s,t−1] for positive r,s,t.
    Beta beta{rat(5, 2)};  // q = 2
    for (long r = 1; r <= 6; ++r)
        for (long s = 1; s <= 6; ++s)
            for (long t = 1; t <= 6; ++t) {
                if (r + s + t > 8) continue;
                FieldElement lhs = bracket(r - t, beta) / bracket(r + t, beta) *
                                   triple_bracket(r, s - 1, t, beta);
                FieldElement rhs =
                    triple_bracket(r - 1, s, t, beta) - triple_bracket(r, s, t - 1, beta);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("zero bracket detection") {
    FieldDescriptor gf3 = FieldDescriptor::parse("GF(3)");
    Beta beta_gf3{FieldElement::in_field(2, gf3)};
    CHECK(check_brackets_nonzero(10, Beta{rat(2)}));
    CHECK_FALSE(check_brackets_nonzero(4, beta_gf3));  // [3] = 3 = 0 in GF(3)
    CHECK(check_brackets_nonzero(0, Beta{rat(0)}));
    CHECK_THROWS_AS(triple_bracket(1, 1, 1, beta_gf3), ZeroBracketError);
}

TEST_CASE("characteristic 2 bracket sequence") {
    FieldDescriptor gf2 = FieldDescriptor::parse("GF(2)");
    Beta beta{FieldElement::in_field(2, gf2)};  // q = 1, beta = 2 = 0
    std::vector<int> expect{1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0};
    for (std::size_t i = 0; i < expect.size(); ++i)
        CHECK(bracket(static_cast<long>(i) + 1, beta) ==
              FieldElement::in_field(expect[i], gf2));
}

TEST_CASE("beta extraction from sequences") {
    // theta_i = d - 2i with d = 5.
    RecurrentSequence lin;
    for (long i = 0; i <= 5; ++i) lin.entries.push_back(rat(5 - 2 * i));
    auto beta = beta_from_sequence(lin);
    REQUIRE(beta.has_value());
    CHECK(beta->value == rat(2));

    // q-Racah eigenvalues with rational q give beta = q + 1/q.
    FieldElement q = rat(2), s = rat(3), h = rat(1);
    RecurrentSequence qr;
    for (long i = 0; i <= 5; ++i) {
        FieldElement qi = pow_int(q, i);
        qr.entries.push_back(h * (FieldElement(1) - qi) * (FieldElement(1) - s * qi * q) / qi);
    }
    auto beta_qr = beta_from_sequence(qr);
    REQUIRE(beta_qr.has_value());
    CHECK(beta_qr->value == q + FieldElement(1) / q);

    RecurrentSequence small{{rat(0), rat(1), rat(2)}};
    CHECK(!beta_from_sequence(small).has_value());

    RecurrentSequence broken{{rat(0), rat(1), rat(2), rat(3), rat(100), rat(5)}};
    CHECK_THROWS_AS(beta_from_sequence(broken), Error);
    RecurrentSequence repeated{{rat(0), rat(1), rat(1), rat(2), rat(3), rat(4)}};
    CHECK_THROWS_AS(beta_from_sequence(repeated), Error);
}

TEST_CASE("cross ratio identity") {
    SUBCASE("trivial and hand-checked quadruples") {
        RecurrentSequence lin;
        for (long i = 0; i <= 4; ++i) lin.entries.push_back(rat(4 - 2 * i));
        CHECK(cross_ratio_identity_check(lin, Beta{rat(2)}));
        Beta two{rat(2)};
        CHECK(bracket(-2, two) * (lin.entries[0] - lin.entries[4]) ==
              bracket(-4, two) * (lin.entries[1] - lin.entries[3]));
    }
    SUBCASE("exhaustive on q-Racah eigenvalues up to d = 5") {
        FieldElement q = rat(2), s = rat(3);
        for (long d = 3; d <= 5; ++d) {
            RecurrentSequence seq;
            for (long i = 0; i <= d; ++i) {
                FieldElement qi = pow_int(q, i);
                seq.entries.push_back((FieldElement(1) - qi) *
                                      (FieldElement(1) - s * qi * q) / qi);
            }
            CHECK(cross_ratio_identity_check(seq, Beta{q + FieldElement(1) / q}));
        }
    }
    SUBCASE("detects a broken sequence") {
        RecurrentSequence bad{{rat(0), rat(1), rat(3), rat(9), rat(11)}};
        CHECK_FALSE(cross_ratio_identity_check(bad, Beta{rat(2)}));
    }
}
