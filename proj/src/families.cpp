#include "leosys/families.hpp"

namespace leosys {

FieldElement QRacahParams::r2() const { return s * s_star * pow_int(q, d + 1) / r1; }

void QRacahParams::check_nonzero() const {
    for (const auto* x : {&q, &h, &h_star, &s, &s_star, &r1})
        if (x->is_zero()) throw Error("q-Racah parameters must be nonzero");
}

ParameterArray krawtchouk_array(long d, const FieldDescriptor& field) {
    mpz_class p = characteristic(field);
    if (p != 0 && (p == 2 || p <= d))
        throw Error("krawtchouk family needs characteristic 0 or an odd prime > d, got " +
                    p.get_str());
    ParameterArray pa;
    pa.d = d;
    pa.field = field;
    for (long i = 0; i <= d; ++i) {
        FieldElement v = FieldElement::in_field(d - 2 * i, field);
        pa.theta.push_back(v);
        pa.theta_star.push_back(v);
    }
    for (long i = 1; i <= d; ++i) {
        FieldElement m = FieldElement::in_field(2 * i * (d - i + 1), field);
        pa.varphi.push_back(-m);
        pa.phi.push_back(m);
    }
    ValidationReport report = validate(pa);
    if (!report.valid) throw Error("krawtchouk array failed validation:\n" + report.to_string());
    return pa;
}

ParameterArray q_racah_array(const QRacahParams& p) {
    p.check_nonzero();
    const long d = p.d;
    const FieldElement q = p.q, r1 = p.r1, r2 = p.r2();
    ParameterArray pa;
    pa.d = d;
    pa.field = p.field;
    FieldElement one(1);
    for (long i = 0; i <= d; ++i) {
        FieldElement qi = pow_int(q, i);
        pa.theta.push_back(p.theta0 + p.h * (one - qi) * (one - p.s * qi * q) / qi);
        pa.theta_star.push_back(p.theta_star0 +
                                p.h_star * (one - qi) * (one - p.s_star * qi * q) / qi);
    }
    for (long i = 1; i <= d; ++i) {
        FieldElement qi = pow_int(q, i);
        FieldElement common =
            p.h * p.h_star * pow_int(q, 1 - 2 * i) * (one - qi) * (one - pow_int(q, i - d - 1));
        pa.varphi.push_back(common * (one - r1 * qi) * (one - r2 * qi));
        pa.phi.push_back(common * (r1 - p.s_star * qi) * (r2 - p.s_star * qi) / p.s_star);
    }
    ValidationReport report = validate(pa);
    if (!report.valid) {
        for (const auto& v : report.violations)
            if (v.condition != Condition::I && v.condition != Condition::II)
                throw Error("q-Racah parametrization violated condition (" +
                            condition_text(v.condition) + "): internal error");
        throw Error("q-Racah parameters violate classification conditions:\n" +
                    report.to_string());
    }
    return pa;
}

FieldElement q_shifted_factorial(const FieldElement& a, const FieldElement& q, long n) {
    FieldElement acc(1), one(1);
    for (long k = 0; k < n; ++k) acc = acc * (one - a * pow_int(q, k));
    return acc;
}

bool q_racah_b_matrix_check(const QRacahParams& p) {
    ParameterArray pa = q_racah_array(p);
    const long d = p.d;
    const FieldElement q = p.q, h = p.h, ss = p.s_star, r1 = p.r1, r2 = p.r2();
    const FieldElement one(1);

    auto expected_b = [&](const FieldElement& h_, const FieldElement& ss_,
                          const FieldElement& th0) {
        MatrixF b = MatrixF::Zero(d + 1, d + 1);
        auto sub = [&](long i) {  // B_{i,i-1}
            FieldElement num =
                h_ * (one - pow_int(q, i)) * (one - ss_ * pow_int(q, i + d + 1)) *
                (r1 - ss_ * pow_int(q, i)) * (r2 - ss_ * pow_int(q, i));
            FieldElement den = ss_ * pow_int(q, d) * (one - ss_ * pow_int(q, 2 * i));
            if (i < d) den = den * (one - ss_ * pow_int(q, 2 * i + 1));
            if (i == d)  // B_{d,d-1}: the single-factor denominator form
                num = h_ * (one - pow_int(q, d)) * (r1 - ss_ * pow_int(q, d)) *
                      (r2 - ss_ * pow_int(q, d));
            return num / den;
        };
        auto sup = [&](long i) {  // B_{i-1,i}
            if (i == 1)
                return h_ * (one - pow_int(q, -d)) * (one - r1 * q) * (one - r2 * q) /
                       (one - ss_ * q * q);
            return h_ * (one - pow_int(q, i - d - 1)) * (one - ss_ * pow_int(q, i)) *
                   (one - r1 * pow_int(q, i)) * (one - r2 * pow_int(q, i)) /
                   ((one - ss_ * pow_int(q, 2 * i - 1)) * (one - ss_ * pow_int(q, 2 * i)));
        };
        for (long i = 1; i <= d; ++i) {
            b(i, i - 1) = sub(i);
            b(i - 1, i) = sup(i);
        }
        for (long i = 0; i <= d; ++i) {
            FieldElement diag = th0;
            if (i >= 1) diag = diag - b(i, i - 1);
            if (i <= d - 1) diag = diag - b(i, i + 1);
            b(i, i) = diag;
        }
        return b;
    };

    MatrixF b_have = representation(pa, BasisLabel::parse("d00*d*")).a_rep;
    if (!is_zero_matrix(b_have - expected_b(h, ss, p.theta0))) return false;
    // B* arises by exchanging (θ_0, h, s) and (θ*_0, h*, s*).
    MatrixF bs_have = representation(pa, BasisLabel::parse("d*0*0d")).a_star_rep;
    return is_zero_matrix(bs_have - expected_b(p.h_star, p.s, p.theta_star0));
}

bool hypergeometric_check(const QRacahParams& p, long i, long j) {
    ParameterArray pa = q_racah_array(p);
    const FieldElement q = p.q, r1 = p.r1, r2 = p.r2();
    FieldElement sum = FieldElement::zero(p.field);
    for (long n = 0; n <= p.d; ++n) {
        FieldElement num = q_shifted_factorial(pow_int(q, -i), q, n) *
                           q_shifted_factorial(p.s * pow_int(q, i + 1), q, n) *
                           q_shifted_factorial(pow_int(q, -j), q, n) *
                           q_shifted_factorial(p.s_star * pow_int(q, j + 1), q, n) *
                           pow_int(q, n);
        FieldElement den = q_shifted_factorial(r1 * q, q, n) *
                           q_shifted_factorial(r2 * q, q, n) *
                           q_shifted_factorial(pow_int(q, -p.d), q, n) *
                           q_shifted_factorial(q, q, n);
        if (den.is_zero()) {
            if (num.is_zero()) break;  // series terminated
            throw Error("hypergeometric series denominator vanished before termination");
        }
        sum = sum + num / den;
    }
    return sum == p_poly_value(pa, i, j);
}

bool krawtchouk_hypergeometric_check(long d, long i, long j) {
    FieldDescriptor field = FieldDescriptor::rationals();
    ParameterArray pa = krawtchouk_array(d, field);
    AskeyData data = askey_data(pa);

    // binom(d, j)
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d),
                 static_cast<unsigned long>(j));

    // (a)_n = a(a+1)...(a+n-1) with integer a
    auto poch = [](long a, long n) {
        mpz_class acc = 1;
        for (long k = 0; k < n; ++k) acc *= (a + k);
        return acc;
    };
    FieldElement sum = FieldElement::zero(field);
    mpz_class two_n = 1, fact = 1;
    for (long n = 0; n <= d; ++n) {
        if (n > 0) {
            two_n *= 2;
            fact *= n;
        }
        mpz_class den_poch = poch(-d, n);
        if (den_poch == 0) break;
        sum = sum + FieldElement::from_rational(
                        mpq_class(poch(-i, n) * poch(-j, n) * two_n, den_poch * fact));
    }
    return data.p(i, j) == FieldElement(binom) * sum;
}

FieldElement q_racah_k(const QRacahParams& p, long j) {
    const FieldElement q = p.q, r1 = p.r1, r2 = p.r2(), s = p.s, ss = p.s_star;
    const FieldElement one(1);
    FieldElement num = q_shifted_factorial(r1 * q, q, j) * q_shifted_factorial(r2 * q, q, j) *
                       q_shifted_factorial(pow_int(q, -p.d), q, j) *
                       q_shifted_factorial(ss * q, q, j) *
                       (one - ss * pow_int(q, 2 * j + 1));
    FieldElement den = pow_int(s, j) * pow_int(q, j) * q_shifted_factorial(q, q, j) *
                       q_shifted_factorial(ss * q / r1, q, j) *
                       q_shifted_factorial(ss * q / r2, q, j) *
                       q_shifted_factorial(ss * pow_int(q, p.d + 2), q, j) * (one - ss * q);
    return num / den;
}

FieldElement q_racah_k_star(const QRacahParams& p, long j) {
    QRacahParams swapped = p;
    std::swap(swapped.s, swapped.s_star);
    return q_racah_k(swapped, j);
}

FieldElement q_racah_nu(const QRacahParams& p) {
    const FieldElement q = p.q, r1 = p.r1;
    FieldElement num = q_shifted_factorial(p.s * q * q, q, p.d) *
                       q_shifted_factorial(p.s_star * q * q, q, p.d);
    FieldElement den = pow_int(r1, p.d) * pow_int(q, p.d) *
                       q_shifted_factorial(p.s * q / r1, q, p.d) *
                       q_shifted_factorial(p.s_star * q / r1, q, p.d);
    return num / den;
}

}  // namespace leosys
