#include "leosys/field.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace leosys {

FieldDescriptor FieldDescriptor::rationals() { return FieldDescriptor{FieldKind::Rationals, 0}; }

FieldDescriptor FieldDescriptor::prime_field(mpz_class p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw ParseError("GF modulus must be prime, got " + p.get_str());
    return FieldDescriptor{FieldKind::PrimeField, std::move(p)};
}

FieldDescriptor FieldDescriptor::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "Q") return rationals();
    if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
        std::string digits = s.substr(3, s.size() - 4);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad field spec: " + text);
        return prime_field(mpz_class(digits));
    }
    throw ParseError("bad field spec: " + text + " (expected Q or GF(p))");
}

bool FieldDescriptor::operator==(const FieldDescriptor& other) const {
    if (kind != other.kind) return false;
    return kind == FieldKind::Rationals || modulus == other.modulus;
}

std::string FieldDescriptor::to_string() const {
    return kind == FieldKind::Rationals ? "Q" : "GF(" + modulus.get_str() + ")";
}

mpz_class characteristic(const FieldDescriptor& desc) {
    return desc.kind == FieldKind::Rationals ? mpz_class(0) : desc.modulus;
}

FieldElement FieldElement::from_rational(mpq_class value) {
    value.canonicalize();
    FieldElement x;
    x.tag_ = Tag::Rational;
    x.value_ = std::move(value);
    return x;
}

FieldElement FieldElement::from_residue(const mpz_class& value, const FieldDescriptor& desc) {
    if (desc.kind != FieldKind::PrimeField)
        throw FieldMismatchError("from_residue requires a prime field");
    FieldElement x;
    x.tag_ = Tag::Residue;
    x.modulus_ = desc.modulus;
    mpz_class r = value % x.modulus_;
    if (r < 0) r += x.modulus_;
    x.value_ = mpq_class(r);
    return x;
}

FieldElement FieldElement::in_field(const mpz_class& n, const FieldDescriptor& desc) {
    if (desc.kind == FieldKind::PrimeField) return from_residue(n, desc);
    return from_rational(mpq_class(n));
}

FieldDescriptor FieldElement::descriptor() const {
    switch (tag_) {
        case Tag::Rational: return FieldDescriptor::rationals();
        case Tag::Residue: return FieldDescriptor{FieldKind::PrimeField, modulus_};
        case Tag::Literal: break;
    }
    throw FieldMismatchError("unattached literal has no field descriptor");
}

void FieldElement::reduce_mod() {
    mpz_class r = value_.get_num() % modulus_;
    if (r < 0) r += modulus_;
    value_ = mpq_class(r);
}

void FieldElement::attach_to(const FieldElement& other) {
    if (other.tag_ == Tag::Rational) {
        tag_ = Tag::Rational;
        return;
    }
    // Reduce an integer (or literal fraction) into GF(p).
    tag_ = Tag::Residue;
    modulus_ = other.modulus_;
    mpz_class num = value_.get_num() % modulus_;
    if (num < 0) num += modulus_;
    if (value_.get_den() == 1) {
        value_ = mpq_class(num);
        return;
    }
    mpz_class den = value_.get_den() % modulus_;
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t()) == 0)
        throw DivisionByZeroError("literal denominator vanishes in GF(" + modulus_.get_str() + ")");
    value_ = mpq_class(mpz_class(num * den_inv % modulus_));
}

void FieldElement::unify(FieldElement& a, FieldElement& b) {
    if (a.tag_ == b.tag_) {
        if (a.tag_ == Tag::Residue && a.modulus_ != b.modulus_)
            throw FieldMismatchError("mixing GF(" + a.modulus_.get_str() + ") with GF(" +
                                     b.modulus_.get_str() + ")");
        return;
    }
    if (a.tag_ == Tag::Literal) {
        a.attach_to(b);
        return;
    }
    if (b.tag_ == Tag::Literal) {
        b.attach_to(a);
        return;
    }
    throw FieldMismatchError("mixing rational and GF(p) elements");
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    FieldElement x = *this;
    if (tag_ == Tag::Residue) {
        mpz_class inv;
        mpz_class r = value_.get_num();
        mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), modulus_.get_mpz_t());
        x.value_ = mpq_class(inv);
    } else {
        x.value_ = mpq_class(1) / value_;
    }
    return x;
}

FieldElement FieldElement::operator-() const {
    FieldElement x = *this;
    x.value_ = -x.value_;
    if (x.tag_ == Tag::Residue) x.reduce_mod();
    return x;
}

FieldElement operator+(FieldElement a, const FieldElement& bin) {
    FieldElement b = bin;
    FieldElement::unify(a, b);
    a.value_ += b.value_;
    if (a.tag_ == FieldElement::Tag::Residue) a.reduce_mod();
    return a;
}

FieldElement operator-(FieldElement a, const FieldElement& bin) {
    FieldElement b = bin;
    FieldElement::unify(a, b);
    a.value_ -= b.value_;
    if (a.tag_ == FieldElement::Tag::Residue) a.reduce_mod();
    return a;
}

FieldElement operator*(FieldElement a, const FieldElement& bin) {
    FieldElement b = bin;
    FieldElement::unify(a, b);
    a.value_ *= b.value_;
    if (a.tag_ == FieldElement::Tag::Residue) a.reduce_mod();
    return a;
}

FieldElement operator/(FieldElement a, const FieldElement& bin) {
    FieldElement b = bin;
    FieldElement::unify(a, b);
    return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    FieldElement x = a, y = b;
    FieldElement::unify(x, y);
    return x.value_ == y.value_;
}

std::string FieldElement::to_string() const {
    if (tag_ == Tag::Rational || tag_ == Tag::Literal) {
        if (value_.get_den() == 1) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }
    return value_.get_num().get_str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

namespace {

bool is_integer_token(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// GMP's string constructor rejects a leading '+'.
mpz_class to_mpz(const std::string& s) { return mpz_class(s[0] == '+' ? s.substr(1) : s); }

}  // namespace

FieldElement parse_element(const std::string& text, const FieldDescriptor& desc) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty element");

    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(s)) throw ParseError("bad element: " + text);
        return FieldElement::in_field(to_mpz(s), desc);
    }
    if (desc.kind == FieldKind::PrimeField)
        throw ParseError("fractions are not valid GF(p) element syntax: " + text);
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("bad element: " + text);
    mpz_class d = to_mpz(den);
    if (d == 0) throw ParseError("zero denominator: " + text);
    return FieldElement::from_rational(mpq_class(to_mpz(num), d));
}

FieldElement invert(const FieldElement& x) { return x.inverse(); }

FieldElement pow_int(const FieldElement& base, long e) {
    if (e < 0) return pow_int(base.inverse(), -e);
    FieldElement acc(1), b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

}  // namespace leosys
