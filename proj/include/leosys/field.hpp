#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace leosys {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class FieldMismatchError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Raised when exact elimination meets a singular matrix.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

enum class FieldKind { Rationals, PrimeField };

/// Identifies the coefficient field: the rationals, or GF(p) for a prime p.
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rationals;
    mpz_class modulus = 0;  // positive prime; meaningful for PrimeField only

    static FieldDescriptor rationals();
    static FieldDescriptor prime_field(mpz_class p);

    /// Parses the header grammar `Q` or `GF(p)`.
    static FieldDescriptor parse(const std::string& text);

    bool operator==(const FieldDescriptor& other) const;
    bool operator!=(const FieldDescriptor& other) const { return !(*this == other); }

    std::string to_string() const;
};

/// 0 for the rationals, p for GF(p).
mpz_class characteristic(const FieldDescriptor& desc);

/// An exact scalar in a fixed field, kept in canonical form: a reduced
/// fraction with positive denominator over the rationals, or a residue in
/// [0, p) over GF(p).
///
/// Elements built from bare integer literals start out unattached to any
/// field and adopt one on first contact with an attached operand. This is
/// what lets generic code (including Eigen's Zero/Identity fills) write
/// `FieldElement(0)` without knowing the field.
class FieldElement {
public:
    FieldElement() = default;  // unattached literal 0
    FieldElement(int n) : value_(n) {}
    FieldElement(long n) : value_(static_cast<signed long>(n)) {}
    FieldElement(const mpz_class& n) : value_(n) {}
    FieldElement(double) = delete;  // no floating point, ever

    /// An attached rational; canonicalizes the input.
    static FieldElement from_rational(mpq_class value);
    /// An attached residue mod desc.modulus; reduces the input into [0, p).
    static FieldElement from_residue(const mpz_class& value, const FieldDescriptor& desc);
    /// An attached copy of an integer in the given field.
    static FieldElement in_field(const mpz_class& n, const FieldDescriptor& desc);
    static FieldElement zero(const FieldDescriptor& desc) { return in_field(0, desc); }
    static FieldElement one(const FieldDescriptor& desc) { return in_field(1, desc); }

    bool is_literal() const { return tag_ == Tag::Literal; }
    /// Field of an attached element; throws FieldMismatchError on a literal.
    FieldDescriptor descriptor() const;

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }

    /// Multiplicative inverse; DivisionByZeroError on zero.
    FieldElement inverse() const;

    FieldElement operator-() const;
    friend FieldElement operator+(FieldElement a, const FieldElement& b);
    friend FieldElement operator-(FieldElement a, const FieldElement& b);
    friend FieldElement operator*(FieldElement a, const FieldElement& b);
    friend FieldElement operator/(FieldElement a, const FieldElement& b);
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Exact text form: `a` or `a/b` over the rationals, residue over GF(p).
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const FieldElement& x);

    /// Underlying rational value (residue/1 for prime fields).
    const mpq_class& raw() const { return value_; }

private:
    enum class Tag { Literal, Rational, Residue };

    Tag tag_ = Tag::Literal;
    mpq_class value_ = 0;   // canonical
    mpz_class modulus_ = 0; // Residue only

    // Puts both operands in a common field, attaching literals as needed.
    static void unify(FieldElement& a, FieldElement& b);
    void attach_to(const FieldElement& other);
    void reduce_mod();
};

/// Grammar: `INT` or `INT/INT` over the rationals; `INT` over GF(p),
/// reduced into [0, p).
FieldElement parse_element(const std::string& text, const FieldDescriptor& desc);

FieldElement invert(const FieldElement& x);

/// base^e with e any integer (negative exponents invert).
FieldElement pow_int(const FieldElement& base, long e);

}  // namespace leosys
