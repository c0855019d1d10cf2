#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leosys/bracket.hpp"
#include "leosys/field.hpp"

namespace leosys {

/// The classification data of a Leonard system: eigenvalue sequence θ,
/// dual eigenvalue sequence θ*, first split sequence φ and second split
/// sequence ϕ over a common field.
struct ParameterArray {
    long d = 0;
    FieldDescriptor field;
    std::vector<FieldElement> theta;        // θ_0..θ_d
    std::vector<FieldElement> theta_star;   // θ*_0..θ*_d
    std::vector<FieldElement> varphi;       // φ_1..φ_d   (index i-1 holds φ_i)
    std::vector<FieldElement> phi;          // ϕ_1..ϕ_d

    FieldElement varphi_product() const;    // φ = φ_1⋯φ_d
    FieldElement phi_product() const;       // ϕ = ϕ_1⋯ϕ_d

    /// β recovered from the eigenvalue sequence; nullopt when d ≤ 2.
    std::optional<Beta> beta() const;

    void check_lengths() const;  // throws Error on structural mismatch
};

/// Tags for the five classification conditions.
enum class Condition { I, II, III, IV, V };

std::string condition_text(Condition c);

struct Violation {
    Condition condition;
    long index;
    std::string detail;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;

    std::string to_string() const;
};

/// Checks the five classification conditions:
///  (i)   φ_i ≠ 0 and ϕ_i ≠ 0,
///  (ii)  the θ_i are distinct and the θ*_i are distinct,
///  (iii) φ_i = ϕ_1·Σ_{h<i}(θ_h−θ_{d−h})/(θ_0−θ_d) + (θ*_i−θ*_0)(θ_{i−1}−θ_d),
///  (iv)  ϕ_i = φ_1·Σ_{h<i}(θ_h−θ_{d−h})/(θ_0−θ_d) + (θ*_i−θ*_0)(θ_{d−i+1}−θ_0),
///  (v)   (θ_{i−2}−θ_{i+1})/(θ_{i−1}−θ_i) equal for both sequences and
///        constant over 2 ≤ i ≤ d−1.
/// Violations are data, not errors. (iii)–(v) are skipped when (ii) fails
/// badly enough to make them unevaluable.
ValidationReport validate(const ParameterArray& pa);

/// An element of the dihedral group acting on parameter arrays, kept in the
/// normal form ↓^a ⇓^b *^c.
class D4Element {
public:
    constexpr D4Element() = default;
    constexpr D4Element(bool down, bool ddown, bool star)
        : down_(down), ddown_(ddown), star_(star) {}

    static constexpr D4Element identity() { return {}; }
    static constexpr D4Element star() { return {false, false, true}; }
    static constexpr D4Element down() { return {true, false, false}; }
    static constexpr D4Element ddown() { return {false, true, false}; }
    static const std::vector<D4Element>& all();  // the 8 elements

    bool has_down() const { return down_; }
    bool has_ddown() const { return ddown_; }
    bool has_star() const { return star_; }

    /// Group product: (x.compose(y)) acts as x first, then y.
    D4Element compose(const D4Element& then) const;
    D4Element inverse() const;

    bool operator==(const D4Element& o) const = default;
    std::string to_string() const;

private:
    bool down_ = false, ddown_ = false, star_ = false;
};

/// Transformed parameter array of the relative:
///  *  swaps θ and θ*, keeps φ, reverses ϕ;
///  ↓  reverses θ*, replaces (φ, ϕ) by (reversed ϕ, reversed φ);
///  ⇓  reverses θ, swaps φ and ϕ.
ParameterArray relative(const ParameterArray& pa, const D4Element& g);

/// The scalars a_i and a*_i (diagonal data of the tridiagonal
/// representations). Each is given by two expressions which must agree;
/// disagreement signals an invalid array and raises Error.
std::pair<std::vector<FieldElement>, std::vector<FieldElement>> local_scalars(
    const ParameterArray& pa);

/// Line-oriented parameter file:
///   field: Q | GF(p)
///   d: <int>
///   theta: e0 ... ed
///   theta_star: e0 ... ed
///   varphi: e1 ... ed
///   phi: e1 ... ed
/// `#` starts a comment.
ParameterArray read_parameter_file(std::istream& in);
void write_parameter_file(std::ostream& out, const ParameterArray& pa);

}  // namespace leosys
