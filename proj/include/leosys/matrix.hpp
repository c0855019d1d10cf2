#pragma once

#include <Eigen/Core>

#include <string>

#include "leosys/field.hpp"

namespace Eigen {

template <>
struct NumTraits<leosys::FieldElement> : GenericNumTraits<leosys::FieldElement> {
    typedef leosys::FieldElement Real;
    typedef leosys::FieldElement NonInteger;
    typedef leosys::FieldElement Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 120
    };
    static inline Real epsilon() { return leosys::FieldElement(0); }
    static inline Real dummy_precision() { return leosys::FieldElement(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace leosys {

using MatrixF = Eigen::Matrix<FieldElement, Eigen::Dynamic, Eigen::Dynamic>;
using VectorF = Eigen::Matrix<FieldElement, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

bool is_zero_matrix(const MatrixF& m);
bool is_diagonal(const MatrixF& m);
bool is_lower_bidiagonal(const MatrixF& m);
bool is_upper_bidiagonal(const MatrixF& m);
bool is_tridiagonal(const MatrixF& m);

/// Tridiagonal with every entry immediately above and below the main
/// diagonal nonzero.
bool is_irreducible_tridiagonal(const MatrixF& m);

/// Row reduction over the exact field; any nonzero pivot is a valid pivot.
Index rank_exact(MatrixF m);

MatrixF inverse_exact(const MatrixF& m);

/// Solves a x = b for each column of b. Throws SingularMatrixError.
MatrixF solve_exact(const MatrixF& a, const MatrixF& b);

/// Columns form a basis of the null space (possibly 0 columns).
MatrixF kernel_basis(MatrixF m);

/// Basis of the intersection of the column spans of a and b.
MatrixF intersect_spans(const MatrixF& a, const MatrixF& b);

/// rank [a | b] — used for span-equality and trivial-intersection tests.
Index rank_of_union(const MatrixF& a, const MatrixF& b);

/// True when the column spans coincide.
bool same_span(const MatrixF& a, const MatrixF& b);

/// True when v lies in the column span of a.
bool in_span(const MatrixF& a, const VectorF& v);

/// Row-per-line, space-separated exact entries; `aligned` pads columns.
std::string format_matrix(const MatrixF& m, bool aligned = false);

}  // namespace leosys
