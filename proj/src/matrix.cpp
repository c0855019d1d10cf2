#include "leosys/matrix.hpp"

#include <sstream>
#include <vector>

namespace leosys {

bool is_zero_matrix(const MatrixF& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

namespace {

// Band test: all entries with lo <= j - i <= hi, everything else zero.
bool within_band(const MatrixF& m, Index lo, Index hi) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if ((j - i < lo || j - i > hi) && !m(i, j).is_zero()) return false;
    return true;
}

}  // namespace

bool is_diagonal(const MatrixF& m) { return within_band(m, 0, 0); }
bool is_lower_bidiagonal(const MatrixF& m) { return within_band(m, -1, 0); }
bool is_upper_bidiagonal(const MatrixF& m) { return within_band(m, 0, 1); }
bool is_tridiagonal(const MatrixF& m) { return within_band(m, -1, 1); }

bool is_irreducible_tridiagonal(const MatrixF& m) {
    if (!is_tridiagonal(m)) return false;
    for (Index i = 0; i + 1 < m.rows(); ++i)
        if (m(i + 1, i).is_zero() || m(i, i + 1).is_zero()) return false;
    return true;
}

namespace {

// In-place elimination to row echelon form. Records pivot columns.
// Reduced form (zeros above pivots, unit pivots) when `reduced`.
std::vector<Index> echelonize(MatrixF& m, bool reduced) {
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index p = -1;
        for (Index r = row; r < m.rows(); ++r)
            if (!m(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row) m.row(p).swap(m.row(row));
        if (reduced) {
            FieldElement inv = m(row, col).inverse();
            for (Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        }
        for (Index r = 0; r < m.rows(); ++r) {
            if (r == row || (!reduced && r < row)) continue;
            if (m(r, col).is_zero()) continue;
            FieldElement f = m(r, col) / m(row, col);
            for (Index j = col; j < m.cols(); ++j) m(r, j) = m(r, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Index rank_exact(MatrixF m) { return static_cast<Index>(echelonize(m, false).size()); }

MatrixF solve_exact(const MatrixF& a, const MatrixF& b) {
    const Index n = a.rows();
    if (a.cols() != n || b.rows() != n) throw Error("solve_exact: dimension mismatch");
    MatrixF aug(n, n + b.cols());
    aug << a, b;
    auto pivots = echelonize(aug, true);
    if (static_cast<Index>(pivots.size()) != n || (n > 0 && pivots.back() >= n))
        throw SingularMatrixError("singular system");
    return aug.rightCols(b.cols());
}

MatrixF inverse_exact(const MatrixF& m) {
    const Index n = m.rows();
    return solve_exact(m, MatrixF::Identity(n, n));
}

MatrixF kernel_basis(MatrixF m) {
    const Index n = m.cols();
    auto pivots = echelonize(m, true);
    std::vector<bool> is_pivot(n, false);
    for (Index c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    Index nfree = n - static_cast<Index>(pivots.size());
    MatrixF basis = MatrixF::Zero(n, nfree);
    Index k = 0;
    for (Index free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        basis(free, k) = FieldElement(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], k) = -m(static_cast<Index>(r), free);
        ++k;
    }
    return basis;
}

MatrixF intersect_spans(const MatrixF& a, const MatrixF& b) {
    if (a.cols() == 0 || b.cols() == 0) return MatrixF::Zero(a.rows(), 0);
    MatrixF joint(a.rows(), a.cols() + b.cols());
    joint << a, -b;
    MatrixF ker = kernel_basis(joint);
    MatrixF inter = a * ker.topRows(a.cols());
    // Prune to an independent spanning subset: pivot columns of the
    // echelon form pick out independent columns of the original.
    MatrixF work = inter;
    auto col_pivots = echelonize(work, false);
    MatrixF out(a.rows(), static_cast<Index>(col_pivots.size()));
    for (std::size_t i = 0; i < col_pivots.size(); ++i)
        out.col(static_cast<Index>(i)) = inter.col(col_pivots[i]);
    return out;
}

Index rank_of_union(const MatrixF& a, const MatrixF& b) {
    MatrixF joint(a.rows(), a.cols() + b.cols());
    joint << a, b;
    return rank_exact(joint);
}

bool same_span(const MatrixF& a, const MatrixF& b) {
    Index ra = rank_exact(a), rb = rank_exact(b);
    return ra == rb && rank_of_union(a, b) == ra;
}

bool in_span(const MatrixF& a, const VectorF& v) {
    return rank_of_union(a, v) == rank_exact(a);
}

std::string format_matrix(const MatrixF& m, bool aligned) {
    std::vector<std::string> cells(static_cast<std::size_t>(m.rows() * m.cols()));
    std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 0);
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) {
            std::string s = m(i, j).to_string();
            width[static_cast<std::size_t>(j)] =
                std::max(width[static_cast<std::size_t>(j)], s.size());
            cells[static_cast<std::size_t>(i * m.cols() + j)] = std::move(s);
        }
    std::ostringstream os;
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            const std::string& s = cells[static_cast<std::size_t>(i * m.cols() + j)];
            if (j > 0) os << ' ';
            if (aligned)
                os << std::string(width[static_cast<std::size_t>(j)] - s.size(), ' ');
            os << s;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace leosys
