#pragma once

// Exact dense linear algebra over integral domains and fields. Everything here is
// templated on the Eigen scalar; the only requirement is an ExactTraits specialization.

#include "pcsub/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pcsub {

template <typename Scalar>
struct ExactTraits;

template <>
struct ExactTraits<Rational> {
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
    static Rational one() { return Rational(1); }
    static Rational zero() { return Rational(0); }
    // Pivot preference: smaller is better. Rationals have no useful size notion here.
    static long pivot_cost(const Rational&) { return 0; }
};

template <typename Scalar>
struct BareissResult {
    Eigen::Index rank = 0;
    /// Last nonzero pivot: a rank×rank minor of the row/column permuted input.
    Scalar last_pivot = ExactTraits<Scalar>::one();
    std::vector<Eigen::Index> pivot_rows;
    std::vector<Eigen::Index> pivot_cols;
};

/// Fraction-free Gaussian elimination (Bareiss) with full pivoting. Every division is exact,
/// so this runs over any integral domain with exact division, e.g. Q[t].
template <typename Derived>
BareissResult<typename Derived::Scalar> bareiss(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    using Traits = ExactTraits<Scalar>;
    Matrix<Scalar> m = input;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    std::vector<Eigen::Index> row_perm(rows), col_perm(cols);
    for (Eigen::Index i = 0; i < rows; ++i) row_perm[i] = i;
    for (Eigen::Index j = 0; j < cols; ++j) col_perm[j] = j;

    BareissResult<Scalar> result;
    Scalar prev = Traits::one();
    Eigen::Index k = 0;
    for (; k < std::min(rows, cols); ++k) {
        Eigen::Index pr = -1, pc = -1;
        long best = 0;
        for (Eigen::Index j = k; j < cols; ++j) {
            for (Eigen::Index i = k; i < rows; ++i) {
                if (Traits::is_zero(m(i, j))) continue;
                const long cost = Traits::pivot_cost(m(i, j));
                if (pr < 0 || cost < best) {
                    pr = i;
                    pc = j;
                    best = cost;
                }
            }
        }
        if (pr < 0) break;
        if (pr != k) {
            m.row(pr).swap(m.row(k));
            std::swap(row_perm[pr], row_perm[k]);
        }
        if (pc != k) {
            m.col(pc).swap(m.col(k));
            std::swap(col_perm[pc], col_perm[k]);
        }
        for (Eigen::Index i = k + 1; i < rows; ++i) {
            for (Eigen::Index j = k + 1; j < cols; ++j) {
                m(i, j) = Traits::exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            }
            m(i, k) = Traits::zero();
        }
        prev = m(k, k);
        result.pivot_rows.push_back(row_perm[k]);
        result.pivot_cols.push_back(col_perm[k]);
    }
    result.rank = k;
    result.last_pivot = prev;
    return result;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
    return bareiss(m).rank;
}

template <typename Scalar>
struct Echelon {
    Matrix<Scalar> reduced;
    std::vector<Eigen::Index> pivot_cols;
};

/// Reduced row echelon form over a field.
template <typename Derived>
Echelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    using Traits = ExactTraits<Scalar>;
    Echelon<Scalar> out;
    out.reduced = input;
    auto& m = out.reduced;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = row; i < m.rows(); ++i) {
            if (!Traits::is_zero(m(i, col))) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        const Scalar inv = Traits::exact_div(Traits::one(), m(row, col));
        for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i == row || Traits::is_zero(m(i, col))) continue;
            const Scalar factor = m(i, col);
            for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(row, j);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    return out;
}

/// Columns form a basis of the right kernel {v : M v = 0}.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    using Traits = ExactTraits<Scalar>;
    const auto ech = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix<Scalar> basis = Matrix<Scalar>::Constant(m.cols(), free_cols.size(), Traits::zero());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const auto fc = free_cols[k];
        basis(fc, k) = Traits::one();
        for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
            basis(ech.pivot_cols[r], k) = Scalar(-ech.reduced(r, fc));
        }
    }
    return basis;
}

/// Columns form a basis of the column span of m.
template <typename Derived>
Matrix<typename Derived::Scalar> column_span_basis(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const auto ech = row_echelon(m);
    Matrix<Scalar> basis(m.rows(), ech.pivot_cols.size());
    for (std::size_t k = 0; k < ech.pivot_cols.size(); ++k) basis.col(k) = m.col(ech.pivot_cols[k]);
    return basis;
}

/// Some x with A x = b, or nullopt if the system is inconsistent. A may be non-square.
template <typename DerivedA, typename DerivedB>
std::optional<Vector<typename DerivedA::Scalar>> solve_exact(const Eigen::MatrixBase<DerivedA>& a,
                                                             const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    using Traits = ExactTraits<Scalar>;
    Matrix<Scalar> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    const auto ech = row_echelon(aug);
    Vector<Scalar> x = Vector<Scalar>::Constant(a.cols(), Traits::zero());
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
        const auto pc = ech.pivot_cols[r];
        if (pc == a.cols()) return std::nullopt;
        x(pc) = ech.reduced(r, a.cols());
    }
    return x;
}

}  // namespace pcsub

namespace pcsub {

/// Inverse of a square matrix over a field; nullopt if singular.
template <typename Derived>
std::optional<Matrix<typename Derived::Scalar>> inverse_exact(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    using Traits = ExactTraits<Scalar>;
    const Eigen::Index n = m.rows();
    Matrix<Scalar> aug = Matrix<Scalar>::Constant(n, 2 * n, Traits::zero());
    aug.leftCols(n) = m;
    for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = Traits::one();
    const auto ech = row_echelon(aug);
    if (static_cast<Eigen::Index>(ech.pivot_cols.size()) < n || ech.pivot_cols[n - 1] != n - 1) return std::nullopt;
    return Matrix<Scalar>(ech.reduced.rightCols(n));
}

}  // namespace pcsub
