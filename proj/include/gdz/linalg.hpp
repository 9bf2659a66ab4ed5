#pragma once

#include <vector>

#include "gdz/matrix.hpp"
#include "gdz/policy.hpp"

namespace gdz {

namespace detail {

// Pivot admissibility. The floating backend measures each pivot against
// the largest initial column magnitude of the whole matrix: a column whose
// entries are nothing but roundoff from an upstream product must not be
// promoted to a pivot just because its own scale is equally tiny.
template <class S>
bool pivot_usable(const S& v, double scale, const TolerancePolicy& pol) {
    if constexpr (ScalarTraits<S>::exact) {
        (void)scale;
        (void)pol;
        return !v.is_zero();
    } else {
        return v.abs_upper() > pol.zero_threshold * scale;
    }
}

} // namespace detail

template <class S>
struct RrefResult {
    Matrix<S> reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Reduced row echelon form by Gaussian elimination; partial pivoting on
/// magnitude in the floating backend, first nonzero in the exact one.
template <class S>
RrefResult<S> rref(const Matrix<S>& input, const TolerancePolicy& pol = {}) {
    RrefResult<S> res;
    res.reduced = input;
    Matrix<S>& m = res.reduced;
    const double scale = std::max(input.max_abs(), 1.0);

    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        bool found = false;
        if constexpr (ScalarTraits<S>::exact) {
            for (std::size_t i = row; i < m.rows(); ++i) {
                if (detail::pivot_usable(m.at(i, col), scale, pol)) {
                    sel = i;
                    found = true;
                    break;
                }
            }
        } else {
            double best = 0.0;
            for (std::size_t i = row; i < m.rows(); ++i) {
                double v = m.at(i, col).abs_upper();
                if (v > best) {
                    best = v;
                    sel = i;
                }
            }
            found = detail::pivot_usable(m.at(sel, col), scale, pol);
        }
        if (!found) {
            // sweep the column to an exact zero below the current row
            for (std::size_t i = row; i < m.rows(); ++i) m.at(i, col) = S::zero();
            continue;
        }
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));

        const S inv_pivot = S::one() / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv_pivot;
        m.at(row, col) = S::one();

        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            const S f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
            m.at(i, col) = S::zero();
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

template <class S>
std::size_t rank(const Matrix<S>& m, const TolerancePolicy& pol = {}) {
    return rref(m, pol).rank;
}

/// Inverse by Gauss-Jordan on [X | I]; throws SingularMatrixError.
template <class S>
Matrix<S> inverse(const Matrix<S>& x, const TolerancePolicy& pol = {}) {
    if (!x.square()) throw DimensionError("inverse of non-square " + x.shape_str());
    const std::size_t n = x.rows();
    RrefResult<S> r = rref(hcat(x, Matrix<S>::identity(n)), pol);
    if (r.rank < n || (n > 0 && r.pivot_cols[n - 1] >= n)) throw SingularMatrixError();
    return r.reduced.block(0, n, n, n);
}

template <class S>
struct RankFactorization {
    Matrix<S> left;   // rows x r, full column rank
    Matrix<S> right;  // r x cols, full row rank
    std::size_t rank = 0;
};

/// Full-rank factorization X = left * right from the RREF: left takes the
/// pivot columns of X, right the nonzero rows of the reduced form. Rank 0
/// yields empty factors.
template <class S>
RankFactorization<S> rank_factorize(const Matrix<S>& x, const TolerancePolicy& pol = {}) {
    RrefResult<S> r = rref(x, pol);
    RankFactorization<S> out;
    out.rank = r.rank;
    out.left = Matrix<S>(x.rows(), r.rank);
    for (std::size_t k = 0; k < r.rank; ++k)
        for (std::size_t i = 0; i < x.rows(); ++i)
            out.left.at(i, k) = x.at(i, r.pivot_cols[k]);
    out.right = r.reduced.block(0, 0, r.rank, x.cols());
    return out;
}

/// Columns span the right nullspace of X (n x (n-r)); standard free-column
/// construction from the RREF.
template <class S>
Matrix<S> right_null_basis(const Matrix<S>& x, const TolerancePolicy& pol = {}) {
    RrefResult<S> r = rref(x, pol);
    const std::size_t n = x.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

    Matrix<S> basis(n, n - r.rank);
    std::size_t k = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        basis.at(free, k) = S::one();
        for (std::size_t p = 0; p < r.rank; ++p)
            basis.at(r.pivot_cols[p], k) = -r.reduced.at(p, free);
        ++k;
    }
    return basis;
}

/// Rows span the left nullspace of X ((m-r) x m).
template <class S>
Matrix<S> left_null_basis(const Matrix<S>& x, const TolerancePolicy& pol = {}) {
    return right_null_basis(x.transpose(), pol).transpose();
}

/// Shape-aware approximate equality: exact backends compare structurally,
/// floating backends within the policy.
template <class S>
bool approx_equal(const Matrix<S>& x, const Matrix<S>& y, const TolerancePolicy& pol = {}) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    if constexpr (ScalarTraits<S>::exact) {
        return x == y;
    } else {
        double diff = (x - y).max_abs();
        if (diff <= pol.zero_threshold) return true;
        double scale = std::max(x.max_abs(), y.max_abs());
        return diff <= pol.rel_threshold * scale;
    }
}

template <class S>
bool is_zero_within(const Matrix<S>& x, const TolerancePolicy& pol = {}) {
    if constexpr (ScalarTraits<S>::exact) {
        return x.is_zero();
    } else {
        return x.max_abs() <= pol.zero_threshold;
    }
}

} // namespace gdz
