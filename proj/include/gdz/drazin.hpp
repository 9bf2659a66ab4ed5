#pragma once

#include "gdz/linalg.hpp"

namespace gdz {

/// Drazin data for a square matrix A: the inverse A^d, the index (smallest
/// k with rank(A^k) = rank(A^{k+1})) and the spectral idempotent
/// A^pi = I - A A^d. Index 0 iff A is invertible iff the projector is 0.
template <class S>
struct DrazinData {
    Matrix<S> inverse;
    int index = 0;
    Matrix<S> projector;

    Matrix<S> core_projector(std::size_t n) const {
        return Matrix<S>::identity(n) - projector; // A A^d
    }
};

/// Drazin inverse by recursive full-rank factorization: A = B C, recurse on
/// the core C B until it is invertible or zero, then A^d = B ((CB)^d)^2 C.
/// Exact over rationals, no spectral machinery, independent of every
/// representation formula in this toolkit.
template <class S>
DrazinData<S> drazin(const Matrix<S>& a, const TolerancePolicy& pol = {}) {
    if (!a.square()) throw DimensionError("drazin of non-square " + a.shape_str());
    const std::size_t n = a.rows();
    if (n == 0) return {a, 0, a};

    RankFactorization<S> f = rank_factorize(a, pol);
    if (f.rank == 0)
        return {Matrix<S>::zeros(n, n), 1, Matrix<S>::identity(n)};
    if (f.rank == n) {
        Matrix<S> inv = inverse(a, pol);
        return {inv, 0, Matrix<S>::zeros(n, n)};
    }
    DrazinData<S> sub = drazin(f.right * f.left, pol);
    Matrix<S> ad = f.left * sub.inverse * sub.inverse * f.right;
    return {ad, sub.index + 1, Matrix<S>::identity(n) - a * ad};
}

/// True iff A^n vanishes (n = dimension); at matrix scale this is the whole
/// quasinilpotent class.
template <class S>
bool is_quasinilpotent(const Matrix<S>& a, const TolerancePolicy& pol = {}) {
    if (!a.square()) throw DimensionError("quasinilpotence of non-square " + a.shape_str());
    return is_zero_within(a.pow(a.rows()), pol);
}

/// Group inverse A^# = A^d, defined only when the index is at most 1.
template <class S>
Matrix<S> group_inverse(const Matrix<S>& a, const TolerancePolicy& pol = {}) {
    DrazinData<S> d = drazin(a, pol);
    if (d.index > 1) throw NoGroupInverseError(d.index);
    return d.inverse;
}

/// Transport across a factor swap: given (ab)^d for a (m x n) and b (n x m),
/// returns (ba)^d = b ((ab)^d)^2 a.
template <class S>
Matrix<S> cline_transport(const Matrix<S>& a, const Matrix<S>& b, const Matrix<S>& abd) {
    if (b.cols() != a.rows() || a.cols() != b.rows())
        throw DimensionError("cline_transport factors " + a.shape_str() + ", " + b.shape_str());
    if (abd.rows() != a.rows() || abd.cols() != a.rows())
        throw DimensionError("cline_transport data " + abd.shape_str());
    return b * abd * abd * a;
}

/// Index shift across squaring: given (N^2)^d, returns N^d = N (N^2)^d.
template <class S>
Matrix<S> square_transport(const Matrix<S>& n, const Matrix<S>& nsqd) {
    if (!n.square() || n.rows() != nsqd.rows() || !nsqd.square())
        throw DimensionError("square_transport " + n.shape_str() + ", " + nsqd.shape_str());
    return n * nsqd;
}

/// Check the three defining identities (and the projector shape) for a
/// candidate inverse; used by self-verification and tests.
template <class S>
bool satisfies_drazin_axioms(const Matrix<S>& a, const DrazinData<S>& d,
                             const TolerancePolicy& pol = {}) {
    const Matrix<S>& x = d.inverse;
    if (!approx_equal(x * a * x, x, pol)) return false;
    if (!approx_equal(a * x, x * a, pol)) return false;
    Matrix<S> nil = a - a * a * x;
    if (d.index < 0 || static_cast<std::size_t>(d.index) > a.rows()) return false;
    // index 0 still demands the nilpotent part vanish outright
    std::size_t expo = d.index == 0 ? 1 : static_cast<std::size_t>(d.index);
    if (!is_zero_within(nil.pow(expo), pol)) return false;
    if (!approx_equal(d.projector, Matrix<S>::identity(a.rows()) - a * x, pol)) return false;
    return approx_equal(d.projector * d.projector, d.projector, pol);
}

} // namespace gdz
