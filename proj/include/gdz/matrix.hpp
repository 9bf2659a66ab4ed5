#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "gdz/error.hpp"
#include "gdz/scalar.hpp"

namespace gdz {

/// Dense row-major rectangular matrix over one scalar backend.
/// Empty matrices (0 rows or 0 cols) are first class: products with an
/// empty inner dimension yield zero matrices of the outer shape.
template <class S>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, S::zero()) {}

    Matrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("ragged initializer");
            for (long v : r) data_.emplace_back(v);
        }
    }

    static Matrix zeros(std::size_t r, std::size_t c) { return Matrix(r, c); }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = S::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool square() const { return rows_ == cols_; }

    S& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<S>& data() const { return data_; }
    std::vector<S>& data() { return data_; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.require_same_shape(y, "add");
        Matrix out(x.rows_, x.cols_);
        for (std::size_t k = 0; k < x.data_.size(); ++k) out.data_[k] = x.data_[k] + y.data_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.require_same_shape(y, "sub");
        Matrix out(x.rows_, x.cols_);
        for (std::size_t k = 0; k < x.data_.size(); ++k) out.data_[k] = x.data_[k] - y.data_[k];
        return out;
    }
    Matrix operator-() const {
        Matrix out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
        return out;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_)
            throw DimensionError("mul " + x.shape_str() + " by " + y.shape_str());
        Matrix out(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i) {
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const S& xv = x.at(i, k);
                if (xv.is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    out.at(i, j) += xv * y.at(k, j);
            }
        }
        return out;
    }
    friend Matrix operator*(const S& c, const Matrix& x) {
        Matrix out(x.rows_, x.cols_);
        for (std::size_t k = 0; k < x.data_.size(); ++k) out.data_[k] = c * x.data_[k];
        return out;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    Matrix pow(std::size_t e) const {
        if (!square()) throw DimensionError("pow of non-square");
        Matrix acc = identity(rows_);
        for (std::size_t k = 0; k < e; ++k) acc = acc * *this;
        return acc;
    }

    bool is_zero() const {
        for (const S& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }

    /// Largest entry magnitude (max over entries of max(|re|,|im|)).
    double max_abs() const {
        double m = 0.0;
        for (const S& s : data_) m = std::max(m, s.abs_upper());
        return m;
    }

    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
        if (i0 + r > rows_ || j0 + c > cols_) throw DimensionError("block out of range");
        Matrix out(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) out.at(i, j) = at(i0 + i, j0 + j);
        return out;
    }

    void set_block(std::size_t i0, std::size_t j0, const Matrix& m) {
        if (i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_)
            throw DimensionError("set_block out of range");
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) at(i0 + i, j0 + j) = m.at(i, j);
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

  private:
    void require_same_shape(const Matrix& y, const char* what) const {
        if (rows_ != y.rows_ || cols_ != y.cols_)
            throw DimensionError(std::string(what) + " " + shape_str() + " vs " + y.shape_str());
    }

    std::size_t rows_, cols_;
    std::vector<S> data_;
};

/// Assemble a 2x2 block matrix [[a, b],[c, d]]; row/col sizes must agree.
template <class S>
Matrix<S> block2x2(const Matrix<S>& a, const Matrix<S>& b,
                   const Matrix<S>& c, const Matrix<S>& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() ||
        a.cols() != c.cols() || b.cols() != d.cols())
        throw DimensionError("block2x2 shapes");
    Matrix<S> out(a.rows() + c.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    out.set_block(a.rows(), 0, c);
    out.set_block(a.rows(), a.cols(), d);
    return out;
}

template <class S>
Matrix<S> hcat(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() != b.rows()) throw DimensionError("hcat rows");
    Matrix<S> out(a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

template <class S>
Matrix<S> vcat(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.cols()) throw DimensionError("vcat cols");
    Matrix<S> out(a.rows() + b.rows(), a.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

template <class S>
Matrix<S> diag2(const Matrix<S>& a, const Matrix<S>& b) {
    return block2x2(a, Matrix<S>::zeros(a.rows(), b.cols()),
                    Matrix<S>::zeros(b.rows(), a.cols()), b);
}

/// Row/column partition of a matrix into a grid of blocks.
struct BlockSpec {
    std::vector<std::size_t> row_parts;
    std::vector<std::size_t> col_parts;

    std::size_t total_rows() const {
        return std::accumulate(row_parts.begin(), row_parts.end(), std::size_t{0});
    }
    std::size_t total_cols() const {
        return std::accumulate(col_parts.begin(), col_parts.end(), std::size_t{0});
    }
};

template <class S>
std::vector<std::vector<Matrix<S>>> split_blocks(const Matrix<S>& m, const BlockSpec& spec) {
    if (spec.total_rows() != m.rows() || spec.total_cols() != m.cols())
        throw DimensionError("block spec does not partition matrix");
    std::vector<std::vector<Matrix<S>>> grid;
    std::size_t i0 = 0;
    for (std::size_t r : spec.row_parts) {
        std::vector<Matrix<S>> row;
        std::size_t j0 = 0;
        for (std::size_t c : spec.col_parts) {
            row.push_back(m.block(i0, j0, r, c));
            j0 += c;
        }
        grid.push_back(std::move(row));
        i0 += r;
    }
    return grid;
}

template <class S>
Matrix<S> compose_blocks(const std::vector<std::vector<Matrix<S>>>& grid, const BlockSpec& spec) {
    Matrix<S> out(spec.total_rows(), spec.total_cols());
    std::size_t i0 = 0;
    for (std::size_t bi = 0; bi < spec.row_parts.size(); ++bi) {
        std::size_t j0 = 0;
        for (std::size_t bj = 0; bj < spec.col_parts.size(); ++bj) {
            out.set_block(i0, j0, grid[bi][bj]);
            j0 += spec.col_parts[bj];
        }
        i0 += spec.row_parts[bi];
    }
    return out;
}

template <class S>
Matrix<FloatScalar> to_float(const Matrix<S>& m) {
    Matrix<FloatScalar> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = to_float(m.at(i, j));
    return out;
}

using ExactMatrix = Matrix<ExactScalar>;
using FloatMatrix = Matrix<FloatScalar>;

} // namespace gdz
