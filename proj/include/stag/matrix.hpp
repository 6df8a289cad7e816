// Dense exact matrices with deterministic Gaussian elimination.
//
// Pivoting is leftmost nonzero column, topmost nonzero entry, so echelon
// forms, kernels and solutions are canonical: identical inputs give
// bit-identical outputs on every platform.

#pragma once

#include <optional>
#include <vector>

#include "stag/field.hpp"

namespace stag {

class Matrix {
public:
    Matrix() : field_(Field::Q()) {}
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols, f.zero()) {}

    static Matrix identity(Field f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }
    static Matrix zero(Field f, std::size_t rows, std::size_t cols) {
        return Matrix(f, rows, cols);
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& s : e_) if (!s.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_ || field_ != o.field_)
            throw std::invalid_argument("Matrix::operator*: shape/field mismatch");
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(*this);
        for (auto& s : r.e_) s = -s;
        return r;
    }
    Matrix scaled(const Scalar& c) const {
        Matrix r(*this);
        for (auto& s : r.e_) s *= c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// Horizontal concatenation [this | o].
    Matrix hstack(const Matrix& o) const {
        if (rows_ != o.rows_ || field_ != o.field_)
            throw std::invalid_argument("Matrix::hstack: shape/field mismatch");
        Matrix r(field_, rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }
    /// Vertical concatenation [this; o].
    Matrix vstack(const Matrix& o) const {
        if (cols_ != o.cols_ || field_ != o.field_)
            throw std::invalid_argument("Matrix::vstack: shape/field mismatch");
        Matrix r(field_, rows_ + o.rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix r(field_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
        return r;
    }

    static Matrix direct_sum(const Matrix& a, const Matrix& b) {
        Matrix r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
        return r;
    }

    /// Kronecker product, row-major convention: (a⊗b)[(i1,i2),(j1,j2)].
    static Matrix kronecker(const Matrix& a, const Matrix& b) {
        Matrix r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i1 = 0; i1 < a.rows_; ++i1)
            for (std::size_t j1 = 0; j1 < a.cols_; ++j1) {
                const Scalar& s = a.at(i1, j1);
                if (s.is_zero()) continue;
                for (std::size_t i2 = 0; i2 < b.rows_; ++i2)
                    for (std::size_t j2 = 0; j2 < b.cols_; ++j2)
                        r.at(i1 * b.rows_ + i2, j1 * b.cols_ + j2) = s * b.at(i2, j2);
            }
        return r;
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pr = row;
            while (pr < rows_ && at(pr, col).is_zero()) ++pr;
            if (pr == rows_) continue;
            if (pr != row)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(row, j), at(pr, j));
            Scalar inv = at(row, col).inverse();
            for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || at(i, col).is_zero()) continue;
                Scalar f = at(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    at(i, j) -= f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m(*this);
        return m.rref().size();
    }

    /// Echelon-normalized kernel basis, one column per free variable,
    /// returned as a cols() x nullity matrix.
    Matrix kernel_basis() const {
        Matrix m(*this);
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        Matrix k(field_, cols_, free_cols.size());
        for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
            std::size_t fc = free_cols[fi];
            k.at(fc, fi) = field_.one();
            for (std::size_t pi = 0; pi < pivots.size(); ++pi)
                k.at(pivots[pi], fi) = -m.at(pi, fc);
        }
        return k;
    }

    std::size_t nullity() const { return cols_ - rank(); }

    friend std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
            throw std::invalid_argument("Matrix: shape/field mismatch");
    }

    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

/// Solve A·X = B for X (B may have several columns). Returns the canonical
/// solution with zeros at free variables, or nullopt if inconsistent.
inline std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.field() != b.field())
        throw std::invalid_argument("solve_linear: shape/field mismatch");
    Matrix aug = a.hstack(b);
    auto pivots = aug.rref();
    // any pivot in the B block means inconsistency
    for (auto c : pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(pivots[pi], j) = aug.at(pi, a.cols() + j);
    return x;
}

/// Canonical projection k^rows -> coker(a) = k^rows / colspace(a), returned
/// as a (rows - rank) x rows matrix p with p·a = 0 and p surjective.
inline Matrix cokernel_projection(const Matrix& a) {
    const Field f = a.field();
    const std::size_t d = a.rows();
    // column basis of the image, then greedy extension by standard vectors
    Matrix r(a);
    auto pivots = r.rref();
    Matrix basis(f, d, 0);
    for (auto c : pivots) basis = basis.hstack(a.block(0, c, d, 1));
    std::vector<std::size_t> ext;
    for (std::size_t i = 0; i < d && basis.cols() < d; ++i) {
        Matrix e(f, d, 1);
        e.at(i, 0) = f.one();
        Matrix cand = basis.hstack(e);
        if (cand.rank() == basis.cols() + 1) {
            basis = cand;
            ext.push_back(i);
        }
    }
    // invert the full basis; the rows matching the extension give the quotient
    auto inv = solve_linear(basis, Matrix::identity(f, d));
    Matrix p(f, ext.size(), d);
    for (std::size_t i = 0; i < ext.size(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            p.at(i, j) = inv->at(pivots.size() + i, j);
    return p;
}

/// Column span membership: does v lie in the column space of a?
inline bool in_column_space(const Matrix& a, const Matrix& v) {
    return solve_linear(a, v).has_value();
}

}  // namespace stag
