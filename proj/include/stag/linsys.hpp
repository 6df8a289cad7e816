// Linear systems whose unknowns are matrices.
//
// Constraints have the shape  sum_i  L_i · U_{k_i} · R_i  + C = 0,  linear in
// the entries of the unknown matrices U_k. Used for Hom-space bases, chain
// map lifts and homotopy corrections, where the unknowns are the component
// matrices of a morphism.

#pragma once

#include <optional>
#include <vector>

#include "stag/matrix.hpp"

namespace stag {

class LinearSystem {
public:
    explicit LinearSystem(Field f) : field_(f) {}

    struct Unknown {
        std::size_t index;  // handle
        std::size_t rows, cols;
        std::size_t offset;  // first flat variable
    };

    /// Register an unknown rows x cols matrix; returns its handle.
    std::size_t add_unknown(std::size_t rows, std::size_t cols) {
        Unknown u{unknowns_.size(), rows, cols, n_vars_};
        n_vars_ += rows * cols;
        unknowns_.push_back(u);
        return u.index;
    }

    /// One term of a constraint: left · U · right.
    struct Term {
        std::size_t unknown;
        Matrix left;   // rows x u.rows
        Matrix right;  // u.cols x cols
    };

    /// Add the constraint sum(terms) + constant = 0 (entrywise).
    void add_constraint(const std::vector<Term>& terms, const Matrix& constant) {
        const std::size_t r = constant.rows(), c = constant.cols();
        Row row;
        row.rows = r;
        row.cols = c;
        row.constant = constant;
        for (const auto& t : terms) {
            const Unknown& u = unknowns_[t.unknown];
            if (t.left.cols() != u.rows || t.right.rows() != u.cols ||
                t.left.rows() != r || t.right.cols() != c)
                throw std::invalid_argument("LinearSystem: term shape mismatch");
        }
        row.terms = terms;
        rows_.push_back(std::move(row));
    }

    /// Build the flat coefficient matrix A (equations x variables) and
    /// right-hand side b with A·x = b, where x stacks all unknown entries.
    std::pair<Matrix, Matrix> assemble() const {
        std::size_t n_eqs = 0;
        for (const auto& row : rows_) n_eqs += row.rows * row.cols;
        Matrix a(field_, n_eqs, n_vars_);
        Matrix b(field_, n_eqs, 1);
        std::size_t eq0 = 0;
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.rows; ++i)
                for (std::size_t j = 0; j < row.cols; ++j)
                    b.at(eq0 + i * row.cols + j, 0) = -row.constant.at(i, j);
            for (const auto& t : row.terms) {
                const Unknown& u = unknowns_[t.unknown];
                // (L U R)[i,j] = sum_{a,b} L[i,a] U[a,b] R[b,j]
                for (std::size_t i = 0; i < row.rows; ++i)
                    for (std::size_t av = 0; av < u.rows; ++av) {
                        const Scalar& l = t.left.at(i, av);
                        if (l.is_zero()) continue;
                        for (std::size_t bv = 0; bv < u.cols; ++bv) {
                            std::size_t var = u.offset + av * u.cols + bv;
                            for (std::size_t j = 0; j < row.cols; ++j) {
                                const Scalar& rr = t.right.at(bv, j);
                                if (rr.is_zero()) continue;
                                a.at(eq0 + i * row.cols + j, var) += l * rr;
                            }
                        }
                    }
            }
            eq0 += row.rows * row.cols;
        }
        return {a, b};
    }

    /// Solve for one solution; extract unknown k from the returned vector
    /// with extract(). Returns nullopt if inconsistent.
    std::optional<Matrix> solve() const {
        auto [a, b] = assemble();
        return solve_linear(a, b);
    }

    /// Basis of the homogeneous solution space (constants ignored), one
    /// column per basis vector.
    Matrix nullspace() const {
        auto [a, b] = assemble();
        (void)b;
        return a.kernel_basis();
    }

    /// Reshape the flat column `sol` back into unknown k.
    Matrix extract(const Matrix& sol, std::size_t k) const {
        const Unknown& u = unknowns_[k];
        Matrix m(field_, u.rows, u.cols);
        for (std::size_t i = 0; i < u.rows; ++i)
            for (std::size_t j = 0; j < u.cols; ++j)
                m.at(i, j) = sol.at(u.offset + i * u.cols + j, 0);
        return m;
    }

    /// Extract unknown k from column `col` of a multi-column solution set.
    Matrix extract_column(const Matrix& sols, std::size_t col, std::size_t k) const {
        const Unknown& u = unknowns_[k];
        Matrix m(field_, u.rows, u.cols);
        for (std::size_t i = 0; i < u.rows; ++i)
            for (std::size_t j = 0; j < u.cols; ++j)
                m.at(i, j) = sols.at(u.offset + i * u.cols + j, col);
        return m;
    }

    std::size_t variable_count() const { return n_vars_; }
    const Field& field() const { return field_; }

private:
    struct Row {
        std::vector<Term> terms;
        Matrix constant;
        std::size_t rows = 0, cols = 0;
    };

    Field field_;
    std::size_t n_vars_ = 0;
    std::vector<Unknown> unknowns_;
    std::vector<Row> rows_;
};

}  // namespace stag
