#pragma once

#include "thl/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace thl {

using SparseEntry = std::pair<std::size_t, Rational>;
// Sorted by index, no stored zeros.
using SparseVector = std::vector<SparseEntry>;

// Sort by index, merge duplicates, drop zeros.
void canonicalize(SparseVector& v);

// Column-compressed exact matrix.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    static SparseMatrix identity(std::size_t n);
    // Columns need not be canonical; they are canonicalized here.
    static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector> cols);
    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }
    const SparseVector& column(std::size_t j) const { return cols_[j]; }
    std::size_t nnz() const;
    bool is_zero() const;
    Rational at(std::size_t i, std::size_t j) const;

    // Replaces column j; v is canonicalized.
    void set_column(std::size_t j, SparseVector v);

    SparseMatrix transpose() const;
    SparseMatrix scaled(const Rational& c) const;
    SparseVector apply(const SparseVector& x) const;
    SparseMatrix select_columns(const std::vector<std::size_t>& which) const;
    // Row which[k] of this becomes row k of the result.
    SparseMatrix select_rows(const std::vector<std::size_t>& which) const;

    // First nonzero entry in column-major order.
    std::optional<std::tuple<std::size_t, std::size_t, Rational>> first_nonzero() const;

    std::vector<std::vector<Rational>> to_dense() const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

private:
    std::size_t rows_ = 0;
    std::vector<SparseVector> cols_;
};

SparseMatrix hstack(std::size_t rows, const std::vector<const SparseMatrix*>& parts);

// Assembles a matrix out of blocks placed at given row/column offsets.
class BlockAssembler {
public:
    BlockAssembler(std::vector<std::size_t> row_sizes, std::vector<std::size_t> col_sizes);
    void place(std::size_t block_row, std::size_t block_col, const SparseMatrix& m,
               const Rational& sign = Rational(1));
    SparseMatrix build();

private:
    std::vector<std::size_t> row_off_, col_off_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<SparseVector> cols_data_;
};

std::string describe_shape(const SparseMatrix& m);

} // namespace thl
