#pragma once

#include "thl/sparse_matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace thl {

// Reduced row echelon basis of a subspace of Q^dim.
// rows[k] has a 1 in column pivots[k] and zeros in every other pivot column.
struct EchelonBasis {
    std::size_t dim = 0;
    std::vector<std::size_t> pivots;
    std::vector<SparseVector> rows;

    std::size_t rank() const { return pivots.size(); }
    // Columns not occupied by a pivot, ascending.
    std::vector<std::size_t> free_columns() const;
};

// Exact rank. Works on integer rows (content-normalized, fraction-free row operations);
// falls back from 64-bit to GMP integers if an intermediate value overflows.
std::size_t rank(const SparseMatrix& m);

// RREF of the span of the columns of m (vectors of length m.rows()).
EchelonBasis column_space_rref(const SparseMatrix& m);

// RREF of the span of the rows of m (vectors of length m.cols()).
EchelonBasis row_space_rref(const SparseMatrix& m);

// Columns: one basis vector of ker(m) per free column of the row RREF; the vector for free
// column f is 1 at f, 0 at the other free columns.
SparseMatrix kernel_basis(const SparseMatrix& m);

// Kernel basis read off an already computed row RREF of the matrix.
SparseMatrix kernel_from_rref(const EchelonBasis& rref);

// Some X with m X = v, or nothing if a column of v is outside the column space of m.
std::optional<SparseMatrix> solve(const SparseMatrix& m, const SparseMatrix& v);

} // namespace thl
