#pragma once

#include "thl/elimination.hpp"
#include "thl/sparse_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace thl {

// ambient / span(relations). Quotient basis = images of the ambient coordinates that are
// not pivots of the relation RREF, in ascending order.
struct QuotientPresentation {
    std::size_t ambient_dim = 0;
    SparseMatrix relation_basis;          // ambient x rank, RREF basis of the relation span
    SparseMatrix section;                 // ambient x dim
    SparseMatrix projection;              // dim x ambient
    std::vector<std::size_t> free_coords; // ambient coordinate behind each quotient basis vector

    std::size_t dim() const { return free_coords.size(); }
};

QuotientPresentation quotient_by(std::size_t ambient_dim, const SparseMatrix& relations);

// Presentation with no relations.
QuotientPresentation trivial_quotient(std::size_t ambient_dim);

// dst.projection * f * src.section, after checking f(src relations) lies in span(dst relations).
// context is prepended to the WellDefinednessError message.
SparseMatrix descend_map(const SparseMatrix& f, const QuotientPresentation& src, const QuotientPresentation& dst,
                         const std::string& context = "");

} // namespace thl
