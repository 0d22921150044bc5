#include "thl/quotient.hpp"

#include "thl/errors.hpp"

#include <stdexcept>

namespace thl {

QuotientPresentation quotient_by(std::size_t ambient_dim, const SparseMatrix& relations) {
    if (relations.rows() != ambient_dim) throw std::invalid_argument("quotient_by: relations have wrong row count");
    EchelonBasis e = column_space_rref(relations);
    QuotientPresentation q;
    q.ambient_dim = ambient_dim;
    q.free_coords = e.free_columns();

    std::vector<std::int64_t> pos(ambient_dim, -1);
    for (std::size_t k = 0; k < q.free_coords.size(); ++k) pos[q.free_coords[k]] = static_cast<std::int64_t>(k);

    q.relation_basis = SparseMatrix::from_columns(ambient_dim, e.rows);

    std::vector<SparseVector> sec(q.dim());
    for (std::size_t k = 0; k < q.dim(); ++k) sec[k].emplace_back(q.free_coords[k], Rational(1));
    q.section = SparseMatrix::from_columns(ambient_dim, std::move(sec));

    // A pivot coordinate c with relation row r = e_c + sum_f r_f e_f equals -sum_f r_f e_f mod relations.
    std::vector<SparseVector> proj(ambient_dim);
    for (std::size_t k = 0; k < q.dim(); ++k) proj[q.free_coords[k]].emplace_back(k, Rational(1));
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        std::size_t piv = e.pivots[r];
        for (auto& [c, a] : e.rows[r]) {
            if (c == piv) continue;
            proj[piv].emplace_back(static_cast<std::size_t>(pos[c]), -a);
        }
    }
    q.projection = SparseMatrix::from_columns(q.dim(), std::move(proj));
    return q;
}

QuotientPresentation trivial_quotient(std::size_t ambient_dim) {
    QuotientPresentation q;
    q.ambient_dim = ambient_dim;
    q.relation_basis = SparseMatrix(ambient_dim, 0);
    q.section = SparseMatrix::identity(ambient_dim);
    q.projection = SparseMatrix::identity(ambient_dim);
    q.free_coords.resize(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) q.free_coords[i] = i;
    return q;
}

SparseMatrix descend_map(const SparseMatrix& f, const QuotientPresentation& src, const QuotientPresentation& dst,
                         const std::string& context) {
    if (f.cols() != src.ambient_dim || f.rows() != dst.ambient_dim)
        throw std::invalid_argument(context + "descend_map: shape " + describe_shape(f) + " does not match quotients");
    SparseMatrix leak = dst.projection * (f * src.relation_basis);
    if (auto nz = leak.first_nonzero()) {
        auto [i, j, a] = *nz;
        throw WellDefinednessError(context + "map does not preserve relations: relation " + std::to_string(j) +
                                   " lands outside the target relations (quotient coordinate " +
                                   std::to_string(i) + ", value " + to_string(a) + ")");
    }
    return dst.projection * (f * src.section);
}

} // namespace thl
