#pragma once

#include "thl/quotient.hpp"
#include "thl/sparse_matrix.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace thl {

// Degrees 0..top. d[n] maps degree n to degree n-1; d[0] is the 0 x dims[0] matrix.
struct ChainComplex {
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> d;

    std::size_t top() const { return dims.size() - 1; }

    // Checks shapes and d[n] * d[n+1] = 0; throws ComplexError.
    void check(const std::string& context = "") const;
};

ChainComplex make_complex(std::vector<std::size_t> dims, std::vector<SparseMatrix> d);

struct HomologyResult {
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> cycle_basis;    // per degree: ambient x dim Z_n
    std::vector<SparseMatrix> boundary_basis; // per degree: ambient x dim B_n
    std::vector<SparseMatrix> representatives;  // per degree: ambient x dims[n], one cycle per class
    std::vector<std::vector<std::size_t>> cycle_coords; // free columns of the RREF of d_n
    std::vector<QuotientPresentation> classes;  // Z_n (in cycle coordinates) / B_n
    std::size_t valid_through = 0;

    // Class coordinates of cycles (columns of z). The caller guarantees d z = 0.
    SparseMatrix classify(std::size_t n, const SparseMatrix& z) const;
};

// Homology in degrees 0..through; requires through < top. Default through = top - 1.
HomologyResult homology(const ChainComplex& c);
HomologyResult homology(const ChainComplex& c, std::size_t through);

// Dimensions only (ranks of the differentials), degrees 0..through < top.
std::vector<std::size_t> homology_dims(const ChainComplex& c, std::size_t through);

// Module (p,q) with p,q >= 0; vertical (p,q)->(p,q-1), horizontal (p,q)->(p-1,q).
// Missing maps are zero.
struct BicomplexSpec {
    using Key = std::pair<std::size_t, std::size_t>;
    std::map<Key, std::size_t> dims;
    std::map<Key, SparseMatrix> vertical;
    std::map<Key, SparseMatrix> horizontal;
};

// Tot_n = sum over p+q = n (p ascending), differential d^h + (-1)^p d^v, degrees 0..n_internal.
ChainComplex total_complex(const BicomplexSpec& b, std::size_t n_internal);

// (C, b, B): b[n]: n -> n-1 (b[0] empty), B[n]: n -> n+1.
struct MixedComplex {
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> b;
    std::vector<SparseMatrix> B;

    std::size_t top() const { return dims.size() - 1; }
};

// The (b, B) bicomplex: entry (p,q) = C_{q-p}. The vertical maps are stored as (-1)^p b so that
// the total differential is b + B. Needs C through degree n_internal.
BicomplexSpec mixed_bicomplex(const MixedComplex& m, std::size_t n_internal);

// Tot_n = C_n + C_{n-2} + ... (component j holds C_{n-2j}), differential b + B.
ChainComplex mixed_total(const MixedComplex& m, std::size_t n_internal);

// (C, b) through degree top.
ChainComplex hochschild_column(const MixedComplex& m, std::size_t top);

// f[n]: src degree n -> dst degree n. Checks f[n-1] d = d f[n] for n <= through + 1 (ChainMapError)
// and returns the induced maps in the chosen homology bases for n <= through.
std::vector<SparseMatrix> induced_on_homology(const std::vector<SparseMatrix>& f, const ChainComplex& src,
                                              const HomologyResult& src_h, const ChainComplex& dst,
                                              const HomologyResult& dst_h);

} // namespace thl
