#pragma once

#include "thl/algebra.hpp"
#include "thl/chain_complex.hpp"
#include "thl/crossed.hpp"
#include "thl/quotient.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace thl {

// Homology of ((k[G] (x) A^{(n+1)}) / G, b) through N. The normalized version uses A (x) Abar^{(n)}.
HomologyResult g_hochschild(const Algebra& A, const FiniteGroupAction& G, std::size_t N, bool normalized = true);

struct ExactnessNode {
    std::string node;     // e.g. "HC_2"
    std::string theory;   // "HH^G", "HC", "HDR^G", ...
    std::size_t degree = 0;
    std::string incoming; // map names
    std::string outgoing;
    std::size_t dim = 0;
    std::size_t image_dim = 0;  // rank of the incoming map
    std::size_t kernel_dim = 0; // nullity of the outgoing map
    bool composite_zero = true;
    bool exact = false;
};

struct ExactnessReport {
    std::vector<ExactnessNode> nodes;
    std::vector<std::string> notes;

    bool all_exact() const;
    bool all_composites_zero() const;
};

// The node between incoming (P -> X) and outgoing (X -> Y) maps on homology.
ExactnessNode exactness_node(std::string node, std::string theory, std::size_t degree, std::size_t dim,
                             std::string in_name, const SparseMatrix& in, std::string out_name,
                             const SparseMatrix& out);

// Matrix of the map on homology induced by f: C_m -> D_k, after checking that f sends cycles to
// cycles and boundaries to boundaries (WellDefinednessError otherwise).
SparseMatrix map_on_homology(const SparseMatrix& f, const ChainComplex& src, const HomologyResult& src_h,
                             std::size_t m, const ChainComplex& dst, const HomologyResult& dst_h, std::size_t k,
                             const std::string& name);

// ... -> HH_n -I-> HC_n -S-> HC_{n-2} -delta-> HH_{n-1} -> ... on the coinvariant normalized mixed
// complex, with HC(A x| G) computed by its total complex. Nodes HH_n, HC_n and HC_{n-2} for n <= N.
ExactnessReport sbi_sequence(const Algebra& A, const FiniteGroupAction& G, std::size_t N);

// (g / a_0, abar_1, .., abar_n) -> (g / 1, abar_0, .., abar_n) on k[G] (x) A (x) Abar^{(n)}.
SparseMatrix derham_d(const Algebra& A, const FiniteGroupAction& G, std::size_t n);

struct DeRhamComplex {
    std::size_t max_degree = 0;
    CoinvariantComplex coinvariant;          // C^G_n and descended b, degrees 0..N+2
    std::vector<SparseMatrix> d;             // d[n]: C^G_n -> C^G_{n+1} in coinvariant coordinates
    std::vector<QuotientPresentation> ab;    // C^G_n / (im(bd + db) + im b), degrees 0..N+1
    std::vector<SparseMatrix> d_ab;          // descended d, degrees 0..N
    HomologyResult homology;                 // ker d_n / im d_{n-1}, degrees 0..N, in ab coordinates
};

DeRhamComplex derham_complex(const Algebra& A, const FiniteGroupAction& G, std::size_t N);
HomologyResult derham_homology(const Algebra& A, const FiniteGroupAction& G, std::size_t N);

// Chain-level data of 0 -> HDR_n -> HC_n(A x| G) -> HH_{n+1}^G for n <= N - 1, on homology bases.
struct KaroubiMaps {
    std::vector<std::size_t> hdr_dims, hc_dims, hh_dims; // hh_dims[n] is dim HH_{n+1}
    std::vector<SparseMatrix> left;                      // HDR_n -> HC_n
    std::vector<SparseMatrix> right;                     // HC_n -> HH_{n+1}
    std::vector<bool> left_defined;                      // every class has a lift
    std::vector<bool> left_well_defined;                 // lifts agree up to boundaries
    std::vector<std::string> notes;
};

using KaroubiRealization = std::function<KaroubiMaps(const Algebra&, const FiniteGroupAction&, std::size_t)>;

// HC_n through the Connes complex with G-coinvariants. Left: a de Rham representative is read in
// the Connes complex, corrected into a cycle by an element of im(bd + db) + im b + im d if needed.
// Right: pi o s o N, with N the norm of t, s the unit insertion and pi the normalization.
KaroubiMaps lambda_karoubi_maps(const Algebra& A, const FiniteGroupAction& G, std::size_t N);

struct KaroubiDegree {
    std::size_t degree = 0;
    std::size_t hdr = 0, hc = 0, hh = 0;
    std::size_t left_rank = 0, right_rank = 0;
    bool left_defined = false;
    bool left_well_defined = false;
    bool left_injective = false;
    bool composite_zero = false;
    bool middle_exact = false;
};

struct KaroubiReport {
    std::vector<KaroubiDegree> degrees;
    ExactnessReport exactness;
};

KaroubiReport karoubi_sequence(const Algebra& A, const FiniteGroupAction& G, std::size_t N,
                               const KaroubiRealization& realization = lambda_karoubi_maps);

} // namespace thl
