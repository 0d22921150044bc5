#pragma once

#include "thl/algebra.hpp"
#include "thl/chain_complex.hpp"
#include "thl/quotient.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace thl {

// k[G^{p+1}] (x) A (x) Abar^{(q)}.
TensorBasisIndex gj_index(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q);

// Raw operators on the normalized modules, as written for the Getzler-Jones complex.
// (p,q) -> (p-1,q); the 0 x dim matrix for p = 0.
SparseMatrix gj_bbar(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q);
// (p,q) -> (p+1,q).
SparseMatrix gj_Bbar(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q);
// (g / a) -> (g / g(a_0), .., g(a_q)) with g = g_0...g_p.
SparseMatrix gj_T(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q);
// Block diagonal over group tuples: twisted b (q >= 1; else empty) and twisted B of the HK
// complex, twist automorphism (g_0...g_p)^{-1}, no signs.
std::pair<SparseMatrix, SparseMatrix> gj_twisted_bB(const Algebra& A, const FiniteGroupAction& G, std::size_t p,
                                                    std::size_t q);

// Stored (sign-adjusted) vertical operators, g = g_0...g_p:
//   b_s = (-1)^p b_{g^-1}                    (p,q) -> (p,q-1)
//   B_s = -(-1)^p T o B^{sN}_{g^-1}          (p,q) -> (p,q+1)
// B^{sN}_tau(a) = sum_{j=1}^{q+1} (-1)^{qj} (1, tau a_j, .., tau a_q, a_0, .., a_{j-1}).
// With these, b_s B_s + B_s b_s = 1 - T holds exactly and B_s agrees with -(-1)^p times the
// twisted B of gj_twisted_bB modulo (1 - T).
SparseMatrix gj_b(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q);
SparseMatrix gj_B(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q);

// (g_0, .., g_p / a) -> (g_1, .., g_p / g / a), both sides enumerated by gj_index(p, q).
SparseMatrix beta_map(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q);

struct IdentityCheck {
    std::string name;
    std::string location; // "(p,q)" or "n=..."
    bool pass = false;
    std::string detail; // first nonzero residual when failing
};

// All Getzler-Jones identities for p + q <= max_total (see implementation for the list), plus the
// full boundary pair on group-normalized modules.
std::vector<IdentityCheck> verify_gj_identities(const Algebra& A, const FiniteGroupAction& G, std::size_t max_total);

// Quotient modules with a (b, B) structure; modules[n] presents C_n.
struct QuotientMixedComplex {
    std::vector<QuotientPresentation> modules;
    MixedComplex mixed;
};

struct PropositionBicomplex {
    std::size_t max_degree = 0;
    std::map<std::pair<std::size_t, std::size_t>, QuotientPresentation> modules; // (p,q) / (1 - T)
    MixedComplex mixed; // C_n = sum_{p+q=n}, b + bbar, B
    HomologyResult homology;
};

PropositionBicomplex proposition_bicomplex(const Algebra& A, const FiniteGroupAction& G, std::size_t N);

// p = 0 row: (k[G] (x) A (x) Abar^{(n)} / (1 - T), b, B).
QuotientMixedComplex hcG_mixed(const Algebra& A, const FiniteGroupAction& G, std::size_t N);
HomologyResult hcG_bicomplex(const Algebra& A, const FiniteGroupAction& G, std::size_t N);

// Columns m - h.m over all h and basis tensors m of a p = 0 module,
// h.(g / a) = (h g h^-1 / h(a_0), .., h(a_q)).
SparseMatrix coinvariant_relations(const Algebra& A, const FiniteGroupAction& G, const TensorBasisIndex& t);

struct CoinvariantComplex {
    QuotientMixedComplex complex;
    std::vector<std::vector<std::size_t>> coord_class; // per degree, conjugacy class of each quotient coordinate
};

// Coinvariant modules through degree top (>= N + 1 as needed by the caller).
CoinvariantComplex coinvariant_mixed(const Algebra& A, const FiniteGroupAction& G, std::size_t top);
HomologyResult coinvariant_bicomplex(const Algebra& A, const FiniteGroupAction& G, std::size_t N);

struct Stalk {
    std::size_t representative = 0;
    std::vector<std::size_t> centralizer;
    QuotientMixedComplex complex;
    std::vector<std::size_t> dims; // HC of the stalk, degrees 0..N
};

// One stalk per conjugacy class: (A (x) Abar^{(n)} / G^g, b, B) twisted by g^-1.
std::vector<Stalk> conjugacy_decomposition(const Algebra& A, const FiniteGroupAction& G, std::size_t N);

struct TheoremMapReport {
    std::size_t element = 0;
    std::size_t stalk_class = 0;             // class of g^-1
    std::vector<std::size_t> source_dims;    // HC^g
    std::vector<std::size_t> target_dims;    // HC of the coinvariant bicomplex
    std::vector<std::size_t> stalk_dims;     // homology of the class-of-g^-1 summand
    std::vector<std::size_t> rank;
    std::vector<bool> injective;
    std::vector<bool> within_stalk;          // image inside the class-of-g^-1 summand
    std::vector<bool> onto_stalk;
    std::vector<SparseMatrix> induced;
};

// HC^g(A) -> HC of the coinvariant bicomplex, (a_0, .., a_n) -> (g^-1 / a_0, .., a_n), with the sign
// (-1)^j on the j-th column of the total complex.
TheoremMapReport theorem_map_f(const Algebra& A, const FiniteGroupAction& G, std::size_t g, std::size_t N);

// Unnormalized k[G] (x) A^{(n+1)} operators used by the Connes complex.
SparseMatrix lambda_t(const Algebra& A, const FiniteGroupAction& G, std::size_t n);
SparseMatrix unnormalized_b(const Algebra& A, const FiniteGroupAction& G, std::size_t n);

struct LambdaComplex {
    bool coinvariants = false;
    std::vector<QuotientPresentation> modules;
    ChainComplex complex;
    HomologyResult homology;
};

// (k[G] (x) A^{(n+1)} / (1 - t), b), optionally also divided by the G-action; homology through N.
// t(g / a_0, .., a_n) = (-1)^n (g / g^-1(a_n), a_0, .., a_{n-1}).
LambdaComplex connes_lambda_complex(const Algebra& A, const FiniteGroupAction& G, std::size_t N, bool coinvariants);

struct UComplexReport {
    std::vector<std::size_t> u_dims;
    std::vector<std::size_t> bicomplex_dims;
    bool equal = false;
};

// (C[[u]] (x) W, b + uB): degree n spanned by x u^{-j}, x in C_{n-2j}.
ChainComplex u_complex(const MixedComplex& m, std::size_t n_internal);
UComplexReport u_complex_equivalence(const MixedComplex& m, std::size_t N);

} // namespace thl
