#pragma once

#include "thl/algebra.hpp"
#include "thl/chain_complex.hpp"
#include "thl/quotient.hpp"

#include <cstddef>
#include <vector>

namespace thl {

// Tensor module A^{(n+1)}, or A (x) Abar^{(n)} when reduced (unit must be basis vector 0).
TensorBasisIndex algebra_tensor_index(const Algebra& A, std::size_t n, bool reduced);

// g^{(x)(n+1)}.
SparseMatrix twist_matrix(const Algebra& A, const AlgebraMap& g, std::size_t n, bool reduced = false);

// A^{(n+1)} -> A^{(n)}, n >= 1. The reduced version is the full operator followed by the projection
// to A (x) Abar^{(n-1)}, restricted to A (x) Abar^{(n)}.
SparseMatrix twisted_b(const Algebra& A, const AlgebraMap& g, std::size_t n, bool reduced = false);

// A (x) Abar^{(n)} -> A (x) Abar^{(n+1)}:
// B(a_0, .., a_n) = sum_i (-1)^{ni} (1, g a_i, .., g a_n, a_0, .., a_{i-1}).
SparseMatrix twisted_B(const Algebra& A, const AlgebraMap& g, std::size_t n);

struct HKBicomplex {
    std::size_t max_degree = 0;                 // N; modules run through N + 1
    std::vector<QuotientPresentation> modules;  // (A (x) Abar^{(n)}) / (1 - T_g)
    MixedComplex mixed;                         // descended b and B
};

HKBicomplex hk_bicomplex(const Algebra& A, const AlgebraMap& g, std::size_t N);

// Homology of (C, b), degrees 0..N.
HomologyResult twisted_hochschild(const Algebra& A, const AlgebraMap& g, std::size_t N);

// Homology of the total complex of the (b, B) bicomplex, degrees 0..N.
HomologyResult twisted_cyclic(const Algebra& A, const AlgebraMap& g, std::size_t N);

} // namespace thl
