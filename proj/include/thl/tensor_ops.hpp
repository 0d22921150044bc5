#pragma once

#include "thl/algebra.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace thl {

// Builds the matrix src -> dst whose column for each source basis tensor is produced by fill.
// fill receives the decoded group and algebra tuples of the source tensor.
using TensorFill = std::function<void(TensorColumn& out, const std::vector<std::size_t>& g,
                                      const std::vector<std::size_t>& a)>;
SparseMatrix build_tensor_operator(const TensorBasisIndex& src, const TensorBasisIndex& dst, const TensorFill& fill);

// The following add sign * (image of the pure tensor (g / a)) to out, keeping the group tuple g.
// tau is the twisting automorphism.

// sum_{i<n} (-1)^i (.., a_i a_{i+1}, ..) + (-1)^n (tau(a_n) a_0, a_1, .., a_{n-1})
void add_twisted_b(TensorColumn& out, const Algebra& A, const AlgebraMap& tau, const std::vector<std::size_t>& g,
                   const std::vector<std::size_t>& a, const Rational& sign);

// sum_{i=0}^{n} (-1)^{ni} (1, tau a_i, .., tau a_n, a_0, .., a_{i-1})
void add_twisted_B(TensorColumn& out, const Algebra& A, const AlgebraMap& tau, const std::vector<std::size_t>& g,
                   const std::vector<std::size_t>& a, const Rational& sign);

// sum_{j=1}^{n+1} (-1)^{nj} (1, tau a_j, .., tau a_n, a_0, .., a_{j-1}): the normalized s N of the
// tau-twisted cyclic operator.
void add_twisted_B_sN(TensorColumn& out, const Algebra& A, const AlgebraMap& tau, const std::vector<std::size_t>& g,
                      const std::vector<std::size_t>& a, const Rational& sign);

// (g a_0, .., g a_n)
void add_twist(TensorColumn& out, const AlgebraMap& h, const std::vector<std::size_t>& g,
               const std::vector<std::size_t>& a, const Rational& sign);

} // namespace thl
