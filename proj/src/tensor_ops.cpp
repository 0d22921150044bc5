#include "thl/tensor_ops.hpp"

namespace thl {

namespace {

const AlgVec& unit_vec() {
    static const AlgVec u{{0, Rational(1)}};
    return u;
}

struct BasisVectors {
    std::vector<AlgVec> e;
    explicit BasisVectors(std::size_t d) : e(d) {
        for (std::size_t i = 0; i < d; ++i) e[i] = AlgVec{{i, Rational(1)}};
    }
};

const AlgVec& basis(std::size_t d, std::size_t i) {
    thread_local std::vector<AlgVec> cache;
    if (cache.size() < d) cache = BasisVectors(d).e;
    return cache[i];
}

Rational parity(std::size_t k) { return Rational(k % 2 == 0 ? 1 : -1); }

} // namespace

SparseMatrix build_tensor_operator(const TensorBasisIndex& src, const TensorBasisIndex& dst, const TensorFill& fill) {
    std::vector<SparseVector> cols(src.size());
    std::vector<std::size_t> g(src.p() + 1), a(src.q() + 1);
    TensorColumn col(dst);
    for (std::size_t j = 0; j < src.size(); ++j) {
        src.decode(j, g.data(), a.data());
        fill(col, g, a);
        cols[j] = col.take();
    }
    return SparseMatrix::from_columns(dst.size(), std::move(cols));
}

void add_twisted_b(TensorColumn& out, const Algebra& A, const AlgebraMap& tau, const std::vector<std::size_t>& g,
                   const std::vector<std::size_t>& a, const Rational& sign) {
    const std::size_t n = a.size() - 1;
    const std::size_t d = A.dim;
    std::vector<const AlgVec*> slots(n);
    for (std::size_t i = 0; i < n; ++i) {
        AlgVec prod = A.mult[a[i]][a[i + 1]];
        std::size_t s = 0;
        for (std::size_t k = 0; k < n + 1; ++k) {
            if (k == i) {
                slots[s++] = &prod;
                ++k;
            } else {
                slots[s++] = &basis(d, a[k]);
            }
        }
        out.add(g.data(), slots, sign * parity(i));
    }
    AlgVec wrap = A.multiply(tau.matrix.column(a[n]), basis(d, a[0]));
    slots[0] = &wrap;
    for (std::size_t k = 1; k < n; ++k) slots[k] = &basis(d, a[k]);
    out.add(g.data(), slots, sign * parity(n));
}

namespace {

void add_rotations(TensorColumn& out, const Algebra& A, const AlgebraMap& tau, const std::vector<std::size_t>& g,
                   const std::vector<std::size_t>& a, const Rational& sign, std::size_t first, std::size_t last) {
    const std::size_t n = a.size() - 1;
    const std::size_t d = A.dim;
    std::vector<const AlgVec*> slots(n + 2);
    for (std::size_t i = first; i <= last; ++i) {
        std::size_t s = 0;
        slots[s++] = &unit_vec();
        for (std::size_t k = i; k <= n; ++k) slots[s++] = &tau.matrix.column(a[k]);
        for (std::size_t k = 0; k < i; ++k) slots[s++] = &basis(d, a[k]);
        out.add(g.data(), slots, sign * parity(n * i));
    }
}

} // namespace

void add_twisted_B(TensorColumn& out, const Algebra& A, const AlgebraMap& tau, const std::vector<std::size_t>& g,
                   const std::vector<std::size_t>& a, const Rational& sign) {
    add_rotations(out, A, tau, g, a, sign, 0, a.size() - 1);
}

void add_twisted_B_sN(TensorColumn& out, const Algebra& A, const AlgebraMap& tau, const std::vector<std::size_t>& g,
                      const std::vector<std::size_t>& a, const Rational& sign) {
    add_rotations(out, A, tau, g, a, sign, 1, a.size());
}

void add_twist(TensorColumn& out, const AlgebraMap& h, const std::vector<std::size_t>& g,
               const std::vector<std::size_t>& a, const Rational& sign) {
    std::vector<const AlgVec*> slots(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) slots[k] = &h.matrix.column(a[k]);
    out.add(g.data(), slots, sign);
}

} // namespace thl
