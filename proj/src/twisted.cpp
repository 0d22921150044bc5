#include "thl/twisted.hpp"

#include "thl/errors.hpp"
#include "thl/tensor_ops.hpp"

namespace thl {

TensorBasisIndex algebra_tensor_index(const Algebra& A, std::size_t n, bool reduced) {
    std::vector<bool> flags(n + 1, reduced);
    flags[0] = false;
    if (reduced && n > 0) {
        auto u = A.unit_basis_index();
        if (!u || *u != 0) throw ReducedBasisError("reduced tensor slots need the unit to be basis vector 0");
    }
    return TensorBasisIndex(1, 0, A.dim, n, std::move(flags));
}

SparseMatrix twist_matrix(const Algebra& A, const AlgebraMap& g, std::size_t n, bool reduced) {
    TensorBasisIndex t = algebra_tensor_index(A, n, reduced);
    return build_tensor_operator(t, t, [&](TensorColumn& out, const auto& gs, const auto& a) {
        add_twist(out, g, gs, a, Rational(1));
    });
}

SparseMatrix twisted_b(const Algebra& A, const AlgebraMap& g, std::size_t n, bool reduced) {
    if (n == 0) throw std::invalid_argument("twisted_b needs n >= 1");
    TensorBasisIndex src = algebra_tensor_index(A, n, reduced);
    TensorBasisIndex dst = algebra_tensor_index(A, n - 1, reduced);
    return build_tensor_operator(src, dst, [&](TensorColumn& out, const auto& gs, const auto& a) {
        add_twisted_b(out, A, g, gs, a, Rational(1));
    });
}

SparseMatrix twisted_B(const Algebra& A, const AlgebraMap& g, std::size_t n) {
    TensorBasisIndex src = algebra_tensor_index(A, n, true);
    TensorBasisIndex dst = algebra_tensor_index(A, n + 1, true);
    return build_tensor_operator(src, dst, [&](TensorColumn& out, const auto& gs, const auto& a) {
        add_twisted_B(out, A, g, gs, a, Rational(1));
    });
}

HKBicomplex hk_bicomplex(const Algebra& A, const AlgebraMap& g, std::size_t N) {
    HKBicomplex hk;
    hk.max_degree = N;
    const std::size_t top = N + 1;
    for (std::size_t n = 0; n <= top; ++n) {
        SparseMatrix t = twist_matrix(A, g, n, true);
        SparseMatrix rel = SparseMatrix::identity(t.rows()) - t;
        hk.modules.push_back(quotient_by(t.rows(), rel));
    }
    MixedComplex& m = hk.mixed;
    for (std::size_t n = 0; n <= top; ++n) {
        m.dims.push_back(hk.modules[n].dim());
        if (n == 0) {
            m.b.emplace_back(0, m.dims[0]);
        } else {
            std::string ctx = "HK bicomplex, b in degree " + std::to_string(n) + ": ";
            m.b.push_back(descend_map(twisted_b(A, g, n, true), hk.modules[n], hk.modules[n - 1], ctx));
        }
    }
    for (std::size_t n = 0; n < top; ++n) {
        std::string ctx = "HK bicomplex, B in degree " + std::to_string(n) + ": ";
        m.B.push_back(descend_map(twisted_B(A, g, n), hk.modules[n], hk.modules[n + 1], ctx));
    }
    return hk;
}

HomologyResult twisted_hochschild(const Algebra& A, const AlgebraMap& g, std::size_t N) {
    HKBicomplex hk = hk_bicomplex(A, g, N);
    return homology(hochschild_column(hk.mixed, N + 1), N);
}

HomologyResult twisted_cyclic(const Algebra& A, const AlgebraMap& g, std::size_t N) {
    HKBicomplex hk = hk_bicomplex(A, g, N);
    return homology(mixed_total(hk.mixed, N + 1), N);
}

} // namespace thl
