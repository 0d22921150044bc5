#include "thl/sequences.hpp"

#include "thl/elimination.hpp"
#include "thl/errors.hpp"
#include "thl/tensor_ops.hpp"

#include <utility>

namespace thl {

namespace {

TensorBasisIndex full_index(const Algebra& A, const FiniteGroupAction& G, std::size_t n) {
    return TensorBasisIndex(G.order, 0, A.dim, n, std::vector<bool>(n + 1, false));
}

std::vector<std::size_t> total_sizes(const MixedComplex& m, std::size_t n) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; 2 * j <= n; ++j) s.push_back(m.dims[n - 2 * j]);
    return s;
}

std::string deg(const std::string& base, std::size_t n) { return base + "_" + std::to_string(n); }

} // namespace

HomologyResult g_hochschild(const Algebra& A, const FiniteGroupAction& G, std::size_t N, bool normalized) {
    if (normalized) {
        CoinvariantComplex co = coinvariant_mixed(A, G, N + 1);
        return homology(hochschild_column(co.complex.mixed, N + 1), N);
    }
    std::vector<QuotientPresentation> mods;
    ChainComplex c;
    for (std::size_t n = 0; n <= N + 1; ++n) {
        TensorBasisIndex t = full_index(A, G, n);
        mods.push_back(quotient_by(t.size(), coinvariant_relations(A, G, t)));
        c.dims.push_back(mods.back().dim());
        if (n == 0) {
            c.d.emplace_back(0, c.dims[0]);
        } else {
            c.d.push_back(descend_map(unnormalized_b(A, G, n), mods[n], mods[n - 1],
                                      "G-Hochschild complex, b in degree " + std::to_string(n) + ": "));
        }
    }
    return homology(c, N);
}

bool ExactnessReport::all_exact() const {
    for (const auto& n : nodes)
        if (!n.exact) return false;
    return true;
}

bool ExactnessReport::all_composites_zero() const {
    for (const auto& n : nodes)
        if (!n.composite_zero) return false;
    return true;
}

ExactnessNode exactness_node(std::string node, std::string theory, std::size_t degree, std::size_t dim,
                             std::string in_name, const SparseMatrix& in, std::string out_name,
                             const SparseMatrix& out) {
    ExactnessNode e;
    e.node = std::move(node);
    e.theory = std::move(theory);
    e.degree = degree;
    e.incoming = std::move(in_name);
    e.outgoing = std::move(out_name);
    e.dim = dim;
    e.image_dim = rank(in);
    e.kernel_dim = dim - rank(out);
    e.composite_zero = (out * in).is_zero();
    e.exact = e.composite_zero && e.image_dim == e.kernel_dim;
    return e;
}

SparseMatrix map_on_homology(const SparseMatrix& f, const ChainComplex& src, const HomologyResult& src_h,
                             std::size_t m, const ChainComplex& dst, const HomologyResult& dst_h, std::size_t k,
                             const std::string& name) {
    (void)src;
    SparseMatrix images = f * src_h.cycle_basis.at(m);
    if (auto nz = (dst.d.at(k) * images).first_nonzero()) {
        auto [i, j, a] = *nz;
        throw WellDefinednessError(name + ": cycle " + std::to_string(j) + " of degree " + std::to_string(m) +
                                   " maps to a non-cycle (coordinate " + std::to_string(i) + ", residual " +
                                   to_string(a) + ")");
    }
    SparseMatrix bd = dst_h.classify(k, f * src_h.boundary_basis.at(m));
    if (auto nz = bd.first_nonzero()) {
        auto [i, j, a] = *nz;
        throw WellDefinednessError(name + ": boundary " + std::to_string(j) + " of degree " + std::to_string(m) +
                                   " maps to a nonzero class (coordinate " + std::to_string(i) + ")");
    }
    return dst_h.classify(k, f * src_h.representatives.at(m));
}

ExactnessReport sbi_sequence(const Algebra& A, const FiniteGroupAction& G, std::size_t N) {
    const std::size_t top = N + 1;
    CoinvariantComplex co = coinvariant_mixed(A, G, top);
    const MixedComplex& m = co.complex.mixed;
    ChainComplex tot = mixed_total(m, top);
    ChainComplex col = hochschild_column(m, top);
    HomologyResult hc = homology(tot, N);
    HomologyResult hh = homology(col, N);

    std::vector<SparseMatrix> I(N + 1), S(N + 1), delta(N + 2);
    for (std::size_t n = 0; n <= N; ++n) {
        BlockAssembler inc(total_sizes(m, n), {m.dims[n]});
        inc.place(0, 0, SparseMatrix::identity(m.dims[n]));
        I[n] = map_on_homology(inc.build(), col, hh, n, tot, hc, n, "I in degree " + std::to_string(n));
        if (n >= 2) {
            std::vector<std::size_t> cs = total_sizes(m, n);
            BlockAssembler shift(total_sizes(m, n - 2), cs);
            for (std::size_t j = 1; j < cs.size(); ++j) shift.place(j - 1, j, SparseMatrix::identity(cs[j]));
            S[n] = map_on_homology(shift.build(), tot, hc, n, tot, hc, n - 2, "S in degree " + std::to_string(n));
        } else {
            S[n] = SparseMatrix(0, hc.dims[n]);
        }
    }
    for (std::size_t n = 2; n <= N + 1; ++n) {
        // [w] -> [B w_0], w_0 the component of w in C_{n-2}.
        BlockAssembler conn({m.dims[n - 1]}, total_sizes(m, n - 2));
        conn.place(0, 0, m.B[n - 2]);
        delta[n] = map_on_homology(conn.build(), tot, hc, n - 2, col, hh, n - 1,
                                   "connecting map from degree " + std::to_string(n - 2));
    }

    ExactnessReport rep;
    rep.notes.push_back("connecting map lands in HH_{n-1} (classical indexing); the sequence as printed ends in HH_{n-2}");
    for (std::size_t n = 0; n <= N; ++n) {
        SparseMatrix in_hh = n >= 1 ? delta[n + 1] : SparseMatrix(hh.dims[0], 0);
        rep.nodes.push_back(exactness_node(deg("HH", n), "HH^G", n, hh.dims[n], "delta", in_hh, "I", I[n]));
        rep.nodes.push_back(exactness_node(deg("HC", n), "HC", n, hc.dims[n], "I", I[n], "S", S[n]));
        if (n >= 2)
            rep.nodes.push_back(
                exactness_node(deg("HC", n - 2), "HC", n - 2, hc.dims[n - 2], "S", S[n], "delta", delta[n]));
    }
    return rep;
}

SparseMatrix derham_d(const Algebra& A, const FiniteGroupAction& G, std::size_t n) {
    TensorBasisIndex src = tensor_index(G, A, 0, n, [&] {
        std::vector<bool> f(n + 1, true);
        f[0] = false;
        return f;
    }());
    TensorBasisIndex dst = gj_index(A, G, 0, n + 1);
    return build_tensor_operator(src, dst, [&](TensorColumn& out, const auto& g, const auto& a) {
        std::vector<std::size_t> shifted(n + 2, 0);
        for (std::size_t k = 0; k <= n; ++k) shifted[k + 1] = a[k];
        out.add_pure(g.data(), shifted.data(), Rational(1));
    });
}

namespace {

// Homology of a degree-raising complex d_up[n]: C_n -> C_{n+1}, n = 0..N, read through the reversed
// chain complex with a zero module appended below degree 0.
HomologyResult cochain_homology(const std::vector<std::size_t>& dims, const std::vector<SparseMatrix>& d_up,
                                std::size_t N) {
    ChainComplex rev;
    const std::size_t top = N + 2;
    for (std::size_t k = 0; k <= top; ++k) {
        if (k == top) {
            rev.dims.push_back(0);
            rev.d.emplace_back(dims[0], 0);
            continue;
        }
        const std::size_t n = N + 1 - k;
        rev.dims.push_back(dims[n]);
        if (k == 0) {
            rev.d.emplace_back(0, dims[n]);
        } else {
            rev.d.push_back(d_up[n]);
        }
    }
    rev.check("de Rham complex: ");
    HomologyResult r = homology(rev, N + 1);
    HomologyResult h;
    h.valid_through = N;
    for (std::size_t n = 0; n <= N; ++n) {
        const std::size_t k = N + 1 - n;
        h.dims.push_back(r.dims[k]);
        h.cycle_basis.push_back(r.cycle_basis[k]);
        h.boundary_basis.push_back(r.boundary_basis[k]);
        h.representatives.push_back(r.representatives[k]);
        h.cycle_coords.push_back(r.cycle_coords[k]);
        h.classes.push_back(r.classes[k]);
    }
    return h;
}

} // namespace

DeRhamComplex derham_complex(const Algebra& A, const FiniteGroupAction& G, std::size_t N) {
    DeRhamComplex dr;
    dr.max_degree = N;
    dr.coinvariant = coinvariant_mixed(A, G, N + 2);
    const auto& Q = dr.coinvariant.complex.modules;
    const auto& b = dr.coinvariant.complex.mixed.b;
    for (std::size_t n = 0; n <= N + 1; ++n)
        dr.d.push_back(descend_map(derham_d(A, G, n), Q[n], Q[n + 1], "de Rham d in degree " + std::to_string(n) + ": "));
    for (std::size_t n = 0; n <= N + 1; ++n) {
        SparseMatrix bd = b[n + 1] * dr.d[n];
        if (n >= 1) bd = bd + dr.d[n - 1] * b[n];
        dr.ab.push_back(quotient_by(Q[n].dim(), hstack(Q[n].dim(), {&bd, &b[n + 1]})));
    }
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= N + 1; ++n) dims.push_back(dr.ab[n].dim());
    for (std::size_t n = 0; n <= N; ++n)
        dr.d_ab.push_back(
            descend_map(dr.d[n], dr.ab[n], dr.ab[n + 1], "de Rham d on abelianized degree " + std::to_string(n) + ": "));
    dr.homology = cochain_homology(dims, dr.d_ab, N);
    return dr;
}

HomologyResult derham_homology(const Algebra& A, const FiniteGroupAction& G, std::size_t N) {
    return derham_complex(A, G, N).homology;
}

KaroubiMaps lambda_karoubi_maps(const Algebra& A, const FiniteGroupAction& G, std::size_t N) {
    KaroubiMaps km;
    if (N == 0) return km;
    DeRhamComplex dr = derham_complex(A, G, N);
    LambdaComplex lc = connes_lambda_complex(A, G, N, true);
    const auto& Q = dr.coinvariant.complex.modules;
    ChainComplex col = hochschild_column(dr.coinvariant.complex.mixed, N + 1);
    HomologyResult hh = homology(col, N);
    km.notes.push_back("HC_n computed by the Connes complex with G-coinvariants; HH and HDR on normalized modules");

    for (std::size_t n = 0; n + 1 <= N; ++n) {
        km.hdr_dims.push_back(dr.homology.dims[n]);
        km.hc_dims.push_back(lc.homology.dims[n]);
        km.hh_dims.push_back(hh.dims[n + 1]);

        TensorBasisIndex norm = gj_index(A, G, 0, n);
        TensorBasisIndex full = full_index(A, G, n);
        SparseMatrix embed = build_tensor_operator(norm, full, [&](TensorColumn& out, const auto& g, const auto& a) {
            out.add_pure(g.data(), a.data(), Rational(1));
        });
        SparseMatrix lift = lc.modules[n].projection * embed * Q[n].section;
        SparseMatrix omega = dr.ab[n].section * dr.homology.representatives[n];
        SparseMatrix gens = dr.ab[n].relation_basis;
        if (n >= 1) gens = hstack(Q[n].dim(), {&gens, &dr.d[n - 1]});
        const SparseMatrix& b = lc.complex.d[n];
        SparseMatrix M = b * lift * gens;
        SparseMatrix v = (b * lift * omega).scaled(Rational(-1));
        std::optional<SparseMatrix> x = solve(M, v);
        km.left_defined.push_back(x.has_value());
        if (x) {
            km.left.push_back(lc.homology.classify(n, lift * (omega + gens * *x)));
        } else {
            km.left.push_back(SparseMatrix(lc.homology.dims[n], dr.homology.dims[n]));
            km.notes.push_back("degree " + std::to_string(n) +
                               ": some de Rham class has no representative that is a cycle of the Connes complex");
        }
        SparseMatrix ambiguity = lift * gens * kernel_basis(M);
        km.left_well_defined.push_back(lc.homology.classify(n, ambiguity).is_zero());

        TensorBasisIndex src = full_index(A, G, n);
        SparseMatrix t = lambda_t(A, G, n);
        SparseMatrix norm_op = SparseMatrix::identity(src.size());
        SparseMatrix power = norm_op;
        for (std::size_t k = 1; k <= n; ++k) {
            power = t * power;
            norm_op = norm_op + power;
        }
        SparseMatrix s = build_tensor_operator(src, gj_index(A, G, 0, n + 1),
                                               [&](TensorColumn& out, const auto& g, const auto& a) {
                                                   std::vector<std::size_t> shifted(n + 2, 0);
                                                   for (std::size_t k = 0; k <= n; ++k) shifted[k + 1] = a[k];
                                                   out.add_pure(g.data(), shifted.data(), Rational(1));
                                               });
        SparseMatrix right = descend_map(s * norm_op, lc.modules[n], Q[n + 1],
                                         "Karoubi right map in degree " + std::to_string(n) + ": ");
        km.right.push_back(map_on_homology(right, lc.complex, lc.homology, n, col, hh, n + 1,
                                           "Karoubi right map in degree " + std::to_string(n)));
    }
    return km;
}

KaroubiReport karoubi_sequence(const Algebra& A, const FiniteGroupAction& G, std::size_t N,
                               const KaroubiRealization& realization) {
    KaroubiMaps km = realization(A, G, N);
    KaroubiReport rep;
    rep.exactness.notes = km.notes;
    for (std::size_t n = 0; n < km.left.size(); ++n) {
        KaroubiDegree k;
        k.degree = n;
        k.hdr = km.hdr_dims[n];
        k.hc = km.hc_dims[n];
        k.hh = km.hh_dims[n];
        k.left_rank = rank(km.left[n]);
        k.right_rank = rank(km.right[n]);
        k.left_defined = km.left_defined[n];
        k.left_well_defined = km.left_well_defined[n];
        k.left_injective = k.left_defined && k.left_well_defined && k.left_rank == k.hdr;
        k.composite_zero = (km.right[n] * km.left[n]).is_zero();
        k.middle_exact = k.left_defined && k.left_well_defined && k.composite_zero && k.left_rank + k.right_rank == k.hc;
        rep.degrees.push_back(k);

        ExactnessNode left = exactness_node(deg("HDR", n), "HDR^G", n, k.hdr, "0", SparseMatrix(k.hdr, 0), "L",
                                            km.left[n]);
        ExactnessNode mid = exactness_node(deg("HC", n), "HC", n, k.hc, "L", km.left[n], "R", km.right[n]);
        if (!k.left_defined || !k.left_well_defined) left.exact = mid.exact = false;
        rep.exactness.nodes.push_back(left);
        rep.exactness.nodes.push_back(mid);
    }
    return rep;
}

} // namespace thl
