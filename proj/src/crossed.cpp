#include "thl/crossed.hpp"

#include "thl/elimination.hpp"
#include "thl/errors.hpp"
#include "thl/tensor_ops.hpp"
#include "thl/twisted.hpp"

#include <algorithm>
#include <functional>

namespace thl {

namespace {

Rational parity(std::size_t k) { return Rational(k % 2 == 0 ? 1 : -1); }

std::string loc(std::size_t p, std::size_t q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::vector<bool> normalized_flags(std::size_t q) {
    std::vector<bool> f(q + 1, true);
    f[0] = false;
    return f;
}

} // namespace

TensorBasisIndex gj_index(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q) {
    return tensor_index(G, A, p, q, normalized_flags(q));
}

SparseMatrix gj_bbar(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q) {
    TensorBasisIndex src = gj_index(A, G, p, q);
    if (p == 0) return SparseMatrix(0, src.size());
    TensorBasisIndex dst = gj_index(A, G, p - 1, q);
    return build_tensor_operator(src, dst, [&](TensorColumn& out, const auto& g, const auto& a) {
        std::vector<std::size_t> h(p);
        for (std::size_t i = 0; i < p; ++i) {
            std::size_t s = 0;
            for (std::size_t k = 0; k <= p; ++k) {
                if (k == i) {
                    h[s++] = G.mul(g[k], g[k + 1]);
                    ++k;
                } else {
                    h[s++] = g[k];
                }
            }
            out.add_pure(h.data(), a.data(), parity(i));
        }
        h[0] = G.mul(g[p], g[0]);
        for (std::size_t k = 1; k < p; ++k) h[k] = g[k];
        add_twist(out, G.action[g[p]], h, a, parity(p));
    });
}

SparseMatrix gj_Bbar(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q) {
    TensorBasisIndex src = gj_index(A, G, p, q);
    TensorBasisIndex dst = gj_index(A, G, p + 1, q);
    return build_tensor_operator(src, dst, [&](TensorColumn& out, const auto& g, const auto& a) {
        std::vector<std::size_t> h(p + 2);
        for (std::size_t i = 0; i <= p; ++i) {
            // (e, g_{p-i+1}, .., g_p, g_0, .., g_{p-i} / h_i(a)), h_i = g_{p-i+1} ... g_p
            std::size_t s = 0;
            h[s++] = G.identity;
            for (std::size_t k = p - i + 1; k <= p; ++k) h[s++] = g[k];
            for (std::size_t k = 0; k <= p - i; ++k) h[s++] = g[k];
            std::size_t hi = G.product(g.data() + (p - i + 1), i);
            add_twist(out, G.action[hi], h, a, parity(i * p));
        }
    });
}

SparseMatrix gj_T(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q) {
    TensorBasisIndex t = gj_index(A, G, p, q);
    return build_tensor_operator(t, t, [&](TensorColumn& out, const auto& g, const auto& a) {
        add_twist(out, G.action[G.product(g.data(), p + 1)], g, a, Rational(1));
    });
}

std::pair<SparseMatrix, SparseMatrix> gj_twisted_bB(const Algebra& A, const FiniteGroupAction& G, std::size_t p,
                                                    std::size_t q) {
    TensorBasisIndex src = gj_index(A, G, p, q);
    auto tau = [&](const std::vector<std::size_t>& g) -> const AlgebraMap& {
        return G.action[G.inverse[G.product(g.data(), p + 1)]];
    };
    SparseMatrix b(0, src.size());
    if (q >= 1) {
        b = build_tensor_operator(src, gj_index(A, G, p, q - 1), [&](TensorColumn& out, const auto& g, const auto& a) {
            add_twisted_b(out, A, tau(g), g, a, Rational(1));
        });
    }
    SparseMatrix B = build_tensor_operator(src, gj_index(A, G, p, q + 1), [&](TensorColumn& out, const auto& g, const auto& a) {
        add_twisted_B(out, A, tau(g), g, a, Rational(1));
    });
    return {std::move(b), std::move(B)};
}

SparseMatrix gj_b(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q) {
    if (q == 0) throw std::invalid_argument("gj_b needs q >= 1");
    TensorBasisIndex src = gj_index(A, G, p, q);
    return build_tensor_operator(src, gj_index(A, G, p, q - 1), [&](TensorColumn& out, const auto& g, const auto& a) {
        const AlgebraMap& tau = G.action[G.inverse[G.product(g.data(), p + 1)]];
        add_twisted_b(out, A, tau, g, a, parity(p));
    });
}

SparseMatrix gj_B(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q) {
    TensorBasisIndex src = gj_index(A, G, p, q);
    SparseMatrix sN = build_tensor_operator(src, gj_index(A, G, p, q + 1), [&](TensorColumn& out, const auto& g, const auto& a) {
        const AlgebraMap& tau = G.action[G.inverse[G.product(g.data(), p + 1)]];
        add_twisted_B_sN(out, A, tau, g, a, Rational(1));
    });
    return (gj_T(A, G, p, q + 1) * sN).scaled(-parity(p));
}

SparseMatrix beta_map(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q) {
    if (p == 0) throw std::invalid_argument("beta_map needs p >= 1");
    TensorBasisIndex t = gj_index(A, G, p, q);
    return build_tensor_operator(t, t, [&](TensorColumn& out, const auto& g, const auto& a) {
        std::vector<std::size_t> h(g.begin() + 1, g.end());
        h.push_back(G.product(g.data(), p + 1));
        out.add_pure(h.data(), a.data(), Rational(1));
    });
}

namespace {

struct GJOps {
    SparseMatrix b, B, bbar, Bbar, T;
    bool has_b = false;
};

std::string residual_detail(const SparseMatrix& r, const TensorBasisIndex& src, const TensorBasisIndex& dst,
                            const FiniteGroupAction& G, const Algebra& A) {
    auto nz = r.first_nonzero();
    if (!nz) return "";
    auto [i, j, a] = *nz;
    return "source " + tensor_label(src, j, &G, A) + " -> " + to_string(a) + " at " + tensor_label(dst, i, &G, A);
}

std::string residual_detail_plain(const SparseMatrix& r) {
    auto nz = r.first_nonzero();
    if (!nz) return "";
    auto [i, j, a] = *nz;
    return "column " + std::to_string(j) + " -> " + to_string(a) + " at row " + std::to_string(i);
}

} // namespace

std::vector<IdentityCheck> verify_gj_identities(const Algebra& A, const FiniteGroupAction& G, std::size_t max_total) {
    std::map<std::pair<std::size_t, std::size_t>, GJOps> ops;
    std::map<std::pair<std::size_t, std::size_t>, TensorBasisIndex> idx;
    const std::size_t top = max_total + 2;
    for (std::size_t p = 0; p <= top; ++p)
        for (std::size_t q = 0; p + q <= top; ++q) {
            idx[{p, q}] = gj_index(A, G, p, q);
            GJOps& o = ops[{p, q}];
            o.T = gj_T(A, G, p, q);
            o.bbar = gj_bbar(A, G, p, q);
            if (q >= 1) {
                o.b = gj_b(A, G, p, q);
                o.has_b = true;
            }
            if (p + q < top) {
                o.B = gj_B(A, G, p, q);
                o.Bbar = gj_Bbar(A, G, p, q);
            }
        }

    std::vector<IdentityCheck> out;
    auto record = [&](const std::string& name, std::size_t p, std::size_t q, const SparseMatrix& residual,
                      const TensorBasisIndex& src, const TensorBasisIndex& dst) {
        IdentityCheck c;
        c.name = name;
        c.location = loc(p, q);
        c.pass = residual.is_zero();
        if (!c.pass) c.detail = residual_detail(residual, src, dst, G, A);
        out.push_back(std::move(c));
    };

    for (std::size_t p = 0; p <= max_total; ++p)
        for (std::size_t q = 0; p + q <= max_total; ++q) {
            const GJOps& o = ops.at({p, q});
            const auto& I = idx.at({p, q});
            SparseMatrix id = SparseMatrix::identity(I.size());
            if (q >= 2) record("b^2 = 0", p, q, ops.at({p, q - 1}).b * o.b, I, idx.at({p, q - 2}));
            record("B^2 = 0", p, q, ops.at({p, q + 1}).B * o.B, I, idx.at({p, q + 2}));
            if (p >= 2) record("bbar^2 = 0", p, q, ops.at({p - 1, q}).bbar * o.bbar, I, idx.at({p - 2, q}));
            {
                SparseMatrix lhs = ops.at({p, q + 1}).b * o.B;
                if (q >= 1) lhs = lhs + ops.at({p, q - 1}).B * o.b;
                record("bB + Bb = 1 - T", p, q, lhs - (id - o.T), I, I);
            }
            if (p >= 1)
                record("bbar B + B bbar = 0", p, q, ops.at({p, q + 1}).bbar * o.B + ops.at({p - 1, q}).B * o.bbar, I,
                       idx.at({p - 1, q + 1}));
            if (p >= 1 && q >= 1)
                record("b bbar + bbar b = 0", p, q, ops.at({p - 1, q}).b * o.bbar + ops.at({p, q - 1}).bbar * o.b, I,
                       idx.at({p - 1, q - 1}));
            if (q >= 1) record("[T, b] = 0", p, q, ops.at({p, q - 1}).T * o.b - o.b * o.T, I, idx.at({p, q - 1}));
            if (p >= 1) record("[T, bbar] = 0", p, q, ops.at({p - 1, q}).T * o.bbar - o.bbar * o.T, I, idx.at({p - 1, q}));
            record("[T, B] = 0", p, q, ops.at({p, q + 1}).T * o.B - o.B * o.T, I, idx.at({p, q + 1}));
        }

    // Full pair (b + bbar, B + T Bbar') with Bbar' = -T^-1 Bbar, i.e. horizontal part -Bbar, on modules
    // with g_1, .., g_p != e.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> nondeg, deg;
    for (auto& [k, t] : idx) {
        std::vector<std::size_t> g(k.first + 1), a(k.second + 1);
        for (std::size_t j = 0; j < t.size(); ++j) {
            t.decode(j, g.data(), a.data());
            bool degenerate = false;
            for (std::size_t s = 1; s <= k.first; ++s) degenerate = degenerate || g[s] == G.identity;
            (degenerate ? deg : nondeg)[k].push_back(j);
        }
    }
    auto restrict_op = [&](const SparseMatrix& m, std::pair<std::size_t, std::size_t> s,
                           std::pair<std::size_t, std::size_t> t, const std::string& name) {
        if (!deg[s].empty()) {
            SparseMatrix leak = m.select_columns(deg[s]).select_rows(nondeg[t]);
            IdentityCheck c;
            c.name = name + " preserves group-degenerate tensors";
            c.location = loc(s.first, s.second);
            c.pass = leak.is_zero();
            if (!c.pass) c.detail = residual_detail_plain(leak);
            out.push_back(std::move(c));
        }
        return m.select_columns(nondeg[s]).select_rows(nondeg[t]);
    };
    auto sizes = [&](std::size_t n) {
        std::vector<std::size_t> s;
        for (std::size_t p = 0; p <= n; ++p) s.push_back(nondeg[{p, n - p}].size());
        return s;
    };
    std::vector<SparseMatrix> Dv(top + 1), Dh(top);
    for (std::size_t n = 1; n <= top; ++n) {
        BlockAssembler asmb(sizes(n - 1), sizes(n));
        for (std::size_t p = 0; p <= n; ++p) {
            std::size_t q = n - p;
            if (q >= 1) asmb.place(p, p, restrict_op(ops.at({p, q}).b, {p, q}, {p, q - 1}, "b"));
            if (p >= 1) asmb.place(p - 1, p, restrict_op(ops.at({p, q}).bbar, {p, q}, {p - 1, q}, "bbar"));
        }
        Dv[n] = asmb.build();
    }
    for (std::size_t n = 0; n < top; ++n) {
        BlockAssembler asmb(sizes(n + 1), sizes(n));
        for (std::size_t p = 0; p <= n; ++p) {
            std::size_t q = n - p;
            asmb.place(p, p, restrict_op(ops.at({p, q}).B, {p, q}, {p, q + 1}, "B"));
            asmb.place(p + 1, p, restrict_op(ops.at({p, q}).Bbar, {p, q}, {p + 1, q}, "Bbar"), Rational(-1));
        }
        Dh[n] = asmb.build();
    }
    auto record_total = [&](const std::string& name, std::size_t n, const SparseMatrix& r) {
        IdentityCheck c;
        c.name = name;
        c.location = "n=" + std::to_string(n);
        c.pass = r.is_zero();
        if (!c.pass) c.detail = residual_detail_plain(r);
        out.push_back(std::move(c));
    };
    for (std::size_t n = 0; n <= max_total; ++n) {
        if (n >= 1 && n + 1 <= top) record_total("pair: (b + bbar)^2 = 0", n + 1, Dv[n] * Dv[n + 1]);
        if (n + 1 < top) record_total("pair: (B + T Bbar')^2 = 0", n, Dh[n + 1] * Dh[n]);
        SparseMatrix mixed = Dv[n + 1] * Dh[n];
        if (n >= 1) mixed = mixed + Dh[n - 1] * Dv[n];
        record_total("pair: (b + bbar)(B + T Bbar') + (B + T Bbar')(b + bbar) = 0", n, mixed);
    }
    return out;
}

namespace {

using Key = std::pair<std::size_t, std::size_t>;

// Builds a mixed complex on quotient modules given the raw operators.
QuotientMixedComplex descend_mixed(std::vector<QuotientPresentation> modules,
                                   const std::function<SparseMatrix(std::size_t)>& raw_b,
                                   const std::function<SparseMatrix(std::size_t)>& raw_B, const std::string& what) {
    QuotientMixedComplex c;
    c.modules = std::move(modules);
    const std::size_t top = c.modules.size() - 1;
    for (std::size_t n = 0; n <= top; ++n) {
        c.mixed.dims.push_back(c.modules[n].dim());
        if (n == 0) {
            c.mixed.b.emplace_back(0, c.mixed.dims[0]);
        } else {
            c.mixed.b.push_back(descend_map(raw_b(n), c.modules[n], c.modules[n - 1],
                                            what + ", b in degree " + std::to_string(n) + ": "));
        }
    }
    for (std::size_t n = 0; n < top; ++n)
        c.mixed.B.push_back(descend_map(raw_B(n), c.modules[n], c.modules[n + 1],
                                        what + ", B in degree " + std::to_string(n) + ": "));
    return c;
}

QuotientPresentation one_minus_T(const Algebra& A, const FiniteGroupAction& G, std::size_t p, std::size_t q) {
    SparseMatrix T = gj_T(A, G, p, q);
    return quotient_by(T.rows(), SparseMatrix::identity(T.rows()) - T);
}

} // namespace

PropositionBicomplex proposition_bicomplex(const Algebra& A, const FiniteGroupAction& G, std::size_t N) {
    PropositionBicomplex pb;
    pb.max_degree = N;
    const std::size_t top = N + 1;
    for (std::size_t p = 0; p <= top; ++p)
        for (std::size_t q = 0; p + q <= top; ++q) pb.modules[{p, q}] = one_minus_T(A, G, p, q);

    auto ctx = [](const char* op, std::size_t p, std::size_t q) {
        return std::string("Proposition bicomplex, ") + op + " on " + loc(p, q) + ": ";
    };
    std::map<Key, SparseMatrix> b, bbar, B;
    for (std::size_t p = 0; p <= top; ++p)
        for (std::size_t q = 0; p + q <= top; ++q) {
            const auto& src = pb.modules.at({p, q});
            if (q >= 1) b[{p, q}] = descend_map(gj_b(A, G, p, q), src, pb.modules.at({p, q - 1}), ctx("b", p, q));
            if (p >= 1)
                bbar[{p, q}] = descend_map(gj_bbar(A, G, p, q), src, pb.modules.at({p - 1, q}), ctx("bbar", p, q));
            if (p + q < top) B[{p, q}] = descend_map(gj_B(A, G, p, q), src, pb.modules.at({p, q + 1}), ctx("B", p, q));
        }

    auto sizes = [&](std::size_t n) {
        std::vector<std::size_t> s;
        for (std::size_t p = 0; p <= n; ++p) s.push_back(pb.modules.at({p, n - p}).dim());
        return s;
    };
    MixedComplex& m = pb.mixed;
    for (std::size_t n = 0; n <= top; ++n) {
        std::size_t total = 0;
        for (auto s : sizes(n)) total += s;
        m.dims.push_back(total);
        if (n == 0) {
            m.b.emplace_back(0, total);
            continue;
        }
        BlockAssembler asmb(sizes(n - 1), sizes(n));
        for (std::size_t p = 0; p <= n; ++p) {
            std::size_t q = n - p;
            if (q >= 1) asmb.place(p, p, b.at({p, q}));
            if (p >= 1) asmb.place(p - 1, p, bbar.at({p, q}));
        }
        m.b.push_back(asmb.build());
    }
    for (std::size_t n = 0; n < top; ++n) {
        BlockAssembler asmb(sizes(n + 1), sizes(n));
        for (std::size_t p = 0; p <= n; ++p) asmb.place(p, p, B.at({p, n - p}));
        m.B.push_back(asmb.build());
    }
    pb.homology = homology(mixed_total(m, top), N);
    return pb;
}

QuotientMixedComplex hcG_mixed(const Algebra& A, const FiniteGroupAction& G, std::size_t N) {
    std::vector<QuotientPresentation> mods;
    for (std::size_t q = 0; q <= N + 1; ++q) mods.push_back(one_minus_T(A, G, 0, q));
    return descend_mixed(
        std::move(mods), [&](std::size_t n) { return gj_b(A, G, 0, n); },
        [&](std::size_t n) { return gj_B(A, G, 0, n); }, "HC^G bicomplex");
}

HomologyResult hcG_bicomplex(const Algebra& A, const FiniteGroupAction& G, std::size_t N) {
    QuotientMixedComplex c = hcG_mixed(A, G, N);
    return homology(mixed_total(c.mixed, N + 1), N);
}

namespace {

// Columns m - h.m, h ranging over acting (group-slot map, algebra automorphism) pairs.
SparseMatrix action_relations(const TensorBasisIndex& t,
                              const std::vector<std::pair<std::function<std::size_t(std::size_t)>, const AlgebraMap*>>& acts) {
    std::vector<SparseVector> cols;
    std::vector<std::size_t> g(t.p() + 1), a(t.q() + 1);
    TensorColumn col(t);
    for (auto& [gmap, h] : acts) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            t.decode(j, g.data(), a.data());
            std::vector<std::size_t> hg(g.size());
            for (std::size_t k = 0; k < g.size(); ++k) hg[k] = gmap(g[k]);
            col.add_basis(j, Rational(1));
            add_twist(col, *h, hg, a, Rational(-1));
            SparseVector v = col.take();
            if (!v.empty()) cols.push_back(std::move(v));
        }
    }
    return SparseMatrix::from_columns(t.size(), std::move(cols));
}

} // namespace

SparseMatrix coinvariant_relations(const Algebra& A, const FiniteGroupAction& G, const TensorBasisIndex& t) {
    (void)A;
    std::vector<std::pair<std::function<std::size_t(std::size_t)>, const AlgebraMap*>> acts;
    for (std::size_t h = 0; h < G.order; ++h)
        acts.emplace_back([&G, h](std::size_t x) { return G.conjugate(h, x); }, &G.action[h]);
    return action_relations(t, acts);
}

CoinvariantComplex coinvariant_mixed(const Algebra& A, const FiniteGroupAction& G, std::size_t top) {
    ConjugacyData cd = conjugacy_data(G);
    std::vector<QuotientPresentation> mods;
    CoinvariantComplex out;
    for (std::size_t q = 0; q <= top; ++q) {
        TensorBasisIndex t = gj_index(A, G, 0, q);
        mods.push_back(quotient_by(t.size(), coinvariant_relations(A, G, t)));
        std::vector<std::size_t> cls;
        std::vector<std::size_t> g(1), a(q + 1);
        for (auto c : mods.back().free_coords) {
            t.decode(c, g.data(), a.data());
            cls.push_back(cd.class_of[g[0]]);
        }
        out.coord_class.push_back(std::move(cls));
    }
    out.complex = descend_mixed(
        std::move(mods), [&](std::size_t n) { return gj_b(A, G, 0, n); },
        [&](std::size_t n) { return gj_B(A, G, 0, n); }, "coinvariant bicomplex");
    return out;
}

HomologyResult coinvariant_bicomplex(const Algebra& A, const FiniteGroupAction& G, std::size_t N) {
    CoinvariantComplex c = coinvariant_mixed(A, G, N + 1);
    return homology(mixed_total(c.complex.mixed, N + 1), N);
}

std::vector<Stalk> conjugacy_decomposition(const Algebra& A, const FiniteGroupAction& G, std::size_t N) {
    ConjugacyData cd = conjugacy_data(G);
    std::vector<Stalk> out;
    for (std::size_t c = 0; c < cd.classes.size(); ++c) {
        Stalk s;
        s.representative = cd.representative(c);
        s.centralizer = cd.centralizers[c];
        const std::size_t g = s.representative;
        const AlgebraMap& tau = G.action[G.inverse[g]];
        const AlgebraMap& act = G.action[g];
        std::vector<QuotientPresentation> mods;
        for (std::size_t q = 0; q <= N + 1; ++q) {
            TensorBasisIndex t = algebra_tensor_index(A, q, true);
            std::vector<std::pair<std::function<std::size_t(std::size_t)>, const AlgebraMap*>> acts;
            for (auto h : s.centralizer) acts.emplace_back([](std::size_t x) { return x; }, &G.action[h]);
            mods.push_back(quotient_by(t.size(), action_relations(t, acts)));
        }
        auto raw_b = [&](std::size_t n) {
            return build_tensor_operator(algebra_tensor_index(A, n, true), algebra_tensor_index(A, n - 1, true),
                                         [&](TensorColumn& out, const auto& gs, const auto& a) {
                                             add_twisted_b(out, A, tau, gs, a, Rational(1));
                                         });
        };
        auto raw_B = [&](std::size_t n) {
            TensorBasisIndex dst = algebra_tensor_index(A, n + 1, true);
            SparseMatrix sN = build_tensor_operator(algebra_tensor_index(A, n, true), dst,
                                                    [&](TensorColumn& out, const auto& gs, const auto& a) {
                                                        add_twisted_B_sN(out, A, tau, gs, a, Rational(1));
                                                    });
            return (twist_matrix(A, act, n + 1, true) * sN).scaled(Rational(-1));
        };
        s.complex = descend_mixed(std::move(mods), raw_b, raw_B, "stalk over " + G.names[g]);
        s.dims = homology_dims(mixed_total(s.complex.mixed, N + 1), N);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

// Block-diagonal map between two mixed totals given per-degree maps f[m]: C_m -> D_m, sign (-1)^j on column j.
std::vector<SparseMatrix> total_map(const MixedComplex& src, const MixedComplex& dst, const std::vector<SparseMatrix>& f,
                                    std::size_t n_internal, bool alternate) {
    std::vector<SparseMatrix> out;
    for (std::size_t n = 0; n <= n_internal; ++n) {
        std::vector<std::size_t> rs, cs;
        for (std::size_t j = 0; 2 * j <= n; ++j) {
            rs.push_back(dst.dims[n - 2 * j]);
            cs.push_back(src.dims[n - 2 * j]);
        }
        BlockAssembler asmb(rs, cs);
        for (std::size_t j = 0; 2 * j <= n; ++j)
            asmb.place(j, j, f[n - 2 * j], alternate ? parity(j) : Rational(1));
        out.push_back(asmb.build());
    }
    return out;
}

} // namespace

TheoremMapReport theorem_map_f(const Algebra& A, const FiniteGroupAction& G, std::size_t g, std::size_t N) {
    const std::size_t top = N + 1;
    TheoremMapReport rep;
    rep.element = g;
    const std::size_t ginv = G.inverse[g];
    ConjugacyData cd = conjugacy_data(G);
    rep.stalk_class = cd.class_of[ginv];

    HKBicomplex hk = hk_bicomplex(A, G.action[g], N);
    ChainComplex src = mixed_total(hk.mixed, top);
    HomologyResult src_h = homology(src, N);

    CoinvariantComplex co = coinvariant_mixed(A, G, top);
    ChainComplex dst = mixed_total(co.complex.mixed, top);
    HomologyResult dst_h = homology(dst, N);

    std::vector<SparseMatrix> iota, proj;
    for (std::size_t m = 0; m <= top; ++m) {
        SparseMatrix embed = build_tensor_operator(algebra_tensor_index(A, m, true), gj_index(A, G, 0, m),
                                                   [&](TensorColumn& out, const auto&, const auto& a) {
                                                       out.add_pure(&ginv, a.data(), Rational(1));
                                                   });
        iota.push_back(co.complex.modules[m].projection * embed * hk.modules[m].section);
        std::vector<SparseVector> cols(co.complex.mixed.dims[m]);
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (co.coord_class[m][k] == rep.stalk_class) cols[k].emplace_back(k, Rational(1));
        const std::size_t dim = cols.size();
        proj.push_back(SparseMatrix::from_columns(dim, std::move(cols)));
    }
    std::vector<SparseMatrix> f = total_map(hk.mixed, co.complex.mixed, iota, top, true);
    std::vector<SparseMatrix> pi = total_map(co.complex.mixed, co.complex.mixed, proj, top, false);
    rep.induced = induced_on_homology(f, src, src_h, dst, dst_h);
    std::vector<SparseMatrix> pi_h = induced_on_homology(pi, dst, dst_h, dst, dst_h);

    for (std::size_t n = 0; n <= N; ++n) {
        rep.source_dims.push_back(src_h.dims[n]);
        rep.target_dims.push_back(dst_h.dims[n]);
        std::size_t r = rank(rep.induced[n]);
        std::size_t s = rank(pi_h[n]);
        rep.rank.push_back(r);
        rep.stalk_dims.push_back(s);
        rep.injective.push_back(r == src_h.dims[n]);
        rep.within_stalk.push_back(pi_h[n] * rep.induced[n] == rep.induced[n]);
        rep.onto_stalk.push_back(r == s);
    }
    return rep;
}

SparseMatrix lambda_t(const Algebra& A, const FiniteGroupAction& G, std::size_t n) {
    TensorBasisIndex t(G.order, 0, A.dim, n, std::vector<bool>(n + 1, false));
    return build_tensor_operator(t, t, [&](TensorColumn& out, const auto& g, const auto& a) {
        const AlgebraMap& ginv = G.action[G.inverse[g[0]]];
        std::vector<const AlgVec*> slots(n + 1);
        slots[0] = &ginv.matrix.column(a[n]);
        std::vector<AlgVec> plain(n);
        for (std::size_t k = 0; k < n; ++k) {
            plain[k] = AlgVec{{a[k], Rational(1)}};
            slots[k + 1] = &plain[k];
        }
        out.add(g.data(), slots, parity(n));
    });
}

SparseMatrix unnormalized_b(const Algebra& A, const FiniteGroupAction& G, std::size_t n) {
    TensorBasisIndex src(G.order, 0, A.dim, n, std::vector<bool>(n + 1, false));
    TensorBasisIndex dst(G.order, 0, A.dim, n - 1, std::vector<bool>(n, false));
    return build_tensor_operator(src, dst, [&](TensorColumn& out, const auto& g, const auto& a) {
        add_twisted_b(out, A, G.action[G.inverse[g[0]]], g, a, Rational(1));
    });
}

LambdaComplex connes_lambda_complex(const Algebra& A, const FiniteGroupAction& G, std::size_t N, bool coinvariants) {
    LambdaComplex lc;
    lc.coinvariants = coinvariants;
    const std::size_t top = N + 1;
    for (std::size_t n = 0; n <= top; ++n) {
        TensorBasisIndex t(G.order, 0, A.dim, n, std::vector<bool>(n + 1, false));
        SparseMatrix rel = SparseMatrix::identity(t.size()) - lambda_t(A, G, n);
        if (coinvariants) {
            SparseMatrix co = coinvariant_relations(A, G, t);
            rel = hstack(t.size(), {&rel, &co});
        }
        lc.modules.push_back(quotient_by(t.size(), rel));
    }
    for (std::size_t n = 0; n <= top; ++n) {
        lc.complex.dims.push_back(lc.modules[n].dim());
        if (n == 0) {
            lc.complex.d.emplace_back(0, lc.modules[0].dim());
        } else {
            lc.complex.d.push_back(descend_map(unnormalized_b(A, G, n), lc.modules[n], lc.modules[n - 1],
                                               "lambda complex, b in degree " + std::to_string(n) + ": "));
        }
    }
    lc.homology = homology(lc.complex, N);
    return lc;
}

ChainComplex u_complex(const MixedComplex& m, std::size_t n_internal) {
    if (m.top() < n_internal) throw std::invalid_argument("u-complex: mixed complex too short");
    ChainComplex c;
    // Offsets of the x u^{-j} components inside degree n.
    std::vector<std::vector<std::size_t>> off(n_internal + 1);
    for (std::size_t n = 0; n <= n_internal; ++n) {
        std::size_t o = 0;
        for (std::size_t j = 0; 2 * j <= n; ++j) {
            off[n].push_back(o);
            o += m.dims[n - 2 * j];
        }
        c.dims.push_back(o);
    }
    c.d.emplace_back(0, c.dims[0]);
    for (std::size_t n = 1; n <= n_internal; ++n) {
        std::vector<SparseVector> cols(c.dims[n]);
        for (std::size_t j = 0; 2 * j <= n; ++j) {
            std::size_t deg = n - 2 * j;
            for (std::size_t x = 0; x < m.dims[deg]; ++x) {
                SparseVector& col = cols[off[n][j] + x];
                // b(x) u^{-j}
                if (deg >= 1 && 2 * j <= n - 1)
                    for (auto& [i, a] : m.b[deg].column(x)) col.emplace_back(off[n - 1][j] + i, a);
                // u B(x) u^{-j} = B(x) u^{-(j-1)}; u u^0 = u lies in u k[u] and vanishes in W.
                if (j >= 1)
                    for (auto& [i, a] : m.B[deg].column(x)) col.emplace_back(off[n - 1][j - 1] + i, a);
            }
        }
        c.d.push_back(SparseMatrix::from_columns(c.dims[n - 1], std::move(cols)));
    }
    c.check("u-complex: ");
    return c;
}

UComplexReport u_complex_equivalence(const MixedComplex& m, std::size_t N) {
    UComplexReport r;
    r.u_dims = homology_dims(u_complex(m, N + 1), N);
    r.bicomplex_dims = homology_dims(total_complex(mixed_bicomplex(m, N + 1), N + 1), N);
    r.equal = r.u_dims == r.bicomplex_dims;
    return r;
}

} // namespace thl
