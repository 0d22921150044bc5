#include "thl/chain_complex.hpp"

#include "thl/elimination.hpp"
#include "thl/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace thl {

void ChainComplex::check(const std::string& context) const {
    if (d.size() != dims.size()) throw ComplexError(context + "differential count does not match degree count");
    for (std::size_t n = 0; n < dims.size(); ++n) {
        std::size_t rows = n == 0 ? 0 : dims[n - 1];
        if (d[n].rows() != rows || d[n].cols() != dims[n])
            throw ComplexError(context + "d_" + std::to_string(n) + " has shape " + describe_shape(d[n]));
    }
    for (std::size_t n = 1; n + 1 < dims.size(); ++n) {
        SparseMatrix dd = d[n] * d[n + 1];
        if (auto nz = dd.first_nonzero()) {
            auto [i, j, a] = *nz;
            throw ComplexError(context + "d_" + std::to_string(n) + " d_" + std::to_string(n + 1) +
                               " != 0: basis element " + std::to_string(j) + " of degree " + std::to_string(n + 1) +
                               " maps to " + to_string(a) + " at coordinate " + std::to_string(i));
        }
    }
}

ChainComplex make_complex(std::vector<std::size_t> dims, std::vector<SparseMatrix> d) {
    ChainComplex c{std::move(dims), std::move(d)};
    c.check();
    return c;
}

SparseMatrix HomologyResult::classify(std::size_t n, const SparseMatrix& z) const {
    return classes.at(n).projection * z.select_rows(cycle_coords.at(n));
}

HomologyResult homology(const ChainComplex& c) {
    if (c.dims.size() < 2) throw ComplexError("homology needs at least two degrees");
    return homology(c, c.top() - 1);
}

HomologyResult homology(const ChainComplex& c, std::size_t through) {
    if (through >= c.top()) throw std::invalid_argument("homology: degree beyond the trustworthy range");
    c.check();
    HomologyResult h;
    h.valid_through = through;
    for (std::size_t n = 0; n <= through; ++n) {
        EchelonBasis rref;
        if (n == 0) {
            rref.dim = c.dims[0];
        } else {
            rref = row_space_rref(c.d[n]);
        }
        SparseMatrix z = kernel_from_rref(rref);
        std::vector<std::size_t> free = rref.free_columns();
        QuotientPresentation q = quotient_by(free.size(), c.d[n + 1].select_rows(free));
        h.dims.push_back(q.dim());
        h.representatives.push_back(z * q.section);
        h.boundary_basis.push_back(z * q.relation_basis);
        h.cycle_basis.push_back(std::move(z));
        h.cycle_coords.push_back(std::move(free));
        h.classes.push_back(std::move(q));
    }
    return h;
}

std::vector<std::size_t> homology_dims(const ChainComplex& c, std::size_t through) {
    if (through >= c.top()) throw std::invalid_argument("homology_dims: degree beyond the trustworthy range");
    c.check();
    std::vector<std::size_t> r(through + 2, 0);
    for (std::size_t n = 1; n <= through + 1; ++n) r[n] = rank(c.d[n]);
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= through; ++n) dims.push_back(c.dims[n] - r[n] - r[n + 1]);
    return dims;
}

ChainComplex total_complex(const BicomplexSpec& b, std::size_t n_internal) {
    using Key = BicomplexSpec::Key;
    std::vector<std::vector<Key>> comps(n_internal + 1);
    for (auto& [k, dim] : b.dims)
        if (k.first + k.second <= n_internal) comps[k.first + k.second].push_back(k);
    for (auto& v : comps) std::sort(v.begin(), v.end());

    auto block_sizes = [&](std::size_t n) {
        std::vector<std::size_t> s;
        for (auto& k : comps[n]) s.push_back(b.dims.at(k));
        return s;
    };
    auto position = [&](std::size_t n, const Key& k) -> std::ptrdiff_t {
        auto it = std::find(comps[n].begin(), comps[n].end(), k);
        return it == comps[n].end() ? -1 : it - comps[n].begin();
    };

    ChainComplex c;
    for (std::size_t n = 0; n <= n_internal; ++n) {
        std::size_t total = 0;
        for (auto s : block_sizes(n)) total += s;
        c.dims.push_back(total);
    }
    c.d.emplace_back(0, c.dims[0]);
    for (std::size_t n = 1; n <= n_internal; ++n) {
        BlockAssembler asmb(block_sizes(n - 1), block_sizes(n));
        for (std::size_t src = 0; src < comps[n].size(); ++src) {
            auto [p, q] = comps[n][src];
            if (p > 0) {
                auto it = b.horizontal.find({p, q});
                std::ptrdiff_t dst = position(n - 1, {p - 1, q});
                if (it != b.horizontal.end() && dst >= 0) asmb.place(static_cast<std::size_t>(dst), src, it->second);
            }
            if (q > 0) {
                auto it = b.vertical.find({p, q});
                std::ptrdiff_t dst = position(n - 1, {p, q - 1});
                if (it != b.vertical.end() && dst >= 0)
                    asmb.place(static_cast<std::size_t>(dst), src, it->second, Rational(p % 2 == 0 ? 1 : -1));
            }
        }
        c.d.push_back(asmb.build());
    }
    c.check("total complex: ");
    return c;
}

BicomplexSpec mixed_bicomplex(const MixedComplex& m, std::size_t n_internal) {
    if (m.top() < n_internal) throw std::invalid_argument("mixed complex is shorter than the requested truncation");
    BicomplexSpec b;
    for (std::size_t p = 0; 2 * p <= n_internal; ++p) {
        for (std::size_t q = p; p + q <= n_internal; ++q) {
            std::size_t deg = q - p;
            b.dims[{p, q}] = m.dims[deg];
            if (deg >= 1) b.vertical[{p, q}] = m.b[deg].scaled(Rational(p % 2 == 0 ? 1 : -1));
            if (p >= 1) b.horizontal[{p, q}] = m.B[deg];
        }
    }
    return b;
}

ChainComplex mixed_total(const MixedComplex& m, std::size_t n_internal) {
    return total_complex(mixed_bicomplex(m, n_internal), n_internal);
}

ChainComplex hochschild_column(const MixedComplex& m, std::size_t top) {
    ChainComplex c;
    for (std::size_t n = 0; n <= top; ++n) {
        c.dims.push_back(m.dims.at(n));
        c.d.push_back(n == 0 ? SparseMatrix(0, m.dims[0]) : m.b.at(n));
    }
    c.check("Hochschild column: ");
    return c;
}

std::vector<SparseMatrix> induced_on_homology(const std::vector<SparseMatrix>& f, const ChainComplex& src,
                                              const HomologyResult& src_h, const ChainComplex& dst,
                                              const HomologyResult& dst_h) {
    std::size_t through = std::min(src_h.valid_through, dst_h.valid_through);
    for (std::size_t n = 1; n <= through + 1 && n < f.size(); ++n) {
        SparseMatrix lhs = f[n - 1] * src.d[n];
        SparseMatrix rhs = dst.d[n] * f[n];
        SparseMatrix diff = lhs - rhs;
        if (auto nz = diff.first_nonzero()) {
            auto [i, j, a] = *nz;
            throw ChainMapError("f d != d f in degree " + std::to_string(n) + ": basis element " + std::to_string(j) +
                                ", coordinate " + std::to_string(i) + ", residual " + to_string(a));
        }
    }
    std::vector<SparseMatrix> out;
    for (std::size_t n = 0; n <= through; ++n) out.push_back(dst_h.classify(n, f.at(n) * src_h.representatives[n]));
    return out;
}

} // namespace thl
