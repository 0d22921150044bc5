#include "thl/elimination.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace thl {

namespace {

struct Overflow {};

template <class Int>
struct Arith;

template <>
struct Arith<std::int64_t> {
    using Int = std::int64_t;
    static constexpr Int limit = Int(1) << 62;

    static Int check(__int128 x) {
        if (x >= limit || x <= -limit) throw Overflow{};
        return static_cast<Int>(x);
    }
    static bool is_zero(Int x) { return x == 0; }
    static int sign(Int x) { return (x > 0) - (x < 0); }
    static Int neg(Int x) { return -x; }
    static Int mul(Int a, Int x) { return check(static_cast<__int128>(a) * x); }
    static Int combo(Int a, Int x, Int b, Int y) {
        return check(static_cast<__int128>(a) * x - static_cast<__int128>(b) * y);
    }
    static Int gcd(Int a, Int b) {
        return static_cast<Int>(std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a),
                                         static_cast<std::uint64_t>(b < 0 ? -b : b)));
    }
    static Int divexact(Int a, Int g) { return a / g; }
    static Int from(const Integer& z) {
        if (!z.fits_slong_p()) throw Overflow{};
        long v = z.get_si();
        if (v >= limit || v <= -limit) throw Overflow{};
        return static_cast<Int>(v);
    }
    static Integer to_integer(Int x) { return Integer(static_cast<long>(x)); }
};

template <>
struct Arith<Integer> {
    using Int = Integer;
    static bool is_zero(const Int& x) { return sgn(x) == 0; }
    static int sign(const Int& x) { return sgn(x); }
    static Int neg(const Int& x) { return -x; }
    static Int mul(const Int& a, const Int& x) { return a * x; }
    static Int combo(const Int& a, const Int& x, const Int& b, const Int& y) { return a * x - b * y; }
    static Int gcd(const Int& a, const Int& b) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static Int divexact(const Int& a, const Int& g) {
        Int q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        return q;
    }
    static Int from(const Integer& z) { return z; }
    static Integer to_integer(const Int& x) { return x; }
};

template <class Int>
struct IntRow {
    std::vector<std::uint32_t> idx;
    std::vector<Int> val;

    bool empty() const { return idx.empty(); }
    std::size_t size() const { return idx.size(); }
};

template <class Int>
void normalize_content(IntRow<Int>& r) {
    using A = Arith<Int>;
    if (r.empty()) return;
    Int g = r.val[0];
    if (A::sign(g) < 0) g = A::neg(g);
    for (std::size_t k = 1; k < r.size(); ++k) {
        g = A::gcd(g, r.val[k]);
        if (g == 1) break;
    }
    bool flip = A::sign(r.val[0]) < 0;
    if (g == 1 && !flip) return;
    for (auto& v : r.val) {
        if (!(g == 1)) v = A::divexact(v, g);
        if (flip) v = A::neg(v);
    }
}

// r <- a*r - b*p where p has no entry that is not meant to interact; result is content-normalized.
template <class Int>
IntRow<Int> combine(const IntRow<Int>& r, const Int& a, const IntRow<Int>& p, const Int& b) {
    using A = Arith<Int>;
    IntRow<Int> out;
    out.idx.reserve(r.size() + p.size());
    out.val.reserve(r.size() + p.size());
    std::size_t i = 0, k = 0;
    while (i < r.size() || k < p.size()) {
        if (k == p.size() || (i < r.size() && r.idx[i] < p.idx[k])) {
            out.idx.push_back(r.idx[i]);
            out.val.push_back(A::mul(a, r.val[i]));
            ++i;
        } else if (i == r.size() || p.idx[k] < r.idx[i]) {
            out.idx.push_back(p.idx[k]);
            out.val.push_back(A::neg(A::mul(b, p.val[k])));
            ++k;
        } else {
            Int v = A::combo(a, r.val[i], b, p.val[k]);
            if (!A::is_zero(v)) {
                out.idx.push_back(r.idx[i]);
                out.val.push_back(std::move(v));
            }
            ++i;
            ++k;
        }
    }
    normalize_content(out);
    return out;
}

template <class Int>
IntRow<Int> to_int_row(const SparseVector& v) {
    using A = Arith<Int>;
    Integer l = 1;
    for (auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
    IntRow<Int> r;
    r.idx.reserve(v.size());
    r.val.reserve(v.size());
    for (auto& e : v) {
        Integer x = e.second.get_num() * (l / e.second.get_den());
        r.idx.push_back(static_cast<std::uint32_t>(e.first));
        r.val.push_back(A::from(x));
    }
    normalize_content(r);
    return r;
}

template <class Int>
class Echelon {
public:
    explicit Echelon(std::size_t dim) : dim_(dim), row_of_(dim, -1) {}

    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == dim_; }

    // Returns true if v was independent of the rows so far.
    bool insert(IntRow<Int> v) {
        using A = Arith<Int>;
        while (!v.empty()) {
            std::uint32_t c = v.idx[0];
            std::int64_t r = row_of_[c];
            if (r < 0) {
                row_of_[c] = static_cast<std::int64_t>(rows_.size());
                rows_.push_back(std::move(v));
                return true;
            }
            const IntRow<Int>& p = rows_[static_cast<std::size_t>(r)];
            Int g = A::gcd(p.val[0], v.val[0]);
            Int a = A::divexact(p.val[0], g);
            Int b = A::divexact(v.val[0], g);
            v = combine(v, a, p, b);
        }
        return false;
    }

    EchelonBasis reduced() {
        using A = Arith<Int>;
        std::vector<std::size_t> order(rows_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return rows_[x].idx[0] > rows_[y].idx[0]; });
        // Descending pivot order: rows with larger pivots are fully reduced first.
        for (std::size_t i : order) {
            IntRow<Int>& row = rows_[i];
            std::size_t pos = 1;
            while (pos < row.size()) {
                std::uint32_t c = row.idx[pos];
                std::int64_t rc = row_of_[c];
                if (rc < 0) {
                    ++pos;
                    continue;
                }
                const IntRow<Int>& p = rows_[static_cast<std::size_t>(rc)];
                Int g = A::gcd(p.val[0], row.val[pos]);
                Int a = A::divexact(p.val[0], g);
                Int b = A::divexact(row.val[pos], g);
                row = combine(row, a, p, b);
                // Entries before pos are unaffected: p starts at column c.
            }
        }
        EchelonBasis out;
        out.dim = dim_;
        std::vector<std::size_t> asc(order.rbegin(), order.rend());
        for (std::size_t i : asc) {
            const IntRow<Int>& row = rows_[i];
            out.pivots.push_back(row.idx[0]);
            Integer lead = A::to_integer(row.val[0]);
            SparseVector v;
            v.reserve(row.size());
            for (std::size_t k = 0; k < row.size(); ++k) {
                Rational q(A::to_integer(row.val[k]), lead);
                q.canonicalize();
                v.emplace_back(row.idx[k], q);
            }
            out.rows.push_back(std::move(v));
        }
        return out;
    }

private:
    std::size_t dim_;
    std::vector<std::int64_t> row_of_;
    std::vector<IntRow<Int>> rows_;
};

// Sparse vectors first; stable so that equal sizes keep their input order.
std::vector<std::size_t> insertion_order(const SparseMatrix& m) {
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m.column(a).size() < m.column(b).size(); });
    return order;
}

template <class Int>
std::size_t rank_impl(const SparseMatrix& vecs) {
    Echelon<Int> e(vecs.rows());
    for (std::size_t j : insertion_order(vecs)) {
        if (e.full()) break;
        if (vecs.column(j).empty()) continue;
        e.insert(to_int_row<Int>(vecs.column(j)));
    }
    return e.rank();
}

template <class Int>
EchelonBasis rref_impl(const SparseMatrix& vecs) {
    Echelon<Int> e(vecs.rows());
    for (std::size_t j : insertion_order(vecs)) {
        if (e.full()) break;
        if (vecs.column(j).empty()) continue;
        e.insert(to_int_row<Int>(vecs.column(j)));
    }
    return e.reduced();
}

} // namespace

std::vector<std::size_t> EchelonBasis::free_columns() const {
    std::vector<char> is_pivot(dim, 0);
    for (auto p : pivots) is_pivot[p] = 1;
    std::vector<std::size_t> f;
    for (std::size_t c = 0; c < dim; ++c)
        if (!is_pivot[c]) f.push_back(c);
    return f;
}

std::size_t rank(const SparseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // Insert the shorter vectors: echelon rows then live in the smaller space.
    SparseMatrix vecs = m.rows() <= m.cols() ? m : m.transpose();
    try {
        return rank_impl<std::int64_t>(vecs);
    } catch (const Overflow&) {
        return rank_impl<Integer>(vecs);
    }
}

EchelonBasis column_space_rref(const SparseMatrix& m) {
    if (m.cols() == 0) {
        EchelonBasis e;
        e.dim = m.rows();
        return e;
    }
    try {
        return rref_impl<std::int64_t>(m);
    } catch (const Overflow&) {
        return rref_impl<Integer>(m);
    }
}

EchelonBasis row_space_rref(const SparseMatrix& m) {
    return column_space_rref(m.transpose());
}

SparseMatrix kernel_from_rref(const EchelonBasis& rref) {
    std::vector<std::size_t> free = rref.free_columns();
    std::vector<std::int64_t> free_pos(rref.dim, -1);
    for (std::size_t k = 0; k < free.size(); ++k) free_pos[free[k]] = static_cast<std::int64_t>(k);
    std::vector<SparseVector> cols(free.size());
    for (std::size_t k = 0; k < free.size(); ++k) cols[k].emplace_back(free[k], Rational(1));
    for (std::size_t r = 0; r < rref.rows.size(); ++r) {
        std::size_t piv = rref.pivots[r];
        for (auto& [c, a] : rref.rows[r]) {
            if (c == piv) continue;
            cols[static_cast<std::size_t>(free_pos[c])].emplace_back(piv, -a);
        }
    }
    return SparseMatrix::from_columns(rref.dim, std::move(cols));
}

SparseMatrix kernel_basis(const SparseMatrix& m) {
    return kernel_from_rref(row_space_rref(m));
}

std::optional<SparseMatrix> solve(const SparseMatrix& m, const SparseMatrix& v) {
    if (v.rows() != m.rows()) throw std::invalid_argument("solve: row count mismatch");
    std::vector<SparseVector> out;
    for (std::size_t j = 0; j < v.cols(); ++j) {
        SparseMatrix rhs = v.select_columns({j});
        SparseMatrix k = kernel_basis(hstack(m.rows(), {&m, &rhs}));
        // v is in the span of m iff the last column is free, which makes it the last kernel vector.
        if (k.cols() == 0) return std::nullopt;
        const SparseVector& last = k.column(k.cols() - 1);
        if (last.empty() || last.back().first != m.cols()) return std::nullopt;
        SparseVector x;
        for (auto& [i, a] : last)
            if (i < m.cols()) x.emplace_back(i, -a);
        out.push_back(std::move(x));
    }
    return SparseMatrix::from_columns(m.cols(), std::move(out));
}

} // namespace thl
