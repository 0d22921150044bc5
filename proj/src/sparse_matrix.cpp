#include "thl/sparse_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace thl {

void canonicalize(SparseVector& v) {
    std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t idx = v[i].first;
        Rational sum = v[i].second;
        std::size_t k = i + 1;
        for (; k < v.size() && v[k].first == idx; ++k) sum += v[k].second;
        if (sum != 0) {
            v[out].first = idx;
            v[out].second = sum;
            ++out;
        }
        i = k;
    }
    v.resize(out);
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace_back(i, Rational(1));
    return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<SparseVector> cols) {
    SparseMatrix m;
    m.rows_ = rows;
    m.cols_ = std::move(cols);
    for (auto& c : m.cols_) {
        canonicalize(c);
        if (!c.empty() && c.back().first >= rows) throw std::out_of_range("sparse column index out of range");
    }
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    SparseMatrix m(r, c);
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t i = 0; i < r; ++i)
            if (rows[i].at(j) != 0) m.cols_[j].emplace_back(i, rows[i][j]);
    return m;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (auto& c : cols_) n += c.size();
    return n;
}

bool SparseMatrix::is_zero() const {
    for (auto& c : cols_)
        if (!c.empty()) return false;
    return true;
}

Rational SparseMatrix::at(std::size_t i, std::size_t j) const {
    const auto& c = cols_.at(j);
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const SparseEntry& e, std::size_t k) { return e.first < k; });
    if (it != c.end() && it->first == i) return it->second;
    return Rational(0);
}

void SparseMatrix::set_column(std::size_t j, SparseVector v) {
    canonicalize(v);
    if (!v.empty() && v.back().first >= rows_) throw std::out_of_range("sparse column index out of range");
    cols_.at(j) = std::move(v);
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols(), rows_);
    std::vector<std::size_t> count(rows_, 0);
    for (auto& c : cols_)
        for (auto& e : c) ++count[e.first];
    for (std::size_t i = 0; i < rows_; ++i) t.cols_[i].reserve(count[i]);
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (auto& e : cols_[j]) t.cols_[e.first].emplace_back(j, e.second);
    return t;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
    if (c == 0) return SparseMatrix(rows_, cols());
    SparseMatrix m = *this;
    for (auto& col : m.cols_)
        for (auto& e : col) e.second *= c;
    return m;
}

namespace {

// Dense scratch accumulator reused across columns.
struct Accumulator {
    std::vector<Rational> val;
    std::vector<char> used;
    std::vector<std::size_t> touched;

    explicit Accumulator(std::size_t n) : val(n), used(n, 0) {}

    void add(std::size_t i, const Rational& x) {
        if (!used[i]) {
            used[i] = 1;
            touched.push_back(i);
            val[i] = x;
        } else {
            val[i] += x;
        }
    }

    SparseVector flush() {
        std::sort(touched.begin(), touched.end());
        SparseVector out;
        out.reserve(touched.size());
        for (auto i : touched) {
            if (val[i] != 0) out.emplace_back(i, val[i]);
            used[i] = 0;
        }
        touched.clear();
        return out;
    }
};

} // namespace

SparseVector SparseMatrix::apply(const SparseVector& x) const {
    Accumulator acc(rows_);
    for (auto& [j, xj] : x)
        for (auto& [i, a] : cols_.at(j)) acc.add(i, a * xj);
    return acc.flush();
}

SparseMatrix SparseMatrix::select_columns(const std::vector<std::size_t>& which) const {
    SparseMatrix m(rows_, which.size());
    for (std::size_t k = 0; k < which.size(); ++k) m.cols_[k] = cols_.at(which[k]);
    return m;
}

SparseMatrix SparseMatrix::select_rows(const std::vector<std::size_t>& which) const {
    std::vector<std::ptrdiff_t> where(rows_, -1);
    for (std::size_t k = 0; k < which.size(); ++k) where.at(which[k]) = static_cast<std::ptrdiff_t>(k);
    SparseMatrix m(which.size(), cols());
    for (std::size_t j = 0; j < cols(); ++j) {
        for (auto& [i, a] : cols_[j])
            if (where[i] >= 0) m.cols_[j].emplace_back(static_cast<std::size_t>(where[i]), a);
        canonicalize(m.cols_[j]);
    }
    return m;
}

std::optional<std::tuple<std::size_t, std::size_t, Rational>> SparseMatrix::first_nonzero() const {
    for (std::size_t j = 0; j < cols_.size(); ++j)
        if (!cols_[j].empty()) return std::make_tuple(cols_[j][0].first, j, cols_[j][0].second);
    return std::nullopt;
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const {
    std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols()));
    for (std::size_t j = 0; j < cols(); ++j)
        for (auto& [i, a] : cols_[j]) d[i][j] = a;
    return d;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product shape mismatch: " + describe_shape(a) + " * " + describe_shape(b));
    SparseMatrix m(a.rows(), b.cols());
    Accumulator acc(a.rows());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (auto& [k, bk] : b.cols_[j])
            for (auto& [i, aik] : a.cols_[k]) acc.add(i, aik * bk);
        m.cols_[j] = acc.flush();
    }
    return m;
}

namespace {

SparseVector merge(const SparseVector& x, const SparseVector& y, int sign) {
    SparseVector out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, k = 0;
    while (i < x.size() || k < y.size()) {
        if (k == y.size() || (i < x.size() && x[i].first < y[k].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[k].first < x[i].first) {
            out.emplace_back(y[k].first, sign > 0 ? Rational(y[k].second) : Rational(-y[k].second));
            ++k;
        } else {
            Rational s = sign > 0 ? Rational(x[i].second + y[k].second) : Rational(x[i].second - y[k].second);
            if (s != 0) out.emplace_back(x[i].first, s);
            ++i;
            ++k;
        }
    }
    return out;
}

} // namespace

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum shape mismatch: " + describe_shape(a) + " + " + describe_shape(b));
    SparseMatrix m(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) m.cols_[j] = merge(a.cols_[j], b.cols_[j], +1);
    return m;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference shape mismatch: " + describe_shape(a) + " - " + describe_shape(b));
    SparseMatrix m(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) m.cols_[j] = merge(a.cols_[j], b.cols_[j], -1);
    return m;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

SparseMatrix hstack(std::size_t rows, const std::vector<const SparseMatrix*>& parts) {
    std::vector<SparseVector> cols;
    for (auto* p : parts) {
        if (p->rows() != rows) throw std::invalid_argument("hstack row mismatch");
        for (std::size_t j = 0; j < p->cols(); ++j) cols.push_back(p->column(j));
    }
    return SparseMatrix::from_columns(rows, std::move(cols));
}

BlockAssembler::BlockAssembler(std::vector<std::size_t> row_sizes, std::vector<std::size_t> col_sizes) {
    for (auto s : row_sizes) {
        row_off_.push_back(rows_);
        rows_ += s;
    }
    for (auto s : col_sizes) {
        col_off_.push_back(cols_);
        cols_ += s;
    }
    cols_data_.resize(cols_);
}

void BlockAssembler::place(std::size_t block_row, std::size_t block_col, const SparseMatrix& m, const Rational& sign) {
    std::size_t r0 = row_off_.at(block_row), c0 = col_off_.at(block_col);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (auto& [i, a] : m.column(j)) cols_data_[c0 + j].emplace_back(r0 + i, sign * a);
}

SparseMatrix BlockAssembler::build() {
    return SparseMatrix::from_columns(rows_, std::move(cols_data_));
}

std::string describe_shape(const SparseMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace thl
