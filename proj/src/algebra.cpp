#include "thl/algebra.hpp"

#include "thl/elimination.hpp"
#include "thl/errors.hpp"

#include <algorithm>
#include <sstream>

namespace thl {

namespace {

std::string vec_str(const AlgVec& v, const std::vector<std::string>& names) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [i, c] : v) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << to_string(c) << "*";
        os << (i < names.size() ? names[i] : "e" + std::to_string(i));
    }
    return os.str();
}

AlgVec basis_vec(std::size_t i) { return AlgVec{{i, Rational(1)}}; }

} // namespace

AlgVec Algebra::multiply(const AlgVec& x, const AlgVec& y) const {
    AlgVec out;
    for (auto& [i, a] : x)
        for (auto& [j, b] : y)
            for (auto& [k, c] : mult[i][j]) out.emplace_back(k, a * b * c);
    canonicalize(out);
    return out;
}

std::optional<std::size_t> Algebra::unit_basis_index() const {
    if (unit.size() == 1 && unit[0].second == 1) return unit[0].first;
    return std::nullopt;
}

Algebra make_algebra(std::vector<std::string> names, AlgVec unit, std::vector<std::vector<AlgVec>> mult) {
    Algebra a;
    a.dim = names.size();
    a.basis_names = std::move(names);
    canonicalize(unit);
    a.unit = std::move(unit);
    if (mult.size() != a.dim) throw AlgebraError("multiplication table has " + std::to_string(mult.size()) + " rows, expected " + std::to_string(a.dim));
    for (auto& row : mult) {
        if (row.size() != a.dim) throw AlgebraError("multiplication table row has wrong length");
        for (auto& v : row) {
            canonicalize(v);
            if (!v.empty() && v.back().first >= a.dim) throw AlgebraError("product coordinate out of range");
        }
    }
    if (!a.unit.empty() && a.unit.back().first >= a.dim) throw AlgebraError("unit coordinate out of range");
    a.mult = std::move(mult);
    return a;
}

void validate_algebra(const Algebra& a) {
    const auto& n = a.basis_names;
    for (std::size_t i = 0; i < a.dim; ++i) {
        AlgVec e = basis_vec(i);
        if (a.multiply(a.unit, e) != e || a.multiply(e, a.unit) != e)
            throw AlgebraError("unit law fails for basis element " + n[i]);
    }
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) {
                AlgVec lhs = a.multiply(a.mult[i][j], basis_vec(k));
                AlgVec rhs = a.multiply(basis_vec(i), a.mult[j][k]);
                if (lhs != rhs)
                    throw AlgebraError("associativity fails for (" + n[i] + ", " + n[j] + ", " + n[k] + "): (" + n[i] +
                                       n[j] + ")" + n[k] + " = " + vec_str(lhs, n) + " but " + n[i] + "(" + n[j] +
                                       n[k] + ") = " + vec_str(rhs, n));
            }
}

AlgebraMap identity_map(const Algebra& a) { return AlgebraMap{SparseMatrix::identity(a.dim)}; }

void validate_algebra_map(const Algebra& a, const AlgebraMap& g, const std::string& name) {
    const auto& n = a.basis_names;
    if (g.matrix.rows() != a.dim || g.matrix.cols() != a.dim)
        throw ActionError("automorphism " + name + " has shape " + describe_shape(g.matrix));
    if (g.apply(a.unit) != a.unit) throw ActionError("automorphism " + name + " does not fix the unit");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            AlgVec lhs = g.apply(a.mult[i][j]);
            AlgVec rhs = a.multiply(g.matrix.column(i), g.matrix.column(j));
            if (lhs != rhs)
                throw ActionError("automorphism " + name + " is not multiplicative on (" + n[i] + ", " + n[j] + ")");
        }
    if (rank(g.matrix) != a.dim) throw ActionError("automorphism " + name + " is not invertible");
}

std::size_t FiniteGroupAction::product(const std::size_t* g, std::size_t count) const {
    std::size_t x = identity;
    for (std::size_t k = 0; k < count; ++k) x = table[x][g[k]];
    return x;
}

std::optional<std::size_t> FiniteGroupAction::index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
}

std::size_t FiniteGroupAction::element_order(std::size_t g) const {
    std::size_t k = 1, x = g;
    while (x != identity) {
        x = mul(x, g);
        ++k;
    }
    return k;
}

FiniteGroupAction make_group_action(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table,
                                    std::vector<AlgebraMap> action) {
    FiniteGroupAction g;
    g.order = names.size();
    if (g.order == 0) throw ActionError("group has no elements");
    if (table.size() != g.order || action.size() != g.order) throw ActionError("group table/action size mismatch");
    for (auto& row : table) {
        if (row.size() != g.order) throw ActionError("group table row has wrong length");
        for (auto x : row)
            if (x >= g.order) throw ActionError("group table entry out of range");
    }
    g.names = std::move(names);
    g.table = std::move(table);
    g.action = std::move(action);

    bool found = false;
    for (std::size_t e = 0; e < g.order && !found; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < g.order && ok; ++x) ok = g.table[e][x] == x && g.table[x][e] == x;
        if (ok) {
            g.identity = e;
            found = true;
        }
    }
    if (!found) throw ActionError("group table has no identity element");
    for (std::size_t x = 0; x < g.order; ++x)
        for (std::size_t y = 0; y < g.order; ++y)
            for (std::size_t z = 0; z < g.order; ++z)
                if (g.table[g.table[x][y]][z] != g.table[x][g.table[y][z]])
                    throw ActionError("group table is not associative on (" + g.names[x] + ", " + g.names[y] + ", " +
                                      g.names[z] + ")");
    g.inverse.assign(g.order, g.order);
    for (std::size_t x = 0; x < g.order; ++x) {
        for (std::size_t y = 0; y < g.order; ++y)
            if (g.table[x][y] == g.identity && g.table[y][x] == g.identity) g.inverse[x] = y;
        if (g.inverse[x] == g.order) throw ActionError("element " + g.names[x] + " has no inverse");
    }
    return g;
}

FiniteGroupAction trivial_group(const Algebra& a) {
    return make_group_action({"e"}, {{0}}, {identity_map(a)});
}

void validate_action(const Algebra& a, const FiniteGroupAction& g) {
    for (std::size_t x = 0; x < g.order; ++x) validate_algebra_map(a, g.action[x], g.names[x]);
    if (!(g.action[g.identity].matrix == SparseMatrix::identity(a.dim)))
        throw ActionError("identity element " + g.names[g.identity] + " does not act trivially");
    for (std::size_t x = 0; x < g.order; ++x)
        for (std::size_t y = 0; y < g.order; ++y)
            if (!(g.action[g.mul(x, y)].matrix == g.action[x].matrix * g.action[y].matrix))
                throw ActionError("action is not a homomorphism on (" + g.names[x] + ", " + g.names[y] + ")");
}

namespace {

std::vector<std::size_t> block_order(const FiniteGroupAction& g) {
    std::vector<std::size_t> blocks{g.identity};
    for (std::size_t x = 0; x < g.order; ++x)
        if (x != g.identity) blocks.push_back(x);
    return blocks;
}

} // namespace

Algebra crossed_product(const Algebra& a, const FiniteGroupAction& g) {
    std::vector<std::size_t> blocks = block_order(g);
    std::vector<std::size_t> block_of(g.order);
    for (std::size_t k = 0; k < blocks.size(); ++k) block_of[blocks[k]] = k;
    const std::size_t d = a.dim;

    std::vector<std::string> names;
    for (auto x : blocks)
        for (std::size_t i = 0; i < d; ++i) names.push_back(a.basis_names[i] + "#" + g.names[x]);

    std::size_t n = d * g.order;
    std::vector<std::vector<AlgVec>> mult(n, std::vector<AlgVec>(n));
    for (std::size_t bx = 0; bx < blocks.size(); ++bx)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t by = 0; by < blocks.size(); ++by)
                for (std::size_t j = 0; j < d; ++j) {
                    std::size_t x = blocks[bx], y = blocks[by];
                    AlgVec prod = a.multiply(basis_vec(i), g.action[x].matrix.column(j));
                    std::size_t off = block_of[g.mul(x, y)] * d;
                    AlgVec v;
                    for (auto& [k, c] : prod) v.emplace_back(off + k, c);
                    mult[bx * d + i][by * d + j] = std::move(v);
                }
    AlgVec unit;
    for (auto& [k, c] : a.unit) unit.emplace_back(k, c); // identity block has offset 0
    Algebra out = make_algebra(std::move(names), std::move(unit), std::move(mult));
    validate_algebra(out);
    return out;
}

bool crossed_product_inner_action_holds(const Algebra& a, const FiniteGroupAction& g, const Algebra& axg) {
    std::vector<std::size_t> blocks = block_order(g);
    std::vector<std::size_t> block_of(g.order);
    for (std::size_t k = 0; k < blocks.size(); ++k) block_of[blocks[k]] = k;
    const std::size_t d = a.dim;
    auto embed = [&](const AlgVec& v, std::size_t x) {
        AlgVec out;
        for (auto& [k, c] : v) out.emplace_back(block_of[x] * d + k, c);
        return out;
    };
    for (std::size_t h = 0; h < g.order; ++h)
        for (std::size_t i = 0; i < d; ++i) {
            AlgVec lhs = axg.multiply(axg.multiply(embed(a.unit, h), embed(basis_vec(i), g.identity)),
                                      embed(a.unit, g.inverse[h]));
            AlgVec rhs = embed(g.action[h].matrix.column(i), g.identity);
            if (lhs != rhs) return false;
        }
    return true;
}

ConjugacyData conjugacy_data(const FiniteGroupAction& g) {
    ConjugacyData c;
    c.class_of.assign(g.order, g.order);
    for (std::size_t x = 0; x < g.order; ++x) {
        if (c.class_of[x] != g.order) continue;
        std::vector<std::size_t> cls;
        for (std::size_t h = 0; h < g.order; ++h) cls.push_back(g.conjugate(h, x));
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        for (auto y : cls) c.class_of[y] = c.classes.size();
        std::vector<std::size_t> cent;
        for (std::size_t h = 0; h < g.order; ++h)
            if (g.mul(h, x) == g.mul(x, h)) cent.push_back(h);
        c.centralizers.push_back(std::move(cent));
        c.classes.push_back(std::move(cls));
    }
    return c;
}

TensorBasisIndex::TensorBasisIndex(std::size_t group_order, std::size_t p, std::size_t algebra_dim, std::size_t q,
                                   std::vector<bool> reduced)
    : r_(group_order), p_(p), d_(algebra_dim), q_(q), reduced_(std::move(reduced)) {
    if (reduced_.size() != q_ + 1) throw std::invalid_argument("tensor index: one reduced flag per algebra slot");
    group_count_ = 1;
    for (std::size_t k = 0; k <= p_; ++k) group_count_ *= r_;
    alg_stride_.assign(q_ + 1, 1);
    algebra_count_ = 1;
    for (std::size_t k = q_ + 1; k-- > 0;) {
        alg_stride_[k] = algebra_count_;
        algebra_count_ *= reduced_[k] ? d_ - 1 : d_;
    }
}

std::size_t TensorBasisIndex::group_index(const std::size_t* g) const {
    std::size_t x = 0;
    for (std::size_t k = 0; k <= p_; ++k) x = x * r_ + g[k];
    return x;
}

std::size_t TensorBasisIndex::index(const std::size_t* g, const std::size_t* a) const {
    std::size_t x = 0;
    for (std::size_t k = 0; k <= q_; ++k) {
        std::size_t dig = algebra_digit(k, a[k]);
        if (dig == npos) return npos;
        x += dig * alg_stride_[k];
    }
    return group_index(g) * algebra_count_ + x;
}

void TensorBasisIndex::decode(std::size_t idx, std::size_t* g, std::size_t* a) const {
    std::size_t gi = idx / algebra_count_, ai = idx % algebra_count_;
    for (std::size_t k = p_ + 1; k-- > 0;) {
        g[k] = gi % r_;
        gi /= r_;
    }
    for (std::size_t k = 0; k <= q_; ++k) {
        std::size_t dig = ai / alg_stride_[k];
        ai %= alg_stride_[k];
        a[k] = reduced_[k] ? dig + 1 : dig;
    }
}

TensorBasisIndex tensor_index(const FiniteGroupAction& g, const Algebra& a, std::size_t p, std::size_t q,
                              std::vector<bool> reduced) {
    bool any = std::find(reduced.begin(), reduced.end(), true) != reduced.end();
    if (any) {
        auto u = a.unit_basis_index();
        if (!u || *u != 0) throw ReducedBasisError("reduced tensor slots need the unit to be basis vector 0");
    }
    return TensorBasisIndex(g.order, p, a.dim, q, std::move(reduced));
}

std::string tensor_label(const TensorBasisIndex& t, std::size_t idx, const FiniteGroupAction* g, const Algebra& a) {
    std::vector<std::size_t> gs(t.p() + 1), as(t.q() + 1);
    t.decode(idx, gs.data(), as.data());
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < gs.size(); ++k) {
        if (k) os << ",";
        os << (g ? g->names[gs[k]] : std::to_string(gs[k]));
    }
    os << " / ";
    for (std::size_t k = 0; k < as.size(); ++k) {
        if (k) os << ",";
        os << a.basis_names[as[k]];
    }
    os << ")";
    return os.str();
}

void TensorColumn::add(const std::size_t* g, const std::vector<const AlgVec*>& slots, const Rational& coeff) {
    if (coeff == 0) return;
    expand(slots, 0, t_.group_index(g) * t_.algebra_count(), coeff);
}

void TensorColumn::expand(const std::vector<const AlgVec*>& slots, std::size_t k, std::size_t base, const Rational& c) {
    if (k == slots.size()) {
        col_.emplace_back(base, c);
        return;
    }
    for (auto& [i, a] : *slots[k]) {
        std::size_t dig = t_.algebra_digit(k, i);
        if (dig == TensorBasisIndex::npos) continue;
        expand(slots, k + 1, base + dig * t_.algebra_stride(k), c * a);
    }
}

SparseVector TensorColumn::take() {
    SparseVector out = std::move(col_);
    col_.clear();
    canonicalize(out);
    return out;
}

} // namespace thl
