#pragma once

#include "thl/sparse_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace thl {

// Coordinates in an algebra basis.
using AlgVec = SparseVector;

struct Algebra {
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    AlgVec unit;
    std::vector<std::vector<AlgVec>> mult; // mult[i][j] = e_i e_j

    AlgVec multiply(const AlgVec& x, const AlgVec& y) const;
    // Basis index whose vector is exactly the unit, if any.
    std::optional<std::size_t> unit_basis_index() const;
};

// Canonicalizes the vectors and checks shapes; does not check the algebra laws.
Algebra make_algebra(std::vector<std::string> names, AlgVec unit, std::vector<std::vector<AlgVec>> mult);

// Associativity and unit laws, exactly. Throws AlgebraError naming the first violated triple.
void validate_algebra(const Algebra& a);

// Column j is the image of basis vector j.
struct AlgebraMap {
    SparseMatrix matrix;

    AlgVec apply(const AlgVec& x) const { return matrix.apply(x); }
};

AlgebraMap identity_map(const Algebra& a);

// Unit preserved, multiplicative on basis pairs, invertible. Throws ActionError mentioning name.
void validate_algebra_map(const Algebra& a, const AlgebraMap& g, const std::string& name);

struct FiniteGroupAction {
    std::size_t order = 0;
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table; // table[g][h] = gh
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;
    std::vector<AlgebraMap> action;

    std::size_t mul(std::size_t g, std::size_t h) const { return table[g][h]; }
    std::size_t product(const std::size_t* g, std::size_t count) const;
    std::size_t conjugate(std::size_t h, std::size_t g) const { return mul(mul(h, g), inverse[h]); }
    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t element_order(std::size_t g) const;
};

// Derives identity and inverses from the table; throws ActionError if it is not a group law.
FiniteGroupAction make_group_action(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table,
                                    std::vector<AlgebraMap> action);

FiniteGroupAction trivial_group(const Algebra& a);

// Every element acts by an algebra automorphism and g -> action[g] is a homomorphism.
void validate_action(const Algebra& a, const FiniteGroupAction& g);

// Basis (e_i x g) with the identity element's block first, i minor:
// index = block(g) * d + i. Product (a x g)(b x h) = a g(b) x gh.
Algebra crossed_product(const Algebra& a, const FiniteGroupAction& g);

// (1 x h)(e_i x e)(1 x h^-1) == h(e_i) x e for all h, i.
bool crossed_product_inner_action_holds(const Algebra& a, const FiniteGroupAction& g, const Algebra& axg);

struct ConjugacyData {
    std::vector<std::vector<std::size_t>> classes; // ordered by smallest element
    std::vector<std::size_t> class_of;             // per element
    std::vector<std::vector<std::size_t>> centralizers; // per class, of its representative
    std::size_t representative(std::size_t c) const { return classes[c].front(); }
};

ConjugacyData conjugacy_data(const FiniteGroupAction& g);

// Pure tensors (g_0, ..., g_p / i_0, ..., i_q), lexicographic, g_0 and i_0 most significant.
// A reduced algebra slot ranges over basis vectors 1..d-1 (basis vector 0 must be the unit).
class TensorBasisIndex {
public:
    TensorBasisIndex() = default;
    TensorBasisIndex(std::size_t group_order, std::size_t p, std::size_t algebra_dim, std::size_t q,
                     std::vector<bool> reduced);

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t size() const { return group_count_ * algebra_count_; }
    std::size_t p() const { return p_; }
    std::size_t q() const { return q_; }
    std::size_t group_order() const { return r_; }
    std::size_t algebra_dim() const { return d_; }
    bool reduced(std::size_t slot) const { return reduced_[slot]; }

    std::size_t group_index(const std::size_t* g) const;
    // Offset of the algebra digit for algebra basis index i in slot k; npos if excluded.
    std::size_t algebra_digit(std::size_t slot, std::size_t i) const {
        if (reduced_[slot]) return i == 0 ? npos : i - 1;
        return i;
    }
    std::size_t algebra_stride(std::size_t slot) const { return alg_stride_[slot]; }
    std::size_t algebra_count() const { return algebra_count_; }
    // npos when a reduced slot holds the unit.
    std::size_t index(const std::size_t* g, const std::size_t* a) const;
    void decode(std::size_t idx, std::size_t* g, std::size_t* a) const;

private:
    std::size_t r_ = 1, p_ = 0, d_ = 1, q_ = 0;
    std::vector<bool> reduced_;
    std::vector<std::size_t> alg_stride_;
    std::size_t group_count_ = 1, algebra_count_ = 1;
};

// Checks the reduced-slot precondition (unit is basis vector 0) and builds the index.
TensorBasisIndex tensor_index(const FiniteGroupAction& g, const Algebra& a, std::size_t p, std::size_t q,
                              std::vector<bool> reduced);

// "(g0,g1 / x,1,x)" style label for diagnostics.
std::string tensor_label(const TensorBasisIndex& t, std::size_t idx, const FiniteGroupAction* g, const Algebra& a);

// Accumulates one column of an operator whose target is a tensor module.
class TensorColumn {
public:
    explicit TensorColumn(const TensorBasisIndex& target) : t_(target) {}

    // coeff * (g / slots[0] (x) ... (x) slots[q]); terms with a unit in a reduced slot are dropped.
    void add(const std::size_t* g, const std::vector<const AlgVec*>& slots, const Rational& coeff);
    void add_basis(std::size_t idx, const Rational& coeff) { col_.emplace_back(idx, coeff); }
    // coeff * (g / e_{a_0} (x) ... (x) e_{a_q}); dropped if a reduced slot holds the unit.
    void add_pure(const std::size_t* g, const std::size_t* a, const Rational& coeff) {
        std::size_t i = t_.index(g, a);
        if (i != TensorBasisIndex::npos && coeff != 0) col_.emplace_back(i, coeff);
    }
    SparseVector take();

private:
    void expand(const std::vector<const AlgVec*>& slots, std::size_t k, std::size_t base, const Rational& c);

    const TensorBasisIndex& t_;
    SparseVector col_;
};

} // namespace thl
