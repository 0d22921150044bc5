#include "thl/fixtures.hpp"

#include "thl/errors.hpp"

#include <array>

namespace thl {

Algebra truncated_polynomial(std::size_t m) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    std::vector<std::vector<AlgVec>> mult(m, std::vector<AlgVec>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i + j < m) mult[i][j] = AlgVec{{i + j, Rational(1)}};
    Algebra a = make_algebra(std::move(names), AlgVec{{0, Rational(1)}}, std::move(mult));
    validate_algebra(a);
    return a;
}

namespace {

// Coordinate idempotent e_k of Q^3 in the basis (1, e1, e2).
AlgVec idempotent(std::size_t k) {
    if (k == 0) return AlgVec{{0, Rational(1)}, {1, Rational(-1)}, {2, Rational(-1)}};
    return AlgVec{{k, Rational(1)}};
}

using Perm = std::array<std::size_t, 3>;

} // namespace

Algebra q3_algebra() {
    std::vector<std::vector<AlgVec>> mult(3, std::vector<AlgVec>(3));
    for (std::size_t j = 0; j < 3; ++j) {
        mult[0][j] = AlgVec{{j, Rational(1)}};
        mult[j][0] = AlgVec{{j, Rational(1)}};
    }
    mult[1][1] = AlgVec{{1, Rational(1)}};
    mult[2][2] = AlgVec{{2, Rational(1)}};
    Algebra a = make_algebra({"1", "e1", "e2"}, AlgVec{{0, Rational(1)}}, std::move(mult));
    validate_algebra(a);
    return a;
}

FiniteGroupAction sign_flip_action(const Algebra& a, std::size_t m) {
    std::vector<SparseVector> cols;
    for (std::size_t i = 0; i < m; ++i) cols.push_back(SparseVector{{i, Rational(i % 2 == 0 ? 1 : -1)}});
    AlgebraMap s{SparseMatrix::from_columns(m, std::move(cols))};
    FiniteGroupAction g = make_group_action({"e", "s"}, {{0, 1}, {1, 0}}, {identity_map(a), s});
    validate_action(a, g);
    return g;
}

FiniteGroupAction q3_permutation_action(const Algebra& a, bool cyclic_only) {
    std::vector<Perm> perms;
    std::vector<std::string> names;
    if (cyclic_only) {
        perms = {Perm{0, 1, 2}, Perm{1, 2, 0}, Perm{2, 0, 1}};
        names = {"e", "s", "s2"};
    } else {
        perms = {Perm{0, 1, 2}, Perm{1, 0, 2}, Perm{2, 1, 0}, Perm{0, 2, 1}, Perm{1, 2, 0}, Perm{2, 0, 1}};
        names = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
    }
    const std::size_t r = perms.size();
    std::vector<std::vector<std::size_t>> table(r, std::vector<std::size_t>(r));
    for (std::size_t g = 0; g < r; ++g)
        for (std::size_t h = 0; h < r; ++h) {
            Perm gh{perms[g][perms[h][0]], perms[g][perms[h][1]], perms[g][perms[h][2]]};
            for (std::size_t k = 0; k < r; ++k)
                if (perms[k] == gh) table[g][h] = k;
        }
    std::vector<AlgebraMap> action;
    for (const Perm& p : perms) {
        std::vector<SparseVector> cols{AlgVec{{0, Rational(1)}}, idempotent(p[1]), idempotent(p[2])};
        action.push_back(AlgebraMap{SparseMatrix::from_columns(3, std::move(cols))});
    }
    FiniteGroupAction g = make_group_action(std::move(names), std::move(table), std::move(action));
    validate_action(a, g);
    return g;
}

const std::vector<Fixture>& builtin_fixtures() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> f;
        {
            Algebra q = truncated_polynomial(1);
            FiniteGroupAction g = trivial_group(q);
            f.push_back({"ground-field", "Q, trivial group", q, g, 3, "e"});
        }
        {
            Algebra a = truncated_polynomial(2);
            FiniteGroupAction g = sign_flip_action(a, 2);
            f.push_back({"trunc-poly-z2", "Q[x]/(x^2), Z/2 acting by x -> -x", a, g, 3, "s"});
        }
        {
            Algebra a = q3_algebra();
            FiniteGroupAction g = q3_permutation_action(a, true);
            f.push_back({"q3-z3-shift", "Q^3, Z/3 cyclic coordinate shift", a, g, 3, "s"});
        }
        {
            Algebra a = q3_algebra();
            FiniteGroupAction g = q3_permutation_action(a, false);
            f.push_back({"q3-s3", "Q^3, S3 coordinate permutations", a, g, 2, "(012)"});
        }
        {
            Algebra a = truncated_polynomial(3);
            FiniteGroupAction g = sign_flip_action(a, 3);
            f.push_back({"trunc-cubic-z2", "Q[x]/(x^3), Z/2 acting by x -> -x", a, g, 3, "s"});
        }
        return f;
    }();
    return fixtures;
}

const Fixture& find_fixture(const std::string& name) {
    for (const Fixture& f : builtin_fixtures())
        if (f.name == name) return f;
    std::string known;
    for (const Fixture& f : builtin_fixtures()) known += (known.empty() ? "" : ", ") + f.name;
    throw ValidationError("unknown fixture '" + name + "' (known: " + known + ")");
}

} // namespace thl
