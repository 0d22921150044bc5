#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"

#include "thl/crossed.hpp"
#include "thl/elimination.hpp"
#include "thl/errors.hpp"
#include "thl/fixtures.hpp"
#include "thl/twisted.hpp"

#include <numeric>

using namespace thl;

namespace {

const Fixture& z2() { return find_fixture("trunc-poly-z2"); }

std::vector<std::size_t> add(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b.at(i);
    return a;
}

// Index of (g_0, .., g_p / a_0, .., a_q) in gj_index.
std::size_t at(const TensorBasisIndex& t, std::vector<std::size_t> g, std::vector<std::size_t> a) {
    return t.index(g.data(), a.data());
}

} // namespace

TEST_CASE("gj_bbar examples") {
    const Fixture& f = z2();
    const Algebra& A = f.algebra;
    const FiniteGroupAction& G = f.group;
    const std::size_t e = G.identity, s = 1 - e;
    SparseMatrix b0 = gj_bbar(A, G, 0, 1);
    CHECK(b0.rows() == 0);
    CHECK(b0.cols() == gj_index(A, G, 0, 1).size());

    TensorBasisIndex src = gj_index(A, G, 1, 0), dst = gj_index(A, G, 0, 0);
    SparseMatrix b = gj_bbar(A, G, 1, 0);
    for (std::size_t g0 = 0; g0 < 2; ++g0)
        for (std::size_t a = 0; a < 2; ++a) CHECK(b.column(at(src, {g0, e}, {a})).empty());
    // (s, s / x) -> (e / x) - (e / s(x)) = 2 (e / x); (s, s / 1) -> 0.
    CHECK(b.column(at(src, {s, s}, {0})).empty());
    CHECK(b.at(at(dst, {e}, {1}), at(src, {s, s}, {1})) == 2);
    CHECK(b.column(at(src, {s, s}, {1})).size() == 1);
}

TEST_CASE("gj_Bbar examples") {
    const Fixture& f = z2();
    const Algebra& A = f.algebra;
    const FiniteGroupAction& G = f.group;
    const std::size_t e = G.identity;
    TensorBasisIndex src = gj_index(A, G, 0, 1), dst = gj_index(A, G, 1, 1);
    SparseMatrix B = gj_Bbar(A, G, 0, 1);
    for (std::size_t g0 = 0; g0 < 2; ++g0) {
        std::size_t col = at(src, {g0}, {1, 1});
        CHECK(B.column(col).size() == 1);
        CHECK(B.at(at(dst, {e, g0}, {1, 1}), col) == 1);
    }
    SparseMatrix bB = gj_bbar(A, G, 1, 1) * B;
    for (std::size_t a0 = 0; a0 < 2; ++a0) CHECK(bB.column(at(src, {e}, {a0, 1})).empty());
    // p + 1 terms per pure tensor before cancellation.
    SparseMatrix B2 = gj_Bbar(A, G, 2, 0);
    TensorBasisIndex s2 = gj_index(A, G, 2, 0);
    for (std::size_t c = 0; c < s2.size(); ++c) CHECK(B2.column(c).size() <= 3);
}

TEST_CASE("gj_T examples") {
    const Fixture& f = z2();
    const Algebra& A = f.algebra;
    const FiniteGroupAction& G = f.group;
    const std::size_t e = G.identity, s = 1 - e;
    TensorBasisIndex t = gj_index(A, G, 0, 1);
    SparseMatrix T = gj_T(A, G, 0, 1);
    std::size_t c = at(t, {s}, {0, 1});
    CHECK(T.at(c, c) == -1);
    CHECK(T.column(c).size() == 1);
    std::size_t c2 = at(t, {e}, {0, 1});
    CHECK(T.at(c2, c2) == 1);
    SparseMatrix T2 = gj_T(A, G, 2, 1);
    CHECK(rank(T2) == T2.rows());
    CHECK(T2 * T2 == SparseMatrix::identity(T2.rows())); // every element has order at most 2

    Algebra Q = find_fixture("ground-field").algebra;
    FiniteGroupAction trivial = trivial_group(Q);
    CHECK(gj_T(Q, trivial, 1, 0) == SparseMatrix::identity(1));
}

TEST_CASE("gj_twisted_bB examples") {
    const Fixture& f = z2();
    const Algebra& A = f.algebra;
    const FiniteGroupAction& G = f.group;
    const std::size_t e = G.identity, s = 1 - e;
    auto [b, B] = gj_twisted_bB(A, G, 0, 1);
    TensorBasisIndex src = gj_index(A, G, 0, 1), dst = gj_index(A, G, 0, 0);
    CHECK(b.at(at(dst, {s}, {1}), at(src, {s}, {0, 1})) == 2);
    // The e block is the untwisted operator.
    SparseMatrix bid = twisted_b(A, identity_map(A), 1, true);
    for (std::size_t j = 0; j < bid.cols(); ++j)
        for (std::size_t i = 0; i < bid.rows(); ++i) CHECK(b.at(e * bid.rows() + i, e * bid.cols() + j) == bid.at(i, j));
    // Block diagonal.
    const std::size_t Bblock = gj_index(A, G, 0, 2).size() / G.order;
    for (std::size_t j = 0; j < src.size(); ++j) {
        std::size_t g = j / bid.cols();
        for (auto& [i, c] : b.column(j)) CHECK(i / bid.rows() == g);
        for (auto& [i, c] : B.column(j)) CHECK(i / Bblock == g);
    }
}

TEST_CASE("beta_map examples") {
    const Fixture& f = z2();
    const Algebra& A = f.algebra;
    const FiniteGroupAction& G = f.group;
    const std::size_t e = G.identity, s = 1 - e;
    TensorBasisIndex t = gj_index(A, G, 1, 1);
    SparseMatrix beta = beta_map(A, G, 1, 1);
    CHECK(beta.at(at(t, {s, e}, {0, 1}), at(t, {s, s}, {0, 1})) == 1);
    CHECK(beta.at(at(t, {e, s}, {1, 1}), at(t, {s, e}, {1, 1})) == 1);

    const Fixture& s3 = find_fixture("q3-s3");
    for (std::size_t p = 1; p <= 2; ++p) {
        SparseMatrix m = beta_map(s3.algebra, s3.group, p, 0);
        bool permutation = true;
        std::vector<int> hit(m.rows(), 0);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            permutation = permutation && m.column(j).size() == 1 && m.column(j)[0].second == 1;
            if (!m.column(j).empty()) ++hit[m.column(j)[0].first];
        }
        CHECK(permutation);
        CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
    }
}

TEST_CASE("Getzler-Jones identities hold on every fixture") {
    for (const Fixture& f : builtin_fixtures()) {
        std::size_t total = f.group.order > 3 ? 2 : 3;
        for (const IdentityCheck& c : verify_gj_identities(f.algebra, f.group, total)) {
            CAPTURE(f.name);
            CAPTURE(c.name);
            CAPTURE(c.location);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("gj module dimensions") {
    const Fixture& f = find_fixture("q3-z3-shift");
    for (std::size_t p = 0; p <= 2; ++p)
        for (std::size_t q = 0; q <= 2; ++q) {
            std::size_t expected = 1;
            for (std::size_t i = 0; i <= p; ++i) expected *= 3;
            expected *= 3;
            for (std::size_t i = 0; i < q; ++i) expected *= 2;
            CHECK(gj_index(f.algebra, f.group, p, q).size() == expected);
        }
}

TEST_CASE("proposition and coinvariant bicomplexes match HC of the crossed product") {
    {
        // Dense Connes-complex oracle on the crossed product.
        const Fixture& f = z2();
        Algebra AG = crossed_product(f.algebra, f.group);
        auto dims = oracle::connes_cyclic_dims(oracle::dense_algebra(AG, identity_map(AG)), 2);
        CHECK(dims == std::vector<std::size_t>{2, 1, 2});
        CHECK(proposition_bicomplex(f.algebra, f.group, 2).homology.dims == dims);
        CHECK(coinvariant_bicomplex(f.algebra, f.group, 2).dims == dims);
    }
    for (const Fixture& f : builtin_fixtures()) {
        CAPTURE(f.name);
        std::size_t N = f.group.order > 3 ? 2 : 3;
        Algebra AG = crossed_product(f.algebra, f.group);
        auto oracle_dims = twisted_cyclic(AG, identity_map(AG), N).dims;
        CHECK(proposition_bicomplex(f.algebra, f.group, N).homology.dims == oracle_dims);
        CHECK(coinvariant_bicomplex(f.algebra, f.group, N).dims == oracle_dims);
    }
}

TEST_CASE("G trivial reduces to ordinary cyclic homology") {
    Algebra A = truncated_polynomial(2);
    FiniteGroupAction G = trivial_group(A);
    auto hc = twisted_cyclic(A, identity_map(A), 3).dims;
    CHECK(proposition_bicomplex(A, G, 3).homology.dims == hc);
    CHECK(hcG_bicomplex(A, G, 3).dims == hc);
    CHECK(coinvariant_bicomplex(A, G, 3).dims == hc);
    auto stalks = conjugacy_decomposition(A, G, 3);
    REQUIRE(stalks.size() == 1);
    CHECK(stalks[0].dims == hc);
    TheoremMapReport r = theorem_map_f(A, G, G.identity, 3);
    for (std::size_t n = 0; n <= 3; ++n) {
        CHECK(r.injective[n]);
        CHECK(r.rank[n] == r.target_dims[n]);
    }
}

TEST_CASE("hcG splits over the twisted theories of each element") {
    const Fixture& f = z2();
    const Algebra& A = f.algebra;
    auto expected = add(twisted_cyclic(A, f.group.action[0], 3).dims, twisted_cyclic(A, f.group.action[1], 3).dims);
    CHECK(hcG_bicomplex(A, f.group, 3).dims == expected);
}

TEST_CASE("conjugacy decomposition") {
    for (const Fixture& f : builtin_fixtures()) {
        CAPTURE(f.name);
        std::size_t N = f.group.order > 3 ? 2 : 3;
        auto stalks = conjugacy_decomposition(f.algebra, f.group, N);
        CHECK(stalks.size() == conjugacy_data(f.group).classes.size());
        std::vector<std::size_t> sum(N + 1, 0);
        for (auto& s : stalks) sum = add(sum, s.dims);
        CHECK(sum == coinvariant_bicomplex(f.algebra, f.group, N).dims);
    }
    const Fixture& f = z2();
    auto stalks = conjugacy_decomposition(f.algebra, f.group, 3);
    REQUIRE(stalks.size() == 2);
    // The stalk over the generator is divided by <s> = the twist group itself.
    const std::size_t s = 1 - f.group.identity;
    for (auto& st : stalks)
        if (st.representative == s) CHECK(st.dims == twisted_cyclic(f.algebra, f.group.action[s], 3).dims);
}

TEST_CASE("theorem map on the Z/2 example") {
    const Fixture& f = z2();
    const std::size_t s = 1 - f.group.identity;
    TheoremMapReport r = theorem_map_f(f.algebra, f.group, s, 3);
    auto hcs = twisted_cyclic(f.algebra, f.group.action[s], 3).dims;
    CHECK(r.source_dims == hcs);
    for (std::size_t n = 0; n <= 3; ++n) {
        CHECK(r.injective[n]);
        CHECK(r.rank[n] == hcs[n]);
        CHECK(r.within_stalk[n]);
        CHECK(r.onto_stalk[n]);
    }
}

TEST_CASE("Connes lambda complex") {
    Algebra Q = find_fixture("ground-field").algebra;
    CHECK(connes_lambda_complex(Q, trivial_group(Q), 3, true).homology.dims == std::vector<std::size_t>{1, 0, 1, 0});
    CHECK(connes_lambda_complex(Q, trivial_group(Q), 3, false).homology.dims == std::vector<std::size_t>{1, 0, 1, 0});

    const Fixture& f = z2();
    const Algebra& A = f.algebra;
    const FiniteGroupAction& G = f.group;
    Algebra AG = crossed_product(A, G);
    CHECK(connes_lambda_complex(A, G, 3, true).homology.dims == twisted_cyclic(AG, identity_map(AG), 3).dims);
    CHECK(connes_lambda_complex(A, G, 3, false).homology.dims == hcG_bicomplex(A, G, 3).dims);

    // t^{n+1}(g / a) = (g / g^-1(a_0), .., g^-1(a_n)).
    for (std::size_t n = 0; n <= 2; ++n) {
        SparseMatrix t = lambda_t(A, G, n);
        SparseMatrix power = SparseMatrix::identity(t.rows());
        for (std::size_t k = 0; k <= n; ++k) power = t * power;
        std::size_t block = twist_matrix(A, identity_map(A), n).rows();
        BlockAssembler expected(std::vector<std::size_t>(G.order, block), std::vector<std::size_t>(G.order, block));
        for (std::size_t g = 0; g < G.order; ++g) expected.place(g, g, twist_matrix(A, G.action[G.inverse[g]], n));
        CHECK(power == expected.build());
        CHECK((unnormalized_b(A, G, n + 1) * unnormalized_b(A, G, n + 2)).is_zero());
    }
}

TEST_CASE("u-complex equivalence") {
    Algebra Q = find_fixture("ground-field").algebra;
    UComplexReport q = u_complex_equivalence(hk_bicomplex(Q, identity_map(Q), 4).mixed, 3);
    CHECK(q.equal);
    CHECK(q.u_dims == std::vector<std::size_t>{1, 0, 1, 0});

    MixedComplex zero;
    zero.dims = {2, 1, 3, 1, 2};
    for (std::size_t n = 0; n < zero.dims.size(); ++n) {
        zero.b.emplace_back(n == 0 ? 0 : zero.dims[n - 1], zero.dims[n]);
        if (n + 1 < zero.dims.size()) zero.B.emplace_back(zero.dims[n + 1], zero.dims[n]);
    }
    UComplexReport z = u_complex_equivalence(zero, 3);
    CHECK(z.equal);
    CHECK(z.u_dims == std::vector<std::size_t>{2, 1, 5, 2});

    const Fixture& f = z2();
    PropositionBicomplex pb = proposition_bicomplex(f.algebra, f.group, 5);
    UComplexReport r = u_complex_equivalence(pb.mixed, 4);
    CHECK(r.equal);
    HKBicomplex hk = hk_bicomplex(f.algebra, f.group.action[1], 5);
    CHECK(u_complex_equivalence(hk.mixed, 4).equal);
}
