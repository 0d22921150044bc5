#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thl/chain_complex.hpp"
#include "thl/elimination.hpp"
#include "thl/errors.hpp"
#include "thl/quotient.hpp"

#include <random>

using namespace thl;

namespace {

using Dense = std::vector<std::vector<Rational>>;

// Textbook Gaussian elimination on a dense rational copy; shares no code with the library.
std::size_t dense_rank(Dense a) {
    std::size_t r = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

Dense random_dense(std::mt19937& rng, std::size_t rows, std::size_t cols, int density, int range) {
    std::uniform_int_distribution<int> coin(0, 99), val(-range, range), den(1, 4);
    Dense d(rows, std::vector<Rational>(cols, 0));
    for (auto& row : d)
        for (auto& x : row)
            if (coin(rng) < density) x = Rational(val(rng), den(rng));
    for (auto& row : d)
        for (auto& x : row) x.canonicalize();
    return d;
}

SparseMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    Dense d;
    for (auto& r : rows) {
        d.emplace_back();
        for (int x : r) d.back().push_back(Rational(x));
    }
    return SparseMatrix::from_dense(d);
}

} // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-2/4") == Rational(-1, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("sparse matrix basics") {
    SparseMatrix a = from_rows({{1, 0, 2}, {0, 3, 0}});
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 3);
    CHECK(a.nnz() == 3);
    CHECK(a.at(0, 2) == 2);
    CHECK(a.transpose().transpose() == a);
    CHECK((a * SparseMatrix::identity(3)) == a);
    CHECK((a - a).is_zero());
    CHECK(a.select_rows({1}).at(0, 1) == 3);
    CHECK(a.select_columns({2, 0}).at(0, 0) == 2);
    auto nz = (a - a.scaled(Rational(2))).first_nonzero();
    REQUIRE(nz);
    CHECK(std::get<0>(*nz) == 0);
    CHECK(std::get<1>(*nz) == 0);
    CHECK(std::get<2>(*nz) == -1);
}

TEST_CASE("rank examples") {
    CHECK(rank(SparseMatrix::identity(3)) == 3);
    CHECK(rank(from_rows({{1, 1}, {1, 1}})) == 1);
    CHECK(rank(SparseMatrix(4, 7)) == 0);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(SparseMatrix::identity(3)).cols() == 0);
    CHECK(kernel_basis(SparseMatrix(3, 3)).cols() == 3);
    CHECK(rank(kernel_basis(SparseMatrix(3, 3))) == 3);
    SparseMatrix k = kernel_basis(from_rows({{1, -1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == k.at(1, 0));
    CHECK(k.at(0, 0) != 0);
}

TEST_CASE("quotient examples") {
    QuotientPresentation q = quotient_by(2, from_rows({{1}, {-1}}));
    CHECK(q.dim() == 1);
    CHECK((q.projection * q.section) == SparseMatrix::identity(1));
    CHECK((q.projection * q.relation_basis).is_zero());

    QuotientPresentation z = quotient_by(3, SparseMatrix(3, 1));
    CHECK(z.dim() == 3);
    CHECK(z.projection == SparseMatrix::identity(3));

    CHECK(quotient_by(2, SparseMatrix::identity(2)).dim() == 0);
}

TEST_CASE("descend_map examples") {
    SparseMatrix T = from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    SparseMatrix I = SparseMatrix::identity(3);
    QuotientPresentation q = quotient_by(3, I - T);
    CHECK(descend_map(I, q, q) == SparseMatrix::identity(q.dim()));
    CHECK(descend_map(I - T, q, q).is_zero());
    // The projection onto coordinate 0 does not kill e0 - e1.
    SparseMatrix f = from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK_THROWS_AS(descend_map(f, q, q), WellDefinednessError);
}

TEST_CASE("solve") {
    SparseMatrix m = from_rows({{1, 2}, {3, 4}, {5, 6}});
    SparseMatrix v = from_rows({{5}, {11}, {17}});
    auto x = solve(m, v);
    REQUIRE(x);
    CHECK((m * *x) == v);
    CHECK_FALSE(solve(m, from_rows({{1}, {0}, {0}})));
}

TEST_CASE("rank agrees with a dense oracle on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        Dense d = random_dense(rng, rows, cols, 10 + static_cast<int>(rng() % 70), 5);
        // Force some dependencies.
        if (rows > 2)
            for (std::size_t j = 0; j < cols; ++j) d[rows - 1][j] = d[0][j] * 3 - d[1][j];
        SparseMatrix m = SparseMatrix::from_dense(d);
        const std::size_t r = dense_rank(d);
        CHECK(rank(m) == r);
        CHECK(rank(m.transpose()) == r);
        SparseMatrix k = kernel_basis(m);
        CHECK(r + k.cols() == cols);
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());
    }
}

TEST_CASE("large entries fall back to arbitrary precision") {
    Dense d(3, std::vector<Rational>(3));
    Integer big("123456789012345678901");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) d[i][j] = Rational(big * Integer(static_cast<long>(i * 7 + j * j + 1)));
    d[2][2] += Rational(1, 3);
    CHECK(rank(SparseMatrix::from_dense(d)) == dense_rank(d));
    Dense e(2, std::vector<Rational>(2));
    e[0][0] = Rational(Integer("4611686018427387903"));
    e[0][1] = Rational(Integer("4611686018427387902"));
    e[1][0] = Rational(Integer("4611686018427387901"));
    e[1][1] = Rational(Integer("4611686018427387900"));
    CHECK(rank(SparseMatrix::from_dense(e)) == dense_rank(e));
}

TEST_CASE("quotient then descend of the identity is the identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng() % 7;
        SparseMatrix rel = SparseMatrix::from_dense(random_dense(rng, n, 1 + rng() % n, 40, 3));
        QuotientPresentation q = quotient_by(n, rel);
        CHECK(q.dim() == n - dense_rank(rel.to_dense()));
        CHECK(descend_map(SparseMatrix::identity(n), q, q) == SparseMatrix::identity(q.dim()));
        CHECK((q.projection * rel).is_zero());
    }
}

TEST_CASE("homology examples") {
    HomologyResult h = homology(make_complex({1, 1, 1, 1}, {SparseMatrix(0, 1), SparseMatrix(1, 1),
                                                            SparseMatrix(1, 1), SparseMatrix(1, 1)}));
    CHECK(h.dims == std::vector<std::size_t>{1, 1, 1});
    CHECK(h.valid_through == 2);

    HomologyResult g = homology(make_complex({1, 1}, {SparseMatrix(0, 1), SparseMatrix::identity(1)}));
    CHECK(g.dims == std::vector<std::size_t>{0});
    CHECK(g.valid_through == 0);

    CHECK_THROWS_AS(make_complex({1, 1, 1}, {SparseMatrix(0, 1), SparseMatrix::identity(1), SparseMatrix::identity(1)}),
                    ComplexError);
}

TEST_CASE("homology is independent of the basis order") {
    // Simplicial chain complex of the boundary of a tetrahedron: H = (1, 0, 1).
    std::vector<std::vector<int>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::vector<int>> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    auto edge_index = [&](int a, int b) {
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (edges[k][0] == a && edges[k][1] == b) return k;
        return edges.size();
    };
    std::vector<SparseVector> d1, d2;
    for (auto& e : edges) d1.push_back({{static_cast<std::size_t>(e[0]), Rational(-1)}, {static_cast<std::size_t>(e[1]), Rational(1)}});
    for (auto& f : faces)
        d2.push_back({{edge_index(f[1], f[2]), Rational(1)}, {edge_index(f[0], f[2]), Rational(-1)}, {edge_index(f[0], f[1]), Rational(1)}});
    SparseMatrix D1 = SparseMatrix::from_columns(4, d1), D2 = SparseMatrix::from_columns(6, d2);
    ChainComplex c = make_complex({4, 6, 4, 0}, {SparseMatrix(0, 4), D1, D2, SparseMatrix(4, 0)});
    CHECK(homology(c).dims == std::vector<std::size_t>{1, 0, 1});

    std::vector<std::size_t> pv{3, 1, 0, 2}, pe{5, 2, 4, 0, 1, 3}, pf{2, 0, 3, 1};
    SparseMatrix D1p = D1.select_rows(pv).select_columns(pe);
    SparseMatrix D2p = D2.select_rows(pe).select_columns(pf);
    ChainComplex cp = make_complex({4, 6, 4, 0}, {SparseMatrix(0, 4), D1p, D2p, SparseMatrix(4, 0)});
    CHECK(homology(cp).dims == std::vector<std::size_t>{1, 0, 1});
    CHECK(homology_dims(cp, 2) == std::vector<std::size_t>{1, 0, 1});
}

TEST_CASE("total complex examples") {
    SparseMatrix one = SparseMatrix::identity(1);
    BicomplexSpec single;
    single.dims = {{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}};
    single.vertical[{0, 1}] = SparseMatrix(1, 1);
    ChainComplex t = total_complex(single, 2);
    CHECK(t.dims == std::vector<std::size_t>{1, 1, 1});

    BicomplexSpec two;
    two.dims = {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 2}, {{1, 1}, 1}};
    two.vertical[{0, 1}] = one;
    ChainComplex tt = total_complex(two, 2);
    CHECK(tt.dims == std::vector<std::size_t>{1, 3, 1});
    CHECK(homology(tt).dims == std::vector<std::size_t>{0, 2});

    // (C, b, B) with C = Q in every degree and zero operators: HC_n = floor(n/2) + 1.
    MixedComplex m;
    for (std::size_t n = 0; n <= 4; ++n) {
        m.dims.push_back(1);
        m.b.push_back(n == 0 ? SparseMatrix(0, 1) : SparseMatrix(1, 1));
        if (n < 4) m.B.push_back(SparseMatrix(1, 1));
    }
    CHECK(homology(mixed_total(m, 4)).dims == std::vector<std::size_t>{1, 1, 2, 2});
}

TEST_CASE("induced maps on homology") {
    ChainComplex c = make_complex({2, 2, 0}, {SparseMatrix(0, 2), from_rows({{1, 0}, {0, 0}}), SparseMatrix(2, 0)});
    HomologyResult h = homology(c);
    std::vector<SparseMatrix> id{SparseMatrix::identity(2), SparseMatrix::identity(2), SparseMatrix(0, 0)};
    auto ind = induced_on_homology(id, c, h, c, h);
    CHECK(ind[0] == SparseMatrix::identity(h.dims[0]));
    CHECK(ind[1] == SparseMatrix::identity(h.dims[1]));

    // f = d h + h d with h: C_0 -> C_1 the identity.
    SparseMatrix d = c.d[1];
    std::vector<SparseMatrix> nul{d * SparseMatrix::identity(2), SparseMatrix::identity(2) * d, SparseMatrix(0, 0)};
    auto z = induced_on_homology(nul, c, h, c, h);
    CHECK(z[0].is_zero());
    CHECK(z[1].is_zero());

    std::vector<SparseMatrix> bad{from_rows({{0, 1}, {1, 0}}), SparseMatrix::identity(2), SparseMatrix(0, 0)};
    CHECK_THROWS_AS(induced_on_homology(bad, c, h, c, h), ChainMapError);
}
