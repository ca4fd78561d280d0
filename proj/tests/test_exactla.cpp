#include <random>

#include "doctest.h"
#include "oracle.hpp"

#include "curvmod/errors.hpp"
#include "curvmod/sparse.hpp"

using namespace curvmod;

namespace {

SparseMatrix random_matrix(std::mt19937& rng, int nr, int nc, double density) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    SparseMatrixBuilder b(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            if (u(rng) < density) b.add(i, j, rat(num(rng), den(rng)));
    return b.build();
}

} // namespace

TEST_CASE("rational text forms") {
    CHECK(rational_to_text(rat(3, 4)) == "3/4");
    CHECK(rational_to_text(Rational(-2)) == "-2/1");
    CHECK(rational_from_text("-10/4") == rat(-5, 2));
    CHECK(rational_from_text("7/1") == Rational(7));
    CHECK_THROWS_AS(rational_from_text("7"), ParseError);
    CHECK_THROWS_AS(rational_from_text("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_text("x"), ParseError);
}

TEST_CASE("rref of a fixed matrix") {
    SparseMatrixBuilder b(3, 4);
    // rows: (1 2 3 4), (2 4 6 8), (0 1 1 0)
    int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j)
            if (vals[i][j]) b.add(i, j, Rational(vals[i][j]));
    auto m = b.build();
    auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivot_cols == std::vector<int>{0, 1});
    CHECK(r.rref.at(0, 2) == Rational(1));
    CHECK(r.rref.at(0, 3) == Rational(4));
    CHECK(r.rref.at(1, 2) == Rational(1));
    CHECK(r.rref.at(1, 3) == Rational(0));

    auto k = kernel_basis(m);
    CHECK(k.size() == 2);
    // every kernel vector annihilated by m
    for (int i = 0; i < k.size(); ++i) {
        SparseVec v;
        for (const auto& [j, x] : k.vectors.row(i)) v[j] = x;
        CHECK(m.apply(v).empty());
    }
}

TEST_CASE("rank agrees with dense elimination on random matrices") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 25; ++trial) {
        auto m = random_matrix(rng, 8, 11, 0.35);
        int rk = rank(m);
        CHECK(rk == oracle::dense_rank(m));
        auto k = kernel_basis(m);
        CHECK(rk + k.size() == m.ncols());
        for (int i = 0; i < k.size(); ++i) {
            SparseVec v;
            for (const auto& [j, x] : k.vectors.row(i)) v[j] = x;
            CHECK(m.apply(v).empty());
        }
        // kernel basis is canonical rref: pivots strictly increase
        auto kr = rref(k.vectors);
        CHECK(kr.rank == k.size());
        CHECK(kr.rref == k.vectors);
    }
}

TEST_CASE("kernel basis is independent of row order") {
    std::mt19937 rng(7);
    auto m = random_matrix(rng, 9, 9, 0.4);
    std::vector<int> perm(m.nrows());
    for (int i = 0; i < m.nrows(); ++i) perm[i] = m.nrows() - 1 - i;
    auto shuffled = m.select_rows(perm);
    CHECK(kernel_basis(m) == kernel_basis(shuffled));
    CHECK(row_space_basis(m) == row_space_basis(shuffled));
}

TEST_CASE("modular rank lower bound") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_matrix(rng, 10, 10, 0.3);
        int exact = rank(m);
        for (std::uint64_t p : {1000003ull, 2147483629ull}) {
            CHECK(modular_rank(m, p) <= exact);
            CHECK(modular_rank(m, p) == exact); // huge primes, tiny entries
        }
    }
    SparseMatrixBuilder b(1, 1);
    b.add(0, 0, rat(1, 5));
    CHECK_THROWS_AS(modular_rank(b.build(), 5), BadPrime);
}

TEST_CASE("matrix text round trip") {
    std::mt19937 rng(3);
    auto m = random_matrix(rng, 6, 7, 0.4);
    auto back = SparseMatrix::from_text(m.to_text());
    CHECK(back == m);
    CHECK(back.to_text() == m.to_text());
    CHECK_THROWS_AS(SparseMatrix::from_text("junk"), ParseError);
}

TEST_CASE("matrix algebra basics") {
    auto id = SparseMatrix::identity(4);
    std::mt19937 rng(5);
    auto m = random_matrix(rng, 4, 4, 0.6);
    CHECK(m * id == m);
    CHECK(id * m == m);
    CHECK((m - m).is_zero());
    CHECK(m.transpose().transpose() == m);
    auto st = m.vstack(m.scaled(Rational(2)));
    CHECK(st.nrows() == 8);
    CHECK(rank(st) == rank(m));
}
