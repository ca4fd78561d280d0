#include "doctest.h"

#include "curvmod/liealg.hpp"

using namespace curvmod;

TEST_CASE("split so(n) standard representations") {
    for (int n : {3, 4, 5, 6}) {
        auto rho = so_split(n);
        CHECK(rho.algebra->dim() == n * (n - 1) / 2);
        CHECK(rho.dim == n);
        CHECK(check_jacobi(*rho.algebra));
        CHECK(check_representation(rho));
        // standard rep of so is faithful: no matrix is zero
        for (const auto& m : rho.action) CHECK(!m.is_zero());
    }
}

TEST_CASE("half-spinor representations") {
    for (int n : {6, 10}) {
        for (auto par : {Parity::Even, Parity::Odd}) {
            auto s = half_spinor_rep(n, par);
            CHECK(s.dim == (1 << (n / 2 - 1)));
            CHECK(s.algebra->dim() == n * (n - 1) / 2);
            CHECK(check_representation(s));
        }
    }
}

TEST_CASE("gl and sl") {
    auto g = gl_rep(2);
    CHECK(g.algebra->dim() == 4);
    CHECK(check_jacobi(*g.algebra));
    CHECK(check_representation(g));
    auto s = sl_rep(3);
    CHECK(s.algebra->dim() == 8);
    CHECK(check_representation(s));
}

TEST_CASE("appending a center") {
    auto rho = append_center(so_split(4));
    CHECK(rho.algebra->dim() == 7);
    CHECK(check_jacobi(*rho.algebra));
    CHECK(check_representation(rho));
    CHECK(rho.action.back() == SparseMatrix::identity(4));
    // the center really commutes
    for (int i = 0; i < 7; ++i) CHECK(rho.algebra->bracket(i, 6).empty());
}

TEST_CASE("tensor functors stay representations") {
    auto rho = so_split(4);
    auto d = dual_rep(rho);
    CHECK(check_representation(d));
    auto w = wedge_rep(rho, 2);
    CHECK(w.dim == 6);
    CHECK(check_representation(w));
    auto t = tensor_rep(d, rho);
    CHECK(t.dim == 16);
    CHECK(check_representation(t));
}

TEST_CASE("increasing tuples enumeration") {
    auto t = increasing_tuples(4, 2);
    CHECK(t.size() == 6);
    CHECK(t.front() == std::vector<int>{0, 1});
    CHECK(t.back() == std::vector<int>{2, 3});
    CHECK(increasing_tuples(3, 0).size() == 1);
    CHECK(increasing_tuples(3, 4).empty());
}

TEST_CASE("adjoint representation") {
    auto rho = so_split(5);
    auto ad = adjoint_rep(rho.algebra);
    CHECK(ad.dim == 10);
    CHECK(check_representation(ad));
}
