#include <catch2/catch_amalgamated.hpp>

#include <dgs/charpoly.hpp>
#include <dgs/graph.hpp>

#include "support/oracles.hpp"
#include "support/util.hpp"

using dgs::CharPoly;
using dgs::IntMatrix;

TEST_CASE("charpoly of the triangle") {
    dgs::Graph k3(3);
    k3.set_edge(0, 1, true);
    k3.set_edge(0, 2, true);
    k3.set_edge(1, 2, true);
    const CharPoly p = dgs::charpoly(k3.adjacency());
    REQUIRE(p.c.size() == 3);
    CHECK(p.c[0] == 0);  // trace term
    CHECK(p.c[1] == -3); // x^3 - 3x - 2
    CHECK(p.c[2] == -2);
}

TEST_CASE("charpoly matches the cofactor-expansion oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const IntMatrix a = testutil::random_int_matrix(n, n, rng, -5, 5);
        CHECK(dgs::charpoly(a).ascending() == oracle::charpoly_cofactor(a));
    }
}

TEST_CASE("charpoly satisfies its own matrix equation") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const IntMatrix a = testutil::random_int_matrix(n, n, rng, -4, 4);
        CHECK(dgs::eval_poly_at_matrix(dgs::charpoly(a), a).is_zero());
    }
}

TEST_CASE("charpoly works on a machine-integer matrix") {
    dgs::Graph g(4);
    g.set_edge(0, 1, true);
    g.set_edge(1, 2, true);
    g.set_edge(2, 3, true);
    const auto fast = dgs::faddeev_leverrier(g.adjacency_as<long long>());
    const auto exact = dgs::charpoly(g.adjacency()).c;
    REQUIRE(fast.size() == exact.size());
    for (std::size_t i = 0; i < fast.size(); ++i)
        CHECK(mpz_class(static_cast<long>(fast[i])) == exact[i]);
}

TEST_CASE("ascending and eval agree") {
    CharPoly p;
    p.c = {mpz_class(-2), mpz_class(0), mpz_class(5)}; // x^3 - 2x^2 + 5
    const auto a = p.ascending();
    REQUIRE(a.size() == 4);
    CHECK(a[0] == 5);
    CHECK(a[3] == 1);
    CHECK(CharPoly::from_ascending(a) == p);
    CHECK(p.eval(2) == 5);  // 8 - 8 + 5
    CHECK(p.eval(0) == 5);
    CHECK(p.eval(-1) == 2); // -1 - 2 + 5
}

TEST_CASE("determinant by Bareiss matches cofactor expansion") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const IntMatrix a = testutil::random_int_matrix(n, n, rng, -7, 7);
        CHECK(dgs::det_bareiss(a) == oracle::det_cofactor(a));
    }
    CHECK_THROWS_AS(dgs::det_bareiss(IntMatrix(2, 3)), dgs::NonSquare);
}

TEST_CASE("determinant handles zero pivots") {
    IntMatrix a(3, 3);
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(2, 2) = 1;
    CHECK(dgs::det_bareiss(a) == -1);
    IntMatrix z(3, 3);
    z(0, 1) = 1;
    z(1, 1) = 2;
    z(2, 1) = 3;
    CHECK(dgs::det_bareiss(z) == 0);
}

TEST_CASE("substitution x -> -1-x") {
    // f(x) = x^2: f(-1-x) = x^2 + 2x + 1
    const auto r = dgs::substitute_neg_one_minus_x(
        {mpz_class(0), mpz_class(0), mpz_class(1)});
    REQUIRE(r.size() == 3);
    CHECK(r[0] == 1);
    CHECK(r[1] == 2);
    CHECK(r[2] == 1);

    // constant stays fixed
    const auto c = dgs::substitute_neg_one_minus_x({mpz_class(7)});
    REQUIRE(c.size() == 1);
    CHECK(c[0] == 7);

    // applying the substitution twice is the identity
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::vector<mpz_class> f(6);
    for (auto& x : f)
        x = coef(rng);
    f.back() = 1;
    CHECK(dgs::substitute_neg_one_minus_x(
              dgs::substitute_neg_one_minus_x(f)) == f);
}
