#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <dgs/charpoly.hpp>
#include <dgs/cospectral.hpp>
#include <dgs/walk.hpp>

#include "support/golden12.hpp"
#include "support/util.hpp"

using dgs::Graph;
using dgs::IntMatrix;
using dgs::RatMatrix;

namespace {

Graph nonsingular_graph(std::size_t n, std::mt19937_64& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        const Graph g = testutil::random_graph(n, rng);
        if (dgs::det_bareiss(dgs::walk_matrix(g)) != 0)
            return g;
    }
    FAIL("no graph with nonsingular walk matrix found");
    return Graph(1);
}

Graph path(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        g.set_edge(i, i + 1, true);
    return g;
}

/// Half of a symmetric orthogonal matrix with all row sums 1; its level is 2,
/// so it can never be a permutation.
RatMatrix half_hadamard() {
    const int rows[4][4] = {
        {1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}};
    RatMatrix q(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            q(i, j) = mpq_class(rows[i][j], 2);
    return q;
}

} // namespace

TEST_CASE("generalized cospectrality requires both spectra") {
    // star and 4-cycle plus isolated vertex: equal adjacency spectra, but
    // the complements differ
    Graph star(5);
    for (std::size_t i = 1; i < 5; ++i)
        star.set_edge(0, i, true);
    Graph c4k1(5);
    c4k1.set_edge(0, 1, true);
    c4k1.set_edge(1, 2, true);
    c4k1.set_edge(2, 3, true);
    c4k1.set_edge(3, 0, true);

    CHECK(dgs::charpoly(star.adjacency()) == dgs::charpoly(c4k1.adjacency()));
    CHECK_FALSE(dgs::generalized_cospectral(star, c4k1));
    CHECK_THROWS_AS(dgs::recover_q(star, c4k1), dgs::NotCospectral);
}

TEST_CASE("generalized cospectrality is order-aware and reflexive") {
    CHECK_FALSE(dgs::generalized_cospectral(path(3), path(4)));
    CHECK(dgs::generalized_cospectral(path(4), path(4)));
    CHECK_THROWS_AS(dgs::recover_q(path(3), path(4)), dgs::SizeMismatch);
}

TEST_CASE("level of small rational matrices") {
    RatMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        id(i, i) = 1;
    CHECK(dgs::level(id) == 1);
    CHECK(dgs::level(half_hadamard()) == 2);

    const IntMatrix scaled = golden::five_q();
    RatMatrix q(12, 12);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j)
            q(i, j) = dgs::make_rational(scaled(i, j), 5);
    CHECK(dgs::level(q) == 5);
}

TEST_CASE("a permuted graph is recovered as a permutation matrix") {
    std::mt19937_64 rng(7101);
    const Graph g = nonsingular_graph(7, rng);
    const auto perm = testutil::random_permutation(7, rng);
    const Graph h = g.apply_permutation(perm);

    const dgs::RroMatrix rro = dgs::recover_q(g, h);
    CHECK(rro.lvl == 1);
    // Q^T A(g) Q = A(h) forces Q(i, perm[i]) = 1
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j)
            CHECK(rro.q(i, j) == (perm[i] == j ? 1 : 0));
    CHECK(dgs::verify_q_action(rro.q, g.adjacency(), h.adjacency()));
}

TEST_CASE("the frozen pair is linked by the printed level-5 matrix") {
    const Graph g = golden::pair_first();
    const Graph h = golden::pair_second();
    REQUIRE(dgs::generalized_cospectral(g, h));

    const dgs::RroMatrix rro = dgs::recover_q(g, h);
    CHECK(rro.lvl == golden::expected_level());
    const IntMatrix expected = golden::five_q();
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j)
            CHECK(rro.q(i, j) * 5 == expected(i, j));
    CHECK(dgs::verify_q_action(rro.q, g.adjacency(), h.adjacency()));

    // the defining identity: Q^T W(g) = W(h)
    const RatMatrix lhs = rro.q.transpose() * dgs::to_rational(dgs::walk_matrix(g));
    CHECK(lhs == dgs::to_rational(dgs::walk_matrix(h)));
}

TEST_CASE("recovery refuses a singular walk matrix") {
    CHECK_THROWS_AS(dgs::recover_q(path(3), path(3)),
                    dgs::SingularWalkMatrix);
}

TEST_CASE("verification rejects a wrong conjugation") {
    const Graph p4 = path(4);
    const RatMatrix q = half_hadamard();

    // orthogonal with all row and column sums 1...
    RatMatrix id(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        id(i, i) = 1;
    CHECK(q.transpose() * q == id);
    for (std::size_t i = 0; i < 4; ++i) {
        mpq_class row = 0;
        for (std::size_t j = 0; j < 4; ++j)
            row += q(i, j);
        CHECK(row == 1);
    }
    // ...but it does not carry P4 onto P4
    CHECK_FALSE(dgs::verify_q_action(q, p4.adjacency(), p4.adjacency()));

    RatMatrix p(4, 4); // honest permutation passes
    p(0, 1) = 1;
    p(1, 0) = 1;
    p(2, 3) = 1;
    p(3, 2) = 1;
    const Graph p4r = p4.apply_permutation({1, 0, 3, 2});
    CHECK(dgs::verify_q_action(p, p4.adjacency(), p4r.adjacency()));

    CHECK_THROWS_AS(
        dgs::verify_q_action(q, p4.adjacency(), path(3).adjacency()),
        dgs::SizeMismatch);
}

TEST_CASE("level divisibility on the frozen pair") {
    const auto rep =
        dgs::level_divisibility_check(golden::pair_first(),
                                      golden::pair_second());
    CHECK(rep.lvl == 5);
    CHECK(rep.gcd_last_factors == mpz_class("57269350"));
    CHECK(rep.gcd_level_bounds == 5);
    CHECK(rep.divides_last_factors);
    CHECK(rep.divides_level_bounds);
    CHECK(rep.all());
}

TEST_CASE("level divisibility is trivial for isomorphic graphs") {
    std::mt19937_64 rng(88);
    const Graph g = nonsingular_graph(6, rng);
    const Graph h = g.apply_permutation(testutil::random_permutation(6, rng));
    const auto rep = dgs::level_divisibility_check(g, h);
    CHECK(rep.lvl == 1);
    CHECK(rep.all());
}
