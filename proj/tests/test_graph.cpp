#include <catch2/catch_amalgamated.hpp>

#include <dgs/graph.hpp>

#include "support/util.hpp"

using dgs::Graph;

TEST_CASE("graph basics") {
    Graph g(4);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 0);
    g.set_edge(0, 3, true);
    CHECK(g.edge(0, 3));
    CHECK(g.edge(3, 0));
    CHECK(g.degree(0) == 1);
    g.set_edge(0, 3, false);
    CHECK(g.edge_count() == 0);
    CHECK_THROWS_AS(g.set_edge(2, 2, true), dgs::Error);
    CHECK_THROWS_AS(Graph(65), dgs::SizeLimitExceeded);
}

TEST_CASE("complement") {
    Graph p3(3);
    p3.set_edge(0, 1, true);
    p3.set_edge(1, 2, true);
    const Graph c = p3.complement();
    CHECK(c.edge_count() == 1);
    CHECK(c.edge(0, 2));
    CHECK(c.complement() == p3);
    for (std::size_t n : {1u, 2u, 63u, 64u}) {
        const Graph empty(n);
        const Graph full = empty.complement();
        CHECK(full.edge_count() == n * (n - 1) / 2);
        CHECK(full.complement() == empty);
    }
}

TEST_CASE("graph6 single-character forms") {
    const Graph k1 = dgs::parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(dgs::emit_graph6(k1) == "@");

    // two vertices, one edge
    const Graph k2 = dgs::parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.edge(0, 1));
    CHECK(dgs::emit_graph6(k2) == "A_");

    // two vertices, no edge
    const Graph e2 = dgs::parse_graph6("A?");
    CHECK(e2.edge_count() == 0);
}

TEST_CASE("graph6 known small graphs") {
    // P3 as 0-1, 1-2
    Graph p3(3);
    p3.set_edge(0, 1, true);
    p3.set_edge(1, 2, true);
    CHECK(dgs::emit_graph6(p3) == "Bg");
    CHECK(dgs::parse_graph6("Bg") == p3);

    // C4: DQc in canonical nauty output ordering of its own labeling
    Graph c4(4);
    c4.set_edge(0, 1, true);
    c4.set_edge(1, 2, true);
    c4.set_edge(2, 3, true);
    c4.set_edge(0, 3, true);
    CHECK(dgs::parse_graph6(dgs::emit_graph6(c4)) == c4);
}

TEST_CASE("graph6 accepts header and trailing newline") {
    const Graph g = dgs::parse_graph6(">>graph6<<A_\n");
    CHECK(g.order() == 2);
    CHECK(g.edge(0, 1));
}

TEST_CASE("graph6 long form for 63 and 64 vertices") {
    for (std::size_t n : {63u, 64u}) {
        std::mt19937_64 rng(n);
        const Graph g = testutil::random_graph(n, rng);
        const std::string s = dgs::emit_graph6(g);
        CHECK(s[0] == 126);
        CHECK(s.size() == 4 + (n * (n - 1) / 2 + 5) / 6);
        CHECK(dgs::parse_graph6(s) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(dgs::parse_graph6(""), dgs::MalformedGraph6);
    CHECK_THROWS_AS(dgs::parse_graph6("A"), dgs::MalformedGraph6);
    CHECK_THROWS_AS(dgs::parse_graph6("A_extra"), dgs::MalformedGraph6);
    CHECK_THROWS_AS(dgs::parse_graph6("A "), dgs::MalformedGraph6);
    CHECK_THROWS_AS(dgs::parse_graph6("\x1fgarbage"), dgs::MalformedGraph6);
    CHECK_THROWS_AS(dgs::parse_graph6("~~A_"), dgs::MalformedGraph6);
    CHECK_THROWS_AS(dgs::parse_graph6("~?"), dgs::MalformedGraph6);
    // overlong encoding of a small order
    CHECK_THROWS_AS(dgs::parse_graph6("~??@"), dgs::MalformedGraph6);
    // n = 65 uses the long form and exceeds the library limit
    CHECK_THROWS_AS(dgs::parse_graph6("~?@A"), dgs::SizeLimitExceeded);
}

TEST_CASE("graph6 rejects nonzero padding") {
    // K1 plus padding: n = 3 needs 3 bits, chars carry 6; low bits must be 0
    const Graph p3 = dgs::parse_graph6("Bg");
    std::string s = dgs::emit_graph6(p3);
    s.back() = static_cast<char>(s.back() + 1); // flip a padding bit
    CHECK_THROWS_AS(dgs::parse_graph6(s), dgs::MalformedGraph6);
}

TEST_CASE("graph6 round trip on 1000 random graphs") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng() % 20;
        const Graph g = testutil::random_graph(n, rng);
        CHECK(dgs::parse_graph6(dgs::emit_graph6(g)) == g);
    }
}

TEST_CASE("permutation relabeling") {
    Graph p3(3);
    p3.set_edge(0, 1, true);
    p3.set_edge(1, 2, true);
    const Graph h = p3.apply_permutation({2, 0, 1});
    // vertex 1 (the center) became vertex 0
    CHECK(h.degree(0) == 2);
    CHECK(h.edge(0, 2));
    CHECK(h.edge(0, 1));
    CHECK_FALSE(h.edge(1, 2));
    CHECK_THROWS_AS(p3.apply_permutation({0, 1}), dgs::SizeMismatch);
}

TEST_CASE("isomorphism finds a witness") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 9;
        const Graph g = testutil::random_graph(n, rng);
        const auto perm = testutil::random_permutation(n, rng);
        const Graph h = g.apply_permutation(perm);
        const auto witness = dgs::are_isomorphic(g, h);
        REQUIRE(witness.has_value());
        CHECK(g.apply_permutation(*witness) == h);
    }
}

TEST_CASE("isomorphism rejects non-isomorphic graphs") {
    Graph p4(4);
    p4.set_edge(0, 1, true);
    p4.set_edge(1, 2, true);
    p4.set_edge(2, 3, true);
    Graph star(4);
    star.set_edge(0, 1, true);
    star.set_edge(0, 2, true);
    star.set_edge(0, 3, true);
    CHECK_FALSE(dgs::are_isomorphic(p4, star).has_value());

    // same degree sequence, different graphs: C6 vs two triangles
    Graph c6(6);
    for (int i = 0; i < 6; ++i)
        c6.set_edge(i, (i + 1) % 6, true);
    Graph tt(6);
    tt.set_edge(0, 1, true);
    tt.set_edge(1, 2, true);
    tt.set_edge(0, 2, true);
    tt.set_edge(3, 4, true);
    tt.set_edge(4, 5, true);
    tt.set_edge(3, 5, true);
    CHECK_FALSE(dgs::are_isomorphic(c6, tt).has_value());

    Graph k2(2);
    k2.set_edge(0, 1, true);
    CHECK_FALSE(dgs::are_isomorphic(k2, Graph(2)).has_value());
    CHECK_FALSE(dgs::are_isomorphic(k2, Graph(3)).has_value());
    CHECK_THROWS_AS(dgs::are_isomorphic(Graph(17), Graph(17)),
                    dgs::SizeLimitExceeded);
}

TEST_CASE("isomorphism on regular graphs needs real search") {
    // Petersen graph vs a random relabeling
    Graph pet(10);
    for (int i = 0; i < 5; ++i) {
        pet.set_edge(i, (i + 1) % 5, true);       // outer cycle
        pet.set_edge(5 + i, 5 + (i + 2) % 5, true); // inner star
        pet.set_edge(i, 5 + i, true);             // spokes
    }
    std::mt19937_64 rng(59);
    const auto perm = testutil::random_permutation(10, rng);
    const auto witness = dgs::are_isomorphic(pet, pet.apply_permutation(perm));
    REQUIRE(witness.has_value());
    CHECK(pet.apply_permutation(*witness) == pet.apply_permutation(perm));

    // C10 is 2-regular like the Petersen spokes are not; compare C10 vs 2C5
    Graph c10(10);
    for (int i = 0; i < 10; ++i)
        c10.set_edge(i, (i + 1) % 10, true);
    Graph c55(10);
    for (int i = 0; i < 5; ++i) {
        c55.set_edge(i, (i + 1) % 5, true);
        c55.set_edge(5 + i, 5 + (i + 1) % 5, true);
    }
    CHECK_FALSE(dgs::are_isomorphic(c10, c55).has_value());
}
