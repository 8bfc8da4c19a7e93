#pragma once

// A frozen 12-vertex generalized-cospectral pair linked by a rational
// orthogonal matrix of level 5, together with its expected walk-matrix
// invariants. Used as the primary end-to-end fixture.

#include <array>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include <dgs/graph.hpp>
#include <dgs/matrix.hpp>

namespace golden {

inline dgs::Graph graph_from_rows(const std::array<std::string_view, 12>& rows) {
    dgs::Graph g(12);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = i + 1; j < 12; ++j)
            if (rows[i][j] == '1')
                g.set_edge(i, j, true);
    return g;
}

inline dgs::Graph pair_first() {
    return graph_from_rows({"010101000000", "101111111011", "010010010100",
                            "110000101100", "011000101111", "110000000100",
                            "010110001000", "011000000101", "010110100010",
                            "001111010000", "010010001001", "010010010010"});
}

inline dgs::Graph pair_second() {
    return graph_from_rows({"000010101001", "000100001100", "000000101110",
                            "010001001001", "100000001001", "000100011100",
                            "101000001010", "000001001111", "111111110110",
                            "011001011011", "001000111100", "100110010100"});
}

/// Five times the rational orthogonal matrix carrying the first graph onto
/// the second.
inline dgs::IntMatrix five_q() {
    const std::array<std::array<int, 12>, 12> rows{{
        {2, 2, -1, -1, 1, 1, 3, -2, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 5, 0, 0, 0},
        {2, 2, -1, -1, 1, 1, -2, 3, 0, 0, 0, 0},
        {3, -2, 1, 1, -1, -1, 2, 2, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 0, 0},
        {1, 1, 2, 2, 3, -2, -1, -1, 0, 0, 0, 0},
        {-1, -1, 3, -2, 2, 2, 1, 1, 0, 0, 0, 0},
        {-1, -1, -2, 3, 2, 2, 1, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5},
        {-2, 3, 1, 1, -1, -1, 2, 2, 0, 0, 0, 0},
        {1, 1, 2, 2, -2, 3, -1, -1, 0, 0, 0, 0},
    }};
    dgs::IntMatrix m(12, 12);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j)
            m(i, j) = rows[i][j];
    return m;
}

inline std::vector<mpz_class> expected_snf() {
    return {1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 57269350};
}

inline mpz_class expected_abs_det() { return mpz_class("1832619200"); }

inline mpz_class expected_level() { return 5; }

/// Expected invariant factors of the reduced walk matrix at p = 2:
/// eleven ones and 57269350 / 2.
inline std::vector<mpz_class> expected_hat_snf() {
    return {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, mpz_class("28634675")};
}

} // namespace golden
