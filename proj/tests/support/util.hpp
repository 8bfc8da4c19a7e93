#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <dgs/graph.hpp>
#include <dgs/matrix.hpp>

namespace testutil {

/// Deterministic Erdos-Renyi-style graph: each edge present with probability
/// num/den.
inline dgs::Graph random_graph(std::size_t n, std::mt19937_64& rng,
                               unsigned num = 1, unsigned den = 2) {
    dgs::Graph g(n);
    std::uniform_int_distribution<unsigned> coin(0, den - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng) < num)
                g.set_edge(i, j, true);
    return g;
}

inline std::vector<std::size_t> random_permutation(std::size_t n,
                                                   std::mt19937_64& rng) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        std::swap(p[i - 1], p[pick(rng)]);
    }
    return p;
}

inline dgs::IntMatrix random_int_matrix(std::size_t rows, std::size_t cols,
                                        std::mt19937_64& rng, int lo = -9,
                                        int hi = 9) {
    dgs::IntMatrix m(rows, cols);
    std::uniform_int_distribution<int> entry(lo, hi);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = entry(rng);
    return m;
}

/// Random unimodular matrix: a product of elementary row additions and row
/// swaps applied to the identity.
inline dgs::IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng,
                                        unsigned ops = 20) {
    dgs::IntMatrix m = dgs::IntMatrix::identity(n);
    if (n < 2)
        return m;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (unsigned k = 0; k < ops; ++k) {
        const std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        if (i == j)
            j = (j + 1) % n;
        const int f = coef(rng);
        for (std::size_t c = 0; c < n; ++c)
            m(i, c) += f * m(j, c);
    }
    return m;
}

} // namespace testutil
