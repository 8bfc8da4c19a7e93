#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "dgs/charpoly.hpp"
#include "dgs/errors.hpp"
#include "dgs/graph.hpp"
#include "dgs/matrix.hpp"
#include "dgs/modp.hpp"

namespace dgs {

/// W = [e, Ae, ..., A^(n-1)e] for the all-ones vector e.
inline IntMatrix walk_matrix(const IntMatrix& a) {
    if (!a.is_square())
        throw NonSquare("walk matrix requires a square matrix");
    const std::size_t n = a.rows();
    IntMatrix w(n, n);
    std::vector<mpz_class> col(n, 1);
    for (std::size_t j = 0; j < n; ++j) {
        w.set_column(j, col);
        if (j + 1 < n)
            col = a.apply(col);
    }
    return w;
}

inline IntMatrix walk_matrix(const Graph& g) {
    return walk_matrix(g.adjacency());
}

inline IntMatrix shifted_adjacency(const Graph& g, const mpz_class& t) {
    IntMatrix a = g.adjacency();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(i, j) += t;
    return a;
}

/// Walk matrix of A + tJ.
inline IntMatrix shifted_walk_matrix(const Graph& g, const mpz_class& t) {
    return walk_matrix(shifted_adjacency(g, t));
}

/// Monic polynomial of least degree r = rank_p(W) with M(A) e = 0 over F_p:
/// M(x) = a0 + a1 x + ... + a_{r-1} x^(r-1) + x^r.
struct AnnihilatorPoly {
    std::uint64_t p = 0;
    std::size_t r = 0;
    std::vector<std::uint64_t> coeffs; // a0..a_{r-1}, reduced mod p
};

namespace detail {

inline std::vector<mpz_class> annihilated_vector(const IntMatrix& a,
                                                 const IntMatrix& w,
                                                 const AnnihilatorPoly& m) {
    const std::size_t n = w.rows();
    // x^r applied to e: column r of W, or A times the last column at r = n.
    std::vector<mpz_class> v =
        m.r < n ? w.column(m.r) : a.apply(w.column(n - 1));
    for (std::size_t i = 0; i < m.r; ++i) {
        if (m.coeffs[i] == 0)
            continue;
        const mpz_class c(static_cast<unsigned long>(m.coeffs[i]));
        const auto wi = w.column(i);
        for (std::size_t k = 0; k < n; ++k)
            v[k] += c * wi[k];
    }
    return v;
}

} // namespace detail

inline AnnihilatorPoly annihilator_poly(const Graph& g, std::uint64_t p) {
    detail::check_prime(p);
    const IntMatrix a = g.adjacency();
    const IntMatrix w = walk_matrix(a);
    const std::size_t n = w.rows();
    AnnihilatorPoly m;
    m.p = p;
    m.r = rank_mod_p(w, p);
    if (m.r == 0) {
        // Only possible at p = n = 1 never; rank >= 1 since e != 0 mod p.
        throw RankHypothesisFailed("walk matrix has rank 0 mod p");
    }
    IntMatrix head(n, m.r);
    for (std::size_t j = 0; j < m.r; ++j)
        head.set_column(j, w.column(j));
    std::vector<mpz_class> target =
        m.r < n ? w.column(m.r) : a.apply(w.column(n - 1));
    for (mpz_class& t : target)
        t = -t;
    auto sol = solve_mod_p(head, target, p);
    if (!sol)
        throw RankHypothesisFailed(
            "no annihilator of degree rank_p(W) exists");
    m.coeffs = *sol;

    std::vector<mpz_class> v = detail::annihilated_vector(a, w, m);
    for (const mpz_class& x : v)
        if (mod_of(x, p) != 0)
            throw RankHypothesisFailed("annihilator fails to kill e mod p");
    return m;
}

/// M(A) e as an integer vector, entries divisible by p.
inline std::vector<mpz_class> bar_vector(const Graph& g,
                                         const AnnihilatorPoly& m) {
    const IntMatrix a = g.adjacency();
    const IntMatrix w = walk_matrix(a);
    return detail::annihilated_vector(a, w, m);
}

namespace detail {

inline IntMatrix stacked_walk_matrix(const Graph& g, const AnnihilatorPoly& m,
                                     const std::vector<mpz_class>& seed) {
    const IntMatrix a = g.adjacency();
    const IntMatrix w = walk_matrix(a);
    const std::size_t n = w.rows();
    IntMatrix out(n, n);
    for (std::size_t j = 0; j < m.r; ++j)
        out.set_column(j, w.column(j));
    std::vector<mpz_class> col = seed;
    for (std::size_t j = m.r; j < n; ++j) {
        out.set_column(j, col);
        if (j + 1 < n)
            col = a.apply(col);
    }
    return out;
}

} // namespace detail

/// Columns e, Ae, ..., A^(r-1)e, v, Av, ..., A^(n-r-1)v with v = M(A)e.
inline IntMatrix bar_walk_matrix(const Graph& g, const AnnihilatorPoly& m) {
    return detail::stacked_walk_matrix(g, m, bar_vector(g, m));
}

/// Same stack built from v/p; the division must be exact.
inline IntMatrix hat_walk_matrix(const Graph& g, const AnnihilatorPoly& m) {
    std::vector<mpz_class> v = bar_vector(g, m);
    const mpz_class p(static_cast<unsigned long>(m.p));
    for (mpz_class& x : v) {
        if (!mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()))
            throw NonIntegralColumn("annihilated vector is not divisible by p");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    }
    return detail::stacked_walk_matrix(g, m, v);
}

/// Explicit polynomial in A that kills e mod 2, built from the coefficients
/// of the characteristic polynomial: degree ceil(n/2), using every second
/// coefficient from the bottom.
inline IntMatrix even_annihilator_matrix(const Graph& g) {
    const IntMatrix a = g.adjacency();
    const std::size_t n = a.rows();
    const CharPoly phi = charpoly(a);
    const std::size_t deg = (n + 1) / 2;
    // Coefficient of A^(deg-k) is c_{2k}; at odd order the constant slot
    // would ask for c_{n+1}, which is zero.
    std::vector<mpz_class> sel(deg + 1);
    sel[deg] = 1;
    for (std::size_t k = 1; k <= deg; ++k) {
        const std::size_t idx = 2 * k;
        sel[deg - k] = idx <= n ? phi.c[idx - 1] : mpz_class(0);
    }
    IntMatrix acc(n, n);
    for (std::size_t i = 0; i < n; ++i)
        acc(i, i) = sel[deg];
    for (std::size_t k = deg; k-- > 0;) {
        acc = acc * a;
        for (std::size_t i = 0; i < n; ++i)
            acc(i, i) += sel[k];
    }
    return acc;
}

} // namespace dgs
