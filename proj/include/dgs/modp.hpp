#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "dgs/errors.hpp"
#include "dgs/factorize.hpp"
#include "dgs/matrix.hpp"

namespace dgs {

inline std::uint64_t mod_of(const mpz_class& v, std::uint64_t p) {
    return mpz_fdiv_ui(v.get_mpz_t(), p);
}

namespace detail {

inline void check_prime(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw NotPrime("modulus " + std::to_string(p) + " is not prime");
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return powmod_u64(a, p - 2, p);
}

using FpRows = std::vector<std::vector<std::uint64_t>>;

inline FpRows to_fp(const IntMatrix& m, std::uint64_t p) {
    FpRows rows(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = mod_of(m(i, j), p);
    return rows;
}

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(FpRows& a, std::uint64_t p) {
    std::vector<std::size_t> pivots;
    if (a.empty())
        return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(a[sel], a[r]);
        const std::uint64_t inv = inv_mod(a[r][c], p);
        for (std::size_t j = c; j < cols; ++j)
            a[r][j] = mulmod_u64(a[r][j], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            const std::uint64_t f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                std::uint64_t sub = mulmod_u64(f, a[r][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

inline std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
    detail::check_prime(p);
    auto rows = detail::to_fp(m, p);
    return detail::rref(rows, p).size();
}

/// Basis of the right nullspace of m over F_p, one vector per free column.
inline std::vector<std::vector<std::uint64_t>>
nullspace_mod_p(const IntMatrix& m, std::uint64_t p) {
    detail::check_prime(p);
    auto rows = detail::to_fp(m, p);
    const auto pivots = detail::rref(rows, p);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c])
            continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[free_c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const std::uint64_t coef = rows[r][free_c];
            v[pivots[r]] = coef == 0 ? 0 : p - coef;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of a x = b over F_p, or nullopt when inconsistent.
inline std::optional<std::vector<std::uint64_t>>
solve_mod_p(const IntMatrix& a, const std::vector<mpz_class>& b,
            std::uint64_t p) {
    detail::check_prime(p);
    if (b.size() != a.rows())
        throw SizeMismatch("right-hand side length does not match rows");
    auto rows = detail::to_fp(a, p);
    for (std::size_t i = 0; i < a.rows(); ++i)
        rows[i].push_back(mod_of(b[i], p));
    const auto pivots = detail::rref(rows, p);
    const std::size_t cols = a.cols();
    if (!pivots.empty() && pivots.back() == cols)
        return std::nullopt; // pivot in the augmented column
    std::vector<std::uint64_t> x(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = rows[r][cols];
    return x;
}

/// f evaluated at x over F_p, coefficients ascending in the exponent.
inline std::uint64_t eval_poly_mod_p(const std::vector<mpz_class>& f,
                                     std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (std::size_t k = f.size(); k-- > 0;)
        acc = (detail::mulmod_u64(acc, x % p, p) + mod_of(f[k], p)) % p;
    return acc;
}

/// Number of distinct roots of f in F_p by direct evaluation.
inline std::size_t count_roots_mod_p(const std::vector<mpz_class>& f,
                                     std::uint64_t p) {
    detail::check_prime(p);
    std::size_t count = 0;
    for (std::uint64_t x = 0; x < p; ++x)
        if (eval_poly_mod_p(f, x, p) == 0)
            ++count;
    return count;
}

} // namespace dgs
