#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "dgs/matrix.hpp"

namespace dgs {

/// Integer coefficients c1..cn of the monic characteristic polynomial
/// x^n + c1 x^(n-1) + ... + cn. For adjacency matrices c1 = 0.
struct CharPoly {
    std::vector<mpz_class> c;

    std::size_t degree() const { return c.size(); }

    bool operator==(const CharPoly& o) const { return c == o.c; }
    bool operator!=(const CharPoly& o) const { return c != o.c; }

    /// Full coefficient list in ascending order of the exponent:
    /// a[0] = cn, ..., a[n-1] = c1, a[n] = 1.
    std::vector<mpz_class> ascending() const {
        const std::size_t n = c.size();
        std::vector<mpz_class> a(n + 1);
        for (std::size_t i = 0; i < n; ++i)
            a[i] = c[n - 1 - i];
        a[n] = 1;
        return a;
    }

    static CharPoly from_ascending(const std::vector<mpz_class>& a) {
        CharPoly p;
        const std::size_t n = a.size() - 1;
        p.c.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            p.c[i] = a[n - 1 - i];
        return p;
    }

    mpz_class eval(const mpz_class& x) const {
        mpz_class acc = 1;
        for (const mpz_class& ci : c)
            acc = acc * x + ci;
        return acc;
    }
};

/// Exact determinant by Bareiss fraction-free elimination. All intermediate
/// divisions are exact; no rationals are formed.
inline mpz_class det_bareiss(const IntMatrix& m) {
    if (!m.is_square())
        throw NonSquare("determinant requires a square matrix");
    const std::size_t n = m.rows();
    IntMatrix a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0)
                ++piv;
            if (piv == n)
                return 0;
            for (std::size_t j = k; j < n; ++j)
                std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : mpz_class(-a(n - 1, n - 1));
}

namespace detail {

// Exact division tag dispatch: mpz uses divexact, machine integers plain /.
inline void div_exact(mpz_class& q, const mpz_class& num, long k) {
    mpz_class d(k);
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
}

inline void div_exact(long long& q, const long long& num, long k) { q = num / k; }

} // namespace detail

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence
///   M_1 = A,  c_k = -tr(M_k)/k,  M_{k+1} = A (M_k + c_k I).
/// Every division is exact. Works for any exact scalar type.
template <class T>
std::vector<T> faddeev_leverrier(const Matrix<T>& a) {
    if (!a.is_square())
        throw NonSquare("charpoly requires a square matrix");
    const std::size_t n = a.rows();
    std::vector<T> c(n);
    Matrix<T> m = a;
    for (std::size_t k = 1;; ++k) {
        T tr(0);
        for (std::size_t i = 0; i < n; ++i)
            tr += m(i, i);
        detail::div_exact(c[k - 1], T(-tr), static_cast<long>(k));
        if (k == n)
            break;
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) += c[k - 1];
        m = a * m;
    }
    return c;
}

inline CharPoly charpoly(const IntMatrix& m) {
    CharPoly p;
    p.c = faddeev_leverrier(m);
    return p;
}

/// phi(m) as a matrix identity (Cayley-Hamilton check helper).
inline IntMatrix eval_poly_at_matrix(const CharPoly& p, const IntMatrix& m) {
    const std::size_t n = m.rows();
    IntMatrix acc = IntMatrix::identity(n);
    for (const mpz_class& ci : p.c) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i)
            acc(i, i) += ci;
    }
    return acc;
}

/// Coefficients of f(-1-x) for f given in ascending order.
inline std::vector<mpz_class>
substitute_neg_one_minus_x(const std::vector<mpz_class>& f) {
    // Horner from the top: acc <- acc*(-1-x) + f_k
    std::vector<mpz_class> acc;
    for (std::size_t k = f.size(); k-- > 0;) {
        std::vector<mpz_class> next(acc.size() + 1);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] -= acc[i];     // -1 * acc
            next[i + 1] -= acc[i]; // -x * acc
        }
        if (next.empty())
            next.resize(1);
        next[0] += f[k];
        // trim leading zeros to keep sizes tight
        while (next.size() > 1 && next.back() == 0)
            next.pop_back();
        acc = std::move(next);
    }
    return acc;
}

} // namespace dgs
