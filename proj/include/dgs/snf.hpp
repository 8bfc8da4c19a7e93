#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dgs/matrix.hpp"

namespace dgs {

/// Smith Normal Form of an integer matrix: invariant factors d with
/// d[i] | d[i+1] (trailing zeros for rank-deficient inputs) and, on request,
/// unimodular transforms with  input = u * diag(d) * v.
struct SnfDecomposition {
    std::vector<mpz_class> d;
    std::optional<IntMatrix> u;
    std::optional<IntMatrix> v;
};

namespace detail {

// Elementary-operation bookkeeping for SNF. Row/column operations applied to
// the work matrix are mirrored by inverse operations on u and v so that
// u * s * v stays equal to the original input throughout.
class SnfWorker {
  public:
    SnfWorker(const IntMatrix& m, bool want_transforms)
        : s_(m), track_(want_transforms) {
        if (track_) {
            u_ = IntMatrix::identity(m.rows());
            v_ = IntMatrix::identity(m.cols());
        }
    }

    SnfDecomposition run() {
        const std::size_t k = std::min(s_.rows(), s_.cols());
        for (std::size_t t = 0; t < k; ++t) {
            if (!bring_pivot(t))
                break; // remaining submatrix is zero
            reduce_pivot(t);
        }
        SnfDecomposition out;
        out.d.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            out.d[i] = s_(i, i);
        if (track_) {
            out.u = std::move(u_);
            out.v = std::move(v_);
        }
        return out;
    }

  private:
    IntMatrix s_;
    IntMatrix u_, v_;
    bool track_;

    void row_swap(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < s_.cols(); ++c)
            std::swap(s_(i, c), s_(j, c));
        if (track_)
            for (std::size_t r = 0; r < u_.rows(); ++r)
                std::swap(u_(r, i), u_(r, j));
    }

    void col_swap(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < s_.rows(); ++r)
            std::swap(s_(r, i), s_(r, j));
        if (track_)
            for (std::size_t c = 0; c < v_.cols(); ++c)
                std::swap(v_(i, c), v_(j, c));
    }

    // s.row(i) += f * s.row(j);  u.col(j) -= f * u.col(i)
    void row_axpy(std::size_t i, std::size_t j, const mpz_class& f) {
        if (f == 0)
            return;
        for (std::size_t c = 0; c < s_.cols(); ++c)
            s_(i, c) += f * s_(j, c);
        if (track_)
            for (std::size_t r = 0; r < u_.rows(); ++r)
                u_(r, j) -= f * u_(r, i);
    }

    // s.col(j) += f * s.col(i);  v.row(i) -= f * v.row(j)
    void col_axpy(std::size_t j, std::size_t i, const mpz_class& f) {
        if (f == 0)
            return;
        for (std::size_t r = 0; r < s_.rows(); ++r)
            s_(r, j) += f * s_(r, i);
        if (track_)
            for (std::size_t c = 0; c < v_.cols(); ++c)
                v_(i, c) -= f * v_(j, c);
    }

    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < s_.cols(); ++c)
            s_(i, c) = -s_(i, c);
        if (track_)
            for (std::size_t r = 0; r < u_.rows(); ++r)
                u_(r, i) = -u_(r, i);
    }

    // Unimodular 2x2 transform on rows (i, j): the Blankinship step taking
    // (s(i,c0), s(j,c0)) to (gcd, 0). p*a + q*b = g, a' = a/g, b' = b/g.
    void row_gcd_step(std::size_t i, std::size_t j, std::size_t c0) {
        mpz_class a = s_(i, c0), b = s_(j, c0), g, p, q;
        mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        mpz_class ar = a / g, br = b / g;
        for (std::size_t c = 0; c < s_.cols(); ++c) {
            mpz_class si = s_(i, c), sj = s_(j, c);
            s_(i, c) = p * si + q * sj;
            s_(j, c) = -br * si + ar * sj;
        }
        if (track_)
            for (std::size_t r = 0; r < u_.rows(); ++r) {
                mpz_class ui = u_(r, i), uj = u_(r, j);
                u_(r, i) = ar * ui + br * uj;
                u_(r, j) = -q * ui + p * uj;
            }
    }

    // Same on columns (i, j), taking (s(r0,i), s(r0,j)) to (gcd, 0).
    void col_gcd_step(std::size_t i, std::size_t j, std::size_t r0) {
        mpz_class a = s_(r0, i), b = s_(r0, j), g, p, q;
        mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        mpz_class ar = a / g, br = b / g;
        for (std::size_t r = 0; r < s_.rows(); ++r) {
            mpz_class si = s_(r, i), sj = s_(r, j);
            s_(r, i) = p * si + q * sj;
            s_(r, j) = -br * si + ar * sj;
        }
        if (track_)
            for (std::size_t c = 0; c < v_.cols(); ++c) {
                mpz_class vi = v_(i, c), vj = v_(j, c);
                v_(i, c) = ar * vi + br * vj;
                v_(j, c) = -q * vi + p * vj;
            }
    }

    // Move a nonzero entry of the trailing submatrix (smallest absolute
    // value, for size control) into the (t, t) pivot slot. Returns false if
    // the submatrix is zero.
    bool bring_pivot(std::size_t t) {
        std::size_t bi = t, bj = t;
        bool found = false;
        for (std::size_t i = t; i < s_.rows(); ++i)
            for (std::size_t j = t; j < s_.cols(); ++j) {
                if (s_(i, j) == 0)
                    continue;
                if (!found || cmpabs(s_(i, j), s_(bi, bj)) < 0) {
                    bi = i;
                    bj = j;
                    found = true;
                }
            }
        if (!found)
            return false;
        if (bi != t)
            row_swap(bi, t);
        if (bj != t)
            col_swap(bj, t);
        return true;
    }

    static int cmpabs(const mpz_class& a, const mpz_class& b) {
        return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
    }

    // Clear row and column t and make the pivot divide the whole trailing
    // submatrix, so the diagonal comes out already divisibility-chained.
    void reduce_pivot(std::size_t t) {
        for (;;) {
            bool clean = true;
            // clear the pivot column
            for (std::size_t i = t + 1; i < s_.rows(); ++i) {
                if (s_(i, t) == 0)
                    continue;
                clean = false;
                if (s_(i, t) % s_(t, t) == 0)
                    row_axpy(i, t, -(s_(i, t) / s_(t, t)));
                else
                    row_gcd_step(t, i, t);
            }
            // clear the pivot row
            for (std::size_t j = t + 1; j < s_.cols(); ++j) {
                if (s_(t, j) == 0)
                    continue;
                clean = false;
                if (s_(t, j) % s_(t, t) == 0)
                    col_axpy(j, t, -(s_(t, j) / s_(t, t)));
                else
                    col_gcd_step(t, j, t);
            }
            if (!clean)
                continue; // column ops may have refilled the row, re-check
            // enforce pivot | trailing submatrix
            bool divides_all = true;
            for (std::size_t i = t + 1; i < s_.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < s_.cols(); ++j)
                    if (s_(i, j) % s_(t, t) != 0) {
                        row_axpy(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all)
                break;
        }
        if (s_(t, t) < 0)
            row_negate(t);
    }
};

} // namespace detail

/// Smith Normal Form by gcd-pivoting row/column reduction. Rank-deficient
/// and non-square inputs are fine; zero invariant factors trail. With
/// want_transforms, u and v are unimodular and u * diag(d) * v equals the
/// input exactly.
inline SnfDecomposition snf(const IntMatrix& m, bool want_transforms = false) {
    return detail::SnfWorker(m, want_transforms).run();
}

/// Rebuild the rows x cols rectangular diagonal matrix from invariant
/// factors (test and verification helper).
inline IntMatrix snf_diagonal(const std::vector<mpz_class>& d, std::size_t rows,
                              std::size_t cols) {
    IntMatrix s(rows, cols);
    for (std::size_t i = 0; i < d.size() && i < std::min(rows, cols); ++i)
        s(i, i) = d[i];
    return s;
}

} // namespace dgs
