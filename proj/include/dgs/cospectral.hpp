#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dgs/certify.hpp"
#include "dgs/charpoly.hpp"
#include "dgs/errors.hpp"
#include "dgs/graph.hpp"
#include "dgs/matrix.hpp"
#include "dgs/snf.hpp"
#include "dgs/walk.hpp"

namespace dgs {

/// Equal spectra of both the graphs and their complements.
inline bool generalized_cospectral(const Graph& g, const Graph& h) {
    if (g.order() != h.order())
        return false;
    return charpoly(g.adjacency()) == charpoly(h.adjacency()) &&
           charpoly(g.complement().adjacency()) ==
               charpoly(h.complement().adjacency());
}

/// Least k such that k q is an integer matrix.
inline mpz_class level(const RatMatrix& q) {
    mpz_class l = 1;
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j)
            l = lcm(l, q(i, j).get_den());
    return l;
}

/// Orthogonality, row and column sums 1, and conjugation of the first
/// adjacency matrix onto the second.
inline bool verify_q_action(const RatMatrix& q, const IntMatrix& ag,
                            const IntMatrix& ah) {
    const std::size_t n = q.rows();
    if (q.cols() != n || ag.rows() != n || !ag.is_square() ||
        ah.rows() != n || !ah.is_square())
        throw SizeMismatch("matrix sizes do not agree");
    const RatMatrix qt = q.transpose();
    RatMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i)
        id(i, i) = 1;
    if (qt * q != id)
        return false;
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class row = 0, col = 0;
        for (std::size_t j = 0; j < n; ++j) {
            row += q(i, j);
            col += q(j, i);
        }
        if (row != 1 || col != 1)
            return false;
    }
    return qt * to_rational(ag) * q == to_rational(ah);
}

struct RroMatrix {
    RatMatrix q;
    mpz_class lvl;
};

/// The unique regular rational orthogonal matrix with Q^T A(g) Q = A(h),
/// read off the two walk matrices. Requires generalized cospectrality and a
/// nonsingular walk matrix; the result is verified before it is returned.
inline RroMatrix recover_q(const Graph& g, const Graph& h) {
    if (g.order() != h.order())
        throw SizeMismatch("graphs have different orders");
    if (!generalized_cospectral(g, h))
        throw NotCospectral("graphs are not generalized cospectral");
    const IntMatrix wg = walk_matrix(g);
    const IntMatrix wh = walk_matrix(h);
    RatMatrix wg_inv;
    try {
        wg_inv = rat_inverse(wg);
    } catch (const Singular&) {
        throw SingularWalkMatrix("walk matrix is singular; the rational "
                                 "orthogonal matrix is not unique");
    }
    const RatMatrix q = (to_rational(wh) * wg_inv).transpose();
    if (!verify_q_action(q, g.adjacency(), h.adjacency()))
        throw VerificationFailed(
            "recovered matrix fails orthogonality or conjugation checks");
    return {q, level(q)};
}

struct LevelDivisibilityReport {
    mpz_class lvl;
    mpz_class gcd_last_factors;  // gcd of the last invariant factors
    mpz_class gcd_level_bounds;  // gcd of the per-graph level bounds
    bool divides_last_factors = false;
    bool divides_level_bounds = false;

    bool all() const { return divides_last_factors && divides_level_bounds; }
};

/// Checks the recovered level against both divisibility statements: the gcd
/// of the last invariant factors of the two walk matrices, and the gcd of
/// the per-graph level bounds.
inline LevelDivisibilityReport
level_divisibility_check(const Graph& g, const Graph& h,
                         unsigned factor_budget_ms = 5000) {
    const RroMatrix rro = recover_q(g, h);
    const auto dg = snf(walk_matrix(g)).d;
    const auto dh = snf(walk_matrix(h)).d;
    LevelDivisibilityReport rep;
    rep.lvl = rro.lvl;
    rep.gcd_last_factors = gcd(dg.back(), dh.back());
    rep.gcd_level_bounds = gcd(level_bound(g, factor_budget_ms).divisor,
                               level_bound(h, factor_budget_ms).divisor);
    rep.divides_last_factors =
        mpz_divisible_p(rep.gcd_last_factors.get_mpz_t(),
                        rep.lvl.get_mpz_t());
    rep.divides_level_bounds =
        mpz_divisible_p(rep.gcd_level_bounds.get_mpz_t(),
                        rep.lvl.get_mpz_t());
    return rep;
}

} // namespace dgs
