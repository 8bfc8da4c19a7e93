#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dgs/charpoly.hpp"
#include "dgs/errors.hpp"
#include "dgs/factorize.hpp"
#include "dgs/graph.hpp"
#include "dgs/matrix.hpp"
#include "dgs/modp.hpp"
#include "dgs/snf.hpp"
#include "dgs/walk.hpp"

namespace dgs {

enum class CertOutcome { Certified, NotCertified, Inconclusive };

inline const char* to_string(CertOutcome o) {
    switch (o) {
    case CertOutcome::Certified:
        return "certified";
    case CertOutcome::NotCertified:
        return "not-certified";
    default:
        return "inconclusive";
    }
}

struct CertificateResult {
    CertOutcome outcome = CertOutcome::Inconclusive;
    std::string reason;
};

/// Certifies the graph by the walk-matrix determinant: det W / 2^floor(n/2)
/// must be an odd square-free integer. Inconclusive when the determinant is
/// zero or the factorization budget runs out before square-freeness is
/// settled.
inline CertificateResult
det_squarefree_certificate(const Graph& g, unsigned factor_budget_ms = 5000) {
    const std::size_t n = g.order();
    const mpz_class det = det_bareiss(walk_matrix(g));
    if (det == 0)
        return {CertOutcome::Inconclusive, "walk matrix is singular"};
    mpz_class q = abs(det);
    for (std::size_t i = 0; i < n / 2; ++i) {
        if (mpz_odd_p(q.get_mpz_t()))
            return {CertOutcome::NotCertified,
                    "determinant has too few factors of 2"};
        mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), 2);
    }
    if (mpz_even_p(q.get_mpz_t()))
        return {CertOutcome::NotCertified, "reduced determinant is even"};
    const Factorization f = factorize(q, factor_budget_ms);
    const std::optional<bool> sf = is_square_free(f);
    if (!sf)
        return {CertOutcome::Inconclusive,
                "square-freeness undecided within the factorization budget"};
    if (!*sf)
        return {CertOutcome::NotCertified,
                "reduced determinant is not square-free"};
    return {CertOutcome::Certified,
            "det(W)/2^floor(n/2) is odd and square-free"};
}

/// Same criterion read off the Smith normal form: ceil(n/2) ones, then twos,
/// with the last factor 2m for an odd square-free m.
inline CertificateResult
snf_profile_certificate(const Graph& g, unsigned factor_budget_ms = 5000) {
    const std::size_t n = g.order();
    const auto d = snf(walk_matrix(g)).d;
    if (d[n - 1] == 0)
        return {CertOutcome::Inconclusive, "walk matrix is singular"};
    const std::size_t ones = (n + 1) / 2;
    for (std::size_t i = 0; i < ones; ++i)
        if (d[i] != 1)
            return {CertOutcome::NotCertified,
                    "fewer than ceil(n/2) unit invariant factors"};
    for (std::size_t i = ones; i + 1 < n; ++i)
        if (d[i] != 2)
            return {CertOutcome::NotCertified,
                    "middle invariant factors are not all 2"};
    mpz_class m;
    if (ones == n) {
        m = d[n - 1]; // order 1: no slot for the factor 2m
    } else {
        if (!mpz_divisible_ui_p(d[n - 1].get_mpz_t(), 2))
            return {CertOutcome::NotCertified,
                    "last invariant factor is odd"};
        m = d[n - 1] / 2;
    }
    if (mpz_even_p(m.get_mpz_t()))
        return {CertOutcome::NotCertified,
                "last invariant factor is divisible by 4"};
    const Factorization f = factorize(m, factor_budget_ms);
    const std::optional<bool> sf = is_square_free(f);
    if (!sf)
        return {CertOutcome::Inconclusive,
                "square-freeness undecided within the factorization budget"};
    if (!*sf)
        return {CertOutcome::NotCertified,
                "last invariant factor is 2m with m not square-free"};
    return {CertOutcome::Certified,
            "invariant factors are 1..1,2..2,2m with m odd and square-free"};
}

struct LevelProvenance {
    mpz_class prime;   // a prime of d_n, or the unfactored cofactor
    unsigned exponent; // multiplicity in d_n
    unsigned reduced;  // multiplicity kept in the bound
    std::string rule;  // "rank2-ceil-half", "rankp-n-minus-1", "none",
                       // "unfactored"
};

struct LevelBound {
    mpz_class divisor = 1;
    std::vector<LevelProvenance> provenance;
    bool complete = true;
};

/// Divisibility bound on the level of any regular rational orthogonal matrix
/// carrying this graph onto a generalized-cospectral mate. Starts from the
/// last invariant factor of W and removes one factor of each prime whose
/// rank condition holds: rank_2 W = ceil(n/2) for 2, rank_p W = n-1 for odd
/// p.
inline LevelBound level_bound(const Graph& g,
                              unsigned factor_budget_ms = 5000) {
    const std::size_t n = g.order();
    const IntMatrix w = walk_matrix(g);
    const auto d = snf(w).d;
    const mpz_class dn = d[n - 1];
    if (dn == 0)
        throw SingularWalkMatrix(
            "level bound requires a nonsingular walk matrix");
    LevelBound out;
    const Factorization f = factorize(dn, factor_budget_ms);
    for (const auto& [p, e] : f.factors) {
        LevelProvenance entry{p, e, e, "none"};
        if (p.fits_ulong_p()) {
            const std::uint64_t pu = p.get_ui();
            const std::size_t r = rank_mod_p(w, pu);
            if (pu == 2 ? r == (n + 1) / 2 : r == n - 1) {
                entry.reduced = e - 1;
                entry.rule = pu == 2 ? "rank2-ceil-half" : "rankp-n-minus-1";
            }
        }
        for (unsigned i = 0; i < entry.reduced; ++i)
            out.divisor *= p;
        out.provenance.push_back(std::move(entry));
    }
    if (!f.complete) {
        out.divisor *= f.cofactor;
        out.provenance.push_back({f.cofactor, 1, 1, "unfactored"});
        out.complete = false;
    }
    return out;
}

/// Characteristic polynomial of A + tJ computed from the polynomials of the
/// graph and its complement, without forming A + tJ.
inline CharPoly charpoly_shifted(const Graph& g, const mpz_class& t) {
    const std::size_t n = g.order();
    const auto f_g = charpoly(g.adjacency()).ascending();
    const auto f_c = charpoly(g.complement().adjacency()).ascending();
    const auto f_c_sub = substitute_neg_one_minus_x(f_c);
    std::vector<mpz_class> out(n + 1);
    const mpz_class sign = n % 2 == 0 ? t : -t;
    for (std::size_t i = 0; i <= n; ++i) {
        out[i] = (1 + t) * f_g[i];
        if (i < f_c_sub.size())
            out[i] -= sign * f_c_sub[i];
    }
    if (out[n] != 1)
        throw Error("shifted characteristic polynomial is not monic");
    return CharPoly::from_ascending(out);
}

/// Least t in [0, p) for which the characteristic polynomial of A + tJ has
/// at most one root mod p, found by direct evaluation.
inline std::optional<std::uint64_t>
find_single_root_shift(const Graph& g, std::uint64_t p) {
    detail::check_prime(p);
    for (std::uint64_t t = 0; t < p; ++t) {
        const CharPoly phi =
            charpoly_shifted(g, mpz_class(static_cast<unsigned long>(t)));
        if (count_roots_mod_p(phi.ascending(), p) <= 1)
            return t;
    }
    return std::nullopt;
}

struct NullVectorReport {
    std::vector<std::uint64_t> eta; // null vector, last coordinate 1
    std::uint64_t theta = 0;        // eta[n-2], an eigenvalue of A mod p
    bool recurrence_ok = false;     // coefficient chain against charpoly
    bool eigenvalue_ok = false;     // phi(theta) = 0 mod p
    bool companion_ok = false;      // (theta I - C) eta = 0 mod p

    bool all() const { return recurrence_ok && eigenvalue_ok && companion_ok; }
};

/// For odd p with rank_p W = n-1: the one-dimensional null space of W mod p,
/// normalized to last coordinate 1, satisfies a coefficient recurrence
/// driven by the characteristic polynomial, its next-to-last entry is an
/// eigenvalue of A mod p, and it is a theta-eigenvector of the companion
/// matrix of phi. The report records each check separately.
inline NullVectorReport null_vector_check(const Graph& g, std::uint64_t p) {
    detail::check_prime(p);
    if (p == 2)
        throw NotOddPrime("null vector check requires an odd prime");
    const std::size_t n = g.order();
    if (n < 2)
        throw RankHypothesisFailed("null vector check needs order >= 2");
    const IntMatrix w = walk_matrix(g);
    const auto basis = nullspace_mod_p(w, p);
    if (basis.size() != 1)
        throw RankHypothesisFailed("walk matrix rank mod p is not n-1");
    std::vector<std::uint64_t> eta = basis[0];
    if (eta[n - 1] == 0)
        throw RankHypothesisFailed(
            "null vector has zero last coordinate; leading columns of W are "
            "dependent mod p");
    const std::uint64_t scale = detail::inv_mod(eta[n - 1], p);
    for (std::uint64_t& x : eta)
        x = detail::mulmod_u64(x, scale, p);

    const CharPoly phi = charpoly(g.adjacency());
    std::vector<std::uint64_t> c(n + 1, 0); // c[k] = c_k mod p, c[0] = 1
    c[0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
        c[k] = mod_of(phi.c[k - 1], p);

    NullVectorReport rep;
    rep.eta = eta;
    rep.theta = eta[n - 2];

    // a_{j-1} = c_{n-j} + theta a_j for j = 0..n-2, with a_{-1} = 0.
    auto at = [&](std::size_t j) { return eta[j]; };
    bool ok = detail::mulmod_u64(rep.theta, at(0), p) == (p - c[n]) % p;
    for (std::size_t j = 1; j + 1 < n && ok; ++j) {
        const std::uint64_t lhs =
            (detail::mulmod_u64(rep.theta, at(j), p) + p - at(j - 1)) % p;
        ok = lhs == (p - c[n - j]) % p;
    }
    rep.recurrence_ok = ok;

    rep.eigenvalue_ok =
        eval_poly_mod_p(phi.ascending(), rep.theta, p) == 0;

    bool comp = true;
    for (std::size_t i = 0; i < n && comp; ++i) {
        // (C eta)_i = eta_{i-1} - c_{n-i} eta_{n-1}
        std::uint64_t ci = (p - c[n - i]) % p;
        if (i > 0)
            ci = (ci + eta[i - 1]) % p;
        comp = ci == detail::mulmod_u64(rep.theta, eta[i], p);
    }
    rep.companion_ok = comp;
    return rep;
}

enum class VerdictKind { CertifiedDgs, LevelBound, Inconclusive };

inline const char* to_string(VerdictKind k) {
    switch (k) {
    case VerdictKind::CertifiedDgs:
        return "certified-dgs";
    case VerdictKind::LevelBound:
        return "level-bound";
    default:
        return "inconclusive";
    }
}

struct DgsVerdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<LevelBound> bound;
    mpz_class det_w;
    std::vector<mpz_class> snf_w;
    std::vector<std::string> notes;
};

/// Full single-graph analysis: try both square-free certificates, fall back
/// to the level bound (a bound of 1 still certifies), and report
/// Inconclusive only for a singular walk matrix.
inline DgsVerdict certify(const Graph& g, unsigned factor_budget_ms = 5000) {
    DgsVerdict v;
    const IntMatrix w = walk_matrix(g);
    v.det_w = det_bareiss(w);
    v.snf_w = snf(w).d;
    if (v.det_w == 0) {
        v.kind = VerdictKind::Inconclusive;
        v.notes.push_back("walk matrix is singular; no unique rational "
                          "orthogonal matrix exists");
        return v;
    }
    const CertificateResult by_det =
        det_squarefree_certificate(g, factor_budget_ms);
    if (by_det.outcome == CertOutcome::Certified) {
        v.kind = VerdictKind::CertifiedDgs;
        v.notes.push_back(by_det.reason);
        return v;
    }
    v.notes.push_back(by_det.reason);
    LevelBound b = level_bound(g, factor_budget_ms);
    if (b.divisor == 1) {
        v.kind = VerdictKind::CertifiedDgs;
        v.bound = std::move(b);
        v.notes.push_back(
            "every admissible level divides 1, so only permutations remain");
        return v;
    }
    v.kind = VerdictKind::LevelBound;
    v.bound = std::move(b);
    return v;
}

} // namespace dgs
