#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace dgs {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e,
                                std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set decides primality for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

inline bool is_prime(const mpz_class& n) {
    if (n < 2)
        return false;
    if (n.fits_ulong_p() && sizeof(unsigned long) == 8)
        return is_prime_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace detail {

inline std::uint64_t pollard_rho_u64(std::uint64_t n, std::uint64_t seed) {
    // Brent's cycle variant with batched gcds.
    if ((n & 1) == 0)
        return 2;
    std::uint64_t y = seed % n, c = 1 + seed % (n - 1), m = 128;
    std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i)
            y = (mulmod_u64(y, y, n) + c) % n;
        for (std::uint64_t k = 0; k < r && g == 1; k += m) {
            ys = y;
            for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                y = (mulmod_u64(y, y, n) + c) % n;
                q = mulmod_u64(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = (mulmod_u64(ys, ys, n) + c) % n;
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

} // namespace detail

/// Prime factorization with a time budget. `factors` maps prime -> exponent
/// for everything that was split off; if the budget ran out, `cofactor`
/// holds the remaining composite (> 1) and `complete` is false.
struct Factorization {
    std::map<mpz_class, unsigned> factors;
    mpz_class cofactor = 1;
    bool complete = true;

    mpz_class value() const {
        mpz_class v = cofactor;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; ++i)
                v *= p;
        return v;
    }
};

inline Factorization factorize(const mpz_class& n_in,
                               unsigned budget_ms = 5000) {
    Factorization f;
    mpz_class n = abs(n_in);
    if (n <= 1)
        return f;
    for (std::uint64_t p = 2; p < 1000000ull && n > 1;
         p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
            f.factors[mpz_class(static_cast<unsigned long>(p))] = e;
        }
        if (p * p > n)
            break;
    }
    if (n == 1)
        return f;
    if (is_prime(n)) {
        f.factors[n] += 1;
        return f;
    }

    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::milliseconds(budget_ms);
    std::vector<mpz_class> stack{n};
    while (!stack.empty()) {
        mpz_class cur = stack.back();
        stack.pop_back();
        if (cur == 1)
            continue;
        if (is_prime(cur)) {
            f.factors[cur] += 1;
            continue;
        }
        // Composite survivors of trial division fit in 64 bits in practice;
        // anything larger, or anything past the deadline, lands in the
        // cofactor.
        if (!cur.fits_ulong_p() ||
            std::chrono::steady_clock::now() > deadline) {
            f.cofactor *= cur;
            f.complete = false;
            continue;
        }
        std::uint64_t v = cur.get_ui();
        std::uint64_t d = v;
        for (std::uint64_t seed = 2; d == v || d == 1; ++seed) {
            d = detail::pollard_rho_u64(v, seed);
            if (std::chrono::steady_clock::now() > deadline)
                break;
        }
        if (d == v || d == 1) {
            f.cofactor *= cur;
            f.complete = false;
            continue;
        }
        stack.emplace_back(static_cast<unsigned long>(d));
        stack.emplace_back(static_cast<unsigned long>(v / d));
    }
    return f;
}

/// Three-valued square-freeness: true/false when decided, nullopt when the
/// unfactored cofactor leaves it open.
inline std::optional<bool> is_square_free(const Factorization& f) {
    for (const auto& [p, e] : f.factors)
        if (e > 1)
            return false;
    if (!f.complete) {
        // A square cofactor, or one sharing a prime with a known factor,
        // already settles it.
        if (mpz_perfect_square_p(f.cofactor.get_mpz_t()))
            return false;
        for (const auto& [p, e] : f.factors)
            if (mpz_divisible_p(f.cofactor.get_mpz_t(), p.get_mpz_t()))
                return false;
        return std::nullopt;
    }
    return true;
}

} // namespace dgs
