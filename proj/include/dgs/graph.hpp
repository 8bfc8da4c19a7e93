#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgs/errors.hpp"
#include "dgs/matrix.hpp"

namespace dgs {

/// Simple undirected graph on up to 64 vertices, one bitmask row per vertex.
class Graph {
public:
    static constexpr std::size_t max_order = 64;

    explicit Graph(std::size_t n) : n_(n), rows_(n, 0) {
        if (n > max_order)
            throw SizeLimitExceeded("graph order " + std::to_string(n) +
                                    " exceeds " + std::to_string(max_order));
    }

    std::size_t order() const { return n_; }

    bool edge(std::size_t i, std::size_t j) const {
        return (rows_[i] >> j) & 1u;
    }

    void set_edge(std::size_t i, std::size_t j, bool on) {
        if (i == j)
            throw Error("self-loops are not representable");
        const std::uint64_t bi = std::uint64_t(1) << j;
        const std::uint64_t bj = std::uint64_t(1) << i;
        if (on) {
            rows_[i] |= bi;
            rows_[j] |= bj;
        } else {
            rows_[i] &= ~bi;
            rows_[j] &= ~bj;
        }
    }

    std::uint64_t neighbors(std::size_t i) const { return rows_[i]; }

    std::size_t degree(std::size_t i) const {
        return static_cast<std::size_t>(__builtin_popcountll(rows_[i]));
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (std::uint64_t r : rows_)
            total += static_cast<std::size_t>(__builtin_popcountll(r));
        return total / 2;
    }

    Graph complement() const {
        Graph c(n_);
        const std::uint64_t all =
            n_ == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n_) - 1);
        for (std::size_t i = 0; i < n_; ++i)
            c.rows_[i] = (~rows_[i] & all) & ~(std::uint64_t(1) << i);
        return c;
    }

    IntMatrix adjacency() const {
        IntMatrix a(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                a(i, j) = edge(i, j) ? 1 : 0;
        return a;
    }

    template <class T>
    Matrix<T> adjacency_as() const {
        Matrix<T> a(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                a(i, j) = edge(i, j) ? T(1) : T(0);
        return a;
    }

    /// Relabel: vertex i of this graph becomes vertex perm[i].
    Graph apply_permutation(const std::vector<std::size_t>& perm) const {
        if (perm.size() != n_)
            throw SizeMismatch("permutation length does not match order");
        Graph h(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (edge(i, j))
                    h.set_edge(perm[i], perm[j], true);
        return h;
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && rows_ == o.rows_;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    std::size_t n_;
    std::vector<std::uint64_t> rows_;
};

namespace detail {

constexpr std::string_view graph6_header = ">>graph6<<";

} // namespace detail

/// Strict graph6 parser. Accepts an optional format header and a trailing
/// newline; anything else out of place is rejected.
inline Graph parse_graph6(std::string_view s) {
    if (s.starts_with(detail::graph6_header))
        s.remove_prefix(detail::graph6_header.size());
    while (s.ends_with('\n') || s.ends_with('\r'))
        s.remove_suffix(1);
    if (s.empty())
        throw MalformedGraph6("empty graph6 string");
    for (char ch : s)
        if (ch < 63 || ch > 126)
            throw MalformedGraph6("character out of graph6 range");

    std::size_t n;
    std::size_t pos;
    if (s[0] == 126) {
        if (s.size() >= 2 && s[1] == 126)
            throw MalformedGraph6("graph order exceeds supported range");
        if (s.size() < 4)
            throw MalformedGraph6("truncated graph6 order field");
        n = 0;
        for (int k = 1; k <= 3; ++k)
            n = (n << 6) | static_cast<std::size_t>(s[k] - 63);
        if (n < 63)
            throw MalformedGraph6("overlong graph6 order encoding");
        pos = 4;
    } else {
        n = static_cast<std::size_t>(s[0] - 63);
        pos = 1;
    }
    if (n > Graph::max_order)
        throw SizeLimitExceeded("graph order " + std::to_string(n) +
                                " exceeds " +
                                std::to_string(Graph::max_order));

    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (s.size() - pos != need)
        throw MalformedGraph6("graph6 body has wrong length");

    Graph g(n);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const unsigned byte =
                static_cast<unsigned>(s[pos + k / 6] - 63);
            if ((byte >> (5 - k % 6)) & 1u)
                g.set_edge(i, j, true);
        }
    }
    for (; k < need * 6; ++k) {
        const unsigned byte = static_cast<unsigned>(s[pos + k / 6] - 63);
        if ((byte >> (5 - k % 6)) & 1u)
            throw MalformedGraph6("nonzero padding bits");
    }
    return g;
}

inline std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    unsigned byte = 0;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            if (g.edge(i, j))
                byte |= 1u << (5 - k % 6);
            if (k % 6 == 5) {
                out.push_back(static_cast<char>(byte + 63));
                byte = 0;
            }
        }
    }
    if (k % 6 != 0)
        out.push_back(static_cast<char>(byte + 63));
    return out;
}

namespace detail {

/// Iterated neighbor-color refinement; returns a stable coloring with
/// class ids assigned in a label-independent order.
inline std::vector<int> stable_coloring(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> color(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        color[i] = static_cast<int>(g.degree(i));
    for (;;) {
        std::vector<std::pair<std::vector<int>, std::size_t>> sig(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<int> s{color[i]};
            std::uint64_t nb = g.neighbors(i);
            while (nb) {
                const int j = __builtin_ctzll(nb);
                nb &= nb - 1;
                s.push_back(color[static_cast<std::size_t>(j)]);
            }
            std::sort(s.begin() + 1, s.end());
            sig[i] = {std::move(s), i};
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& [s, i] : sig)
            ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids)
            id = next++;
        std::vector<int> refined(n);
        for (std::size_t i = 0; i < n; ++i)
            refined[i] = ids[sig[i].first];
        if (refined == color)
            return color;
        color = std::move(refined);
    }
}

inline bool extend_isomorphism(const Graph& g, const Graph& h,
                               const std::vector<std::size_t>& order,
                               std::size_t depth,
                               const std::vector<int>& gc,
                               const std::vector<int>& hc,
                               std::vector<std::size_t>& map,
                               std::vector<bool>& used) {
    const std::size_t n = g.order();
    if (depth == n)
        return true;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
        if (used[w] || hc[w] != gc[v])
            continue;
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d)
            ok = g.edge(v, order[d]) == h.edge(w, map[order[d]]);
        if (!ok)
            continue;
        map[v] = w;
        used[w] = true;
        if (extend_isomorphism(g, h, order, depth + 1, gc, hc, map, used))
            return true;
        used[w] = false;
    }
    return false;
}

} // namespace detail

/// Isomorphism test with witness: returns a permutation taking this labeling
/// of g onto h (h = g.apply_permutation(*result)), or nullopt.
inline std::optional<std::vector<std::size_t>>
are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order())
        return std::nullopt;
    const std::size_t n = g.order();
    if (n > 16)
        throw SizeLimitExceeded("isomorphism search is limited to 16 vertices");
    if (n == 0)
        return std::vector<std::size_t>{};
    if (g.edge_count() != h.edge_count())
        return std::nullopt;
    const auto gc = detail::stable_coloring(g);
    auto hc = detail::stable_coloring(h);
    {
        auto a = gc, b = hc;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
    }
    // Match the most constrained (rarest-color) vertices first.
    std::vector<std::size_t> class_size(n, 0);
    for (int c : gc)
        ++class_size[static_cast<std::size_t>(c)];
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ka = class_size[static_cast<std::size_t>(gc[a])];
        const auto kb = class_size[static_cast<std::size_t>(gc[b])];
        return ka != kb ? ka < kb : a < b;
    });
    std::vector<std::size_t> map(n, 0);
    std::vector<bool> used(n, false);
    if (detail::extend_isomorphism(g, h, order, 0, gc, hc, map, used))
        return map;
    return std::nullopt;
}

} // namespace dgs
