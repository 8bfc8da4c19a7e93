#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include <gmpxx.h>

#include "dgs/certify.hpp"
#include "dgs/cospectral.hpp"
#include "dgs/errors.hpp"
#include "dgs/graph.hpp"

namespace dgs {

/// Edge masks use the same bit order as graph6 bodies: bit k runs over
/// column-major upper-triangle pairs (i, j), i < j.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    Graph g(n);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1u)
                g.set_edge(i, j, true);
    return g;
}

inline std::uint64_t mask_from_graph(const Graph& g) {
    const std::size_t n = g.order();
    std::uint64_t mask = 0;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if (g.edge(i, j))
                mask |= std::uint64_t(1) << k;
    return mask;
}

struct CensusOptions {
    unsigned jobs = 1;
    bool dedup = false;
    unsigned factor_budget_ms = 1000;
    std::function<void(std::size_t, std::size_t)> on_progress;
};

struct CensusClass {
    std::uint64_t rep_mask = 0;
    std::string rep_g6;
    std::size_t labeled_count = 0;
    bool has_mates = false;
    bool certified = false;
    bool singular_walk = false;
};

struct CensusPairLine {
    std::size_t class_a = 0;
    std::size_t class_b = 0;
    std::string a;
    std::string b;
    std::optional<mpz_class> lvl; // absent when the walk matrices are singular
};

struct CensusResult {
    std::size_t order = 0;
    std::size_t labeled_total = 0;
    std::vector<CensusClass> classes;
    std::vector<std::vector<std::size_t>> mate_buckets; // class ids per bucket
    std::vector<CensusPairLine> pairs;
    std::vector<std::string> mates_listing; // per --dedup: reps or all members
    std::size_t certified_classes = 0;
};

namespace detail {

struct PairIndex {
    std::array<std::array<std::uint8_t, 8>, 8> idx{};

    explicit PairIndex(std::size_t n) {
        std::uint8_t k = 0;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i, ++k) {
                idx[i][j] = k;
                idx[j][i] = k;
            }
    }
};

inline std::uint64_t permute_mask(std::uint64_t mask, std::size_t n,
                                  const std::array<std::uint8_t, 8>& perm,
                                  const PairIndex& pi) {
    std::uint64_t out = 0;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1u)
                out |= std::uint64_t(1) << pi.idx[perm[i]][perm[j]];
    return out;
}

} // namespace detail

/// Exhaustive survey of all graphs of the given order. Isomorphism classes
/// are exact (orbit enumeration under the full symmetric group); classes are
/// bucketed by generalized spectrum, pairs of distinct classes in one bucket
/// are genuine generalized-cospectral mates. Every class verdict is
/// cross-checked against the ground truth and a contradiction aborts loudly.
inline CensusResult census(std::size_t n, const CensusOptions& opt = {}) {
    if (n < 1 || n > 8)
        throw SizeLimitExceeded("census supports orders 1 through 8");
    const std::size_t bits = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t(1) << bits;

    std::vector<std::array<std::uint8_t, 8>> perms;
    {
        std::array<std::uint8_t, 8> p{};
        std::iota(p.begin(), p.begin() + n, std::uint8_t(0));
        std::vector<std::uint8_t> v(p.begin(), p.begin() + n);
        do {
            std::array<std::uint8_t, 8> q{};
            std::copy(v.begin(), v.end(), q.begin());
            perms.push_back(q);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    const detail::PairIndex pi(n);

    CensusResult res;
    res.order = n;
    res.labeled_total = total;

    std::vector<bool> seen(total, false);
    const std::uint64_t progress_step = std::max<std::uint64_t>(total / 128, 1);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (opt.on_progress && mask % progress_step == 0)
            opt.on_progress(mask, total);
        if (seen[mask])
            continue;
        CensusClass cls;
        cls.rep_mask = mask;
        for (const auto& perm : perms) {
            const std::uint64_t m = detail::permute_mask(mask, n, perm, pi);
            if (!seen[m]) {
                seen[m] = true;
                ++cls.labeled_count;
            }
        }
        res.classes.push_back(std::move(cls));
    }
    if (opt.on_progress)
        opt.on_progress(total, total);

    const std::size_t num_classes = res.classes.size();
    std::vector<std::vector<long long>> keys(num_classes);
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t c = lo; c < hi; ++c) {
            CensusClass& cls = res.classes[c];
            const Graph g = graph_from_mask(n, cls.rep_mask);
            cls.rep_g6 = emit_graph6(g);
            auto key = faddeev_leverrier(g.adjacency_as<long long>());
            const auto co =
                faddeev_leverrier(g.complement().adjacency_as<long long>());
            key.insert(key.end(), co.begin(), co.end());
            keys[c] = std::move(key);
            const DgsVerdict v = certify(g, opt.factor_budget_ms);
            cls.certified = v.kind == VerdictKind::CertifiedDgs;
            cls.singular_walk = v.det_w == 0;
        }
    };
    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1 || num_classes < 2 * jobs) {
        work(0, num_classes);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (num_classes + jobs - 1) / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            const std::size_t lo = std::min<std::size_t>(t * chunk,
                                                         num_classes);
            const std::size_t hi =
                std::min<std::size_t>(lo + chunk, num_classes);
            if (lo < hi)
                pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool)
            th.join();
    }

    std::map<std::vector<long long>, std::vector<std::size_t>> buckets;
    for (std::size_t c = 0; c < num_classes; ++c)
        buckets[keys[c]].push_back(c);

    for (const auto& [key, ids] : buckets) {
        if (ids.size() < 2)
            continue;
        res.mate_buckets.push_back(ids);
        for (std::size_t id : ids)
            res.classes[id].has_mates = true;
    }

    for (const auto& ids : res.mate_buckets) {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                const CensusClass& ca = res.classes[ids[i]];
                const CensusClass& cb = res.classes[ids[j]];
                CensusPairLine line;
                line.class_a = ids[i];
                line.class_b = ids[j];
                line.a = ca.rep_g6;
                line.b = cb.rep_g6;
                if (!ca.singular_walk && !cb.singular_walk) {
                    const Graph ga = graph_from_mask(n, ca.rep_mask);
                    const Graph gb = graph_from_mask(n, cb.rep_mask);
                    const LevelDivisibilityReport rep =
                        level_divisibility_check(ga, gb,
                                                 opt.factor_budget_ms);
                    if (rep.lvl == 1)
                        throw AuditContradiction(
                            "level 1 between non-isomorphic mates " + ca.rep_g6 +
                            " and " + cb.rep_g6);
                    if (!rep.all())
                        throw AuditContradiction(
                            "level divisibility fails for " + ca.rep_g6 +
                            " and " + cb.rep_g6);
                    line.lvl = rep.lvl;
                }
                res.pairs.push_back(std::move(line));
            }
        }
    }

    for (const CensusClass& cls : res.classes) {
        if (cls.certified)
            ++res.certified_classes;
        if (cls.certified && cls.has_mates)
            throw AuditContradiction(
                "class " + cls.rep_g6 +
                " was certified but has a generalized-cospectral mate");
    }

    for (const auto& ids : res.mate_buckets) {
        for (std::size_t id : ids) {
            const CensusClass& cls = res.classes[id];
            if (opt.dedup) {
                res.mates_listing.push_back(cls.rep_g6);
                continue;
            }
            std::unordered_set<std::uint64_t> orbit;
            for (const auto& perm : perms)
                orbit.insert(
                    detail::permute_mask(cls.rep_mask, n, perm, pi));
            std::vector<std::uint64_t> sorted(orbit.begin(), orbit.end());
            std::sort(sorted.begin(), sorted.end());
            for (std::uint64_t m : sorted)
                res.mates_listing.push_back(
                    emit_graph6(graph_from_mask(n, m)));
        }
    }
    return res;
}

} // namespace dgs
