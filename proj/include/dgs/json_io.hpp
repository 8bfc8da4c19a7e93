#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "dgs/census.hpp"
#include "dgs/certify.hpp"
#include "dgs/cospectral.hpp"
#include "dgs/errors.hpp"
#include "dgs/graph.hpp"

namespace dgs {

/// Exact integers are serialized as decimal strings; they routinely exceed
/// the range JSON implementations guarantee for numbers.
inline std::string to_decimal(const mpz_class& v) { return v.get_str(); }

inline std::string to_decimal(const mpq_class& v) {
    return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
}

inline nlohmann::json bound_json(const LevelBound& b) {
    nlohmann::json prov = nlohmann::json::array();
    for (const LevelProvenance& e : b.provenance)
        prov.push_back({{"prime", to_decimal(e.prime)},
                        {"exponent", e.exponent},
                        {"reduced", e.reduced},
                        {"rule", e.rule}});
    return {{"divisor", to_decimal(b.divisor)},
            {"provenance", std::move(prov)},
            {"complete", b.complete}};
}

inline nlohmann::json verdict_json(const DgsVerdict& v) {
    nlohmann::json snf = nlohmann::json::array();
    for (const mpz_class& d : v.snf_w)
        snf.push_back(to_decimal(d));
    nlohmann::json out = {{"kind", to_string(v.kind)},
                          {"bound", nullptr},
                          {"det_w", to_decimal(v.det_w)},
                          {"snf", std::move(snf)},
                          {"notes", v.notes}};
    if (v.bound)
        out["bound"] = bound_json(*v.bound);
    return out;
}

inline nlohmann::json matrix_json(const RatMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_decimal(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json pair_json(const Graph& g, const Graph& h,
                                bool cospectral,
                                const RroMatrix* rro,
                                const LevelDivisibilityReport* div) {
    nlohmann::json out = {{"graph6_a", emit_graph6(g)},
                          {"graph6_b", emit_graph6(h)},
                          {"cospectral", cospectral}};
    if (!cospectral) {
        out["kind"] = "not-cospectral";
        return out;
    }
    if (!rro) {
        out["kind"] = "inconclusive";
        out["notes"] = {"walk matrix is singular; the rational orthogonal "
                        "matrix is not unique"};
        return out;
    }
    out["kind"] = "pair";
    out["level"] = to_decimal(rro->lvl);
    out["q"] = matrix_json(rro->q);
    if (div) {
        out["level_divisibility"] = {
            {"level", to_decimal(div->lvl)},
            {"gcd_last_factors", to_decimal(div->gcd_last_factors)},
            {"gcd_level_bounds", to_decimal(div->gcd_level_bounds)},
            {"divides_last_factors", div->divides_last_factors},
            {"divides_level_bounds", div->divides_level_bounds}};
    }
    return out;
}

inline nlohmann::json census_json(const CensusResult& r) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const CensusPairLine& p : r.pairs) {
        nlohmann::json line = {{"a", p.a}, {"b", p.b}};
        line["level"] = p.lvl ? nlohmann::json(to_decimal(*p.lvl))
                              : nlohmann::json(nullptr);
        pairs.push_back(std::move(line));
    }
    nlohmann::json buckets = nlohmann::json::array();
    for (const auto& ids : r.mate_buckets) {
        nlohmann::json b = nlohmann::json::array();
        for (std::size_t id : ids)
            b.push_back(r.classes[id].rep_g6);
        buckets.push_back(std::move(b));
    }
    return {{"order", r.order},
            {"labeled_total", r.labeled_total},
            {"iso_classes", r.classes.size()},
            {"mate_buckets", std::move(buckets)},
            {"pairs", std::move(pairs)},
            {"mates", r.mates_listing},
            {"certified_classes", r.certified_classes}};
}

/// Accepts {"n": <order>, "edges": [[i, j], ...]}.
inline Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
        throw ParseError("expected an object with an unsigned \"n\"");
    const std::size_t n = j["n"].get<std::size_t>();
    Graph g(n);
    if (!j.contains("edges"))
        return g;
    if (!j["edges"].is_array())
        throw ParseError("\"edges\" must be an array of pairs");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
            !e[1].is_number_unsigned())
            throw ParseError("each edge must be a pair of vertex indices");
        const std::size_t a = e[0].get<std::size_t>();
        const std::size_t b = e[1].get<std::size_t>();
        if (a >= n || b >= n)
            throw ParseError("edge endpoint out of range");
        if (a == b)
            throw ParseError("self-loops are not allowed");
        g.set_edge(a, b, true);
    }
    return g;
}

} // namespace dgs
