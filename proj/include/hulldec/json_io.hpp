#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hulldec/combination.hpp"
#include "hulldec/hypergraph.hpp"
#include "hulldec/hypermatrix.hpp"
#include "hulldec/scalar.hpp"
#include "hulldec/spectral.hpp"

namespace hulldec {

using Json = nlohmann::ordered_json;

// Scalars: float mode emits plain numbers; exact mode emits integers when
// the denominator is 1 and {"num": .., "den": ..} otherwise. Ingest
// accepts all three forms in both modes (doubles convert to their exact
// binary value in exact mode).

inline Json scalar_to_json(double v) { return Json(v); }

inline Json scalar_to_json(const Rational& v) {
    const mpz_class& num = v.get_num();
    const mpz_class& den = v.get_den();
    if (!num.fits_slong_p() || !den.fits_slong_p())
        throw std::overflow_error("scalar does not fit a 64-bit rational");
    if (den == 1) return Json(static_cast<std::int64_t>(num.get_si()));
    Json j;
    j["num"] = static_cast<std::int64_t>(num.get_si());
    j["den"] = static_cast<std::int64_t>(den.get_si());
    return j;
}

template <class S>
S scalar_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if constexpr (ScalarTraits<S>::exact)
            return Rational(static_cast<long>(j.get<std::int64_t>()));
        else
            return static_cast<double>(j.get<std::int64_t>());
    }
    if (j.is_number_float()) {
        double v = j.get<double>();
        if (!std::isfinite(v)) throw std::invalid_argument("scalar: non-finite number");
        if constexpr (ScalarTraits<S>::exact)
            return Rational(v);
        else
            return v;
    }
    if (j.is_object() && j.contains("num") && j.contains("den")) {
        if (!j["num"].is_number_integer() || !j["den"].is_number_integer())
            throw std::invalid_argument("scalar: num/den must be integers");
        std::int64_t num = j["num"].get<std::int64_t>();
        std::int64_t den = j["den"].get<std::int64_t>();
        if (den <= 0) throw std::invalid_argument("scalar: den must be positive");
        Rational q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        if constexpr (ScalarTraits<S>::exact)
            return q;
        else
            return q.get_d();
    }
    throw std::invalid_argument("scalar: expected a number or {\"num\", \"den\"}");
}

template <class S>
std::vector<S> vector_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw std::invalid_argument("vector: expected {\"entries\": [...]}");
    const Json& entries = j["entries"];
    if (entries.empty()) throw std::invalid_argument("vector: entries must be nonempty");
    std::vector<S> out;
    out.reserve(entries.size());
    for (const Json& e : entries) out.push_back(scalar_from_json<S>(e));
    return out;
}

template <class S>
Json vector_to_json(const std::vector<S>& v) {
    Json entries = Json::array();
    for (const S& e : v) entries.push_back(scalar_to_json(e));
    Json j;
    j["entries"] = std::move(entries);
    return j;
}

inline SymMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows") || !j["rows"].is_array())
        throw std::invalid_argument("matrix: expected {\"n\": .., \"rows\": [[..], ..]}");
    const int n = j["n"].get<int>();
    if (n < 1) throw std::invalid_argument("matrix: n must be >= 1");
    const Json& rows = j["rows"];
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("matrix: row count must equal n");
    Matrix<double> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix: each row must have n entries");
        for (int jj = 0; jj < n; ++jj)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(jj)) =
                scalar_from_json<double>(row[static_cast<std::size_t>(jj)]);
    }
    return SymMatrix(std::move(m));
}

inline Json matrix_to_json(const SymMatrix& m) {
    const int n = m.order();
    Json rows = Json::array();
    for (int i = 0; i < n; ++i) {
        Json row = Json::array();
        for (int jj = 0; jj < n; ++jj) row.push_back(m(i, jj));
        rows.push_back(std::move(row));
    }
    Json j;
    j["n"] = n;
    j["rows"] = std::move(rows);
    return j;
}

template <class S>
SymHypermatrix<S> hypermatrix_from_json(const Json& j, const ScalarMode<S>& mode = {}) {
    if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("entries") ||
        !j["entries"].is_array())
        throw std::invalid_argument("hypermatrix: expected {\"n\", \"d\", \"entries\": [...]}");
    SymHypermatrix<S> a(j["n"].get<int>(), j["d"].get<int>());
    for (const Json& e : j["entries"]) {
        if (!e.is_object() || !e.contains("index") || !e.contains("value") || !e["index"].is_array())
            throw std::invalid_argument("hypermatrix: entry must be {\"index\": [...], \"value\": ..}");
        std::vector<int> index = e["index"].get<std::vector<int>>();
        int prev = 0;
        for (int i : index) {
            if (i <= prev) throw std::invalid_argument("hypermatrix: index must be strictly increasing");
            prev = i;
        }
        S value = scalar_from_json<S>(e["value"]);
        if (!mode.ge(value, S(0))) throw std::invalid_argument("hypermatrix: value must be nonnegative");
        if constexpr (!ScalarTraits<S>::exact) {
            if (value <= mode.eps) continue;
        }
        if (value == S(0)) continue;
        if (a.entry(index) != S(0)) throw std::invalid_argument("hypermatrix: duplicate index tuple");
        a.set(std::move(index), std::move(value));
    }
    return a;
}

template <class S>
Json hypermatrix_to_json(const SymHypermatrix<S>& a) {
    Json entries = Json::array();
    for (const auto& [tuple, value] : a.support()) {
        Json e;
        e["index"] = tuple;
        e["value"] = scalar_to_json(value);
        entries.push_back(std::move(e));
    }
    Json j;
    j["n"] = a.n();
    j["d"] = a.d();
    j["entries"] = std::move(entries);
    return j;
}

template <class S>
WeightedHypergraph<S> hypergraph_from_json(const Json& j, const ScalarMode<S>& mode = {}) {
    if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("edges") ||
        !j["edges"].is_array())
        throw std::invalid_argument("hypergraph: expected {\"n\", \"d\", \"edges\": [...]}");
    WeightedHypergraph<S> h;
    h.n = j["n"].get<int>();
    h.d = j["d"].get<int>();
    for (const Json& e : j["edges"]) {
        if (!e.is_object() || !e.contains("vertices") || !e.contains("weight") ||
            !e["vertices"].is_array())
            throw std::invalid_argument("hypergraph: edge must be {\"vertices\": [...], \"weight\": ..}");
        h.edges.emplace_back(e["vertices"].get<std::vector<int>>(), scalar_from_json<S>(e["weight"]));
    }
    validate(h, mode);
    return h;
}

template <class S>
Json hypergraph_to_json(const WeightedHypergraph<S>& h) {
    Json edges = Json::array();
    for (const auto& [vertices, weight] : h.edges) {
        Json e;
        e["vertices"] = vertices;
        e["weight"] = scalar_to_json(weight);
        edges.push_back(std::move(e));
    }
    Json j;
    j["n"] = h.n;
    j["d"] = h.d;
    j["edges"] = std::move(edges);
    return j;
}

inline Json subset_to_json(const SubsetIndicator& s) {
    Json j;
    j["n"] = s.n;
    j["members"] = s.members;
    return j;
}

inline SubsetIndicator subset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("members") || !j["members"].is_array())
        throw std::invalid_argument("subset: expected {\"n\": .., \"members\": [...]}");
    SubsetIndicator s;
    s.n = j["n"].get<int>();
    s.members = j["members"].get<std::vector<int>>();
    validate(s);
    return s;
}

inline Json permutation_to_json(const Permutation& p) {
    Json j;
    j["images"] = p.images;
    return j;
}

inline Permutation permutation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("images") || !j["images"].is_array())
        throw std::invalid_argument("permutation: expected {\"images\": [...]}");
    Permutation p;
    p.images = j["images"].get<std::vector<int>>();
    validate(p);
    return p;
}

template <class S, class Atom, class AtomSerializer>
Json combination_to_json(const ConvexCombination<S, Atom>& comb, AtomSerializer&& atom_to_json) {
    Json terms = Json::array();
    for (const auto& term : comb.terms) {
        Json t;
        t["weight"] = scalar_to_json(term.weight);
        t["atom"] = atom_to_json(term.atom);
        terms.push_back(std::move(t));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

}  // namespace hulldec
