#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hulldec/errors.hpp"
#include "hulldec/hypermatrix.hpp"
#include "hulldec/scalar.hpp"

namespace hulldec {

// d-uniform weighted hypergraph on vertices 1..n. Isolated vertices stay
// in n; zero-weight edges are allowed.
template <class S>
struct WeightedHypergraph {
    int n = 0;
    int d = 2;
    std::vector<std::pair<std::vector<int>, S>> edges;  // sorted vertex lists, no duplicates
};

template <class S>
void validate(const WeightedHypergraph<S>& h, const ScalarMode<S>& mode = {}) {
    if (h.n < 1) throw std::invalid_argument("hypergraph: n must be >= 1");
    if (h.d < 2) throw std::invalid_argument("hypergraph: d must be >= 2");
    std::set<std::vector<int>> seen;
    for (const auto& [vertices, weight] : h.edges) {
        if (static_cast<int>(vertices.size()) != h.d)
            throw std::invalid_argument("hypergraph: edge size must equal d");
        int prev = 0;
        for (int v : vertices) {
            if (v <= prev || v > h.n)
                throw std::invalid_argument("hypergraph: edge vertices must be strictly increasing in 1..n");
            prev = v;
        }
        if (!seen.insert(vertices).second) throw std::invalid_argument("hypergraph: duplicate edge");
        if (!ScalarTraits<S>::finite(weight) || !mode.ge(weight, S(0)))
            throw std::invalid_argument("hypergraph: edge weight must be nonnegative");
    }
}

template <class S>
std::vector<S> degrees(const WeightedHypergraph<S>& h) {
    std::vector<S> deg(static_cast<std::size_t>(h.n), S(0));
    for (const auto& [vertices, weight] : h.edges)
        for (int v : vertices) deg[static_cast<std::size_t>(v - 1)] += weight;
    return deg;
}

// w(e) = A(e) on canonical tuples; zero-weight edges vanish on the
// hypermatrix side.
template <class S>
SymHypermatrix<S> to_hypermatrix(const WeightedHypergraph<S>& h) {
    SymHypermatrix<S> a(h.n, h.d);
    for (const auto& [vertices, weight] : h.edges)
        if (weight > S(0)) a.add(vertices, weight);
    return a;
}

template <class S>
WeightedHypergraph<S> from_hypermatrix(const SymHypermatrix<S>& a) {
    WeightedHypergraph<S> h;
    h.n = a.n();
    h.d = a.d();
    h.edges.reserve(a.support().size());
    for (const auto& [tuple, value] : a.support()) h.edges.emplace_back(tuple, value);
    return h;
}

// Degree-sequence realization through the slice-sum correspondence
// R = (d-1)! * D; the hypermatrix construction is the single source of
// truth for the edge weights.
template <class S>
WeightedHypergraph<S> realize_degrees(int d, const std::vector<S>& deg,
                                      const ScalarMode<S>& mode = {}) {
    if (d < 2) throw std::invalid_argument("realize_degrees: d must be >= 2");
    if (deg.empty()) throw std::invalid_argument("realize_degrees: empty degree sequence");
    for (const S& v : deg) {
        if (!ScalarTraits<S>::finite(v)) throw std::invalid_argument("realize_degrees: non-finite degree");
        if (!mode.ge(v, S(0))) throw std::invalid_argument("realize_degrees: negative degree");
    }
    S mx = deg[0];
    S total(0);
    for (const S& v : deg) {
        if (v > mx) mx = v;
        total += v;
    }
    if (!mode.le(S(S(d) * mx), total, static_cast<int>(deg.size())))
        throw InfeasibleError("realize_degrees: degree sequence violates d*max(D) <= sum(D)",
                              ScalarTraits<S>::str(S(S(d) * mx)), ScalarTraits<S>::str(total));

    const S fact = factorial<S>(d - 1);
    std::vector<S> r;
    r.reserve(deg.size());
    for (const S& v : deg) r.push_back(S(fact * v));
    return from_hypermatrix(realize(d, r, mode));
}

}  // namespace hulldec
