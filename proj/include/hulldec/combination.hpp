#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hulldec/scalar.hpp"

namespace hulldec {

// k-subset of {1..n}, stored as a strictly increasing 1-based index list.
struct SubsetIndicator {
    int n = 0;
    std::vector<int> members;

    template <class S>
    std::vector<S> indicator() const {
        std::vector<S> v(static_cast<std::size_t>(n), S(0));
        for (int i : members) v[static_cast<std::size_t>(i - 1)] = S(1);
        return v;
    }

    bool operator==(const SubsetIndicator&) const = default;
};

inline void validate(const SubsetIndicator& s) {
    if (s.n < 1) throw std::invalid_argument("subset: n must be >= 1");
    int prev = 0;
    for (int i : s.members) {
        if (i <= prev || i > s.n) throw std::invalid_argument("subset: members must be strictly increasing in 1..n");
        prev = i;
    }
}

// Bijection on {1..n}. Applying to a vector rearranges it:
// permuted(p, v)[i] = v[p.images[i] - 1].
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n) {
        Permutation p;
        p.images.resize(static_cast<std::size_t>(n));
        std::iota(p.images.begin(), p.images.end(), 1);
        return p;
    }

    int size() const { return static_cast<int>(images.size()); }

    Permutation inverse() const {
        Permutation inv;
        inv.images.assign(images.size(), 0);
        for (std::size_t i = 0; i < images.size(); ++i)
            inv.images[static_cast<std::size_t>(images[i] - 1)] = static_cast<int>(i) + 1;
        return inv;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < images.size(); ++i)
            if (images[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return images < o.images; }
};

inline void validate(const Permutation& p) {
    const int n = p.size();
    if (n < 1) throw std::invalid_argument("permutation: empty");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : p.images) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("permutation: images must be a bijection on 1..n");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

// permuted(compose(a, b), v) == permuted(a, permuted(b, v))
inline Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation c;
    c.images.resize(a.images.size());
    for (std::size_t i = 0; i < a.images.size(); ++i)
        c.images[i] = b.images[static_cast<std::size_t>(a.images[i] - 1)];
    return c;
}

template <class S>
std::vector<S> permuted(const Permutation& p, const std::vector<S>& v) {
    std::vector<S> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[static_cast<std::size_t>(p.images[i] - 1)];
    return w;
}

// Stable descending sort as a permutation: permuted(result, v) is descending,
// ties keep the smaller original index first.
template <class S>
Permutation sort_perm_desc(const std::vector<S>& v) {
    std::vector<int> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return v[static_cast<std::size_t>(a)] > v[static_cast<std::size_t>(b)];
    });
    Permutation p;
    p.images.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p.images[i] = idx[i] + 1;
    return p;
}

template <class S, class Atom>
struct ConvexCombination {
    struct Term {
        S weight;
        Atom atom;
    };
    std::vector<Term> terms;
};

template <class S, class Atom>
void validate(const ConvexCombination<S, Atom>& comb, const ScalarMode<S>& mode) {
    if (comb.terms.empty()) throw std::invalid_argument("combination: no terms");
    S total(0);
    for (const auto& t : comb.terms) {
        if (!mode.ge(t.weight, S(0))) throw std::invalid_argument("combination: negative weight");
        total += t.weight;
    }
    if (!mode.eq(total, S(1), static_cast<int>(comb.terms.size())))
        throw std::invalid_argument("combination: weights must sum to 1");
}

}  // namespace hulldec
