#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hulldec/combination.hpp"
#include "hulldec/errors.hpp"
#include "hulldec/linalg.hpp"
#include "hulldec/majorization.hpp"
#include "hulldec/scalar.hpp"

namespace hulldec {

// Strongly off-diagonal symmetric nonnegative d-hypermatrix over <n>^d,
// stored canonically: one strictly increasing tuple per orbit, positive
// values only. The d! symmetric copies and the zeros on repeated indices
// exist only through entry().
template <class S>
class SymHypermatrix {
public:
    using Support = std::map<std::vector<int>, S>;

    SymHypermatrix(int n, int d) : n_(n), d_(d) {
        if (n < 1) throw std::invalid_argument("SymHypermatrix: n must be >= 1");
        if (d < 2) throw std::invalid_argument("SymHypermatrix: d must be >= 2");
    }

    int n() const { return n_; }
    int d() const { return d_; }
    const Support& support() const { return supp_; }

    // Accepts indices in any order; sorts to the canonical tuple. Zero
    // values erase, negatives are rejected, repeated indices are invalid
    // as storage targets.
    void set(std::vector<int> index, S value) {
        canonicalize(index);
        if (value < S(0)) throw std::invalid_argument("SymHypermatrix: negative value");
        if (value == S(0))
            supp_.erase(index);
        else
            supp_[std::move(index)] = std::move(value);
    }

    void add(std::vector<int> index, const S& value) {
        canonicalize(index);
        S next = S(supp_[index] + value);
        if (next < S(0)) throw std::invalid_argument("SymHypermatrix: negative value");
        if (next == S(0))
            supp_.erase(index);
        else
            supp_[std::move(index)] = std::move(next);
    }

    S entry(std::vector<int> index) const {
        if (static_cast<int>(index.size()) != d_)
            throw std::invalid_argument("SymHypermatrix: index arity mismatch");
        for (int i : index)
            if (i < 1 || i > n_) throw std::out_of_range("SymHypermatrix: index out of range");
        std::sort(index.begin(), index.end());
        for (std::size_t j = 0; j + 1 < index.size(); ++j)
            if (index[j] == index[j + 1]) return S(0);  // strongly off-diagonal
        auto it = supp_.find(index);
        return it == supp_.end() ? S(0) : it->second;
    }

private:
    void canonicalize(std::vector<int>& index) const {
        if (static_cast<int>(index.size()) != d_)
            throw std::invalid_argument("SymHypermatrix: index arity mismatch");
        std::sort(index.begin(), index.end());
        for (int i : index)
            if (i < 1 || i > n_) throw std::out_of_range("SymHypermatrix: index out of range");
        for (std::size_t j = 0; j + 1 < index.size(); ++j)
            if (index[j] == index[j + 1])
                throw std::invalid_argument("SymHypermatrix: repeated index in stored tuple");
    }

    int n_;
    int d_;
    Support supp_;
};

// r_k = (d-1)! * sum of canonical entries whose tuple contains k.
template <class S>
std::vector<S> slice_sums(const SymHypermatrix<S>& a) {
    std::vector<S> r(static_cast<std::size_t>(a.n()), S(0));
    const S fact = factorial<S>(a.d() - 1);
    for (const auto& [tuple, value] : a.support()) {
        S contrib = S(fact * value);
        for (int i : tuple) r[static_cast<std::size_t>(i - 1)] += contrib;
    }
    return r;
}

namespace detail {

template <class S>
void check_slice_sums_valid(int d, const std::vector<S>& r, const ScalarMode<S>& mode) {
    if (d < 2) throw std::invalid_argument("slice sums: d must be >= 2");
    if (r.empty()) throw std::invalid_argument("slice sums: empty vector");
    for (const S& v : r) {
        if (!ScalarTraits<S>::finite(v)) throw std::invalid_argument("slice sums: non-finite entry");
        if (!mode.ge(v, S(0))) throw std::invalid_argument("slice sums: negative entry");
    }
}

}  // namespace detail

// d*max(R) <= sum(R). For n < d this forces R = 0, which is exactly when
// a strongly off-diagonal realization (necessarily empty) exists.
template <class S>
bool is_realizable(int d, const std::vector<S>& r, const ScalarMode<S>& mode = {}) {
    detail::check_slice_sums_valid(d, r, mode);
    S mx = r[0];
    S total(0);
    for (const S& v : r) {
        if (v > mx) mx = v;
        total += v;
    }
    S lhs = S(S(d) * mx);
    return mode.le(lhs, total, static_cast<int>(r.size()));
}

// Scaled greedy hypersimplex decomposition of R/S with k = d; each vertex
// subset becomes one canonical tuple. Support has at most n tuples, so at
// most n*d! positive entries in the full symmetric array.
template <class S>
SymHypermatrix<S> realize(int d, const std::vector<S>& r, const ScalarMode<S>& mode = {}) {
    detail::check_slice_sums_valid(d, r, mode);
    const int n = static_cast<int>(r.size());
    S mx = r[0];
    S total(0);
    for (const S& v : r) {
        if (v > mx) mx = v;
        total += v;
    }
    if (!is_realizable(d, r, mode)) {
        S lhs = S(S(d) * mx);
        throw InfeasibleError("realize: slice sums violate d*max(R) <= sum(R)",
                              ScalarTraits<S>::str(lhs), ScalarTraits<S>::str(total));
    }

    SymHypermatrix<S> a(n, d);
    if (n < d) return a;                              // R = 0 here
    if (!(total > S(0)) || mode.is_zero(total, n)) return a;

    S big_s = S(total / S(d));
    Permutation rho = sort_perm_desc(r);  // sorted position i holds original index rho.images[i]
    std::vector<S> scaled = permuted(rho, r);
    for (S& v : scaled) {
        v = S(v / big_s);
        if constexpr (!ScalarTraits<S>::exact) v = std::clamp(v, S(0), S(1));
    }

    auto comb = hypersimplex_decompose(scaled, d, mode);
    const S fact = factorial<S>(d - 1);
    for (const auto& term : comb.terms) {
        S value = S(S(big_s * term.weight) / fact);
        if (!(value > S(0))) continue;
        std::vector<int> tuple;
        tuple.reserve(static_cast<std::size_t>(d));
        for (int member : term.atom.members)
            tuple.push_back(rho.images[static_cast<std::size_t>(member - 1)]);
        a.add(std::move(tuple), value);
    }
    return a;
}

// Closed forms for the unique realizations at n = d and n = d + 1.
template <class S>
SymHypermatrix<S> singleton_solution(int d, int n, const std::vector<S>& r,
                                     const ScalarMode<S>& mode = {}) {
    detail::check_slice_sums_valid(d, r, mode);
    if (n != static_cast<int>(r.size()))
        throw std::invalid_argument("singleton_solution: n does not match R");
    if (n != d && n != d + 1)
        throw std::invalid_argument("singleton_solution: defined only for n = d or n = d + 1");
    if (!is_realizable(d, r, mode)) {
        S mx = r[0];
        S total(0);
        for (const S& v : r) {
            if (v > mx) mx = v;
            total += v;
        }
        throw InfeasibleError("singleton_solution: infeasible slice sums",
                              ScalarTraits<S>::str(S(S(d) * mx)), ScalarTraits<S>::str(total));
    }

    SymHypermatrix<S> a(n, d);
    const S fact_dm1 = factorial<S>(d - 1);
    if (n == d) {
        // feasibility forces r_1 = ... = r_d
        S value = S(r[0] / fact_dm1);
        if (value > S(0)) {
            std::vector<int> tuple(static_cast<std::size_t>(d));
            std::iota(tuple.begin(), tuple.end(), 1);
            a.set(std::move(tuple), value);
        }
        return a;
    }

    const S fact_d = factorial<S>(d);
    S total(0);
    for (const S& v : r) total += v;
    for (int k = 1; k <= n; ++k) {
        S value = S(S(total / fact_d) - S(r[static_cast<std::size_t>(k - 1)] / fact_dm1));
        if constexpr (!ScalarTraits<S>::exact) {
            if (value < S(0)) {
                if (value < S(S(-static_cast<int>(n)) * mode.eps))
                    throw std::logic_error("singleton_solution: negative closed-form entry");
                value = S(0);
            }
        }
        if (!(value > S(0))) continue;
        std::vector<int> tuple;
        tuple.reserve(static_cast<std::size_t>(d));
        for (int i = 1; i <= n; ++i)
            if (i != k) tuple.push_back(i);
        a.set(std::move(tuple), value);
    }
    return a;
}

struct PolytopeDimension {
    bool singleton = false;
    long long dimension = 0;  // C(n,d) - n, valid when !singleton
};

inline long long binomial_checked(int n, int d) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(d));
    if (!b.fits_slong_p()) throw std::overflow_error("binomial does not fit a 64-bit integer");
    return b.get_si();
}

inline PolytopeDimension polytope_dimension(int d, int n) {
    if (d < 2) throw std::invalid_argument("polytope_dimension: d must be >= 2");
    if (n < d) throw std::invalid_argument("polytope_dimension: n must be >= d");
    if (n == d || n == d + 1) return {true, 0};
    return {false, binomial_checked(n, d) - n};
}

inline std::vector<std::vector<int>> canonical_tuples(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == d) {
            out.push_back(cur);
            return;
        }
        for (int i = next; i <= n - (d - static_cast<int>(cur.size())) + 1; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// n x C(n,d) 0/1 incidence of the canonical tuples, in lexicographic
// column order (the B of the slice-sum system B w = R / (d-1)!).
inline Matrix<Rational> constraint_matrix(int d, int n) {
    auto tuples = canonical_tuples(n, d);
    Matrix<Rational> b(static_cast<std::size_t>(n), tuples.size());
    for (std::size_t j = 0; j < tuples.size(); ++j)
        for (int i : tuples[j]) b(static_cast<std::size_t>(i - 1), j) = Rational(1);
    return b;
}

inline int constraint_rank(int d, int n) {
    if (d < 2) throw std::invalid_argument("constraint_rank: d must be >= 2");
    if (n < d) throw std::invalid_argument("constraint_rank: n must be >= d");
    return static_cast<int>(rank(constraint_matrix(d, n)));
}

namespace detail {

template <class S>
Matrix<Rational> support_incidence(const SymHypermatrix<S>& a) {
    Matrix<Rational> m(static_cast<std::size_t>(a.n()), a.support().size());
    std::size_t j = 0;
    for (const auto& [tuple, value] : a.support()) {
        for (int i : tuple) m(static_cast<std::size_t>(i - 1), j) = Rational(1);
        ++j;
    }
    return m;
}

}  // namespace detail

// Extreme point of N0(d;R): support incidence vectors linearly
// independent (exact rational rank equals the support size).
template <class S>
bool is_extreme(const SymHypermatrix<S>& a) {
    if (a.support().empty()) return true;
    Matrix<Rational> m = detail::support_incidence(a);
    return rank(m) == a.support().size();
}

// Basic-feasible-solution pivoting: while the support is dependent, shift
// along an exact rational dependence until a tuple value hits zero. Slice
// sums are invariant; support shrinks every round.
template <class S>
SymHypermatrix<S> extreme_reduce(const SymHypermatrix<S>& a_in) {
    SymHypermatrix<S> a = a_in;
    const S drop_tol = ScalarTraits<S>::exact ? S(0) : S(1e-12);
    while (!a.support().empty()) {
        Matrix<Rational> m = detail::support_incidence(a);
        auto lambda_opt = kernel_vector(m);
        if (!lambda_opt) break;
        std::vector<Rational>& lambda = *lambda_opt;
        bool has_positive = false;
        for (const Rational& l : lambda)
            if (l > 0) {
                has_positive = true;
                break;
            }
        if (!has_positive)
            for (Rational& l : lambda) l = -l;

        std::vector<const std::vector<int>*> tuples;
        std::vector<S> values;
        tuples.reserve(a.support().size());
        for (const auto& [tuple, value] : a.support()) {
            tuples.push_back(&tuple);
            values.push_back(value);
        }

        std::size_t best = tuples.size();
        S t(0);
        for (std::size_t j = 0; j < tuples.size(); ++j) {
            if (!(lambda[j] > 0)) continue;
            S lj = ScalarTraits<S>::from_rational(lambda[j]);
            S ratio = S(values[j] / lj);
            if (best == tuples.size() || ratio < t) {
                best = j;
                t = ratio;
            }
        }
        if (best == tuples.size()) throw std::logic_error("extreme_reduce: dependence without positive entry");

        SymHypermatrix<S> next(a.n(), a.d());
        for (std::size_t j = 0; j < tuples.size(); ++j) {
            if (j == best) continue;
            S lj = ScalarTraits<S>::from_rational(lambda[j]);
            S value = S(values[j] - S(t * lj));
            if (value > drop_tol) next.set(*tuples[j], value);
        }
        a = std::move(next);
    }
    return a;
}

}  // namespace hulldec
