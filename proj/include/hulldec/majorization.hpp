#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hulldec/combination.hpp"
#include "hulldec/errors.hpp"
#include "hulldec/linalg.hpp"
#include "hulldec/scalar.hpp"

namespace hulldec {

// x is majorized by y: every top-k partial sum of the descending
// rearrangement of x is bounded by y's, and the totals agree.
template <class S>
bool is_majorized(const std::vector<S>& x, const std::vector<S>& y, const ScalarMode<S>& mode = {}) {
    if (x.size() != y.size()) throw std::invalid_argument("is_majorized: dimension mismatch");
    if (x.empty()) throw std::invalid_argument("is_majorized: empty vectors");
    std::vector<S> xs = x;
    std::vector<S> ys = y;
    auto desc = [](const S& a, const S& b) { return a > b; };
    std::sort(xs.begin(), xs.end(), desc);
    std::sort(ys.begin(), ys.end(), desc);
    const std::size_t n = xs.size();
    S sx(0), sy(0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        sx += xs[k];
        sy += ys[k];
        if (!mode.le(sx, sy, static_cast<int>(k) + 1)) return false;
    }
    sx += xs[n - 1];
    sy += ys[n - 1];
    return mode.eq(sx, sy, static_cast<int>(n));
}

namespace detail {

template <class S>
S inf_norm_diff(const std::vector<S>& a, const std::vector<S>& b) {
    S m(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        S d = ScalarTraits<S>::abs(S(a[i] - b[i]));
        if (d > m) m = d;
    }
    return m;
}

// One Carathéodory pass shared by the vector-level and permutation-level
// reductions: while more than max_terms points carry weight, eliminate
// along an affine dependence of the points and drop the zeroed terms.
// Returns the kept original indices with their new weights.
//
// The atoms share one coordinate sum, so the last coordinate row is the
// ones-row times that sum minus the other coordinate rows. Eliminating on
// [ones-row; coordinate rows 0..dim-2] therefore captures every affine
// dependence with only dim rows, and dim < m guarantees a free column.
template <class S>
std::pair<std::vector<std::size_t>, std::vector<S>> reduce_convex_terms(
    const std::vector<std::vector<S>>& points, std::vector<S> weights, std::size_t max_terms,
    const ScalarMode<S>& mode) {
    const std::size_t dim = points.empty() ? 0 : points[0].size();
    std::vector<std::size_t> kept(points.size());
    std::iota(kept.begin(), kept.end(), std::size_t{0});

    S drop_tol = ScalarTraits<S>::exact ? S(0) : S(1e-14);
    (void)mode;

    std::size_t rounds = points.size() + 2;
    while (kept.size() > max_terms && kept.size() > dim && rounds-- > 0) {
        Matrix<S> stacked(dim, kept.size());
        S scale(1);
        for (std::size_t j = 0; j < kept.size(); ++j) {
            const auto& p = points[kept[j]];
            stacked(0, j) = S(1);
            for (std::size_t i = 0; i + 1 < dim; ++i) {
                stacked(i + 1, j) = p[i];
                S mag = ScalarTraits<S>::abs(p[i]);
                if (mag > scale) scale = mag;
            }
        }
        S zero_tol = ScalarTraits<S>::exact ? S(0) : S(S(1e-12) * scale);
        auto lambda_opt = kernel_vector(stacked, zero_tol);
        if (!lambda_opt) break;
        std::vector<S>& lambda = *lambda_opt;
        bool has_positive = false;
        for (const S& l : lambda)
            if (l > S(0)) {
                has_positive = true;
                break;
            }
        if (!has_positive)
            for (S& l : lambda) l = S(-l);

        std::size_t argmin = kept.size();
        S t(0);
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (!(lambda[j] > S(0))) continue;
            S ratio = S(weights[kept[j]] / lambda[j]);
            if (argmin == kept.size() || ratio < t) {
                argmin = j;
                t = ratio;
            }
        }
        if (argmin == kept.size()) throw std::logic_error("caratheodory: dependence with no positive entry");

        for (std::size_t j = 0; j < kept.size(); ++j)
            weights[kept[j]] = S(weights[kept[j]] - t * lambda[j]);
        weights[kept[argmin]] = S(0);

        std::vector<std::size_t> next;
        next.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (weights[kept[j]] > drop_tol) next.push_back(kept[j]);
        kept = std::move(next);
    }

    std::vector<S> out_weights;
    out_weights.reserve(kept.size());
    for (std::size_t idx : kept) out_weights.push_back(weights[idx]);
    return {std::move(kept), std::move(out_weights)};
}

}  // namespace detail

// Greedy decomposition of a hypersimplex point into vertices: repeatedly
// put the residual mass on the k largest residual coordinates. Each step
// pins a coordinate at zero or at the moving ceiling, so at most n steps.
template <class S>
ConvexCombination<S, SubsetIndicator> hypersimplex_decompose(const std::vector<S>& x_in, int k,
                                                             const ScalarMode<S>& mode = {}) {
    const int n = static_cast<int>(x_in.size());
    if (n < 1) throw std::invalid_argument("hypersimplex_decompose: empty vector");
    if (k < 0 || k > n) throw std::invalid_argument("hypersimplex_decompose: k out of range");

    std::vector<S> x = x_in;
    S sum(0);
    for (S& xi : x) {
        if (!mode.ge(xi, S(0)) || !mode.le(xi, S(1)))
            throw std::invalid_argument("hypersimplex_decompose: coordinate outside [0,1]");
        if constexpr (!ScalarTraits<S>::exact) xi = std::clamp(xi, S(0), S(1));
        sum += xi;
    }
    if (!mode.eq(sum, S(k), n))
        throw std::invalid_argument("hypersimplex_decompose: coordinates must sum to k");

    const S t_tol = ScalarTraits<S>::exact ? S(0) : S(1e-12);
    ConvexCombination<S, SubsetIndicator> out;
    S t(1);
    bool exhausted = false;
    std::vector<int> idx(static_cast<std::size_t>(n));

    for (int step = 0; step < 2 * n + 4; ++step) {
        if (t <= t_tol) {
            exhausted = true;
            break;
        }
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            return x[static_cast<std::size_t>(a)] > x[static_cast<std::size_t>(b)];
        });

        S c(0);
        bool have_c = false;
        if (k > 0) {
            c = x[static_cast<std::size_t>(idx[static_cast<std::size_t>(k - 1)])];
            have_c = true;
        }
        if (k < n) {
            S cap = S(t - x[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])]);
            if (!have_c || cap < c) c = cap;
        }

        if (!(c > S(0))) {
            if (!ScalarTraits<S>::exact && t <= S(S(64 * n) * (mode.eps + S(1e-15)))) {
                exhausted = true;  // residual is input drift; renormalization absorbs it
                break;
            }
            throw std::logic_error("hypersimplex_decompose: stalled");
        }

        SubsetIndicator subset;
        subset.n = n;
        subset.members.reserve(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) subset.members.push_back(idx[static_cast<std::size_t>(j)] + 1);
        std::sort(subset.members.begin(), subset.members.end());

        for (int j = 0; j < k; ++j) {
            std::size_t pos = static_cast<std::size_t>(idx[static_cast<std::size_t>(j)]);
            x[pos] = S(x[pos] - c);
        }
        t = S(t - c);
        out.terms.push_back({c, std::move(subset)});
    }
    if (t <= t_tol) exhausted = true;
    if (!exhausted) throw std::logic_error("hypersimplex_decompose: did not exhaust the mass");

    if constexpr (!ScalarTraits<S>::exact) {
        S total(0);
        for (const auto& term : out.terms) total += term.weight;
        if (total > S(0))
            for (auto& term : out.terms) term.weight /= total;
    }
    return out;
}

// Carathéodory reduction of a convex combination of equal-sum vectors to
// at most n atoms (n = dimension), preserving the reconstruction.
template <class S>
ConvexCombination<S, std::vector<S>> caratheodory_reduce(
    const ConvexCombination<S, std::vector<S>>& comb, const std::vector<S>& target,
    const ScalarMode<S>& mode = {}) {
    validate(comb, mode);
    const std::size_t n = target.size();
    if (n == 0) throw std::invalid_argument("caratheodory_reduce: empty target");
    for (const auto& term : comb.terms)
        if (term.atom.size() != n) throw std::invalid_argument("caratheodory_reduce: atom dimension mismatch");

    S scale(1);
    for (const S& v : target) {
        S mag = ScalarTraits<S>::abs(v);
        if (mag > scale) scale = mag;
    }

    S sum0(0);
    for (const S& v : comb.terms.front().atom) sum0 += v;
    for (const auto& term : comb.terms) {
        S s(0);
        for (const S& v : term.atom) s += v;
        S diff = ScalarTraits<S>::abs(S(s - sum0));
        if (diff > S(S(static_cast<int>(n)) * mode.eps * scale))
            throw std::invalid_argument("caratheodory_reduce: atoms must have equal coordinate sums");
    }

    std::vector<S> recon(n, S(0));
    for (const auto& term : comb.terms)
        for (std::size_t i = 0; i < n; ++i) recon[i] += S(term.weight * term.atom[i]);
    S err = detail::inf_norm_diff(recon, target);
    if (err > S(S(static_cast<int>(n)) * mode.eps * scale))
        throw std::invalid_argument("caratheodory_reduce: combination does not reconstruct the target");

    if (comb.terms.size() <= n) return comb;

    std::vector<std::vector<S>> points;
    std::vector<S> weights;
    points.reserve(comb.terms.size());
    for (const auto& term : comb.terms) {
        points.push_back(term.atom);
        weights.push_back(term.weight);
    }
    auto [kept, new_weights] = detail::reduce_convex_terms(points, std::move(weights), n, mode);

    ConvexCombination<S, std::vector<S>> out;
    S total(0);
    for (const S& w : new_weights) total += w;
    for (std::size_t j = 0; j < kept.size(); ++j) {
        S w = new_weights[j];
        if constexpr (!ScalarTraits<S>::exact) w /= total;
        out.terms.push_back({w, comb.terms[kept[j]].atom});
    }
    return out;
}

// Rado/Hardy-Littlewood-Polya construction: carry sorted y to sorted x by
// two-coordinate averagings, expanding each averaging over a bounded list
// of permutations and reducing with the Carathéodory pass. Output atoms
// are permutations of y, at most n of them.
template <class S>
ConvexCombination<S, Permutation> rado_decompose(const std::vector<S>& x, const std::vector<S>& y,
                                                 const ScalarMode<S>& mode = {}) {
    if (x.size() != y.size()) throw std::invalid_argument("rado_decompose: dimension mismatch");
    if (x.empty()) throw std::invalid_argument("rado_decompose: empty vectors");
    if (!is_majorized(x, y, mode)) throw NotMajorizedError("rado_decompose: x is not majorized by y");

    const std::size_t n = x.size();
    const Permutation rho_x = sort_perm_desc(x);
    const Permutation rho_y = sort_perm_desc(y);
    const std::vector<S> xt = permuted(rho_x, x);  // target, descending
    std::vector<S> z = permuted(rho_y, y);         // current, descending
    const std::vector<S> ys = z;

    S scale(1);
    for (const S& v : xt) {
        S mag = ScalarTraits<S>::abs(v);
        if (mag > scale) scale = mag;
    }
    const S done_tol = ScalarTraits<S>::exact ? S(0) : S(S(1e-13) * scale);
    const S lenient_tol =
        ScalarTraits<S>::exact ? S(0) : S(S(4 * static_cast<int>(n)) * (mode.eps + S(1e-15)) * scale);

    std::vector<std::pair<S, Permutation>> chain;
    chain.emplace_back(S(1), Permutation::identity(static_cast<int>(n)));

    auto reduce_chain = [&]() {
        if (chain.size() <= n) return;
        std::vector<std::vector<S>> points;
        std::vector<S> weights;
        points.reserve(chain.size());
        for (const auto& [w, p] : chain) {
            points.push_back(permuted(p, ys));
            weights.push_back(w);
        }
        auto [kept, new_weights] = detail::reduce_convex_terms(points, std::move(weights), n, mode);
        std::vector<std::pair<S, Permutation>> next;
        next.reserve(kept.size());
        for (std::size_t j = 0; j < kept.size(); ++j)
            next.emplace_back(new_weights[j], chain[kept[j]].second);
        chain = std::move(next);
    };

    const std::size_t max_iters = 4 * n * n + 8;
    std::size_t iter = 0;
    for (; iter < max_iters; ++iter) {
        std::size_t j = n;
        for (std::size_t i = 0; i < n; ++i) {
            S d = ScalarTraits<S>::abs(S(z[i] - xt[i]));
            if (d > done_tol) {
                j = i;
                break;
            }
        }
        if (j == n) break;
        if (!(z[j] > xt[j])) {
            if (!ScalarTraits<S>::exact && detail::inf_norm_diff(z, xt) <= lenient_tol) break;
            throw std::logic_error("rado_decompose: transfer chain lost majorization");
        }
        std::size_t kk = n;
        for (std::size_t i = j + 1; i < n; ++i) {
            if (S(xt[i] - z[i]) > done_tol) {
                kk = i;
                break;
            }
        }
        if (kk == n) {
            if (!ScalarTraits<S>::exact && detail::inf_norm_diff(z, xt) <= lenient_tol) break;
            throw std::logic_error("rado_decompose: no receiving coordinate");
        }

        S delta = std::min(S(z[j] - xt[j]), S(xt[kk] - z[kk]));
        S denom = S(z[j] - z[kk]);
        S lam = S(S(1) - delta / denom);  // weight staying on the identity branch

        std::vector<std::pair<S, Permutation>> next;
        next.reserve(2 * chain.size());
        for (auto& [w, p] : chain) {
            if (lam > S(0)) next.emplace_back(S(lam * w), p);
            Permutation swapped = p;
            std::swap(swapped.images[j], swapped.images[kk]);
            S wq = S(S(S(1) - lam) * w);
            if (wq > S(0)) next.emplace_back(wq, std::move(swapped));
        }
        // merge duplicate permutations
        std::map<Permutation, S> merged;
        for (auto& [w, p] : next) merged[p] += w;
        chain.clear();
        for (auto& [p, w] : merged) chain.emplace_back(w, p);

        z[j] = S(z[j] - delta);
        z[kk] = S(z[kk] + delta);
        reduce_chain();

        Permutation rho = sort_perm_desc(z);
        if (!rho.is_identity()) {
            z = permuted(rho, z);
            for (auto& [w, p] : chain) p = compose(rho, p);
        }
    }
    if (iter == max_iters) throw std::logic_error("rado_decompose: transfer chain did not terminate");
    reduce_chain();

    const Permutation rho_x_inv = rho_x.inverse();
    ConvexCombination<S, Permutation> out;
    S total(0);
    for (const auto& [w, p] : chain) total += w;
    for (const auto& [w, p] : chain) {
        S weight = w;
        if constexpr (!ScalarTraits<S>::exact) weight /= total;
        out.terms.push_back({weight, compose(rho_x_inv, compose(p, rho_y))});
    }
    return out;
}

}  // namespace hulldec
