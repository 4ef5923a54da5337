#include "hulldec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "hulldec/errors.hpp"
#include "hulldec/majorization.hpp"

namespace hulldec {

SymMatrix::SymMatrix(Matrix<double> a) : a_(std::move(a)) {
    if (a_.rows() == 0 || a_.rows() != a_.cols())
        throw std::invalid_argument("SymMatrix: matrix must be square and nonempty");
    double norm = frobenius(a_);
    double asym = 0;
    for (std::size_t i = 0; i < a_.rows(); ++i)
        for (std::size_t j = i + 1; j < a_.cols(); ++j)
            asym += 2 * (a_(i, j) - a_(j, i)) * (a_(i, j) - a_(j, i));
    if (std::sqrt(asym) > 1e-12 * (1.0 + norm))
        throw std::invalid_argument("SymMatrix: matrix is not symmetric");
    for (std::size_t i = 0; i < a_.rows(); ++i)
        for (std::size_t j = i + 1; j < a_.cols(); ++j) {
            double v = 0.5 * (a_(i, j) + a_(j, i));
            a_(i, j) = v;
            a_(j, i) = v;
        }
    for (std::size_t i = 0; i < a_.rows(); ++i)
        for (std::size_t j = 0; j < a_.cols(); ++j)
            if (!std::isfinite(a_(i, j))) throw std::invalid_argument("SymMatrix: non-finite entry");
}

SymMatrix SymMatrix::zero(int n) { return SymMatrix(Matrix<double>(static_cast<std::size_t>(n), static_cast<std::size_t>(n))); }

SymMatrix SymMatrix::identity(int n) { return SymMatrix(Matrix<double>::identity(static_cast<std::size_t>(n))); }

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
    Matrix<double> m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return SymMatrix(std::move(m));
}

double SymMatrix::trace_value() const { return trace(a_); }

namespace {

double off_diagonal_norm(const Matrix<double>& a) {
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const SymMatrix& x) {
    const std::size_t n = static_cast<std::size_t>(x.order());
    Matrix<double> a = x.data();
    Matrix<double> v = Matrix<double>::identity(n);  // columns accumulate: v^T x v -> diag
    const double tol = 1e-12 * (1.0 + frobenius(a));
    const int max_sweeps = 30;

    bool converged = off_diagonal_norm(a) <= tol;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (std::fabs(apq) <= tol / (static_cast<double>(n) + 1.0)) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (std::fabs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0) t = -t;
                }
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(p, i) = a(i, p);
                    a(i, q) = s * aip + c * aiq;
                    a(q, i) = a(i, q);
                }
                for (std::size_t i = 0; i < n; ++i) {
                    double vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        }
        converged = off_diagonal_norm(a) <= tol;
    }
    if (!converged) throw EigenConvergenceError("jacobi_eigen: no convergence within 30 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    EigenDecomposition out;
    out.lambda.resize(n);
    out.u = Matrix<double>(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        out.lambda[r] = a(order[r], order[r]);
        for (std::size_t j = 0; j < n; ++j) out.u(r, j) = v(j, order[r]);
    }
    return out;
}

bool is_in_hull(const SymMatrix& x, int k, double eps) {
    const int n = x.order();
    if (k < 0 || k > n) throw std::invalid_argument("is_in_hull: k out of range");
    EigenDecomposition eig = jacobi_eigen(x);
    for (double l : eig.lambda)
        if (l < -eps || l > 1.0 + eps) return false;
    return std::fabs(x.trace_value() - static_cast<double>(k)) <= static_cast<double>(n) * eps;
}

bool is_projector_point(const SymMatrix& x, int k, double eps) {
    Matrix<double> sq = multiply(x.data(), x.data());
    double resid = frobenius(subtract(sq, x.data()));
    if (resid > eps) return false;
    return std::fabs(x.trace_value() - static_cast<double>(k)) <= eps;
}

namespace {

SymMatrix projector_from_rows(const Matrix<double>& u, const std::vector<int>& members) {
    const std::size_t n = u.cols();
    Matrix<double> p(n, n);
    for (int m : members) {
        std::size_t r = static_cast<std::size_t>(m - 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p(i, j) += u(r, i) * u(r, j);
    }
    return SymMatrix(std::move(p));
}

}  // namespace

ProjectorCombination grassmann_decompose(const SymMatrix& x, int k) {
    const int n = x.order();
    if (k < 0 || k > n) throw std::invalid_argument("grassmann_decompose: k out of range");
    const double eps = 1e-9;
    if (!is_in_hull(x, k, eps))
        throw NotInHullError("grassmann_decompose: matrix is not in the trace-k hull");

    ProjectorCombination out;
    if (k == 0) {
        out.terms.push_back({1.0, SymMatrix::zero(n)});
        return out;
    }
    if (k == n) {
        out.terms.push_back({1.0, SymMatrix::identity(n)});
        return out;
    }

    EigenDecomposition eig = jacobi_eigen(x);
    std::vector<double> r = eig.lambda;
    for (double& v : r) v = std::clamp(v, 0.0, 1.0);

    if (is_projector_point(x, k, 1e-8)) {
        // spectrum is a vertex up to roundoff; snap so the greedy returns it
        for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = i < k ? 1.0 : 0.0;
    } else {
        double deficit = static_cast<double>(k) -
                         std::accumulate(r.begin(), r.end(), 0.0);
        if (std::fabs(deficit) > static_cast<double>(n) * eps)
            throw NotInHullError("grassmann_decompose: trace too far from k");
        // repair the trace on coordinates strictly inside (0,1), largest slack first
        std::vector<std::size_t> idx(r.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        auto slack = [&](std::size_t i) { return deficit > 0 ? 1.0 - r[i] : r[i]; };
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return slack(a) > slack(b); });
        for (std::size_t i : idx) {
            if (deficit == 0.0) break;
            if (!(r[i] > 0.0 && r[i] < 1.0)) continue;
            double step = deficit > 0 ? std::min(deficit, 1.0 - r[i]) : std::max(deficit, -r[i]);
            r[i] += step;
            deficit -= step;
        }
    }

    ScalarMode<double> mode{eps};
    auto comb = hypersimplex_decompose(r, k, mode);
    for (const auto& term : comb.terms)
        out.terms.push_back({term.weight, projector_from_rows(eig.u, term.atom.members)});
    return out;
}

FanResult fan_value(const SymMatrix& b, int k) {
    const int n = b.order();
    if (k < 1 || k > n) throw std::invalid_argument("fan_value: k must be in 1..n");
    EigenDecomposition eig = jacobi_eigen(b);
    double value = 0;
    std::vector<int> top(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        value += eig.lambda[static_cast<std::size_t>(i)];
        top[static_cast<std::size_t>(i)] = i + 1;
    }
    return {value, projector_from_rows(eig.u, top)};
}

namespace {

Matrix<double> random_orthogonal(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t un = static_cast<std::size_t>(n);
    while (true) {
        Matrix<double> q(un, un);
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = 0; j < un; ++j) q(i, j) = gauss(rng);
        bool ok = true;
        for (std::size_t j = 0; j < un && ok; ++j) {
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t p = 0; p < j; ++p) {
                    double dot = 0;
                    for (std::size_t i = 0; i < un; ++i) dot += q(i, j) * q(i, p);
                    for (std::size_t i = 0; i < un; ++i) q(i, j) -= dot * q(i, p);
                }
            }
            double norm = 0;
            for (std::size_t i = 0; i < un; ++i) norm += q(i, j) * q(i, j);
            norm = std::sqrt(norm);
            if (norm < 1e-8) {
                ok = false;
                break;
            }
            for (std::size_t i = 0; i < un; ++i) q(i, j) /= norm;
        }
        if (ok) return q;
    }
}

}  // namespace

SymMatrix random_hull_point(int n, int k, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_hull_point: n must be >= 1");
    if (k < 0 || k > n) throw std::invalid_argument("random_hull_point: k out of range");
    if (k == 0) return SymMatrix::zero(n);
    if (k == n) return SymMatrix::identity(n);

    std::mt19937_64 rng(seed);
    const std::size_t un = static_cast<std::size_t>(n);

    std::vector<double> weights(un);
    std::uniform_real_distribution<double> unif(1e-12, 1.0);
    double total = 0;
    for (double& w : weights) {
        w = -std::log(unif(rng));
        total += w;
    }
    for (double& w : weights) w /= total;

    std::vector<double> diag(un, 0.0);
    std::vector<int> idx(un);
    for (std::size_t t = 0; t < un; ++t) {
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        for (int j = 0; j < k; ++j) diag[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] += weights[t];
    }

    Matrix<double> q = random_orthogonal(n, rng);
    Matrix<double> x(un, un);
    // X = Q^T D Q
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j) {
            double s = 0;
            for (std::size_t r = 0; r < un; ++r) s += q(r, i) * diag[r] * q(r, j);
            x(i, j) = s;
        }
    return SymMatrix(std::move(x));
}

}  // namespace hulldec
