#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hulldec/scalar.hpp"

namespace hulldec {

template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, S fill = S(0))
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> a_;
};

template <class S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    Matrix<S> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const S& aik = a(i, k);
            if (aik == S(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += S(aik * b(k, j));
        }
    return c;
}

template <class S>
Matrix<S> transpose(const Matrix<S>& a) {
    Matrix<S> t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

template <class S>
Matrix<S> subtract(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("subtract: shape mismatch");
    Matrix<S> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = S(a(i, j) - b(i, j));
    return c;
}

template <class S>
S trace(const Matrix<S>& a) {
    S t(0);
    for (std::size_t i = 0; i < a.rows() && i < a.cols(); ++i) t += a(i, i);
    return t;
}

inline double frobenius(const Matrix<double>& a) {
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

inline double max_abs(const Matrix<double>& a) {
    double m = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::fabs(a(i, j)));
    return m;
}

namespace detail {

template <class S>
bool elim_zero(const S& v, const S& tol) {
    if constexpr (ScalarTraits<S>::exact) {
        (void)tol;
        return v == S(0);
    } else {
        return ScalarTraits<S>::abs(v) <= tol;
    }
}

}  // namespace detail

// Row echelon form. Pivoting: largest magnitude in float mode, first
// nonzero in exact mode (any nonzero pivot is exact there).
template <class S>
struct Echelon {
    Matrix<S> m;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col), in order
    std::size_t rank = 0;
};

template <class S>
Echelon<S> row_echelon(Matrix<S> m, const S& zero_tol) {
    Echelon<S> e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        bool found = false;
        if constexpr (ScalarTraits<S>::exact) {
            for (std::size_t i = row; i < m.rows(); ++i)
                if (m(i, col) != S(0)) {
                    pivot = i;
                    found = true;
                    break;
                }
        } else {
            S best = zero_tol;
            for (std::size_t i = row; i < m.rows(); ++i) {
                S mag = ScalarTraits<S>::abs(m(i, col));
                if (mag > best) {
                    best = mag;
                    pivot = i;
                    found = true;
                }
            }
        }
        if (!found) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            if (detail::elim_zero(m(i, col), zero_tol)) {
                m(i, col) = S(0);
                continue;
            }
            S factor = S(m(i, col) / m(row, col));
            m(i, col) = S(0);
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                m(i, j) = S(m(i, j) - factor * m(row, j));
        }
        e.pivots.emplace_back(row, col);
        ++row;
    }
    e.rank = e.pivots.size();
    e.m = std::move(m);
    return e;
}

template <class S>
std::size_t rank(const Matrix<S>& m, const S& zero_tol = S(0)) {
    return row_echelon(m, zero_tol).rank;
}

// A nonzero kernel vector of m, or nullopt when the columns are
// independent. Deterministic: the first free column gets coefficient 1.
template <class S>
std::optional<std::vector<S>> kernel_vector(const Matrix<S>& m, const S& zero_tol = S(0)) {
    Echelon<S> e = row_echelon(m, zero_tol);
    if (e.rank == m.cols()) return std::nullopt;
    std::vector<bool> is_pivot_col(m.cols(), false);
    for (auto& [r, c] : e.pivots) is_pivot_col[c] = true;
    std::size_t free_col = 0;
    while (is_pivot_col[free_col]) ++free_col;

    std::vector<S> lambda(m.cols(), S(0));
    lambda[free_col] = S(1);
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
        auto [r, c] = *it;
        S acc(0);
        for (std::size_t j = c + 1; j < m.cols(); ++j)
            if (lambda[j] != S(0)) acc += S(e.m(r, j) * lambda[j]);
        lambda[c] = S(-acc / e.m(r, c));
    }
    return lambda;
}

// Unique solution of m*x = b when the columns are independent and the
// system is consistent; nullopt otherwise.
template <class S>
std::optional<std::vector<S>> solve_unique(const Matrix<S>& m, const std::vector<S>& b,
                                           const S& zero_tol = S(0)) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_unique: shape mismatch");
    Matrix<S> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon<S> e = row_echelon(std::move(aug), zero_tol);
    // a pivot in the rhs column marks an inconsistent row
    for (auto& [r, c] : e.pivots)
        if (c == m.cols()) return std::nullopt;
    if (e.pivots.size() < m.cols()) return std::nullopt;

    std::vector<S> x(m.cols(), S(0));
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
        auto [r, c] = *it;
        S acc = e.m(r, m.cols());
        for (std::size_t j = c + 1; j < m.cols(); ++j)
            if (x[j] != S(0)) acc -= S(e.m(r, j) * x[j]);
        x[c] = S(acc / e.m(r, c));
    }
    return x;
}

}  // namespace hulldec
