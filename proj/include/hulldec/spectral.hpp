#pragma once

#include <cstdint>
#include <vector>

#include "hulldec/combination.hpp"
#include "hulldec/linalg.hpp"

namespace hulldec {

// Dense real symmetric matrix. Ingest rejects gross asymmetry (beyond
// 1e-12 relative) and symmetrizes the rest. Real field only; the complex
// Hermitian case is out of scope.
class SymMatrix {
public:
    explicit SymMatrix(Matrix<double> a);

    static SymMatrix zero(int n);
    static SymMatrix identity(int n);
    static SymMatrix diagonal(const std::vector<double>& d);

    int order() const { return static_cast<int>(a_.rows()); }
    double operator()(int i, int j) const {
        return a_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    const Matrix<double>& data() const { return a_; }
    double trace_value() const;

private:
    Matrix<double> a_;
};

// U rows are eigenvectors: U * X * U^T = diag(lambda), lambda descending.
struct EigenDecomposition {
    Matrix<double> u;
    std::vector<double> lambda;
};

// Cyclic-by-row Jacobi rotations; converges when the off-diagonal
// Frobenius norm falls below 1e-12 * (1 + ||X||_F), hard cap 30 sweeps.
EigenDecomposition jacobi_eigen(const SymMatrix& x);

// Spectrum in [-eps, 1+eps] and trace within n*eps of k.
bool is_in_hull(const SymMatrix& x, int k, double eps = 1e-9);

// ||X^2 - X||_F <= eps and |tr X - k| <= eps.
bool is_projector_point(const SymMatrix& x, int k, double eps = 1e-9);

using ProjectorCombination = ConvexCombination<double, SymMatrix>;

// Convex decomposition of a hull point into at most n rank-k projectors.
ProjectorCombination grassmann_decompose(const SymMatrix& x, int k);

struct FanResult {
    double value;         // sum of the k largest eigenvalues
    SymMatrix maximizer;  // projector onto the top-k eigenspace
};

FanResult fan_value(const SymMatrix& b, int k);

// Random convex combination of rank-k coordinate projectors conjugated by
// a random orthogonal matrix; lies in the hull by construction.
SymMatrix random_hull_point(int n, int k, std::uint64_t seed);

}  // namespace hulldec
