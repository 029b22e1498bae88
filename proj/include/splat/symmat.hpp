#pragma once

#include <vector>

#include "splat/types.hpp"

namespace splat {

struct NotSpdError : Error {
    using Error::Error;
};

// Dense symmetric matrix, packed upper triangle, dims up to 64.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * (dim + 1) / 2, 0.0) {
        assert(dim >= 1 && dim <= 64);
    }

    int dim() const { return dim_; }

    double& at(int i, int j) {
        if (i > j) std::swap(i, j);
        return a_[idx(i, j)];
    }
    double operator()(int i, int j) const {
        if (i > j) std::swap(i, j);
        return a_[idx(i, j)];
    }

    void add(const SymMatrix& o) {
        assert(dim_ == o.dim_);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    }
    void sub(const SymMatrix& o) {
        assert(dim_ == o.dim_);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    }
    void add_diagonal(double v) {
        for (int i = 0; i < dim_; ++i) a_[idx(i, i)] += v;
    }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < dim_; ++i) t += a_[idx(i, i)];
        return t;
    }

private:
    std::size_t idx(int i, int j) const {
        // row-wise packed upper triangle
        return static_cast<std::size_t>(i) * dim_ - static_cast<std::size_t>(i) * (i - 1) / 2 +
               (j - i);
    }

    int dim_ = 0;
    std::vector<double> a_;
};

// Eigenvalues in ascending order via cyclic Jacobi sweeps; iterates until the
// off-diagonal Frobenius norm falls below 1e-12 * ||m||_F. Throws Error after
// 100 sweeps without convergence.
std::vector<double> eigvals_sym(const SymMatrix& m);

struct CholResult {
    double logdet = 0.0;
    SymMatrix inverse;
};

// Cholesky-based log-determinant and inverse. Throws NotSpdError when a pivot
// is not strictly positive.
CholResult chol_logdet_inv(const SymMatrix& m);

}  // namespace splat
