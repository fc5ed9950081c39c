#pragma once

#include <cstddef>
#include <vector>

#include "seedopt/errors.hpp"

namespace seedopt {

/// Dense square matrix, row-major. Type spaces are tiny, so no BLAS backing.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim, double fill = 0.0) : dim_(dim), data_(dim * dim, fill) {}

    static Matrix identity(std::size_t dim) {
        Matrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const { return dim_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    bool operator==(const Matrix& other) const = default;

    const std::vector<double>& data() const { return data_; }

    std::vector<double> row_sums() const {
        std::vector<double> s(dim_, 0.0);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) s[i] += (*this)(i, j);
        return s;
    }

    std::vector<double> apply(const std::vector<double>& x) const {
        if (x.size() != dim_) throw DimensionMismatch("matrix-vector dimension mismatch");
        std::vector<double> y(dim_, 0.0);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

/// Solves A x = b by Gaussian elimination with partial pivoting.
/// Throws SingularSystem when a pivot collapses.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

} // namespace seedopt
