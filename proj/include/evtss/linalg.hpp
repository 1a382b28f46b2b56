#pragma once

#include <cstddef>
#include <optional>
#include <vector>

// Minimal dense matrix support for the small parameter-covariance and
// design matrices this library works with (at most a few thousand rows,
// a dozen columns). Row-major storage.

namespace evtss {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
    double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Lower Cholesky factor of a symmetric positive-definite matrix, or
// nullopt if the matrix is not (numerically) positive definite.
std::optional<Matrix> cholesky(const Matrix& a);

// Jacobi eigendecomposition of a symmetric matrix. Eigenvalues ascending,
// eigenvectors in columns of `vectors`.
void sym_eigen(const Matrix& a, std::vector<double>& values, Matrix& vectors);

// Moore-Penrose pseudo-inverse of a symmetric matrix via eigendecomposition;
// eigenvalues below rel_tol * max|lambda| are treated as zero. Sets
// `near_singular` when any eigenvalue was dropped or negative.
Matrix pinv_sym(const Matrix& a, double rel_tol, bool* near_singular);

// y = A x for row-major A.
std::vector<double> mat_vec(const Matrix& a, const std::vector<double>& x);

}  // namespace evtss
