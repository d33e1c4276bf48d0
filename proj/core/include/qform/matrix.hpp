#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qform {

/// Dense row-major real matrix. Square where an operation requires it.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }
    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(data_).subspan(i * cols_, cols_);
    }

    /// Largest absolute entry; 0 for empty.
    double max_abs() const;
    bool all_finite() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double c, const Matrix& a);
Matrix transpose(const Matrix& a);

std::vector<double> matvec(const Matrix& a, std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);

/// Eigendecomposition of a symmetric matrix: A = U diag(eigenvalues) U^T,
/// eigenvalues sorted nonincreasing, columns of U orthonormal.
struct SymmetricSpectrum {
    std::vector<double> eigenvalues;
    Matrix basis;

    std::vector<double> basis_column(std::size_t j) const;
};

/// Operator, Hilbert-Schmidt and trace norms, all from singular values.
/// Invariants: operatorNorm <= hilbertSchmidt <= traceNorm and
/// hilbertSchmidt^2 <= operatorNorm * traceNorm.
struct NormBundle {
    double operatorNorm = 0.0;
    double hilbertSchmidt = 0.0;
    double traceNorm = 0.0;
};

/// (A + A^T)/2. Leaves every quadratic form value unchanged.
Matrix symmetrize(const Matrix& a);

/// Cyclic Jacobi eigendecomposition. Requires symmetry to 1e-10 (relative to
/// the largest entry); throws std::invalid_argument otherwise and
/// std::runtime_error if the sweep limit is hit.
SymmetricSpectrum spectral_decompose(const Matrix& a);

/// Norms of an arbitrary square matrix via its singular values (|eigenvalues|
/// when symmetric, sqrt of the spectrum of A^T A otherwise).
NormBundle matrix_norms(const Matrix& a);

/// Splits a symmetric A into PSD parts A1 - A2 carrying the positive and
/// (negated) negative eigenvalues respectively.
std::pair<Matrix, Matrix> split_pos_neg(const Matrix& a);

/// sum_{ij} a_ij x_i x_j
double quadform(const Matrix& a, std::span<const double> x);

}  // namespace qform
