#include "qform/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qform {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be >= 1");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged initializer");
        std::size_t j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix c(a.rows(), b.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference dimension mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Matrix operator*(double c, const Matrix& a) {
    Matrix b(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = c * a(i, j);
    return b;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matvec dimension mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        const auto row = a.row(i);
        for (std::size_t j = 0; j < x.size(); ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

double dot(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

std::vector<double> SymmetricSpectrum::basis_column(std::size_t j) const {
    std::vector<double> c(basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i) c[i] = basis(i, j);
    return c;
}

Matrix symmetrize(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("symmetrize requires a square matrix");
    Matrix s(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));
    return s;
}

namespace {

void require_symmetric(const Matrix& a, const char* who) {
    if (!a.is_square()) throw std::invalid_argument(std::string(who) + ": matrix not square");
    const double scale = std::max(1.0, a.max_abs());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (std::abs(a(i, j) - a(j, i)) > 1e-10 * scale)
                throw std::invalid_argument(std::string(who) + ": matrix not symmetric");
}

double off_diagonal_frobenius(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

double frobenius(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
}

}  // namespace

SymmetricSpectrum spectral_decompose(const Matrix& input) {
    require_symmetric(input, "spectral_decompose");
    const std::size_t n = input.rows();
    Matrix a = symmetrize(input);  // remove the sub-tolerance asymmetry
    Matrix v = Matrix::identity(n);

    const double norm = frobenius(a);
    const double tol = 1e-12 * std::max(1.0, norm);
    const int max_sweeps = 100;

    int sweep = 0;
    while (off_diagonal_frobenius(a) > tol) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("spectral_decompose: Jacobi sweeps did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    SymmetricSpectrum out;
    out.eigenvalues.resize(n);
    out.basis = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = a(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) out.basis(i, j) = v(i, order[j]);
    }
    return out;
}

NormBundle matrix_norms(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("matrix_norms requires a square matrix");
    const std::size_t n = a.rows();

    bool symmetric = true;
    const double scale = std::max(1.0, a.max_abs());
    for (std::size_t i = 0; i < n && symmetric; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(a(i, j) - a(j, i)) > 1e-10 * scale) {
                symmetric = false;
                break;
            }

    std::vector<double> singular(n);
    if (symmetric) {
        const auto spec = spectral_decompose(a);
        for (std::size_t i = 0; i < n; ++i) singular[i] = std::abs(spec.eigenvalues[i]);
    } else {
        const auto spec = spectral_decompose(transpose(a) * a);
        const double clamp = 1e-12 * std::max(1.0, scale * scale);
        for (std::size_t i = 0; i < n; ++i) {
            double s = spec.eigenvalues[i];
            if (s < 0.0) {
                if (s < -clamp)
                    throw std::runtime_error("matrix_norms: A^T A produced a negative eigenvalue");
                s = 0.0;
            }
            singular[i] = std::sqrt(s);
        }
    }

    NormBundle b;
    double sq = 0.0;
    for (double s : singular) {
        b.operatorNorm = std::max(b.operatorNorm, s);
        sq += s * s;
        b.traceNorm += s;
    }
    b.hilbertSchmidt = std::sqrt(sq);
    return b;
}

std::pair<Matrix, Matrix> split_pos_neg(const Matrix& a) {
    require_symmetric(a, "split_pos_neg");
    const auto spec = spectral_decompose(a);
    const std::size_t n = a.rows();
    Matrix a1(n, n, 0.0), a2(n, n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = spec.eigenvalues[k];
        if (s == 0.0) continue;
        Matrix& target = s > 0.0 ? a1 : a2;
        const double w = std::abs(s);
        for (std::size_t i = 0; i < n; ++i) {
            const double ui = spec.basis(i, k);
            if (ui == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) target(i, j) += w * ui * spec.basis(j, k);
        }
    }
    return {std::move(a1), std::move(a2)};
}

double quadform(const Matrix& a, std::span<const double> x) {
    if (!a.is_square() || a.rows() != x.size())
        throw std::invalid_argument("quadform dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double xi = x[i];
        if (xi == 0.0) continue;
        const auto row = a.row(i);
        double inner = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) inner += row[j] * x[j];
        s += xi * inner;
    }
    return s;
}

}  // namespace qform
