#include "evtss/linalg.hpp"

#include <cmath>

#include "evtss/errors.hpp"

namespace evtss {

std::optional<Matrix> cholesky(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw DomainError("cholesky: square matrix required");
    Matrix l(n, n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double diag = a(j, j);
        for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
        if (!(diag > 0.0) || !std::isfinite(diag)) return std::nullopt;
        l(j, j) = std::sqrt(diag);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / l(j, j);
        }
    }
    return l;
}

void sym_eigen(const Matrix& a, std::vector<double>& values, Matrix& vectors) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw DomainError("sym_eigen: square matrix required");
    Matrix m = a;
    vectors = Matrix(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) vectors(i, i) = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += m(i, j) * m(i, j);
        if (off < 1e-30) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(m(p, q)) < 1e-300) continue;
                const double theta = (m(q, q) - m(p, p)) / (2.0 * m(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = c * mkp - s * mkq;
                    m(k, q) = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m(p, k), mqk = m(q, k);
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = s * mpk + c * mqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = vectors(k, p), vkq = vectors(k, q);
                    vectors(k, p) = c * vkp - s * vkq;
                    vectors(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    values.resize(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = m(i, i);

    // Sort ascending, permuting eigenvector columns alongside.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t lo = i;
        for (std::size_t j = i + 1; j < n; ++j)
            if (values[j] < values[lo]) lo = j;
        if (lo != i) {
            std::swap(values[i], values[lo]);
            for (std::size_t k = 0; k < n; ++k)
                std::swap(vectors(k, i), vectors(k, lo));
        }
    }
}

Matrix pinv_sym(const Matrix& a, double rel_tol, bool* near_singular) {
    const std::size_t n = a.rows();
    std::vector<double> lam;
    Matrix v;
    sym_eigen(a, lam, v);
    double lmax = 0.0;
    for (double l : lam) lmax = std::max(lmax, std::fabs(l));
    const double cut = rel_tol * (lmax > 0.0 ? lmax : 1.0);
    bool flagged = false;
    Matrix out(n, n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        if (lam[k] <= cut) {
            flagged = true;
            continue;
        }
        const double inv = 1.0 / lam[k];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += inv * v(i, k) * v(j, k);
    }
    if (near_singular) *near_singular = flagged;
    return out;
}

std::vector<double> mat_vec(const Matrix& a, const std::vector<double>& x) {
    if (a.cols() != x.size()) throw DomainError("mat_vec: dimension mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* row = a.row_ptr(i);
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

}  // namespace evtss
