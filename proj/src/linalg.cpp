#include "kuramoto/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace kuramoto {

Matrix Matrix::identity(int n) {
    Matrix m(n, n, 0.0);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
    Matrix c(a.rows(), b.cols(), 0.0);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            double aik = a(i, k);
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (int p = 0; p < a.rows(); ++p)
        for (int q = p + 1; q < a.cols(); ++q) s += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(s);
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

} // namespace

EigenDecomposition eigen_symmetric(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eigen_symmetric: matrix must be square");
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(m(i, j) - m(j, i)) > 1e-12)
                throw std::invalid_argument("eigen_symmetric: matrix is not symmetric");

    Matrix a = m;
    Matrix v = Matrix::identity(n);
    const double stop = 1e-12 * frobenius_norm(m);

    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diagonal_norm(a) <= stop) break;
        if (sweep == 99) throw std::runtime_error("eigen_symmetric: Jacobi sweeps did not converge");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double phi = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (phi >= 0.0 ? 1.0 : -1.0) / (std::abs(phi) + std::sqrt(phi * phi + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                double app = a(p, p), aqq = a(q, q);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        double arp = a(r, p), arq = a(r, q);
                        a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                        a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                    }
                    double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (a(i, i) != a(j, j)) return a(i, i) < a(j, j);
        return i < j;
    });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]);
        for (int r = 0; r < n; ++r) out.vectors(r, j) = v(r, order[j]);
    }
    return out;
}

std::vector<double> eigenvalues_symmetric(const Matrix& m) {
    return eigen_symmetric(m).values;
}

std::optional<std::vector<double>> solve_linear(Matrix a, std::vector<double> b) {
    if (a.rows() != a.cols() || static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve_linear: shape mismatch");
    const int n = a.rows();
    if (n == 0) return std::vector<double>{};
    const double tiny = 1e-13 * std::max(1.0, a.max_abs());

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) <= tiny) return std::nullopt;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            std::swap(b[col], b[pivot]);
        }
        for (int r = col + 1; r < n; ++r) {
            double f = a(r, col) / a(col, col);
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

} // namespace kuramoto
