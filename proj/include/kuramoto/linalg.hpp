#ifndef KURAMOTO_LINALG_HPP
#define KURAMOTO_LINALG_HPP

#include <optional>
#include <vector>

namespace kuramoto {

/// Minimal dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double max_abs() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

struct EigenDecomposition {
    std::vector<double> values; // ascending
    Matrix vectors;             // column j pairs with values[j]
};

/// Cyclic Jacobi rotations for a symmetric matrix. Sweeps until the
/// off-diagonal Frobenius norm drops below 1e-12 * ||M||_F (at most 100
/// sweeps). Input must be symmetric within 1e-12.
EigenDecomposition eigen_symmetric(const Matrix& m);
std::vector<double> eigenvalues_symmetric(const Matrix& m);

/// Gaussian elimination with partial pivoting. Returns nullopt when a pivot
/// degenerates (matrix singular to working precision).
std::optional<std::vector<double>> solve_linear(Matrix a, std::vector<double> b);

} // namespace kuramoto

#endif
