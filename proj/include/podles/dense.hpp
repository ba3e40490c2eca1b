#pragma once

#include <vector>

namespace podles::dense {

/* Row-major dense real matrix. */
struct Matrix {
    long rows = 0, cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double& at(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
    double at(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(long n);
};

Matrix matmul(const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& x);
Matrix sub(const Matrix& x, const Matrix& y);
double max_abs(const Matrix& x);
/* max |entry| over the leading rlim x clim corner. */
double max_abs_corner(const Matrix& x, long rlim, long clim);

/* Singular values in descending order (one-sided Jacobi). */
std::vector<double> singular_values(Matrix x);
double norm2_estimate(const Matrix& x);

/* Count of singular values >= thr; any value inside (thr/guard, thr*guard)
 * makes the rank ill-determined and raises IndeterminateIndexError. */
long rank_with_guard(const std::vector<double>& sv, double thr, double guard);

/* Serial reference kernels, kept for testing the parallel ones. */
namespace ref {
Matrix matmul(const Matrix& x, const Matrix& y);
std::vector<double> singular_values(Matrix x);
}  // namespace ref

}  // namespace podles::dense
