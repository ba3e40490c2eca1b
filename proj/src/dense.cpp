#include "podles/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "podles/errors.hpp"

namespace podles::dense {

namespace {

constexpr double kOrthTol = 1e-13;
constexpr int kMaxSweeps = 64;

/* Round-robin schedule: each round is a set of disjoint column pairs, so
 * the rotations of one round commute and can run concurrently. */
std::vector<std::vector<std::pair<long, long>>> tournament(long n) {
    long m = (n % 2 == 0) ? n : n + 1;
    std::vector<long> p(m);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<std::pair<long, long>>> rounds;
    for (long r = 0; r + 1 < m; ++r) {
        std::vector<std::pair<long, long>> pairs;
        for (long i = 0; i < m / 2; ++i) {
            long a = p[i], b = p[m - 1 - i];
            if (a < n && b < n)
                pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
        rounds.push_back(std::move(pairs));
        std::rotate(p.begin() + 1, p.end() - 1, p.end());
    }
    return rounds;
}

/* One-sided Jacobi rotation of columns p, q; returns true if it rotated. */
bool rotate_cols(Matrix& x, long p, long q) {
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    for (long i = 0; i < x.rows; ++i) {
        double xp = x.at(i, p), xq = x.at(i, q);
        alpha += xp * xp;
        beta += xq * xq;
        gamma += xp * xq;
    }
    double denom = std::sqrt(alpha) * std::sqrt(beta);
    if (!(denom > 0.0) || std::abs(gamma) <= kOrthTol * denom)
        return false;
    double zeta = (beta - alpha) / (2.0 * gamma);
    double t = ((zeta >= 0.0) ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
    double c = 1.0 / std::sqrt(1.0 + t * t);
    double s = t * c;
    for (long i = 0; i < x.rows; ++i) {
        double xp = x.at(i, p), xq = x.at(i, q);
        x.at(i, p) = c * xp - s * xq;
        x.at(i, q) = s * xp + c * xq;
    }
    return true;
}

std::vector<double> column_norms_sorted(const Matrix& x) {
    std::vector<double> sv(x.cols, 0.0);
    for (long j = 0; j < x.cols; ++j) {
        double acc = 0.0;
        for (long i = 0; i < x.rows; ++i)
            acc += x.at(i, j) * x.at(i, j);
        sv[j] = std::sqrt(acc);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

Matrix tall(Matrix x) {
    if (x.rows < x.cols)
        return transpose(x);
    return x;
}

}  // namespace

Matrix Matrix::identity(long n) {
    Matrix m(n, n);
    for (long i = 0; i < n; ++i)
        m.at(i, i) = 1.0;
    return m;
}

Matrix matmul(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows)
        throw IncompatibleOperandsError("matmul: " + std::to_string(x.cols) + " vs " +
                                        std::to_string(y.rows));
    Matrix z(x.rows, y.cols);
#ifdef PODLES_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long i = 0; i < x.rows; ++i) {
        for (long l = 0; l < x.cols; ++l) {
            double v = x.at(i, l);
            if (v == 0.0)
                continue;
            for (long j = 0; j < y.cols; ++j)
                z.at(i, j) += v * y.at(l, j);
        }
    }
    return z;
}

Matrix transpose(const Matrix& x) {
    Matrix z(x.cols, x.rows);
    for (long i = 0; i < x.rows; ++i)
        for (long j = 0; j < x.cols; ++j)
            z.at(j, i) = x.at(i, j);
    return z;
}

Matrix sub(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw IncompatibleOperandsError("matrix subtraction shape mismatch");
    Matrix z(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i)
        z.a[i] = x.a[i] - y.a[i];
    return z;
}

double max_abs(const Matrix& x) {
    double m = 0.0;
    for (double v : x.a)
        m = std::max(m, std::abs(v));
    return m;
}

double max_abs_corner(const Matrix& x, long rlim, long clim) {
    double m = 0.0;
    for (long i = 0; i < std::min(rlim, x.rows); ++i)
        for (long j = 0; j < std::min(clim, x.cols); ++j)
            m = std::max(m, std::abs(x.at(i, j)));
    return m;
}

std::vector<double> singular_values(Matrix x) {
    x = tall(std::move(x));
    auto rounds = tournament(x.cols);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        long rotations = 0;
        for (const auto& round : rounds) {
            long nr = 0;
#ifdef PODLES_HAVE_OPENMP
#pragma omp parallel for schedule(static) reduction(+ : nr)
#endif
            for (size_t k = 0; k < round.size(); ++k)
                nr += rotate_cols(x, round[k].first, round[k].second) ? 1 : 0;
            rotations += nr;
        }
        if (rotations == 0)
            return column_norms_sorted(x);
    }
    throw ConvergenceError("singular value iteration did not settle");
}

double norm2_estimate(const Matrix& x) {
    if (x.rows == 0 || x.cols == 0)
        return 0.0;
    return singular_values(x)[0];
}

long rank_with_guard(const std::vector<double>& sv, double thr, double guard) {
    long rank = 0;
    for (double v : sv) {
        if (v > thr / guard && v < thr * guard)
            throw IndeterminateIndexError("singular value " + std::to_string(v) +
                                          " too close to threshold " + std::to_string(thr) +
                                          "; enlarge the truncation");
        if (v >= thr)
            ++rank;
    }
    return rank;
}

namespace ref {

Matrix matmul(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows)
        throw IncompatibleOperandsError("matmul shape mismatch");
    Matrix z(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long l = 0; l < x.cols; ++l) {
            double v = x.at(i, l);
            for (long j = 0; j < y.cols; ++j)
                z.at(i, j) += v * y.at(l, j);
        }
    return z;
}

std::vector<double> singular_values(Matrix x) {
    x = tall(std::move(x));
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        long rotations = 0;
        for (long p = 0; p + 1 < x.cols; ++p)
            for (long q = p + 1; q < x.cols; ++q)
                rotations += rotate_cols(x, p, q) ? 1 : 0;
        if (rotations == 0)
            return column_norms_sorted(x);
    }
    throw ConvergenceError("singular value iteration did not settle");
}

}  // namespace ref

}  // namespace podles::dense
