/* Timing comparison: OpenMP dense kernels vs the serial reference. */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "podles/dense.hpp"

#ifdef PODLES_HAVE_OPENMP
#include <omp.h>
#endif

using podles::dense::Matrix;

namespace {

Matrix random_matrix(long n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix m(n, n);
    for (double& v : m.a)
        v = dist(rng);
    return m;
}

template <typename F>
double time_ms(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_size(long n, std::mt19937_64& rng) {
    Matrix x = random_matrix(n, rng);
    Matrix y = random_matrix(n, rng);

    Matrix prod_par, prod_ref;
    double t_mm_par = time_ms([&] { prod_par = podles::dense::matmul(x, y); });
    double t_mm_ref = time_ms([&] { prod_ref = podles::dense::ref::matmul(x, y); });
    double mm_dev = podles::dense::max_abs(podles::dense::sub(prod_par, prod_ref));

    std::vector<double> sv_par, sv_ref;
    double t_sv_par = time_ms([&] { sv_par = podles::dense::singular_values(x); });
    double t_sv_ref = time_ms([&] { sv_ref = podles::dense::ref::singular_values(x); });
    double sv_dev = 0.0;
    for (size_t i = 0; i < sv_par.size(); ++i)
        sv_dev = std::max(sv_dev, std::abs(sv_par[i] - sv_ref[i]));

    std::printf("n=%-4ld matmul  omp %8.2f ms   serial %8.2f ms   max|diff| %.3e\n",
                n, t_mm_par, t_mm_ref, mm_dev);
    std::printf("n=%-4ld svd     omp %8.2f ms   serial %8.2f ms   max|diff| %.3e\n",
                n, t_sv_par, t_sv_ref, sv_dev);
}

}  // namespace

int main() {
#ifdef PODLES_HAVE_OPENMP
    std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("openmp not available; both columns run serial code\n");
#endif
    std::mt19937_64 rng(20240917);
    for (long n : {64, 128, 256})
        bench_size(n, rng);
    return 0;
}
