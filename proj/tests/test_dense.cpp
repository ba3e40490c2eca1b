#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "podles/dense.hpp"
#include "podles/errors.hpp"

using namespace podles;

namespace {

dense::Matrix random_matrix(long r, long c, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    dense::Matrix m(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j)
            m.at(i, j) = u(rng);
    return m;
}

double frobenius_sq(const dense::Matrix& m) {
    double s = 0.0;
    for (double v : m.a)
        s += v * v;
    return s;
}

}  // namespace

TEST_CASE("identity has unit singular values") {
    auto sv = dense::singular_values(dense::Matrix::identity(5));
    REQUIRE(sv.size() == 5);
    for (double v : sv)
        CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("known 2x2 singular values") {
    /* A = [[3,0],[4,5]]: A^T A has eigenvalues 45 and 5. */
    dense::Matrix a(2, 2);
    a.at(0, 0) = 3;
    a.at(1, 0) = 4;
    a.at(1, 1) = 5;
    for (auto* f : {&dense::singular_values, &dense::ref::singular_values}) {
        auto sv = (*f)(a);
        REQUIRE(sv.size() == 2);
        CHECK(std::abs(sv[0] - std::sqrt(45.0)) < 1e-12);
        CHECK(std::abs(sv[1] - std::sqrt(5.0)) < 1e-12);
    }
}

TEST_CASE("zero matrix") {
    dense::Matrix z(7, 4);
    auto sv = dense::singular_values(z);
    REQUIRE(sv.size() == 4);
    for (double v : sv)
        CHECK(v == 0.0);
    CHECK(dense::rank_with_guard(sv, 1e-8, 8.0) == 0);
}

TEST_CASE("parallel kernels agree with the serial reference") {
    std::mt19937 rng(2026);
    for (auto [r, c] : {std::pair<long, long>{16, 16}, {20, 35}, {40, 17}, {64, 64}}) {
        dense::Matrix a = random_matrix(r, c, rng);
        dense::Matrix b = random_matrix(c, r + 3, rng);

        dense::Matrix p1 = dense::matmul(a, b);
        dense::Matrix p2 = dense::ref::matmul(a, b);
        CHECK(dense::max_abs(dense::sub(p1, p2)) < 1e-12);

        auto sv1 = dense::singular_values(a);
        auto sv2 = dense::ref::singular_values(a);
        REQUIRE(sv1.size() == sv2.size());
        double fs = 0.0;
        for (size_t k = 0; k < sv1.size(); ++k) {
            CHECK(std::abs(sv1[k] - sv2[k]) < 1e-10);
            if (k + 1 < sv1.size())
                CHECK(sv1[k] >= sv1[k + 1]);
            fs += sv1[k] * sv1[k];
        }
        CHECK(fs == doctest::Approx(frobenius_sq(a)).epsilon(1e-12));
    }
}

TEST_CASE("singular values are deterministic across repeated runs") {
    std::mt19937 rng(7);
    dense::Matrix a = random_matrix(48, 31, rng);
    auto sv1 = dense::singular_values(a);
    auto sv2 = dense::singular_values(a);
    CHECK(sv1 == sv2);
}

TEST_CASE("norm estimate of a diagonal projection") {
    dense::Matrix p(3, 3);
    p.at(0, 0) = 1;
    p.at(1, 1) = 1;
    CHECK(std::abs(dense::norm2_estimate(p) - 1.0) < 1e-12);
}

TEST_CASE("rank counting with a guard band") {
    std::vector<double> sv{1.0, 0.5, 1e-12};
    CHECK(dense::rank_with_guard(sv, 1e-8, 8.0) == 2);
    std::vector<double> gray{1.0, 5e-8};
    CHECK_THROWS_AS(dense::rank_with_guard(gray, 1e-8, 8.0), IndeterminateIndexError);
}

TEST_CASE("max_abs_corner ignores entries outside the corner") {
    dense::Matrix m(4, 4);
    m.at(3, 3) = 9.0;
    m.at(1, 1) = 2.0;
    CHECK(dense::max_abs_corner(m, 3, 3) == 2.0);
    CHECK(dense::max_abs(m) == 9.0);
}
