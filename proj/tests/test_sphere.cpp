#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "podles/errors.hpp"
#include "podles/ncpoly.hpp"
#include "podles/sphere.hpp"

using namespace podles;

namespace {

Params half_one() { return Params(Rational(1, 2), Rational(1)); }

const std::vector<Params>& grid() {
    static std::vector<Params> g{Params(Rational(1, 2), Rational(1)),
                                 Params(Rational(3, 10), Rational(1, 2)),
                                 Params(Rational(4, 5), Rational(2))};
    return g;
}

}  // namespace

TEST_CASE("generator diagonals and symbols") {
    Params par = half_one();
    double q = par.qd(), s = par.sd();
    Generators g = make_generators(par);

    SUBCASE("zeta eigenvalues on both legs") {
        for (long n = 0; n <= 8; ++n) {
            CHECK(g.zeta.plus().entry(n, n) ==
                  doctest::Approx(std::pow(q, 2.0 * (n + 1))).epsilon(1e-15));
            CHECK(g.zeta.minus().entry(n, n) ==
                  doctest::Approx(-s * s * std::pow(q, 2.0 * (n + 1))).epsilon(1e-15));
        }
        std::vector<double> w = g.zeta.plus().apply({1.0});
        REQUIRE(w.size() == 1);
        CHECK(w[0] == doctest::Approx(q * q).epsilon(1e-15));
    }

    SUBCASE("eta matrix elements on both legs") {
        for (long n = 0; n <= 8; ++n) {
            double vp = std::pow(q, 2.0 * (n + 1));
            double vm = -s * s * vp;
            CHECK(g.eta.plus().entry(n + 1, n) ==
                  doctest::Approx(std::sqrt((1.0 - vp) * (s * s + vp))).epsilon(1e-14));
            CHECK(g.eta.minus().entry(n + 1, n) ==
                  doctest::Approx(std::sqrt((1.0 - vm) * (s * s + vm))).epsilon(1e-14));
        }
    }

    SUBCASE("boundary symbols") {
        for (const Params& par2 : grid()) {
            Generators g2 = make_generators(par2);
            CHECK(max_abs_diff(g2.zeta.symbol(), LaurentSymbol()) == 0.0);
            CHECK(max_abs_diff(g2.eta.symbol(), LaurentSymbol::unit(1, par2.sd())) < 1e-15);
            CHECK(max_abs_diff(symbol_of(g2.eta.minus()), LaurentSymbol::unit(1, par2.sd())) <
                  1e-15);
            CHECK(max_abs_diff(g2.frakS.symbol(), LaurentSymbol::unit(1)) == 0.0);
        }
    }

    SUBCASE("tail certificates are valid on sampled depths") {
        for (const ShiftSeries* leg : {&g.zeta.minus(), &g.zeta.plus(), &g.eta.minus(),
                                       &g.eta.plus()}) {
            for (const auto& [k, d] : leg->bands()) {
                REQUIRE(d.limit.has_value());
                REQUIRE(d.tail.has_value());
                for (long n = 0; n <= 128; n += 5)
                    CHECK(std::abs(d(n) - *d.limit) <=
                          d.tail->C * std::pow(d.tail->r, static_cast<double>(n)) + 1e-15);
            }
        }
    }
}

TEST_CASE("defining relations and disc generators hold on the grid") {
    for (const Params& par : grid()) {
        DiscReport r1 = verify_generator_relations(par);
        for (const auto& c : r1.checks) {
            INFO(c.name << " residual " << c.residual);
            CHECK(c.pass);
        }
        DiscReport r2 = quantum_disc_check(par);
        for (const auto& c : r2.checks) {
            INFO(c.name << " residual " << c.residual);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("eta star eta equals the spectral polynomial") {
    Params par = half_one();
    double s = par.sd();
    Generators g = make_generators(par);
    PodlesElem one = PodlesElem::scalar_elem(1.0, par);
    PodlesElem rhs = (one - g.zeta) * (s * s * one + g.zeta);
    CHECK(elem_residual(g.eta.star() * g.eta, rhs, 256) < 1e-12);
}

TEST_CASE("polynomial evaluation is a homomorphism") {
    Params par = half_one();
    auto rng = std::mt19937(5);
    std::uniform_int_distribution<int> coin(0, 2), coeff(-3, 3);

    auto random_poly = [&]() {
        NcPoly p = NcPoly::zero(Basis::PODLES, par);
        for (int t = 0; t < 3; ++t) {
            NcPoly mono = NcPoly::scalar(Basis::PODLES, par, Rational(coeff(rng)));
            for (int k = 0; k < 2; ++k) {
                int w = coin(rng);
                if (w == 0)
                    mono = mono * NcPoly::generator(Basis::PODLES, par, Gen::E);
                else if (w == 1)
                    mono = mono * NcPoly::generator(Basis::PODLES, par, Gen::Z);
                else
                    mono = mono * NcPoly::generator(Basis::PODLES, par, Gen::Es);
            }
            p += mono;
        }
        return p;
    };

    for (int trial = 0; trial < 25; ++trial) {
        NcPoly p1 = random_poly(), p2 = random_poly();
        PodlesElem lhs = evaluate_poly(p1 * p2);
        PodlesElem rhs = evaluate_poly(p1) * evaluate_poly(p2);
        CHECK(elem_residual(lhs, rhs, 64) < 1e-9);
        CHECK(elem_residual(evaluate_poly(p1.star()), evaluate_poly(p1).star(), 64) < 1e-9);
    }

    SUBCASE("eta-star-eta as a polynomial") {
        NcPoly e = NcPoly::generator(Basis::PODLES, par, Gen::E);
        NcPoly z = NcPoly::generator(Basis::PODLES, par, Gen::Z);
        NcPoly one = NcPoly::scalar(Basis::PODLES, par, Rational(1));
        NcPoly rhs = (one - z) * (NcPoly::scalar(Basis::PODLES, par, par.s * par.s) + z);
        CHECK(elem_residual(evaluate_poly(e.star() * e), evaluate_poly(rhs), 128) < 1e-12);
    }
}

TEST_CASE("representation separates small polynomials") {
    Params par = half_one();
    NcPoly e = NcPoly::generator(Basis::PODLES, par, Gen::E);
    NcPoly z = NcPoly::generator(Basis::PODLES, par, Gen::Z);
    for (const NcPoly* p : {&e, &z}) {
        PodlesElem x = evaluate_poly(*p);
        double sz = std::max(truncate_and_norm(x.minus(), 32).second,
                             truncate_and_norm(x.plus(), 32).second);
        CHECK(sz > 1e-6);
    }
}

TEST_CASE("products of generators stay inside the fibre product") {
    Params par = Params(Rational(3, 10), Rational(1, 2));
    Generators g = make_generators(par);
    auto rng = std::mt19937(17);
    std::uniform_int_distribution<int> pick(0, 4), len(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        PodlesElem x = PodlesElem::scalar_elem(1.0, par);
        int L = len(rng);
        for (int k = 0; k < L; ++k) {
            switch (pick(rng)) {
            case 0: x = x * g.zeta; break;
            case 1: x = x * g.eta; break;
            case 2: x = x * g.eta.star(); break;
            case 3: x = x * g.frakS; break;
            default: x = x * g.frakS.star(); break;
            }
        }
        PsiResult m = fibre_check_and_psi(x.minus(), x.plus(), 0, par);
        CHECK(m.member);
    }
}

TEST_CASE("twisted membership and the trivialization map") {
    Params par = half_one();
    ShiftSeries S = ShiftSeries::shift();
    ShiftSeries one = ShiftSeries::identity();

    SUBCASE("(S, 1) lies in the winding-one module") {
        PsiResult r = fibre_check_and_psi(S, one, 1, par);
        REQUIRE(r.member);
        REQUIRE(r.image.has_value());
        /* Psi_1 (S, 1) = (S S*, 1), the winding-one projection pair */
        CHECK(max_pointwise_diff(r.image->minus(), S * S.star(), 64) == 0.0);
        CHECK(max_pointwise_diff(r.image->plus(), one, 64) == 0.0);
    }

    SUBCASE("(1, 1) lies in the plain algebra") {
        PsiResult r = fibre_check_and_psi(one, one, 0, par);
        REQUIRE(r.member);
        CHECK(max_pointwise_diff(r.image->minus(), one, 16) == 0.0);
    }

    SUBCASE("negative winding mirrors the map") {
        PsiResult r = fibre_check_and_psi(one, S, -1, par);
        REQUIRE(r.member);
        CHECK(max_pointwise_diff(r.image->minus(), one, 64) == 0.0);
        CHECK(max_pointwise_diff(r.image->plus(), S * S.star(), 64) == 0.0);
    }

    SUBCASE("symbol mismatch is rejected") {
        PsiResult r = fibre_check_and_psi(S, one, 0, par);
        CHECK_FALSE(r.member);
        CHECK_FALSE(r.image.has_value());
        CHECK_THROWS_AS(psi_map(S, one, 0, par), NotMemberError);
    }

    SUBCASE("higher winding composes shifts") {
        PsiResult r = fibre_check_and_psi(S.pow(3), S.pow(2), 1, par);
        REQUIRE(r.member);
        /* a_0 S* cutoff = S^3 S* (S S*) = S^2 (S S*) shifted up */
        CHECK(r.image->minus().entry(2, 0) == 0.0);
        CHECK(r.image->minus().entry(3, 1) == 1.0);
        CHECK(r.image->plus().entry(2, 0) == 1.0);
    }
}

TEST_CASE("matrix layer involutions") {
    Params par = half_one();
    Generators g = make_generators(par);
    PodlesMat m(2, 2, PodlesElem::zero_elem(par));
    m.at(0, 0) = g.zeta;
    m.at(0, 1) = g.eta;
    m.at(1, 0) = g.eta.star();
    m.at(1, 1) = PodlesElem::scalar_elem(1.0, par);

    CHECK(mat_residual(m.star_transpose().star_transpose(), m, 64) == 0.0);

    PodlesMat id = PodlesMat::identity(2, par);
    CHECK(mat_residual(m * id, m, 64) == 0.0);
    CHECK(mat_residual(id * m, m, 64) == 0.0);
}
