#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "podles/ncpoly.hpp"

using namespace podles;

namespace {

Params half_one() { return Params(Rational(1, 2), Rational(1)); }
Params half_third() { return Params(Rational(1, 2), Rational(1, 3)); }

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    int n = num(rng);
    if (n == 0)
        n = 1;
    return Rational(n, den(rng));
}

RawSum random_raw(std::mt19937& rng, Basis b) {
    static const Gen su[] = {Gen::A, Gen::B, Gen::C, Gen::D};
    static const Gen po[] = {Gen::Z, Gen::E, Gen::Es};
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<int> sui(0, 3), poi(0, 2);
    RawSum raw;
    const int T = nterms(rng);
    for (int t = 0; t < T; ++t) {
        RawTerm term;
        term.coeff = random_rational(rng);
        const int L = len(rng);
        for (int i = 0; i < L; ++i)
            term.word.push_back(b == Basis::SUQ2 ? su[sui(rng)] : po[poi(rng)]);
        raw.push_back(std::move(term));
    }
    return raw;
}

} // namespace

TEST_CASE("defining relations rewrite to their normal forms") {
    const Params p = half_one(); // q = 1/2, s = 1

    // d a -> 1 + q^{-1} b c
    CHECK(parse_poly(Basis::SUQ2, p, "d*a") == parse_poly(Basis::SUQ2, p, "1 + 2*b*c"));
    // a d -> 1 + q b c
    CHECK(parse_poly(Basis::SUQ2, p, "a*d") == parse_poly(Basis::SUQ2, p, "1 + 1/2*b*c"));
    // b a -> q^{-1} a b
    CHECK(parse_poly(Basis::SUQ2, p, "b*a") == parse_poly(Basis::SUQ2, p, "2*a*b"));
    CHECK(parse_poly(Basis::SUQ2, p, "c*b") == parse_poly(Basis::SUQ2, p, "b*c"));
    CHECK(parse_poly(Basis::SUQ2, p, "d*c") == parse_poly(Basis::SUQ2, p, "2*c*d"));

    // a and d separated by a b/c block still annihilate: a b d = q b + q^2 b^2 c
    CHECK(parse_poly(Basis::SUQ2, p, "a*b*d") ==
          parse_poly(Basis::SUQ2, p, "1/2*b + 1/4*b^2*c"));

    // sphere basis, s = 1: es e = 1 - z^2, e es = 1 - q^{-4} z^2
    CHECK(parse_poly(Basis::PODLES, p, "es*e") == parse_poly(Basis::PODLES, p, "1 - z^2"));
    CHECK(parse_poly(Basis::PODLES, p, "e*es") == parse_poly(Basis::PODLES, p, "1 - 16*z^2"));
    CHECK(parse_poly(Basis::PODLES, p, "z*e") == parse_poly(Basis::PODLES, p, "1/4*e*z"));
    // eta and eta* separated by zeta: e z es = q^{-2} z - q^{-6} z^3
    CHECK(parse_poly(Basis::PODLES, p, "e*z*es") ==
          parse_poly(Basis::PODLES, p, "4*z - 64*z^3"));
}

TEST_CASE("sphere relations at general s") {
    const Params p = half_third(); // q = 1/2, s = 1/3
    // es e = s^2 + (1 - s^2) z - z^2
    CHECK(parse_poly(Basis::PODLES, p, "es*e") ==
          parse_poly(Basis::PODLES, p, "1/9 + 8/9*z - z^2"));
    // e es = s^2 + q^{-2}(1 - s^2) z - q^{-4} z^2
    CHECK(parse_poly(Basis::PODLES, p, "e*es") ==
          parse_poly(Basis::PODLES, p, "1/9 + 32/9*z - 16*z^2"));
}

TEST_CASE("normal-form words never mix the eliminated pairs") {
    const Params p = half_third();
    std::mt19937 rng(7);
    for (int it = 0; it < 50; ++it) {
        for (Basis b : {Basis::SUQ2, Basis::PODLES}) {
            const NcPoly x = nc_normalize(b, p, random_raw(rng, b));
            for (const auto& [w, c] : x.terms()) {
                CHECK(c != 0);
                if (b == Basis::SUQ2)
                    CHECK(w.e[0] * w.e[3] == 0);
                else
                    CHECK(w.e[0] * w.e[2] == 0);
            }
        }
    }
}

TEST_CASE("confluence: every admissible rewrite order gives the same normal form") {
    const Params p = Params(Rational(3, 10), Rational(2));
    std::mt19937 rng(42);
    int done = 0;
    for (int it = 0; it < 60; ++it) {
        for (Basis b : {Basis::SUQ2, Basis::PODLES}) {
            const RawSum raw = random_raw(rng, b);
            const NcPoly ref = nc_normalize(b, p, raw);
            RewriteStrategy strat = [&rng](std::size_t n) {
                return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
            };
            const NcPoly alt = nc_normalize(b, p, raw, strat);
            CHECK(ref == alt);
            ++done;
        }
    }
    CHECK(done >= 100);
}

TEST_CASE("normalization is idempotent on normal forms") {
    const Params p = half_third();
    std::mt19937 rng(3);
    for (int it = 0; it < 20; ++it) {
        for (Basis b : {Basis::SUQ2, Basis::PODLES}) {
            const NcPoly x = nc_normalize(b, p, random_raw(rng, b));
            RawSum again;
            for (const auto& [w, c] : x.terms())
                again.push_back({c, w.letters(b)});
            CHECK(nc_normalize(b, p, again) == x);
        }
    }
}

TEST_CASE("involution: anti-multiplicative and involutive") {
    const Params p = Params(Rational(2, 5), Rational(1, 2));
    std::mt19937 rng(11);
    int done = 0;
    for (int it = 0; it < 55; ++it) {
        for (Basis b : {Basis::SUQ2, Basis::PODLES}) {
            const NcPoly x = nc_normalize(b, p, random_raw(rng, b));
            const NcPoly y = nc_normalize(b, p, random_raw(rng, b));
            CHECK((x * y).star() == y.star() * x.star());
            CHECK(x.star().star() == x);
            ++done;
        }
    }
    CHECK(done >= 100);

    // generator images
    const Params ph = half_one();
    CHECK(parse_poly(Basis::SUQ2, ph, "b").star() == parse_poly(Basis::SUQ2, ph, "-1/2*c"));
    CHECK(parse_poly(Basis::SUQ2, ph, "c").star() == parse_poly(Basis::SUQ2, ph, "-2*b"));
    CHECK(parse_poly(Basis::SUQ2, ph, "a").star() == parse_poly(Basis::SUQ2, ph, "d"));
    // (d a)* = d a since d a = 1 + q^{-1} b c is self-adjoint
    const NcPoly da = parse_poly(Basis::SUQ2, ph, "d*a");
    CHECK(da.star() == da);
}

TEST_CASE("ring axioms: associativity and distributivity") {
    const Params p = Params(Rational(3, 10), Rational(1, 2));
    std::mt19937 rng(23);
    for (int it = 0; it < 25; ++it) {
        for (Basis b : {Basis::SUQ2, Basis::PODLES}) {
            const NcPoly x = nc_normalize(b, p, random_raw(rng, b));
            const NcPoly y = nc_normalize(b, p, random_raw(rng, b));
            const NcPoly z = nc_normalize(b, p, random_raw(rng, b));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
        }
    }
}

TEST_CASE("scalar coefficients stay exact at extreme q powers") {
    // beta^6 against delta^6 style products produce q^{-k} coefficients with
    // large heights; exactness means (q^{-1})^k * q^k == 1 throughout.
    const Params p = Params(Rational(3, 10), Rational(2));
    NcPoly x = parse_poly(Basis::SUQ2, p, "d^6*b^6");
    // d^6 b^6 = q^{-36} b^6 d^6
    NcPoly expect = rat_pow(p.q, -36) * parse_poly(Basis::SUQ2, p, "b^6*d^6");
    CHECK(x == expect);
}

TEST_CASE("operand compatibility is enforced") {
    const Params p1 = half_one();
    const Params p2 = half_third();
    const NcPoly x = parse_poly(Basis::SUQ2, p1, "a");
    const NcPoly y = parse_poly(Basis::SUQ2, p2, "a");
    CHECK_THROWS_AS(x * y, IncompatibleOperandsError);
    CHECK_THROWS_AS((void)(x == y), IncompatibleOperandsError);
    const NcPoly z = parse_poly(Basis::PODLES, p1, "z");
    CHECK_THROWS_AS(x + z, IncompatibleOperandsError);
}

TEST_CASE("malformed input is rejected") {
    const Params p = half_one();
    CHECK_THROWS_AS(parse_poly(Basis::SUQ2, p, "a*x"), MalformedInputError);
    CHECK_THROWS_AS(parse_poly(Basis::SUQ2, p, "z"), MalformedInputError);
    CHECK_THROWS_AS(parse_poly(Basis::PODLES, p, "a"), MalformedInputError);
    CHECK_THROWS_AS(parse_poly(Basis::SUQ2, p, "a + "), MalformedInputError);
    CHECK_THROWS_AS(parse_poly(Basis::SUQ2, p, "1/0"), MalformedInputError);
    CHECK_THROWS_AS(nc_normalize(Basis::SUQ2, p, {{Rational(1), {Gen::Z}}}),
                    MalformedInputError);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(Params(Rational(1, 2), Rational(0)), SZeroParamError);
    CHECK_THROWS_AS(Params(Rational(3, 2), Rational(1)), InvalidParamsError);
    CHECK_THROWS_AS(Params(Rational(1), Rational(1)), InvalidParamsError);
    CHECK_THROWS_AS(Params(Rational(-1, 2), Rational(1)), InvalidParamsError);
    CHECK_THROWS_AS(Params(Rational(1, 2), Rational(-1)), InvalidParamsError);
}

TEST_CASE("rational parsing and decimal conversion") {
    CHECK(parse_rational("3/10") == Rational(3, 10));
    CHECK(parse_rational("-5/7") == Rational(-5, 7));
    CHECK(parse_rational("2") == Rational(2));
    CHECK_THROWS_AS(parse_rational("a/2"), MalformedInputError);
    CHECK_THROWS_AS(parse_rational("1/0"), MalformedInputError);

    bool conv = false;
    CHECK(parse_param_value("0.3", conv) == Rational(3, 10));
    CHECK(conv);
    CHECK(parse_param_value("3/10", conv) == Rational(3, 10));
    CHECK(!conv);
    CHECK(parse_param_value("0.5", conv) == Rational(1, 2));
    // nearest rational with denominator <= 10^6
    CHECK(parse_param_value("0.3333333", conv) == Rational(1, 3));
    CHECK(parse_param_value("0.25", conv) == Rational(1, 4));

    CHECK(format_rational(Rational(3, 10)) == "3/10");
    CHECK(format_rational(Rational(4)) == "4");
    CHECK(format_rational(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("printable form is stable") {
    const Params p = half_one();
    CHECK(parse_poly(Basis::SUQ2, p, "d*a").str() == "(1) + (2)*b*c");
    CHECK(NcPoly::zero(Basis::SUQ2, p).str() == "0");
}
