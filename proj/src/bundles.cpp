#include "podles/bundles.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "podles/errors.hpp"
#include "podles/suq2.hpp"

namespace podles {

namespace {

PodlesElem func_calc_elem(const ScalarFn& h, const PodlesElem& x) {
    return PodlesElem(ss_func_calc(h, x.minus()), ss_func_calc(h, x.plus()), x.params());
}

/* S^n S*^n, the co-rank-n cutoff projection. */
ShiftSeries cutoff_series(int n) {
    ShiftSeries s = ShiftSeries::shift();
    return s.pow(static_cast<unsigned>(n)) * s.star().pow(static_cast<unsigned>(n));
}

/* The sqrt arguments must be nonnegative on the spectrum before any lazy
 * evaluation runs; mirror the clamp threshold used by sqrt_of. */
void check_sqrt_domain(const ScalarFn& fn, const ShiftSeries& diag_series, const char* what) {
    auto it = diag_series.bands().find(0);
    if (it == diag_series.bands().end())
        return;
    for (long j = 0; j <= 256; ++j) {
        FnSample v = fn.sample(it->second(j));
        if (v.value < -1e-9 * std::max(1.0, v.scale))
            throw DomainError(std::string("f*g sampled negative on the spectrum of ") + what);
    }
}

ResidualCheck residual_check(const std::string& name, double r, double tol) {
    return ResidualCheck{name, r, r <= tol};
}

}  // namespace

BundleProjection build_E(int N, const Params& params) {
    int n = std::abs(N);
    ShiftSeries cut = cutoff_series(n);
    ShiftSeries one = ShiftSeries::identity();
    PodlesElem e = (N >= 0) ? PodlesElem(cut, one, params) : PodlesElem(one, cut, params);
    return BundleProjection{N, 'E', PodlesMat(1, 1, e)};
}

BundleProjection build_G(const Params& params) {
    ShiftSeries corner = ShiftSeries::identity() - cutoff_series(1);
    PodlesElem g(ShiftSeries::zero(), corner, params);
    return BundleProjection{0, 'G', PodlesMat(1, 1, g)};
}

FgFunctions build_fg(int n, const Params& params) {
    if (n < 0)
        throw InvalidParamsError("weight level must be nonnegative");
    double q = params.qd(), s = params.sd();
    double lo = -s * s * q * q, hi = q * q;
    std::vector<std::pair<double, double>> ff, gg, both;
    for (int k = 0; k < n; ++k) {
        double q2k = std::pow(q, 2 * k);
        ff.emplace_back(1.0, -q2k);
        gg.emplace_back(s * s, q2k);
        both.emplace_back(1.0, -q2k);
        both.emplace_back(s * s, q2k);
    }
    FgFunctions w{ScalarFn::affine_product(ff, lo, hi), ScalarFn::affine_product(gg, lo, hi),
                  ScalarFn::affine_product(both, lo, hi), ScalarFn()};
    w.sum = w.f + w.g;
    return w;
}

BundleProjection build_Q(int N, const Params& params) {
    if (N == 0) {
        PodlesMat m(2, 2, PodlesElem::zero_elem(params));
        m.at(0, 0) = PodlesElem::scalar_elem(1.0, params);
        return BundleProjection{0, 'Q', m};
    }
    int n = std::abs(N);
    FgFunctions w = build_fg(n, params);
    Generators gen = make_generators(params);
    double qm2n = std::pow(params.qd(), -2.0 * n);
    PodlesElem zsc = qm2n * gen.zeta;

    check_sqrt_domain(w.fg, gen.zeta.minus(), "zeta (minus leg)");
    check_sqrt_domain(w.fg, gen.zeta.plus(), "zeta (plus leg)");
    check_sqrt_domain(w.fg, zsc.minus(), "the rescaled zeta (minus leg)");
    check_sqrt_domain(w.fg, zsc.plus(), "the rescaled zeta (plus leg)");

    ScalarFn h_f = quotient(w.f, w.sum);
    ScalarFn h_g = quotient(w.g, w.sum);
    ScalarFn h_off = quotient(sqrt_of(w.fg), w.sum);

    PodlesElem Sn = gen.frakS.pow(static_cast<unsigned>(n));
    PodlesElem Ssn = Sn.star();

    PodlesMat m(2, 2, PodlesElem::zero_elem(params));
    if (N > 0) {
        m.at(0, 0) = func_calc_elem(h_g, zsc);
        m.at(0, 1) = func_calc_elem(h_off, zsc) * Sn;
        m.at(1, 0) = func_calc_elem(h_off, gen.zeta) * Ssn;
        m.at(1, 1) = func_calc_elem(h_f, gen.zeta);
    } else {
        m.at(0, 0) = func_calc_elem(h_f, zsc);
        m.at(0, 1) = -1.0 * (func_calc_elem(h_off, zsc) * Sn);
        m.at(1, 0) = -1.0 * (func_calc_elem(h_off, gen.zeta) * Ssn);
        m.at(1, 1) = func_calc_elem(h_g, gen.zeta);
    }
    return BundleProjection{N, 'Q', m};
}

PodlesMat build_Y(int N, const Params& params) {
    if (N == 0)
        throw InvalidParamsError("the isometry column is defined for N != 0");
    int n = std::abs(N);
    FgFunctions w = build_fg(n, params);
    Generators gen = make_generators(params);
    double qm2n = std::pow(params.qd(), -2.0 * n);
    PodlesElem zsc = qm2n * gen.zeta;

    check_sqrt_domain(w.f, zsc.minus(), "the rescaled zeta (minus leg)");
    check_sqrt_domain(w.f, zsc.plus(), "the rescaled zeta (plus leg)");
    check_sqrt_domain(w.g, zsc.minus(), "the rescaled zeta (minus leg)");
    check_sqrt_domain(w.g, zsc.plus(), "the rescaled zeta (plus leg)");

    ScalarFn root_sum = sqrt_of(w.sum);
    ScalarFn yf = quotient(sqrt_of(w.f), root_sum);
    ScalarFn yg = quotient(sqrt_of(w.g), root_sum);
    PodlesElem Sn = gen.frakS.pow(static_cast<unsigned>(n));

    PodlesMat y(1, 2, PodlesElem::zero_elem(params));
    if (N > 0) {
        y.at(0, 0) = func_calc_elem(yg, zsc);
        y.at(0, 1) = func_calc_elem(yf, zsc) * Sn;
    } else {
        y.at(0, 0) = func_calc_elem(yf, zsc);
        y.at(0, 1) = -1.0 * (func_calc_elem(yg, zsc) * Sn);
    }
    return y;
}

BundleProjection build_P1_matrix(int sign, const Params& params) {
    if (sign != 1 && sign != -1)
        throw InvalidParamsError("sign must be +1 or -1");
    NcMat sym = build_p1_symbolic(sign, params);
    PodlesMat m(2, 2, PodlesElem::zero_elem(params));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            m.at(static_cast<long>(i), static_cast<long>(j)) = evaluate_poly(sym.at(i, j));
    return BundleProjection{sign, 'P', m};
}

BundleReport verify_bundle_identities(int N, const Params& params) {
    const double tol = 1e-10;
    const long M = 256;
    BundleReport rep;
    rep.N = N;
    rep.q = params.q;
    rep.s = params.s;

    BundleProjection E = build_E(N, params);
    rep.checks.push_back(
        residual_check("E_idempotent", mat_residual(E.mat * E.mat, E.mat, M), tol));
    rep.checks.push_back(
        residual_check("E_self_adjoint", mat_residual(E.mat.star_transpose(), E.mat, M), tol));

    BundleProjection Q = build_Q(N, params);
    rep.checks.push_back(
        residual_check("Q_idempotent", mat_residual(Q.mat * Q.mat, Q.mat, M), tol));
    rep.checks.push_back(
        residual_check("Q_self_adjoint", mat_residual(Q.mat.star_transpose(), Q.mat, M), tol));

    {
        std::complex<double> tr =
            Q.mat.at(0, 0).symbol().coeff(0) + Q.mat.at(1, 1).symbol().coeff(0);
        rep.checks.push_back(residual_check("Q_symbol_trace", std::abs(tr - 1.0), 1e-12));
    }

    if (N != 0) {
        BundleProjection Qneg = build_Q(-N, params);
        rep.checks.push_back(residual_check(
            "Q_complement",
            mat_residual(Q.mat + Qneg.mat, PodlesMat::identity(2, params), M), 1e-12));

        int n = std::abs(N);
        FgFunctions w = build_fg(n, params);
        ScalarFn h_f = quotient(w.f, w.sum);
        ScalarFn h_g = quotient(w.g, w.sum);
        Generators gen = make_generators(params);
        double qm2n = std::pow(params.qd(), -2.0 * n);
        PodlesElem zsc = qm2n * gen.zeta;
        ShiftSeries cutc = ShiftSeries::identity() - cutoff_series(n);

        double rg = std::max(
            max_pointwise_diff(ss_func_calc(h_g, zsc.minus()) * cutc, ShiftSeries::zero(), M),
            max_pointwise_diff(ss_func_calc(h_g, zsc.plus()) * cutc, cutc, M));
        rep.checks.push_back(residual_check("corner_eq_g", rg, tol));

        double rf = std::max(
            max_pointwise_diff(ss_func_calc(h_f, zsc.minus()) * cutc, cutc, M),
            max_pointwise_diff(ss_func_calc(h_f, zsc.plus()) * cutc, ShiftSeries::zero(), M));
        rep.checks.push_back(residual_check("corner_eq_f", rf, tol));

        PodlesMat Y = build_Y(N, params);
        rep.checks.push_back(residual_check(
            "Y_star_Y_is_Q", mat_residual(Y.star_transpose() * Y, Q.mat, M), tol));
        rep.checks.push_back(residual_check(
            "Y_Y_star_is_E", mat_residual(Y * Y.star_transpose(), E.mat, M), tol));
    }

    if (std::abs(N) == 1) {
        BundleProjection P = build_P1_matrix(N, params);
        rep.checks.push_back(
            residual_check("P1_idempotent", mat_residual(P.mat * P.mat, P.mat, M), tol));
        rep.checks.push_back(residual_check(
            "P1_self_adjoint", mat_residual(P.mat.star_transpose(), P.mat, M), tol));
        std::complex<double> tr =
            P.mat.at(0, 0).symbol().coeff(0) + P.mat.at(1, 1).symbol().coeff(0);
        rep.checks.push_back(residual_check("P1_symbol_trace", std::abs(tr - 1.0), 1e-12));
    }

    return rep;
}

}  // namespace podles
