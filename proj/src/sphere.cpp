#include "podles/sphere.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "podles/errors.hpp"

namespace podles {

namespace {

void check_same_params(const Params& a, const Params& b) {
    if (a.q != b.q || a.s != b.s)
        throw IncompatibleOperandsError("sphere elements with different (q, s)");
}

/* Spectrum hull of zeta: [-s^2 q^2, q^2]; certificates live on it. */
std::pair<double, double> spec_interval(const Params& p) {
    double q2 = p.qd() * p.qd();
    double s2 = p.sd() * p.sd();
    return {-s2 * q2, q2};
}

ScalarFn one_minus_t(const Params& p) {
    auto [lo, hi] = spec_interval(p);
    return ScalarFn::affine_product({{1.0, -1.0}}, lo, hi);
}

ScalarFn s2_plus_t(const Params& p) {
    auto [lo, hi] = spec_interval(p);
    return ScalarFn::affine_product({{p.sd() * p.sd(), 1.0}}, lo, hi);
}

ResidualCheck residual_check(std::string name, double residual, double tol) {
    return ResidualCheck{std::move(name), residual, residual <= tol};
}

}  // namespace

PodlesElem::PodlesElem(ShiftSeries m, ShiftSeries p, const Params& par, double tol)
    : minus_(std::move(m)), plus_(std::move(p)), params_(par) {
    double mismatch = max_abs_diff(symbol_of(minus_), symbol_of(plus_));
    if (!(mismatch <= tol))
        throw NotMemberError("boundary symbols differ by " + std::to_string(mismatch));
}

PodlesElem PodlesElem::zero_elem(const Params& par) {
    return PodlesElem(ShiftSeries::zero(), ShiftSeries::zero(), par);
}

PodlesElem PodlesElem::scalar_elem(double c, const Params& par) {
    return PodlesElem(ShiftSeries::constant(c), ShiftSeries::constant(c), par);
}

PodlesElem PodlesElem::operator+(const PodlesElem& o) const {
    check_same_params(params_, o.params_);
    return PodlesElem(minus_ + o.minus_, plus_ + o.plus_, params_);
}

PodlesElem PodlesElem::operator-(const PodlesElem& o) const {
    check_same_params(params_, o.params_);
    return PodlesElem(minus_ - o.minus_, plus_ - o.plus_, params_);
}

PodlesElem PodlesElem::operator*(const PodlesElem& o) const {
    check_same_params(params_, o.params_);
    return PodlesElem(minus_ * o.minus_, plus_ * o.plus_, params_);
}

PodlesElem PodlesElem::star() const {
    return PodlesElem(minus_.star(), plus_.star(), params_);
}

PodlesElem PodlesElem::pow(unsigned k) const {
    PodlesElem r = scalar_elem(1.0, params_);
    for (unsigned i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

PodlesElem operator*(double c, const PodlesElem& x) {
    return PodlesElem(c * x.minus_, c * x.plus_, x.params_);
}

double elem_residual(const PodlesElem& x, const PodlesElem& y, long M) {
    return std::max(max_pointwise_diff(x.minus(), y.minus(), M),
                    max_pointwise_diff(x.plus(), y.plus(), M));
}

Generators make_generators(const Params& params) {
    double q2 = params.qd() * params.qd();
    double s = params.sd();
    double s2 = s * s;

    DiagFn zm;
    zm.eval = [s2, q2](long n) { return -s2 * std::pow(q2, static_cast<double>(n + 1)); };
    zm.limit = 0.0;
    zm.tail = Tail{s2 * q2, q2};

    DiagFn zp;
    zp.eval = [q2](long n) { return std::pow(q2, static_cast<double>(n + 1)); };
    zp.limit = 0.0;
    zp.tail = Tail{q2, q2};

    DiagFn em;
    em.eval = [s, s2, q2](long n) {
        double v = std::pow(q2, static_cast<double>(n + 1));
        return s * std::sqrt((1.0 + s2 * v) * (1.0 - v));
    };
    em.limit = s;
    em.tail = Tail{s * (1.0 + 2.0 * s2) * q2, q2};

    DiagFn ep;
    ep.eval = [s2, q2](long n) {
        double v = std::pow(q2, static_cast<double>(n + 1));
        return std::sqrt((1.0 - v) * (s2 + v));
    };
    ep.limit = s;
    ep.tail = Tail{(2.0 + s2) * q2 / s, q2};

    PodlesElem zeta(ShiftSeries::diagonal(zm), ShiftSeries::diagonal(zp), params);
    PodlesElem eta(ShiftSeries::band(1, em), ShiftSeries::band(1, ep), params);
    PodlesElem frakS(ShiftSeries::shift(), ShiftSeries::shift(), params);
    return Generators{std::move(zeta), std::move(eta), std::move(frakS)};
}

PodlesElem evaluate_poly(const NcPoly& p) {
    if (p.basis() != Basis::PODLES)
        throw IncompatibleOperandsError("operator evaluation needs the sphere basis");
    const Params& params = p.params();
    Generators g = make_generators(params);
    PodlesElem etastar = g.eta.star();
    PodlesElem acc = PodlesElem::zero_elem(params);
    for (const auto& [w, c] : p.terms()) {
        PodlesElem term = PodlesElem::scalar_elem(static_cast<double>(c), params);
        if (w.e[0] > 0)
            term = term * g.eta.pow(w.e[0]);
        if (w.e[1] > 0)
            term = term * g.zeta.pow(w.e[1]);
        if (w.e[2] > 0)
            term = term * etastar.pow(w.e[2]);
        acc = acc + term;
    }
    return acc;
}

PodlesElem func_calc_zeta(const ScalarFn& f, const Params& params) {
    Generators g = make_generators(params);
    return PodlesElem(ss_func_calc(f, g.zeta.minus()), ss_func_calc(f, g.zeta.plus()),
                      params);
}

DiscReport verify_generator_relations(const Params& params) {
    constexpr long M = 256;
    constexpr double tol = 1e-10;
    double q2 = params.qd() * params.qd();
    double s2 = params.sd() * params.sd();
    auto [lo, hi] = spec_interval(params);

    Generators g = make_generators(params);
    const PodlesElem& zeta = g.zeta;
    const PodlesElem& eta = g.eta;
    PodlesElem etastar = eta.star();
    PodlesElem one = PodlesElem::scalar_elem(1.0, params);

    DiscReport rep;
    rep.q = params.q;
    rep.s = params.s;

    rep.checks.push_back(residual_check(
        "rel_exchange", elem_residual(zeta * eta, q2 * (eta * zeta), M), tol));

    PodlesElem rhs1 = (one - (1.0 / q2) * zeta) * (s2 * one + (1.0 / q2) * zeta);
    rep.checks.push_back(
        residual_check("rel_eta_etastar", elem_residual(eta * etastar, rhs1, M), tol));

    PodlesElem rhs2 = (one - zeta) * (s2 * one + zeta);
    rep.checks.push_back(
        residual_check("rel_etastar_eta", elem_residual(etastar * eta, rhs2, M), tol));

    ScalarFn weight = sqrt_of(one_minus_t(params) * s2_plus_t(params));
    PodlesElem polar = g.frakS * func_calc_zeta(weight, params);
    rep.checks.push_back(residual_check("polar_decomposition",
                                        elem_residual(eta, polar, M), tol));

    rep.checks.push_back(residual_check(
        "shift_commutation",
        elem_residual(g.frakS * zeta, (1.0 / q2) * (zeta * g.frakS), M), tol));

    /* eta^n = sqrt(f_n g_n)(q^{-2n} zeta) frakS^n, checked at n = 3. */
    {
        const int n = 3;
        double qm2n = std::pow(params.qd(), -2.0 * n);
        std::vector<std::pair<double, double>> factors;
        for (int k = 0; k < n; ++k) {
            double qk = std::pow(q2, k);
            factors.push_back({1.0, -qk});
            factors.push_back({s2, qk});
        }
        ScalarFn fg = ScalarFn::affine_product(factors, lo, hi);
        PodlesElem zsc = qm2n * zeta;
        PodlesElem rhs =
            PodlesElem(ss_func_calc(sqrt_of(fg), zsc.minus()),
                       ss_func_calc(sqrt_of(fg), zsc.plus()), params) *
            g.frakS.pow(n);
        rep.checks.push_back(
            residual_check("eta_power", elem_residual(eta.pow(n), rhs, M), tol));
    }

    return rep;
}

DiscReport quantum_disc_check(const Params& params) {
    constexpr long M = 256;
    constexpr double tol = 1e-12;
    double q = params.qd();
    double q2 = q * q;
    double s = params.sd();
    double s2 = s * s;

    Generators g = make_generators(params);
    ScalarFn one = ScalarFn::constant(1.0);
    ScalarFn inv_sqrt_minus = quotient(one, sqrt_of(one_minus_t(params)));
    ScalarFn inv_sqrt_plus = quotient(one, sqrt_of(s2_plus_t(params)));

    ShiftSeries z_minus =
        (1.0 / s) * (g.eta.minus() * ss_func_calc(inv_sqrt_minus, g.zeta.minus()));
    ShiftSeries z_plus = g.eta.plus() * ss_func_calc(inv_sqrt_plus, g.zeta.plus());

    DiscReport rep;
    rep.q = params.q;
    rep.s = params.s;

    ShiftSeries disc_rhs = ShiftSeries::constant(1.0 - q2);
    auto disc_residual = [&](const ShiftSeries& z) {
        ShiftSeries lhs = z.star() * z - q2 * (z * z.star());
        return max_pointwise_diff(lhs, disc_rhs, M);
    };
    rep.checks.push_back(residual_check("disc_rel_minus", disc_residual(z_minus), tol));
    rep.checks.push_back(residual_check("disc_rel_plus", disc_residual(z_plus), tol));

    double inv = 1.0 / (1.0 / q2 - 1.0);
    ShiftSeries rec_minus =
        (inv * s2) * (z_minus * z_minus.star() - z_minus.star() * z_minus);
    /* note the commutator order: z z* - z* z is negative on the plus leg,
     * so recovering the positive zeta spectrum needs z* z - z z* */
    ShiftSeries rec_plus = inv * (z_plus.star() * z_plus - z_plus * z_plus.star());
    rep.checks.push_back(residual_check(
        "recover_zeta_minus", max_pointwise_diff(rec_minus, g.zeta.minus(), M), tol));
    rep.checks.push_back(residual_check(
        "recover_zeta_plus", max_pointwise_diff(rec_plus, g.zeta.plus(), M), tol));

    LaurentSymbol u = LaurentSymbol::unit(1);
    rep.checks.push_back(residual_check(
        "symbol_z_minus", max_abs_diff(symbol_of(z_minus), u), tol));
    rep.checks.push_back(residual_check(
        "symbol_z_plus", max_abs_diff(symbol_of(z_plus), u), tol));

    return rep;
}

PsiResult fibre_check_and_psi(const ShiftSeries& a0, const ShiftSeries& a1, long N,
                              const Params& params) {
    PsiResult res;
    double mismatch = max_abs_diff(symbol_of(a0), symbol_of(a1).shifted(N));
    res.member = mismatch <= 1e-12;
    if (!res.member)
        return res;
    unsigned n = static_cast<unsigned>(N >= 0 ? N : -N);
    ShiftSeries S = ShiftSeries::shift();
    ShiftSeries cutoff = S.pow(n) * S.star().pow(n);
    if (N >= 0)
        res.image = PodlesElem(a0 * S.star().pow(n) * cutoff, a1, params);
    else
        res.image = PodlesElem(a0, a1 * S.star().pow(n) * cutoff, params);
    return res;
}

PodlesElem psi_map(const ShiftSeries& a0, const ShiftSeries& a1, long N,
                   const Params& params) {
    PsiResult r = fibre_check_and_psi(a0, a1, N, params);
    if (!r.member)
        throw NotMemberError("pair fails the winding-" + std::to_string(N) +
                             " symbol condition");
    return *r.image;
}

PodlesMat::PodlesMat(long rows, long cols, const PodlesElem& fill)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows * cols), fill) {}

PodlesMat PodlesMat::identity(long n, const Params& params) {
    PodlesMat m(n, n, PodlesElem::zero_elem(params));
    for (long i = 0; i < n; ++i)
        m.at(i, i) = PodlesElem::scalar_elem(1.0, params);
    return m;
}

PodlesMat PodlesMat::operator+(const PodlesMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw IncompatibleOperandsError("matrix shape mismatch");
    PodlesMat r = *this;
    for (size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

PodlesMat PodlesMat::operator-(const PodlesMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw IncompatibleOperandsError("matrix shape mismatch");
    PodlesMat r = *this;
    for (size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

PodlesMat PodlesMat::operator*(const PodlesMat& o) const {
    if (cols_ != o.rows_)
        throw IncompatibleOperandsError("matrix shape mismatch");
    const Params& params = entries_.empty() ? o.entries_[0].params() : entries_[0].params();
    PodlesMat r(rows_, o.cols_, PodlesElem::zero_elem(params));
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < o.cols_; ++j) {
            PodlesElem acc = PodlesElem::zero_elem(params);
            for (long k = 0; k < cols_; ++k)
                acc = acc + at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

PodlesMat PodlesMat::star_transpose() const {
    PodlesMat r(cols_, rows_, entries_[0]);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j).star();
    return r;
}

PodlesMat operator*(double c, const PodlesMat& x) {
    PodlesMat r = x;
    for (long i = 0; i < x.rows(); ++i)
        for (long j = 0; j < x.cols(); ++j)
            r.at(i, j) = c * x.at(i, j);
    return r;
}

double mat_residual(const PodlesMat& x, const PodlesMat& y, long M) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw IncompatibleOperandsError("matrix shape mismatch");
    double m = 0.0;
    for (long i = 0; i < x.rows(); ++i)
        for (long j = 0; j < x.cols(); ++j)
            m = std::max(m, elem_residual(x.at(i, j), y.at(i, j), M));
    return m;
}

}  // namespace podles
