#include "podles/suq2.hpp"

#include <cassert>

namespace podles {

NcMat operator*(const NcMat& x, const NcMat& y) {
    if (x.cols_ != y.rows_)
        throw IncompatibleOperandsError("matrix dimension mismatch");
    const NcPoly zero(x.a_.front().basis(), x.a_.front().params());
    NcMat out(x.rows_, y.cols_, zero);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t j = 0; j < y.cols_; ++j) {
            NcPoly acc = zero;
            for (std::size_t k = 0; k < x.cols_; ++k)
                acc += x.at(i, k) * y.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

NcMat operator+(NcMat x, const NcMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw IncompatibleOperandsError("matrix dimension mismatch");
    for (std::size_t k = 0; k < x.a_.size(); ++k)
        x.a_[k] += y.a_[k];
    return x;
}

NcMat operator-(NcMat x, const NcMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw IncompatibleOperandsError("matrix dimension mismatch");
    for (std::size_t k = 0; k < x.a_.size(); ++k)
        x.a_[k] -= y.a_[k];
    return x;
}

NcMat NcMat::star_transpose() const {
    NcMat out(cols_, rows_, a_.front());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j).star();
    return out;
}

bool NcMat::operator==(const NcMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (!(a_[k] == o.a_[k]))
            return false;
    return true;
}

NcPoly podles_embedding_zeta(const Params& ambient, const Rational& t) {
    const Rational q = ambient.q;
    RawSum raw;
    raw.push_back({-t, {Gen::A, Gen::B}});
    raw.push_back({-q * (1 - t * t), {Gen::B, Gen::C}});
    raw.push_back({q * t, {Gen::C, Gen::D}});
    return nc_normalize(Basis::SUQ2, ambient, raw);
}

NcPoly podles_embedding_eta(const Params& ambient, const Rational& t) {
    const Rational qi = Rational(1) / ambient.q;
    RawSum raw;
    raw.push_back({qi * t, {Gen::B, Gen::B}});
    raw.push_back({qi * (1 - t * t), {Gen::B, Gen::D}});
    raw.push_back({-t, {Gen::D, Gen::D}});
    return nc_normalize(Basis::SUQ2, ambient, raw);
}

EmbeddedPair podles_embedding(const Params& p) {
    return {podles_embedding_zeta(p, p.s), podles_embedding_eta(p, p.s)};
}

NcPoly build_weight_vector(long N, WeightKind kind, const Params& p) {
    const Rational q = p.q, s = p.s;
    NcPoly acc = NcPoly::scalar(Basis::SUQ2, p, Rational(1));
    if (N == 0)
        return acc;

    const NcPoly ga = NcPoly::generator(Basis::SUQ2, p, Gen::A);
    const NcPoly gb = NcPoly::generator(Basis::SUQ2, p, Gen::B);
    const NcPoly gc = NcPoly::generator(Basis::SUQ2, p, Gen::C);
    const NcPoly gd = NcPoly::generator(Basis::SUQ2, p, Gen::D);

    const long n = N > 0 ? N : -N;
    if (kind == WeightKind::U) {
        if (N > 0) {
            acc = rat_pow(q, -N) * acc;
            for (long k = 1; k <= n; ++k)
                acc = acc * (gb - rat_pow(q, k) * s * gd);
        } else {
            for (long k = 1; k <= n; ++k)
                acc = acc * (gd + rat_pow(q, -k) * s * gb);
        }
    } else {
        if (N > 0) {
            for (long k = 1; k <= n; ++k)
                acc = acc * (ga - rat_pow(q, k) * s * gc);
        } else {
            acc = rat_pow(-q, n) * acc;
            for (long k = 1; k <= n; ++k)
                acc = acc * (gc + rat_pow(q, -k) * s * ga);
        }
    }
    return acc;
}

namespace {

/* prod_k (c_k + m_k * zeta) over the given factor list. */
NcPoly affine_prod(const NcPoly& zeta, const std::vector<std::pair<Rational, Rational>>& factors) {
    NcPoly acc = NcPoly::scalar(zeta.basis(), zeta.params(), Rational(1));
    for (const auto& [c, m] : factors) {
        NcPoly f = NcPoly::scalar(zeta.basis(), zeta.params(), c);
        f += m * zeta;
        acc = acc * f;
    }
    return acc;
}

} // namespace

IdentityReport verify_weight_identities(int n, const Params& p) {
    IdentityReport rep;
    rep.n = n;
    rep.q = p.q;
    rep.s = p.s;

    const Rational q = p.q, s = p.s, s2 = s * s;
    const Rational sp = rat_pow(q, n) * s;  // embedded parameter q^n s
    const Rational sm = rat_pow(q, -n) * s; // embedded parameter q^{-n} s

    const NcPoly zeta_s = podles_embedding_zeta(p, s);
    const NcPoly eta_s = podles_embedding_eta(p, s);
    const NcPoly zeta_p = podles_embedding_zeta(p, sp);
    const NcPoly zeta_m = podles_embedding_zeta(p, sm);

    const NcPoly u_p = build_weight_vector(n, WeightKind::U, p);
    const NcPoly w_p = build_weight_vector(n, WeightKind::W, p);
    const NcPoly u_m = build_weight_vector(-n, WeightKind::U, p);
    const NcPoly w_m = build_weight_vector(-n, WeightKind::W, p);

    auto push = [&rep](const char* name, bool pass) { rep.identities.push_back({name, pass}); };

    // exchange with the embedded zeta copies
    push("u_zeta_pos", u_p * zeta_p == zeta_s * u_p);
    push("w_zeta_pos", w_p * zeta_p == rat_pow(q, 2 * n) * (zeta_s * w_p));
    push("u_zeta_neg", u_m * zeta_m == rat_pow(q, -2 * n) * (zeta_s * u_m));
    push("w_zeta_neg", w_m * zeta_m == zeta_s * w_m);

    // factorizations of u u* and w w* through the zeta copy at s
    std::vector<std::pair<Rational, Rational>> f;
    for (int k = 1; k <= n; ++k)
        f.push_back({rat_pow(q, 2 * k) * s2, Rational(1)});
    push("uu_star_pos", u_p * u_p.star() == rat_pow(q, -2 * n) * affine_prod(zeta_s, f));

    f.clear();
    for (int k = 0; k < n; ++k)
        f.push_back({Rational(1), -rat_pow(q, 2 * k)});
    push("ww_star_pos", w_p * w_p.star() == affine_prod(zeta_s, f));

    f.clear();
    for (int k = 1; k <= n; ++k)
        f.push_back({Rational(1), -rat_pow(q, -2 * k)});
    push("uu_star_neg", u_m * u_m.star() == affine_prod(zeta_s, f));

    f.clear();
    for (int k = 0; k < n; ++k)
        f.push_back({rat_pow(q, -2 * k) * s2, Rational(1)});
    push("ww_star_neg", w_m * w_m.star() == affine_prod(zeta_s, f));

    // u w* gives eta powers; the q exponent n(n-1)/2 is an integer for all n
    assert((static_cast<long>(n) * (n - 1)) % 2 == 0);
    const long half = static_cast<long>(n) * (n - 1) / 2;
    push("uw_star_pos", u_p * w_p.star() == rat_pow(q, half) * eta_s.pow(static_cast<unsigned>(n)));
    push("uw_star_neg", u_m * w_m.star() == rat_pow(q, -half) * eta_s.pow(static_cast<unsigned>(n)));

    // factorizations of u* u and w* w through the embedded zeta copies
    f.clear();
    for (int k = 1; k <= n; ++k)
        f.push_back({rat_pow(q, 2 * k) * s2, Rational(1)});
    push("star_uu_pos", u_p.star() * u_p == rat_pow(q, -2 * n) * affine_prod(zeta_p, f));

    f.clear();
    for (int k = 1; k <= n; ++k)
        f.push_back({Rational(1), -rat_pow(q, -2 * k)});
    push("star_ww_pos", w_p.star() * w_p == affine_prod(zeta_p, f));

    f.clear();
    for (int k = 0; k < n; ++k)
        f.push_back({Rational(1), -rat_pow(q, 2 * k)});
    push("star_uu_neg", u_m.star() * u_m == affine_prod(zeta_m, f));

    f.clear();
    for (int k = 0; k < n; ++k)
        f.push_back({rat_pow(q, -2 * k) * s2, Rational(1)});
    push("star_ww_neg", w_m.star() * w_m == affine_prod(zeta_m, f));

    return rep;
}

NcMat build_p1_symbolic(int sign, const Params& p) {
    if (sign != 1 && sign != -1)
        throw InvalidParamsError("sign must be +1 or -1");
    const Rational s2 = p.s * p.s;
    const Rational c = Rational(1) / (1 + s2);
    const Rational q2i = Rational(1) / (p.q * p.q);

    const NcPoly one = NcPoly::scalar(Basis::PODLES, p, Rational(1));
    const NcPoly z = NcPoly::generator(Basis::PODLES, p, Gen::Z);
    const NcPoly e = NcPoly::generator(Basis::PODLES, p, Gen::E);
    const NcPoly es = NcPoly::generator(Basis::PODLES, p, Gen::Es);

    NcMat out(2, 2, NcPoly::zero(Basis::PODLES, p));
    if (sign > 0) {
        out.at(0, 0) = c * (one - z);
        out.at(0, 1) = c * es;
        out.at(1, 0) = c * e;
        out.at(1, 1) = c * (s2 * one + q2i * z);
    } else {
        out.at(0, 0) = c * (s2 * one + z);
        out.at(0, 1) = c * es;
        out.at(1, 0) = c * e;
        out.at(1, 1) = c * (one - q2i * z);
    }
    return out;
}

NcPoly podles_s_inversion(const NcPoly& p) {
    if (p.basis() != Basis::PODLES)
        throw IncompatibleOperandsError("s-inversion is defined on the sphere basis");
    const Rational s = p.params().s;
    const Params target(p.params().q, Rational(1) / s);
    const Rational s2 = s * s;
    RawSum raw;
    for (const auto& [w, c] : p.terms()) {
        RawTerm t;
        t.coeff = c * rat_pow(s2, w.e[0]) * rat_pow(-s2, w.e[1]) * rat_pow(s2, w.e[2]);
        t.word = w.letters(Basis::PODLES);
        raw.push_back(std::move(t));
    }
    return nc_normalize(Basis::PODLES, target, raw);
}

} // namespace podles
