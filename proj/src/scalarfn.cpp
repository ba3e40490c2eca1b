#include "podles/scalarfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "podles/errors.hpp"

namespace podles {

namespace {

constexpr double kWholeLine = 1e300;
constexpr double kFactorSnap = 1e-9;

std::optional<FnCert> intersect(const std::optional<FnCert>& a,
                                const std::optional<FnCert>& b) {
    if (!a || !b)
        return std::nullopt;
    FnCert c;
    c.lo = std::max(a->lo, b->lo);
    c.hi = std::min(a->hi, b->hi);
    if (!(c.lo < c.hi))
        return std::nullopt;
    return c;
}

std::string fmt_t(double t) { return std::to_string(t); }

}  // namespace

ScalarFn::ScalarFn() {
    f_ = [](double) { return FnSample{0.0, 0.0}; };
    FnCert cert;
    cert.lo = -kWholeLine;
    cert.hi = kWholeLine;
    cert_ = cert;
}

double ScalarFn::operator()(double t) const { return f_(t).value; }

FnSample ScalarFn::sample(double t) const { return f_(t); }

ScalarFn ScalarFn::constant(double c) {
    ScalarFn r;
    r.f_ = [c](double) { return FnSample{c, std::abs(c)}; };
    FnCert cert;
    cert.lo = -kWholeLine;
    cert.hi = kWholeLine;
    cert.lipschitz = 0.0;
    cert.vmin = c;
    cert.vmax = c;
    r.cert_ = cert;
    return r;
}

ScalarFn ScalarFn::affine_product(std::vector<std::pair<double, double>> factors,
                                  double lo, double hi) {
    ScalarFn r;
    r.f_ = [factors](double t) {
        double v = 1.0, scale = 1.0;
        bool zero = false;
        for (const auto& [c, m] : factors) {
            double fv = c + m * t;
            double fs = std::abs(c) + std::abs(m * t);
            scale *= std::max(fs, std::numeric_limits<double>::min());
            if (std::abs(fv) <= kFactorSnap * fs)
                zero = true;
            else
                v *= fv;
        }
        return FnSample{zero ? 0.0 : v, scale};
    };
    if (lo < hi) {
        /* Interval range of each factor, then interval product; the
         * Lipschitz bound is sum_j |m_j| prod_{k!=j} max|factor_k|. */
        double pmin = 1.0, pmax = 1.0, lip = 0.0;
        std::vector<double> absmax(factors.size());
        for (size_t k = 0; k < factors.size(); ++k) {
            double v0 = factors[k].first + factors[k].second * lo;
            double v1 = factors[k].first + factors[k].second * hi;
            double fmin = std::min(v0, v1), fmax = std::max(v0, v1);
            absmax[k] = std::max(std::abs(fmin), std::abs(fmax));
            double c1 = pmin * fmin, c2 = pmin * fmax, c3 = pmax * fmin, c4 = pmax * fmax;
            pmin = std::min(std::min(c1, c2), std::min(c3, c4));
            pmax = std::max(std::max(c1, c2), std::max(c3, c4));
        }
        for (size_t j = 0; j < factors.size(); ++j) {
            double term = std::abs(factors[j].second);
            for (size_t k = 0; k < factors.size(); ++k)
                if (k != j)
                    term *= absmax[k];
            lip += term;
        }
        FnCert cert;
        cert.lo = lo;
        cert.hi = hi;
        cert.lipschitz = lip;
        cert.vmin = pmin;
        cert.vmax = pmax;
        r.cert_ = cert;
    } else {
        r.cert_ = std::nullopt;
    }
    return r;
}

ScalarFn operator+(const ScalarFn& a, const ScalarFn& b) {
    ScalarFn r;
    auto fa = a.f_, fb = b.f_;
    r.f_ = [fa, fb](double t) {
        FnSample x = fa(t), y = fb(t);
        return FnSample{x.value + y.value, x.scale + y.scale};
    };
    r.cert_ = intersect(a.cert_, b.cert_);
    if (r.cert_) {
        r.cert_->lipschitz = a.cert_->lipschitz + b.cert_->lipschitz;
        r.cert_->vmin = a.cert_->vmin + b.cert_->vmin;
        r.cert_->vmax = a.cert_->vmax + b.cert_->vmax;
    }
    return r;
}

ScalarFn operator*(const ScalarFn& a, const ScalarFn& b) {
    ScalarFn r;
    auto fa = a.f_, fb = b.f_;
    r.f_ = [fa, fb](double t) {
        FnSample x = fa(t), y = fb(t);
        return FnSample{x.value * y.value, x.scale * y.scale};
    };
    r.cert_ = intersect(a.cert_, b.cert_);
    if (r.cert_) {
        double amax = std::max(std::abs(a.cert_->vmin), std::abs(a.cert_->vmax));
        double bmax = std::max(std::abs(b.cert_->vmin), std::abs(b.cert_->vmax));
        r.cert_->lipschitz = a.cert_->lipschitz * bmax + b.cert_->lipschitz * amax;
        double c1 = a.cert_->vmin * b.cert_->vmin, c2 = a.cert_->vmin * b.cert_->vmax;
        double c3 = a.cert_->vmax * b.cert_->vmin, c4 = a.cert_->vmax * b.cert_->vmax;
        r.cert_->vmin = std::min(std::min(c1, c2), std::min(c3, c4));
        r.cert_->vmax = std::max(std::max(c1, c2), std::max(c3, c4));
    }
    return r;
}

ScalarFn operator*(double c, const ScalarFn& a) {
    return ScalarFn::constant(c) * a;
}

ScalarFn quotient(const ScalarFn& num, const ScalarFn& den) {
    ScalarFn r;
    auto fn = num.f_, fd = den.f_;
    r.f_ = [fn, fd](double t) {
        FnSample x = fn(t), y = fd(t);
        if (!(std::abs(y.value) > 0.0) || !std::isfinite(y.value))
            throw DomainError("quotient: vanishing denominator at t = " + fmt_t(t));
        return FnSample{x.value / y.value, x.scale / std::abs(y.value)};
    };
    r.cert_ = intersect(num.cert_, den.cert_);
    if (r.cert_) {
        if (den.cert_->vmin > 0.0) {
            double nmax = std::max(std::abs(num.cert_->vmin), std::abs(num.cert_->vmax));
            double dmax = std::max(std::abs(den.cert_->vmin), std::abs(den.cert_->vmax));
            r.cert_->lipschitz =
                (num.cert_->lipschitz * dmax + den.cert_->lipschitz * nmax) /
                (den.cert_->vmin * den.cert_->vmin);
            double c1 = num.cert_->vmin / den.cert_->vmin, c2 = num.cert_->vmin / den.cert_->vmax;
            double c3 = num.cert_->vmax / den.cert_->vmin, c4 = num.cert_->vmax / den.cert_->vmax;
            r.cert_->vmin = std::min(std::min(c1, c2), std::min(c3, c4));
            r.cert_->vmax = std::max(std::max(c1, c2), std::max(c3, c4));
        } else {
            r.cert_ = std::nullopt;
        }
    }
    return r;
}

ScalarFn sqrt_of(const ScalarFn& a) {
    ScalarFn r;
    auto fa = a.f_;
    r.f_ = [fa](double t) {
        FnSample x = fa(t);
        if (x.value < 0.0) {
            if (x.value < -1e-9 * std::max(1.0, x.scale))
                throw DomainError("sqrt: negative sample " + fmt_t(x.value) +
                                  " at t = " + fmt_t(t));
            x.value = 0.0;
        }
        return FnSample{std::sqrt(x.value), std::sqrt(std::max(x.scale, 0.0))};
    };
    if (a.cert_ && a.cert_->vmin > 0.0) {
        FnCert cert = *a.cert_;
        cert.lipschitz = a.cert_->lipschitz / (2.0 * std::sqrt(a.cert_->vmin));
        cert.vmin = std::sqrt(a.cert_->vmin);
        cert.vmax = std::sqrt(a.cert_->vmax);
        r.cert_ = cert;
    } else {
        r.cert_ = std::nullopt;
    }
    return r;
}

}  // namespace podles
