#include "podles/shiftop.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "podles/errors.hpp"

namespace podles {

namespace {

constexpr long kDead = std::numeric_limits<long>::min();

double pow_int(double r, long k) { return std::pow(r, static_cast<double>(k)); }

DiagFn diag_scale(double c, const DiagFn& d) {
    DiagFn out;
    auto f = d.eval;
    out.eval = [c, f](long n) { return c * f(n); };
    if (d.limit)
        out.limit = c * *d.limit;
    if (d.tail)
        out.tail = Tail{std::abs(c) * d.tail->C, d.tail->r};
    out.exact_from = d.exact_from;
    out.heuristic = d.heuristic;
    return out;
}

DiagFn diag_add(const DiagFn& a, const DiagFn& b) {
    DiagFn out;
    auto fa = a.eval, fb = b.eval;
    out.eval = [fa, fb](long n) { return fa(n) + fb(n); };
    if (a.limit && b.limit) {
        out.limit = *a.limit + *b.limit;
        if (a.tail && b.tail)
            out.tail = Tail{a.tail->C + b.tail->C, std::max(a.tail->r, b.tail->r)};
        if (a.exact_from && b.exact_from)
            out.exact_from = std::max(*a.exact_from, *b.exact_from);
    }
    out.heuristic = a.heuristic || b.heuristic;
    return out;
}

/* Normal form of (band a, A) * (band b, B).  Moving diagonals through
 * shifts displaces their arguments, and annihilated basis vectors cut
 * the result off below j0:
 *   (S^a A)(S^b B) e_j = [j >= j0] A(j + offA) B(j + offB) e_{j+a+b}.
 * The tail constants absorb the displacement (r^off) and the cutoff. */
DiagFn band_product(int a, const DiagFn& A, int b, const DiagFn& B) {
    int c = a + b;
    long pOff = std::max(c, 0) - a;
    long j0 = std::max(0L, -pOff);
    long offA = pOff + std::min(a, 0);
    long offB = std::max(-c, 0) + std::min(b, 0);
    DiagFn out;
    auto fa = A.eval, fb = B.eval;
    out.eval = [j0, offA, offB, fa, fb](long j) {
        if (j < j0)
            return 0.0;
        return fa(j + offA) * fb(j + offB);
    };
    out.heuristic = A.heuristic || B.heuristic;
    if (A.limit && B.limit) {
        out.limit = *A.limit * *B.limit;
        if (A.tail && B.tail) {
            double ra = std::clamp(A.tail->r, 1e-12, 1.0);
            double rb = std::clamp(B.tail->r, 1e-12, 1.0);
            double r = std::max(A.tail->r, B.tail->r);
            double Ca = A.tail->C == 0.0 ? 0.0 : A.tail->C * pow_int(ra, offA);
            double Cb = B.tail->C == 0.0 ? 0.0 : B.tail->C * pow_int(rb, offB);
            double C = Ca * (std::abs(*B.limit) + Cb) + std::abs(*A.limit) * Cb;
            if (j0 > 0 && *out.limit != 0.0)
                C = std::max(C, std::abs(*out.limit) * pow_int(std::max(r, 1e-12), -(j0 - 1)));
            out.tail = Tail{C, r};
        }
        if (A.exact_from && B.exact_from)
            out.exact_from = std::max({j0, *A.exact_from - offA, *B.exact_from - offB});
    }
    return out;
}

long succ_minus(long n) {
    if (n == 0)
        return kDead;
    if (n == -1)
        return 1;
    return n + 1;
}

}  // namespace

DiagFn DiagFn::constant(double c) {
    DiagFn d;
    d.eval = [c](long) { return c; };
    d.limit = c;
    d.tail = Tail{0.0, 0.5};
    d.exact_from = 0;
    return d;
}

ShiftSeries ShiftSeries::constant(double c) {
    if (c == 0.0)
        return zero();
    return band(0, DiagFn::constant(c));
}

ShiftSeries ShiftSeries::shift() { return band(1, DiagFn::constant(1.0)); }

ShiftSeries ShiftSeries::band(int k, DiagFn d) {
    ShiftSeries x;
    x.bands_[k] = std::move(d);
    return x;
}

ShiftSeries ShiftSeries::operator+(const ShiftSeries& o) const {
    ShiftSeries r = *this;
    for (const auto& [k, d] : o.bands_) {
        auto it = r.bands_.find(k);
        if (it == r.bands_.end())
            r.bands_[k] = d;
        else
            it->second = diag_add(it->second, d);
    }
    return r;
}

ShiftSeries ShiftSeries::operator-(const ShiftSeries& o) const {
    return *this + (-1.0 * o);
}

ShiftSeries ShiftSeries::operator*(const ShiftSeries& o) const {
    ShiftSeries r;
    for (const auto& [a, da] : bands_)
        for (const auto& [b, db] : o.bands_) {
            DiagFn contrib = band_product(a, da, b, db);
            int c = a + b;
            auto it = r.bands_.find(c);
            if (it == r.bands_.end())
                r.bands_[c] = std::move(contrib);
            else
                it->second = diag_add(it->second, contrib);
        }
    return r;
}

ShiftSeries ShiftSeries::star() const {
    ShiftSeries r;
    for (const auto& [k, d] : bands_)
        r.bands_[-k] = d;
    return r;
}

ShiftSeries ShiftSeries::pow(unsigned k) const {
    ShiftSeries r = identity();
    for (unsigned i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

ShiftSeries operator*(double c, const ShiftSeries& x) {
    if (c == 0.0)
        return ShiftSeries::zero();
    ShiftSeries r;
    for (const auto& [k, d] : x.bands_)
        r.bands_[k] = diag_scale(c, d);
    return r;
}

double ShiftSeries::entry(long i, long j) const {
    if (i < 0 || j < 0)
        return 0.0;
    long k = i - j;
    if (k < std::numeric_limits<int>::min() || k > std::numeric_limits<int>::max())
        return 0.0;
    auto it = bands_.find(static_cast<int>(k));
    if (it == bands_.end())
        return 0.0;
    return it->second(std::min(i, j));
}

std::vector<double> ShiftSeries::apply(const std::vector<double>& v) const {
    long top = 0;
    for (const auto& [k, d] : bands_)
        top = std::max(top, static_cast<long>(k));
    std::vector<double> out(v.size() + top, 0.0);
    for (const auto& [k, d] : bands_)
        for (long j = 0; j < static_cast<long>(v.size()); ++j) {
            long i = j + k;
            if (i >= 0 && i < static_cast<long>(out.size()))
                out[i] += d(std::min(i, j)) * v[j];
        }
    return out;
}

std::complex<double> LaurentSymbol::coeff(long k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? std::complex<double>(0.0) : it->second;
}

long LaurentSymbol::max_degree() const {
    long d = 0;
    for (const auto& [k, c] : coeffs)
        d = std::max(d, std::abs(k));
    return d;
}

LaurentSymbol LaurentSymbol::operator+(const LaurentSymbol& o) const {
    LaurentSymbol r = *this;
    for (const auto& [k, c] : o.coeffs)
        r.coeffs[k] += c;
    std::erase_if(r.coeffs, [](const auto& kv) { return std::abs(kv.second) == 0.0; });
    return r;
}

LaurentSymbol LaurentSymbol::operator-(const LaurentSymbol& o) const {
    return *this + std::complex<double>(-1.0) * o;
}

LaurentSymbol LaurentSymbol::operator*(const LaurentSymbol& o) const {
    LaurentSymbol r;
    for (const auto& [k1, c1] : coeffs)
        for (const auto& [k2, c2] : o.coeffs)
            r.coeffs[k1 + k2] += c1 * c2;
    std::erase_if(r.coeffs, [](const auto& kv) { return std::abs(kv.second) == 0.0; });
    return r;
}

LaurentSymbol LaurentSymbol::star() const {
    LaurentSymbol r;
    for (const auto& [k, c] : coeffs)
        r.coeffs[-k] = std::conj(c);
    return r;
}

LaurentSymbol LaurentSymbol::shifted(long k) const {
    LaurentSymbol r;
    for (const auto& [j, c] : coeffs)
        r.coeffs[j + k] = c;
    return r;
}

LaurentSymbol operator*(std::complex<double> c, const LaurentSymbol& o) {
    LaurentSymbol r;
    if (std::abs(c) == 0.0)
        return r;
    for (const auto& [k, v] : o.coeffs)
        r.coeffs[k] = c * v;
    return r;
}

LaurentSymbol LaurentSymbol::unit(long k, std::complex<double> c) {
    LaurentSymbol r;
    if (std::abs(c) != 0.0)
        r.coeffs[k] = c;
    return r;
}

double max_abs_diff(const LaurentSymbol& a, const LaurentSymbol& b) {
    double m = 0.0;
    for (const auto& [k, c] : a.coeffs)
        m = std::max(m, std::abs(c - b.coeff(k)));
    for (const auto& [k, c] : b.coeffs)
        m = std::max(m, std::abs(a.coeff(k) - c));
    return m;
}

LaurentSymbol symbol_of(const ShiftSeries& x) {
    LaurentSymbol sym;
    for (const auto& [k, d] : x.bands()) {
        if (!d.limit)
            throw SymbolUndefinedError("band " + std::to_string(k) + " has no declared limit");
        if (*d.limit != 0.0)
            sym.coeffs[k] = *d.limit;
    }
    return sym;
}

ShiftSeries ss_func_calc(const ScalarFn& f, const ShiftSeries& x) {
    DiagFn d = DiagFn::zero();
    if (!x.bands().empty()) {
        if (x.bands().size() != 1 || x.bands().begin()->first != 0)
            throw IncompatibleOperandsError("functional calculus needs a diagonal series");
        d = x.bands().begin()->second;
    }
    DiagFn out;
    ScalarFn fn = f;
    auto de = d.eval;
    out.eval = [fn, de](long n) { return fn(de(n)); };
    out.heuristic = d.heuristic;
    if (d.limit) {
        double L = *d.limit;
        double fL = fn(L);
        out.limit = fL;
        out.exact_from = d.exact_from;
        if (d.tail && f.cert()) {
            const FnCert& cert = *f.cert();
            double margin = std::min(L - cert.lo, cert.hi - L);
            if (margin > 0.0 && d.tail->r < 1.0) {
                double r = std::clamp(d.tail->r, 1e-12, 1.0);
                /* n1 = first index whose certified deviation fits in the
                 * margin; before it, bound |f(d(n)) - f(L)| directly. */
                long n1 = 0;
                double crn = d.tail->C;
                while (crn > margin && n1 <= 4096) {
                    crn *= r;
                    ++n1;
                }
                if (n1 <= 4096) {
                    double C = cert.lipschitz * d.tail->C;
                    double rinv = 1.0;
                    bool ok = true;
                    for (long n = 0; n < n1; ++n) {
                        double delta = std::abs(fn(de(n)) - fL);
                        C = std::max(C, delta * rinv);
                        rinv /= r;
                        if (!std::isfinite(C) || !std::isfinite(rinv)) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok)
                        out.tail = Tail{C, d.tail->r};
                }
            }
        }
    }
    return ShiftSeries::diagonal(out);
}

TraceResult trace_diag(const ShiftSeries& x, double tol) {
    auto it = x.bands().find(0);
    if (it == x.bands().end())
        return TraceResult{0.0, 0.0, false};
    const DiagFn& d = it->second;
    if (!d.limit)
        throw NotTraceClassError("band-0 diagonal has no declared limit");
    if (std::abs(*d.limit) > 1e-13)
        throw NotTraceClassError("band-0 limit " + std::to_string(*d.limit) + " is nonzero");

    if (d.exact_from && *d.limit == 0.0) {
        double acc = 0.0;
        for (long n = 0; n < *d.exact_from; ++n)
            acc += d(n);
        return TraceResult{acc, 0.0, d.heuristic};
    }

    if (d.tail && d.tail->r < 1.0) {
        double r = std::clamp(d.tail->r, 1e-12, 1.0 - 1e-12);
        double acc = 0.0;
        double rem = d.tail->C / (1.0 - r);
        for (long n = 0; n < 4000000; ++n) {
            if (rem <= tol)
                return TraceResult{acc, rem, d.heuristic};
            acc += d(n);
            rem *= r;
        }
        throw ConvergenceError("certified remainder did not reach tolerance");
    }

    /* No certificate: empirical geometric decay with safety factor 10. */
    double acc = 0.0;
    std::deque<double> window;
    for (long n = 0; n < 200000; ++n) {
        double v = d(n);
        acc += v;
        window.push_back(std::abs(v));
        if (window.size() > 12)
            window.pop_front();
        if (n < 24 || window.size() < 12)
            continue;
        double rmax = 0.0;
        bool usable = true, allzero = true;
        for (size_t i = 1; i < window.size(); ++i) {
            if (window[i - 1] > 1e-300) {
                allzero = false;
                rmax = std::max(rmax, window[i] / window[i - 1]);
            } else if (window[i] > 1e-300) {
                usable = false;
            }
        }
        if (allzero)
            return TraceResult{acc, 0.0, true};
        if (usable && rmax < 0.999) {
            double est = 10.0 * window.back() * rmax / (1.0 - rmax);
            if (est <= tol)
                return TraceResult{acc, est, true};
        }
    }
    throw ConvergenceError("no geometric decay detected in diagonal trace");
}

dense::Matrix truncate(const ShiftSeries& x, long M) {
    if (M < 1)
        throw InvalidParamsError("truncation size must be positive");
    dense::Matrix m(M, M);
    for (const auto& [k, d] : x.bands()) {
        if (std::abs(k) >= M)
            continue;
        for (long n = 0; n < M - std::abs(k); ++n) {
            long i = k >= 0 ? n + k : n;
            long j = k >= 0 ? n : n - k;
            m.at(i, j) += d(n);
        }
    }
    return m;
}

std::pair<dense::Matrix, double> truncate_and_norm(const ShiftSeries& x, long M) {
    dense::Matrix m = truncate(x, M);
    double nrm = dense::norm2_estimate(m);
    return {std::move(m), nrm};
}

double max_pointwise_diff(const ShiftSeries& x, const ShiftSeries& y, long M) {
    double m = 0.0;
    auto scan = [&](const ShiftSeries& a, const ShiftSeries& b) {
        for (const auto& [k, da] : a.bands()) {
            auto it = b.bands().find(k);
            for (long n = 0; n <= M; ++n) {
                double bv = it == b.bands().end() ? 0.0 : it->second(n);
                m = std::max(m, std::abs(da(n) - bv));
            }
            if (da.limit && it != b.bands().end() && it->second.limit)
                m = std::max(m, std::abs(*da.limit - *it->second.limit));
            if (da.limit && it == b.bands().end())
                m = std::max(m, std::abs(*da.limit));
        }
    };
    scan(x, y);
    scan(y, x);
    return m;
}

WindowMat WindowMat::operator-(const WindowMat& o) const {
    if (R != o.R)
        throw IncompatibleOperandsError("window radius mismatch");
    WindowMat r(R);
    for (size_t i = 0; i < a.size(); ++i)
        r.a[i] = a[i] - o.a[i];
    return r;
}

std::complex<double> WindowMat::trace() const {
    std::complex<double> t = 0.0;
    for (long i = -R; i <= R; ++i)
        t += at(i, i);
    return t;
}

double WindowMat::max_abs() const {
    double m = 0.0;
    for (const auto& v : a)
        m = std::max(m, std::abs(v));
    return m;
}

WindowMat pi_window(const LaurentSymbol& sym, PiRep which, long R) {
    if (R < sym.max_degree() + 2)
        throw WindowTooSmallError("window radius " + std::to_string(R) +
                                  " too small for symbol of degree " +
                                  std::to_string(sym.max_degree()));
    WindowMat w(R);
    for (const auto& [k, c] : sym.coeffs) {
        if (which == PiRep::plus) {
            for (long n = -R; n <= R; ++n) {
                long m = n + k;
                if (m >= -R && m <= R)
                    w.at(m, n) += c;
            }
            continue;
        }
        if (k == 0) {
            for (long n = -R; n <= R; ++n)
                if (n != 0)
                    w.at(n, n) += c;
            continue;
        }
        for (long n = -R; n <= R; ++n) {
            long m = n;
            for (long i = 0; i < std::abs(k) && m != kDead; ++i)
                m = succ_minus(m);
            if (m == kDead || m < -R || m > R)
                continue;
            if (k > 0)
                w.at(m, n) += c;
            else
                w.at(n, m) += c;
        }
    }
    return w;
}

}  // namespace podles
