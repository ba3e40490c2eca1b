#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "podles/dense.hpp"
#include "podles/scalarfn.hpp"

namespace podles {

/* Geometric tail certificate for a diagonal: |eval(n) - limit| <= C * r^n. */
struct Tail {
    double C = 0.0;
    double r = 0.5;
};

/* Lazy diagonal of an operator on l2(N0).  eval must be pure.  When
 * exact_from is set, eval(n) equals limit exactly (bitwise) for all
 * n >= exact_from, which makes downstream traces exact finite sums.
 * heuristic marks tail data that was estimated rather than derived. */
struct DiagFn {
    std::function<double(long)> eval;
    std::optional<double> limit;
    std::optional<Tail> tail;
    std::optional<long> exact_from;
    bool heuristic = false;

    double operator()(long n) const { return eval(n); }

    static DiagFn constant(double c);
    static DiagFn zero() { return constant(0.0); }
};

/* Finite sum of shift bands: band k > 0 is S^k D, band k < 0 is D S*^|k|,
 * band 0 is the diagonal D.  The entry at (row, col) with row - col = k
 * is D(min(row, col)).  Absent band = zero.  Values are immutable. */
class ShiftSeries {
  public:
    ShiftSeries() = default;

    static ShiftSeries zero() { return ShiftSeries(); }
    static ShiftSeries constant(double c);
    static ShiftSeries identity() { return constant(1.0); }
    static ShiftSeries shift(); /* S */
    static ShiftSeries band(int k, DiagFn d);
    static ShiftSeries diagonal(DiagFn d) { return band(0, std::move(d)); }

    const std::map<int, DiagFn>& bands() const { return bands_; }
    bool is_zero() const { return bands_.empty(); }

    ShiftSeries operator+(const ShiftSeries& o) const;
    ShiftSeries operator-(const ShiftSeries& o) const;
    ShiftSeries operator*(const ShiftSeries& o) const;
    ShiftSeries star() const;
    ShiftSeries pow(unsigned k) const;
    friend ShiftSeries operator*(double c, const ShiftSeries& x);

    double entry(long i, long j) const;
    /* Image of sum_j v[j] e_j; the result has v.size() + top band entries. */
    std::vector<double> apply(const std::vector<double>& v) const;

  private:
    std::map<int, DiagFn> bands_;
};

/* Finitely supported Laurent polynomial sum_k c_k U^k on the circle. */
struct LaurentSymbol {
    std::map<long, std::complex<double>> coeffs;

    std::complex<double> coeff(long k) const;
    long max_degree() const; /* max |k| over the support, 0 if empty */

    LaurentSymbol operator+(const LaurentSymbol& o) const;
    LaurentSymbol operator-(const LaurentSymbol& o) const;
    LaurentSymbol operator*(const LaurentSymbol& o) const;
    LaurentSymbol star() const;
    LaurentSymbol shifted(long k) const; /* multiply by U^k */
    friend LaurentSymbol operator*(std::complex<double> c, const LaurentSymbol& o);

    static LaurentSymbol unit(long k, std::complex<double> c = 1.0);
};

double max_abs_diff(const LaurentSymbol& a, const LaurentSymbol& b);

/* Boundary symbol: coefficient of U^k is the limit of band k. */
LaurentSymbol symbol_of(const ShiftSeries& x);

/* f applied to a purely diagonal self-adjoint series.  The output tail is
 * recertified from f's Lipschitz data when available, else dropped. */
ShiftSeries ss_func_calc(const ScalarFn& f, const ShiftSeries& x);

struct TraceResult {
    double value = 0.0;
    double bound = 0.0;
    bool heuristic = false;
};

/* Certified trace of the diagonal part; the band-0 limit must vanish. */
TraceResult trace_diag(const ShiftSeries& x, double tol);

dense::Matrix truncate(const ShiftSeries& x, long M);
std::pair<dense::Matrix, double> truncate_and_norm(const ShiftSeries& x, long M);

/* Sup of |entry difference| over all bands at depths 0..M, plus the
 * difference of band limits; the equality notion of the operator layer. */
double max_pointwise_diff(const ShiftSeries& x, const ShiftSeries& y, long M);

/* Dense window matrix on basis e_{-R}..e_{R} of l2(Z). */
struct WindowMat {
    long R = 0;
    std::vector<std::complex<double>> a;

    explicit WindowMat(long radius = 0)
        : R(radius), a((2 * radius + 1) * (2 * radius + 1), 0.0) {}
    long dim() const { return 2 * R + 1; }
    std::complex<double>& at(long i, long j) { return a[(i + R) * dim() + (j + R)]; }
    std::complex<double> at(long i, long j) const { return a[(i + R) * dim() + (j + R)]; }

    WindowMat operator-(const WindowMat& o) const;
    std::complex<double> trace() const;
    double max_abs() const;
};

enum class PiRep { plus, minus };

/* The two circle representations on l2(Z): pi_plus(U^k) is the k-step
 * shift; pi_minus(U) skips index 0 (e_{-1} -> e_1, e_0 -> 0) and
 * pi_minus(1) drops the e_0 component. */
WindowMat pi_window(const LaurentSymbol& sym, PiRep which, long R);

}  // namespace podles
