#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace podles {

/* A sampled function value together with the magnitude scale of the
 * computation that produced it.  |value| <= scale, and the roundoff in
 * value is a small multiple of machine epsilon times scale.  Consumers
 * use scale to distinguish genuine negatives from noise under sqrt. */
struct FnSample {
    double value = 0.0;
    double scale = 0.0;
};

/* Certificate on an interval [lo, hi]: a Lipschitz constant and range
 * bounds valid on the whole interval.  Combinators intersect intervals
 * and propagate the bounds; a combinator that cannot certify (empty
 * interval, zero in a denominator range, sqrt of a range touching 0)
 * returns a function without a certificate. */
struct FnCert {
    double lo = 0.0;
    double hi = 0.0;
    double lipschitz = 0.0;
    double vmin = 0.0;
    double vmax = 0.0;
};

class ScalarFn {
  public:
    ScalarFn(); /* constant 0 */

    double operator()(double t) const;
    FnSample sample(double t) const;
    const std::optional<FnCert>& cert() const { return cert_; }

    static ScalarFn constant(double c);

    /* t -> prod_k (c_k + m_k t), certified on [lo, hi].  A factor whose
     * value is below 1e-9 of its own magnitude is snapped to exact zero,
     * so products vanish exactly at their roots even when t carries a few
     * ulps of error. */
    static ScalarFn affine_product(std::vector<std::pair<double, double>> factors,
                                   double lo, double hi);

    friend ScalarFn operator+(const ScalarFn& a, const ScalarFn& b);
    friend ScalarFn operator*(const ScalarFn& a, const ScalarFn& b);
    friend ScalarFn operator*(double c, const ScalarFn& a);
    friend ScalarFn quotient(const ScalarFn& num, const ScalarFn& den);
    friend ScalarFn sqrt_of(const ScalarFn& a);

  private:
    std::function<FnSample(double)> f_;
    std::optional<FnCert> cert_;
};

ScalarFn quotient(const ScalarFn& num, const ScalarFn& den);
ScalarFn sqrt_of(const ScalarFn& a);

}  // namespace podles
