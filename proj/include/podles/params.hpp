#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "podles/errors.hpp"

namespace podles {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/**
 * Deformation parameters of one sphere in the generic family.
 *
 * Both are kept as exact rationals; every symbolic computation downstream is
 * exact in Z[q^{+-1}, s^{+-1}]-like coefficient arithmetic, and the operator
 * layer converts to double only at evaluation time.
 *
 * Constraints: 0 < q < 1 and s > 0.  s = 0 would be the standard sphere,
 * which has a different C*-algebra and is rejected with its own error type.
 */
struct Params {
    Rational q;
    Rational s;

    Params(Rational q_, Rational s_) : q(std::move(q_)), s(std::move(s_)) {
        if (s == 0)
            throw SZeroParamError(
                "s = 0 selects the standard sphere boundary case; this family requires s > 0");
        if (!(q > 0 && q < 1))
            throw InvalidParamsError("q must satisfy 0 < q < 1, got " + q.str());
        if (!(s > 0))
            throw InvalidParamsError("s must satisfy s > 0, got " + s.str());
    }

    bool operator==(const Params& o) const { return q == o.q && s == o.s; }
    bool operator!=(const Params& o) const { return !(*this == o); }

    double qd() const { return static_cast<double>(q); }
    double sd() const { return static_cast<double>(s); }
};

/* q^e for integer e, exact. */
Rational rat_pow(const Rational& base, long e);

/* Parse "3/10", "2", "-5/7".  Throws MalformedInputError. */
Rational parse_rational(const std::string& text);

/*
 * Parse a CLI-style parameter value: either an exact rational ("3/10") or a
 * decimal ("0.3"), the latter converted to the nearest rational with
 * denominator <= max_den.  `converted` is set when a decimal was given.
 */
Rational parse_param_value(const std::string& text, bool& converted, long max_den = 1000000);

/* "p/r" (or "p" when the denominator is 1). */
std::string format_rational(const Rational& r);

} // namespace podles
