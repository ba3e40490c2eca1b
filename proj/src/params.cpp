#include "podles/params.hpp"

#include <cctype>
#include <cstdlib>

namespace podles {

Rational rat_pow(const Rational& base, long e) {
    if (e == 0)
        return Rational(1);
    if (base == 0)
        throw InvalidParamsError("rat_pow: zero base with negative exponent");
    Rational acc(1);
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    while (n) {
        if (n & 1)
            acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

/*
 * Nearest rational to x with denominator <= dmax, via continued-fraction
 * convergents and the final semiconvergent.
 */
Rational best_bounded_rational(const Rational& x, const Integer& dmax) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(x) <= dmax)
        return x;
    const bool neg = x < 0;
    const Rational ax = neg ? Rational(-x) : x;
    Integer n = numerator(ax), d = denominator(ax);
    Integer p1 = 1, p2 = 0, q1 = 0, q2 = 1;
    while (true) {
        const Integer a = n / d;
        const Integer pk = a * p1 + p2, qk = a * q1 + q2;
        if (qk > dmax) {
            Rational best(p1, q1);
            const Integer t = (dmax - q2) / q1;
            if (t >= 1) {
                Rational semi(t * p1 + p2, t * q1 + q2);
                if (abs(ax - semi) < abs(ax - best))
                    best = semi;
            }
            return neg ? Rational(-best) : best;
        }
        const Integer rem = n - a * d;
        if (rem == 0)
            return neg ? Rational(-Rational(pk, qk)) : Rational(pk, qk);
        p2 = p1;
        p1 = pk;
        q2 = q1;
        q1 = qk;
        n = d;
        d = rem;
    }
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string t = text;
    bool neg = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    const auto slash = t.find('/');
    Rational r;
    if (slash == std::string::npos) {
        if (!all_digits(t))
            throw MalformedInputError("not a rational: '" + text + "'");
        r = Rational(Integer(t));
    } else {
        const std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw MalformedInputError("not a rational: '" + text + "'");
        Integer d(den);
        if (d == 0)
            throw MalformedInputError("zero denominator: '" + text + "'");
        r = Rational(Integer(num), d);
    }
    return neg ? Rational(-r) : r;
}

Rational parse_param_value(const std::string& text, bool& converted, long max_den) {
    converted = false;
    const auto dot = text.find('.');
    if (dot == std::string::npos)
        return parse_rational(text);

    std::string t = text;
    bool neg = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    const auto d2 = t.find('.');
    const std::string ip = t.substr(0, d2), fp = t.substr(d2 + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
        throw MalformedInputError("not a number: '" + text + "'");

    Integer scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i)
        scale *= 10;
    Integer num = (ip.empty() ? Integer(0) : Integer(ip)) * scale + (fp.empty() ? Integer(0) : Integer(fp));
    Rational exact(num, scale);
    if (neg)
        exact = -exact;

    Rational r = best_bounded_rational(exact, Integer(max_den));
    converted = true;
    return r;
}

std::string format_rational(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace podles
