#pragma once

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "podles/params.hpp"

namespace podles {

/*
 * Two presentation bases are supported.
 *
 * SUQ2: the coordinate *-algebra on quantum SU(2) with generators
 *   a = alpha, b = beta, c = gamma, d = delta, ordered a < b < c < d,
 *   relations ab = q ba (and the usual q-commutations), bc = cb,
 *   ad - q bc = 1, da - q^{-1} bc = 1,
 *   involution a* = d, b* = -q c, c* = -q^{-1} b, d* = a.
 *   Normal-form words: a^i b^j c^k  or  b^j c^k d^l.
 *
 * PODLES: the coordinate *-algebra of one generic sphere with generators
 *   z = zeta (self-adjoint), e = eta, es = eta*,
 *   relations z e = q^2 e z,
 *   es e = s^2 + (1 - s^2) z - z^2,  e es = s^2 + q^{-2}(1 - s^2) z - q^{-4} z^2.
 *   Normal-form words: e^i z^j  or  z^j es^k.
 */
enum class Basis : unsigned char { SUQ2, PODLES };

enum class Gen : unsigned char { A, B, C, D, Z, E, Es };

bool gen_in_basis(Gen g, Basis b);
const char* gen_name(Gen g);

/*
 * Exponent key of a normal-form word.
 *
 * SUQ2:   a^e0 b^e1 c^e2 d^e3 with e0 * e3 == 0.
 * PODLES: e^e0 z^e1 es^e2   with e0 * e2 == 0 (e3 unused).
 */
struct Word {
    std::array<std::uint32_t, 4> e{0, 0, 0, 0};

    auto operator<=>(const Word&) const = default;

    std::uint32_t degree() const { return e[0] + e[1] + e[2] + e[3]; }
    std::vector<Gen> letters(Basis b) const;
};

/* One addend of a raw (un-normalized) word-sum in the free *-algebra. */
struct RawTerm {
    Rational coeff;
    std::vector<Gen> word;
};
using RawSum = std::vector<RawTerm>;

/*
 * Redex selector for the rewriting engine.  Given the number of reducible
 * positions in the current word it returns which one to contract next.  The
 * default (empty) strategy always picks index 0; property tests inject random
 * strategies to exercise confluence.
 */
using RewriteStrategy = std::function<std::size_t(std::size_t)>;

class NcPoly {
  public:
    NcPoly(Basis basis, Params params) : basis_(basis), params_(std::move(params)) {}

    static NcPoly zero(Basis b, const Params& p) { return NcPoly(b, p); }
    static NcPoly scalar(Basis b, const Params& p, const Rational& c);
    static NcPoly generator(Basis b, const Params& p, Gen g);

    Basis basis() const { return basis_; }
    const Params& params() const { return params_; }
    const std::map<Word, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::uint32_t degree() const;

    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    friend NcPoly operator+(NcPoly x, const NcPoly& y) { return x += y; }
    friend NcPoly operator-(NcPoly x, const NcPoly& y) { return x -= y; }
    friend NcPoly operator*(const NcPoly& x, const NcPoly& y);
    friend NcPoly operator*(const Rational& c, NcPoly x);

    NcPoly star() const;
    NcPoly pow(unsigned n) const;

    bool operator==(const NcPoly& o) const;
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

    std::string str() const;

  private:
    friend NcPoly nc_normalize(Basis, const Params&, const RawSum&, const RewriteStrategy&);
    void add_term(const Word& w, const Rational& c);

    Basis basis_;
    Params params_;
    std::map<Word, Rational> terms_;
};

/*
 * Rewrite a raw word-sum to its unique normal form.  Terminates for every
 * strategy; the normal form is strategy-independent (tested property).
 * Throws MalformedInputError if a letter does not belong to the basis.
 */
NcPoly nc_normalize(Basis b, const Params& p, const RawSum& raw,
                    const RewriteStrategy& strategy = {});

/*
 * Plain-text expression front end.  Generators `a b c d` (SUQ2) or
 * `z zs e es` (PODLES, zs being z again since zeta is self-adjoint),
 * `*` products, `+`/`-` sums, `^` non-negative integer powers, rational
 * scalars like `3/10`, and parentheses.
 */
NcPoly parse_poly(Basis b, const Params& p, const std::string& text);

} // namespace podles
