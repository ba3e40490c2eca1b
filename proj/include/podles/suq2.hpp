#pragma once

#include <vector>

#include "podles/ncpoly.hpp"
#include "podles/report.hpp"

namespace podles {

/* Small dense matrix over NcPoly, used for symbolic projection checks. */
class NcMat {
  public:
    NcMat(std::size_t rows, std::size_t cols, const NcPoly& fill)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    NcPoly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const NcPoly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend NcMat operator*(const NcMat& x, const NcMat& y);
    friend NcMat operator+(NcMat x, const NcMat& y);
    friend NcMat operator-(NcMat x, const NcMat& y);

    /* Entrywise star and transpose (matrix adjoint). */
    NcMat star_transpose() const;

    bool operator==(const NcMat& o) const;

  private:
    std::size_t rows_, cols_;
    std::vector<NcPoly> a_;
};

/*
 * Images of the sphere generators inside the SUQ2 algebra, embedded at an
 * arbitrary parameter value t (the weight identities relate several embedded
 * copies at t = s, q^n s, q^{-n} s inside the one ambient algebra):
 *
 *   zeta_t = -t ab - q(1 - t^2) bc + q t cd
 *   eta_t  = q^{-1} t b^2 + q^{-1}(1 - t^2) bd - t d^2
 */
NcPoly podles_embedding_zeta(const Params& ambient, const Rational& t);
NcPoly podles_embedding_eta(const Params& ambient, const Rational& t);

struct EmbeddedPair {
    NcPoly zeta, eta;
};

/* Embedding at the parameter point itself, t = params.s. */
EmbeddedPair podles_embedding(const Params& p);

enum class WeightKind { U, W };

/*
 * Weight-space generators of the line bundles:
 *   u_N = q^{-N} (b - q s d)(b - q^2 s d) ... (b - q^N s d)        N > 0
 *   u_N = (d + q^{-1} s b)(d + q^{-2} s b) ... (d + q^{-|N|} s b)  N < 0
 *   w_N = (a - q s c)(a - q^2 s c) ... (a - q^N s c)               N > 0
 *   w_N = (-q)^{|N|} (c + q^{-1} s a) ... (c + q^{-|N|} s a)       N < 0
 * and u_0 = w_0 = 1.
 */
NcPoly build_weight_vector(long N, WeightKind kind, const Params& p);

/*
 * Verify the 14 exchange/factorization identities at level n >= 0 (all exact
 * rational checks; n = 0 degenerates to 1 = 1).  Names, in report order:
 *   u_zeta_pos, w_zeta_pos, u_zeta_neg, w_zeta_neg,
 *   uu_star_pos, ww_star_pos, uu_star_neg, ww_star_neg,
 *   uw_star_pos, uw_star_neg,
 *   star_uu_pos, star_ww_pos, star_uu_neg, star_ww_neg
 */
IdentityReport verify_weight_identities(int n, const Params& p);

/*
 * The rank-one projection for winding number +-1 as an exact 2x2 matrix over
 * the sphere algebra:
 *   sign=+1: (1+s^2)^{-1} [[1 - z,   es], [e, s^2 + q^{-2} z]]
 *   sign=-1: (1+s^2)^{-1} [[s^2 + z, es], [e, 1 - q^{-2} z]]
 * These are the normal forms of V V* with V = (1+s^2)^{-1/2} (w_{+-1}, u_{+-1})^T,
 * with the entries identified through the level-1 weight identities.
 */
NcMat build_p1_symbolic(int sign, const Params& p);

/*
 * The parameter inversion s -> 1/s:  z -> -s^2 z', e -> s^2 e', es -> s^2 es'.
 * Maps the sphere algebra at (q, s) isomorphically onto the one at (q, 1/s);
 * applying it twice is the identity.  (The scale on e is forced by the
 * relation e* e = (1 - z)(s^2 + z): matching coefficients gives s^2, and the
 * commonly quoted scale s fails to send relations to relations.)
 */
NcPoly podles_s_inversion(const NcPoly& p);

} // namespace podles
