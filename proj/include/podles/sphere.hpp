#pragma once

#include <optional>
#include <vector>

#include "podles/ncpoly.hpp"
#include "podles/params.hpp"
#include "podles/report.hpp"
#include "podles/scalarfn.hpp"
#include "podles/shiftop.hpp"

namespace podles {

/*
 * Element of the fibre product: a pair of Toeplitz-algebra operators with
 * matching boundary symbols.  The symbol-match invariant is enforced on
 * construction, so every arithmetic result is re-certified as a member.
 */
class PodlesElem {
  public:
    PodlesElem(ShiftSeries m, ShiftSeries p, const Params& par, double tol = 1e-12);

    const ShiftSeries& minus() const { return minus_; }
    const ShiftSeries& plus() const { return plus_; }
    const Params& params() const { return params_; }
    LaurentSymbol symbol() const { return symbol_of(plus_); }

    static PodlesElem zero_elem(const Params& par);
    static PodlesElem scalar_elem(double c, const Params& par);

    PodlesElem operator+(const PodlesElem& o) const;
    PodlesElem operator-(const PodlesElem& o) const;
    PodlesElem operator*(const PodlesElem& o) const;
    PodlesElem star() const;
    PodlesElem pow(unsigned k) const;
    friend PodlesElem operator*(double c, const PodlesElem& x);

  private:
    ShiftSeries minus_, plus_;
    Params params_;
};

/* Legwise sup distance at depths 0..M; the operator-layer equality notion. */
double elem_residual(const PodlesElem& x, const PodlesElem& y, long M = 256);

struct Generators {
    PodlesElem zeta;
    PodlesElem eta;
    PodlesElem frakS; /* the isometry pair (S, S) */
};

Generators make_generators(const Params& params);

/* Homomorphic evaluation of a normal-form sphere polynomial. */
PodlesElem evaluate_poly(const NcPoly& p);

/* f(zeta) legwise; the symbol is f(0) times the identity. */
PodlesElem func_calc_zeta(const ScalarFn& f, const Params& params);

/* Defining relations, polar decomposition, shift commutation and the
 * eta-power closed form, as pointwise residuals on n <= 256. */
DiscReport verify_generator_relations(const Params& params);

/* The two quantum-disc generators, their relation, and the recovery of
 * zeta from them, on both legs. */
DiscReport quantum_disc_check(const Params& params);

struct PsiResult {
    bool member = false;
    std::optional<PodlesElem> image;
};

/* Line-bundle membership sigma(a0) = U^N sigma(a1) and the trivialization
 * map Psi_N; the image is present exactly when the pair is a member. */
PsiResult fibre_check_and_psi(const ShiftSeries& a0, const ShiftSeries& a1, long N,
                              const Params& params);

/* As above but throwing NotMemberError instead of reporting. */
PodlesElem psi_map(const ShiftSeries& a0, const ShiftSeries& a1, long N,
                   const Params& params);

class PodlesMat {
  public:
    PodlesMat(long rows, long cols, const PodlesElem& fill);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    PodlesElem& at(long i, long j) { return entries_[i * cols_ + j]; }
    const PodlesElem& at(long i, long j) const { return entries_[i * cols_ + j]; }

    static PodlesMat identity(long n, const Params& params);

    PodlesMat operator+(const PodlesMat& o) const;
    PodlesMat operator-(const PodlesMat& o) const;
    PodlesMat operator*(const PodlesMat& o) const;
    PodlesMat star_transpose() const;
    friend PodlesMat operator*(double c, const PodlesMat& x);

  private:
    long rows_, cols_;
    std::vector<PodlesElem> entries_;
};

double mat_residual(const PodlesMat& x, const PodlesMat& y, long M = 256);

}  // namespace podles
