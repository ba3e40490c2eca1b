#pragma once

#include "podles/report.hpp"
#include "podles/scalarfn.hpp"
#include "podles/sphere.hpp"

namespace podles {

/* A represented line-bundle projection over the sphere algebra.
 * form: 'E' rank-one gluing (1x1), 'Q' Bott-type (2x2), 'P' the
 * spin-half representative (2x2), 'G' the compact-corner generator. */
struct BundleProjection {
    int N = 0;
    char form = 'E';
    PodlesMat mat;
};

BundleProjection build_E(int N, const Params& params);
BundleProjection build_G(const Params& params);

/* The weight polynomials f_n(t) = prod(1 - q^{2k} t) and
 * g_n(t) = prod(s^2 + q^{2k} t), k < n, certified on the spectrum hull. */
struct FgFunctions {
    ScalarFn f, g, fg, sum;
};

FgFunctions build_fg(int n, const Params& params);

BundleProjection build_Q(int N, const Params& params);

/* The 1x2 partial isometry with Y* Y = Q_N and Y Y* = E_N. */
PodlesMat build_Y(int N, const Params& params);

BundleProjection build_P1_matrix(int sign, const Params& params);

BundleReport verify_bundle_identities(int N, const Params& params);

}  // namespace podles
