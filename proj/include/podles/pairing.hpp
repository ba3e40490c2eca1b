#pragma once

#include "podles/bundles.hpp"
#include "podles/dense.hpp"
#include "podles/report.hpp"

namespace podles {

/* Pairing with the trace cyclic cocycle: sum over the matrix diagonal of
 * tr(plus leg - minus leg), each entry summed with a certified tail. */
PairingReport pair_rho(const PodlesMat& p, double tol = 1e-6);
PairingReport pair_rho(const BundleProjection& p, double tol = 1e-6);

/* Pairing with the boundary cocycle: the winding-free rank term, computed
 * both as a window trace of the two circle representations and directly
 * from the constant symbol coefficients, cross-checked. */
PairingReport pair_eps(const PodlesMat& p);
PairingReport pair_eps(const BundleProjection& p);

struct FredholmIndex {
    long index = 0;
    long kernel_dim = 0;
    long cokernel_dim = 0;
};

/* Dense truncation of one leg of a matrix of elements, M rows per block. */
dense::Matrix truncate_leg(const PodlesMat& p, bool plus_leg, long M);

/* Index of the operator compressed between the two truncated legs,
 * computed from three guarded numerical ranks. */
FredholmIndex fredholm_index_direct(const PodlesMat& p, long M = 256);
FredholmIndex fredholm_index_direct(const BundleProjection& p, long M = 256);

}  // namespace podles
