#include "podles/pairing.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>

#include "podles/errors.hpp"
#include "podles/shiftop.hpp"

namespace podles {

PairingReport pair_rho(const PodlesMat& p, double tol) {
    if (p.rows() != p.cols())
        throw IncompatibleOperandsError("trace pairing needs a square matrix");
    double value = 0.0, bound = 0.0;
    bool heuristic = false;
    double per_entry = tol / static_cast<double>(p.rows());
    for (long i = 0; i < p.rows(); ++i) {
        ShiftSeries d = p.at(i, i).plus() - p.at(i, i).minus();
        TraceResult t = trace_diag(d, per_entry);
        value += t.value;
        bound += t.bound;
        heuristic = heuristic || t.heuristic;
    }
    PairingReport r;
    r.value = value;
    r.tail_bound = bound;
    r.rounded = std::llround(value);
    r.gap = std::abs(value - static_cast<double>(r.rounded));
    r.heuristic_tail = heuristic;
    r.certified = !heuristic && (r.gap + bound < 0.5);
    return r;
}

PairingReport pair_rho(const BundleProjection& p, double tol) { return pair_rho(p.mat, tol); }

PairingReport pair_eps(const PodlesMat& p) {
    if (p.rows() != p.cols())
        throw IncompatibleOperandsError("boundary pairing needs a square matrix");
    std::vector<LaurentSymbol> syms;
    long deg = 0;
    for (long i = 0; i < p.rows(); ++i) {
        syms.push_back(p.at(i, i).symbol());
        deg = std::max(deg, syms.back().max_degree());
    }
    long R = deg + 2;
    std::complex<double> windowed = 0.0, direct = 0.0;
    for (const auto& sym : syms) {
        WindowMat d = pi_window(sym, PiRep::plus, R) - pi_window(sym, PiRep::minus, R);
        windowed += d.trace();
        direct += sym.coeff(0);
    }
    if (std::abs(windowed - direct) > 1e-12 * (1.0 + std::abs(windowed)))
        throw Error("boundary pairing cross-check failed");
    if (std::abs(windowed.imag()) > 1e-12)
        throw Error("boundary pairing is not real");
    PairingReport r;
    r.value = windowed.real();
    r.tail_bound = 0.0;
    r.rounded = std::llround(r.value);
    r.gap = std::abs(r.value - static_cast<double>(r.rounded));
    r.certified = r.gap < 0.5;
    return r;
}

PairingReport pair_eps(const BundleProjection& p) { return pair_eps(p.mat); }

dense::Matrix truncate_leg(const PodlesMat& p, bool plus_leg, long M) {
    dense::Matrix out(p.rows() * M, p.cols() * M);
    for (long i = 0; i < p.rows(); ++i)
        for (long j = 0; j < p.cols(); ++j) {
            const ShiftSeries& leg = plus_leg ? p.at(i, j).plus() : p.at(i, j).minus();
            dense::Matrix blk = truncate(leg, M);
            for (long r = 0; r < M; ++r)
                for (long c = 0; c < M; ++c)
                    out.at(i * M + r, j * M + c) = blk.at(r, c);
        }
    return out;
}

FredholmIndex fredholm_index_direct(const PodlesMat& p, long M) {
    if (M < 8)
        throw InvalidParamsError("truncation depth must be at least 8");
    if (p.rows() != p.cols())
        throw IncompatibleOperandsError("index needs a square matrix");

    /* Every band must have settled by half depth, or the finite ranks say
     * nothing about the operator. */
    for (long i = 0; i < p.rows(); ++i)
        for (long j = 0; j < p.cols(); ++j)
            for (const ShiftSeries* leg : {&p.at(i, j).minus(), &p.at(i, j).plus()})
                for (const auto& [k, d] : leg->bands()) {
                    if (!d.limit)
                        throw WindowTooSmallError("band has no declared limit");
                    bool cert_ok = d.tail && d.tail->C * std::pow(d.tail->r, M / 2.0) <= 1e-6;
                    double dev = std::max(std::abs(d(M / 2) - *d.limit),
                                          std::abs(d(3 * M / 4) - *d.limit));
                    if (!cert_ok && dev > 1e-6)
                        throw WindowTooSmallError(
                            "band not settled at half the truncation depth");
                }

    dense::Matrix Pm = truncate_leg(p, false, M);
    dense::Matrix Pp = truncate_leg(p, true, M);
    const double thr = 1e-8, guard = 8.0;
    long rm = dense::rank_with_guard(dense::singular_values(Pm), thr, guard);
    long rp = dense::rank_with_guard(dense::singular_values(Pp), thr, guard);
    long rmp = dense::rank_with_guard(dense::singular_values(dense::matmul(Pm, Pp)), thr, guard);

    FredholmIndex fi;
    fi.kernel_dim = rp - rmp;
    fi.cokernel_dim = rm - rmp;
    fi.index = fi.kernel_dim - fi.cokernel_dim;
    return fi;
}

FredholmIndex fredholm_index_direct(const BundleProjection& p, long M) {
    return fredholm_index_direct(p.mat, M);
}

}  // namespace podles
