#pragma once

#include "wix/poset.hpp"
#include "wix/series.hpp"
#include "wix/term.hpp"

namespace wix {

/// A real number with a certified absolute error bound.
struct ZetaTail {
    long double value = 0;
    long double error_bound = 0;
};

/// zeta(s) - 1 - 2^(-s) = sum_{n>=3} n^(-s), for integer s >= 2. The partial
/// sum up to N is corrected by the midpoint of the integral sandwich
///   (N+1)^(1-s)/(s-1) <= tail <= N^(1-s)/(s-1),
/// so the certified error is at most the half-width (< N^(-s)/2) plus the
/// compensated-summation slack. N is chosen so error_bound <= tol.
ZetaTail zeta_tail(int s, long double tol);

struct ZetaNumber {
    long double value = 0;
    long double error_bound = 0;
    ChainSeries source_dvector;  // the exact coefficients behind the value
};

/// sum_i (-1)^(k-i) d_i (zeta(i+1) - 1 - 2^(-(i+1))) for a chain-basis
/// vector with top index k; per-term tolerances are budgeted so the total
/// certified error stays below tol. Rejects the zero series.
ZetaNumber zeta_number_from_series(const ChainSeries& f, long double tol);

/// The same number for an arbitrary finite poset (k = |P|), through
/// from_poset. Size bound as in from_poset.
ZetaNumber poset_zeta_number(const Poset& p, long double tol, int max_size = kMapCountBound);

/// Verifies that the poset route and the series route assign the same
/// d-vector to star(p, q), D(p) and D(q) (exact comparison; the numeric
/// values then agree by construction). `tol` only sets the precision of the
/// numbers computed along the way.
bool check_transport(const Term& p, const Term& q, long double tol);

}  // namespace wix
