#pragma once

#include <map>
#include <vector>

#include "wix/bigint.hpp"
#include "wix/poset.hpp"

namespace wix {

/// A finitely supported integer vector in the chain basis {z_u}, where
/// z_u = x^u/(1-x)^(u+1) is the order series of the u-chain. Indices are
/// >= 1 and zero coefficients are never stored, so the support endpoints are
/// always meaningful. Values are immutable from the caller's point of view;
/// all arithmetic returns fresh series.
class ChainSeries {
public:
    ChainSeries() = default;  // the zero series

    const std::map<int, Int>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient at index u (zero when absent).
    Int coeff(int u) const;

    /// Smallest / largest support index. Throw std::invalid_argument on the
    /// zero series.
    int min_index() const;
    int max_index() const;

    /// Adds v at index u (u >= 1), dropping the entry if it cancels to zero.
    void add(int u, const Int& v);

    ChainSeries& operator+=(const ChainSeries& rhs);
    ChainSeries& operator-=(const ChainSeries& rhs);
    friend ChainSeries operator+(ChainSeries lhs, const ChainSeries& rhs) { return lhs += rhs; }
    friend ChainSeries operator-(ChainSeries lhs, const ChainSeries& rhs) { return lhs -= rhs; }
    friend ChainSeries operator*(const Int& c, const ChainSeries& f);
    friend bool operator==(const ChainSeries&, const ChainSeries&) = default;

private:
    std::map<int, Int> coeffs_;
};

/// z_n itself, n >= 1.
ChainSeries zeta_chain(int n);

/// Concatenation product: bilinear extension of z_k ⋆ z_m = z_{k+m}
/// (x^k/(1-x)^{k+1} · (1-x) · x^m/(1-x)^{m+1} = x^{k+m}/(1-x)^{k+m+1}).
ChainSeries star(const ChainSeries& f, const ChainSeries& g);

/// Linear extension of D(z_n) = n z_{n+2} + (n+1) z_{n+3}.
ChainSeries d_op(const ChainSeries& f);

/// Order series of chain(k) ⊔ chain(m):
///   sum_{n=0}^{k} C(m+n, k) C(k, n) z_{m+n}.
ChainSeries union_chains(int k, int m);

/// Strict order-polynomial value: sum_u d_u C(m, u), the x^m coefficient.
Int order_polynomial_value(const ChainSeries& f, int m);

/// m-th coefficient of z'_n = x/(1-x)^{n+1}, i.e. C(m+n-1, n).
Int nonstrict_chain_count(int n, int m);

/// Chain-basis expansion of an arbitrary finite poset: d_u is the u-th
/// forward difference of the strict order polynomial at 0, computed from the
/// brute-force map counts. Rejects |X| > max_size.
ChainSeries from_poset(const Poset& x, int max_size = kMapCountBound);

/// sum_u (-1)^(k-u) d_u with k the maximal support index. Rejects the zero
/// series.
Int alternating_sum(const ChainSeries& f);

/// Ehrhart numerator of the order polytope, entries h*_0..h*_deg with
/// trailing zeros trimmed.
struct HStarVector {
    std::vector<Int> entries;

    friend bool operator==(const HStarVector&, const HStarVector&) = default;
};

/// Solves h* exactly from the non-strict counts via
/// sum_m Omega(m) x^m = x·h*(x)/(1-x)^(|X|+1), then cross-checks the solve
/// with one extra Omega value; an inconsistent solve or h*_0 != 1 throws
/// std::logic_error (it would mean a counting bug, not bad input).
HStarVector hstar_from_nonstrict(const Poset& x, int max_size = kMapCountBound);

}  // namespace wix
