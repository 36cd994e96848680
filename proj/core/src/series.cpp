#include "wix/series.hpp"

#include <stdexcept>
#include <string>

namespace wix {

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long j = 1; j <= k; ++j) {
        result *= n - k + j;
        result /= j;  // exact: result is C(n-k+j, j) after this step
    }
    return result;
}

Int ChainSeries::coeff(int u) const {
    auto it = coeffs_.find(u);
    return it == coeffs_.end() ? Int(0) : it->second;
}

int ChainSeries::min_index() const {
    if (coeffs_.empty()) throw std::invalid_argument("zero series has no support");
    return coeffs_.begin()->first;
}

int ChainSeries::max_index() const {
    if (coeffs_.empty()) throw std::invalid_argument("zero series has no support");
    return coeffs_.rbegin()->first;
}

void ChainSeries::add(int u, const Int& v) {
    if (u < 1) throw std::invalid_argument("chain-basis index must be >= 1");
    if (v == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(u, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) coeffs_.erase(it);
    }
}

ChainSeries& ChainSeries::operator+=(const ChainSeries& rhs) {
    for (const auto& [u, v] : rhs.coeffs_) add(u, v);
    return *this;
}

ChainSeries& ChainSeries::operator-=(const ChainSeries& rhs) {
    for (const auto& [u, v] : rhs.coeffs_) add(u, -v);
    return *this;
}

ChainSeries operator*(const Int& c, const ChainSeries& f) {
    ChainSeries out;
    if (c == 0) return out;
    for (const auto& [u, v] : f.coeffs_) out.add(u, c * v);
    return out;
}

ChainSeries zeta_chain(int n) {
    if (n < 1) throw std::invalid_argument("zeta_chain(n) requires n >= 1");
    ChainSeries f;
    f.add(n, 1);
    return f;
}

ChainSeries star(const ChainSeries& f, const ChainSeries& g) {
    ChainSeries out;
    for (const auto& [a, x] : f.coeffs())
        for (const auto& [b, y] : g.coeffs()) out.add(a + b, x * y);
    return out;
}

ChainSeries d_op(const ChainSeries& f) {
    ChainSeries out;
    for (const auto& [n, c] : f.coeffs()) {
        out.add(n + 2, Int(n) * c);
        out.add(n + 3, Int(n + 1) * c);
    }
    return out;
}

ChainSeries union_chains(int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("union_chains requires k, m >= 1");
    ChainSeries out;
    for (int n = 0; n <= k; ++n) out.add(m + n, binomial(m + n, k) * binomial(k, n));
    return out;
}

Int order_polynomial_value(const ChainSeries& f, int m) {
    if (m < 0) throw std::invalid_argument("order polynomial argument must be >= 0");
    Int total = 0;
    for (const auto& [u, d] : f.coeffs()) total += d * binomial(m, u);
    return total;
}

Int nonstrict_chain_count(int n, int m) {
    if (n < 1) throw std::invalid_argument("nonstrict_chain_count requires n >= 1");
    if (m < 0) throw std::invalid_argument("nonstrict_chain_count requires m >= 0");
    return binomial(m + n - 1, n);
}

ChainSeries from_poset(const Poset& x, int max_size) {
    const int n = x.size();
    if (n > max_size)
        throw std::invalid_argument("from_poset: size " + std::to_string(n) +
                                    " exceeds bound " + std::to_string(max_size));
    std::vector<Int> omega(n + 1);
    for (int m = 0; m <= n; ++m) omega[m] = count_strict_maps(x, m);

    // d_u is the u-th forward difference of the strict order polynomial at 0.
    ChainSeries f;
    for (int u = 1; u <= n; ++u) {
        Int d = 0;
        for (int j = 0; j <= u; ++j) {
            Int term = binomial(u, j) * omega[j];
            d += ((u - j) % 2 == 0) ? term : -term;
        }
        if (d < 0) throw std::logic_error("from_poset: negative chain-basis coefficient");
        f.add(u, d);
    }
    if (f.is_zero() || f.coeff(n) < 1)
        throw std::logic_error("from_poset: vanishing leading coefficient");
    return f;
}

Int alternating_sum(const ChainSeries& f) {
    if (f.is_zero()) throw std::invalid_argument("alternating_sum of the zero series");
    const int k = f.max_index();
    Int total = 0;
    for (const auto& [u, d] : f.coeffs()) total += ((k - u) % 2 == 0) ? d : -d;
    return total;
}

HStarVector hstar_from_nonstrict(const Poset& x, int max_size) {
    const int n = x.size();
    if (n > max_size)
        throw std::invalid_argument("hstar_from_nonstrict: size " + std::to_string(n) +
                                    " exceeds bound " + std::to_string(max_size));
    std::vector<Int> omega(n + 3);  // omega[m] = Omega(m), omega[0] = 0
    for (int m = 1; m <= n + 2; ++m) omega[m] = count_nonstrict_maps(x, m);

    // h*_j = sum_t (-1)^t C(n+1, t) Omega(j+1-t); degree <= n, and the
    // coefficient at j = n+1 must vanish or the counts are inconsistent.
    auto coefficient = [&](int j) {
        Int h = 0;
        for (int t = 0; t <= j + 1 && t <= n + 1; ++t) {
            if (j + 1 - t < 1) break;
            Int term = binomial(n + 1, t) * omega[j + 1 - t];
            h += (t % 2 == 0) ? term : -term;
        }
        return h;
    };

    HStarVector hstar;
    for (int j = 0; j <= n; ++j) hstar.entries.push_back(coefficient(j));
    if (coefficient(n + 1) != 0)
        throw std::logic_error("hstar_from_nonstrict: inconsistent solve");
    if (hstar.entries.empty() || hstar.entries.front() != 1)
        throw std::logic_error("hstar_from_nonstrict: h*_0 != 1");
    while (!hstar.entries.empty() && hstar.entries.back() == 0) hstar.entries.pop_back();
    return hstar;
}

}  // namespace wix
