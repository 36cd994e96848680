#include "wix/zeta.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wix {

namespace {

constexpr long double kEps = std::numeric_limits<long double>::epsilon();
constexpr long long kMaxTerms = 200'000'000;

// Internal bound for the poset-route oracle inside check_transport: the D
// routes build |P| + 3 points, and acceptance pins |P| + |Q| <= 9.
constexpr int kTransportSizeBound = 12;

long double pow_int(long double base, int exp) {
    long double result = 1.0L;
    long double square = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) result *= square;
        square *= square;
    }
    return result;
}

struct KahanSum {
    long double sum = 0.0L;
    long double carry = 0.0L;

    void add(long double x) {
        const long double y = x - carry;
        const long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

ZetaTail zeta_tail(int s, long double tol) {
    if (s < 2) throw std::invalid_argument("zeta_tail requires s >= 2");
    if (!(tol > 0)) throw std::invalid_argument("zeta_tail requires tol > 0");

    // Half-width of the integral sandwich after N terms is below N^(-s)/2;
    // aim it at 0.45*tol and leave the rest for rounding slack.
    long double n_target = std::pow(1.0L / (0.9L * tol), 1.0L / s);
    long long cutoff = 3;
    if (n_target > static_cast<long double>(kMaxTerms)) {
        throw std::invalid_argument("zeta_tail: tolerance " + std::to_string(static_cast<double>(tol)) +
                                    " needs more than " + std::to_string(kMaxTerms) + " terms");
    }
    if (n_target > 3.0L) cutoff = static_cast<long long>(n_target) + 1;

    KahanSum partial;  // ascending magnitude
    for (long long n = cutoff; n >= 3; --n) partial.add(1.0L / pow_int(static_cast<long double>(n), s));

    const long double upper = 1.0L / pow_int(static_cast<long double>(cutoff), s - 1) / (s - 1);
    const long double lower = 1.0L / pow_int(static_cast<long double>(cutoff + 1), s - 1) / (s - 1);
    const long double tail_mid = (upper + lower) / 2;
    const long double half_width = (upper - lower) / 2;

    ZetaTail out;
    out.value = partial.sum + tail_mid;
    out.error_bound = half_width + 32 * kEps * (partial.sum + tail_mid);
    if (out.error_bound > tol)
        throw std::invalid_argument("zeta_tail: tolerance unattainable at this precision");
    return out;
}

ZetaNumber zeta_number_from_series(const ChainSeries& f, long double tol) {
    if (f.is_zero()) throw std::invalid_argument("zeta number of the zero series");
    if (!(tol > 0)) throw std::invalid_argument("zeta number requires tol > 0");

    const int k = f.max_index();
    const std::size_t nnz = f.coeffs().size();

    KahanSum value;
    long double tail_error = 0.0L;
    long double magnitude = 0.0L;
    for (const auto& [i, d] : f.coeffs()) {
        const long double weight = std::abs(d.convert_to<long double>());
        const long double per_term = tol / (2.0L * nnz * std::max(weight, 1.0L));
        const ZetaTail tail = zeta_tail(i + 1, per_term);
        const long double signed_coeff =
            ((k - i) % 2 == 0) ? d.convert_to<long double>() : -d.convert_to<long double>();
        value.add(signed_coeff * tail.value);
        tail_error += weight * tail.error_bound;
        magnitude += weight * tail.value;
    }

    ZetaNumber out;
    out.value = value.sum;
    out.error_bound = tail_error + 32 * kEps * (nnz + 1) * magnitude;
    out.source_dvector = f;
    if (out.error_bound > tol)
        throw std::invalid_argument("zeta number: tolerance unattainable at this precision");
    return out;
}

ZetaNumber poset_zeta_number(const Poset& p, long double tol, int max_size) {
    return zeta_number_from_series(from_poset(p, max_size), tol);
}

bool check_transport(const Term& p, const Term& q, long double tol) {
    const Term star_term = Term::star({p, q});
    const ChainSeries series_route = star(eval_series(p), eval_series(q));
    const Poset star_poset = eval_poset(star_term);
    if (star_poset.size() > kTransportSizeBound)
        throw std::invalid_argument("check_transport: combined size " +
                                    std::to_string(star_poset.size()) + " exceeds bound " +
                                    std::to_string(kTransportSizeBound));
    const ChainSeries poset_route = from_poset(star_poset, kTransportSizeBound);
    if (series_route != poset_route) return false;

    // D routes reach |P| + 3 points, still admissible once the star bound holds.
    for (const Term* t : {&p, &q}) {
        const ChainSeries via_series = d_op(eval_series(*t));
        const Poset handled = d_handle(eval_poset(*t));
        if (via_series != from_poset(handled, kTransportSizeBound + 3)) return false;
    }

    // The numbers inherit equality from the d-vectors; compute them anyway so
    // a tolerance violation cannot hide here.
    const ZetaNumber a = zeta_number_from_series(series_route, tol);
    const ZetaNumber b = zeta_number_from_series(poset_route, tol);
    return a.value == b.value && a.error_bound == b.error_bound;
}

}  // namespace wix
