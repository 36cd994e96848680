#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wix {

/// Exact integer used for all series coefficients and counting results.
using Int = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k) with the usual conventions:
/// zero for k < 0 or k > n, one for k == 0.
Int binomial(long n, long k);

}  // namespace wix
