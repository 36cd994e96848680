#pragma once

#include <string>
#include <string_view>

#include "wix/poset.hpp"
#include "wix/represent.hpp"
#include "wix/series.hpp"

namespace wix {

/// "882*z16 + 7995*z17 + ..." with ascending indices; unit coefficients drop
/// the "1*"; the zero series renders as "0".
std::string series_to_text(const ChainSeries& f);

/// Parses the text form (whitespace-insensitive, e.g. "z3+2*z4").
ChainSeries series_from_text(std::string_view text);

/// {"coeffs": {"16": "882", ...}} with decimal-string values.
std::string series_to_json(const ChainSeries& f);
ChainSeries series_from_json(std::string_view json);

/// Accepts either the JSON or the text form (sniffed on the first byte).
ChainSeries series_from_any(std::string_view input);

/// {"size": n, "covers": [[a,b], ...]}; the closure is recomputed on load.
std::string poset_to_json(const Poset& p);
Poset poset_from_json(std::string_view json);

/// DOT digraph of the cover relation, ranked left to right, nodes named by
/// element index.
std::string poset_to_dot(const Poset& p);

std::string report_to_json(const RepReport& report);

}  // namespace wix
