#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wix/series.hpp"
#include "wix/term.hpp"

namespace wix {

/// The invariants a Wixarika order series pins down: support endpoints i..k,
/// d = k - i (D count, also the first Betti number of the Hasse diagram),
/// m = i - 2d - 1 (star count of the desugared word), and m + 1 unit leaves.
struct WixInvariants {
    int i = 0;
    int k = 0;
    int d = 0;
    int m = 0;
    int leaf_units = 0;

    friend bool operator==(const WixInvariants&, const WixInvariants&) = default;
};

/// Computes the invariant tuple from the support endpoints. Rejects the zero
/// series, negative coefficients, and series with m < 0.
WixInvariants invariants_from_series(const ChainSeries& f);

struct Witness {
    Term term;
    Poset poset;
};

struct RepReport {
    bool feasible = false;
    std::vector<std::string> reasons;          // failed checks, empty when feasible
    std::optional<WixInvariants> invariants;   // set when feasible
    std::vector<Witness> witnesses;            // sorted by printed term
};

/// Necessary conditions only (no search): nonnegative integer coefficients,
/// nonzero support endpoints, alternating sum 1, m >= 0. Failures are data.
RepReport feasibility_check(const ChainSeries& f);

struct SearchBudget {
    int max_units = 8;
    int max_d = 4;
};

struct RepresentOptions {
    SearchBudget budget{};
    /// When set, candidates whose cheap endpoint coefficients already
    /// disagree with the query are discarded before full evaluation. Results
    /// are identical either way; this only changes the work done.
    bool prune = true;
};

/// Decides whether f is the order series of a Wixarika poset and, in the
/// positive case, returns every representing poset up to isomorphism (with a
/// canonical term per class). The search is exhaustive over normal-form
/// words with the invariant-determined unit/D counts; star factors are
/// enumerated as multisets first (the series does not depend on factor
/// order) and orderings are expanded only for series matches. Throws
/// budget_error when the invariants exceed the budget.
RepReport represent(const ChainSeries& f, const RepresentOptions& options = {});

}  // namespace wix
