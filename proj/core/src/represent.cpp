#include "wix/represent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "wix/error.hpp"

namespace wix {

WixInvariants invariants_from_series(const ChainSeries& f) {
    if (f.is_zero()) throw std::invalid_argument("invariants of the zero series");
    for (const auto& [u, v] : f.coeffs())
        if (v < 0)
            throw std::invalid_argument("invariants require nonnegative coefficients");
    WixInvariants inv;
    inv.i = f.min_index();
    inv.k = f.max_index();
    inv.d = inv.k - inv.i;
    inv.m = inv.i - 2 * inv.d - 1;
    inv.leaf_units = inv.m + 1;
    if (inv.m < 0)
        throw std::invalid_argument("support endpoints admit no word: i - 2(k-i) - 1 < 0");
    return inv;
}

RepReport feasibility_check(const ChainSeries& f) {
    RepReport report;
    if (f.is_zero()) {
        report.reasons.push_back("zero series");
        return report;
    }
    for (const auto& [u, v] : f.coeffs())
        if (v < 0) {
            report.reasons.push_back("negative coefficient at z" + std::to_string(u));
            break;
        }
    if (!report.reasons.empty()) return report;

    if (f.coeff(f.min_index()) < 1)
        report.reasons.push_back("vanishing coefficient at the minimal support index");
    if (f.coeff(f.max_index()) < 1)
        report.reasons.push_back("vanishing coefficient at the maximal support index");

    const Int alt = alternating_sum(f);
    if (alt != 1)
        report.reasons.push_back("alternating sum is " + alt.str() + ", expected 1");

    const int i = f.min_index();
    const int k = f.max_index();
    const int d = k - i;
    const int m = i - 2 * d - 1;
    if (m < 0)
        report.reasons.push_back("support endpoints admit no word: i - 2(k-i) - 1 < 0");

    report.feasible = report.reasons.empty();
    if (report.feasible)
        report.invariants = WixInvariants{i, k, d, m, m + 1};
    return report;
}

namespace {

/// Support endpoints and their coefficients, computable in one tree walk:
/// leaves give (1, 1); star adds indices and multiplies coefficients; D maps
/// (i, di, k, dk) to (i+2, i*di, k+3, (k+1)*dk). All quantities stay positive
/// so no cancellation can spoil the shortcut.
struct Endpoints {
    int i = 0, k = 0;
    Int di, dk;
};

Endpoints endpoints(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::leaf: {
            const int n = t.leaf_width();
            return {n, n, 1, 1};
        }
        case Term::Kind::d: {
            Endpoints e = endpoints(t.child());
            return {e.i + 2, e.k + 3, Int(e.i) * e.di, Int(e.k + 1) * e.dk};
        }
        case Term::Kind::star: {
            Endpoints acc{0, 0, 1, 1};
            for (const Term& f : t.factors()) {
                Endpoints e = endpoints(f);
                acc.i += e.i;
                acc.k += e.k;
                acc.di *= e.di;
                acc.dk *= e.dk;
            }
            return acc;
        }
    }
    throw std::logic_error("unreachable term kind");
}

/// Candidate skeletons: normal-form terms whose star factor lists are sorted
/// by printed form, i.e. one representative per orbit of the series-level
/// commutativity of star. Every ordered term is an ordering of exactly one
/// skeleton, and all orderings share its order series.
class SkeletonEnumerator {
public:
    const std::vector<Term>& factors(int units, int d) {
        auto key = std::pair(units, d);
        if (auto it = factor_cache_.find(key); it != factor_cache_.end()) return it->second;
        std::vector<Term> out;
        if (units == 1 && d == 0) out.push_back(Term::leaf(1));
        if (d >= 1)
            for (const Term& t : terms(units, d - 1)) out.push_back(Term::d(t));
        return factor_cache_.emplace(key, std::move(out)).first->second;
    }

    const std::vector<Term>& terms(int units, int d) {
        auto key = std::pair(units, d);
        if (auto it = term_cache_.find(key); it != term_cache_.end()) return it->second;
        std::vector<Term> out = factors(units, d);
        std::vector<Term> acc;
        grow(units, d, "", acc, out);
        return term_cache_.emplace(key, std::move(out)).first->second;
    }

private:
    void grow(int units_left, int d_left, const std::string& last_key,
              std::vector<Term>& acc, std::vector<Term>& out) {
        if (units_left == 0) {
            if (d_left == 0 && acc.size() >= 2) out.push_back(Term::star(acc));
            return;
        }
        for (int u = 1; u <= units_left; ++u)
            for (int dd = 0; dd <= d_left; ++dd) {
                if (u == units_left && dd != d_left) continue;
                if (u == units_left && acc.empty()) continue;
                for (const Term& f : factors(u, dd)) {
                    std::string key = print_term(f);
                    if (key < last_key) continue;  // multisets as sorted sequences
                    acc.push_back(f);
                    grow(units_left - u, d_left - dd, key, acc, out);
                    acc.pop_back();
                }
            }
    }

    std::map<std::pair<int, int>, std::vector<Term>> factor_cache_;
    std::map<std::pair<int, int>, std::vector<Term>> term_cache_;
};

/// All ordered terms with the given skeleton: distinct arrangements of each
/// star's factor multiset, with every slot independently expanded.
std::vector<Term> expansions(const Term& skeleton) {
    switch (skeleton.kind()) {
        case Term::Kind::leaf:
            return {skeleton};
        case Term::Kind::d: {
            std::vector<Term> out;
            for (Term& t : expansions(skeleton.child())) out.push_back(Term::d(std::move(t)));
            return out;
        }
        case Term::Kind::star: {
            const auto& factor_list = skeleton.factors();
            // Group identical skeleton factors (the list is sorted).
            std::vector<std::vector<Term>> group_expansions;
            std::vector<int> arrangement;
            for (const Term& f : factor_list) {
                if (!arrangement.empty() && factor_list[arrangement.size() - 1] == f) {
                    arrangement.push_back(arrangement.back());
                    continue;
                }
                group_expansions.push_back(expansions(f));
                arrangement.push_back(static_cast<int>(group_expansions.size()) - 1);
            }

            std::vector<Term> out;
            std::vector<int> perm = arrangement;  // sorted group ids
            do {
                std::vector<Term> slots;
                auto fill = [&](auto&& self, std::size_t slot) -> void {
                    if (slot == perm.size()) {
                        out.push_back(Term::star(slots));
                        return;
                    }
                    for (const Term& choice : group_expansions[perm[slot]]) {
                        slots.push_back(choice);
                        self(self, slot + 1);
                        slots.pop_back();
                    }
                };
                fill(fill, 0);
            } while (std::next_permutation(perm.begin(), perm.end()));
            return out;
        }
    }
    throw std::logic_error("unreachable term kind");
}

}  // namespace

RepReport represent(const ChainSeries& f, const RepresentOptions& options) {
    RepReport report = feasibility_check(f);
    if (!report.feasible) return report;

    const WixInvariants inv = *report.invariants;
    if (inv.leaf_units > options.budget.max_units || inv.d > options.budget.max_d)
        throw budget_error("represent: invariants (units " + std::to_string(inv.leaf_units) +
                           ", d " + std::to_string(inv.d) + ") exceed budget (units " +
                           std::to_string(options.budget.max_units) + ", d " +
                           std::to_string(options.budget.max_d) + ")");

    const Int want_di = f.coeff(inv.i);
    const Int want_dk = f.coeff(inv.k);

    SkeletonEnumerator skeletons;
    std::vector<Term> ordered_matches;
    for (const Term& candidate : skeletons.terms(inv.leaf_units, inv.d)) {
        if (options.prune) {
            const Endpoints e = endpoints(candidate);
            if (e.i != inv.i || e.k != inv.k || e.di != want_di || e.dk != want_dk) continue;
        }
        if (eval_series(candidate) != f) continue;
        for (Term& t : expansions(candidate)) ordered_matches.push_back(std::move(t));
    }

    std::sort(ordered_matches.begin(), ordered_matches.end(),
              [](const Term& a, const Term& b) { return print_term(a) < print_term(b); });

    // One witness per isomorphism class, keyed to the least printed term.
    // Fingerprints route the candidates; is_isomorphic settles each bucket.
    std::map<std::uint64_t, std::vector<std::size_t>> buckets;
    for (const Term& t : ordered_matches) {
        Poset p = eval_poset(t);
        std::vector<std::size_t>& bucket = buckets[iso_fingerprint(p)];
        bool known = false;
        for (std::size_t w : bucket)
            if (report.witnesses[w].poset.size() == p.size() &&
                is_isomorphic(report.witnesses[w].poset, p, p.size())) {
                known = true;
                break;
            }
        if (!known) {
            bucket.push_back(report.witnesses.size());
            report.witnesses.push_back(Witness{t, std::move(p)});
        }
    }
    return report;
}

}  // namespace wix
