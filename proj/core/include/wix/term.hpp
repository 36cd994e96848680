#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wix/poset.hpp"
#include "wix/series.hpp"

namespace wix {

/// An operad word over the generators `*` (concatenation) and `D`, with
/// chain leaves, kept in associativity normal form: star nodes hold a
/// flattened list of >= 2 factors, none of which is itself a star. Terms are
/// immutable and cheap to copy (shared structure).
class Term {
public:
    enum class Kind { leaf, star, d };

    /// Leaf denoting chain(n), n >= 1. "c" in the concrete syntax is leaf(1).
    static Term leaf(int n);

    /// Star of the given factors, flattening nested stars. A single factor
    /// collapses to that factor; an empty list is rejected.
    static Term star(std::vector<Term> factors);

    static Term d(Term child);

    Kind kind() const noexcept;
    int leaf_width() const;                  // leaf only
    const std::vector<Term>& factors() const;  // star only
    const Term& child() const;               // d only

    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Grammar:  expr := factor ("*" factor)*
///           factor := "c" INT | "c" | "D" "(" expr ")" | "(" expr ")"
/// Whitespace is ignored; "c" alone means c1; "c0" and empty input are
/// rejected. Errors carry the offending input position.
Term parse_term(std::string_view text);

/// Canonical text; parse_term(print_term(t)) == t.
std::string print_term(const Term& t);

/// Leaf(n) -> chain(n), star -> concat fold, D -> d_handle.
Poset eval_poset(const Term& t);

/// Leaf(n) -> z_n, star -> star fold, D -> d_op. Agrees with
/// from_poset(eval_poset(t)) wherever the latter is in range.
ChainSeries eval_series(const Term& t);

/// Counts of the fully desugared word (every leaf(n) split into n unit
/// leaves): a word with U unit leaves has exactly U-1 binary stars.
struct TermStats {
    long leaf_units = 0;
    long d_count = 0;
    long star_count = 0;

    friend bool operator==(const TermStats&, const TermStats&) = default;
};

TermStats term_stats(const Term& t);

/// All normal-form terms over unit leaves with exactly `units` leaves and
/// `d_count` D nodes, sorted by printed form. Duplicate-free by construction.
std::vector<Term> enumerate_terms(int units, int d_count);

}  // namespace wix
