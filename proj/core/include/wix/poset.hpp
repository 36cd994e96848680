#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wix/bigint.hpp"

namespace wix {

/// Default size caps for the brute-force kernels. They exist to keep the
/// oracle runtimes small; every function taking one accepts an explicit
/// override.
inline constexpr int kMapCountBound = 10;
inline constexpr int kLinearExtensionBound = 10;
inline constexpr int kIsomorphismBound = 12;

/// A finite strict partial order on elements 0..size-1. The relation is kept
/// transitively closed; irreflexivity and antisymmetry are enforced at every
/// construction. Immutable after construction.
class Poset {
public:
    /// The total order on n >= 1 elements.
    static Poset chain(int n);

    /// Rebuilds a poset from cover (or any generating) pairs; the transitive
    /// closure is recomputed and validated. Throws std::invalid_argument on
    /// out-of-range indices, loops, or cycles.
    static Poset from_pairs(int size, std::span<const std::pair<int, int>> pairs);

    int size() const noexcept { return size_; }
    bool less(int a, int b) const { return less_[static_cast<std::size_t>(a) * size_ + b] != 0; }

    /// All pairs (a, b) with a < b, lexicographically sorted.
    std::vector<std::pair<int, int>> relation_pairs() const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    friend Poset concat(const Poset&, const Poset&);
    friend Poset disjoint_union(const Poset&, const Poset&);
    friend Poset lex_sum(const Poset&, std::span<const Poset>);

    Poset(int size, std::vector<unsigned char> less);
    void validate() const;

    int size_ = 0;
    std::vector<unsigned char> less_;  // row-major size*size strict-order matrix
};

Poset chain(int n);
Poset concat(const Poset& x, const Poset& y);
Poset disjoint_union(const Poset& x, const Poset& y);

/// D(X) = chain(1) * (chain(1) ⊔ X) * chain(1): new minimum, new maximum,
/// and one handle element between them. Element order: x0, handle, X, x1.
Poset d_handle(const Poset& x);

/// Replaces the i-th point of `base` by blocks[i]; inside a block the block
/// order applies, across blocks the base order. Requires one block per point.
Poset lex_sum(const Poset& base, std::span<const Poset> blocks);

/// Number of strict order-preserving maps X -> {1..m}  (a < b implies
/// f(a) < f(b)), by backtracking along a linear extension. Exact.
Int count_strict_maps(const Poset& x, int m);

/// Non-strict variant: a < b implies f(a) <= f(b).
Int count_nonstrict_maps(const Poset& x, int m);

/// Number of order-preserving bijections X -> chain(|X|), by dynamic
/// programming over down-sets. Rejects |X| > max_size.
Int count_linear_extensions(const Poset& x, int max_size = kLinearExtensionBound);

struct HasseData {
    std::vector<std::pair<int, int>> covers;  // sorted
    int components = 0;                       // of the undirected cover graph
    int betti = 0;                            // covers - size + components
};

HasseData hasse(const Poset& x);

/// Maximum cardinality of a totally ordered subset.
int longest_chain(const Poset& x);

/// Order-isomorphism test by invariant refinement plus backtracking bijection
/// search. Rejects sizes above max_size.
bool is_isomorphic(const Poset& x, const Poset& y, int max_size = kIsomorphismBound);

/// Label-invariant hash: isomorphic posets always collide; unequal values
/// certify non-isomorphism. Used to route candidates before the exact check,
/// which stays the final authority inside a bucket.
std::uint64_t iso_fingerprint(const Poset& x);

}  // namespace wix
