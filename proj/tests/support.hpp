#pragma once

// Test-side oracles, deliberately independent of the library kernels they
// check: map counting by raw enumeration over all m^n functions (the library
// backtracks along a linear extension), term generation from raw binary
// trees (the library composes flattened normal forms directly), and an
// exhaustive catalog of small posets.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wix/poset.hpp"
#include "wix/term.hpp"

namespace wixtest {

inline long raw_count_maps(const wix::Poset& p, int m, bool strict) {
    if (m <= 0) return 0;
    const int n = p.size();
    long count = 0;
    std::vector<int> f(n, 1);
    while (true) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (p.less(a, b) && !(strict ? f[a] < f[b] : f[a] <= f[b])) ok = false;
        if (ok) ++count;
        int i = 0;
        while (i < n && f[i] == m) f[i++] = 1;
        if (i == n) break;
        ++f[i];
    }
    return count;
}

/// Every strict partial order on {0..n-1}, as explicit relation lists.
inline std::vector<wix::Poset> all_posets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) pairs.emplace_back(a, b);

    std::vector<wix::Poset> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1u) rel[pairs[i].first][pairs[i].second] = 1;
        bool valid = true;
        for (int a = 0; a < n && valid; ++a)
            for (int b = 0; b < n && valid; ++b) {
                if (rel[a][b] && rel[b][a]) valid = false;
                if (!rel[a][b]) continue;
                for (int c = 0; c < n && valid; ++c)
                    if (rel[b][c] && !rel[a][c]) valid = false;
            }
        if (!valid) continue;
        std::vector<std::pair<int, int>> chosen;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1u) chosen.push_back(pairs[i]);
        out.push_back(wix::Poset::from_pairs(n, chosen));
    }
    return out;
}

/// All binary star/D trees with the given unit-leaf and D counts. Building
/// through Term::star flattens to normal form, so deduplicating the printed
/// forms yields the normal-form language the direct enumerator must match.
inline void binary_trees(int units, int d, std::vector<wix::Term>& out) {
    if (units == 1 && d == 0) {
        out.push_back(wix::Term::leaf(1));
        return;
    }
    if (d >= 1) {
        std::vector<wix::Term> inner;
        binary_trees(units, d - 1, inner);
        for (wix::Term& t : inner) out.push_back(wix::Term::d(std::move(t)));
    }
    for (int lu = 1; lu < units; ++lu)
        for (int ld = 0; ld <= d; ++ld) {
            std::vector<wix::Term> left, right;
            binary_trees(lu, ld, left);
            binary_trees(units - lu, d - ld, right);
            for (const wix::Term& l : left)
                for (const wix::Term& r : right) out.push_back(wix::Term::star({l, r}));
        }
}

inline std::set<std::string> normalized_binary_tree_language(int units, int d) {
    std::vector<wix::Term> trees;
    binary_trees(units, d, trees);
    std::set<std::string> language;
    for (const wix::Term& t : trees) language.insert(wix::print_term(t));
    return language;
}

/// Random normal-form terms for round-trip properties.
class TermGen {
public:
    explicit TermGen(std::uint64_t seed) : rng_(seed) {}

    wix::Term operator()() { return gen_term(3); }

private:
    wix::Term gen_factor(int depth) {
        const int kind = pick(depth > 0 ? 2 : 0);
        if (kind == 2) return wix::Term::d(gen_term(depth - 1));
        if (kind == 1) return wix::Term::leaf(1 + static_cast<int>(rng_() % 9));
        return wix::Term::leaf(1);
    }

    wix::Term gen_term(int depth) {
        if (depth > 0 && rng_() % 2 == 0) {
            const int k = 2 + static_cast<int>(rng_() % 3);
            std::vector<wix::Term> factors;
            for (int i = 0; i < k; ++i) factors.push_back(gen_factor(depth - 1));
            return wix::Term::star(std::move(factors));
        }
        return gen_factor(depth);
    }

    int pick(int hi) { return static_cast<int>(rng_() % static_cast<unsigned>(hi + 1)); }

    std::mt19937_64 rng_;
};

}  // namespace wixtest
