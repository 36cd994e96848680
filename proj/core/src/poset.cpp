#include "wix/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wix {

namespace {

std::size_t cell(int n, int a, int b) {
    return static_cast<std::size_t>(a) * n + b;
}

void close_transitively(int n, std::vector<unsigned char>& less) {
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a) {
            if (!less[cell(n, a, k)]) continue;
            for (int b = 0; b < n; ++b)
                if (less[cell(n, k, b)]) less[cell(n, a, b)] = 1;
        }
}

/// Any topological order of the elements (minimal available index first).
std::vector<int> topological_order(const Poset& x) {
    const int n = x.size();
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> placed(n, 0);
    for (int step = 0; step < n; ++step) {
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            bool ready = true;
            for (int u = 0; u < n && ready; ++u)
                if (!placed[u] && x.less(u, v)) ready = false;
            if (ready) {
                placed[v] = 1;
                order.push_back(v);
                break;
            }
        }
    }
    return order;
}

/// Backtracking map counter shared by the strict and non-strict oracles.
/// Elements are assigned along a linear extension, so only already-assigned
/// predecessors constrain each choice.
Int count_maps(const Poset& x, int m, bool strict) {
    if (m <= 0) return x.size() == 0 ? Int(1) : Int(0);
    const int n = x.size();
    const std::vector<int> order = topological_order(x);
    std::vector<std::vector<int>> preds(n);  // positions in `order`
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (x.less(order[j], order[i])) preds[i].push_back(j);

    unsigned long long count = 0;
    std::vector<int> value(n, 0);
    auto assign = [&](auto&& self, int i) -> void {
        if (i == n) {
            ++count;
            return;
        }
        int low = 1;
        for (int j : preds[i]) {
            int bound = strict ? value[j] + 1 : value[j];
            low = std::max(low, bound);
        }
        for (int v = low; v <= m; ++v) {
            value[i] = v;
            self(self, i + 1);
        }
    };
    assign(assign, 0);
    return Int(count);
}

}  // namespace

// Compositions only ever combine closed relations in ways that stay closed;
// full validation runs on the untrusted from_pairs path (and in debug builds).
Poset::Poset(int size, std::vector<unsigned char> less)
    : size_(size), less_(std::move(less)) {
#ifndef NDEBUG
    validate();
#endif
    if (size_ < 1) throw std::invalid_argument("poset must have at least one element");
}

void Poset::validate() const {
    if (size_ < 1) throw std::invalid_argument("poset must have at least one element");
    const int n = size_;
    for (int a = 0; a < n; ++a) {
        if (less(a, a)) throw std::invalid_argument("strict order cannot be reflexive");
        for (int b = 0; b < n; ++b) {
            if (less(a, b) && less(b, a))
                throw std::invalid_argument("strict order cannot contain a 2-cycle");
            if (!less(a, b)) continue;
            for (int c = 0; c < n; ++c)
                if (less(b, c) && !less(a, c))
                    throw std::invalid_argument("relation is not transitively closed");
        }
    }
}

Poset Poset::chain(int n) {
    if (n < 1) throw std::invalid_argument("chain(n) requires n >= 1");
    std::vector<unsigned char> less(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) less[cell(n, a, b)] = 1;
    return Poset(n, std::move(less));
}

Poset Poset::from_pairs(int size, std::span<const std::pair<int, int>> pairs) {
    if (size < 1) throw std::invalid_argument("poset must have at least one element");
    std::vector<unsigned char> less(static_cast<std::size_t>(size) * size, 0);
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= size || b >= size)
            throw std::invalid_argument("relation pair out of range");
        if (a == b) throw std::invalid_argument("relation pair (a, a) is not allowed");
        less[cell(size, a, b)] = 1;
    }
    close_transitively(size, less);
    Poset poset(size, std::move(less));
    poset.validate();  // rejects the cycles that closing cannot
    return poset;
}

std::vector<std::pair<int, int>> Poset::relation_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b)
            if (less(a, b)) out.emplace_back(a, b);
    return out;
}

Poset chain(int n) { return Poset::chain(n); }

Poset concat(const Poset& x, const Poset& y) {
    const int nx = x.size(), ny = y.size(), n = nx + ny;
    std::vector<unsigned char> less(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < nx; ++b)
            if (x.less(a, b)) less[cell(n, a, b)] = 1;
    for (int a = 0; a < ny; ++a)
        for (int b = 0; b < ny; ++b)
            if (y.less(a, b)) less[cell(n, nx + a, nx + b)] = 1;
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b) less[cell(n, a, nx + b)] = 1;
    return Poset(n, std::move(less));
}

Poset disjoint_union(const Poset& x, const Poset& y) {
    const int nx = x.size(), ny = y.size(), n = nx + ny;
    std::vector<unsigned char> less(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < nx; ++b)
            if (x.less(a, b)) less[cell(n, a, b)] = 1;
    for (int a = 0; a < ny; ++a)
        for (int b = 0; b < ny; ++b)
            if (y.less(a, b)) less[cell(n, nx + a, nx + b)] = 1;
    return Poset(n, std::move(less));
}

Poset d_handle(const Poset& x) {
    return concat(concat(chain(1), disjoint_union(chain(1), x)), chain(1));
}

Poset lex_sum(const Poset& base, std::span<const Poset> blocks) {
    if (static_cast<int>(blocks.size()) != base.size())
        throw std::invalid_argument("lex_sum needs exactly one block per base point");
    std::vector<int> offset(blocks.size() + 1, 0);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        offset[i + 1] = offset[i] + blocks[i].size();
    const int n = offset.back();
    std::vector<unsigned char> less(static_cast<std::size_t>(n) * n, 0);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int a = 0; a < blocks[i].size(); ++a)
            for (int b = 0; b < blocks[i].size(); ++b)
                if (blocks[i].less(a, b)) less[cell(n, offset[i] + a, offset[i] + b)] = 1;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (i == j || !base.less(static_cast<int>(i), static_cast<int>(j))) continue;
            for (int a = 0; a < blocks[i].size(); ++a)
                for (int b = 0; b < blocks[j].size(); ++b)
                    less[cell(n, offset[i] + a, offset[j] + b)] = 1;
        }
    return Poset(n, std::move(less));
}

Int count_strict_maps(const Poset& x, int m) {
    if (m < 0) throw std::invalid_argument("map count requires m >= 0");
    return count_maps(x, m, /*strict=*/true);
}

Int count_nonstrict_maps(const Poset& x, int m) {
    if (m < 0) throw std::invalid_argument("map count requires m >= 0");
    return count_maps(x, m, /*strict=*/false);
}

Int count_linear_extensions(const Poset& x, int max_size) {
    const int n = x.size();
    if (n > max_size)
        throw std::invalid_argument("count_linear_extensions: size " + std::to_string(n) +
                                    " exceeds bound " + std::to_string(max_size));
    if (n > 20) throw std::invalid_argument("count_linear_extensions: bound above 20 unsupported");

    std::vector<unsigned> pred_mask(n, 0), succ_mask(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (x.less(a, b)) {
                pred_mask[b] |= 1u << a;
                succ_mask[a] |= 1u << b;
            }

    // f(S) over down-sets S: remove a maximal element of S at each step.
    std::vector<unsigned long long> f(std::size_t(1) << n, 0);
    f[0] = 1;
    for (unsigned s = 1; s < (1u << n); ++s) {
        bool downset = true;
        for (int v = 0; v < n && downset; ++v)
            if ((s >> v & 1u) && (pred_mask[v] & ~s)) downset = false;
        if (!downset) continue;
        unsigned long long total = 0;
        for (int v = 0; v < n; ++v)
            if ((s >> v & 1u) && !(succ_mask[v] & s)) total += f[s & ~(1u << v)];
        f[s] = total;
    }
    return Int(f[(1u << n) - 1]);
}

HasseData hasse(const Poset& x) {
    const int n = x.size();
    HasseData data;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!x.less(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (x.less(a, c) && x.less(c, b)) cover = false;
            if (cover) data.covers.emplace_back(a, b);
        }
    std::sort(data.covers.begin(), data.covers.end());

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [a, b] : data.covers) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[ra] = rb;
    }
    for (int v = 0; v < n; ++v)
        if (find(v) == v) ++data.components;
    data.betti = static_cast<int>(data.covers.size()) - n + data.components;
    return data;
}

int longest_chain(const Poset& x) {
    const int n = x.size();
    const std::vector<int> order = topological_order(x);
    std::vector<int> height(n, 1);
    int best = 0;
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        for (int j = 0; j < i; ++j)
            if (x.less(order[j], v)) height[v] = std::max(height[v], height[order[j]] + 1);
        best = std::max(best, height[v]);
    }
    return best;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::uint64_t hash_sorted(std::uint64_t seed, std::vector<std::uint64_t>& values) {
    std::sort(values.begin(), values.end());
    for (std::uint64_t v : values) seed = mix(seed, v);
    return seed;
}

/// Per-element colors refined from (in-degree, out-degree, height) by the
/// neighbor color multisets. Purely value-determined, so corresponding
/// elements of isomorphic posets always share colors; hash collisions can
/// only merge colors, never split them, and the bijection search below does
/// not rely on colors being exact.
std::vector<std::uint64_t> refined_colors(const Poset& x) {
    const int n = x.size();
    std::vector<int> height(n, 1);
    for (int v : topological_order(x))
        for (int u = 0; u < n; ++u)
            if (x.less(u, v)) height[v] = std::max(height[v], height[u] + 1);

    std::vector<std::uint64_t> color(n);
    for (int v = 0; v < n; ++v) {
        int in = 0, out = 0;
        for (int u = 0; u < n; ++u) {
            in += x.less(u, v);
            out += x.less(v, u);
        }
        color[v] = mix(mix(mix(0x1234abcdull, in), out), height[v]);
    }

    // The partition stabilizes within n rounds; later rounds only re-hash
    // stable data, so invariance under relabeling is kept throughout.
    std::vector<std::uint64_t> below, above;
    for (int round = 0; round <= n; ++round) {
        std::vector<std::uint64_t> next(n);
        for (int v = 0; v < n; ++v) {
            below.clear();
            above.clear();
            for (int u = 0; u < n; ++u) {
                if (x.less(u, v)) below.push_back(color[u]);
                if (x.less(v, u)) above.push_back(color[u]);
            }
            next[v] = hash_sorted(hash_sorted(mix(1, color[v]), below), above);
        }
        color = std::move(next);
    }
    return color;
}

}  // namespace

std::uint64_t iso_fingerprint(const Poset& x) {
    std::vector<std::uint64_t> colors = refined_colors(x);
    return hash_sorted(static_cast<std::uint64_t>(x.size()), colors);
}

bool is_isomorphic(const Poset& x, const Poset& y, int max_size) {
    if (x.size() != y.size()) return false;
    const int n = x.size();
    if (n > max_size)
        throw std::invalid_argument("is_isomorphic: size " + std::to_string(n) +
                                    " exceeds bound " + std::to_string(max_size));

    const std::vector<std::uint64_t> cx = refined_colors(x);
    const std::vector<std::uint64_t> cy = refined_colors(y);
    {
        auto hx = cx, hy = cy;
        std::sort(hx.begin(), hx.end());
        std::sort(hy.begin(), hy.end());
        if (hx != hy) return false;
    }

    // Map most-constrained elements first: ascending color-class size.
    std::map<std::uint64_t, int> count;
    for (std::uint64_t c : cx) ++count[c];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return std::pair(count[cx[a]], a) < std::pair(count[cx[b]], b); });

    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    auto extend = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == order.size()) return true;
        const int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || cy[w] != cx[v]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < idx && ok; ++j) {
                const int u = order[j];
                if (x.less(u, v) != y.less(image[u], w)) ok = false;
                if (x.less(v, u) != y.less(w, image[u])) ok = false;
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            if (self(self, idx + 1)) return true;
            used[w] = 0;
            image[v] = -1;
        }
        return false;
    };
    return extend(extend, 0);
}

}  // namespace wix
