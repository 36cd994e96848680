#include "wix/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "wix/error.hpp"

namespace wix {

struct Term::Node {
    Kind kind;
    int width = 0;              // leaf
    std::vector<Term> factors;  // star factors; for a D node the single child
};

Term Term::leaf(int n) {
    if (n < 1) throw std::invalid_argument("leaf width must be >= 1");
    auto node = std::make_shared<Node>();
    node->kind = Kind::leaf;
    node->width = n;
    return Term(std::move(node));
}

Term Term::star(std::vector<Term> factors) {
    std::vector<Term> flat;
    for (Term& f : factors) {
        if (f.kind() == Kind::star) {
            auto& inner = f.node_->factors;
            flat.insert(flat.end(), inner.begin(), inner.end());
        } else {
            flat.push_back(std::move(f));
        }
    }
    if (flat.empty()) throw std::invalid_argument("star needs at least one factor");
    if (flat.size() == 1) return flat.front();
    auto node = std::make_shared<Node>();
    node->kind = Kind::star;
    node->factors = std::move(flat);
    return Term(std::move(node));
}

Term Term::d(Term child) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::d;
    node->factors.push_back(std::move(child));
    return Term(std::move(node));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

int Term::leaf_width() const {
    if (kind() != Kind::leaf) throw std::logic_error("leaf_width on non-leaf");
    return node_->width;
}

const std::vector<Term>& Term::factors() const {
    if (kind() != Kind::star) throw std::logic_error("factors on non-star");
    return node_->factors;
}

const Term& Term::child() const {
    if (kind() != Kind::d) throw std::logic_error("child on non-D term");
    return node_->factors.front();
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.kind() == Term::Kind::leaf) return a.node_->width == b.node_->width;
    const auto& fa = a.node_->factors;
    const auto& fb = b.node_->factors;
    if (fa.size() != fb.size()) return false;
    for (std::size_t i = 0; i < fa.size(); ++i)
        if (!(fa[i] == fb[i])) return false;
    return true;
}

namespace {

void print_into(const Term& t, std::string& out) {
    switch (t.kind()) {
        case Term::Kind::leaf:
            out += 'c';
            if (t.leaf_width() != 1) out += std::to_string(t.leaf_width());
            break;
        case Term::Kind::d:
            out += "D(";
            print_into(t.child(), out);
            out += ')';
            break;
        case Term::Kind::star: {
            bool first = true;
            for (const Term& f : t.factors()) {
                if (!first) out += '*';
                print_into(f, out);
                first = false;
            }
            break;
        }
    }
}

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    Term run() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("empty expression", pos_);
        Term t = expr();
        skip_ws();
        if (pos_ < text_.size())
            throw parse_error(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return t;
    }

private:
    Term expr() {
        std::vector<Term> factors;
        factors.push_back(factor());
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                factors.push_back(factor());
            } else {
                break;
            }
        }
        return Term::star(std::move(factors));
    }

    Term factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("expected a factor", pos_);
        const char c = text_[pos_];
        if (c == 'c') {
            ++pos_;
            skip_ws();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                const std::size_t start = pos_;
                long n = 0;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    n = n * 10 + (text_[pos_] - '0');
                    if (n > 1000000) throw parse_error("chain width too large", start);
                    ++pos_;
                }
                if (n == 0) throw parse_error("c0 is not a poset", start);
                return Term::leaf(static_cast<int>(n));
            }
            return Term::leaf(1);
        }
        if (c == 'D') {
            ++pos_;
            expect('(');
            Term inner = expr();
            expect(')');
            return Term::d(std::move(inner));
        }
        if (c == '(') {
            ++pos_;
            Term inner = expr();
            expect(')');
            return inner;
        }
        throw parse_error(std::string("unexpected '") + c + "'", pos_);
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw parse_error(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).run(); }

std::string print_term(const Term& t) {
    std::string out;
    print_into(t, out);
    return out;
}

Poset eval_poset(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::leaf:
            return chain(t.leaf_width());
        case Term::Kind::d:
            return d_handle(eval_poset(t.child()));
        case Term::Kind::star: {
            const auto& factors = t.factors();
            Poset acc = eval_poset(factors.front());
            for (std::size_t i = 1; i < factors.size(); ++i)
                acc = concat(acc, eval_poset(factors[i]));
            return acc;
        }
    }
    throw std::logic_error("unreachable term kind");
}

ChainSeries eval_series(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::leaf:
            return zeta_chain(t.leaf_width());
        case Term::Kind::d:
            return d_op(eval_series(t.child()));
        case Term::Kind::star: {
            const auto& factors = t.factors();
            ChainSeries acc = eval_series(factors.front());
            for (std::size_t i = 1; i < factors.size(); ++i)
                acc = star(acc, eval_series(factors[i]));
            return acc;
        }
    }
    throw std::logic_error("unreachable term kind");
}

TermStats term_stats(const Term& t) {
    TermStats stats;
    auto walk = [&](auto&& self, const Term& node) -> void {
        switch (node.kind()) {
            case Term::Kind::leaf:
                stats.leaf_units += node.leaf_width();
                break;
            case Term::Kind::d:
                ++stats.d_count;
                self(self, node.child());
                break;
            case Term::Kind::star:
                for (const Term& f : node.factors()) self(self, f);
                break;
        }
    };
    walk(walk, t);
    stats.star_count = stats.leaf_units - 1;
    return stats;
}

namespace {

using TermList = std::vector<Term>;

/// factor := c1 | D(term); terms additionally allow flattened stars of >= 2
/// factors. Compositions of (units, d) over ordered factor lists generate
/// each normal form exactly once.
class Enumerator {
public:
    const TermList& factors(int units, int d) {
        auto key = std::pair(units, d);
        if (auto it = factor_cache_.find(key); it != factor_cache_.end()) return it->second;
        TermList out;
        if (units == 1 && d == 0) out.push_back(Term::leaf(1));
        if (d >= 1)
            for (const Term& t : terms(units, d - 1)) out.push_back(Term::d(t));
        return factor_cache_.emplace(key, std::move(out)).first->second;
    }

    const TermList& terms(int units, int d) {
        auto key = std::pair(units, d);
        if (auto it = term_cache_.find(key); it != term_cache_.end()) return it->second;
        TermList out = factors(units, d);
        std::vector<Term> acc;
        compose(units, d, acc, out);
        return term_cache_.emplace(key, std::move(out)).first->second;
    }

private:
    void compose(int units_left, int d_left, std::vector<Term>& acc, TermList& out) {
        if (units_left == 0) {
            if (d_left == 0 && acc.size() >= 2) out.push_back(Term::star(acc));
            return;
        }
        for (int u = 1; u <= units_left; ++u)
            for (int dd = 0; dd <= d_left; ++dd) {
                if (u == units_left && dd != d_left) continue;
                if (u == units_left && acc.empty()) continue;  // a lone factor is not a star
                for (const Term& f : factors(u, dd)) {
                    acc.push_back(f);
                    compose(units_left - u, d_left - dd, acc, out);
                    acc.pop_back();
                }
            }
    }

    std::map<std::pair<int, int>, TermList> factor_cache_;
    std::map<std::pair<int, int>, TermList> term_cache_;
};

}  // namespace

std::vector<Term> enumerate_terms(int units, int d_count) {
    if (units < 1) throw std::invalid_argument("enumerate_terms requires units >= 1");
    if (d_count < 0) throw std::invalid_argument("enumerate_terms requires d_count >= 0");
    Enumerator enumerator;
    std::vector<Term> out = enumerator.terms(units, d_count);
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return print_term(a) < print_term(b); });
    return out;
}

}  // namespace wix
