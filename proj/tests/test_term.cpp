#include <doctest.h>

#include <set>

#include "support.hpp"
#include "wix/error.hpp"
#include "wix/term.hpp"

using namespace wix;

namespace {
const char* kWorkedTerm = "D(D(D(D(c)*c*D(c)))*c3)";
}

TEST_CASE("parsing") {
    CHECK(parse_term("c * c") == Term::star({Term::leaf(1), Term::leaf(1)}));
    CHECK(parse_term("c3") == Term::leaf(3));
    CHECK(parse_term("D(c)") == Term::d(Term::leaf(1)));
    CHECK(parse_term("(c*c)*c") ==
          Term::star({Term::leaf(1), Term::leaf(1), Term::leaf(1)}));
    CHECK(parse_term("c*(c*c)") == parse_term("c*c*c"));
    CHECK(parse_term(" D ( c 12 ) ") == Term::d(Term::leaf(12)));

    const Term worked = parse_term(kWorkedTerm);
    const Term inner = Term::star({Term::d(Term::leaf(1)), Term::leaf(1), Term::d(Term::leaf(1))});
    CHECK(worked == Term::d(Term::star({Term::d(Term::d(inner)), Term::leaf(3)})));
}

TEST_CASE("parse errors carry positions") {
    auto position_of = [](const char* text) {
        try {
            parse_term(text);
        } catch (const parse_error& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("   ") == 3);
    CHECK(position_of("c0") == 1);
    CHECK(position_of("c*") == 2);
    CHECK(position_of("*c") == 0);
    CHECK(position_of("D c") == 2);
    CHECK(position_of("D(c") == 3);
    CHECK(position_of("D()") == 2);
    CHECK(position_of("(c*c") == 4);
    CHECK(position_of("c)c") == 1);
    CHECK(position_of("c**c") == 2);
    CHECK(position_of("x") == 0);
    CHECK(position_of("c5x") == 2);
}

TEST_CASE("printing is canonical") {
    CHECK(print_term(Term::star({Term::leaf(1), Term::leaf(1)})) == "c*c");
    CHECK(print_term(Term::d(Term::leaf(1))) == "D(c)");
    CHECK(print_term(Term::leaf(4)) == "c4");
    CHECK(print_term(parse_term(kWorkedTerm)) == kWorkedTerm);

    wixtest::TermGen gen(20240817);
    for (int i = 0; i < 2000; ++i) {
        const Term t = gen();
        CHECK(parse_term(print_term(t)) == t);
    }
}

TEST_CASE("poset evaluation") {
    CHECK(is_isomorphic(eval_poset(parse_term("c3")), chain(3)));
    CHECK(is_isomorphic(eval_poset(parse_term("D(c)")), d_handle(chain(1))));
    CHECK(is_isomorphic(eval_poset(parse_term("c2*c3")), chain(5)));

    const Poset worked = eval_poset(parse_term(kWorkedTerm));
    CHECK(worked.size() == 21);
    CHECK(longest_chain(worked) == 16);
    const HasseData h = hasse(worked);
    CHECK(h.betti == 5);
    CHECK(h.covers.size() == 25);  // points - 1 + betti
    CHECK(h.components == 1);
}

TEST_CASE("series evaluation") {
    CHECK(eval_series(parse_term("D(c)")) == d_op(zeta_chain(1)));
    CHECK(eval_series(parse_term("c2*c3")) == zeta_chain(5));

    ChainSeries worked;
    worked.add(16, 882);
    worked.add(17, 7995);
    worked.add(18, 27232);
    worked.add(19, 43792);
    worked.add(20, 33552);
    worked.add(21, 9880);
    CHECK(eval_series(parse_term(kWorkedTerm)) == worked);

    SUBCASE("series/poset homomorphism") {
        for (int units = 1; units <= 4; ++units)
            for (int d = 0; d <= 2; ++d)
                for (const Term& t : enumerate_terms(units, d)) {
                    const Poset x = eval_poset(t);
                    if (x.size() > 10) continue;
                    CHECK(eval_series(t) == from_poset(x));
                }
    }
}

TEST_CASE("stats count the desugared word") {
    CHECK(term_stats(parse_term("c")) == TermStats{1, 0, 0});
    CHECK(term_stats(parse_term("D(c*c)")) == TermStats{2, 1, 1});
    CHECK(term_stats(parse_term("c4")) == TermStats{4, 0, 3});
    CHECK(term_stats(parse_term(kWorkedTerm)) == TermStats{6, 5, 5});

    SUBCASE("support endpoints determine the word counts") {
        wixtest::TermGen gen(7);
        for (int i = 0; i < 300; ++i) {
            const Term t = gen();
            const TermStats s = term_stats(t);
            const ChainSeries f = eval_series(t);
            CHECK(f.min_index() == s.leaf_units + 2 * s.d_count);
            CHECK(f.max_index() == s.leaf_units + 3 * s.d_count);
            CHECK(s.star_count == s.leaf_units - 1);
            CHECK(f.min_index() - 2 * s.d_count - 1 == s.star_count);
        }
        for (int units = 1; units <= 4; ++units)
            for (int d = 0; d <= 2; ++d)
                for (const Term& t : enumerate_terms(units, d))
                    CHECK(hasse(eval_poset(t)).betti == d);
    }
}

TEST_CASE("term enumeration") {
    auto printed = [](const std::vector<Term>& terms) {
        std::vector<std::string> out;
        for (const Term& t : terms) out.push_back(print_term(t));
        return out;
    };

    CHECK(printed(enumerate_terms(1, 0)) == std::vector<std::string>{"c"});
    CHECK(printed(enumerate_terms(1, 2)) == std::vector<std::string>{"D(D(c))"});
    CHECK(printed(enumerate_terms(2, 1)) ==
          std::vector<std::string>{"D(c)*c", "D(c*c)", "c*D(c)"});

    // frozen counts
    CHECK(enumerate_terms(3, 1).size() == 6);
    CHECK(enumerate_terms(2, 2).size() == 6);
    CHECK(enumerate_terms(3, 2).size() == 20);
    CHECK(enumerate_terms(4, 1).size() == 10);
    CHECK(enumerate_terms(4, 2).size() == 50);
    CHECK(enumerate_terms(5, 2).size() == 105);

    CHECK_THROWS_AS(enumerate_terms(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_terms(1, -1), std::invalid_argument);

    SUBCASE("matches the normalized binary-tree language") {
        for (int units = 1; units <= 4; ++units)
            for (int d = 0; d <= 2; ++d) {
                const std::set<std::string> language =
                    wixtest::normalized_binary_tree_language(units, d);
                const std::vector<Term> enumerated = enumerate_terms(units, d);
                REQUIRE(enumerated.size() == language.size());
                for (const Term& t : enumerated) CHECK(language.contains(print_term(t)));
            }
    }

    SUBCASE("deterministic order, no duplicates") {
        const auto terms = printed(enumerate_terms(4, 2));
        CHECK(std::is_sorted(terms.begin(), terms.end()));
        CHECK(std::adjacent_find(terms.begin(), terms.end()) == terms.end());
    }
}

TEST_CASE("star normal form in the constructor") {
    const Term nested = Term::star({Term::star({Term::leaf(1), Term::leaf(2)}), Term::leaf(3)});
    CHECK(print_term(nested) == "c*c2*c3");
    CHECK(Term::star({Term::d(Term::leaf(1))}) == Term::d(Term::leaf(1)));
    CHECK_THROWS_AS(Term::star({}), std::invalid_argument);
    CHECK_THROWS_AS(Term::leaf(0), std::invalid_argument);
}
