#include <doctest.h>

#include "helpers.hpp"
#include "lpbc/program.hpp"

using namespace lpbc;
using testutil::prog;

TEST_CASE("rule text is canonical") {
    Rule r = parse_rule("a;not b :-   c ,not d.");
    CHECK(r.text() == "a ; not b :- c, not d.");
    CHECK(parse_rule("b;a.").text() == "a ; b.");
    CHECK(parse_rule(":-a.").text() == ":- a.");
    CHECK(parse_rule("x.").is_fact());
    CHECK(parse_rule(":- x.").is_constraint());
}

TEST_CASE("programs sort and deduplicate rules") {
    Program p = prog("b.\na.\nb.\n");
    REQUIRE(p.size() == 2);
    CHECK(p.rules()[0].text() == "a.");
    CHECK(p.rules()[1].text() == "b.");
    CHECK(p == prog("a.\nb."));
}

TEST_CASE("comments and vocab directives") {
    ParseResult r = parse_program("#vocab a b c .\n% a comment\na :- b. % trailing\n");
    CHECK(r.vocab.atoms() == std::vector<std::string>{"a", "b", "c"});
    CHECK(r.program.size() == 1);
}

TEST_CASE("declared vocabulary is enforced") {
    Vocabulary v({"a"});
    CHECK_THROWS_AS(parse_program("b.", v), ParseError);
    CHECK_NOTHROW(parse_program("a.", v));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_program("a.\nb :- .\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_rule("A."), ParseError);     // atoms start lowercase
    CHECK_THROWS_AS(parse_rule("a :- b"), ParseError);  // missing period
}

TEST_CASE("program set operations") {
    Program p = prog("a.\nb.");
    Program q = prog("b.\nc :- a.");
    CHECK(testutil::rule_texts(p.united(q)) ==
          std::set<std::string>{"a.", "b.", "c :- a."});
    CHECK(testutil::rule_texts(p.intersected(q)) == std::set<std::string>{"b."});
    CHECK(testutil::rule_texts(p.minus(q)) == std::set<std::string>{"a."});
    CHECK(prog("b.").subset_of(p));
    CHECK_FALSE(p.subset_of(q));
    CHECK(p.contains(parse_rule("a.")));
}

TEST_CASE("vocabulary merge and lookup") {
    Vocabulary v({"b", "a", "b"});
    CHECK(v.atoms() == std::vector<std::string>{"a", "b"});
    CHECK(v.index("b") == 1);
    CHECK_THROWS_AS(v.index("zz"), DomainError);
    CHECK(v.merged(Vocabulary({"c"})).size() == 3);
    CHECK(vocab_of({}).size() == 0);
}
