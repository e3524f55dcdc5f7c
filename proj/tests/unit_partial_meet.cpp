#include <doctest.h>

#include "helpers.hpp"
#include "lpbc/partial_meet.hpp"
#include "lpbc/selection.hpp"

using namespace lpbc;
using testutil::prog;
using testutil::rule_texts;

namespace {
const SelectionPolicy kFull = SelectionPolicy::full_meet();
const Vocabulary kAB({"a", "b"});
}  // namespace

TEST_CASE("compatible and remainder sets for a fact under a constraint") {
    Program p = prog("a.\nb :- a.");
    Program q = prog(":- a.");
    auto comp = compatible_sets(p, q);
    REQUIRE(comp.size() == 1);
    CHECK(rule_texts(comp[0]) == std::set<std::string>{"b :- a."});

    // the whole base stays a remainder: its SE models avoid SE(q)
    auto rem = remainder_sets(p, q);
    REQUIRE(rem.size() == 1);
    CHECK(rem[0] == p);
}

TEST_CASE("partial meet revision keeps uninvolved rules") {
    Program p = prog("a.\nb :- a.");
    Program q = prog(":- a.");
    CHECK(rule_texts(pm_revise(p, q, kFull)) ==
          std::set<std::string>{":- a.", "b :- a."});
}

TEST_CASE("revision by an unsatisfiable program is plain expansion") {
    Program p = prog("a.");
    Program q = prog("b.\n:- b.");
    CHECK(pm_revise(p, q, kFull) == p.united(q));
}

TEST_CASE("revision by a compatible program keeps everything") {
    Program p = prog("a.\nb :- a.");
    Program q = prog("b.");
    CHECK(pm_revise(p, q, kFull) == p.united(q));
}

TEST_CASE("partial meet contraction drops the fact, keeps the bridge") {
    // contracting {a., b :- a.} by {a :- b.}
    Program p = prog("a.\nb :- a.");
    Program q = prog("a :- b.");
    Program res = pm_contract(p, q, kFull);
    CHECK(rule_texts(res) == std::set<std::string>{"b :- a."});
    // recovery fails here: adding q back does not restore a.
    CHECK_FALSE(p.subset_of(res.united(q)));
}

TEST_CASE("contraction by a tautology changes nothing") {
    Program p = prog("a.\nb :- a.");
    CHECK(pm_contract(p, prog(""), kFull) == p);
}

TEST_CASE("rules shared with q always survive revision") {
    Program p = prog("a.\nb :- a.\n:- a, b.");
    Program q = prog("b :- a.\n:- a.");
    Program res = pm_revise(p, q, kFull);
    CHECK(q.subset_of(res));
    CHECK(res.contains(parse_rule("b :- a.")));
}

TEST_CASE("retained rules against a raw SE target") {
    Program p = prog("a.\nb :- a.");
    SESet target = se_models(prog(":- a."), kAB);
    Program kept = pm_revise_retained(p, target, kFull);
    CHECK(rule_texts(kept) == std::set<std::string>{"b :- a."});
    // an empty target means the first case: everything is kept
    CHECK(pm_revise_retained(p, SESet(kAB), kFull) == p);
}

TEST_CASE("empty remainder family intersects to the empty program") {
    CHECK(intersect_family({}).empty());
    CHECK(intersect_family({prog("a.\nb."), prog("b.")}) == prog("b."));
}

TEST_CASE("maxichoice picks the lexicographically least remainder") {
    // compatible sets of {:- a., :- b.} with {a ; b.} are {:- a.} and {:- b.}
    Program p = prog(":- a.\n:- b.");
    Program q = prog("a ; b.");
    auto rem = compatible_sets(p, q);
    REQUIRE(rem.size() == 2);
    Program maxi = pm_revise(p, q, SelectionPolicy::maxichoice_lex());
    CHECK(rule_texts(maxi) == std::set<std::string>{":- a.", "a ; b."});
    Program full = pm_revise(p, q, kFull);
    CHECK(rule_texts(full) == std::set<std::string>{"a ; b."});
}

TEST_CASE("base size cap") {
    std::string text;
    for (char c = 'a'; c < 'a' + 13; ++c) text += std::string(1, c) + ".\n";
    CHECK_THROWS_AS(remainder_sets(prog(text), prog(":- a.")), DomainError);
}
