#include <doctest.h>

#include "helpers.hpp"
#include "lpbc/selection.hpp"

using namespace lpbc;
using testutil::prog;

TEST_CASE("rationals") {
    CHECK(Rational::parse("6/4") == Rational{3, 2});
    CHECK(Rational::parse("5") == Rational{5, 1});
    CHECK(Rational{1, 3} < Rational{1, 2});
    CHECK(Rational{-1, 2} < Rational{0, 1});
    CHECK(Rational{2, 4}.str() == "1/2");
}

TEST_CASE("full meet keeps the whole family") {
    auto family = std::vector<Program>{prog("a."), prog("b.")};
    auto chosen = select(SelectionPolicy::full_meet(), family);
    CHECK(chosen.size() == 2);
}

TEST_CASE("maxichoice and single choice pick the least serialization") {
    auto family = std::vector<Program>{prog("b."), prog("a.\nb."), prog("a.")};
    auto maxi = select(SelectionPolicy::maxichoice_lex(), family);
    REQUIRE(maxi.size() == 1);
    CHECK(maxi[0] == prog("a."));
    CHECK(select(SelectionPolicy::single_choice_lex(), family) == maxi);
}

TEST_CASE("relational selection takes all weight maximisers") {
    std::map<std::string, Rational> w;
    w[subset_key(prog("a."))] = Rational{1, 1};
    w[subset_key(prog("b."))] = Rational{2, 1};
    w[subset_key(prog("a.\nb."))] = Rational{2, 1};
    auto family = std::vector<Program>{prog("a."), prog("b."), prog("a.\nb.")};
    auto chosen = select(SelectionPolicy::relational(w, false), family);
    REQUIRE(chosen.size() == 2);
    CHECK(chosen[0] == prog("a.\nb."));
    CHECK(chosen[1] == prog("b."));
}

TEST_CASE("relational selection falls back to full meet without scores") {
    auto family = std::vector<Program>{prog("a."), prog("b.")};
    auto chosen =
        select(SelectionPolicy::relational(std::map<std::string, Rational>{}, false),
               family);
    CHECK(chosen.size() == 2);
}

TEST_CASE("maximised relations must score supersets strictly higher") {
    std::map<std::string, Rational> w;
    w[subset_key(prog("a."))] = Rational{2, 1};
    w[subset_key(prog("a.\nb."))] = Rational{1, 1};  // superset scored lower
    auto family = std::vector<Program>{prog("a."), prog("a.\nb.")};
    CHECK_THROWS_AS(select(SelectionPolicy::relational(w, true), family), DomainError);
    CHECK_NOTHROW(select(SelectionPolicy::relational(w, false), family));
}

TEST_CASE("cardinality policy is maximised") {
    auto family = std::vector<Program>{prog("a."), prog("a.\nb."), prog("b.")};
    auto chosen = select(SelectionPolicy::relational_cardinality(), family);
    REQUIRE(chosen.size() == 1);
    CHECK(chosen[0] == prog("a.\nb."));
}

TEST_CASE("empty family selects nothing") {
    CHECK(select(SelectionPolicy::full_meet(), {}).empty());
    CHECK(select(SelectionPolicy::maxichoice_lex(), {}).empty());
}
