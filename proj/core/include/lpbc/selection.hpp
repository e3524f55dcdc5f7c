#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpbc/program.hpp"

namespace lpbc {

// Exact rational score, so weight ties are reproducible.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);

    static Rational parse(const std::string& text);  // "3", "-1/2"
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
};

enum class PolicyKind { FullMeet, MaxichoiceLex, SingleChoiceLex, Relational };

// Canonical serialization of a subset: rule texts joined by " | "
// (rules are already in canonical order inside a Program).
std::string subset_key(const Program& subset);

// Deterministic choice among candidate subsets.
//  - full-meet: the whole family.
//  - maxichoice-lex / single-choice-lex: the single member with the
//    lexicographically least canonical serialization.
//  - relational: the members with maximal score under `weights` (or the
//    `scorer` callback); score ties select all tied members; if no member
//    carries a score the relation is empty and the whole family is selected.
// An empty family always selects the empty family.
struct SelectionPolicy {
    PolicyKind kind = PolicyKind::FullMeet;
    std::map<std::string, Rational> weights;
    std::function<std::optional<Rational>(const Program&)> scorer;
    bool maximised = false;  // claim: R ⊂ R′ implies strictly higher score

    static SelectionPolicy full_meet();
    static SelectionPolicy maxichoice_lex();
    static SelectionPolicy single_choice_lex();
    static SelectionPolicy relational(std::map<std::string, Rational> weights,
                                      bool maximised = false);
    // Relational policy scoring each subset by its rule count. Satisfies the
    // maximised condition by construction.
    static SelectionPolicy relational_cardinality();
};

std::vector<Program> select(const SelectionPolicy& policy,
                            const std::vector<Program>& family);

}  // namespace lpbc
