#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpbc {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg), line(line_), column(col_) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Ordered finite set of atom names. Index order is the canonical order used
// for all bitmask encodings, so two Vocabulary values with equal atom lists
// are interchangeable.
class Vocabulary {
public:
    Vocabulary() = default;
    explicit Vocabulary(std::vector<std::string> atoms);

    const std::vector<std::string>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool contains(const std::string& atom) const;
    // Throws DomainError for unknown atoms.
    std::size_t index(const std::string& atom) const;

    Vocabulary merged(const Vocabulary& other) const;

    bool operator==(const Vocabulary&) const = default;

private:
    std::vector<std::string> atoms_;  // sorted, unique
};

// One generalized rule
//   h1 ; ... ; not hn :- b1, ..., not bm.
// All four parts are kept sorted and duplicate free, so structural equality
// is rule identity.
class Rule {
public:
    Rule() = default;
    Rule(std::vector<std::string> head_pos, std::vector<std::string> head_neg,
         std::vector<std::string> body_pos, std::vector<std::string> body_neg);

    static Rule fact(const std::string& atom) { return Rule({atom}, {}, {}, {}); }
    static Rule constraint(std::vector<std::string> body_pos,
                           std::vector<std::string> body_neg = {}) {
        return Rule({}, {}, std::move(body_pos), std::move(body_neg));
    }

    const std::vector<std::string>& head_pos() const { return head_pos_; }
    const std::vector<std::string>& head_neg() const { return head_neg_; }
    const std::vector<std::string>& body_pos() const { return body_pos_; }
    const std::vector<std::string>& body_neg() const { return body_neg_; }

    bool is_fact() const;
    bool is_constraint() const { return head_pos_.empty() && head_neg_.empty(); }

    std::vector<std::string> atoms() const;  // At(r), sorted unique
    std::string text() const;                // canonical single-line form, "." included

    auto operator<=>(const Rule&) const = default;

private:
    std::vector<std::string> head_pos_, head_neg_, body_pos_, body_neg_;
};

// Finite set of rules, stored sorted by canonical text.
class Program {
public:
    Program() = default;
    explicit Program(std::vector<Rule> rules);

    const std::vector<Rule>& rules() const { return rules_; }
    std::size_t size() const { return rules_.size(); }
    bool empty() const { return rules_.empty(); }
    bool contains(const Rule& r) const;

    std::vector<std::string> atoms() const;  // At(P)

    Program united(const Program& other) const;       // expansion P + Q
    Program intersected(const Program& other) const;  // P ∩ Q
    Program minus(const Program& other) const;        // P ∖ Q
    bool subset_of(const Program& other) const;

    auto begin() const { return rules_.begin(); }
    auto end() const { return rules_.end(); }

    auto operator<=>(const Program&) const = default;

private:
    std::vector<Rule> rules_;  // sorted unique
};

struct ParseResult {
    Program program;
    Vocabulary vocab;  // declared vocab (if any) merged with At(P)
};

// Parses the rule language described in the README. Throws ParseError with
// line/column on malformed input, and when a #vocab directive is present,
// rejects atoms outside the declared vocabulary.
ParseResult parse_program(const std::string& text);
ParseResult parse_program(const std::string& text, const Vocabulary& declared);

Rule parse_rule(const std::string& text);  // single rule, convenience

// Canonical serialization: one rule per line, sorted; parse(print(P)) == P.
std::string print_program(const Program& p);

inline Program program_union(const Program& p, const Program& q) { return p.united(q); }

// Vocabulary of all atoms occurring in the given programs.
Vocabulary vocab_of(std::initializer_list<const Program*> programs);
inline Vocabulary vocab_of(const Program& p) { return vocab_of({&p}); }
inline Vocabulary vocab_of(const Program& p, const Program& q) { return vocab_of({&p, &q}); }

}  // namespace lpbc
