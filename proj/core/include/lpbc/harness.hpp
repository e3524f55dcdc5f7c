#pragma once

#include <string>
#include <vector>

#include "lpbc/program.hpp"

namespace lpbc {

// Enumeration universe for the property checks: every subset of the rule
// pool with at most max_rules rules, over a fixed small vocabulary.
struct Corpus {
    Vocabulary vocab;
    std::vector<Rule> pool;
    std::size_t max_rules = 4;

    // {a,b} with the nine canonical two-atom rule shapes plus both facts
    static Corpus standard();
};

struct Witness {
    std::string p, q, r;  // canonical program texts; empty when unused
    std::string note;     // ordering used, offending rule, etc.
};

struct PostulateReport {
    std::string op;         // "pm:full-meet", "ens", "distance", ...
    std::string postulate;  // "r1".."r8", "rb1".."rb5", "c1".."c8", "cb1".."cb8"
    bool holds = false;
    Witness witness;  // populated when holds is false
};

enum class HarnessOp {
    PmFullMeet,
    PmMaxichoiceLex,
    PmRelationalCardinality,
    Ensconcement,  // quantified over every valid ordering of each program
    Distance,      // revision only; materialised through canonical_program
};

std::string harness_op_name(HarnessOp op);

// Postulate checks run over every (P,Q) pair, and over every (P,Q,R)
// triple for the composite postulates, of the corpus. A report with
// holds == false carries a concrete replayable witness.
std::vector<PostulateReport> check_revision_postulates(HarnessOp op, const Corpus& corpus);
std::vector<PostulateReport> check_contraction_postulates(HarnessOp op,
                                                          const Corpus& corpus);

// Revision-from-contraction and contraction-from-revision round trips,
// passing the complement as a raw SE target, for the partial meet and
// ordering based operators.
std::vector<PostulateReport> check_identity_bridges(const Corpus& corpus);

// (a) every partial meet outcome is realised by some valid rule ordering,
// (b) subset orderings lifted from rule orderings agree with them,
// (c) the relevance postulate implies the weaker exclusion postulate.
std::vector<PostulateReport> check_characterizations(const Corpus& corpus);

// Module coverage of minimal conflicts, the conflict biconditional for the
// union of relevant modules, and membership of every localized outcome in
// the set of globally achievable partial meet outcomes.
std::vector<PostulateReport> check_localization(const Corpus& corpus);

}  // namespace lpbc
