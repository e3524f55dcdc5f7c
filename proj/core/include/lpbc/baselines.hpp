#pragma once

#include <vector>

#include "lpbc/program.hpp"
#include "lpbc/semantics.hpp"

namespace lpbc {

// Symmetric-difference order on pairs:
// (X,X') ⊆ (Y,Y') iff X' ⊆ Y' and, when X' = Y', X ⊆ Y.
bool pair_leq(SEPair a, SEPair b);

// σ(E,E'): the members of E realising a difference to E' that is minimal
// against every cross pair. Masks compare by plain subset, SE pairs by the
// componentwise difference under pair_leq.
std::vector<Mask> sigma(const std::vector<Mask>& e, const std::vector<Mask>& ep);
std::vector<SEPair> sigma(const std::vector<SEPair>& e, const std::vector<SEPair>& ep);

// Distance-based revision. Returns SE(Q) when P is unsatisfiable; otherwise
// the pairs (X,Y) with Y a difference-minimal model of Q against P and every
// proper X additionally difference-minimal at the SE level. The paper for
// this operator leaves the revised program's syntax open, hence the SE-set
// result; see distance_revise_program for a concrete witness.
SESet distance_revise_se(const Program& p, const Program& q);
SESet distance_revise_se(const Program& p, const Program& q, const Vocabulary& vocab);
Program distance_revise_program(const Program& p, const Program& q);
Program distance_revise_program(const Program& p, const Program& q,
                                const Vocabulary& vocab);

// Maximal R with Q ⊆ R ⊆ P and non-empty answer sets (resp. SE models).
std::vector<Program> screened_remainders_as(const Program& p, const Program& q);
std::vector<Program> screened_remainders_se(const Program& p, const Program& q);

// Picks the lexicographically least screened remainder; P when none exists.
Program screened_consolidate_as(const Program& p, const Program& q);
Program screened_consolidate_se(const Program& p, const Program& q);

// Revision against the answer-set reading of compatibility: maximal R ⊆ P
// with AS(R ∪ Q) ≠ ∅, single lexicographic choice, plus Q. Falls back to
// P ∪ Q when Q has no answer sets and no subset helps.
Program pm_revise_as(const Program& p, const Program& q);

// P1 ∖ P2 and P2 ∖ P1 have the same SE models. Stricter than strong
// equivalence of P1 and P2 themselves.
bool c_update_equivalent(const Program& p1, const Program& p2);

}  // namespace lpbc
