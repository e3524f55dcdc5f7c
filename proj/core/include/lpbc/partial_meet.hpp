#pragma once

#include <vector>

#include "lpbc/program.hpp"
#include "lpbc/selection.hpp"
#include "lpbc/semantics.hpp"

namespace lpbc {

// Subset enumeration over 2^P is exponential; refuse beyond this many rules.
inline constexpr std::size_t kMaxBaseRules = 12;

// All ⊆-maximal R ⊆ P with SE(R) ∩ SE(Q) ≠ ∅. Empty family iff SE(Q) = ∅.
std::vector<Program> compatible_sets(const Program& p, const Program& q);
std::vector<Program> compatible_sets(const Program& p, const SESet& sq);

// All ⊆-maximal R ⊆ P with SE(R) ∩ complement(SE(Q)) ≠ ∅.
std::vector<Program> remainder_sets(const Program& p, const Program& q);
std::vector<Program> remainder_sets(const Program& p, const SESet& sq);

// P + Q when Q is unsatisfiable, otherwise ⋂γ(compatible sets) + Q.
// The intersection over an empty selection is ∅, so the result is then Q.
Program pm_revise(const Program& p, const Program& q, const SelectionPolicy& policy);

// The retained part of a revision against a raw SE target: P when the target
// is empty, otherwise ⋂γ of the maximal subsets of P intersecting it.
// pm_revise(P, Q) == pm_revise_retained(P, SE(Q)) + Q.
Program pm_revise_retained(const Program& p, const SESet& target,
                           const SelectionPolicy& policy);

// P when Q holds in every SE interpretation, otherwise ⋂γ(remainder sets).
Program pm_contract(const Program& p, const Program& q, const SelectionPolicy& policy);
Program pm_contract(const Program& p, const SESet& sq, const SelectionPolicy& policy);

// ⋂ of a family of programs; ∅ for the empty family.
Program intersect_family(const std::vector<Program>& family);

}  // namespace lpbc
