#pragma once

#include <string>
#include <vector>

#include "lpbc/program.hpp"
#include "lpbc/semantics.hpp"

namespace lpbc {

// Subset orderings enumerate 2^P; refuse beyond this many rules.
inline constexpr std::size_t kMaxSubsetRules = 12;

// Total preorder over the rules of a program, stored as a partition into
// levels, least entrenched first. A valid ordering satisfies:
//  - no-strict-implication: for every rule r, the rules at r's level or above
//    (without r itself) do not strictly imply r;
//  - shared-levels: strongly equivalent rules sit on the same level.
class Ensconcement {
public:
    Ensconcement() = default;
    explicit Ensconcement(std::vector<Program> levels);

    const std::vector<Program>& levels() const { return levels_; }
    Program base() const;                     // union of all levels
    std::size_t level_of(const Rule& r) const;  // throws DomainError if unknown
    Program upper_set(std::size_t level) const;  // rules at `level` or above

private:
    std::vector<Program> levels_;
};

struct ValidationIssue {
    std::string condition;  // "partition", "no-strict-implication", "shared-levels"
    std::string detail;
};

// Checks that `levels` partitions p and satisfies both ordering conditions.
std::vector<ValidationIssue> ensconcement_issues(const Program& p,
                                                 const std::vector<Program>& levels,
                                                 const Vocabulary& vocab);

// Same checks, throwing DomainError with the collected issues on failure.
Ensconcement validate_ensconcement(const Program& p, const std::vector<Program>& levels,
                                   const Vocabulary& vocab);

// { r ∈ P | SE(rules at r's level or above) ∩ target ≠ ∅ }.
Program cut_target(const Program& p, const Ensconcement& ensc, const SESet& target);

// cut_target against SE(Q), resp. against its complement.
Program cut(const Program& p, const Ensconcement& ensc, const Program& q);
Program cut_minus(const Program& p, const Ensconcement& ensc, const Program& q);
Program cut_minus(const Program& p, const Ensconcement& ensc, const SESet& sq);

// The rules of P kept by a revision against a raw SE target: P when the
// target is empty, otherwise every rule whose SE models cover
// SE(cut_target) ∩ target.
Program ens_revise_retained(const Program& p, const Ensconcement& ensc,
                            const SESet& target);

// P + Q when Q is unsatisfiable, otherwise the retained rules plus Q.
Program ens_revise(const Program& p, const Ensconcement& ensc, const Program& q);

// P when Q holds in every SE interpretation, otherwise the rules covering
// SE(cut⁻) ∩ complement(SE(Q)).
Program ens_contract(const Program& p, const Ensconcement& ensc, const Program& q);
Program ens_contract(const Program& p, const Ensconcement& ensc, const SESet& sq);

// Preorder over all subsets of P, least first; each level is a family of
// subsets. Change operators select subsets instead of rules and flatten
// the selection to a program.
class SubsetEnsconcement {
public:
    SubsetEnsconcement() = default;
    explicit SubsetEnsconcement(std::vector<std::vector<Program>> levels)
        : levels_(std::move(levels)) {}
    const std::vector<std::vector<Program>>& levels() const { return levels_; }

private:
    std::vector<std::vector<Program>> levels_;
};

// Lifts a rule ordering to subsets: a non-empty subset sits at the level of
// its least entrenched rule, the empty subset strictly on top. Singletons are
// ordered exactly as the underlying rules.
SubsetEnsconcement lift_ensconcement(const Program& p, const Ensconcement& ensc);

// Exhaustive validation of an explicit subset ordering (capped at 6 rules):
// levels must partition 2^P and satisfy the subset versions of the two
// ordering conditions.
std::vector<ValidationIssue> subset_ensconcement_issues(const Program& p,
                                                        const SubsetEnsconcement& sens,
                                                        const Vocabulary& vocab);

Program subset_ens_revise(const Program& p, const SubsetEnsconcement& sens,
                          const Program& q);
Program subset_ens_contract(const Program& p, const SubsetEnsconcement& sens,
                            const Program& q);
Program subset_ens_contract(const Program& p, const SubsetEnsconcement& sens,
                            const SESet& sq);

struct PartitionEnsconcement {
    Ensconcement ensconcement;
    std::vector<std::string> repairs;  // human-readable promotion log
};

// Builds an ordering that puts every discarded rule strictly below every kept
// rule, then repairs validity by promoting offending groups of strongly
// equivalent rules within their zone. Throws DomainError when keep/discard
// overlap, a group of strongly equivalent rules straddles the partition, or
// no valid ordering is reachable by such promotions.
PartitionEnsconcement ensconcement_from_partition(const Program& keep,
                                                  const Program& discard);

// Every valid ensconcement of p: all ordered partitions of the strong
// equivalence classes of p's rules that pass validation.
std::vector<Ensconcement> enumerate_ensconcements(const Program& p,
                                                  const Vocabulary& vocab);

}  // namespace lpbc
