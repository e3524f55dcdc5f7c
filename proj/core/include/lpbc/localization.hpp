#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lpbc/program.hpp"
#include "lpbc/semantics.hpp"

namespace lpbc {

// Least fixpoint of: start from {r}, repeatedly add every rule sharing an
// atom (other than the anchor atom) with the rules collected so far.
struct ProgramModule {
    Rule anchor_rule;
    std::string anchor_atom;
    Program rules;
};

// Modules anchored at each rule/atom pair of P whose atom also occurs in Q,
// deduplicated by rule set and ordered by canonical serialization.
struct ModuleFamily {
    std::vector<ProgramModule> modules;
    Program residue;  // rules of P in no relevant module
};

ProgramModule extract_module(const Program& p, const Rule& r, const std::string& atom);
ModuleFamily relevant_modules(const Program& p, const Program& q);

enum class ChangeKind { Revision, Contraction };

// A change operator closed over its configuration (policy or ordering).
struct ChangeOperator {
    ChangeKind kind = ChangeKind::Revision;
    std::function<Program(const Program& base, const Program& q)> apply;
};

// Runs the localized change loop: for growing subfamily sizes, any subfamily
// whose union conflicts with Q (revision: no shared SE model; contraction:
// union entails Q) has each member replaced by the changed union (revision
// results drop Q's rules). Replacements collapse duplicates and the scan
// restarts until no subfamily triggers. Returns the updated rule sets.
std::vector<Program> mod_change(const ModuleFamily& family, const ChangeOperator& op,
                                const Program& q, const Vocabulary& vocab);

// residue + union of the changed modules, plus Q for revisions.
Program localized_change(const Program& p, const ChangeOperator& op, const Program& q);

}  // namespace lpbc
