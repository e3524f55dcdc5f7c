#include "lpbc/localization.hpp"

#include <algorithm>
#include <set>

#include "lpbc/selection.hpp"

namespace lpbc {

ProgramModule extract_module(const Program& p, const Rule& r, const std::string& atom) {
    if (!p.contains(r)) throw DomainError("anchor rule not in program: " + r.text());
    auto anchor_atoms = r.atoms();
    if (std::find(anchor_atoms.begin(), anchor_atoms.end(), atom) == anchor_atoms.end())
        throw DomainError("anchor atom '" + atom + "' not in rule: " + r.text());

    Program current({r});
    while (true) {
        std::set<std::string> reach;
        for (const auto& a : r.atoms()) reach.insert(a);
        for (const auto& a : current.atoms()) reach.insert(a);
        reach.erase(atom);

        std::vector<Rule> next{r};
        for (const Rule& r2 : p.rules()) {
            for (const auto& a : r2.atoms())
                if (reach.count(a)) { next.push_back(r2); break; }
        }
        Program grown(next);
        if (grown == current) break;
        current = grown;
    }
    return {r, atom, current};
}

ModuleFamily relevant_modules(const Program& p, const Program& q) {
    std::set<std::string> q_atoms;
    for (const auto& a : q.atoms()) q_atoms.insert(a);

    std::vector<ProgramModule> found;
    for (const Rule& r : p.rules())
        for (const auto& a : r.atoms())
            if (q_atoms.count(a)) found.push_back(extract_module(p, r, a));

    std::sort(found.begin(), found.end(), [](const ProgramModule& x, const ProgramModule& y) {
        auto kx = subset_key(x.rules), ky = subset_key(y.rules);
        if (kx != ky) return kx < ky;
        if (x.anchor_rule != y.anchor_rule) return x.anchor_rule < y.anchor_rule;
        return x.anchor_atom < y.anchor_atom;
    });

    ModuleFamily family;
    Program covered;
    for (auto& m : found) {
        if (!family.modules.empty() &&
            family.modules.back().rules == m.rules)
            continue;  // same rule set from another anchor
        covered = covered.united(m.rules);
        family.modules.push_back(std::move(m));
    }
    family.residue = p.minus(covered);
    return family;
}

std::vector<Program> mod_change(const ModuleFamily& family, const ChangeOperator& op,
                                const Program& q, const Vocabulary& vocab) {
    if (!op.apply) throw DomainError("change operator has no implementation");
    SESet sq = se_models(q, vocab);
    SESet conflict_target = op.kind == ChangeKind::Revision ? sq : sq.complemented();

    std::vector<Program> mods;
    for (const auto& m : family.modules) mods.push_back(m.rules);
    std::sort(mods.begin(), mods.end(), [](const Program& a, const Program& b) {
        return subset_key(a) < subset_key(b);
    });
    mods.erase(std::unique(mods.begin(), mods.end()), mods.end());

    const std::size_t cap = 1000;
    for (std::size_t step = 0; step < cap; ++step) {
        bool replaced = false;
        for (std::size_t n = 1; n <= mods.size() && !replaced; ++n) {
            // size-n index combinations in lexicographic order
            std::vector<std::size_t> idx(n);
            for (std::size_t i = 0; i < n; ++i) idx[i] = i;
            while (true) {
                Program u;
                for (std::size_t i : idx) u = u.united(mods[i]);
                if (!se_models(u, vocab).intersects(conflict_target)) {
                    Program changed = op.apply(u, q);
                    if (op.kind == ChangeKind::Revision) changed = changed.minus(q);
                    std::vector<Program> next;
                    for (std::size_t i = 0; i < mods.size(); ++i)
                        next.push_back(std::binary_search(idx.begin(), idx.end(), i)
                                           ? changed
                                           : mods[i]);
                    std::sort(next.begin(), next.end(), [](const Program& a, const Program& b) {
                        return subset_key(a) < subset_key(b);
                    });
                    next.erase(std::unique(next.begin(), next.end()), next.end());
                    if (next != mods) {
                        mods = std::move(next);
                        replaced = true;
                        break;
                    }
                }
                // advance the combination
                std::size_t i = n;
                while (i-- > 0) {
                    if (idx[i] != i + mods.size() - n) {
                        ++idx[i];
                        for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
                        break;
                    }
                    if (i == 0) { i = SIZE_MAX; break; }
                }
                if (i == SIZE_MAX) break;
            }
        }
        if (!replaced) return mods;
    }
    throw DomainError("module change did not stabilise");
}

Program localized_change(const Program& p, const ChangeOperator& op, const Program& q) {
    Vocabulary vocab = vocab_of({&p, &q});
    ModuleFamily family = relevant_modules(p, q);
    Program acc = family.residue;
    for (const Program& m : mod_change(family, op, q, vocab)) acc = acc.united(m);
    if (op.kind == ChangeKind::Revision) acc = acc.united(q);
    return acc;
}

}  // namespace lpbc
