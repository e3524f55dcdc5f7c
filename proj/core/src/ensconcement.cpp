#include "lpbc/ensconcement.hpp"

#include "lpbc/selection.hpp"

#include <algorithm>
#include <map>

namespace lpbc {
namespace {

// SE(U) ⊊ SE(r): the surrounding rules strictly imply r.
bool strictly_implies(const SESet& su, const SESet& sr) {
    return su.subset_of(sr) && !(su == sr);
}

Vocabulary vocab_for(const Program& p, const SESet& target) {
    for (const auto& a : p.atoms())
        if (!target.vocab().contains(a))
            throw DomainError("program atom '" + a +
                              "' missing from the SE target's vocabulary");
    return target.vocab();
}

// SE of the rules at each level or above, indexed by level.
std::vector<SESet> upper_se(const Ensconcement& ensc, const Vocabulary& vocab) {
    const auto& levels = ensc.levels();
    std::vector<SESet> out(levels.size());
    SESet acc = SESet::full(vocab);
    for (std::size_t l = levels.size(); l-- > 0;) {
        acc = acc.intersected(se_models(levels[l], vocab));
        out[l] = acc;
    }
    return out;
}

}  // namespace

Ensconcement::Ensconcement(std::vector<Program> levels) : levels_(std::move(levels)) {
    for (const Program& level : levels_)
        if (level.empty()) throw DomainError("ensconcement level must be non-empty");
}

Program Ensconcement::base() const {
    Program acc;
    for (const Program& level : levels_) acc = acc.united(level);
    return acc;
}

std::size_t Ensconcement::level_of(const Rule& r) const {
    for (std::size_t l = 0; l < levels_.size(); ++l)
        if (levels_[l].contains(r)) return l;
    throw DomainError("rule not in the ensconcement: " + r.text());
}

Program Ensconcement::upper_set(std::size_t level) const {
    Program acc;
    for (std::size_t l = level; l < levels_.size(); ++l) acc = acc.united(levels_[l]);
    return acc;
}

std::vector<ValidationIssue> ensconcement_issues(const Program& p,
                                                 const std::vector<Program>& levels,
                                                 const Vocabulary& vocab) {
    std::vector<ValidationIssue> issues;

    std::size_t total = 0;
    Program flat;
    for (const Program& level : levels) {
        if (level.empty()) issues.push_back({"partition", "empty level"});
        total += level.size();
        flat = flat.united(level);
    }
    if (!(flat == p) || total != p.size()) {
        issues.push_back({"partition", "levels do not partition the program"});
        return issues;
    }

    Ensconcement ensc(levels);
    std::map<std::string, SESet> rule_se;
    for (const Rule& r : p.rules()) rule_se.emplace(r.text(), se_models(r, vocab));

    for (const Rule& r : p.rules()) {
        Program upper = ensc.upper_set(ensc.level_of(r)).minus(Program({r}));
        if (strictly_implies(se_models(upper, vocab), rule_se.at(r.text())))
            issues.push_back({"no-strict-implication",
                              "rule strictly implied from its level upward: " + r.text()});
    }

    const auto& rules = p.rules();
    for (std::size_t i = 0; i < rules.size(); ++i)
        for (std::size_t j = i + 1; j < rules.size(); ++j)
            if (rule_se.at(rules[i].text()) == rule_se.at(rules[j].text()) &&
                ensc.level_of(rules[i]) != ensc.level_of(rules[j]))
                issues.push_back({"shared-levels",
                                  "strongly equivalent rules on different levels: " +
                                      rules[i].text() + " / " + rules[j].text()});
    return issues;
}

Ensconcement validate_ensconcement(const Program& p, const std::vector<Program>& levels,
                                   const Vocabulary& vocab) {
    auto issues = ensconcement_issues(p, levels, vocab);
    if (!issues.empty()) {
        std::string msg = "invalid ensconcement:";
        for (const auto& issue : issues)
            msg += "\n  [" + issue.condition + "] " + issue.detail;
        throw DomainError(msg);
    }
    return Ensconcement(levels);
}

Program cut_target(const Program& p, const Ensconcement& ensc, const SESet& target) {
    Vocabulary vocab = vocab_for(p, target);
    if (!(ensc.base() == p)) throw DomainError("ensconcement does not cover the program");
    std::vector<SESet> uppers = upper_se(ensc, vocab);
    Program acc;
    for (std::size_t l = 0; l < ensc.levels().size(); ++l)
        if (uppers[l].intersects(target)) acc = acc.united(ensc.levels()[l]);
    return acc;
}

Program cut(const Program& p, const Ensconcement& ensc, const Program& q) {
    Vocabulary vocab = vocab_of({&p, &q});
    return cut_target(p, ensc, se_models(q, vocab));
}

Program cut_minus(const Program& p, const Ensconcement& ensc, const SESet& sq) {
    return cut_target(p, ensc, sq.complemented());
}

Program cut_minus(const Program& p, const Ensconcement& ensc, const Program& q) {
    Vocabulary vocab = vocab_of({&p, &q});
    return cut_minus(p, ensc, se_models(q, vocab));
}

Program ens_revise_retained(const Program& p, const Ensconcement& ensc,
                            const SESet& target) {
    if (target.empty()) return p;
    Vocabulary vocab = vocab_for(p, target);
    Program c = cut_target(p, ensc, target);
    SESet shared = se_models(c, vocab).intersected(target);
    std::vector<Rule> kept;
    for (const Rule& r : p.rules())
        if (shared.subset_of(se_models(r, vocab))) kept.push_back(r);
    return Program(kept);
}

Program ens_revise(const Program& p, const Ensconcement& ensc, const Program& q) {
    Vocabulary vocab = vocab_of({&p, &q});
    return ens_revise_retained(p, ensc, se_models(q, vocab)).united(q);
}

Program ens_contract(const Program& p, const Ensconcement& ensc, const SESet& sq) {
    SESet bar = sq.complemented();
    if (bar.empty()) return p;
    return ens_revise_retained(p, ensc, bar);
}

Program ens_contract(const Program& p, const Ensconcement& ensc, const Program& q) {
    Vocabulary vocab = vocab_of({&p, &q});
    return ens_contract(p, ensc, se_models(q, vocab));
}

namespace {

struct SubsetLevels {
    std::vector<std::uint32_t> level_of;  // by subset mask
    std::size_t level_count = 0;
};

SubsetLevels index_subsets(const Program& p, const SubsetEnsconcement& sens) {
    std::size_t n = p.size();
    if (n > kMaxSubsetRules)
        throw DomainError("subset ordering over " + std::to_string(n) +
                          " rules is too large");
    const auto& rules = p.rules();
    SubsetLevels out;
    out.level_of.assign(std::size_t(1) << n, UINT32_MAX);
    out.level_count = sens.levels().size();
    for (std::size_t l = 0; l < sens.levels().size(); ++l) {
        for (const Program& subset : sens.levels()[l]) {
            std::uint32_t m = 0;
            for (const Rule& r : subset.rules()) {
                auto it = std::find(rules.begin(), rules.end(), r);
                if (it == rules.end())
                    throw DomainError("subset ordering mentions unknown rule: " + r.text());
                m |= std::uint32_t(1) << (it - rules.begin());
            }
            if (out.level_of[m] != UINT32_MAX)
                throw DomainError("subset listed on two levels: " + subset_key(subset));
            out.level_of[m] = std::uint32_t(l);
        }
    }
    for (std::size_t m = 0; m < out.level_of.size(); ++m)
        if (out.level_of[m] == UINT32_MAX)
            throw DomainError("subset ordering misses a subset of the program");
    return out;
}

Program program_from_mask(const Program& p, std::uint32_t m) {
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (m & (std::uint32_t(1) << i)) rules.push_back(p.rules()[i]);
    return Program(rules);
}

Program subset_retained(const Program& p, const SubsetEnsconcement& sens,
                        const SESet& target) {
    if (target.empty()) return p;
    Vocabulary vocab = vocab_for(p, target);
    SubsetLevels idx = index_subsets(p, sens);
    std::vector<SESet> table = subset_se_table(p, vocab);

    // union (as a rule set) of all subsets at each level or above
    std::vector<std::uint32_t> level_or(idx.level_count, 0);
    for (std::uint32_t m = 0; m < idx.level_of.size(); ++m)
        level_or[idx.level_of[m]] |= m;
    std::vector<std::uint32_t> upper_or(idx.level_count, 0);
    std::uint32_t acc = 0;
    for (std::size_t l = idx.level_count; l-- > 0;) {
        acc |= level_or[l];
        upper_or[l] = acc;
    }

    std::uint32_t cut_union = 0;
    for (std::size_t l = 0; l < idx.level_count; ++l)
        if (table[upper_or[l]].intersects(target)) cut_union |= level_or[l];

    SESet shared = table[cut_union].intersected(target);
    std::uint32_t kept = 0;
    for (std::uint32_t m = 0; m < idx.level_of.size(); ++m)
        if (shared.subset_of(table[m])) kept |= m;
    return program_from_mask(p, kept);
}

}  // namespace

SubsetEnsconcement lift_ensconcement(const Program& p, const Ensconcement& ensc) {
    std::size_t n = p.size();
    if (n > kMaxSubsetRules)
        throw DomainError("subset lift over " + std::to_string(n) + " rules is too large");
    if (!(ensc.base() == p)) throw DomainError("ensconcement does not cover the program");

    std::vector<std::size_t> rule_level(n);
    for (std::size_t i = 0; i < n; ++i) rule_level[i] = ensc.level_of(p.rules()[i]);

    std::size_t rule_levels = ensc.levels().size();
    // one subset level per rule level, plus the empty subset strictly on top
    std::vector<std::vector<Program>> levels(rule_levels + 1);
    for (std::uint32_t m = 1; m < (std::uint32_t(1) << n); ++m) {
        std::size_t lvl = SIZE_MAX;
        for (std::size_t i = 0; i < n; ++i)
            if (m & (std::uint32_t(1) << i)) lvl = std::min(lvl, rule_level[i]);
        levels[lvl].push_back(program_from_mask(p, m));
    }
    levels[rule_levels].push_back(Program());
    levels.erase(std::remove_if(levels.begin(), levels.end(),
                                [](const auto& fam) { return fam.empty(); }),
                 levels.end());
    return SubsetEnsconcement(std::move(levels));
}

std::vector<ValidationIssue> subset_ensconcement_issues(const Program& p,
                                                        const SubsetEnsconcement& sens,
                                                        const Vocabulary& vocab) {
    std::vector<ValidationIssue> issues;
    if (p.size() > 6) {
        issues.push_back({"partition", "exhaustive subset validation is capped at 6 rules"});
        return issues;
    }
    SubsetLevels idx;
    try {
        idx = index_subsets(p, sens);
    } catch (const DomainError& e) {
        issues.push_back({"partition", e.what()});
        return issues;
    }
    std::vector<SESet> table = subset_se_table(p, vocab);
    std::size_t count = idx.level_of.size();

    for (std::uint32_t r = 0; r < count; ++r) {
        // union of the subsets of P∖R at R's level or above
        std::uint32_t upper = 0;
        for (std::uint32_t m = 0; m < count; ++m)
            if ((m & r) == 0 && idx.level_of[m] >= idx.level_of[r]) upper |= m;
        if (strictly_implies(table[upper], table[r]))
            issues.push_back({"no-strict-implication",
                              "subset strictly implied from its level upward: {" +
                                  subset_key(program_from_mask(p, r)) + "}"});
    }
    for (std::uint32_t m1 = 0; m1 < count; ++m1)
        for (std::uint32_t m2 = m1 + 1; m2 < count; ++m2)
            if (table[m1] == table[m2] && idx.level_of[m1] != idx.level_of[m2])
                issues.push_back({"shared-levels",
                                  "strongly equivalent subsets on different levels: {" +
                                      subset_key(program_from_mask(p, m1)) + "} / {" +
                                      subset_key(program_from_mask(p, m2)) + "}"});
    return issues;
}

Program subset_ens_revise(const Program& p, const SubsetEnsconcement& sens,
                          const Program& q) {
    Vocabulary vocab = vocab_of({&p, &q});
    return subset_retained(p, sens, se_models(q, vocab)).united(q);
}

Program subset_ens_contract(const Program& p, const SubsetEnsconcement& sens,
                            const SESet& sq) {
    SESet bar = sq.complemented();
    if (bar.empty()) return p;
    return subset_retained(p, sens, bar);
}

Program subset_ens_contract(const Program& p, const SubsetEnsconcement& sens,
                            const Program& q) {
    Vocabulary vocab = vocab_of({&p, &q});
    return subset_ens_contract(p, sens, se_models(q, vocab));
}

namespace {

// rules grouped by identical SE models; each group stays together as one unit
std::vector<Program> equivalence_groups(const Program& p, const Vocabulary& vocab) {
    std::vector<std::pair<SESet, std::vector<Rule>>> groups;
    for (const Rule& r : p.rules()) {
        SESet s = se_models(r, vocab);
        bool placed = false;
        for (auto& [gs, rules] : groups)
            if (gs == s) { rules.push_back(r); placed = true; break; }
        if (!placed) groups.push_back({s, {r}});
    }
    std::vector<Program> out;
    for (auto& [gs, rules] : groups) out.emplace_back(rules);
    return out;
}

}  // namespace

PartitionEnsconcement ensconcement_from_partition(const Program& keep,
                                                  const Program& discard) {
    if (!keep.intersected(discard).empty())
        throw DomainError("keep and discard overlap");
    Program p = keep.united(discard);
    Vocabulary vocab = vocab_of({&p});

    struct Level {
        int zone;  // 0 = discard, 1 = keep
        std::vector<Program> groups;
    };

    std::vector<Level> levels;
    for (int zone : {0, 1}) {
        const Program& part = zone == 0 ? discard : keep;
        if (part.empty()) continue;
        Level level{zone, equivalence_groups(part, vocab)};
        for (const Program& g : level.groups)
            for (const Rule& r : g.rules()) {
                const Program& other = zone == 0 ? keep : discard;
                Program same_se;
                for (const Rule& r2 : other.rules())
                    if (strongly_equivalent(Program({r}), Program({r2}), vocab))
                        same_se = same_se.united(Program({r2}));
                if (!same_se.empty())
                    throw DomainError(
                        "strongly equivalent rules straddle the partition: " + r.text() +
                        " / " + same_se.rules().front().text());
            }
        levels.push_back(std::move(level));
    }

    auto flatten = [&]() {
        std::vector<Program> out;
        for (const Level& level : levels) {
            Program merged;
            for (const Program& g : level.groups) merged = merged.united(g);
            out.push_back(merged);
        }
        return out;
    };

    std::vector<std::string> repairs;
    std::size_t cap = p.size() * p.size() * 4 + 16;
    for (std::size_t step = 0;; ++step) {
        if (levels.empty()) return {Ensconcement(), repairs};
        Ensconcement ensc(flatten());
        // locate the lowest rule strictly implied from its level upward
        const Rule* offender = nullptr;
        for (std::size_t l = 0; l < levels.size() && !offender; ++l)
            for (const Program& g : levels[l].groups) {
                const Rule& r = g.rules().front();
                Program upper = ensc.upper_set(l).minus(Program({r}));
                if (strictly_implies(se_models(upper, vocab), se_models(r, vocab))) {
                    offender = &g.rules().front();
                    break;
                }
            }
        if (!offender) return {ensc, repairs};
        if (step >= cap)
            throw DomainError("no valid ordering reachable for this partition");

        // promote the offender's group one position up within its zone
        bool promoted = false;
        for (std::size_t l = 0; l < levels.size() && !promoted; ++l) {
            auto& groups = levels[l].groups;
            for (std::size_t gi = 0; gi < groups.size(); ++gi) {
                if (!groups[gi].contains(*offender)) continue;
                bool fresh_slot = groups.size() > 1;
                bool same_zone_above =
                    l + 1 < levels.size() && levels[l + 1].zone == levels[l].zone;
                if (!fresh_slot && !same_zone_above)
                    throw DomainError("no valid ordering reachable for this partition: " +
                                      offender->text() +
                                      " is strictly implied at the top of its zone");
                Program moved = groups[gi];
                groups.erase(groups.begin() + gi);
                bool level_emptied = groups.empty();
                Level fresh{levels[l].zone, {moved}};
                levels.insert(levels.begin() + l + 1, std::move(fresh));
                if (level_emptied) levels.erase(levels.begin() + l);
                repairs.push_back("promoted { " + subset_key(moved) +
                                  " } to its own level");
                promoted = true;
                break;
            }
        }
    }
}

std::vector<Ensconcement> enumerate_ensconcements(const Program& p,
                                                  const Vocabulary& vocab) {
    std::vector<Program> groups = equivalence_groups(p, vocab);
    if (groups.size() > 8)
        throw DomainError("too many distinct rule classes to enumerate orderings");

    std::vector<Ensconcement> out;
    if (p.empty()) {
        out.emplace_back();
        return out;
    }

    // place groups one at a time: into an existing level or a fresh level at
    // any position; every ordered partition arises exactly once
    std::vector<Program> levels;
    auto recurse = [&](auto&& self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            if (ensconcement_issues(p, levels, vocab).empty())
                out.emplace_back(levels);
            return;
        }
        for (std::size_t l = 0; l < levels.size(); ++l) {
            levels[l] = levels[l].united(groups[gi]);
            self(self, gi + 1);
            levels[l] = levels[l].minus(groups[gi]);
        }
        for (std::size_t pos = 0; pos <= levels.size(); ++pos) {
            levels.insert(levels.begin() + pos, groups[gi]);
            self(self, gi + 1);
            levels.erase(levels.begin() + pos);
        }
    };
    recurse(recurse, 0);
    return out;
}

}  // namespace lpbc
