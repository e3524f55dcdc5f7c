#include "lpbc/partial_meet.hpp"

#include <algorithm>

namespace lpbc {
namespace {

void check_size(const Program& p) {
    if (p.size() > kMaxBaseRules)
        throw DomainError("base program has " + std::to_string(p.size()) +
                          " rules; subset enumeration is capped at " +
                          std::to_string(kMaxBaseRules));
}

Vocabulary vocab_for(const Program& p, const SESet& target) {
    for (const auto& a : p.atoms())
        if (!target.vocab().contains(a))
            throw DomainError("program atom '" + a +
                              "' missing from the SE target's vocabulary");
    return target.vocab();
}

// ⊆-maximal subsets R of p with SE(R) ∩ target ≠ ∅.
std::vector<Program> maximal_hitting_subsets(const Program& p, const SESet& target) {
    check_size(p);
    Vocabulary vocab = vocab_for(p, target);
    const auto& rules = p.rules();
    std::size_t n = rules.size();

    std::vector<SESet> subset_se = subset_se_table(p, vocab);
    std::vector<std::uint32_t> hits;
    for (std::uint32_t m = 0; m < (std::uint32_t(1) << n); ++m)
        if (subset_se[m].intersects(target)) hits.push_back(m);

    std::vector<Program> out;
    for (std::uint32_t m : hits) {
        bool maximal = true;
        for (std::uint32_t m2 : hits)
            if (m2 != m && (m & ~m2) == 0) { maximal = false; break; }
        if (!maximal) continue;
        std::vector<Rule> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (m & (std::uint32_t(1) << i)) sub.push_back(rules[i]);
        out.emplace_back(sub);
    }
    return out;
}

}  // namespace

Program intersect_family(const std::vector<Program>& family) {
    if (family.empty()) return Program();
    Program acc = family.front();
    for (std::size_t i = 1; i < family.size(); ++i) acc = acc.intersected(family[i]);
    return acc;
}

std::vector<Program> compatible_sets(const Program& p, const SESet& sq) {
    return maximal_hitting_subsets(p, sq);
}

std::vector<Program> compatible_sets(const Program& p, const Program& q) {
    Vocabulary vocab = vocab_of({&p, &q});
    return compatible_sets(p, se_models(q, vocab));
}

std::vector<Program> remainder_sets(const Program& p, const SESet& sq) {
    return maximal_hitting_subsets(p, sq.complemented());
}

std::vector<Program> remainder_sets(const Program& p, const Program& q) {
    Vocabulary vocab = vocab_of({&p, &q});
    return remainder_sets(p, se_models(q, vocab));
}

Program pm_revise_retained(const Program& p, const SESet& target,
                           const SelectionPolicy& policy) {
    if (target.empty()) return p;
    return intersect_family(select(policy, maximal_hitting_subsets(p, target)));
}

Program pm_revise(const Program& p, const Program& q, const SelectionPolicy& policy) {
    Vocabulary vocab = vocab_of({&p, &q});
    return pm_revise_retained(p, se_models(q, vocab), policy).united(q);
}

Program pm_contract(const Program& p, const SESet& sq, const SelectionPolicy& policy) {
    SESet bar = sq.complemented();
    if (bar.empty()) return p;
    return intersect_family(select(policy, maximal_hitting_subsets(p, bar)));
}

Program pm_contract(const Program& p, const Program& q, const SelectionPolicy& policy) {
    Vocabulary vocab = vocab_of({&p, &q});
    return pm_contract(p, se_models(q, vocab), policy);
}

}  // namespace lpbc
