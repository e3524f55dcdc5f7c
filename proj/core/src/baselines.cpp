#include "lpbc/baselines.hpp"

#include <algorithm>
#include <functional>

#include "lpbc/partial_meet.hpp"
#include "lpbc/selection.hpp"

namespace lpbc {

bool pair_leq(SEPair a, SEPair b) {
    if ((a.y & ~b.y) != 0) return false;
    if (a.y == b.y) return (a.x & ~b.x) == 0;
    return true;
}

std::vector<Mask> sigma(const std::vector<Mask>& e, const std::vector<Mask>& ep) {
    std::vector<Mask> out;
    for (Mask a1 : e) {
        bool qualifies = false;
        for (Mask b1 : ep) {
            Mask d1 = a1 ^ b1;
            bool minimal = true;
            for (Mask a2 : e) {
                for (Mask b2 : ep) {
                    Mask d2 = a2 ^ b2;
                    if ((d2 & ~d1) == 0 && d2 != d1) { minimal = false; break; }
                }
                if (!minimal) break;
            }
            if (minimal) { qualifies = true; break; }
        }
        if (qualifies) out.push_back(a1);
    }
    return out;
}

std::vector<SEPair> sigma(const std::vector<SEPair>& e, const std::vector<SEPair>& ep) {
    std::vector<SEPair> out;
    for (SEPair a1 : e) {
        bool qualifies = false;
        for (SEPair b1 : ep) {
            SEPair d1{a1.x ^ b1.x, a1.y ^ b1.y};
            bool minimal = true;
            for (SEPair a2 : e) {
                for (SEPair b2 : ep) {
                    SEPair d2{a2.x ^ b2.x, a2.y ^ b2.y};
                    if (pair_leq(d2, d1) && !pair_leq(d1, d2)) { minimal = false; break; }
                }
                if (!minimal) break;
            }
            if (minimal) { qualifies = true; break; }
        }
        if (qualifies) out.push_back(a1);
    }
    return out;
}

SESet distance_revise_se(const Program& p, const Program& q) {
    return distance_revise_se(p, q, vocab_of({&p, &q}));
}

SESet distance_revise_se(const Program& p, const Program& q, const Vocabulary& vocab) {
    SESet sp = se_models(p, vocab);
    SESet sq = se_models(q, vocab);
    if (sp.empty()) return sq;

    std::vector<Mask> min_y = sigma(classical_models(q, vocab), classical_models(p, vocab));
    std::vector<SEPair> min_se = sigma(sq.members(), sp.members());

    SESet out(vocab);
    for (Mask y : min_y) {
        out.insert({y, y});
        Mask x = (y - 1) & y;
        if (y == 0) continue;
        while (true) {
            if (std::find(min_se.begin(), min_se.end(), SEPair{x, y}) != min_se.end())
                out.insert({x, y});
            if (x == 0) break;
            x = (x - 1) & y;
        }
    }
    return out;
}

Program distance_revise_program(const Program& p, const Program& q) {
    return canonical_program(distance_revise_se(p, q));
}

Program distance_revise_program(const Program& p, const Program& q,
                                const Vocabulary& vocab) {
    return canonical_program(distance_revise_se(p, q, vocab));
}

namespace {

// maximal R with Q ⊆ R ⊆ P fulfilling `alive`
std::vector<Program> screened_remainders(const Program& p, const Program& q,
                                         const std::function<bool(const Program&)>& alive) {
    if (!q.subset_of(p)) throw DomainError("screened remainders need Q ⊆ P");
    Program extra = p.minus(q);
    if (extra.size() > kMaxBaseRules)
        throw DomainError("subset enumeration is capped at " +
                          std::to_string(kMaxBaseRules) + " rules");
    std::size_t n = extra.size();
    std::vector<std::uint32_t> hits;
    for (std::uint32_t m = 0; m < (std::uint32_t(1) << n); ++m) {
        std::vector<Rule> rules(q.rules());
        for (std::size_t i = 0; i < n; ++i)
            if (m & (std::uint32_t(1) << i)) rules.push_back(extra.rules()[i]);
        if (alive(Program(rules))) hits.push_back(m);
    }
    std::vector<Program> out;
    for (std::uint32_t m : hits) {
        bool maximal = true;
        for (std::uint32_t m2 : hits)
            if (m2 != m && (m & ~m2) == 0) { maximal = false; break; }
        if (!maximal) continue;
        std::vector<Rule> rules(q.rules());
        for (std::size_t i = 0; i < n; ++i)
            if (m & (std::uint32_t(1) << i)) rules.push_back(extra.rules()[i]);
        out.emplace_back(rules);
    }
    std::sort(out.begin(), out.end(), [](const Program& a, const Program& b) {
        return subset_key(a) < subset_key(b);
    });
    return out;
}

Program least_or(const std::vector<Program>& family, const Program& fallback) {
    if (family.empty()) return fallback;
    return family.front();
}

}  // namespace

std::vector<Program> screened_remainders_as(const Program& p, const Program& q) {
    Vocabulary vocab = vocab_of({&p, &q});
    return screened_remainders(p, q, [&](const Program& r) {
        return !answer_sets(r, vocab).empty();
    });
}

std::vector<Program> screened_remainders_se(const Program& p, const Program& q) {
    Vocabulary vocab = vocab_of({&p, &q});
    return screened_remainders(p, q, [&](const Program& r) {
        return is_satisfiable(r, vocab);
    });
}

Program screened_consolidate_as(const Program& p, const Program& q) {
    return least_or(screened_remainders_as(p, q), p);
}

Program screened_consolidate_se(const Program& p, const Program& q) {
    return least_or(screened_remainders_se(p, q), p);
}

Program pm_revise_as(const Program& p, const Program& q) {
    Vocabulary vocab = vocab_of({&p, &q});
    if (p.size() > kMaxBaseRules)
        throw DomainError("subset enumeration is capped at " +
                          std::to_string(kMaxBaseRules) + " rules");

    std::size_t n = p.size();
    std::vector<std::uint32_t> hits;
    for (std::uint32_t m = 0; m < (std::uint32_t(1) << n); ++m) {
        std::vector<Rule> rules(q.rules());
        for (std::size_t i = 0; i < n; ++i)
            if (m & (std::uint32_t(1) << i)) rules.push_back(p.rules()[i]);
        if (!answer_sets(Program(rules), vocab).empty()) hits.push_back(m);
    }
    std::vector<Program> family;
    for (std::uint32_t m : hits) {
        bool maximal = true;
        for (std::uint32_t m2 : hits)
            if (m2 != m && (m & ~m2) == 0) { maximal = false; break; }
        if (!maximal) continue;
        std::vector<Rule> rules;
        for (std::size_t i = 0; i < n; ++i)
            if (m & (std::uint32_t(1) << i)) rules.push_back(p.rules()[i]);
        family.emplace_back(rules);
    }
    std::sort(family.begin(), family.end(), [](const Program& a, const Program& b) {
        return subset_key(a) < subset_key(b);
    });

    if (family.empty() && answer_sets(q, vocab).empty()) return p.united(q);
    return least_or(family, Program()).united(q);
}

bool c_update_equivalent(const Program& p1, const Program& p2) {
    Vocabulary vocab = vocab_of({&p1, &p2});
    return strongly_equivalent(p1.minus(p2), p2.minus(p1), vocab);
}

}  // namespace lpbc
