#include "lpbc/selection.hpp"

#include <algorithm>
#include <numeric>

namespace lpbc {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)),
                        std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw DomainError("bad rational: " + text);
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

std::string subset_key(const Program& subset) {
    std::string key;
    bool first = true;
    for (const Rule& r : subset.rules()) {
        if (!first) key += " | ";
        key += r.text();
        first = false;
    }
    return key;
}

SelectionPolicy SelectionPolicy::full_meet() { return SelectionPolicy{}; }

SelectionPolicy SelectionPolicy::maxichoice_lex() {
    SelectionPolicy p;
    p.kind = PolicyKind::MaxichoiceLex;
    return p;
}

SelectionPolicy SelectionPolicy::single_choice_lex() {
    SelectionPolicy p;
    p.kind = PolicyKind::SingleChoiceLex;
    return p;
}

SelectionPolicy SelectionPolicy::relational(std::map<std::string, Rational> weights,
                                            bool maximised) {
    SelectionPolicy p;
    p.kind = PolicyKind::Relational;
    p.weights = std::move(weights);
    p.maximised = maximised;
    return p;
}

SelectionPolicy SelectionPolicy::relational_cardinality() {
    SelectionPolicy p;
    p.kind = PolicyKind::Relational;
    p.maximised = true;
    p.scorer = [](const Program& r) {
        return std::optional<Rational>(Rational(static_cast<long long>(r.size())));
    };
    return p;
}

namespace {

std::optional<Rational> score_of(const SelectionPolicy& policy, const Program& r) {
    if (policy.scorer) return policy.scorer(r);
    auto it = policy.weights.find(subset_key(r));
    if (it == policy.weights.end()) return std::nullopt;
    return it->second;
}

}  // namespace

std::vector<Program> select(const SelectionPolicy& policy,
                            const std::vector<Program>& family) {
    std::vector<Program> sorted = family;
    std::sort(sorted.begin(), sorted.end(), [](const Program& a, const Program& b) {
        return subset_key(a) < subset_key(b);
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) return sorted;

    switch (policy.kind) {
        case PolicyKind::FullMeet:
            return sorted;
        case PolicyKind::MaxichoiceLex:
        case PolicyKind::SingleChoiceLex:
            return {sorted.front()};
        case PolicyKind::Relational:
            break;
    }

    if (policy.maximised) {
        for (const Program& a : sorted)
            for (const Program& b : sorted) {
                if (a == b || !a.subset_of(b)) continue;
                auto sa = score_of(policy, a), sb = score_of(policy, b);
                if (!sa || !sb || !(*sa < *sb))
                    throw DomainError("maximised relational policy violated: " +
                                      subset_key(a) + " vs " + subset_key(b));
            }
    }

    std::optional<Rational> best;
    for (const Program& r : sorted) {
        auto s = score_of(policy, r);
        if (s && (!best || *best < *s)) best = *s;
    }
    if (!best) return sorted;  // empty relation on this family: keep everything

    std::vector<Program> chosen;
    for (const Program& r : sorted) {
        auto s = score_of(policy, r);
        if (s && *s == *best) chosen.push_back(r);
    }
    return chosen;
}

}  // namespace lpbc
