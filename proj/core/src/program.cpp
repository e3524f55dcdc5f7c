#include "lpbc/program.hpp"

#include <algorithm>

namespace lpbc {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> atoms) : atoms_(sorted_unique(std::move(atoms))) {}

bool Vocabulary::contains(const std::string& atom) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

std::size_t Vocabulary::index(const std::string& atom) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
    if (it == atoms_.end() || *it != atom)
        throw DomainError("atom '" + atom + "' not in vocabulary");
    return static_cast<std::size_t>(it - atoms_.begin());
}

Vocabulary Vocabulary::merged(const Vocabulary& other) const {
    std::vector<std::string> all = atoms_;
    all.insert(all.end(), other.atoms_.begin(), other.atoms_.end());
    return Vocabulary(std::move(all));
}

Rule::Rule(std::vector<std::string> head_pos, std::vector<std::string> head_neg,
           std::vector<std::string> body_pos, std::vector<std::string> body_neg)
    : head_pos_(sorted_unique(std::move(head_pos))),
      head_neg_(sorted_unique(std::move(head_neg))),
      body_pos_(sorted_unique(std::move(body_pos))),
      body_neg_(sorted_unique(std::move(body_neg))) {}

bool Rule::is_fact() const {
    return head_pos_.size() == 1 && head_neg_.empty() && body_pos_.empty() && body_neg_.empty();
}

std::vector<std::string> Rule::atoms() const {
    std::vector<std::string> all = head_pos_;
    all.insert(all.end(), head_neg_.begin(), head_neg_.end());
    all.insert(all.end(), body_pos_.begin(), body_pos_.end());
    all.insert(all.end(), body_neg_.begin(), body_neg_.end());
    return sorted_unique(std::move(all));
}

std::string Rule::text() const {
    std::string out;
    bool first = true;
    for (const auto& a : head_pos_) {
        if (!first) out += " ; ";
        out += a;
        first = false;
    }
    for (const auto& a : head_neg_) {
        if (!first) out += " ; ";
        out += "not " + a;
        first = false;
    }
    if (!body_pos_.empty() || !body_neg_.empty()) {
        if (!first) out += " ";
        out += ":- ";
        first = true;
        for (const auto& a : body_pos_) {
            if (!first) out += ", ";
            out += a;
            first = false;
        }
        for (const auto& a : body_neg_) {
            if (!first) out += ", ";
            out += "not " + a;
            first = false;
        }
    }
    out += ".";
    return out;
}

Program::Program(std::vector<Rule> rules) : rules_(std::move(rules)) {
    std::sort(rules_.begin(), rules_.end(),
              [](const Rule& a, const Rule& b) { return a.text() < b.text(); });
    rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
}

bool Program::contains(const Rule& r) const {
    return std::find(rules_.begin(), rules_.end(), r) != rules_.end();
}

std::vector<std::string> Program::atoms() const {
    std::vector<std::string> all;
    for (const auto& r : rules_) {
        auto ra = r.atoms();
        all.insert(all.end(), ra.begin(), ra.end());
    }
    return sorted_unique(std::move(all));
}

Program Program::united(const Program& other) const {
    std::vector<Rule> all = rules_;
    all.insert(all.end(), other.rules_.begin(), other.rules_.end());
    return Program(std::move(all));
}

Program Program::intersected(const Program& other) const {
    std::vector<Rule> kept;
    for (const auto& r : rules_)
        if (other.contains(r)) kept.push_back(r);
    return Program(std::move(kept));
}

Program Program::minus(const Program& other) const {
    std::vector<Rule> kept;
    for (const auto& r : rules_)
        if (!other.contains(r)) kept.push_back(r);
    return Program(std::move(kept));
}

bool Program::subset_of(const Program& other) const {
    for (const auto& r : rules_)
        if (!other.contains(r)) return false;
    return true;
}

std::string print_program(const Program& p) {
    std::string out;
    for (const auto& r : p.rules()) {
        out += r.text();
        out += "\n";
    }
    return out;
}

Vocabulary vocab_of(std::initializer_list<const Program*> programs) {
    std::vector<std::string> all;
    for (const Program* p : programs) {
        auto pa = p->atoms();
        all.insert(all.end(), pa.begin(), pa.end());
    }
    return Vocabulary(std::move(all));
}

}  // namespace lpbc
