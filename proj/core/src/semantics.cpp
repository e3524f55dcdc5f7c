#include "lpbc/semantics.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace lpbc {
namespace {

struct RuleImage {
    Mask hp = 0, hn = 0, bp = 0, bn = 0;
};

RuleImage image_of(const Rule& r, const Vocabulary& vocab) {
    RuleImage img;
    img.hp = mask_of(r.head_pos(), vocab);
    img.hn = mask_of(r.head_neg(), vocab);
    img.bp = mask_of(r.body_pos(), vocab);
    img.bn = mask_of(r.body_neg(), vocab);
    return img;
}

std::vector<RuleImage> images_of(const Program& p, const Vocabulary& vocab) {
    std::vector<RuleImage> imgs;
    imgs.reserve(p.size());
    for (const Rule& r : p.rules()) imgs.push_back(image_of(r, vocab));
    return imgs;
}

bool satisfies(const RuleImage& r, Mask y) {
    if ((r.bp & y) != r.bp) return true;
    if ((r.bn & y) != 0) return true;
    if ((r.hp & y) != 0) return true;
    return (r.hn & ~y & r.hn) != 0;
}

// Body fires and the reduced head H⁺ must be met: used for reduct models.
bool satisfies_reduced(const RuleImage& r, Mask y, Mask x) {
    // the reduct keeps r only when hn ⊆ y and bn ∩ y = ∅
    if ((r.hn & y) != r.hn) return true;
    if ((r.bn & y) != 0) return true;
    if ((r.bp & x) != r.bp) return true;
    return (r.hp & x) != 0;
}

std::size_t pow3(std::size_t n) {
    std::size_t v = 1;
    while (n--) v *= 3;
    return v;
}

void check_atom_cap(const Vocabulary& vocab) {
    if (vocab.size() > SESet::kMaxSeAtoms)
        throw DomainError("vocabulary has " + std::to_string(vocab.size()) +
                          " atoms; SE enumeration supports at most " +
                          std::to_string(SESet::kMaxSeAtoms));
}

}  // namespace

Mask mask_of(const std::vector<std::string>& atoms, const Vocabulary& vocab) {
    Mask m = 0;
    for (const auto& a : atoms) m |= Mask(1) << vocab.index(a);
    return m;
}

std::vector<std::string> atoms_of(Mask m, const Vocabulary& vocab) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vocab.size(); ++i)
        if (m & (Mask(1) << i)) out.push_back(vocab.atoms()[i]);
    return out;
}

SESet::SESet(const Vocabulary& vocab) : vocab_(vocab) {
    check_atom_cap(vocab);
    lattice_size_ = pow3(vocab.size());
    words_.assign((lattice_size_ + 63) / 64, 0);
}

SESet SESet::full(const Vocabulary& vocab) {
    SESet s(vocab);
    for (std::size_t i = 0; i < s.lattice_size_; ++i)
        s.words_[i / 64] |= std::uint64_t(1) << (i % 64);
    return s;
}

SESet SESet::of(const Vocabulary& vocab, const std::vector<SEPair>& members) {
    SESet s(vocab);
    for (SEPair p : members) s.insert(p);
    return s;
}

std::size_t SESet::index_of(SEPair p, std::size_t n_atoms) {
    if ((p.x & ~p.y) != 0) throw DomainError("SE pair requires x ⊆ y");
    std::size_t idx = 0;
    for (std::size_t i = n_atoms; i-- > 0;) {
        std::size_t trit = ((p.y >> i) & 1) + ((p.x >> i) & 1);
        idx = idx * 3 + trit;
    }
    return idx;
}

SEPair SESet::pair_at(std::size_t index, std::size_t n_atoms) {
    SEPair p;
    for (std::size_t i = 0; i < n_atoms; ++i) {
        std::size_t trit = index % 3;
        index /= 3;
        if (trit >= 1) p.y |= Mask(1) << i;
        if (trit == 2) p.x |= Mask(1) << i;
    }
    return p;
}

bool SESet::contains(SEPair p) const {
    std::size_t idx = index_of(p, vocab_.size());
    return (words_[idx / 64] >> (idx % 64)) & 1;
}

void SESet::insert(SEPair p) {
    std::size_t idx = index_of(p, vocab_.size());
    words_[idx / 64] |= std::uint64_t(1) << (idx % 64);
}

std::size_t SESet::count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += std::size_t(__builtin_popcountll(w));
    return n;
}

std::vector<SEPair> SESet::members() const {
    std::vector<SEPair> out;
    for (std::size_t i = 0; i < lattice_size_; ++i)
        if ((words_[i / 64] >> (i % 64)) & 1) out.push_back(pair_at(i, vocab_.size()));
    std::sort(out.begin(), out.end(), [](SEPair a, SEPair b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    return out;
}

void SESet::check_compatible(const SESet& other) const {
    if (!(vocab_ == other.vocab_))
        throw DomainError("SE sets over different vocabularies");
}

SESet SESet::complemented() const {
    SESet out(vocab_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    // clear padding bits past the lattice
    std::size_t tail = lattice_size_ % 64;
    if (tail != 0) out.words_.back() &= (std::uint64_t(1) << tail) - 1;
    return out;
}

SESet SESet::intersected(const SESet& other) const {
    check_compatible(other);
    SESet out(vocab_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] = words_[i] & other.words_[i];
    return out;
}

SESet SESet::united(const SESet& other) const {
    check_compatible(other);
    SESet out(vocab_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] = words_[i] | other.words_[i];
    return out;
}

bool SESet::subset_of(const SESet& other) const {
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
}

bool SESet::intersects(const SESet& other) const {
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
}

bool satisfies(const Rule& r, Mask y, const Vocabulary& vocab) {
    return satisfies(image_of(r, vocab), y);
}

bool satisfies(const Program& p, Mask y, const Vocabulary& vocab) {
    for (const Rule& r : p.rules())
        if (!satisfies(r, y, vocab)) return false;
    return true;
}

Program reduct(const Program& p, Mask y, const Vocabulary& vocab) {
    std::vector<Rule> kept;
    for (const Rule& r : p.rules()) {
        RuleImage img = image_of(r, vocab);
        if ((img.hn & y) != img.hn) continue;
        if ((img.bn & y) != 0) continue;
        kept.emplace_back(r.head_pos(), std::vector<std::string>{}, r.body_pos(),
                          std::vector<std::string>{});
    }
    return Program(kept);
}

std::vector<Mask> classical_models(const Program& p, const Vocabulary& vocab) {
    check_atom_cap(vocab);
    auto imgs = images_of(p, vocab);
    std::vector<Mask> out;
    for (Mask y = 0; y < (Mask(1) << vocab.size()); ++y) {
        bool ok = true;
        for (const auto& img : imgs)
            if (!satisfies(img, y)) { ok = false; break; }
        if (ok) out.push_back(y);
    }
    return out;
}

SESet se_models(const Program& p, const Vocabulary& vocab) {
    SESet s(vocab);
    auto imgs = images_of(p, vocab);
    for (Mask y = 0; y < (Mask(1) << vocab.size()); ++y) {
        bool ymod = true;
        for (const auto& img : imgs)
            if (!satisfies(img, y)) { ymod = false; break; }
        if (!ymod) continue;
        // walk submasks x of y, including y and ∅
        Mask x = y;
        while (true) {
            bool xmod = true;
            for (const auto& img : imgs)
                if (!satisfies_reduced(img, y, x)) { xmod = false; break; }
            if (xmod) s.insert({x, y});
            if (x == 0) break;
            x = (x - 1) & y;
        }
    }
    return s;
}

SESet se_models(const Rule& r, const Vocabulary& vocab) {
    return se_models(Program({r}), vocab);
}

std::vector<Mask> answer_sets(const Program& p, const Vocabulary& vocab) {
    SESet s = se_models(p, vocab);
    std::vector<Mask> out;
    for (Mask y = 0; y < (Mask(1) << vocab.size()); ++y) {
        if (!s.contains({y, y})) continue;
        bool minimal = true;
        Mask x = (y - 1) & y;
        if (y != 0) {
            while (true) {
                if (s.contains({x, y})) { minimal = false; break; }
                if (x == 0) break;
                x = (x - 1) & y;
            }
        }
        if (minimal) out.push_back(y);
    }
    return out;
}

std::vector<Mask> answer_sets_via_reduct(const Program& p, const Vocabulary& vocab) {
    check_atom_cap(vocab);
    std::vector<Mask> out;
    for (Mask y = 0; y < (Mask(1) << vocab.size()); ++y) {
        Program red = reduct(p, y, vocab);
        auto mods = classical_models(red, vocab);
        bool y_is_model = false, has_smaller = false;
        for (Mask m : mods) {
            if (m == y) y_is_model = true;
            else if ((m & ~y) == 0) has_smaller = true;
        }
        if (y_is_model && !has_smaller) out.push_back(y);
    }
    return out;
}

std::vector<SESet> subset_se_table(const Program& p, const Vocabulary& vocab) {
    if (p.size() > 20)
        throw DomainError("subset SE table over " + std::to_string(p.size()) +
                          " rules is too large");
    const auto& rules = p.rules();
    std::vector<SESet> rule_se;
    rule_se.reserve(rules.size());
    for (const Rule& r : rules) rule_se.push_back(se_models(r, vocab));

    std::vector<SESet> table(std::size_t(1) << rules.size());
    table[0] = SESet::full(vocab);
    for (std::uint32_t m = 1; m < table.size(); ++m) {
        std::uint32_t low = m & (~m + 1);
        table[m] = table[m ^ low].intersected(rule_se[std::size_t(__builtin_ctz(m))]);
    }
    return table;
}

bool implies_s(const SESet& sp, const SESet& sq) { return sp.subset_of(sq); }

bool implies_s(const Program& p, const Program& q, const Vocabulary& vocab) {
    return se_models(p, vocab).subset_of(se_models(q, vocab));
}

bool strongly_equivalent(const Program& p, const Program& q, const Vocabulary& vocab) {
    return se_models(p, vocab) == se_models(q, vocab);
}

bool is_satisfiable(const Program& p, const Vocabulary& vocab) {
    return !se_models(p, vocab).empty();
}

bool is_well_defined(const SESet& s) {
    for (SEPair p : s.members())
        if (!s.contains({p.y, p.y})) return false;
    return true;
}

Program canonical_program(const SESet& s) {
    if (!is_well_defined(s))
        throw DomainError("SE set is not well defined: some (X,Y) lacks (Y,Y)");
    const Vocabulary& vocab = s.vocab();
    Mask all = (Mask(1) << vocab.size()) - 1;
    std::vector<Rule> rules;
    for (Mask y = 0; y <= all; ++y) {
        std::vector<std::string> y_in = atoms_of(y, vocab);
        std::vector<std::string> y_out = atoms_of(all & ~y, vocab);
        if (!s.contains({y, y})) {
            rules.push_back(Rule({}, {}, y_in, y_out));
            continue;
        }
        Mask x = (y - 1) & y;
        if (y != 0) {
            while (true) {
                if (!s.contains({x, y})) {
                    // head (Y∖X) ; not (Y∖X), body X, not (A∖Y): the only SE
                    // pair this rule excludes is (X, Y) itself
                    std::vector<std::string> delta = atoms_of(y & ~x, vocab);
                    rules.push_back(Rule(delta, delta, atoms_of(x, vocab), y_out));
                }
                if (x == 0) break;
                x = (x - 1) & y;
            }
        }
    }
    return Program(rules);
}

std::string se_to_json(const SESet& s) {
    nlohmann::json j;
    j["vocab"] = s.vocab().atoms();
    auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ' ';
            out += v[i];
        }
        return out;
    };
    std::vector<std::array<std::string, 2>> pairs;
    for (SEPair p : s.members())
        pairs.push_back({join(atoms_of(p.x, s.vocab())), join(atoms_of(p.y, s.vocab()))});
    std::sort(pairs.begin(), pairs.end());
    j["models"] = nlohmann::json::array();
    for (const auto& pr : pairs) j["models"].push_back({pr[0], pr[1]});
    return j.dump(2);
}

SESet se_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.contains("vocab") || !j.contains("models"))
        throw DomainError("SE set JSON needs \"vocab\" and \"models\" keys");
    Vocabulary vocab(j["vocab"].get<std::vector<std::string>>());
    SESet s(vocab);
    auto split = [](const std::string& text) {
        std::vector<std::string> out;
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) out.push_back(tok);
        return out;
    };
    for (const auto& entry : j["models"]) {
        if (!entry.is_array() || entry.size() != 2)
            throw DomainError("each SE model must be a [x, y] pair of atom lists");
        Mask x = mask_of(split(entry[0].get<std::string>()), vocab);
        Mask y = mask_of(split(entry[1].get<std::string>()), vocab);
        if ((x & ~y) != 0) throw DomainError("SE model with x ⊄ y");
        s.insert({x, y});
    }
    return s;
}

}  // namespace lpbc
