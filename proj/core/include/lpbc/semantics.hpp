#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpbc/program.hpp"

namespace lpbc {

// An interpretation over a Vocabulary, encoded as a bitmask in vocabulary
// index order (bit i set <=> atom i belongs to the interpretation).
using Mask = std::uint32_t;

Mask mask_of(const std::vector<std::string>& atoms, const Vocabulary& vocab);
std::vector<std::string> atoms_of(Mask m, const Vocabulary& vocab);

struct SEPair {
    Mask x = 0, y = 0;  // "here" and "there", x ⊆ y
    auto operator<=>(const SEPair&) const = default;
};

// Set of SE interpretations over a fixed vocabulary, stored as a bitset over
// the 3^n lattice of (X,Y) pairs with X ⊆ Y. n is capped (see kMaxSeAtoms).
class SESet {
public:
    static constexpr std::size_t kMaxSeAtoms = 10;

    SESet() = default;
    explicit SESet(const Vocabulary& vocab);  // empty set
    static SESet full(const Vocabulary& vocab);
    static SESet of(const Vocabulary& vocab, const std::vector<SEPair>& members);

    const Vocabulary& vocab() const { return vocab_; }
    std::size_t lattice_size() const { return lattice_size_; }

    bool contains(SEPair p) const;
    void insert(SEPair p);
    std::size_t count() const;
    bool empty() const { return count() == 0; }
    std::vector<SEPair> members() const;  // sorted by (y, x)

    SESet complemented() const;
    SESet intersected(const SESet& other) const;
    SESet united(const SESet& other) const;
    bool subset_of(const SESet& other) const;
    bool intersects(const SESet& other) const;

    bool operator==(const SESet& other) const {
        return vocab_ == other.vocab_ && words_ == other.words_;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    static std::size_t index_of(SEPair p, std::size_t n_atoms);
    static SEPair pair_at(std::size_t index, std::size_t n_atoms);

private:
    void check_compatible(const SESet& other) const;

    Vocabulary vocab_;
    std::size_t lattice_size_ = 1;
    std::vector<std::uint64_t> words_;
};

// Classical satisfaction of a single rule, read as the conditional
// (∧B⁺ ∧ ¬∨B⁻) → (∨H⁺ ∨ ∨¬H⁻).
bool satisfies(const Rule& r, Mask y, const Vocabulary& vocab);
bool satisfies(const Program& p, Mask y, const Vocabulary& vocab);

// Gelfond-Lifschitz style reduct P^Y: keeps r with H⁻(r) ⊆ Y and
// B⁻(r) ∩ Y = ∅, reduced to H⁺(r) :- B⁺(r).
Program reduct(const Program& p, Mask y, const Vocabulary& vocab);

std::vector<Mask> classical_models(const Program& p, const Vocabulary& vocab);

SESet se_models(const Program& p, const Vocabulary& vocab);
SESet se_models(const Rule& r, const Vocabulary& vocab);

// Answer sets through the SE-model characterisation: (Y,Y) ∈ SE(P) with no
// X ⊂ Y such that (X,Y) ∈ SE(P).
std::vector<Mask> answer_sets(const Program& p, const Vocabulary& vocab);

// Independent oracle: Y is an answer set iff Y is a subset-minimal classical
// model of reduct(P, Y).
std::vector<Mask> answer_sets_via_reduct(const Program& p, const Vocabulary& vocab);

// SE models of every subset of p, indexed by bitmask over p.rules()
// (bit i set <=> rules()[i] belongs to the subset). Index 0 is the full
// SE lattice. Capped at 20 rules.
std::vector<SESet> subset_se_table(const Program& p, const Vocabulary& vocab);

bool implies_s(const SESet& sp, const SESet& sq);  // SE(P) ⊆ SE(Q)
bool implies_s(const Program& p, const Program& q, const Vocabulary& vocab);
bool strongly_equivalent(const Program& p, const Program& q, const Vocabulary& vocab);
bool is_satisfiable(const Program& p, const Vocabulary& vocab);

// (X,Y) ∈ S implies (Y,Y) ∈ S; precondition of canonical_program.
bool is_well_defined(const SESet& s);

// A program whose SE models are exactly S. For every Y with (Y,Y) ∉ S emits
//   :- Y, not (vocab ∖ Y).
// and for every X ⊂ Y with (Y,Y) ∈ S and (X,Y) ∉ S emits
//   ∨(Y ∖ X) ; ∨ not (vocab ∖ Y) :- X, not (vocab ∖ Y).
Program canonical_program(const SESet& s);

// JSON round-trip for SE sets:
// {"vocab":[...],"models":[["x atoms","y atoms"],...]} with space-separated
// atom lists, sorted lexicographically.
std::string se_to_json(const SESet& s);
SESet se_from_json(const std::string& json_text);

}  // namespace lpbc
