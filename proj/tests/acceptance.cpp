// Acceptance suite: prints one pass/fail line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "lpbc/baselines.hpp"
#include "lpbc/ensconcement.hpp"
#include "lpbc/harness.hpp"
#include "lpbc/localization.hpp"
#include "lpbc/partial_meet.hpp"
#include "lpbc/selection.hpp"
#include "lpbc/semantics.hpp"

using namespace lpbc;
using testutil::prog;
using testutil::rule_texts;
using testutil::se_strings;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << what;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

std::set<std::string> S(std::initializer_list<std::string> items) {
    return std::set<std::string>(items);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const Vocabulary kAB({"a", "b"});

// ---- criterion 1: SE model tables for the nine rule shapes ----
bool criterion_se_table(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, std::set<std::string>>> table = {
        {":- a.", S({"/", "/b", "b/b"})},
        {":- b.", S({"/", "/a", "a/a"})},
        {"a :- b.", S({"/", "/a", "a/a", "/a b", "a/a b", "a b/a b"})},
        {"b :- a.", S({"/", "/b", "b/b", "/a b", "b/a b", "a b/a b"})},
        {":- a, b.", S({"/", "/a", "a/a", "/b", "b/b"})},
        {":- b, not a.", S({"/", "/a", "a/a", "/a b", "a/a b", "b/a b", "a b/a b"})},
        {":- a, not b.", S({"/", "/b", "b/b", "/a b", "a/a b", "b/a b", "a b/a b"})},
        {"a ; not b.", S({"/", "/a", "a/a", "a/a b", "a b/a b"})},
        {"b ; not a.", S({"/", "/b", "b/b", "b/a b", "a b/a b"})},
    };
    for (auto& [text, expect] : table) {
        if (testutil::se_of(text, kAB) != expect) {
            detail = "SE mismatch for " + text;
            return false;
        }
    }
    if (seconds_since(t0) >= 1.0) {
        detail = "took too long";
        return false;
    }
    return true;
}

// ---- criterion 2: five-example operator contrast ----
bool criterion_contrast(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    struct Case {
        std::string p, q;
        std::vector<std::string> vocab;
        std::set<std::string> star_se;
        std::set<std::string> preserved;
    };
    std::vector<Case> cases = {
        {"a.\nb :- a.", ":- a.", {"a", "b"}, S({"b/b"}), S({":- a.", "b :- a."})},
        {":- a.\nb :- not a.", "a.", {"a", "b"}, S({"a b/a b"}),
         S({"a.", "b :- not a."})},
        {":- a.\nb :- a.", "a.", {"a", "b"}, S({"a/a", "a/a b", "a b/a b"}),
         S({"a.", "b :- a."})},
        {"a.\nb :- not a.", ":- a.", {"a", "b"}, S({"/", "/b", "b/b"}),
         S({":- a.", "b :- not a."})},
        {"a.\nb :- not c.", ":- c.", {"a", "b", "c"}, S({"a b/a b"}),
         S({":- c.", "a.", "b :- not c."})},
    };
    int idx = 0;
    for (auto& c : cases) {
        ++idx;
        Vocabulary v(c.vocab);
        Program p = prog(c.p), q = prog(c.q);
        if (se_strings(distance_revise_se(p, q, v)) != c.star_se) {
            detail = "distance result differs on example " + std::to_string(idx);
            return false;
        }
        if (rule_texts(pm_revise(p, q, SelectionPolicy::full_meet())) != c.preserved) {
            detail = "partial meet result differs on example " + std::to_string(idx);
            return false;
        }
        // the ensconcement outcome is the same under every valid ordering
        for (const Ensconcement& e : enumerate_ensconcements(p, v)) {
            if (rule_texts(ens_revise(p, e, q)) != c.preserved) {
                detail = "ensconcement result differs on example " + std::to_string(idx);
                return false;
            }
        }
    }
    if (seconds_since(t0) >= 1.0) {
        detail = "took too long";
        return false;
    }
    return true;
}

// ---- criterion 3: the five orderings of the chain example ----
bool criterion_chain_orderings(std::string& detail) {
    Program p = prog("a.\na :- b.\nb :- a.");
    Program q = prog(":- b.");
    struct Case {
        std::vector<std::string> levels;
        std::set<std::string> cut_rules, result;
    };
    std::vector<Case> cases = {
        {{"a.", "a :- b.", "b :- a."},
         S({"a :- b.", "b :- a."}),
         S({":- b.", "a :- b.", "b :- a."})},
        {{"a.", "a :- b.\nb :- a."},
         S({"a :- b.", "b :- a."}),
         S({":- b.", "a :- b.", "b :- a."})},
        {{"a.", "b :- a.", "a :- b."},
         S({"a :- b.", "b :- a."}),
         S({":- b.", "a :- b.", "b :- a."})},
        {{"a.\nb :- a.", "a :- b."}, S({"a :- b."}), S({":- b.", "a :- b."})},
        {{"b :- a.", "a.", "a :- b."},
         S({"a.", "a :- b."}),
         S({":- b.", "a.", "a :- b."})},
    };
    int idx = 0;
    for (auto& c : cases) {
        ++idx;
        std::vector<Program> levels;
        for (auto& t : c.levels) levels.push_back(prog(t));
        Ensconcement e = validate_ensconcement(p, levels, kAB);
        if (rule_texts(cut(p, e, q)) != c.cut_rules ||
            rule_texts(ens_revise(p, e, q)) != c.result) {
            detail = "ordering " + std::to_string(idx);
            return false;
        }
    }
    return true;
}

// ---- criterion 4: modules of the three-rule chain ----
bool criterion_modules(std::string& detail) {
    Program p = prog("a.\nb :- a.\nc :- not b.");
    Rule r1 = parse_rule("a."), r2 = parse_rule("b :- a."), r3 = parse_rule("c :- not b.");
    struct Case {
        Rule r;
        std::string atom;
        std::set<std::string> expect;
    };
    std::vector<Case> cases = {
        {r1, "a", S({"a."})},
        {r2, "a", S({"b :- a.", "c :- not b."})},
        {r2, "b", S({"a.", "b :- a."})},
        {r3, "b", S({"c :- not b."})},
        {r3, "c", S({"a.", "b :- a.", "c :- not b."})},
    };
    for (auto& c : cases) {
        if (rule_texts(extract_module(p, c.r, c.atom).rules) != c.expect) {
            detail = c.r.text() + " via " + c.atom;
            return false;
        }
    }
    return true;
}

// ---- criterion 5: postulate matrices over the standard corpus ----
bool criterion_matrices(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    Corpus corpus = Corpus::standard();

    auto verdicts = [](const std::vector<PostulateReport>& rs) {
        std::map<std::string, bool> out;
        for (auto& r : rs) out[r.postulate] = r.holds;
        return out;
    };
    struct Row {
        std::string name;
        std::map<std::string, bool> got;
        std::set<std::string> pass;
        std::set<std::string> fail;             // must fail on the corpus
        std::set<std::string> fail_by_fixture;  // corpus too small; criterion 6
    };
    std::vector<Row> rows;

    // AGM rows use the maximised cardinality relation; base rows quantify
    // over arbitrary selection, represented by full meet
    rows.push_back({"revision pm",
                    verdicts(check_revision_postulates(
                        HarnessOp::PmRelationalCardinality, corpus)),
                    {"r1", "r2", "r3", "r4", "r5", "r6"},
                    {"r7"},
                    {"r8"}});
    rows.push_back({"revision ens",
                    verdicts(check_revision_postulates(HarnessOp::Ensconcement, corpus)),
                    {"r1", "r2", "r3", "r4", "r5", "r6", "r8"},
                    {"r7"},
                    {}});
    rows.push_back({"contraction pm",
                    verdicts(check_contraction_postulates(
                        HarnessOp::PmRelationalCardinality, corpus)),
                    {"c1", "c2", "c3", "c4", "c6", "c7"},
                    {"c5", "c8"},
                    {}});
    rows.push_back({"contraction ens",
                    verdicts(check_contraction_postulates(HarnessOp::Ensconcement,
                                                          corpus)),
                    {"c1", "c2", "c3", "c4", "c6", "c7", "c8"},
                    {"c5"},
                    {}});
    rows.push_back({"base revision pm",
                    verdicts(check_revision_postulates(HarnessOp::PmFullMeet, corpus)),
                    {"rb1", "rb2", "rb3", "rb4", "rb5"},
                    {},
                    {}});
    rows.push_back({"base revision ens",
                    verdicts(check_revision_postulates(HarnessOp::Ensconcement, corpus)),
                    {"rb1", "rb2", "rb5"},
                    {"rb3", "rb4"},
                    {}});
    rows.push_back({"base contraction pm",
                    verdicts(check_contraction_postulates(HarnessOp::PmFullMeet, corpus)),
                    {"cb1", "cb2", "cb3", "cb4", "cb5", "cb6", "cb8"},
                    {"cb7"},
                    {}});
    rows.push_back({"base contraction ens",
                    verdicts(check_contraction_postulates(HarnessOp::Ensconcement,
                                                          corpus)),
                    {"cb1", "cb2", "cb5", "cb6", "cb7", "cb8"},
                    {"cb3", "cb4"},
                    {}});
    rows.push_back({"revision distance",
                    verdicts(check_revision_postulates(HarnessOp::Distance, corpus)),
                    {"r1", "r5", "r6", "rb5"},
                    {"r2", "r3", "r4", "r7", "r8", "rb1", "rb2", "rb3", "rb4"},
                    {}});

    for (auto& row : rows) {
        for (auto& id : row.pass)
            if (!row.got.at(id)) {
                detail = row.name + " " + id + " should hold";
                return false;
            }
        for (auto& id : row.fail)
            if (row.got.at(id)) {
                detail = row.name + " " + id + " should fail on the corpus";
                return false;
            }
        // cells in fail_by_fixture are allowed to hold on the small corpus;
        // criterion 6 reproduces their violations on dedicated fixtures
    }
    if (seconds_since(t0) >= 300.0) {
        detail = "exceeded the five-minute budget";
        return false;
    }
    return true;
}

// ---- criterion 6: counterexample fixtures ----
// abstract SE-set families instantiated over singleton interpretations:
// each abstract point maps to one atom, each abstract rule to the
// disjunctive fact over its points, and abstract SE sets to diagonal pairs

SESet diag(const Vocabulary& v, std::initializer_list<std::string> points) {
    SESet s(v);
    for (const auto& a : points) {
        Mask m = mask_of({a}, v);
        s.insert({m, m});
    }
    return s;
}

bool criterion_fixtures(std::string& detail) {
    // (a) pm revision, composite monotony: P*(Q+R) can escape (P*Q)+R
    {
        Vocabulary v({"a", "b", "c"});
        Program p = prog("b ; c.\na ; c.\na ; b ; c.");
        Program q = canonical_program(diag(v, {"a", "b"}));
        Program r = canonical_program(diag(v, {"a"}));
        std::map<std::string, Rational> w;
        w[subset_key(prog("a ; b ; c.\nb ; c."))] = Rational{1, 1};
        w[subset_key(prog("a ; b ; c.\na ; c."))] = Rational{1, 1};
        SelectionPolicy pol = SelectionPolicy::relational(w, true);
        Program left = pm_revise(p, q.united(r), pol);
        Program right = pm_revise(p, q, pol).united(r);
        if (left.subset_of(right)) {
            detail = "pm composite monotony unexpectedly holds";
            return false;
        }
    }
    // (b) ens revision, same shape under the ordering {r1 r2} < {r3}
    {
        Vocabulary v({"a", "b", "c"});
        Program p = prog("b ; c.\na ; c.\na ; b ; c.");
        Ensconcement e = validate_ensconcement(
            p, {prog("b ; c.\na ; c."), prog("a ; b ; c.")}, v);
        Program q = canonical_program(diag(v, {"a", "b"}));
        Program r = canonical_program(diag(v, {"a"}));
        Program left = ens_revise(p, e, q.united(r));
        Program right = ens_revise(p, e, q).united(r);
        if (left.subset_of(right)) {
            detail = "ens composite monotony unexpectedly holds";
            return false;
        }
    }
    // (c) pm revision and contraction, conjunctive factoring over five points
    {
        Vocabulary v({"a", "b", "c", "d", "e"});
        Program p = prog(
            "a ; b ; c ; d ; e.\na ; b ; c ; e.\na ; e.\nb ; e.\nd ; e.");
        std::map<std::string, Rational> w;
        w[subset_key(prog("a ; b ; c ; d ; e.\na ; b ; c ; e."))] = Rational{1, 1};
        w[subset_key(prog("a ; b ; c ; d ; e.\nd ; e."))] = Rational{2, 1};
        w[subset_key(prog("a ; b ; c ; d ; e.\na ; b ; c ; e.\na ; e."))] =
            Rational{3, 1};
        w[subset_key(prog("a ; b ; c ; d ; e.\na ; b ; c ; e.\nb ; e."))] =
            Rational{3, 1};
        SelectionPolicy pol = SelectionPolicy::relational(w, true);

        // revision: (P*Q)+R satisfiable yet not inside P*(Q+R)
        Program q = canonical_program(diag(v, {"a", "b", "c", "d"}));
        Program r = canonical_program(diag(v, {"c", "d"}));
        Program left = pm_revise(p, q, pol).united(r);
        Vocabulary lv = vocab_of({&left});
        if (se_models(left, lv).empty()) {
            detail = "pm factoring fixture: left side unsatisfiable";
            return false;
        }
        if (left.subset_of(pm_revise(p, q.united(r), pol).united(q).united(r))) {
            detail = "pm revision factoring unexpectedly holds";
            return false;
        }

        // contraction: P-(Q+R) does not imply Q yet escapes P-Q
        SESet target_q = diag(v, {"c", "d"}).complemented();
        SESet target_qr = diag(v, {"a", "b", "c", "d"}).complemented();
        Program con_q = pm_contract(p, target_q, pol);
        Program con_qr = pm_contract(p, target_qr, pol);
        if (se_models(con_qr, v).subset_of(target_q)) {
            detail = "pm contraction factoring precondition failed";
            return false;
        }
        if (con_qr.subset_of(con_q)) {
            detail = "pm contraction factoring unexpectedly holds";
            return false;
        }
    }
    // (d) full-meet contraction, disjunctive factoring over five points
    {
        Vocabulary v({"a", "b", "c", "d", "e"});
        Program p = prog("a ; b ; c ; d ; e.\na ; b ; e.\na ; c ; e.\nc ; d ; e.");
        SelectionPolicy pol = SelectionPolicy::full_meet();
        SESet tq = diag(v, {"b", "c"}).complemented();
        SESet tr = diag(v, {"a", "d"}).complemented();
        SESet tqr = diag(v, {"a", "b", "c", "d"}).complemented();
        Program cq = pm_contract(p, tq, pol);
        Program cr = pm_contract(p, tr, pol);
        Program cqr = pm_contract(p, tqr, pol);
        if (rule_texts(cq) != S({"a ; b ; c ; d ; e."}) ||
            rule_texts(cr) != S({"a ; b ; c ; d ; e."})) {
            detail = "full-meet factoring fixture: unexpected single contractions";
            return false;
        }
        if (cqr == cq || cqr == cr || cqr == cq.intersected(cr)) {
            detail = "contraction disjunctive factoring unexpectedly holds";
            return false;
        }
    }
    // (e) ens revision lacks relevance: a removed rule has no blame set
    {
        Vocabulary v({"a", "b", "c", "d"});
        Program p = prog("c ; d.\nb ; c.\na ; b ; c.");
        Ensconcement e =
            validate_ensconcement(p, {prog("c ; d.\nb ; c."), prog("a ; b ; c.")}, v);
        Program q = canonical_program(diag(v, {"a", "b"}));
        Program res = ens_revise(p, e, q);
        if (rule_texts(res.intersected(p)) != S({"a ; b ; c."})) {
            detail = "ens relevance fixture: unexpected outcome";
            return false;
        }
        // removed rule "b ; c." admits no witness set p' with
        // res ⊆ p' ⊂ p+q, p' satisfiable, p' + rule unsatisfiable
        Rule removed = parse_rule("b ; c.");
        Program pool = p.united(q).minus(res);
        std::vector<Rule> extras;
        for (const Rule& x : pool.rules())
            if (!(x == removed)) extras.push_back(x);
        for (std::size_t m = 0; m < (std::size_t(1) << extras.size()); ++m) {
            Program pp = res;
            for (std::size_t i = 0; i < extras.size(); ++i)
                if (m & (std::size_t(1) << i))
                    pp = pp.united(Program({extras[i]}));
            Program with = pp.united(Program({removed}));
            if (!se_models(pp, v).empty() && se_models(with, v).empty()) {
                detail = "ens relevance fixture: a blame set exists after all";
                return false;
            }
        }
    }
    // (f) ens revision lacks uniformity
    {
        Vocabulary v({"a", "b", "c", "d"});
        Program p = prog("c ; d.\na ; c.\na ; b ; c.");
        Ensconcement e =
            validate_ensconcement(p, {prog("c ; d.\na ; c."), prog("a ; b ; c.")}, v);
        Program q = canonical_program(diag(v, {"a", "b"}));
        Program r = canonical_program(diag(v, {"a"}));
        // identical satisfiability signatures over subsets of p
        auto table = subset_se_table(p, v);
        SESet sq = se_models(q, v), sr = se_models(r, v);
        for (const SESet& s : table)
            if (s.intersects(sq) != s.intersects(sr)) {
                detail = "ens uniformity fixture: signatures differ";
                return false;
            }
        if (p.intersected(ens_revise(p, e, q)) == p.intersected(ens_revise(p, e, r))) {
            detail = "ens uniformity violation did not reproduce";
            return false;
        }
    }
    // (g) ens contraction lacks relevance and uniformity
    {
        Vocabulary v({"a", "b", "c", "d"});
        Program p_rel = prog("c ; d.\nb ; c.\na ; b ; c.");
        Ensconcement e_rel = validate_ensconcement(
            p_rel, {prog("c ; d.\nb ; c."), prog("a ; b ; c.")}, v);
        SESet tq = diag(v, {"a", "b", "d"});  // complement of the abstract target
        Program res = ens_contract(p_rel, e_rel, tq.complemented());
        if (rule_texts(res) != S({"a ; b ; c."})) {
            detail = "ens contraction relevance fixture: unexpected outcome";
            return false;
        }
        Rule removed = parse_rule("b ; c.");
        // no p' with res ⊆ p' ⊂ p, p' not implying q, p'+rule implying q
        SESet sq = tq.complemented();
        bool witness = false;
        std::vector<Rule> extras;
        Program removed_zone = p_rel.minus(res);
        for (const Rule& x : removed_zone.rules())
            if (!(x == removed)) extras.push_back(x);
        for (std::size_t m = 0; m < (std::size_t(1) << extras.size()); ++m) {
            Program pp = res;
            for (std::size_t i = 0; i < extras.size(); ++i)
                if (m & (std::size_t(1) << i))
                    pp = pp.united(Program({extras[i]}));
            Program with = pp.united(Program({removed}));
            if (!se_models(pp, v).subset_of(sq) && se_models(with, v).subset_of(sq))
                witness = true;
        }
        if (witness) {
            detail = "ens contraction relevance: a blame set exists after all";
            return false;
        }

        Program p_uni = prog("c ; d.\na ; c.\na ; b ; c.");
        Ensconcement e_uni = validate_ensconcement(
            p_uni, {prog("c ; d.\na ; c."), prog("a ; b ; c.")}, v);
        SESet sq2 = diag(v, {"a", "b", "d"}).complemented();
        SESet sr2 = diag(v, {"a", "d"}).complemented();
        auto table = subset_se_table(p_uni, v);
        for (const SESet& s : table)
            if (s.subset_of(sq2) != s.subset_of(sr2)) {
                detail = "ens contraction uniformity fixture: signatures differ";
                return false;
            }
        if (ens_contract(p_uni, e_uni, sq2) == ens_contract(p_uni, e_uni, sr2)) {
            detail = "ens contraction uniformity violation did not reproduce";
            return false;
        }
    }
    return true;
}

// ---- criterion 7: interdefinability through the two identities ----
bool criterion_identities(std::string& detail) {
    for (const auto& r : check_identity_bridges(Corpus::standard())) {
        if (!r.holds) {
            detail = r.op + " on p: " + r.witness.p + ", q: " + r.witness.q;
            return false;
        }
    }
    return true;
}

// ---- criterion 8: ordering realizations and the reverse gap ----
bool criterion_characterizations(std::string& detail) {
    for (const auto& r : check_characterizations(Corpus::standard())) {
        if (!r.holds) {
            detail = r.op + "/" + r.postulate;
            return false;
        }
    }
    // the reverse direction fails: an ensconcement outcome no selection
    // function can produce
    Vocabulary v({"a", "b", "c"});
    Program p = prog("a.\nb.\nc.");
    Program q = prog(":- a.");
    Ensconcement e = validate_ensconcement(p, {prog("a.\nb."), prog("c.")}, v);
    Program ens_out = ens_revise(p, e, q);
    auto family = compatible_sets(p, q);
    // all intersections over non-empty sub-families, expanded by q
    std::set<std::string> achievable;
    for (std::size_t m = 1; m < (std::size_t(1) << family.size()); ++m) {
        Program acc;
        bool first = true;
        for (std::size_t i = 0; i < family.size(); ++i)
            if (m & (std::size_t(1) << i)) {
                acc = first ? family[i] : acc.intersected(family[i]);
                first = false;
            }
        achievable.insert(print_program(acc.united(q)));
    }
    if (achievable.count(print_program(ens_out))) {
        detail = "ensconcement revision outcome was reachable by selection";
        return false;
    }
    // contraction analog
    Program qc = prog("a.");
    Program ens_con = ens_contract(p, e, qc);
    auto family_c = remainder_sets(p, qc);
    std::set<std::string> achievable_c;
    for (std::size_t m = 1; m < (std::size_t(1) << family_c.size()); ++m) {
        Program acc;
        bool first = true;
        for (std::size_t i = 0; i < family_c.size(); ++i)
            if (m & (std::size_t(1) << i)) {
                acc = first ? family_c[i] : acc.intersected(family_c[i]);
                first = false;
            }
        achievable_c.insert(print_program(acc));
    }
    if (achievable_c.count(print_program(ens_con))) {
        detail = "ensconcement contraction outcome was reachable by selection";
        return false;
    }
    return true;
}

// ---- criterion 9: localization guarantees ----
bool criterion_localization(std::string& detail) {
    for (const auto& r : check_localization(Corpus::standard())) {
        if (!r.holds) {
            detail = r.op + " on p: " + r.witness.p + ", q: " + r.witness.q;
            return false;
        }
    }
    return true;
}

// ---- criterion 10: answer sets by SE models and by reducts ----
bool criterion_answer_sets(std::string& detail) {
    std::mt19937 rng(612403);
    const char* pool[] = {":- a.",        ":- b.",      "a :- b.",      "b :- a.",
                          ":- a, b.",     ":- b, not a.", ":- a, not b.", "a ; not b.",
                          "b ; not a.",   "a.",         "b."};
    for (int round = 0; round < 1000; ++round) {
        std::string text;
        for (int k = 0; k < 4; ++k) {
            unsigned pick = rng() % 12;
            if (pick < 11) text += std::string(pool[pick]) + "\n";
        }
        Program p = prog(text);
        if (answer_sets(p, kAB) != answer_sets_via_reduct(p, kAB)) {
            detail = "disagreement on:\n" + print_program(p);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::string d;
    auto run = [&](int idx, const std::string& what,
                   const std::function<bool(std::string&)>& fn) {
        d.clear();
        bool ok = false;
        try {
            ok = fn(d);
        } catch (const std::exception& e) {
            d = std::string("exception: ") + e.what();
        }
        report(idx, what, ok, d);
    };
    run(1, "SE model tables for the nine two-atom rule shapes", criterion_se_table);
    run(2, "five-example contrast of distance vs rule-preserving revision",
        criterion_contrast);
    run(3, "cuts and outcomes for the five chain-example orderings",
        criterion_chain_orderings);
    run(4, "modules of the three-rule chain", criterion_modules);
    run(5, "postulate matrices over the standard corpus", criterion_matrices);
    run(6, "counterexample fixtures reproduce each violation", criterion_fixtures);
    run(7, "Levi and Harper identity bridges over the corpus", criterion_identities);
    run(8, "ordering realizations of selection outcomes, and the reverse gap",
        criterion_characterizations);
    run(9, "localization: module coverage and achievable outcomes",
        criterion_localization);
    run(10, "answer sets agree between the SE path and the reduct path",
        criterion_answer_sets);
    return failures == 0 ? 0 : 1;
}
