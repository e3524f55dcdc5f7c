// lpbc: command-line workbench for rule-preserving change of logic programs.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "lpbc/baselines.hpp"
#include "lpbc/ensconcement.hpp"
#include "lpbc/harness.hpp"
#include "lpbc/localization.hpp"
#include "lpbc/partial_meet.hpp"
#include "lpbc/selection.hpp"
#include "lpbc/semantics.hpp"

using nlohmann::json;
using namespace lpbc;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct Inputs {
    std::string vocab_csv;
    std::string format = "table";
    mutable Vocabulary declared;  // #vocab directives seen while loading
};

Vocabulary vocab_for(const Inputs& in, std::initializer_list<const Program*> progs) {
    Vocabulary v = vocab_of(progs).merged(in.declared);
    if (!in.vocab_csv.empty()) v = v.merged(Vocabulary(split(in.vocab_csv, ',')));
    return v;
}

Program load_program(const std::string& path, const Inputs& in) {
    ParseResult r = in.vocab_csv.empty()
                        ? parse_program(slurp(path))
                        : parse_program(slurp(path), Vocabulary(split(in.vocab_csv, ',')));
    in.declared = in.declared.merged(r.vocab);
    return r.program;
}

std::string pair_str(SEPair p, const Vocabulary& vocab) {
    auto set_str = [&](Mask m) {
        std::string s = "{";
        bool first = true;
        for (const auto& a : atoms_of(m, vocab)) {
            if (!first) s += " ";
            s += a;
            first = false;
        }
        return s + "}";
    };
    return "(" + set_str(p.x) + ", " + set_str(p.y) + ")";
}

void print_rules(const Program& p) {
    if (p.empty()) {
        std::cout << "(empty program)\n";
        return;
    }
    std::cout << print_program(p);
}

json rules_json(const Program& p) {
    json arr = json::array();
    for (const Rule& r : p.rules()) arr.push_back(r.text());
    return arr;
}

SelectionPolicy parse_policy(const std::string& spec) {
    if (spec.empty() || spec == "full") return SelectionPolicy::full_meet();
    if (spec == "maxichoice") return SelectionPolicy::maxichoice_lex();
    if (spec == "single") return SelectionPolicy::single_choice_lex();
    if (spec == "relational") return SelectionPolicy::relational_cardinality();
    if (spec.rfind("relational:", 0) == 0) {
        json w = json::parse(slurp(spec.substr(11)));
        std::map<std::string, Rational> weights;
        bool maximised = w.value("maximised", false);
        for (auto& [key, val] : w.at("weights").items())
            weights[key] = val.is_string() ? Rational::parse(val.get<std::string>())
                                           : Rational{val.get<long long>(), 1};
        return SelectionPolicy::relational(weights, maximised);
    }
    throw CLI::ValidationError("--policy", "unknown policy: " + spec);
}

Ensconcement load_ensconcement(const std::string& path, const Program& p,
                               const Vocabulary& vocab) {
    std::vector<Program> levels;
    std::istringstream in(slurp(path));
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Rule> rules;
        std::string cell;
        std::istringstream cells(line);
        std::size_t pos = 0;
        while (true) {
            std::size_t next = line.find(" | ", pos);
            std::string piece = line.substr(pos, next == std::string::npos
                                                     ? std::string::npos
                                                     : next - pos);
            if (piece.find_first_not_of(" \t\r") != std::string::npos)
                rules.push_back(parse_rule(piece));
            if (next == std::string::npos) break;
            pos = next + 3;
        }
        levels.emplace_back(rules);
    }
    return validate_ensconcement(p, levels, vocab);
}

struct ChangeArgs {
    Inputs in;
    std::string method = "pm";
    std::string policy = "full";
    std::string ens_path;
    std::string q_se_path;
    std::string compare_csv;
    bool localized = false;
    bool materialize = false;
    std::string p_path, q_path;
    unsigned seed = 0;
};

Program run_one(const std::string& method, const ChangeArgs& a, const Program& p,
                const std::optional<Program>& q, const Vocabulary& vocab,
                bool contraction) {
    if (method == "distance") {
        if (contraction) throw DomainError("the distance operator defines no contraction");
        if (!q) throw DomainError("distance revision needs a program for q");
        return distance_revise_program(p, *q, vocab);
    }
    if (method == "pm-as") {
        if (contraction) throw DomainError("pm-as defines no contraction");
        if (!q) throw DomainError("pm-as needs a program for q");
        return pm_revise_as(p, *q);
    }
    if (method == "ens") {
        if (a.ens_path.empty())
            throw DomainError("--ensconcement is required for the ens method");
        Ensconcement e = load_ensconcement(a.ens_path, p, vocab);
        if (!a.q_se_path.empty()) {
            SESet target = se_from_json(slurp(a.q_se_path));
            return contraction ? ens_contract(p, e, target)
                               : ens_revise_retained(p, e, target);
        }
        return contraction ? ens_contract(p, e, *q) : ens_revise(p, e, *q);
    }
    if (method == "pm") {
        SelectionPolicy pol = parse_policy(a.policy);
        if (!a.q_se_path.empty()) {
            SESet target = se_from_json(slurp(a.q_se_path));
            return contraction ? pm_contract(p, target, pol)
                               : pm_revise_retained(p, target, pol);
        }
        if (a.localized) {
            ChangeOperator op;
            op.kind = contraction ? ChangeKind::Contraction : ChangeKind::Revision;
            op.apply = [&pol, contraction](const Program& base, const Program& qq) {
                return contraction ? pm_contract(base, qq, pol)
                                   : pm_revise(base, qq, pol);
            };
            return localized_change(p, op, *q);
        }
        return contraction ? pm_contract(p, *q, pol) : pm_revise(p, *q, pol);
    }
    throw CLI::ValidationError("--method", "unknown method: " + method);
}

int run_change(const ChangeArgs& a, bool contraction) {
    Program p = load_program(a.p_path, a.in);
    std::optional<Program> q;
    if (!a.q_path.empty()) q = load_program(a.q_path, a.in);
    if (!q && a.q_se_path.empty())
        throw DomainError("either a q program or --q-se-models is required");

    Vocabulary vocab =
        q ? vocab_for(a.in, {&p, &*q}) : vocab_for(a.in, {&p});
    if (!a.q_se_path.empty()) {
        SESet target = se_from_json(slurp(a.q_se_path));
        vocab = vocab.merged(target.vocab());
    }

    if (!a.compare_csv.empty()) {
        json out = json::object();
        for (const std::string& m : split(a.compare_csv, ',')) {
            Program res = run_one(m, a, p, q, vocab, contraction);
            if (a.in.format == "json") {
                out[m] = rules_json(res);
            } else {
                std::cout << "== " << m << "\n";
                print_rules(res);
            }
        }
        if (a.in.format == "json") std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (a.method == "distance" && !a.materialize) {
        // the distance operator is defined on SE models; print them unless a
        // concrete witness program was asked for
        if (contraction) throw DomainError("the distance operator defines no contraction");
        SESet s = distance_revise_se(p, *q, vocab);
        if (a.in.format == "json") {
            std::cout << se_to_json(s) << "\n";
        } else {
            for (SEPair pr : s.members()) std::cout << pair_str(pr, vocab) << "\n";
        }
        return 0;
    }

    Program res = run_one(a.method, a, p, q, vocab, contraction);
    if (a.in.format == "json")
        std::cout << json{{"result", rules_json(res)}}.dump(2) << "\n";
    else
        print_rules(res);
    return 0;
}

void add_change_options(CLI::App* cmd, ChangeArgs& a, bool contraction) {
    cmd->add_option("p", a.p_path, "program file")->required();
    cmd->add_option("q", a.q_path, "change program file");
    cmd->add_option("--method", a.method,
                    contraction ? "pm|ens" : "pm|ens|distance|pm-as");
    cmd->add_option("--policy", a.policy,
                    "full|maxichoice|single|relational|relational:weights.json");
    cmd->add_option("--ensconcement", a.ens_path,
                    "ordering file, one level per line (least first), rules "
                    "separated by ' | '");
    cmd->add_option("--q-se-models", a.q_se_path,
                    "JSON SE-model set used as the raw change target");
    cmd->add_option("--compare", a.compare_csv, "comma list of methods to run side by side");
    cmd->add_flag("--localized", a.localized, "change only the relevant modules");
    cmd->add_flag("--materialize", a.materialize,
                  "print a canonical witness program for distance revision");
    cmd->add_option("--vocab", a.in.vocab_csv, "comma-separated vocabulary override");
    cmd->add_option("--format", a.in.format, "table|json");
    cmd->add_option("--seed", a.seed, "rng seed recorded for reproducibility");
}

int run_check(const std::string& ops_csv, const std::string& suites_csv,
              const std::string& vocab_csv, const std::string& pool_path,
              unsigned max_rules, const std::string& format) {
    Corpus corpus = Corpus::standard();
    if (!vocab_csv.empty()) corpus.vocab = Vocabulary(split(vocab_csv, ','));
    if (!pool_path.empty()) {
        ParseResult r = parse_program(slurp(pool_path), corpus.vocab);
        corpus.pool.assign(r.program.rules().begin(), r.program.rules().end());
    }
    corpus.max_rules = max_rules;

    std::vector<std::pair<HarnessOp, std::string>> ops;
    for (const std::string& o : split(ops_csv, ',')) {
        if (o == "pm") {
            ops.push_back({HarnessOp::PmFullMeet, o});
            ops.push_back({HarnessOp::PmMaxichoiceLex, o});
            ops.push_back({HarnessOp::PmRelationalCardinality, o});
        } else if (o == "pm-full") ops.push_back({HarnessOp::PmFullMeet, o});
        else if (o == "pm-maxichoice") ops.push_back({HarnessOp::PmMaxichoiceLex, o});
        else if (o == "pm-relational")
            ops.push_back({HarnessOp::PmRelationalCardinality, o});
        else if (o == "ens") ops.push_back({HarnessOp::Ensconcement, o});
        else if (o == "distance") ops.push_back({HarnessOp::Distance, o});
        else throw CLI::ValidationError("--operators", "unknown operator: " + o);
    }

    std::vector<PostulateReport> reports;
    for (const std::string& suite : split(suites_csv, ',')) {
        if (suite == "postulates") {
            for (auto& [op, name] : ops) {
                auto rev = check_revision_postulates(op, corpus);
                reports.insert(reports.end(), rev.begin(), rev.end());
                if (op != HarnessOp::Distance) {
                    auto con = check_contraction_postulates(op, corpus);
                    reports.insert(reports.end(), con.begin(), con.end());
                }
            }
        } else if (suite == "identities") {
            auto r = check_identity_bridges(corpus);
            reports.insert(reports.end(), r.begin(), r.end());
        } else if (suite == "characterizations") {
            auto r = check_characterizations(corpus);
            reports.insert(reports.end(), r.begin(), r.end());
        } else if (suite == "localization") {
            auto r = check_localization(corpus);
            reports.insert(reports.end(), r.begin(), r.end());
        } else {
            throw CLI::ValidationError("--suites", "unknown suite: " + suite);
        }
    }

    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            json item{{"operator", r.op}, {"postulate", r.postulate},
                      {"verdict", r.holds ? "holds" : "fails"}};
            if (!r.holds)
                item["witness"] = {{"p", r.witness.p}, {"q", r.witness.q},
                                   {"r", r.witness.r}, {"note", r.witness.note}};
            arr.push_back(item);
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << r.op << "  " << r.postulate << "  "
                      << (r.holds ? "holds" : "fails");
            if (!r.holds)
                std::cout << "  [p: " << r.witness.p << " | q: " << r.witness.q
                          << " | r: " << r.witness.r << " | " << r.witness.note << "]";
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for rule-preserving belief change in logic programs"};
    app.require_subcommand(1);

    // se-models
    Inputs se_in;
    std::string se_path;
    auto* se_cmd = app.add_subcommand("se-models", "print the SE models of a program");
    se_cmd->add_option("program", se_path, "program file")->required();
    se_cmd->add_option("--vocab", se_in.vocab_csv, "comma-separated vocabulary override");
    se_cmd->add_option("--format", se_in.format, "table|json");

    // answer-sets
    Inputs as_in;
    std::string as_path;
    auto* as_cmd = app.add_subcommand("answer-sets", "print the answer sets of a program");
    as_cmd->add_option("program", as_path, "program file")->required();
    as_cmd->add_option("--vocab", as_in.vocab_csv, "comma-separated vocabulary override");
    as_cmd->add_option("--format", as_in.format, "table|json");

    // equiv
    Inputs eq_in;
    std::string eq_p, eq_q;
    auto* eq_cmd = app.add_subcommand("equiv", "test strong equivalence of two programs");
    eq_cmd->add_option("p", eq_p, "first program")->required();
    eq_cmd->add_option("q", eq_q, "second program")->required();
    eq_cmd->add_option("--vocab", eq_in.vocab_csv, "comma-separated vocabulary override");
    eq_cmd->add_option("--format", eq_in.format, "table|json");

    // canonical
    Inputs ca_in;
    std::string ca_path, ca_se_path;
    auto* ca_cmd = app.add_subcommand(
        "canonical", "canonical program for a program or a JSON SE-model set");
    ca_cmd->add_option("program", ca_path, "program file");
    ca_cmd->add_option("--se-json", ca_se_path, "JSON SE-model set to canonicalize");
    ca_cmd->add_option("--vocab", ca_in.vocab_csv, "comma-separated vocabulary override");
    ca_cmd->add_option("--format", ca_in.format, "table|json");

    // revise / contract
    ChangeArgs rev_args, con_args;
    auto* rev_cmd = app.add_subcommand("revise", "revise a program");
    add_change_options(rev_cmd, rev_args, false);
    auto* con_cmd = app.add_subcommand("contract", "contract a program");
    add_change_options(con_cmd, con_args, true);

    // modules
    Inputs mo_in;
    std::string mo_p, mo_q;
    auto* mo_cmd = app.add_subcommand("modules", "relevant modules of p for a change by q");
    mo_cmd->add_option("p", mo_p, "program file")->required();
    mo_cmd->add_option("q", mo_q, "change program file")->required();
    mo_cmd->add_option("--vocab", mo_in.vocab_csv, "comma-separated vocabulary override");
    mo_cmd->add_option("--format", mo_in.format, "table|json");

    // check
    std::string ck_ops = "pm,ens,distance", ck_suites = "postulates";
    std::string ck_vocab, ck_pool, ck_format = "table", ck_postulates = "all";
    unsigned ck_max = 4, ck_seed = 0;
    auto* ck_cmd = app.add_subcommand("check", "run the postulate harness over a corpus");
    ck_cmd->add_option("--operators", ck_ops, "pm|pm-full|pm-maxichoice|pm-relational|ens|distance");
    ck_cmd->add_option("--postulates", ck_postulates, "only 'all' is supported");
    ck_cmd->add_option("--suites", ck_suites,
                       "postulates,identities,characterizations,localization");
    ck_cmd->add_option("--vocab", ck_vocab, "corpus vocabulary (default a,b)");
    ck_cmd->add_option("--pool", ck_pool, "rule pool file (default: built-in pool)");
    ck_cmd->add_option("--max-rules", ck_max, "max rules per corpus program");
    ck_cmd->add_option("--format", ck_format, "table|json");
    ck_cmd->add_option("--seed", ck_seed, "rng seed recorded for reproducibility");

    CLI11_PARSE(app, argc, argv);

    try {
        if (se_cmd->parsed()) {
            Program p = load_program(se_path, se_in);
            Vocabulary v = vocab_for(se_in, {&p});
            SESet s = se_models(p, v);
            if (se_in.format == "json") {
                std::cout << se_to_json(s) << "\n";
            } else {
                for (SEPair pr : s.members()) std::cout << pair_str(pr, v) << "\n";
            }
        } else if (as_cmd->parsed()) {
            Program p = load_program(as_path, as_in);
            Vocabulary v = vocab_for(as_in, {&p});
            auto sets = answer_sets(p, v);
            if (as_in.format == "json") {
                json arr = json::array();
                for (Mask m : sets) arr.push_back(atoms_of(m, v));
                std::cout << json{{"answer_sets", arr}}.dump(2) << "\n";
            } else {
                for (Mask m : sets) {
                    std::cout << "{";
                    bool first = true;
                    for (const auto& a : atoms_of(m, v)) {
                        if (!first) std::cout << " ";
                        std::cout << a;
                        first = false;
                    }
                    std::cout << "}\n";
                }
            }
        } else if (eq_cmd->parsed()) {
            Program p = load_program(eq_p, eq_in);
            Program q = load_program(eq_q, eq_in);
            Vocabulary v = vocab_for(eq_in, {&p, &q});
            bool eq = strongly_equivalent(p, q, v);
            if (eq_in.format == "json")
                std::cout << json{{"strongly_equivalent", eq}}.dump(2) << "\n";
            else
                std::cout << (eq ? "strongly equivalent\n" : "not strongly equivalent\n");
        } else if (ca_cmd->parsed()) {
            Program out;
            if (!ca_se_path.empty()) {
                out = canonical_program(se_from_json(slurp(ca_se_path)));
            } else if (!ca_path.empty()) {
                Program p = load_program(ca_path, ca_in);
                out = canonical_program(se_models(p, vocab_for(ca_in, {&p})));
            } else {
                throw DomainError("canonical needs a program file or --se-json");
            }
            if (ca_in.format == "json")
                std::cout << json{{"result", rules_json(out)}}.dump(2) << "\n";
            else
                print_rules(out);
        } else if (rev_cmd->parsed()) {
            return run_change(rev_args, false);
        } else if (con_cmd->parsed()) {
            return run_change(con_args, true);
        } else if (mo_cmd->parsed()) {
            Program p = load_program(mo_p, mo_in);
            Program q = load_program(mo_q, mo_in);
            ModuleFamily fam = relevant_modules(p, q);
            if (mo_in.format == "json") {
                json mods = json::array();
                for (const auto& m : fam.modules)
                    mods.push_back({{"anchor_rule", m.anchor_rule.text()},
                                    {"anchor_atom", m.anchor_atom},
                                    {"rules", rules_json(m.rules)}});
                std::cout << json{{"modules", mods}, {"residue", rules_json(fam.residue)}}
                                 .dump(2)
                          << "\n";
            } else {
                for (const auto& m : fam.modules) {
                    std::cout << "module anchored at \"" << m.anchor_rule.text()
                              << "\" via " << m.anchor_atom << ":\n";
                    for (const Rule& r : m.rules.rules())
                        std::cout << "  " << r.text() << "\n";
                }
                std::cout << "residue:\n";
                for (const Rule& r : fam.residue.rules())
                    std::cout << "  " << r.text() << "\n";
            }
        } else if (ck_cmd->parsed()) {
            if (ck_postulates != "all")
                throw CLI::ValidationError("--postulates", "only 'all' is supported");
            return run_check(ck_ops, ck_suites, ck_vocab, ck_pool, ck_max, ck_format);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
