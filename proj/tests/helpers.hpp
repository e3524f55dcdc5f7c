#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lpbc/program.hpp"
#include "lpbc/semantics.hpp"

namespace testutil {

inline lpbc::Program prog(const std::string& text) {
    return lpbc::parse_program(text).program;
}

// SE pairs written as "x/y" with atoms space-separated, e.g. "a/a b"
inline std::set<std::string> se_strings(const lpbc::SESet& s) {
    std::set<std::string> out;
    for (lpbc::SEPair p : s.members()) {
        std::string xs, ys;
        for (const auto& a : lpbc::atoms_of(p.x, s.vocab())) {
            if (!xs.empty()) xs += " ";
            xs += a;
        }
        for (const auto& a : lpbc::atoms_of(p.y, s.vocab())) {
            if (!ys.empty()) ys += " ";
            ys += a;
        }
        out.insert(xs + "/" + ys);
    }
    return out;
}

inline std::set<std::string> se_of(const std::string& text, const lpbc::Vocabulary& v) {
    return se_strings(lpbc::se_models(prog(text), v));
}

inline std::set<std::string> rule_texts(const lpbc::Program& p) {
    std::set<std::string> out;
    for (const lpbc::Rule& r : p.rules()) out.insert(r.text());
    return out;
}

}  // namespace testutil
