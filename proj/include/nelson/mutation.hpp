// Deterministic single-token mutation of proof scripts: the negative side of
// the proof-checking contract. Every mutation of a bundled corpus script must
// fail to check (unparseable input counts as rejected).
#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "nelson/calculus.hpp"

namespace nelson {

struct MiniTok {
    std::size_t pos, len;
    std::string text;
};

inline std::vector<MiniTok> mini_tokens(const std::string& s) {
    std::vector<MiniTok> out;
    std::size_t i = 0;
    auto is_word = [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    };
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) { ++i; continue; }
        if (ch == '#') {
            while (i < s.size() && s[i] != '\n') ++i;
            continue;
        }
        if (is_word(ch)) {
            std::size_t j = i;
            while (j < s.size() && is_word(s[j])) ++j;
            out.push_back({i, j - i, s.substr(i, j - i)});
            i = j;
            continue;
        }
        std::size_t len = 1;
        if (s.compare(i, 3, "<=>") == 0) len = 3;
        else if (s.compare(i, 2, "=>") == 0 || s.compare(i, 2, "->") == 0) len = 2;
        out.push_back({i, len, s.substr(i, len)});
        i += len;
    }
    return out;
}

/// Fixed replacement for one token (context: the preceding token). Returns
/// nothing when the token has no defined mutation.
inline std::optional<std::string> mutate_token(const std::string& t, const std::string& prev) {
    if (prev == "rule") {
        const auto& rules = rule_infos();
        for (std::size_t i = 0; i < rules.size(); ++i)
            if (t == rules[i].name) return std::string(rules[(i + 1) % rules.size()].name);
        return std::string("P");  // fragment of a multi-character rule token
    }
    if (prev == "axiom") {
        char fam = t[0];
        int hi = fam == 'A' ? 5 : fam == 'S' ? 15 : 13;
        int n = std::stoi(t.substr(1));
        return fam + std::to_string(n % hi + 1);
    }
    if (prev == "calculus")
        return std::string(t == "S_PRIME" ? "S_NELSON" : "S_PRIME");
    if (t == "calculus" || t == "assume" || t == "step" || t == "by" || t == "axiom" ||
        t == "rule" || t == "from" || t == "assumption")
        return std::string("zz");
    if (t == "0") return std::string("1");
    if (t == "1") return std::string("0");
    if (std::isdigit(static_cast<unsigned char>(t[0])))
        return std::to_string(std::stoi(t) + 1);
    if (std::isalpha(static_cast<unsigned char>(t[0]))) return std::string("zz");
    if (t == "~") return std::string("");
    if (t == "&") return std::string("|");
    if (t == "|") return std::string("&");
    if (t == "*") return std::string("&");
    if (t == "=>") return std::string("*");
    if (t == "->") return std::string("=>");
    if (t == "<=>") return std::string("=>");
    if (t == "(") return std::string(")");
    if (t == ")") return std::string("(");
    if (t == ":") return std::string(";");
    if (t == ",") return std::string(";");
    return std::nullopt;
}

inline bool script_accepted(const std::string& text) {
    try {
        return check_derivation(parse_proof_script(text)).accepted;
    } catch (const std::exception&) {
        return false;
    }
}

/// Applies every defined single-token mutation; reports how many were
/// generated and how many (erroneously) still check.
struct MutationSweep {
    long long generated = 0;
    long long accepted = 0;
    std::vector<std::string> accepted_descriptions;
};

inline MutationSweep sweep_mutations(const std::string& name, const std::string& text) {
    MutationSweep sweep;
    auto toks = mini_tokens(text);
    for (std::size_t k = 0; k < toks.size(); ++k) {
        std::string prev = k ? toks[k - 1].text : std::string();
        auto repl = mutate_token(toks[k].text, prev);
        if (!repl || *repl == toks[k].text) continue;
        std::string mutated =
            text.substr(0, toks[k].pos) + *repl + text.substr(toks[k].pos + toks[k].len);
        ++sweep.generated;
        if (script_accepted(mutated)) {
            ++sweep.accepted;
            sweep.accepted_descriptions.push_back(name + ": '" + toks[k].text + "' -> '" +
                                                  *repl + "' at offset " +
                                                  std::to_string(toks[k].pos));
        }
    }
    return sweep;
}

} // namespace nelson
