// Hilbert-style proof checking for the four calculi: the original rule-schema
// calculus over <&, |, =>, ~, 0> (with Gamma-lists and the squared arrow),
// its finite axiomatization S1-S15 + modus ponens, and N1-N12(+N13) + modus
// ponens over <&, |, ->, ~>.
#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "nelson/algebra.hpp"
#include "nelson/formula.hpp"

namespace nelson {

enum class CalculusId { S_NELSON, S_PRIME, N4, N3 };

inline const char* calculus_name(CalculusId c) {
    switch (c) {
        case CalculusId::S_NELSON: return "S_NELSON";
        case CalculusId::S_PRIME:  return "S_PRIME";
        case CalculusId::N4:       return "N4";
        case CalculusId::N3:       return "N3";
    }
    return "?";
}

inline std::optional<CalculusId> calculus_from_name(std::string s) {
    for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (s == "S_NELSON" || s == "S") return CalculusId::S_NELSON;
    if (s == "S_PRIME" || s == "S'" || s == "SPRIME") return CalculusId::S_PRIME;
    if (s == "N4") return CalculusId::N4;
    if (s == "N3") return CalculusId::N3;
    return std::nullopt;
}

inline Signature calculus_signature(CalculusId c) {
    switch (c) {
        case CalculusId::S_NELSON: return Signature::s_language();
        case CalculusId::S_PRIME:  return Signature::s_prime_language();
        default:                   return Signature::n4_language();
    }
}

// ---------------------------------------------------------------------------
// Axiom schemata

struct AxiomSchema {
    std::string id;
    Formula pattern;  // variables phi, psi, gam are schema variables
};

namespace detail {

inline Formula PHI() { return Formula::var("phi"); }
inline Formula PSI() { return Formula::var("psi"); }
inline Formula GAM() { return Formula::var("gam"); }

inline Formula iff_of(Formula a, Formula b) { return land(imp(a, b), imp(b, a)); }
inline Formula wiff_of(Formula a, Formula b) { return land(wimp(a, b), wimp(b, a)); }

} // namespace detail

/// Fixed-order axiom list of a calculus, already in its primitive language.
inline const std::vector<AxiomSchema>& axioms(CalculusId c) {
    using namespace detail;
    static const std::vector<AxiomSchema> s_nelson = {
        {"A1", imp(PHI(), PHI())},
        {"A2", imp(Formula::zero(), PSI())},
        {"A3", imp(neg(PHI()), imp(PHI(), Formula::zero()))},
        {"A4", neg(Formula::zero())},  // the defined constant 1
        {"A5", iff_of(imp(PHI(), PSI()), imp(neg(PSI()), neg(PHI())))},
    };
    static const std::vector<AxiomSchema> s_prime = {
        {"S1", imp(imp(PHI(), PSI()), imp(imp(PSI(), GAM()), imp(PHI(), GAM())))},
        {"S2", imp(imp(PHI(), imp(PSI(), GAM())), imp(PSI(), imp(PHI(), GAM())))},
        {"S3", imp(PHI(), imp(PSI(), PHI()))},
        {"S4", imp(PHI(), imp(PSI(), fuse(PHI(), PSI())))},
        {"S5", imp(imp(PHI(), imp(PSI(), GAM())), imp(fuse(PHI(), PSI()), GAM()))},
        {"S6", imp(land(PHI(), PSI()), PHI())},
        {"S7", imp(land(PHI(), PSI()), PSI())},
        {"S8", imp(imp(PHI(), PSI()), imp(imp(PHI(), GAM()), imp(PHI(), land(PSI(), GAM()))))},
        {"S9", imp(PHI(), lor(PHI(), PSI()))},
        {"S10", imp(PSI(), lor(PHI(), PSI()))},
        {"S11", imp(imp(PHI(), GAM()), imp(imp(PSI(), GAM()), imp(lor(PHI(), PSI()), GAM())))},
        {"S12", Formula::one()},
        {"S13", imp(Formula::zero(), PHI())},
        {"S14", imp(imp(imp(PHI(), Formula::zero()), Formula::zero()), PHI())},
        {"S15", imp(imp(PHI(), imp(PHI(), imp(PHI(), PSI()))), imp(PHI(), imp(PHI(), PSI())))},
    };
    static const std::vector<AxiomSchema> n4 = {
        {"N1", wimp(PHI(), wimp(PSI(), PHI()))},
        {"N2", wimp(wimp(PHI(), wimp(PSI(), GAM())),
                    wimp(wimp(PHI(), PSI()), wimp(PHI(), GAM())))},
        {"N3", wimp(land(PHI(), PSI()), PHI())},
        {"N4", wimp(land(PHI(), PSI()), PSI())},
        {"N5", wimp(wimp(PHI(), PSI()),
                    wimp(wimp(PHI(), GAM()), wimp(PHI(), land(PSI(), GAM()))))},
        {"N6", wimp(PHI(), lor(PHI(), PSI()))},
        {"N7", wimp(PSI(), lor(PHI(), PSI()))},
        {"N8", wimp(wimp(PHI(), GAM()),
                    wimp(wimp(PSI(), GAM()), wimp(lor(PHI(), PSI()), GAM())))},
        {"N9", wiff_of(neg(neg(PHI())), PHI())},
        {"N10", wiff_of(neg(lor(PHI(), PSI())), land(neg(PHI()), neg(PSI())))},
        {"N11", wiff_of(neg(land(PHI(), PSI())), lor(neg(PHI()), neg(PSI())))},
        {"N12", wiff_of(neg(wimp(PHI(), PSI())), land(PHI(), neg(PSI())))},
    };
    static const std::vector<AxiomSchema> n3 = [] {
        std::vector<AxiomSchema> v = n4;
        v.push_back({"N13", wimp(neg(PHI()), wimp(PHI(), PSI()))});
        return v;
    }();
    switch (c) {
        case CalculusId::S_NELSON: return s_nelson;
        case CalculusId::S_PRIME:  return s_prime;
        case CalculusId::N4:       return n4;
        case CalculusId::N3:       return n3;
    }
    return s_nelson;
}

/// First matching axiom schema (fixed order) with a witnessing substitution.
/// The formula is expected to be in the calculus's primitive language.
inline std::optional<std::pair<std::string, Subst>> match_axiom(CalculusId c,
                                                                const Formula& f) {
    for (const auto& ax : axioms(c)) {
        if (auto sigma = match(ax.pattern, f)) return std::make_pair(ax.id, *sigma);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rule schemata

enum class RuleSchemaId {
    P, C, E, ImpL, ImpR, AndL1, AndL2, AndR, OrL1, OrL2, OrR1, OrR2,
    NotImpL, NotImpR, NotAndL, NotAndR, NotOrL, NotOrR, NotNotL, NotNotR, MP
};

struct RuleInfo {
    RuleSchemaId id;
    const char* name;   // script token
    int arity;          // number of premises
    bool uses_gamma;
    int power;          // arrow power of the Gamma fold (1 or 2)
};

inline const std::vector<RuleInfo>& rule_infos() {
    static const std::vector<RuleInfo> rules = {
        {RuleSchemaId::P, "P", 1, true, 1},
        {RuleSchemaId::C, "C", 1, false, 1},
        {RuleSchemaId::E, "E", 2, true, 1},
        {RuleSchemaId::ImpL, "=>l", 2, true, 1},
        {RuleSchemaId::ImpR, "=>r", 1, false, 1},
        {RuleSchemaId::AndL1, "&l1", 1, false, 1},
        {RuleSchemaId::AndL2, "&l2", 1, false, 1},
        {RuleSchemaId::AndR, "&r", 2, true, 1},
        {RuleSchemaId::OrL1, "|l1", 2, false, 1},
        {RuleSchemaId::OrL2, "|l2", 2, false, 1},
        {RuleSchemaId::OrR1, "|r1", 1, true, 1},
        {RuleSchemaId::OrR2, "|r2", 1, true, 1},
        {RuleSchemaId::NotImpL, "~=>l", 1, false, 1},
        {RuleSchemaId::NotImpR, "~=>r", 1, true, 2},
        {RuleSchemaId::NotAndL, "~&l", 1, false, 1},
        {RuleSchemaId::NotAndR, "~&r", 1, true, 1},
        {RuleSchemaId::NotOrL, "~|l", 1, false, 1},
        {RuleSchemaId::NotOrR, "~|r", 1, true, 1},
        {RuleSchemaId::NotNotL, "~~l", 1, false, 1},
        {RuleSchemaId::NotNotR, "~~r", 1, true, 1},
        {RuleSchemaId::MP, "MP", 2, false, 1},
    };
    return rules;
}

inline const RuleInfo& rule_info(RuleSchemaId id) {
    for (const auto& r : rule_infos())
        if (r.id == id) return r;
    throw std::invalid_argument("unknown rule id");
}

inline std::optional<RuleSchemaId> rule_from_name(const std::string& s) {
    for (const auto& r : rule_infos())
        if (s == r.name) return r.id;
    return std::nullopt;
}

/// One concrete Gamma-elaboration of a rule schema.
struct RuleSpec {
    std::vector<Formula> premises;
    Formula conclusion;
};

/// Builds the n-premise-context elaboration of a rule over the schema
/// variables phi, psi, gam and g1..gn. MP takes the calculus arrow.
inline RuleSpec rule_schema(RuleSchemaId id, int gamma_len, CalculusId calc = CalculusId::S_NELSON) {
    using namespace detail;
    GammaList G;
    for (int i = 1; i <= gamma_len; ++i) G.push_back(Formula::var("g" + std::to_string(i)));
    const RuleInfo& info = rule_info(id);
    if (!info.uses_gamma && gamma_len != 0)
        throw std::invalid_argument("rule has no Gamma context");
    auto fold = [&](Formula f) { return gamma_implication(G, f, info.power); };
    switch (id) {
        case RuleSchemaId::P:
            return {{fold(imp(PHI(), imp(PSI(), GAM())))}, fold(imp(PSI(), imp(PHI(), GAM())))};
        case RuleSchemaId::C:
            return {{imp(PHI(), imp(PHI(), imp(PHI(), GAM())))}, imp(PHI(), imp(PHI(), GAM()))};
        case RuleSchemaId::E:
            return {{fold(PHI()), imp(PHI(), GAM())}, fold(GAM())};
        case RuleSchemaId::ImpL:
            return {{fold(PHI()), imp(PSI(), GAM())}, fold(imp(imp(PHI(), PSI()), GAM()))};
        case RuleSchemaId::ImpR:
            return {{GAM()}, imp(PHI(), GAM())};
        case RuleSchemaId::AndL1:
            return {{imp(PHI(), GAM())}, imp(land(PHI(), PSI()), GAM())};
        case RuleSchemaId::AndL2:
            return {{imp(PSI(), GAM())}, imp(land(PHI(), PSI()), GAM())};
        case RuleSchemaId::AndR:
            return {{fold(PHI()), fold(PSI())}, fold(land(PHI(), PSI()))};
        case RuleSchemaId::OrL1:
            return {{imp(PHI(), GAM()), imp(PSI(), GAM())}, imp(lor(PHI(), PSI()), GAM())};
        case RuleSchemaId::OrL2: {
            auto sqr = [](Formula a, Formula b) { return imp(a, imp(a, b)); };
            return {{sqr(PHI(), GAM()), sqr(PSI(), GAM())}, sqr(lor(PHI(), PSI()), GAM())};
        }
        case RuleSchemaId::OrR1:
            return {{fold(PHI())}, fold(lor(PHI(), PSI()))};
        case RuleSchemaId::OrR2:
            return {{fold(PSI())}, fold(lor(PHI(), PSI()))};
        case RuleSchemaId::NotImpL:
            return {{imp(land(PHI(), neg(PSI())), GAM())}, imp(neg(imp(PHI(), PSI())), GAM())};
        case RuleSchemaId::NotImpR:
            return {{fold(land(PHI(), neg(PSI())))}, fold(neg(imp(PHI(), PSI())))};
        case RuleSchemaId::NotAndL:
            return {{imp(lor(neg(PHI()), neg(PSI())), GAM())}, imp(neg(land(PHI(), PSI())), GAM())};
        case RuleSchemaId::NotAndR:
            return {{fold(lor(neg(PHI()), neg(PSI())))}, fold(neg(land(PHI(), PSI())))};
        case RuleSchemaId::NotOrL:
            return {{imp(land(neg(PHI()), neg(PSI())), GAM())}, imp(neg(lor(PHI(), PSI())), GAM())};
        case RuleSchemaId::NotOrR:
            return {{fold(land(neg(PHI()), neg(PSI())))}, fold(neg(lor(PHI(), PSI())))};
        case RuleSchemaId::NotNotL:
            return {{imp(PHI(), GAM())}, imp(neg(neg(PHI())), GAM())};
        case RuleSchemaId::NotNotR:
            return {{fold(PHI())}, fold(neg(neg(PHI())))};
        case RuleSchemaId::MP: {
            Conn arrow = (calc == CalculusId::N4 || calc == CalculusId::N3) ? Conn::WImp
                                                                            : Conn::Imp;
            return {{PHI(), Formula::binary(arrow, PHI(), PSI())}, PSI()};
        }
    }
    throw std::invalid_argument("unknown rule id");
}

/// Which rules a calculus admits: the Gamma calculus takes the whole table
/// plus MP (an instance of E with empty Gamma); the finite calculi take MP
/// only.
inline bool rule_allowed(CalculusId c, RuleSchemaId r) {
    if (c == CalculusId::S_NELSON) return true;
    return r == RuleSchemaId::MP;
}

inline int imp_spine_depth(const Formula& f) {
    return f.kind() == Conn::Imp ? 1 + imp_spine_depth(f.right()) : 0;
}

struct RuleMatch {
    Subst sigma;
    GammaList gamma;
};

/// Matches premises and conclusion simultaneously against the rule schema,
/// trying Gamma lengths 0..(=> spine depth of the conclusion). Premise order
/// is significant. Returns the first (shortest-Gamma) match.
inline std::optional<RuleMatch> match_rule(CalculusId calc, RuleSchemaId rule,
                                           const std::vector<Formula>& premises,
                                           const Formula& conclusion) {
    if (!rule_allowed(calc, rule)) return std::nullopt;
    const RuleInfo& info = rule_info(rule);
    if (static_cast<int>(premises.size()) != info.arity) return std::nullopt;
    int max_gamma = info.uses_gamma ? imp_spine_depth(conclusion) : 0;
    for (int g = 0; g <= max_gamma; ++g) {
        RuleSpec spec = rule_schema(rule, g, calc);
        Subst sigma;
        if (!match(spec.conclusion, conclusion, sigma)) continue;
        bool ok = true;
        for (int i = 0; i < info.arity && ok; ++i)
            ok = match(spec.premises[i], premises[i], sigma);
        if (!ok) continue;
        RuleMatch rm;
        rm.sigma = sigma;
        for (int i = 1; i <= g; ++i) rm.gamma.push_back(sigma.at("g" + std::to_string(i)));
        return rm;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Derivations

struct ByAssumption {};
struct ByAxiom {
    std::string id;
    std::optional<Subst> sub;  // verified when given, inferred otherwise
};
struct ByRule {
    RuleSchemaId rule;
    std::vector<int> premises;  // 1-based step indices
};
using Justification = std::variant<ByAssumption, ByAxiom, ByRule>;

struct Step {
    Formula formula;
    Justification just;
};

struct Derivation {
    CalculusId calculus = CalculusId::S_PRIME;
    std::vector<Formula> assumptions;
    std::vector<Step> steps;
};

struct Verdict {
    bool accepted = true;
    int step = 0;        // 1-based step of the earliest failure
    std::string reason;

    std::string to_string() const {
        if (accepted) return "accepted";
        return "rejected at step " + std::to_string(step) + ": " + reason;
    }
};

/// Checks every step: assumptions by membership, axioms against the claimed
/// schema id, rule applications against earlier steps. Formulas are first
/// rewritten into the calculus's primitive language.
inline Verdict check_derivation(const Derivation& d) {
    Signature sig = calculus_signature(d.calculus);
    auto in_language = [&](const Formula& f) -> std::optional<Formula> {
        try {
            return expand_defined(f, sig);
        } catch (const ExpandError&) {
            return std::nullopt;
        }
    };
    std::vector<Formula> assumptions;
    for (const auto& a : d.assumptions) {
        auto g = in_language(a);
        if (!g) return {false, 0, "assumption outside calculus language"};
        assumptions.push_back(*g);
    }
    std::vector<Formula> seen;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const Step& st = d.steps[i];
        int stepno = static_cast<int>(i) + 1;
        auto g = in_language(st.formula);
        if (!g) return {false, stepno, "formula outside calculus language"};
        Formula f = *g;
        if (std::holds_alternative<ByAssumption>(st.just)) {
            bool found = false;
            for (const auto& a : assumptions)
                if (a == f) found = true;
            if (!found) return {false, stepno, "not an assumption"};
        } else if (const auto* ax = std::get_if<ByAxiom>(&st.just)) {
            const AxiomSchema* schema = nullptr;
            for (const auto& s : axioms(d.calculus))
                if (s.id == ax->id) schema = &s;
            if (!schema) return {false, stepno, "no axiom match"};
            if (ax->sub) {
                if (substitute(schema->pattern, *ax->sub) != f)
                    return {false, stepno, "no axiom match"};
            } else if (!match(schema->pattern, f)) {
                return {false, stepno, "no axiom match"};
            }
        } else {
            const auto& ru = std::get<ByRule>(st.just);
            std::vector<Formula> prem;
            for (int ix : ru.premises) {
                if (ix < 1 || ix > static_cast<int>(i))
                    return {false, stepno, "bad premise index"};
                prem.push_back(seen[ix - 1]);
            }
            if (!match_rule(d.calculus, ru.rule, prem, f))
                return {false, stepno, "no rule match"};
        }
        seen.push_back(f);
    }
    return {};
}

// ---------------------------------------------------------------------------
// Proof-script format (line oriented)
//   calculus <id>
//   assume <formula>
//   step <n>: <formula> by assumption
//   step <n>: <formula> by axiom <id>
//   step <n>: <formula> by rule <id> from <n,...>

inline Derivation parse_proof_script(std::istream& in) {
    Derivation d;
    bool have_calculus = false;
    std::string raw;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw InputError("proof script line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::strip_comment(raw);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "calculus") {
            std::string id;
            if (!(ls >> id)) fail("expected calculus id");
            auto c = calculus_from_name(id);
            if (!c) fail("unknown calculus '" + id + "'");
            d.calculus = *c;
            have_calculus = true;
        } else if (kw == "assume") {
            std::string rest;
            std::getline(ls, rest);
            d.assumptions.push_back(parse(rest));
        } else if (kw == "step") {
            std::string numtok;
            if (!(ls >> numtok) || numtok.back() != ':') fail("expected 'step <n>:'");
            int num = detail::parse_int(numtok.substr(0, numtok.size() - 1), "step number");
            if (num != static_cast<int>(d.steps.size()) + 1)
                fail("step number " + std::to_string(num) + " out of sequence");
            std::string rest;
            std::getline(ls, rest);
            auto by = rest.rfind(" by ");
            if (by == std::string::npos) fail("expected 'by' justification");
            Formula f = parse(rest.substr(0, by));
            std::istringstream js(rest.substr(by + 4));
            std::string what;
            js >> what;
            if (what == "assumption") {
                d.steps.push_back({f, ByAssumption{}});
            } else if (what == "axiom") {
                std::string id;
                if (!(js >> id)) fail("expected axiom id");
                d.steps.push_back({f, ByAxiom{id, std::nullopt}});
            } else if (what == "rule") {
                std::string id, fromkw;
                if (!(js >> id)) fail("expected rule id");
                auto r = rule_from_name(id);
                if (!r) fail("unknown rule '" + id + "'");
                if (!(js >> fromkw) || fromkw != "from") fail("expected 'from <indices>'");
                std::string ixs;
                std::getline(js, ixs);
                std::vector<int> prem;
                std::istringstream is(ixs);
                std::string tok;
                while (std::getline(is, tok, ',')) {
                    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
                    auto b = tok.find_first_not_of(" \t");
                    auto e = tok.find_last_not_of(" \t");
                    prem.push_back(detail::parse_int(tok.substr(b, e - b + 1), "premise index"));
                }
                if (prem.empty()) fail("expected premise indices");
                d.steps.push_back({f, ByRule{*r, prem}});
            } else {
                fail("unknown justification '" + what + "'");
            }
        } else {
            fail("unknown directive '" + kw + "'");
        }
    }
    if (!have_calculus) throw InputError("proof script: missing 'calculus <id>' line");
    if (d.steps.empty()) throw InputError("proof script: no steps");
    return d;
}

inline Derivation parse_proof_script(const std::string& text) {
    std::istringstream in(text);
    return parse_proof_script(in);
}

} // namespace nelson
