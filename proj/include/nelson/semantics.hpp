// Evaluation of formulas under valuations, (quasi)equation satisfaction by
// exhaustive valuation sweeps, deterministic countermodel search, and the
// nine-formula refutation suite for the bundled eight-element algebra.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nelson/algebra.hpp"
#include "nelson/formula.hpp"

namespace nelson {

/// Total assignment of carrier elements to the variables in play.
using Valuation = std::map<std::string, int>;

struct Equation {
    Formula lhs, rhs;
};

struct QuasiEquation {
    std::vector<Equation> premises;
    Equation conclusion;
};

inline std::string render(const Equation& e) {
    return render(e.lhs) + " = " + render(e.rhs);
}

inline std::string render(const QuasiEquation& q) {
    if (q.premises.empty()) return render(q.conclusion);
    std::string out;
    for (std::size_t i = 0; i < q.premises.size(); ++i)
        out += (i ? ", " : "") + render(q.premises[i]);
    return out + " |- " + render(q.conclusion);
}

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline int eval_rec(const Formula& f, const Valuation& nu, const FiniteAlgebra& A) {
    switch (f.kind()) {
        case Conn::Var: {
            auto it = nu.find(f.var_name());
            if (it == nu.end()) throw EvalError("unbound variable '" + f.var_name() + "'");
            return it->second;
        }
        case Conn::Zero:
            if (!A.zero) throw EvalError("algebra '" + A.name + "' has no constant 0");
            return *A.zero;
        case Conn::One:
            if (!A.one) throw EvalError("algebra '" + A.name + "' has no constant 1");
            return *A.one;
        case Conn::Not:
            return A.app1(Conn::Not, eval_rec(f.left(), nu, A));
        default:
            return A.app(f.kind(), eval_rec(f.left(), nu, A), eval_rec(f.right(), nu, A));
    }
}

} // namespace detail

/// Homomorphic table evaluation. Connectives outside A's signature are first
/// rewritten through their definitions; an inexpressible connective raises
/// EvalError.
inline int eval(const Formula& f, const Valuation& nu, const FiniteAlgebra& A) {
    try {
        Formula g = expand_defined(f, A.signature());
        return detail::eval_rec(g, nu, A);
    } catch (const ExpandError& e) {
        throw EvalError(std::string(e.what()) + " (algebra '" + A.name + "')");
    }
}

/// Runs `visit` over every valuation of `names` into A, in lexicographic
/// order (variables sorted by name, elements in carrier order). Stops early
/// when `visit` returns false.
inline void for_each_valuation(const std::set<std::string>& names, const FiniteAlgebra& A,
                               const std::function<bool(const Valuation&)>& visit) {
    std::vector<std::string> order(names.begin(), names.end());
    int n = A.size();
    Valuation nu;
    for (const auto& v : order) nu[v] = 0;
    while (true) {
        if (!visit(nu)) return;
        int k = static_cast<int>(order.size()) - 1;
        while (k >= 0 && nu[order[k]] == n - 1) nu[order[k--]] = 0;
        if (k < 0) return;
        ++nu[order[k]];
    }
}

struct SatResult {
    bool satisfied = true;
    std::optional<Valuation> witness;  // lexicographically least falsifying valuation
};

inline SatResult satisfies_equation(const FiniteAlgebra& A, const Equation& e) {
    std::set<std::string> names = vars(e.lhs);
    collect_vars(e.rhs, names);
    Formula l = expand_defined(e.lhs, A.signature());
    Formula r = expand_defined(e.rhs, A.signature());
    SatResult res;
    for_each_valuation(names, A, [&](const Valuation& nu) {
        if (detail::eval_rec(l, nu, A) != detail::eval_rec(r, nu, A)) {
            res.satisfied = false;
            res.witness = nu;
            return false;
        }
        return true;
    });
    return res;
}

/// True iff every valuation satisfying all premises satisfies the conclusion;
/// a false verdict carries the least valuation meeting the premises but not
/// the conclusion.
inline SatResult satisfies_quasiequation(const FiniteAlgebra& A, const QuasiEquation& q) {
    std::set<std::string> names;
    for (const auto& e : q.premises) {
        collect_vars(e.lhs, names);
        collect_vars(e.rhs, names);
    }
    collect_vars(q.conclusion.lhs, names);
    collect_vars(q.conclusion.rhs, names);
    std::vector<std::pair<Formula, Formula>> prem;
    for (const auto& e : q.premises)
        prem.emplace_back(expand_defined(e.lhs, A.signature()),
                          expand_defined(e.rhs, A.signature()));
    Formula cl = expand_defined(q.conclusion.lhs, A.signature());
    Formula cr = expand_defined(q.conclusion.rhs, A.signature());
    SatResult res;
    for_each_valuation(names, A, [&](const Valuation& nu) {
        for (const auto& [l, r] : prem)
            if (detail::eval_rec(l, nu, A) != detail::eval_rec(r, nu, A)) return true;
        if (detail::eval_rec(cl, nu, A) != detail::eval_rec(cr, nu, A)) {
            res.satisfied = false;
            res.witness = nu;
            return false;
        }
        return true;
    });
    return res;
}

/// Least valuation (if any) under which f evaluates to something other
/// than 1. Requires the constant 1.
inline std::optional<Valuation> find_countermodel(const FiniteAlgebra& A, const Formula& f) {
    if (!A.one) throw EvalError("countermodel search requires constant 1");
    Formula g = expand_defined(f, A.signature());
    std::optional<Valuation> out;
    for_each_valuation(vars(g), A, [&](const Valuation& nu) {
        if (detail::eval_rec(g, nu, A) != *A.one) {
            out = nu;
            return false;
        }
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Deduction-theorem probe

/// Per-algebra reflection of the deduction property for phi |- psi against
/// the term phi^2 => psi: side `antecedent_entails` is the valuation-level
/// inclusion {nu(phi)=1} subset of {nu(psi)=1}; side `term_valid` is
/// A |= phi^2 => psi = 1. On one algebra this is evidence, not a theorem.
struct DdtProbe {
    bool antecedent_entails = true;
    bool term_valid = true;
    bool agree() const { return antecedent_entails == term_valid; }
};

inline DdtProbe semantic_ddt_check(const FiniteAlgebra& A, const Formula& phi,
                                   const Formula& psi) {
    if (!A.one) throw EvalError("deduction probe requires constant 1");
    DdtProbe probe;
    std::set<std::string> names = vars(phi);
    collect_vars(psi, names);
    Formula p = expand_defined(phi, A.signature());
    Formula s = expand_defined(psi, A.signature());
    Formula t = expand_defined(imp(fuse(phi, phi), psi), A.signature());
    for_each_valuation(names, A, [&](const Valuation& nu) {
        if (detail::eval_rec(p, nu, A) == *A.one && detail::eval_rec(s, nu, A) != *A.one)
            probe.antecedent_entails = false;
        if (detail::eval_rec(t, nu, A) != *A.one) probe.term_valid = false;
        return probe.antecedent_entails || probe.term_valid;
    });
    return probe;
}

// ---------------------------------------------------------------------------
// The nine-formula refutation suite

struct RefutationCase {
    std::string label;
    Formula formula;
    Valuation stated_valuation;  // the published countermodel valuation
};

/// Excluded middle, ex contradictione, contraction, ... : the formulas that
/// the bundled eight-element algebra refutes, with their published
/// valuations (element names resolved against the algebra at run time).
inline std::vector<RefutationCase> refutation_suite(const FiniteAlgebra& A) {
    auto v = [&](std::initializer_list<std::pair<const char*, const char*>> bs) {
        Valuation nu;
        for (const auto& [var, el] : bs) nu[var] = A.elem(el);
        return nu;
    };
    return {
        {"excluded middle", parse("p | ~p"), v({{"p", "c"}})},
        {"no-contradiction", parse("~(p & ~p)"), v({{"p", "c"}})},
        {"ex contradictione", parse("(p & ~p) => q"), v({{"p", "c"}, {"q", "0"}})},
        {"contraction", parse("(p => (p => q)) => (p => q)"), v({{"p", "c"}, {"q", "0"}})},
        {"currying", parse("(p => (q => r)) => ((p & q) => r)"),
         v({{"p", "c"}, {"q", "c"}, {"r", "0"}})},
        {"negated implication intro", parse("(p & ~q) => ~(p => q)"),
         v({{"p", "c"}, {"q", "c"}})},
        {"Lukasiewicz", parse("((p => q) => q) => ((q => p) => p)"),
         v({{"p", "nc"}, {"q", "c"}})},
        {"distributivity", parse("(p & (q | r)) => ((p & q) | (p & r))"),
         v({{"p", "c"}, {"q", "nc"}, {"r", "nb"}})},
        {"Nelson", parse("((p * p => q) & (~q * ~q => ~p)) => (p => q)"),
         v({{"p", "c"}, {"q", "nb"}})},
    };
}

struct RefutationOutcome {
    std::string label;
    bool refuted = false;                 // a countermodel valuation exists
    std::optional<Valuation> found;       // least countermodel
    int stated_value = -1;                // value under the published valuation
};

inline std::vector<RefutationOutcome> check_refutation_suite(const FiniteAlgebra& A) {
    std::vector<RefutationOutcome> out;
    for (const auto& c : refutation_suite(A)) {
        RefutationOutcome o;
        o.label = c.label;
        o.found = find_countermodel(A, c.formula);
        o.refuted = o.found.has_value();
        o.stated_value = eval(c.formula, c.stated_valuation, A);
        out.push_back(std::move(o));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Equation / quasiequation text syntax
//   equation:        <formula> = <formula>
//   quasiequation:   <eq> , ... , <eq> |- <eq>

inline Equation parse_equation_at(const std::vector<Token>& toks, std::size_t& i) {
    Formula l = detail::FormulaParser(toks, i).parse_iff();
    if (toks[i].kind != TokKind::Eq)
        throw ParseError("expected '=' in equation", toks[i].pos);
    ++i;
    Formula r = detail::FormulaParser(toks, i).parse_iff();
    return {l, r};
}

inline Equation parse_equation(const std::string& text) {
    auto toks = lex(text);
    std::size_t i = 0;
    Equation e = parse_equation_at(toks, i);
    if (toks[i].kind != TokKind::End)
        throw ParseError("trailing input '" + toks[i].text + "'", toks[i].pos);
    return e;
}

inline QuasiEquation parse_quasiequation(const std::string& text) {
    auto toks = lex(text);
    std::size_t i = 0;
    std::vector<Equation> eqs;
    eqs.push_back(parse_equation_at(toks, i));
    while (toks[i].kind == TokKind::Comma) {
        ++i;
        eqs.push_back(parse_equation_at(toks, i));
    }
    QuasiEquation q;
    if (toks[i].kind == TokKind::Turnstile) {
        ++i;
        q.premises = std::move(eqs);
        q.conclusion = parse_equation_at(toks, i);
    } else {
        if (eqs.size() != 1)
            throw ParseError("expected '|-' before conclusion", toks[i].pos);
        q.conclusion = eqs[0];
    }
    if (toks[i].kind != TokKind::End)
        throw ParseError("trailing input '" + toks[i].text + "'", toks[i].pos);
    return q;
}

} // namespace nelson
