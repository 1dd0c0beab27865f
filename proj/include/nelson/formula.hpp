// Formula trees for the workbench: connectives ~ & | * => -> over
// variables and the constants 0, 1, with parsing, printing, substitution,
// signature-directed expansion of defined connectives, and the fold
// Gamma => phi / Gamma =>^2 phi used by the rule schemata.
#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nelson {

enum class Conn { Var, Zero, One, Not, And, Or, Imp, Fuse, WImp };

inline bool is_binary(Conn c) {
    return c == Conn::And || c == Conn::Or || c == Conn::Imp ||
           c == Conn::Fuse || c == Conn::WImp;
}

inline const char* conn_token(Conn c) {
    switch (c) {
        case Conn::Zero: return "0";
        case Conn::One:  return "1";
        case Conn::Not:  return "~";
        case Conn::And:  return "&";
        case Conn::Or:   return "|";
        case Conn::Imp:  return "=>";
        case Conn::Fuse: return "*";
        case Conn::WImp: return "->";
        case Conn::Var:  return "<var>";
    }
    return "?";
}

/// Immutable formula; cheap to copy (shared subterms).
class Formula {
    struct Node {
        Conn kind;
        std::string var;                       // Var only
        std::shared_ptr<const Node> a, b;      // Not uses a; binaries use a,b
    };
    std::shared_ptr<const Node> n_;
    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

public:
    Formula() : Formula(zero()) {}

    static Formula var(std::string name) {
        if (name.empty()) throw std::invalid_argument("empty variable name");
        return Formula(std::make_shared<Node>(Node{Conn::Var, std::move(name), nullptr, nullptr}));
    }
    static Formula zero() {
        return Formula(std::make_shared<Node>(Node{Conn::Zero, {}, nullptr, nullptr}));
    }
    static Formula one() {
        return Formula(std::make_shared<Node>(Node{Conn::One, {}, nullptr, nullptr}));
    }
    static Formula unary(Conn k, Formula a) {
        return Formula(std::make_shared<Node>(Node{k, {}, a.n_, nullptr}));
    }
    static Formula binary(Conn k, Formula a, Formula b) {
        return Formula(std::make_shared<Node>(Node{k, {}, a.n_, b.n_}));
    }

    Conn kind() const { return n_->kind; }
    const std::string& var_name() const { return n_->var; }
    Formula left() const { return Formula(n_->a); }
    Formula right() const { return Formula(n_->b); }

    friend bool operator==(const Formula& x, const Formula& y) {
        return equal(x.n_.get(), y.n_.get());
    }
    friend bool operator!=(const Formula& x, const Formula& y) { return !(x == y); }

private:
    static bool equal(const Node* x, const Node* y) {
        if (x == y) return true;
        if (x->kind != y->kind) return false;
        switch (x->kind) {
            case Conn::Var:  return x->var == y->var;
            case Conn::Zero:
            case Conn::One:  return true;
            case Conn::Not:  return equal(x->a.get(), y->a.get());
            default:         return equal(x->a.get(), y->a.get()) && equal(x->b.get(), y->b.get());
        }
    }
};

inline Formula land(Formula a, Formula b) { return Formula::binary(Conn::And, a, b); }
inline Formula lor(Formula a, Formula b)  { return Formula::binary(Conn::Or, a, b); }
inline Formula imp(Formula a, Formula b)  { return Formula::binary(Conn::Imp, a, b); }
inline Formula fuse(Formula a, Formula b) { return Formula::binary(Conn::Fuse, a, b); }
inline Formula wimp(Formula a, Formula b) { return Formula::binary(Conn::WImp, a, b); }
inline Formula neg(Formula a)             { return Formula::unary(Conn::Not, a); }
/// x^2 := x * x
inline Formula sq(Formula a)              { return fuse(a, a); }

using Subst = std::map<std::string, Formula>;

/// Simultaneous substitution; variables outside the map are unchanged.
inline Formula substitute(const Formula& f, const Subst& sigma) {
    switch (f.kind()) {
        case Conn::Var: {
            auto it = sigma.find(f.var_name());
            return it == sigma.end() ? f : it->second;
        }
        case Conn::Zero:
        case Conn::One:
            return f;
        case Conn::Not:
            return neg(substitute(f.left(), sigma));
        default:
            return Formula::binary(f.kind(), substitute(f.left(), sigma),
                                   substitute(f.right(), sigma));
    }
}

inline void collect_vars(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case Conn::Var: out.insert(f.var_name()); break;
        case Conn::Zero:
        case Conn::One: break;
        case Conn::Not: collect_vars(f.left(), out); break;
        default:
            collect_vars(f.left(), out);
            collect_vars(f.right(), out);
    }
}

inline std::set<std::string> vars(const Formula& f) {
    std::set<std::string> out;
    collect_vars(f, out);
    return out;
}

// ---------------------------------------------------------------------------
// Signatures

/// An operation/constant vocabulary. And/Or are always present.
struct Signature {
    std::set<Conn> ops;

    bool contains(Conn c) const { return ops.count(c) != 0; }

    /// <and, or, imp, not, 0>  -- 1 abbreviates ~0
    static Signature s_language() {
        return {{Conn::And, Conn::Or, Conn::Imp, Conn::Not, Conn::Zero}};
    }
    /// <and, or, imp, not, 0, 1>
    static Signature s_algebra_language() {
        return {{Conn::And, Conn::Or, Conn::Imp, Conn::Not, Conn::Zero, Conn::One}};
    }
    /// <and, or, fuse, imp, 0, 1>  -- ~x abbreviates x => 0
    static Signature s_prime_language() {
        return {{Conn::And, Conn::Or, Conn::Fuse, Conn::Imp, Conn::Zero, Conn::One}};
    }
    /// <and, or, wimp, not>
    static Signature n4_language() {
        return {{Conn::And, Conn::Or, Conn::WImp, Conn::Not}};
    }
    /// <and, or, fuse, imp, 1> -- residuated-lattice language (no 0, no not)
    static Signature rl_language() {
        return {{Conn::And, Conn::Or, Conn::Fuse, Conn::Imp, Conn::One}};
    }
};

struct ExpandError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rewrites every connective outside `target` through its definition:
///   1 := ~0            ~x := x => 0
///   x * y := ~(x => ~y)
///   x -> y := (x * x) => y
/// Throws ExpandError when a connective has no expansion into `target`.
inline Formula expand_defined(const Formula& f, const Signature& target) {
    auto expand = [&target](const Formula& g, auto&& self) -> Formula {
        switch (g.kind()) {
            case Conn::Var:
                return g;
            case Conn::Zero:
                if (target.contains(Conn::Zero)) return g;
                throw ExpandError("constant 0 not in target signature");
            case Conn::One:
                if (target.contains(Conn::One)) return g;
                if (target.contains(Conn::Not) && target.contains(Conn::Zero))
                    return neg(Formula::zero());
                throw ExpandError("constant 1 not expressible in target signature");
            case Conn::Not: {
                if (target.contains(Conn::Not)) return neg(self(g.left(), self));
                if (target.contains(Conn::Imp) && target.contains(Conn::Zero))
                    return imp(self(g.left(), self), Formula::zero());
                throw ExpandError("negation not expressible in target signature");
            }
            case Conn::Fuse: {
                if (target.contains(Conn::Fuse))
                    return fuse(self(g.left(), self), self(g.right(), self));
                if (target.contains(Conn::Not) && target.contains(Conn::Imp)) {
                    Formula a = self(g.left(), self), b = self(g.right(), self);
                    return neg(imp(a, neg(b)));
                }
                throw ExpandError("fusion not expressible in target signature");
            }
            case Conn::WImp: {
                if (target.contains(Conn::WImp))
                    return wimp(self(g.left(), self), self(g.right(), self));
                // x -> y := x^2 => y, with the square expanded recursively
                return self(imp(fuse(g.left(), g.left()), g.right()), self);
            }
            case Conn::And:
                if (!target.contains(Conn::And))
                    throw ExpandError("conjunction missing from target signature");
                return land(self(g.left(), self), self(g.right(), self));
            case Conn::Or:
                if (!target.contains(Conn::Or))
                    throw ExpandError("disjunction missing from target signature");
                return lor(self(g.left(), self), self(g.right(), self));
            case Conn::Imp:
                if (!target.contains(Conn::Imp))
                    throw ExpandError("implication not expressible in target signature");
                return imp(self(g.left(), self), self(g.right(), self));
        }
        throw ExpandError("unreachable");
    };
    return expand(f, expand);
}

// ---------------------------------------------------------------------------
// Gamma folds

using GammaList = std::vector<Formula>;

/// phi_1 =>^k (phi_2 =>^k (... =>^k f)); the empty list yields f itself.
/// power 2 repeats each antecedent: x =>^2 y is x => (x => y).
inline Formula gamma_implication(const GammaList& gamma, Formula f, int power) {
    if (power != 1 && power != 2) throw std::invalid_argument("power must be 1 or 2");
    Formula acc = f;
    for (auto it = gamma.rbegin(); it != gamma.rend(); ++it) {
        acc = imp(*it, acc);
        if (power == 2) acc = imp(*it, acc);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Parsing

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::string msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

enum class TokKind {
    Ident, Zero, One, Not, And, Or, Fuse, Imp, WImp, Iff,
    LParen, RParen, Eq, Comma, Turnstile, End
};

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

/// Shared lexer for formulas, equations and quasiequations. Accepts the
/// unicode aliases (negation, meet, join, double and single arrows) on input.
inline std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto push = [&](TokKind k, std::string t, std::size_t p) {
        out.push_back({k, std::move(t), p});
    };
    while (i < s.size()) {
        unsigned char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { ++i; continue; }
        std::size_t p = i;
        if (c == '(') { push(TokKind::LParen, "(", p); ++i; continue; }
        if (c == ')') { push(TokKind::RParen, ")", p); ++i; continue; }
        if (c == '~') { push(TokKind::Not, "~", p); ++i; continue; }
        if (c == '&') { push(TokKind::And, "&", p); ++i; continue; }
        if (c == '*') { push(TokKind::Fuse, "*", p); ++i; continue; }
        if (c == ',') { push(TokKind::Comma, ",", p); ++i; continue; }
        if (c == '0') { push(TokKind::Zero, "0", p); ++i; continue; }
        if (c == '1') { push(TokKind::One, "1", p); ++i; continue; }
        if (c == '|') {
            if (i + 1 < s.size() && s[i + 1] == '-') { push(TokKind::Turnstile, "|-", p); i += 2; }
            else { push(TokKind::Or, "|", p); ++i; }
            continue;
        }
        if (c == '=') {
            if (i + 1 < s.size() && s[i + 1] == '>') { push(TokKind::Imp, "=>", p); i += 2; }
            else { push(TokKind::Eq, "=", p); ++i; }
            continue;
        }
        if (c == '-') {
            if (i + 1 < s.size() && s[i + 1] == '>') { push(TokKind::WImp, "->", p); i += 2; }
            else throw ParseError("stray '-'", p);
            continue;
        }
        if (c == '<') {
            if (s.compare(i, 3, "<=>") == 0) { push(TokKind::Iff, "<=>", p); i += 3; }
            else throw ParseError("expected '<=>'", p);
            continue;
        }
        // unicode aliases
        if (c == 0xC2 && i + 1 < s.size() && (unsigned char)s[i + 1] == 0xAC) {
            push(TokKind::Not, "~", p); i += 2; continue;   // U+00AC
        }
        if (c == 0xE2 && i + 2 < s.size()) {
            unsigned char c1 = s[i + 1], c2 = s[i + 2];
            if (c1 == 0x88 && c2 == 0xA7) { push(TokKind::And, "&", p); i += 3; continue; }   // U+2227
            if (c1 == 0x88 && c2 == 0xA8) { push(TokKind::Or, "|", p); i += 3; continue; }    // U+2228
            if (c1 == 0x87 && c2 == 0x92) { push(TokKind::Imp, "=>", p); i += 3; continue; }  // U+21D2
            if (c1 == 0x86 && c2 == 0x92) { push(TokKind::WImp, "->", p); i += 3; continue; } // U+2192
            throw ParseError("unknown connective", p);
        }
        if (std::isalpha(c)) {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) ++j;
            push(TokKind::Ident, s.substr(i, j - i), p);
            i = j;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + (char)c + "'", p);
    }
    push(TokKind::End, "", s.size());
    return out;
}

namespace detail {

class FormulaParser {
public:
    FormulaParser(const std::vector<Token>& toks, std::size_t& idx) : t_(toks), i_(idx) {}

    Formula parse_iff() {
        Formula a = parse_imp();
        if (peek() == TokKind::Iff) {
            next();
            Formula b = parse_iff();
            return land(imp(a, b), imp(b, a));
        }
        return a;
    }

private:
    const std::vector<Token>& t_;
    std::size_t& i_;

    TokKind peek() const { return t_[i_].kind; }
    const Token& next() { return t_[i_++]; }

    Formula parse_imp() {
        Formula a = parse_or();
        TokKind k = peek();
        if (k == TokKind::Imp || k == TokKind::WImp) {
            next();
            Formula b = parse_imp();
            return Formula::binary(k == TokKind::Imp ? Conn::Imp : Conn::WImp, a, b);
        }
        return a;
    }
    Formula parse_or() {
        Formula a = parse_and();
        while (peek() == TokKind::Or) { next(); a = lor(a, parse_and()); }
        return a;
    }
    Formula parse_and() {
        Formula a = parse_fuse();
        while (peek() == TokKind::And) { next(); a = land(a, parse_fuse()); }
        return a;
    }
    Formula parse_fuse() {
        Formula a = parse_unary();
        while (peek() == TokKind::Fuse) { next(); a = fuse(a, parse_unary()); }
        return a;
    }
    Formula parse_unary() {
        if (peek() == TokKind::Not) { next(); return neg(parse_unary()); }
        return parse_atom();
    }
    Formula parse_atom() {
        const Token& tk = next();
        switch (tk.kind) {
            case TokKind::Zero:  return Formula::zero();
            case TokKind::One:   return Formula::one();
            case TokKind::Ident: return Formula::var(tk.text);
            case TokKind::LParen: {
                Formula f = parse_iff();
                if (peek() != TokKind::RParen)
                    throw ParseError("expected ')'", t_[i_].pos);
                next();
                return f;
            }
            default:
                throw ParseError("expected formula, got '" + tk.text + "'", tk.pos);
        }
    }
};

} // namespace detail

/// Parses the ASCII grammar (unicode aliases accepted). '<=>' is desugared
/// into the conjunction of the two implications during parsing.
inline Formula parse(const std::string& text) {
    auto toks = lex(text);
    std::size_t i = 0;
    Formula f = detail::FormulaParser(toks, i).parse_iff();
    if (toks[i].kind != TokKind::End)
        throw ParseError("trailing input '" + toks[i].text + "'", toks[i].pos);
    return f;
}

// ---------------------------------------------------------------------------
// Printing (canonical ASCII, minimal parentheses)

namespace detail {

inline int prec(Conn k) {
    switch (k) {
        case Conn::Imp:
        case Conn::WImp: return 10;
        case Conn::Or:   return 20;
        case Conn::And:  return 30;
        case Conn::Fuse: return 40;
        case Conn::Not:  return 50;
        default:         return 60;
    }
}

inline void render_rec(const Formula& f, int min_prec, std::string& out) {
    int p = prec(f.kind());
    bool wrap = p < min_prec;
    if (wrap) out += '(';
    switch (f.kind()) {
        case Conn::Var:  out += f.var_name(); break;
        case Conn::Zero: out += '0'; break;
        case Conn::One:  out += '1'; break;
        case Conn::Not:
            out += '~';
            render_rec(f.left(), p, out);
            break;
        case Conn::Imp:
        case Conn::WImp:
            render_rec(f.left(), p + 1, out);
            out += ' ';
            out += conn_token(f.kind());
            out += ' ';
            render_rec(f.right(), p, out);
            break;
        default:  // left-associative: And, Or, Fuse
            render_rec(f.left(), p, out);
            out += ' ';
            out += conn_token(f.kind());
            out += ' ';
            render_rec(f.right(), p + 1, out);
    }
    if (wrap) out += ')';
}

} // namespace detail

inline std::string render(const Formula& f) {
    std::string out;
    detail::render_rec(f, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// One-sided matching (schema variables against a concrete formula)

/// Extends sigma so that substitute(pattern, sigma) == subject, treating every
/// variable of `pattern` as a schema variable. On failure sigma may hold
/// partial bindings and should be discarded by the caller.
inline bool match(const Formula& pattern, const Formula& subject, Subst& sigma) {
    switch (pattern.kind()) {
        case Conn::Var: {
            auto it = sigma.find(pattern.var_name());
            if (it != sigma.end()) return it->second == subject;
            sigma.emplace(pattern.var_name(), subject);
            return true;
        }
        case Conn::Zero:
        case Conn::One:
            return pattern.kind() == subject.kind();
        case Conn::Not:
            return subject.kind() == Conn::Not && match(pattern.left(), subject.left(), sigma);
        default:
            return subject.kind() == pattern.kind() &&
                   match(pattern.left(), subject.left(), sigma) &&
                   match(pattern.right(), subject.right(), sigma);
    }
}

inline std::optional<Subst> match(const Formula& pattern, const Formula& subject) {
    Subst sigma;
    if (match(pattern, subject, sigma)) return sigma;
    return std::nullopt;
}

} // namespace nelson
