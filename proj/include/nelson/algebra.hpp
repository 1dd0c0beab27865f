// Finite algebras as operation tables over a declared signature, with the
// structural validators used throughout the workbench (lattice, residuated
// lattice, involutive / three-potent, N4/N3-lattice, MV, distributivity,
// congruence machinery and quotients).
#pragma once

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nelson/formula.hpp"

namespace nelson {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// FiniteAlgebra

/// Named carrier plus one table per operation symbol. Treated as immutable
/// once loaded/validated; all check functions are pure.
struct FiniteAlgebra {
    std::string name;
    std::vector<std::string> elems;
    std::map<Conn, std::vector<int>> tables;  // binary: n*n row-major (row = left arg); Not: n
    std::optional<int> zero, one;

    int size() const { return static_cast<int>(elems.size()); }

    bool has(Conn c) const {
        if (c == Conn::Zero) return zero.has_value();
        if (c == Conn::One) return one.has_value();
        return tables.count(c) != 0;
    }

    Signature signature() const {
        Signature sig;
        for (const auto& [op, _] : tables) sig.ops.insert(op);
        if (zero) sig.ops.insert(Conn::Zero);
        if (one) sig.ops.insert(Conn::One);
        return sig;
    }

    int app(Conn op, int a, int b) const {
        return tables.at(op)[static_cast<std::size_t>(a) * elems.size() + b];
    }
    int app1(Conn op, int a) const { return tables.at(op)[a]; }

    int meet(int a, int b) const { return app(Conn::And, a, b); }
    int join(int a, int b) const { return app(Conn::Or, a, b); }

    /// Induced order: a <= b iff a & b = a. Recomputed from the meet table;
    /// the join table is cross-checked against it, never trusted.
    bool leq(int a, int b) const { return meet(a, b) == a; }

    /// Negation, falling back to x => 0 when no table is declared.
    int neg_of(int a) const {
        if (has(Conn::Not)) return app1(Conn::Not, a);
        if (has(Conn::Imp) && zero) return app(Conn::Imp, a, *zero);
        throw std::invalid_argument("algebra '" + name + "' cannot express negation");
    }

    /// Fusion, falling back to ~(x => ~y) when no table is declared.
    int fuse_of(int a, int b) const {
        if (has(Conn::Fuse)) return app(Conn::Fuse, a, b);
        if (has(Conn::Imp)) return neg_of(app(Conn::Imp, a, neg_of(b)));
        throw std::invalid_argument("algebra '" + name + "' cannot express fusion");
    }

    int elem(const std::string& e) const {
        for (int i = 0; i < size(); ++i)
            if (elems[i] == e) return i;
        throw InputError("unknown element '" + e + "' of algebra '" + name + "'");
    }

    const std::string& elem_name(int i) const { return elems[i]; }
};

// ---------------------------------------------------------------------------
// Text format

inline const char* op_token(Conn c) { return conn_token(c); }

inline std::optional<Conn> op_from_token(const std::string& t) {
    if (t == "&") return Conn::And;
    if (t == "|") return Conn::Or;
    if (t == "*") return Conn::Fuse;
    if (t == "=>") return Conn::Imp;
    if (t == "->") return Conn::WImp;
    if (t == "~") return Conn::Not;
    if (t == "0") return Conn::Zero;
    if (t == "1") return Conn::One;
    return std::nullopt;
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline int parse_int(const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw InputError(std::string("expected ") + what + ", got '" + tok + "'");
    }
}

} // namespace detail

/// Loads the line-oriented algebra format:
///   algebra <name> / size <n> / elements e1 .. en / signature <op tokens>
///   const 0 <elem> / const 1 <elem> / op <token> followed by table rows.
inline FiniteAlgebra load_algebra(std::istream& in) {
    FiniteAlgebra A;
    std::vector<Conn> declared;
    int lineno = 0;
    std::string raw;
    auto fail = [&](const std::string& msg) -> void {
        throw InputError("algebra file line " + std::to_string(lineno) + ": " + msg);
    };
    auto next_tokens = [&](std::vector<std::string>& toks) -> bool {
        while (std::getline(in, raw)) {
            ++lineno;
            toks = detail::split_ws(detail::strip_comment(raw));
            if (!toks.empty()) return true;
        }
        return false;
    };
    std::vector<std::string> toks;
    bool pending = false;
    while (pending || next_tokens(toks)) {
        pending = false;
        const std::string& kw = toks[0];
        if (kw == "algebra") {
            if (toks.size() != 2) fail("expected: algebra <name>");
            A.name = toks[1];
        } else if (kw == "size") {
            if (toks.size() != 2) fail("expected: size <n>");
            int n = detail::parse_int(toks[1], "size");
            if (n < 1) fail("size must be >= 1");
            A.elems.resize(n);
        } else if (kw == "elements") {
            if (toks.size() != A.elems.size() + 1) fail("element count does not match size");
            std::copy(toks.begin() + 1, toks.end(), A.elems.begin());
            for (std::size_t i = 0; i < A.elems.size(); ++i)
                for (std::size_t j = i + 1; j < A.elems.size(); ++j)
                    if (A.elems[i] == A.elems[j]) fail("duplicate element name '" + A.elems[i] + "'");
        } else if (kw == "signature") {
            for (std::size_t i = 1; i < toks.size(); ++i) {
                auto op = op_from_token(toks[i]);
                if (!op) fail("unknown signature symbol '" + toks[i] + "'");
                declared.push_back(*op);
            }
        } else if (kw == "const") {
            if (toks.size() != 3) fail("expected: const 0|1 <elem>");
            int v = A.elem(toks[2]);
            if (toks[1] == "0") A.zero = v;
            else if (toks[1] == "1") A.one = v;
            else fail("expected: const 0|1 <elem>");
        } else if (kw == "op") {
            if (toks.size() != 2) fail("expected: op <symbol>");
            auto op = op_from_token(toks[1]);
            if (!op || *op == Conn::Zero || *op == Conn::One)
                fail("unknown operation symbol '" + toks[1] + "'");
            int n = A.size();
            if (n == 0) fail("'op' before 'size'/'elements'");
            int rows = (*op == Conn::Not) ? 1 : n;
            std::vector<int> table;
            table.reserve(static_cast<std::size_t>(rows) * n);
            for (int r = 0; r < rows; ++r) {
                if (!next_tokens(toks)) fail("missing table row");
                if (static_cast<int>(toks.size()) != n) fail("row must have exactly " + std::to_string(n) + " entries");
                for (const auto& t : toks) table.push_back(A.elem(t));
            }
            A.tables[*op] = std::move(table);
        } else {
            fail("unknown directive '" + kw + "'");
        }
    }
    if (A.name.empty()) throw InputError("algebra file: missing 'algebra <name>'");
    if (A.elems.empty()) throw InputError("algebra file: missing 'size'/'elements'");
    for (Conn op : declared) {
        if (!A.has(op)) {
            throw InputError("algebra '" + A.name + "': signature declares '" +
                             std::string(op_token(op)) + "' but no table/const was given");
        }
    }
    if (!A.has(Conn::And) || !A.has(Conn::Or))
        throw InputError("algebra '" + A.name + "': meet and join tables are required");
    return A;
}

inline FiniteAlgebra load_algebra(const std::string& text) {
    std::istringstream in(text);
    return load_algebra(in);
}

inline void save_algebra(const FiniteAlgebra& A, std::ostream& out) {
    out << "algebra " << A.name << "\n";
    out << "size " << A.size() << "\n";
    out << "elements";
    for (const auto& e : A.elems) out << ' ' << e;
    out << "\nsignature";
    for (Conn c : {Conn::And, Conn::Or, Conn::Fuse, Conn::Imp, Conn::WImp, Conn::Not,
                   Conn::Zero, Conn::One})
        if (A.has(c)) out << ' ' << op_token(c);
    out << "\n";
    if (A.zero) out << "const 0 " << A.elems[*A.zero] << "\n";
    if (A.one) out << "const 1 " << A.elems[*A.one] << "\n";
    for (Conn c : {Conn::And, Conn::Or, Conn::Fuse, Conn::Imp, Conn::WImp}) {
        if (!A.has(c)) continue;
        out << "op " << op_token(c) << "\n";
        for (int i = 0; i < A.size(); ++i) {
            for (int j = 0; j < A.size(); ++j)
                out << (j ? " " : "") << A.elems[A.app(c, i, j)];
            out << "\n";
        }
    }
    if (A.has(Conn::Not)) {
        out << "op ~\n";
        for (int i = 0; i < A.size(); ++i)
            out << (i ? " " : "") << A.elems[A.app1(Conn::Not, i)];
        out << "\n";
    }
}

inline std::string to_text(const FiniteAlgebra& A) {
    std::ostringstream out;
    save_algebra(A, out);
    return out.str();
}

// ---------------------------------------------------------------------------
// Reports

struct CheckResult {
    std::string law;
    bool passed = true;
    std::vector<int> witness;  // offending element tuple (indices), when any
    std::string detail;
};

struct ValidationReport {
    std::string algebra;
    std::string what;
    std::vector<CheckResult> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.passed; });
    }
    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
    std::string summary(const FiniteAlgebra& A) const {
        std::ostringstream out;
        out << A.name << " as " << what << ": " << (ok() ? "pass" : "FAIL") << "\n";
        for (const auto& c : checks) {
            out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.law;
            if (!c.passed && !c.witness.empty()) {
                out << "  witness (";
                for (std::size_t i = 0; i < c.witness.size(); ++i)
                    out << (i ? ", " : "") << A.elem_name(c.witness[i]);
                out << ")";
            }
            if (!c.detail.empty()) out << "  -- " << c.detail;
            out << "\n";
        }
        return out.str();
    }
};

// ---------------------------------------------------------------------------
// Element-tuple laws (named, re-evaluable)

/// A named law quantified over `arity` carrier elements. `holds` must be pure;
/// the first falsifying tuple in lexicographic order becomes the witness.
struct Law {
    std::string name;
    int arity;
    std::function<bool(const FiniteAlgebra&, const std::vector<int>&)> holds;
};

inline CheckResult sweep_law(const FiniteAlgebra& A, const Law& law) {
    CheckResult res{law.name, true, {}, {}};
    int n = A.size();
    std::vector<int> t(law.arity, 0);
    while (true) {
        if (!law.holds(A, t)) {
            res.passed = false;
            res.witness = t;
            return res;
        }
        int k = law.arity - 1;
        while (k >= 0 && t[k] == n - 1) t[k--] = 0;
        if (k < 0) break;
        ++t[k];
    }
    return res;
}

/// The registry of structural laws, addressable by name so that a recorded
/// witness can always be re-evaluated against the law it falsified.
inline const std::vector<Law>& law_registry() {
    static const std::vector<Law> laws = {
        {"meet commutativity", 2, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.meet(t[0], t[1]) == A.meet(t[1], t[0]); }},
        {"join commutativity", 2, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.join(t[0], t[1]) == A.join(t[1], t[0]); }},
        {"meet associativity", 3, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.meet(A.meet(t[0], t[1]), t[2]) == A.meet(t[0], A.meet(t[1], t[2])); }},
        {"join associativity", 3, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.join(A.join(t[0], t[1]), t[2]) == A.join(t[0], A.join(t[1], t[2])); }},
        {"meet idempotence", 1, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.meet(t[0], t[0]) == t[0]; }},
        {"join idempotence", 1, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.join(t[0], t[0]) == t[0]; }},
        {"absorption x&(x|y)=x", 2, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.meet(t[0], A.join(t[0], t[1])) == t[0]; }},
        {"absorption x|(x&y)=x", 2, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.join(t[0], A.meet(t[0], t[1])) == t[0]; }},
        {"join agrees with meet-induced order", 2,
         [](const FiniteAlgebra& A, const std::vector<int>& t) {
             int j = A.join(t[0], t[1]);
             if (!A.leq(t[0], j) || !A.leq(t[1], j)) return false;
             for (int u = 0; u < A.size(); ++u)
                 if (A.leq(t[0], u) && A.leq(t[1], u) && !A.leq(j, u)) return false;
             return true;
         }},
        {"0 is the least element", 1, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.leq(*A.zero, t[0]); }},
        {"1 is the greatest element", 1, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.leq(t[0], *A.one); }},
        {"fuse commutativity", 2, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.fuse_of(t[0], t[1]) == A.fuse_of(t[1], t[0]); }},
        {"fuse associativity", 3, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.fuse_of(A.fuse_of(t[0], t[1]), t[2]) ==
                    A.fuse_of(t[0], A.fuse_of(t[1], t[2])); }},
        {"1 is the fuse unit", 1, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.fuse_of(*A.one, t[0]) == t[0] && A.fuse_of(t[0], *A.one) == t[0]; }},
        {"residuation x*y<=z iff y<=x=>z", 3,
         [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.leq(A.fuse_of(t[0], t[1]), t[2]) ==
                    A.leq(t[1], A.app(Conn::Imp, t[0], t[2]));
         }},
        {"double negation", 1, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.neg_of(A.neg_of(t[0])) == t[0]; }},
        {"contraposition x=>y = ~y=>~x", 2,
         [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.app(Conn::Imp, t[0], t[1]) ==
                    A.app(Conn::Imp, A.neg_of(t[1]), A.neg_of(t[0]));
         }},
        {"negation table matches x=>0", 1,
         [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.app1(Conn::Not, t[0]) == A.app(Conn::Imp, t[0], *A.zero);
         }},
        {"x^2 <= x^3", 1, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             int x2 = A.fuse_of(t[0], t[0]);
             return A.leq(x2, A.fuse_of(t[0], x2)); }},
        {"x^2 = x^3", 1, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             int x2 = A.fuse_of(t[0], t[0]);
             return x2 == A.fuse_of(t[0], x2); }},
        {"meet distributes over join", 3,
         [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.meet(t[0], A.join(t[1], t[2])) ==
                    A.join(A.meet(t[0], t[1]), A.meet(t[0], t[2]));
         }},
        {"divisibility x*(x=>y) = x&y", 2,
         [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.fuse_of(t[0], A.app(Conn::Imp, t[0], t[1])) == A.meet(t[0], t[1]);
         }},
        {"De Morgan ~(x&y) = ~x|~y", 2,
         [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.neg_of(A.meet(t[0], t[1])) == A.join(A.neg_of(t[0]), A.neg_of(t[1]));
         }},
        {"De Morgan ~(x|y) = ~x&~y", 2,
         [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.neg_of(A.join(t[0], t[1])) == A.meet(A.neg_of(t[0]), A.neg_of(t[1]));
         }},
        {"x->x = y->y", 2, [](const FiniteAlgebra& A, const std::vector<int>& t) {
             return A.app(Conn::WImp, t[0], t[0]) == A.app(Conn::WImp, t[1], t[1]); }},
    };
    return laws;
}

inline const Law& law_by_name(const std::string& name) {
    for (const auto& l : law_registry())
        if (l.name == name) return l;
    throw std::invalid_argument("unknown law '" + name + "'");
}

namespace detail {

inline void require_ops(const FiniteAlgebra& A, std::initializer_list<Conn> ops,
                        const char* what) {
    for (Conn c : ops)
        if (!A.has(c))
            throw std::invalid_argument(std::string(what) + " requires operation '" +
                                        op_token(c) + "' on algebra '" + A.name + "'");
}

inline void run_laws(const FiniteAlgebra& A, ValidationReport& rep,
                     std::initializer_list<const char*> names) {
    for (const char* n : names) rep.checks.push_back(sweep_law(A, law_by_name(n)));
}

} // namespace detail

// ---------------------------------------------------------------------------
// Structural validators

inline ValidationReport check_lattice(const FiniteAlgebra& A) {
    detail::require_ops(A, {Conn::And, Conn::Or}, "lattice check");
    ValidationReport rep{A.name, "lattice", {}};
    detail::run_laws(A, rep,
                     {"meet commutativity", "join commutativity", "meet associativity",
                      "join associativity", "meet idempotence", "join idempotence",
                      "absorption x&(x|y)=x", "absorption x|(x&y)=x",
                      "join agrees with meet-induced order"});
    if (A.zero) rep.checks.push_back(sweep_law(A, law_by_name("0 is the least element")));
    if (A.one) rep.checks.push_back(sweep_law(A, law_by_name("1 is the greatest element")));
    return rep;
}

/// Commutative integral residuated lattice over <&, |, *, =>, 1>.
inline ValidationReport check_cirl(const FiniteAlgebra& A) {
    detail::require_ops(A, {Conn::And, Conn::Or, Conn::Imp, Conn::One}, "CIRL check");
    if (!A.has(Conn::Fuse) && !(A.has(Conn::Not) || (A.has(Conn::Imp) && A.zero)))
        detail::require_ops(A, {Conn::Fuse}, "CIRL check");
    ValidationReport rep = check_lattice(A);
    rep.what = "CIRL";
    detail::run_laws(A, rep,
                     {"1 is the greatest element", "fuse commutativity", "fuse associativity",
                      "1 is the fuse unit", "residuation x*y<=z iff y<=x=>z"});
    return rep;
}

/// Bounded CIRL (adds 0 as least element).
inline ValidationReport check_cibrl(const FiniteAlgebra& A) {
    detail::require_ops(A, {Conn::Zero}, "CIBRL check");
    ValidationReport rep = check_cirl(A);
    rep.what = "CIBRL";
    rep.checks.push_back(sweep_law(A, law_by_name("0 is the least element")));
    return rep;
}

/// ~~x = x together with contraposition, where ~x falls back to x => 0.
inline ValidationReport check_involutive(const FiniteAlgebra& A) {
    detail::require_ops(A, {Conn::Imp, Conn::Zero}, "involutivity check");
    ValidationReport rep{A.name, "involutive", {}};
    detail::run_laws(A, rep, {"double negation", "contraposition x=>y = ~y=>~x"});
    if (A.has(Conn::Not))
        rep.checks.push_back(sweep_law(A, law_by_name("negation table matches x=>0")));
    return rep;
}

inline ValidationReport check_three_potent(const FiniteAlgebra& A) {
    if (!A.has(Conn::Fuse))
        detail::require_ops(A, {Conn::Imp}, "three-potency check");
    ValidationReport rep{A.name, "three-potent", {}};
    detail::run_laws(A, rep, {"x^2 <= x^3", "x^2 = x^3"});
    return rep;
}

inline ValidationReport check_distributive(const FiniteAlgebra& A) {
    detail::require_ops(A, {Conn::And, Conn::Or}, "distributivity check");
    ValidationReport rep{A.name, "distributive lattice", {}};
    detail::run_laws(A, rep, {"meet distributes over join"});
    return rep;
}

/// Three-potent involutive CIBRL. Accepts either table language; fusion and
/// negation are derived from each other when absent. Algebras without the
/// constants get a definable-unit precheck (x => x must be constant).
inline ValidationReport validate_s_algebra(const FiniteAlgebra& A) {
    ValidationReport rep{A.name, "S-algebra", {}};
    Conn arrow = A.has(Conn::Imp) ? Conn::Imp : Conn::WImp;
    if (!A.has(arrow)) {
        detail::require_ops(A, {Conn::Imp}, "S-algebra check");
    }
    FiniteAlgebra B = A;
    if (arrow == Conn::WImp) {
        B.tables[Conn::Imp] = B.tables.at(Conn::WImp);
        B.tables.erase(Conn::WImp);
    }
    if (!B.one) {
        int u = B.app(Conn::Imp, 0, 0);
        for (int x = 0; x < B.size(); ++x) {
            if (B.app(Conn::Imp, x, x) != u) {
                rep.checks.push_back({"unit is definable (x=>x constant)", false,
                                      {0, x}, "x=>x takes more than one value"});
                return rep;
            }
        }
        rep.checks.push_back({"unit is definable (x=>x constant)", true, {}, {}});
        B.one = u;
    }
    if (!B.zero) {
        if (!B.has(Conn::Not)) {
            rep.checks.push_back({"bottom is definable (~1)", false, {},
                                  "no negation to define 0 := ~1"});
            return rep;
        }
        B.zero = B.app1(Conn::Not, *B.one);
    }
    ValidationReport inner = check_cibrl(B);
    for (auto& c : inner.checks) rep.checks.push_back(std::move(c));
    for (auto& c : check_involutive(B).checks) rep.checks.push_back(std::move(c));
    for (auto& c : check_three_potent(B).checks) rep.checks.push_back(std::move(c));
    return rep;
}

/// CIBRL + involutive + divisibility (the MV-algebra axioms in this setting).
inline ValidationReport check_mv(const FiniteAlgebra& A) {
    ValidationReport rep = check_cibrl(A);
    rep.what = "MV-algebra";
    for (auto& c : check_involutive(A).checks) rep.checks.push_back(std::move(c));
    rep.checks.push_back(sweep_law(A, law_by_name("divisibility x*(x=>y) = x&y")));
    return rep;
}

// ---------------------------------------------------------------------------
// Congruences and quotients

/// Partition of the carrier, stored as element -> block id with blocks
/// numbered in order of their least member.
struct Congruence {
    std::vector<int> block_of;

    int num_blocks() const {
        return block_of.empty() ? 0 : 1 + *std::max_element(block_of.begin(), block_of.end());
    }
    bool same(int a, int b) const { return block_of[a] == block_of[b]; }

    static Congruence from_classes(int n, const std::function<bool(int, int)>& related) {
        Congruence c;
        c.block_of.assign(n, -1);
        int next = 0;
        for (int i = 0; i < n; ++i) {
            if (c.block_of[i] != -1) continue;
            c.block_of[i] = next;
            for (int j = i + 1; j < n; ++j)
                if (c.block_of[j] == -1 && related(i, j)) c.block_of[j] = next;
            ++next;
        }
        return c;
    }

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out(num_blocks());
        for (int i = 0; i < static_cast<int>(block_of.size()); ++i)
            out[block_of[i]].push_back(i);
        return out;
    }
};

/// theta1 <= theta2 as relations: every theta1-related pair is theta2-related.
inline bool congruence_leq(const Congruence& t1, const Congruence& t2) {
    int n = static_cast<int>(t1.block_of.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (t1.same(i, j) && !t2.same(i, j)) return false;
    return true;
}

/// Is the partition compatible with every operation of A's signature?
inline bool is_congruence(const FiniteAlgebra& A, const Congruence& theta) {
    int n = A.size();
    for (const auto& [op, _] : A.tables) {
        if (op == Conn::Not) {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (theta.same(x, y) && !theta.same(A.app1(op, x), A.app1(op, y)))
                        return false;
            continue;
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (!theta.same(x, y)) continue;
                for (int z = 0; z < n; ++z) {
                    if (!theta.same(A.app(op, x, z), A.app(op, y, z))) return false;
                    if (!theta.same(A.app(op, z, x), A.app(op, z, y))) return false;
                }
            }
    }
    return true;
}

/// Smallest congruence of A identifying a and b: union-find closure under all
/// operations of the signature until fixpoint.
inline Congruence principal_congruence(const FiniteAlgebra& A, int a, int b) {
    int n = A.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) {
        x = find(x); y = find(y);
        if (x == y) return false;
        if (x > y) std::swap(x, y);
        parent[y] = x;
        return true;
    };
    unite(a, b);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [op, _] : A.tables) {
            if (op == Conn::Not) {
                for (int x = 0; x < n; ++x)
                    for (int y = x + 1; y < n; ++y)
                        if (find(x) == find(y) && unite(A.app1(op, x), A.app1(op, y)))
                            changed = true;
                continue;
            }
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    if (find(x) != find(y)) continue;
                    for (int z = 0; z < n; ++z) {
                        if (unite(A.app(op, x, z), A.app(op, y, z))) changed = true;
                        if (unite(A.app(op, z, x), A.app(op, z, y))) changed = true;
                    }
                }
        }
    }
    return Congruence::from_classes(n, [&](int x, int y) { return find(x) == find(y); });
}

/// Keeps only the listed operations (constants preserved when `keep_consts`).
inline FiniteAlgebra reduct(const FiniteAlgebra& A, std::initializer_list<Conn> ops,
                            bool keep_consts = false) {
    FiniteAlgebra B;
    B.name = A.name;
    B.elems = A.elems;
    for (Conn c : ops)
        if (A.has(c)) B.tables[c] = A.tables.at(c);
    if (keep_consts) {
        B.zero = A.zero;
        B.one = A.one;
    }
    return B;
}

/// Quotient algebra on the blocks of theta; throws InputError when theta is
/// not compatible with A's operations. Block names are the least members.
inline FiniteAlgebra quotient(const FiniteAlgebra& A, const Congruence& theta) {
    if (!is_congruence(A, theta))
        throw InputError("relation is not a congruence of algebra '" + A.name + "'");
    int m = theta.num_blocks();
    auto blocks = theta.blocks();
    FiniteAlgebra Q;
    Q.name = A.name + "/~";
    for (int b = 0; b < m; ++b) Q.elems.push_back(A.elem_name(blocks[b][0]));
    for (const auto& [op, _] : A.tables) {
        if (op == Conn::Not) {
            std::vector<int> table(m);
            for (int b = 0; b < m; ++b) table[b] = theta.block_of[A.app1(op, blocks[b][0])];
            Q.tables[op] = std::move(table);
            continue;
        }
        std::vector<int> table(static_cast<std::size_t>(m) * m);
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                table[static_cast<std::size_t>(x) * m + y] =
                    theta.block_of[A.app(op, blocks[x][0], blocks[y][0])];
        Q.tables[op] = std::move(table);
    }
    if (A.zero) Q.zero = theta.block_of[*A.zero];
    if (A.one) Q.one = theta.block_of[*A.one];
    return Q;
}

// ---------------------------------------------------------------------------
// Isomorphism (brute force; constants must map to constants)

inline bool is_isomorphic(const FiniteAlgebra& A, const FiniteAlgebra& B) {
    if (A.size() != B.size()) return false;
    if (A.signature().ops != B.signature().ops) return false;
    int n = A.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (A.zero && perm[*A.zero] != *B.zero) continue;
        if (A.one && perm[*A.one] != *B.one) continue;
        bool ok = true;
        for (const auto& [op, _] : A.tables) {
            if (op == Conn::Not) {
                for (int x = 0; x < n && ok; ++x)
                    if (perm[A.app1(op, x)] != B.app1(op, perm[x])) ok = false;
                continue;
            }
            for (int x = 0; x < n && ok; ++x)
                for (int y = 0; y < n && ok; ++y)
                    if (perm[A.app(op, x, y)] != B.app(op, perm[x], perm[y])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---------------------------------------------------------------------------
// N4 / N3 lattices

namespace detail {

/// a ~< b iff (a->b)->(a->b) = a->b.
inline bool n4_precedes(const FiniteAlgebra& A, int a, int b) {
    int ab = A.app(Conn::WImp, a, b);
    return A.app(Conn::WImp, ab, ab) == ab;
}

/// Lattice laws + residuation of the pair (&, ->). A finite lattice with this
/// residuation automatically has x->x as top.
inline bool implicative_lattice_ok(const FiniteAlgebra& A, std::string& why,
                                   std::vector<int>& witness) {
    ValidationReport lat = check_lattice(A);
    if (!lat.ok()) {
        const CheckResult* f = lat.first_failure();
        why = "lattice axiom failed: " + f->law;
        witness = f->witness;
        return false;
    }
    for (int x = 0; x < A.size(); ++x)
        for (int y = 0; y < A.size(); ++y)
            for (int z = 0; z < A.size(); ++z)
                if (A.leq(A.meet(x, y), z) != A.leq(y, A.app(Conn::WImp, x, z))) {
                    why = "residuation of (&, ->) fails";
                    witness = {x, y, z};
                    return false;
                }
    return true;
}

} // namespace detail

/// De Morgan lattice + the preorder/quotient/normality conditions defining
/// N4-lattices over <&, |, ->, ~>.
inline ValidationReport check_n4_lattice(const FiniteAlgebra& A) {
    detail::require_ops(A, {Conn::And, Conn::Or, Conn::WImp, Conn::Not}, "N4-lattice check");
    ValidationReport rep = check_lattice(A);
    rep.what = "N4-lattice";
    detail::run_laws(A, rep,
                     {"meet distributes over join", "double negation",
                      "De Morgan ~(x&y) = ~x|~y", "De Morgan ~(x|y) = ~x&~y"});

    int n = A.size();
    std::vector<std::vector<bool>> pre(n, std::vector<bool>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) pre[a][b] = detail::n4_precedes(A, a, b);

    CheckResult refl{"weak order reflexivity", true, {}, {}};
    for (int a = 0; a < n && refl.passed; ++a)
        if (!pre[a][a]) { refl.passed = false; refl.witness = {a}; }
    rep.checks.push_back(refl);

    CheckResult trans{"weak order transitivity", true, {}, {}};
    for (int a = 0; a < n && trans.passed; ++a)
        for (int b = 0; b < n && trans.passed; ++b)
            for (int c = 0; c < n && trans.passed; ++c)
                if (pre[a][b] && pre[b][c] && !pre[a][c]) {
                    trans.passed = false;
                    trans.witness = {a, b, c};
                }
    rep.checks.push_back(trans);

    bool preorder_ok = refl.passed && trans.passed;
    Congruence equiv;
    bool compat_ok = false;
    if (preorder_ok) {
        equiv = Congruence::from_classes(
            n, [&](int x, int y) { return pre[x][y] && pre[y][x]; });
        FiniteAlgebra R = reduct(A, {Conn::And, Conn::Or, Conn::WImp});
        compat_ok = is_congruence(R, equiv);
        CheckResult compat{"~< equivalence compatible with &,|,->", compat_ok, {}, {}};
        rep.checks.push_back(compat);
        if (compat_ok) {
            FiniteAlgebra Q = quotient(R, equiv);
            std::string why;
            std::vector<int> w;
            bool impl = detail::implicative_lattice_ok(Q, why, w);
            rep.checks.push_back({"quotient by ~< is an implicative lattice", impl, {}, why});
        } else {
            rep.checks.push_back({"quotient by ~< is an implicative lattice", false, {},
                                  "not evaluated: equivalence is not compatible"});
        }
    } else {
        rep.checks.push_back({"~< equivalence compatible with &,|,->", false, {},
                              "not evaluated: weak order is not a preorder"});
        rep.checks.push_back({"quotient by ~< is an implicative lattice", false, {},
                              "not evaluated: weak order is not a preorder"});
    }

    CheckResult norm{"~(x->y) equivalent to x&~y", true, {}, {}};
    if (preorder_ok) {
        for (int a = 0; a < n && norm.passed; ++a)
            for (int b = 0; b < n && norm.passed; ++b) {
                int l = A.neg_of(A.app(Conn::WImp, a, b));
                int r = A.meet(a, A.neg_of(b));
                if (!(pre[l][r] && pre[r][l])) {
                    norm.passed = false;
                    norm.witness = {a, b};
                }
            }
    } else {
        norm.passed = false;
        norm.detail = "not evaluated: weak order is not a preorder";
    }
    rep.checks.push_back(norm);

    CheckResult ord{"x<=y iff x~<y and ~y~<~x", true, {}, {}};
    for (int a = 0; a < n && ord.passed; ++a)
        for (int b = 0; b < n && ord.passed; ++b) {
            bool lhs = A.leq(a, b);
            bool rhs = pre[a][b] && pre[A.neg_of(b)][A.neg_of(a)];
            if (lhs != rhs) {
                ord.passed = false;
                ord.witness = {a, b};
            }
        }
    rep.checks.push_back(ord);
    return rep;
}

/// N4-lattice + x->x constant (integrality).
inline ValidationReport check_n3_lattice(const FiniteAlgebra& A) {
    ValidationReport rep = check_n4_lattice(A);
    rep.what = "N3-lattice";
    rep.checks.push_back(sweep_law(A, law_by_name("x->x = y->y")));
    return rep;
}

// ---------------------------------------------------------------------------
// Congruence orderability

/// For all pairs: theta(b,1) <= theta(a,1) and theta(a,0) <= theta(b,0)
/// together imply a <= b.
inline ValidationReport check_congruence_orderability(const FiniteAlgebra& A) {
    detail::require_ops(A, {Conn::And, Conn::Or, Conn::Imp, Conn::Zero, Conn::One},
                        "congruence-orderability check");
    ValidationReport rep{A.name, "congruence-orderable", {}};
    int n = A.size();
    std::vector<Congruence> to_one, to_zero;
    to_one.reserve(n);
    to_zero.reserve(n);
    for (int x = 0; x < n; ++x) {
        to_one.push_back(principal_congruence(A, x, *A.one));
        to_zero.push_back(principal_congruence(A, x, *A.zero));
    }
    CheckResult c{"congruence comparisons imply the lattice order", true, {}, {}};
    for (int a = 0; a < n && c.passed; ++a)
        for (int b = 0; b < n && c.passed; ++b) {
            if (congruence_leq(to_one[b], to_one[a]) && congruence_leq(to_zero[a], to_zero[b]) &&
                !A.leq(a, b)) {
                c.passed = false;
                c.witness = {a, b};
            }
        }
    rep.checks.push_back(c);
    return rep;
}

} // namespace nelson
