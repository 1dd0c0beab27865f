// Translations between the presentations: the equation/quasiequation images
// E(phi) and Q(R) of axioms and rules, the two term-equivalence maps between
// the <=>,~> and <*,=>> table languages, the doubling construction A -> A*,
// the q -> q* quasiequation transform, and the strong/weak implication terms.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nelson/algebra.hpp"
#include "nelson/calculus.hpp"
#include "nelson/formula.hpp"
#include "nelson/semantics.hpp"

namespace nelson {

// ---------------------------------------------------------------------------
// Algebraization images

/// E(phi) := phi = 1.
inline Equation e_of(const Formula& phi) { return {phi, Formula::one()}; }

/// Q(R): premises and conclusion mapped through E. Schema variables are
/// renamed x, y, z, w in order of first appearance; Gamma variables keep
/// their g1, g2, ... names.
inline QuasiEquation q_of(const RuleSpec& r) {
    Subst rename;
    const std::array<const char*, 4> pool{"x", "y", "z", "w"};
    std::size_t used = 0;
    auto visit = [&](const Formula& f, auto&& self) -> void {
        switch (f.kind()) {
            case Conn::Var: {
                const std::string& v = f.var_name();
                bool gamma_var = v.size() >= 2 && v[0] == 'g' &&
                                 v.find_first_not_of("0123456789", 1) == std::string::npos;
                if (gamma_var) return;
                if (!rename.count(v)) rename.emplace(v, Formula::var(pool[used++]));
                return;
            }
            case Conn::Zero:
            case Conn::One: return;
            case Conn::Not: self(f.left(), self); return;
            default:
                self(f.left(), self);
                self(f.right(), self);
        }
    };
    for (const auto& p : r.premises) visit(p, visit);
    visit(r.conclusion, visit);
    QuasiEquation q;
    for (const auto& p : r.premises) q.premises.push_back(e_of(substitute(p, rename)));
    q.conclusion = e_of(substitute(r.conclusion, rename));
    return q;
}

// ---------------------------------------------------------------------------
// Term-equivalence maps between the two table languages

/// <&,|,=>,~,0,1>  ->  <&,|,*,=>,0,1> with x*y := ~(x => ~y) computed
/// pointwise.
inline FiniteAlgebra to_s_prime(const FiniteAlgebra& A) {
    detail::require_ops(A, {Conn::And, Conn::Or, Conn::Imp, Conn::Not}, "translation to *-form");
    FiniteAlgebra B = A;
    int n = A.size();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            table[static_cast<std::size_t>(x) * n + y] =
                A.app1(Conn::Not, A.app(Conn::Imp, x, A.app1(Conn::Not, y)));
    B.tables[Conn::Fuse] = std::move(table);
    B.tables.erase(Conn::Not);
    return B;
}

/// <&,|,*,=>,0,1>  ->  <&,|,=>,~,0,1> with ~x := x => 0 computed pointwise.
inline FiniteAlgebra to_s(const FiniteAlgebra& A) {
    detail::require_ops(A, {Conn::And, Conn::Or, Conn::Imp, Conn::Zero}, "translation to ~-form");
    FiniteAlgebra B = A;
    int n = A.size();
    std::vector<int> table(n);
    for (int x = 0; x < n; ++x) table[x] = A.app(Conn::Imp, x, *A.zero);
    B.tables[Conn::Not] = std::move(table);
    B.tables.erase(Conn::Fuse);
    return B;
}

// ---------------------------------------------------------------------------
// Doubling construction

/// Extends a CIRL A to an involutive bounded algebra on A plus a disjoint
/// lower copy (names prefixed n_): the lower copy is reverse-ordered and lies
/// below all of A; fusion and implication extend by
///   a * n_b = n_(a=>b)    n_a * n_b = n_1
///   a => n_b = n_(a*b)    n_a => n_b = b => a    n_a => b = 1
/// with 0 := n_1. Meets and joins are recomputed from the extended order and
/// the result is revalidated before being returned.
inline FiniteAlgebra double_algebra(const FiniteAlgebra& A) {
    {
        ValidationReport pre = check_cirl(A);
        if (!pre.ok())
            throw InputError("doubling requires a CIRL; '" + A.name + "' fails: " +
                             pre.first_failure()->law);
    }
    int n = A.size();
    int N = 2 * n;
    FiniteAlgebra B;
    B.name = A.name + "*";
    // lower copy in reverse carrier order, then the upper copy
    for (int i = n - 1; i >= 0; --i) B.elems.push_back("n_" + A.elems[i]);
    for (int i = 0; i < n; ++i) B.elems.push_back(A.elems[i]);
    auto up = [&](int a) { return n + a; };        // A index -> B index
    auto dn = [&](int a) { return n - 1 - a; };    // A index -> index of n_a
    auto is_up = [&](int x) { return x >= n; };
    auto ui = [&](int x) { return x - n; };
    auto di = [&](int x) { return n - 1 - x; };

    auto leq = [&](int x, int y) {
        if (!is_up(x) && is_up(y)) return true;
        if (is_up(x) && !is_up(y)) return false;
        if (is_up(x)) return A.leq(ui(x), ui(y));
        return A.leq(di(y), di(x));
    };
    std::vector<int> meet(static_cast<std::size_t>(N) * N), join(meet.size());
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            int m = -1, j = -1;
            for (int z = 0; z < N; ++z) {
                if (leq(z, x) && leq(z, y) && (m == -1 || leq(m, z))) m = z;
                if (leq(x, z) && leq(y, z) && (j == -1 || leq(z, j))) j = z;
            }
            meet[static_cast<std::size_t>(x) * N + y] = m;
            join[static_cast<std::size_t>(x) * N + y] = j;
        }
    B.tables[Conn::And] = std::move(meet);
    B.tables[Conn::Or] = std::move(join);

    std::vector<int> fuse(static_cast<std::size_t>(N) * N), impl(fuse.size());
    auto afuse = [&](int a, int b) { return A.fuse_of(a, b); };
    auto aimp = [&](int a, int b) { return A.app(Conn::Imp, a, b); };
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            int f, i;
            if (is_up(x) && is_up(y)) {
                f = up(afuse(ui(x), ui(y)));
                i = up(aimp(ui(x), ui(y)));
            } else if (is_up(x) && !is_up(y)) {
                f = dn(aimp(ui(x), di(y)));   // a * n_b = n_(a=>b)
                i = dn(afuse(ui(x), di(y)));  // a => n_b = n_(a*b)
            } else if (!is_up(x) && is_up(y)) {
                f = dn(aimp(ui(y), di(x)));   // n_a * b = b * n_a
                i = up(*A.one);               // n_a => b = 1
            } else {
                f = dn(*A.one);               // n_a * n_b = n_1
                i = up(aimp(di(y), di(x)));   // n_a => n_b = b => a
            }
            fuse[static_cast<std::size_t>(x) * N + y] = f;
            impl[static_cast<std::size_t>(x) * N + y] = i;
        }
    B.tables[Conn::Fuse] = std::move(fuse);
    B.tables[Conn::Imp] = std::move(impl);
    B.zero = dn(*A.one);
    B.one = up(*A.one);

    ValidationReport post = check_cibrl(B);
    if (post.ok())
        for (auto& c : check_involutive(B).checks)
            if (!c.passed) post.checks.push_back(c);
    if (!post.ok())
        throw InputError("doubling produced an invalid algebra from '" + A.name +
                         "': " + post.first_failure()->law);
    return B;
}

// ---------------------------------------------------------------------------
// q -> q* quasiequation transform

struct StarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StarredQuasiEquation {
    QuasiEquation starred;                  // premise form, always present
    std::optional<Equation> equation_form;  // only when q had no premises
};

namespace detail {

inline void reject_outside_rl(const Formula& f) {
    switch (f.kind()) {
        case Conn::Zero: throw StarError("q* transform: constant 0 outside the RL language");
        case Conn::Not:  throw StarError("q* transform: negation outside the RL language");
        case Conn::WImp: throw StarError("q* transform: weak implication outside the RL language");
        case Conn::Var:
        case Conn::One:  return;
        default:
            reject_outside_rl(f.left());
            reject_outside_rl(f.right());
    }
}

} // namespace detail

/// q*(x1..xk): adds the premise x | ~x = x for every variable of q. When q is
/// a plain equation, the equivalent equation form (substitute x |-> x | ~x)
/// is emitted as well.
inline StarredQuasiEquation star_quasieq(const QuasiEquation& q) {
    std::set<std::string> names;
    for (const auto& e : q.premises) {
        detail::reject_outside_rl(e.lhs);
        detail::reject_outside_rl(e.rhs);
        collect_vars(e.lhs, names);
        collect_vars(e.rhs, names);
    }
    detail::reject_outside_rl(q.conclusion.lhs);
    detail::reject_outside_rl(q.conclusion.rhs);
    collect_vars(q.conclusion.lhs, names);
    collect_vars(q.conclusion.rhs, names);

    StarredQuasiEquation out;
    out.starred.premises = q.premises;
    for (const auto& v : names) {
        Formula x = Formula::var(v);
        out.starred.premises.push_back({lor(x, neg(x)), x});
    }
    out.starred.conclusion = q.conclusion;
    if (q.premises.empty()) {
        Subst sigma;
        for (const auto& v : names) {
            Formula x = Formula::var(v);
            sigma.emplace(v, lor(x, neg(x)));
        }
        out.equation_form = Equation{substitute(q.conclusion.lhs, sigma),
                                     substitute(q.conclusion.rhs, sigma)};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Strong / weak implication terms

/// x => y := (x -> y) & (~y -> ~x), pointwise over <&,|,->,~> tables.
inline FiniteAlgebra n4_strong_implication(const FiniteAlgebra& A) {
    detail::require_ops(A, {Conn::And, Conn::WImp, Conn::Not}, "strong implication");
    FiniteAlgebra B = A;
    int n = A.size();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            table[static_cast<std::size_t>(x) * n + y] =
                A.meet(A.app(Conn::WImp, x, y),
                       A.app(Conn::WImp, A.app1(Conn::Not, y), A.app1(Conn::Not, x)));
    B.tables[Conn::Imp] = std::move(table);
    return B;
}

/// The weak-implication recovery term over a strong implication:
///   x -> y := (x & (T => T)) => T   where   T := (x & (y => y)) => y.
/// The exact bracketing is pinned by the four-element De Morgan witness:
/// recovering its printed weak-implication table is a unit-test oracle.
inline FiniteAlgebra spinks_weak_implication(const FiniteAlgebra& A) {
    detail::require_ops(A, {Conn::And, Conn::Imp}, "weak implication");
    FiniteAlgebra B = A;
    int n = A.size();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int t = A.app(Conn::Imp, A.meet(x, A.app(Conn::Imp, y, y)), y);
            int w = A.app(Conn::Imp, A.meet(x, A.app(Conn::Imp, t, t)), t);
            table[static_cast<std::size_t>(x) * n + y] = w;
        }
    B.tables[Conn::WImp] = std::move(table);
    return B;
}

/// The short weak-implication form x -> y := x => (x => y).
inline FiniteAlgebra n3_weak_implication(const FiniteAlgebra& A) {
    detail::require_ops(A, {Conn::Imp}, "weak implication");
    FiniteAlgebra B = A;
    int n = A.size();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            table[static_cast<std::size_t>(x) * n + y] =
                A.app(Conn::Imp, x, A.app(Conn::Imp, x, y));
    B.tables[Conn::WImp] = std::move(table);
    return B;
}

/// Restriction of an S-language algebra to <&,|,->,~> with -> given by the
/// chosen weak-implication table (already present on the input).
inline FiniteAlgebra n4_reduct(const FiniteAlgebra& A) {
    detail::require_ops(A, {Conn::And, Conn::Or, Conn::WImp, Conn::Not}, "N4 reduct");
    return reduct(A, {Conn::And, Conn::Or, Conn::WImp, Conn::Not});
}

// ---------------------------------------------------------------------------
// Quasiequational S-algebra validator (the algebraization route)

/// Checks the translated presentation directly: E(A1)..E(A5), x=>x = 1, Q(R)
/// for every rule schema at Gamma lengths 0..2, and the congruence
/// quasiequation. Signature <&,|,=>,~,0,1>.
inline ValidationReport validate_s_algebra_via_quasiequations(const FiniteAlgebra& A,
                                                              int max_gamma = 2) {
    detail::require_ops(A, {Conn::And, Conn::Or, Conn::Imp, Conn::Not, Conn::Zero, Conn::One},
                        "quasiequational S-algebra check");
    ValidationReport rep{A.name, "S-algebra (quasiequational presentation)", {}};
    auto record = [&](const std::string& label, const SatResult& r) {
        CheckResult c{label, r.satisfied, {}, {}};
        if (!r.satisfied && r.witness) {
            std::string d;
            for (const auto& [v, e] : *r.witness)
                d += (d.empty() ? "" : ", ") + v + "=" + A.elem_name(e);
            c.detail = "falsified at " + d;
        }
        rep.checks.push_back(std::move(c));
    };
    for (const auto& ax : axioms(CalculusId::S_NELSON))
        record("E(" + ax.id + ")", satisfies_equation(A, e_of(ax.pattern)));
    record("x=>x = 1", satisfies_equation(A, {imp(Formula::var("x"), Formula::var("x")),
                                              Formula::one()}));
    for (const auto& info : rule_infos()) {
        if (info.id == RuleSchemaId::MP) continue;  // an instance of E at Gamma = []
        int top = info.uses_gamma ? max_gamma : 0;
        for (int g = 0; g <= top; ++g) {
            QuasiEquation q = q_of(rule_schema(info.id, g));
            std::string label = std::string("Q(") + info.name + ")";
            if (info.uses_gamma) label += " |Gamma|=" + std::to_string(g);
            record(label, satisfies_quasiequation(A, q));
        }
    }
    QuasiEquation cong;
    Formula x = Formula::var("x"), y = Formula::var("y");
    cong.premises = {e_of(imp(x, y)), e_of(imp(y, x))};
    cong.conclusion = {x, y};
    record("x=>y = 1, y=>x = 1 |- x = y", satisfies_quasiequation(A, cong));
    return rep;
}

} // namespace nelson
