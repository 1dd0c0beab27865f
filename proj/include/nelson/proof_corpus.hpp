// The bundled positive proof corpus. Every rule of the Gamma calculus is
// exercised (context lengths 0, 1 and 2 for the Gamma rules), plus modus
// ponens chains through all fifteen axioms of the finite calculus. The
// scripts are written so that each step is pinned by its justification or by
// a later consumer: the test suite checks that every single-token mutation
// of every script is rejected.
#pragma once

#include <vector>

namespace nelson {

struct ProofScript {
    const char* name;
    const char* text;
};

inline const std::vector<ProofScript>& proof_corpus() {
    static const std::vector<ProofScript> corpus = {
        {"s_cut", R"(# rule E at context lengths 0, 1, 2
calculus S_NELSON
assume p
assume p => q
assume q => r
assume p => (q => r)
assume r => s
step 1: p by assumption
step 2: p => q by assumption
step 3: q by rule E from 1,2
step 4: q => r by assumption
step 5: p => r by rule E from 2,4
step 6: p => (q => r) by assumption
step 7: r => s by assumption
step 8: p => (q => s) by rule E from 6,7
)"},
        {"s_permute_condense", R"(# rules P (contexts 0,1,2) and C
calculus S_NELSON
assume p => (q => r)
assume s => (p => (q => r))
assume s => (t => (p => (q => r)))
assume p => (p => (p => q))
step 1: p => (q => r) by assumption
step 2: q => (p => r) by rule P from 1
step 3: s => (p => (q => r)) by assumption
step 4: s => (q => (p => r)) by rule P from 3
step 5: s => (t => (p => (q => r))) by assumption
step 6: s => (t => (q => (p => r))) by rule P from 5
step 7: p => (p => (p => q)) by assumption
step 8: p => (p => q) by rule C from 7
)"},
        {"s_imp_left", R"(# rule =>l at context lengths 0, 1, 2
calculus S_NELSON
assume p
assume q => r
assume s => p
assume s => (t => p)
step 1: p by assumption
step 2: q => r by assumption
step 3: (p => q) => r by rule =>l from 1,2
step 4: s => p by assumption
step 5: s => ((p => q) => r) by rule =>l from 4,2
step 6: s => (t => p) by assumption
step 7: s => (t => ((p => q) => r)) by rule =>l from 6,2
)"},
        {"s_imp_right_meet", R"(# rules =>r and &r (contexts 0,1,2)
calculus S_NELSON
assume u
assume v
step 1: u by assumption
step 2: v by assumption
step 3: u & v by rule &r from 1,2
step 4: w => u by rule =>r from 1
step 5: w => v by rule =>r from 2
step 6: w => (u & v) by rule &r from 4,5
step 7: t => u by rule =>r from 1
step 8: s => (t => u) by rule =>r from 7
step 9: t => v by rule =>r from 2
step 10: s => (t => v) by rule =>r from 9
step 11: s => (t => (u & v)) by rule &r from 8,10
)"},
        {"s_join_rules", R"(# rules |l1, |l2 and |r1, |r2 at context lengths 0, 1, 2
calculus S_NELSON
assume p
assume p => s
assume q => s
assume p => (p => s)
assume q => (q => s)
assume w => p
assume w => (v => p)
assume (p | q) => s
assume (m | p) => s
step 1: p => s by assumption
step 2: q => s by assumption
step 3: (p | q) => s by rule |l1 from 1,2
step 4: p => (p => s) by assumption
step 5: q => (q => s) by assumption
step 6: (p | q) => ((p | q) => s) by rule |l2 from 4,5
step 7: p by assumption
step 8: p | q by rule |r1 from 7
step 9: (p | q) => s by assumption
step 10: s by rule E from 8,9
step 11: w => p by assumption
step 12: w => (p | q) by rule |r1 from 11
step 13: w => s by rule E from 12,9
step 14: w => (v => p) by assumption
step 15: w => (v => (p | q)) by rule |r1 from 14
step 16: w => (v => s) by rule E from 15,9
step 17: m | p by rule |r2 from 7
step 18: (m | p) => s by assumption
step 19: s by rule E from 17,18
step 20: w => (m | p) by rule |r2 from 11
step 21: w => s by rule E from 20,18
step 22: w => (v => (m | p)) by rule |r2 from 14
step 23: w => (v => s) by rule E from 22,18
)"},
        {"s_neg_imp_right", R"(# rule ~=>r (squared contexts) at lengths 0, 1, 2
calculus S_NELSON
assume p & ~q
assume w => (w => (p & ~q))
assume w => (w => (v => (v => (p & ~q))))
step 1: p & ~q by assumption
step 2: ~(p => q) by rule ~=>r from 1
step 3: w => (w => (p & ~q)) by assumption
step 4: w => (w => ~(p => q)) by rule ~=>r from 3
step 5: w => (w => (v => (v => (p & ~q)))) by assumption
step 6: w => (w => (v => (v => ~(p => q)))) by rule ~=>r from 5
)"},
        {"s_neg_right_rules", R"(# rules ~&r, ~|r, ~~r at context lengths 0, 1, 2
calculus S_NELSON
assume ~p | ~q
assume w => (~p | ~q)
assume w => (v => (~p | ~q))
assume ~p & ~q
assume u => (~p & ~q)
assume u => (t => (~p & ~q))
assume s
assume x => s
assume x => (y => s)
step 1: ~p | ~q by assumption
step 2: ~(p & q) by rule ~&r from 1
step 3: w => (~p | ~q) by assumption
step 4: w => ~(p & q) by rule ~&r from 3
step 5: w => (v => (~p | ~q)) by assumption
step 6: w => (v => ~(p & q)) by rule ~&r from 5
step 7: ~p & ~q by assumption
step 8: ~(p | q) by rule ~|r from 7
step 9: u => (~p & ~q) by assumption
step 10: u => ~(p | q) by rule ~|r from 9
step 11: u => (t => (~p & ~q)) by assumption
step 12: u => (t => ~(p | q)) by rule ~|r from 11
step 13: s by assumption
step 14: ~~s by rule ~~r from 13
step 15: x => s by assumption
step 16: x => ~~s by rule ~~r from 15
step 17: x => (y => s) by assumption
step 18: x => (y => ~~s) by rule ~~r from 17
)"},
        {"s_left_rules", R"(# rules ~~l, ~=>l, ~&l, ~|l, &l1, &l2
calculus S_NELSON
assume p => r
assume (p & ~q) => r
assume (~p | ~q) => r
assume (~p & ~q) => r
assume z => (p & m)
assume z => (k & p)
step 1: p => r by assumption
step 2: ~~p => r by rule ~~l from 1
step 3: (p & ~q) => r by assumption
step 4: ~(p => q) => r by rule ~=>l from 3
step 5: (~p | ~q) => r by assumption
step 6: ~(p & q) => r by rule ~&l from 5
step 7: (~p & ~q) => r by assumption
step 8: ~(p | q) => r by rule ~|l from 7
step 9: (p & m) => r by rule &l1 from 1
step 10: z => (p & m) by assumption
step 11: z => r by rule E from 10,9
step 12: (k & p) => r by rule &l2 from 1
step 13: z => (k & p) by assumption
step 14: z => r by rule E from 13,12
)"},
        {"s_axioms", R"(# the five axiom schemata of the Gamma calculus
calculus S_NELSON
assume z => 0
step 1: p => p by axiom A1
step 2: ~p => (p => 0) by axiom A3
step 3: 1 by axiom A4
step 4: (p => q) <=> (~q => ~p) by axiom A5
step 5: 0 => s by axiom A2
step 6: z => 0 by assumption
step 7: z => s by rule E from 6,5
)"},
        {"sp_identity", R"(# p => p from the finite axiomatization
calculus S_PRIME
step 1: p => (1 => p) by axiom S3
step 2: (p => (1 => p)) => (1 => (p => p)) by axiom S2
step 3: 1 => (p => p) by rule MP from 1,2
step 4: 1 by axiom S12
step 5: p => p by rule MP from 4,3
)"},
        {"sp_weakening", R"(calculus S_PRIME
assume p
step 1: p by assumption
step 2: p => (q => p) by axiom S3
step 3: q => p by rule MP from 1,2
)"},
        {"sp_fusion", R"(# fusing two assumptions with S4, then S5 on the same instance
calculus S_PRIME
assume p
assume q
step 1: p by assumption
step 2: q by assumption
step 3: p => (q => (p * q)) by axiom S4
step 4: q => (p * q) by rule MP from 1,3
step 5: p * q by rule MP from 2,4
step 6: (p => (q => (p * q))) => ((p * q) => (p * q)) by axiom S5
step 7: (p * q) => (p * q) by rule MP from 3,6
)"},
        {"sp_lattice", R"(# projection and injection axioms S6, S7, S9, S10, S11
calculus S_PRIME
assume p & q
assume r
assume p => t
assume q => t
step 1: p & q by assumption
step 2: (p & q) => q by axiom S7
step 3: q by rule MP from 1,2
step 4: (p & q) => p by axiom S6
step 5: p by rule MP from 1,4
step 6: r by assumption
step 7: r => (r | s) by axiom S9
step 8: r | s by rule MP from 6,7
step 9: r => (m | r) by axiom S10
step 10: m | r by rule MP from 6,9
step 11: p => t by assumption
step 12: q => t by assumption
step 13: (p => t) => ((q => t) => ((p | q) => t)) by axiom S11
step 14: (q => t) => ((p | q) => t) by rule MP from 11,13
step 15: (p | q) => t by rule MP from 12,14
)"},
        {"sp_meet_intro", R"(calculus S_PRIME
assume p => q
assume p => r
step 1: p => q by assumption
step 2: p => r by assumption
step 3: (p => q) => ((p => r) => (p => (q & r))) by axiom S8
step 4: (p => r) => (p => (q & r)) by rule MP from 1,3
step 5: p => (q & r) by rule MP from 2,4
)"},
        {"sp_bounds", R"(# S13, S14, S15
calculus S_PRIME
assume (p => 0) => 0
assume p => (p => (p => q))
assume 0
step 1: 0 by assumption
step 2: 0 => p by axiom S13
step 3: p by rule MP from 1,2
step 4: (p => 0) => 0 by assumption
step 5: ((p => 0) => 0) => p by axiom S14
step 6: p by rule MP from 4,5
step 7: p => (p => (p => q)) by assumption
step 8: (p => (p => (p => q))) => (p => (p => q)) by axiom S15
step 9: p => (p => q) by rule MP from 7,8
)"},
        {"sp_suffixing", R"(calculus S_PRIME
assume p => q
assume q => r
step 1: p => q by assumption
step 2: q => r by assumption
step 3: (p => q) => ((q => r) => (p => r)) by axiom S1
step 4: (q => r) => (p => r) by rule MP from 1,3
step 5: p => r by rule MP from 2,4
)"},
    };
    return corpus;
}

} // namespace nelson
