// Bundled algebras, stored as text in the documented file format and parsed
// through the regular loader so the file path is exercised end to end.
//   A8     eight-element non-distributive witness
//   L3     three-element Lukasiewicz chain
//   L3star its double, the six-element chain counterexample
//   A4     four-element De Morgan weak-implication witness
//   B2     two-element Boolean algebra
//   T1     trivial one-element algebra
#pragma once

#include <string>
#include <vector>

#include "nelson/algebra.hpp"

namespace nelson {

struct CatalogEntry {
    std::string key;
    std::string provenance;
    const char* text;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"A8",
         "eight-element three-potent involutive bounded chain-free witness; "
         "its lattice reduct is not distributive",
         R"(algebra A8
size 8
elements 0 1 c nc nb b a na
signature & | => ~ 0 1
const 0 0
const 1 1
op &
0 0 0 0 0 0 0 0
0 1 c nc nb b a na
0 c c na nb na c na
0 nc na nc na nc nc na
0 nb nb na nb na nb na
0 b na nc na b b na
0 a c nc nb b a na
0 na na na na na na na
op |
0 1 c nc nb b a na
1 1 1 1 1 1 1 1
c 1 c a c a a c
nc 1 a nc a b a nc
nb 1 c a nb a a nb
b 1 a b a b a b
a 1 a a a a a a
na 1 c nc nb b a na
op =>
1 1 1 1 1 1 1 1
0 1 c nc nb b a na
nc 1 1 b a b 1 b
c 1 c 1 c 1 1 c
b 1 1 b 1 b 1 b
nb 1 c a c 1 1 c
na 1 c b c b 1 na
a 1 1 1 1 1 1 1
op ~
1 0 nc c b nb na a
)"},
        {"L3",
         "three-element linearly ordered MV-algebra (Lukasiewicz chain)",
         R"(algebra L3
size 3
elements 0 h 1
signature & | * => ~ 0 1
const 0 0
const 1 1
op &
0 0 0
0 h h
0 h 1
op |
0 h 1
h h 1
1 1 1
op *
0 0 0
0 0 h
0 h 1
op =>
1 1 1
h 1 1
0 h 1
op ~
1 h 0
)"},
        {"L3star",
         "double of the three-element Lukasiewicz chain: a six-element "
         "linearly ordered algebra that is distributive but not congruence-orderable",
         R"(algebra L3star
size 6
elements n_1 n_h n_0 0 h 1
signature & | * => 0 1
const 0 n_1
const 1 1
op &
n_1 n_1 n_1 n_1 n_1 n_1
n_1 n_h n_h n_h n_h n_h
n_1 n_h n_0 n_0 n_0 n_0
n_1 n_h n_0 0 0 0
n_1 n_h n_0 0 h h
n_1 n_h n_0 0 h 1
op |
n_1 n_h n_0 0 h 1
n_h n_h n_0 0 h 1
n_0 n_0 n_0 0 h 1
0 0 0 0 h 1
h h h h h 1
1 1 1 1 1 1
op *
n_1 n_1 n_1 n_1 n_1 n_1
n_1 n_1 n_1 n_1 n_1 n_h
n_1 n_1 n_1 n_1 n_h n_0
n_1 n_1 n_1 0 0 0
n_1 n_1 n_h 0 0 h
n_1 n_h n_0 0 h 1
op =>
1 1 1 1 1 1
h 1 1 1 1 1
0 h 1 1 1 1
n_0 n_0 n_0 1 1 1
n_h n_0 n_0 h 1 1
n_1 n_h n_0 0 h 1
)"},
        {"A4",
         "four-element De Morgan lattice with a weak implication whose "
         "quotient by the weak equivalence is the two-element Boolean algebra",
         R"(algebra A4
size 4
elements 0 n b 1
signature & | -> ~
op &
0 0 0 0
0 n 0 n
0 0 b b
0 n b 1
op |
0 n b 1
n n 1 1
b 1 b 1
1 1 1 1
op ->
1 1 1 1
1 1 1 1
0 n b 1
0 n b 1
op ~
1 n b 0
)"},
        {"B2",
         "two-element Boolean algebra",
         R"(algebra B2
size 2
elements 0 1
signature & | * => -> ~ 0 1
const 0 0
const 1 1
op &
0 0
0 1
op |
0 1
1 1
op *
0 0
0 1
op =>
1 1
0 1
op ->
1 1
0 1
op ~
1 0
)"},
        {"T1",
         "trivial one-element algebra",
         R"(algebra T1
size 1
elements e
signature & | * => -> ~ 0 1
const 0 e
const 1 e
op &
e
op |
e
op *
e
op =>
e
op ->
e
op ~
e
)"},
    };
    return entries;
}

inline std::vector<std::string> catalog_keys() {
    std::vector<std::string> out;
    for (const auto& e : catalog_entries()) out.push_back(e.key);
    return out;
}

inline const CatalogEntry& catalog_entry(const std::string& key) {
    for (const auto& e : catalog_entries())
        if (e.key == key) return e;
    throw InputError("unknown catalog key '" + key + "'");
}

inline FiniteAlgebra catalog_get(const std::string& key) {
    return load_algebra(std::string(catalog_entry(key).text));
}

} // namespace nelson
