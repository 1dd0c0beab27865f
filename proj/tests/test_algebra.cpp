#include <catch2/catch_amalgamated.hpp>

#include "nelson/algebra.hpp"
#include "nelson/bridge.hpp"
#include "nelson/catalog.hpp"

using namespace nelson;

namespace {

// Goedel 3-chain: meet-fusion, relative pseudocomplement implication.
FiniteAlgebra godel3() {
    return load_algebra(std::string(R"(algebra G3
size 3
elements 0 m 1
signature & | * => 0 1
const 0 0
const 1 1
op &
0 0 0
0 m m
0 m 1
op |
0 m 1
m m 1
1 1 1
op *
0 0 0
0 m m
0 m 1
op =>
1 1 1
0 1 1
0 m 1
)"));
}

// Four-element MV chain (three-potency fails)
FiniteAlgebra lukasiewicz4() {
    return load_algebra(std::string(R"(algebra L4
size 4
elements 0 a b 1
signature & | * => 0 1
const 0 0
const 1 1
op &
0 0 0 0
0 a a a
0 a b b
0 a b 1
op |
0 a b 1
a a b 1
b b b 1
1 1 1 1
op *
0 0 0 0
0 0 0 a
0 0 a b
0 a b 1
op =>
1 1 1 1
b 1 1 1
a b 1 1
0 a b 1
)"));
}

} // namespace

TEST_CASE("file format round trip through the loader") {
    for (const char* key : {"A8", "L3", "L3star", "A4", "B2", "T1"}) {
        FiniteAlgebra A = catalog_get(key);
        FiniteAlgebra B = load_algebra(to_text(A));
        CHECK(B.name == A.name);
        CHECK(B.elems == A.elems);
        CHECK(B.tables == A.tables);
        CHECK(B.zero == A.zero);
        CHECK(B.one == A.one);
    }
}

TEST_CASE("loader rejects malformed input") {
    CHECK_THROWS_AS(load_algebra(std::string("algebra X\nsize 2\nelements a\n")), InputError);
    CHECK_THROWS_AS(load_algebra(std::string("algebra X\nsize 1\nelements a\nop &\nb\n")),
                    InputError);
    CHECK_THROWS_AS(load_algebra(std::string("algebra X\nsize 1\nelements a\nop ?\na\n")),
                    InputError);
    CHECK_THROWS_AS(load_algebra(std::string("algebra X\nsize 2\nelements a a\n")), InputError);
    // signature promises an op that never gets a table
    CHECK_THROWS_AS(load_algebra(std::string(
                        "algebra X\nsize 1\nelements a\nsignature & | =>\nop &\na\nop |\na\n")),
                    InputError);
}

TEST_CASE("lattice check and the induced order") {
    FiniteAlgebra a8 = catalog_get("A8");
    CHECK(check_lattice(a8).ok());
    CHECK(check_lattice(catalog_get("B2")).ok());

    // the induced order matches the diagram: nb <= c <= a <= 1
    int nb = a8.elem("nb"), c = a8.elem("c"), a = a8.elem("a"), one = a8.elem("1");
    CHECK(a8.leq(nb, c));
    CHECK(a8.leq(c, a));
    CHECK(a8.leq(a, one));
    CHECK(!a8.leq(c, a8.elem("b")));

    // corrupt one meet cell: fails with that witness
    FiniteAlgebra bad = a8;
    bad.tables[Conn::And][static_cast<std::size_t>(c) * 8 + a8.elem("b")] = one;
    ValidationReport rep = check_lattice(bad);
    CHECK(!rep.ok());
    const CheckResult* f = rep.first_failure();
    REQUIRE(f != nullptr);
    REQUIRE(f->witness.size() >= 2);
    CHECK(f->witness[0] == c);
    CHECK(f->witness[1] == a8.elem("b"));
}

TEST_CASE("residuated lattice checks") {
    CHECK(check_cirl(godel3()).ok());
    CHECK(check_cibrl(catalog_get("L3")).ok());
    CHECK(check_cibrl(catalog_get("L3star")).ok());
}

TEST_CASE("involutivity") {
    FiniteAlgebra l3 = catalog_get("L3");
    CHECK(check_involutive(l3).ok());
    CHECK(check_involutive(catalog_get("B2")).ok());

    ValidationReport rep = check_involutive(godel3());
    CHECK(!rep.ok());
    const CheckResult* f = rep.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->law == "double negation");
    REQUIRE(f->witness.size() == 1);
    CHECK(godel3().elem_name(f->witness[0]) == "m");
}

TEST_CASE("three-potency") {
    CHECK(check_three_potent(catalog_get("L3")).ok());
    CHECK(check_three_potent(catalog_get("A8")).ok());
    ValidationReport rep = check_three_potent(lukasiewicz4());
    CHECK(!rep.ok());
}

TEST_CASE("s-algebra validation") {
    CHECK(validate_s_algebra(catalog_get("A8")).ok());
    CHECK(validate_s_algebra(catalog_get("L3star")).ok());
    CHECK(validate_s_algebra(catalog_get("L3")).ok());
    CHECK(validate_s_algebra(catalog_get("B2")).ok());
    CHECK(validate_s_algebra(catalog_get("T1")).ok());
    CHECK(!validate_s_algebra(lukasiewicz4()).ok());

    // the four-element De Morgan witness has no definable unit: x->x varies
    ValidationReport rep = validate_s_algebra(catalog_get("A4"));
    CHECK(!rep.ok());
    REQUIRE(!rep.checks.empty());
    CHECK(rep.checks.front().law == "unit is definable (x=>x constant)");
    CHECK(!rep.checks.front().passed);
}

TEST_CASE("mv check") {
    CHECK(check_mv(catalog_get("L3")).ok());
    CHECK(check_mv(catalog_get("B2")).ok());
    CHECK(check_mv(lukasiewicz4()).ok());
    ValidationReport rep = check_mv(catalog_get("L3star"));
    CHECK(!rep.ok());
    const CheckResult* f = rep.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->law == "divisibility x*(x=>y) = x&y");
    // first failing pair in carrier order: (0, n_h)
    FiniteAlgebra ls = catalog_get("L3star");
    REQUIRE(f->witness.size() == 2);
    CHECK(ls.elem_name(f->witness[0]) == "0");
    CHECK(ls.elem_name(f->witness[1]) == "n_h");
}

TEST_CASE("distributivity") {
    FiniteAlgebra a8 = catalog_get("A8");
    ValidationReport rep = check_distributive(a8);
    CHECK(!rep.ok());
    const CheckResult* f = rep.first_failure();
    REQUIRE(f != nullptr);
    REQUIRE(f->witness.size() == 3);
    CHECK(a8.elem_name(f->witness[0]) == "c");
    CHECK(a8.elem_name(f->witness[1]) == "nc");
    CHECK(a8.elem_name(f->witness[2]) == "nb");

    CHECK(check_distributive(catalog_get("L3star")).ok());
    CHECK(check_distributive(catalog_get("A4")).ok());
}

TEST_CASE("witness tuples re-evaluate to violations") {
    std::vector<std::pair<FiniteAlgebra, ValidationReport>> reports;
    FiniteAlgebra g3 = godel3();
    reports.emplace_back(g3, check_involutive(g3));
    FiniteAlgebra a8 = catalog_get("A8");
    reports.emplace_back(a8, check_distributive(a8));
    FiniteAlgebra l4 = lukasiewicz4();
    reports.emplace_back(l4, check_three_potent(l4));
    FiniteAlgebra ls = catalog_get("L3star");
    reports.emplace_back(ls, check_mv(ls));
    for (const auto& [A, rep] : reports) {
        for (const auto& c : rep.checks) {
            if (c.passed || c.witness.empty()) continue;
            const Law& law = law_by_name(c.law);
            CHECK(!law.holds(A, c.witness));
        }
    }
}

TEST_CASE("n4 and n3 lattice checks") {
    FiniteAlgebra a4 = catalog_get("A4");
    CHECK(check_n4_lattice(a4).ok());
    ValidationReport n3 = check_n3_lattice(a4);
    CHECK(!n3.ok());
    const CheckResult* f = n3.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->law == "x->x = y->y");

    CHECK(check_n4_lattice(catalog_get("B2")).ok());
    CHECK(check_n3_lattice(catalog_get("B2")).ok());
}

TEST_CASE("principal congruences") {
    FiniteAlgebra b2 = catalog_get("B2");
    Congruence id = principal_congruence(b2, 0, 0);
    CHECK(id.num_blocks() == 2);
    Congruence total = principal_congruence(b2, *b2.zero, *b2.one);
    CHECK(total.num_blocks() == 1);

    // L3 is simple: identifying h with 1 collapses everything
    FiniteAlgebra l3 = catalog_get("L3");
    Congruence c = principal_congruence(l3, l3.elem("h"), l3.elem("1"));
    CHECK(c.num_blocks() == 1);

    CHECK(is_congruence(l3, c));
    CHECK(congruence_leq(principal_congruence(l3, 0, 0), c));
    CHECK(!congruence_leq(c, principal_congruence(l3, 0, 0)));
}

TEST_CASE("quotients") {
    FiniteAlgebra l3 = catalog_get("L3");
    Congruence id = principal_congruence(l3, 0, 0);
    FiniteAlgebra q = quotient(l3, id);
    CHECK(is_isomorphic(q, l3));

    Congruence total = principal_congruence(l3, l3.elem("h"), l3.elem("1"));
    CHECK(quotient(l3, total).size() == 1);

    // an incompatible partition is rejected
    Congruence bad;
    bad.block_of = {0, 0, 1};  // {0,h},{1} is not a congruence of L3
    CHECK(!is_congruence(l3, bad));
    CHECK_THROWS_AS(quotient(l3, bad), InputError);
}

TEST_CASE("congruence orderability") {
    CHECK(check_congruence_orderability(catalog_get("L3")).ok());
    CHECK(check_congruence_orderability(catalog_get("B2")).ok());

    FiniteAlgebra a8 = catalog_get("A8");
    ValidationReport rep = check_congruence_orderability(a8);
    CHECK(!rep.ok());
    const CheckResult* f = rep.first_failure();
    REQUIRE(f != nullptr);
    REQUIRE(f->witness.size() == 2);
    // first violating pair in carrier order (independently computed): (c, nb)
    CHECK(a8.elem_name(f->witness[0]) == "c");
    CHECK(a8.elem_name(f->witness[1]) == "nb");
}

TEST_CASE("isomorphism is detected up to renaming, constants fixed") {
    FiniteAlgebra l3 = catalog_get("L3");
    FiniteAlgebra renamed = l3;
    renamed.elems = {"bot", "mid", "top"};
    CHECK(is_isomorphic(l3, renamed));
    CHECK(!is_isomorphic(l3, catalog_get("B2")));
    CHECK(!is_isomorphic(l3, godel3()));
}

TEST_CASE("property suite of validated S-algebras") {
    for (const char* key : {"A8", "L3", "L3star", "B2", "T1"}) {
        FiniteAlgebra A = catalog_get(key);
        FiniteAlgebra B = A.has(Conn::Fuse) ? A : to_s_prime(A);
        if (!B.has(Conn::Not)) B.tables[Conn::Not] = to_s(B).tables.at(Conn::Not);
        int n = B.size();
        auto neg = [&](int x) { return B.app1(Conn::Not, x); };
        auto impl = [&](int x, int y) { return B.app(Conn::Imp, x, y); };
        auto fus = [&](int x, int y) { return B.app(Conn::Fuse, x, y); };
        for (int x = 0; x < n; ++x) {
            INFO(key);
            CHECK(neg(neg(x)) == x);
            CHECK(impl(x, *B.zero) == neg(x));
            int x2 = fus(x, x);
            CHECK(B.leq(x2, fus(x, x2)));
            for (int y = 0; y < n; ++y) {
                CHECK(impl(x, y) == impl(neg(y), neg(x)));
                int j2 = fus(B.join(x, y), B.join(x, y));
                CHECK(B.leq(j2, B.join(fus(x, x), fus(y, y))));
                for (int z = 0; z < n; ++z)
                    CHECK(B.leq(fus(x, y), z) == B.leq(y, impl(x, z)));
            }
        }
    }
}
