#include <catch2/catch_amalgamated.hpp>

#include "nelson/bridge.hpp"
#include "nelson/catalog.hpp"
#include "nelson/search.hpp"

using namespace nelson;

TEST_CASE("defining equation and rule translation") {
    Equation e = e_of(parse("0 => q"));
    CHECK(e.lhs == parse("0 => q"));
    CHECK(e.rhs == Formula::one());

    // rule E with empty context is modus ponens: x = 1, x => y = 1 entails y = 1
    QuasiEquation mp = q_of(rule_schema(RuleSchemaId::E, 0));
    REQUIRE(mp.premises.size() == 2);
    CHECK(render(mp) == "x = 1, x => y = 1 |- y = 1");

    QuasiEquation c = q_of(rule_schema(RuleSchemaId::C, 0));
    CHECK(render(c) == "x => x => x => y = 1 |- x => x => y = 1");

    QuasiEquation ir = q_of(rule_schema(RuleSchemaId::ImpR, 0));
    CHECK(render(ir) == "x = 1 |- y => x = 1");

    QuasiEquation e2 = q_of(rule_schema(RuleSchemaId::E, 2));
    CHECK(render(e2) == "g1 => g2 => x = 1, x => y = 1 |- g1 => g2 => y = 1");
}

TEST_CASE("term-equivalence maps between the table languages") {
    FiniteAlgebra a8 = catalog_get("A8");
    FiniteAlgebra a8p = to_s_prime(a8);
    CHECK(a8p.has(Conn::Fuse));
    CHECK(!a8p.has(Conn::Not));
    int c = a8p.elem("c");
    CHECK(a8p.app(Conn::Fuse, c, c) == a8p.elem("nb"));  // c*c = ~(c => ~c) = ~b

    // round trip restores the table exactly
    FiniteAlgebra back = to_s(a8p);
    CHECK(back.tables == a8.tables);
    CHECK(back.elems == a8.elems);

    // L3 given via =>,~ recovers the printed fusion table
    FiniteAlgebra l3 = catalog_get("L3");
    FiniteAlgebra l3p = to_s_prime(reduct(l3, {Conn::And, Conn::Or, Conn::Imp, Conn::Not}, true));
    CHECK(l3p.tables.at(Conn::Fuse) == l3.tables.at(Conn::Fuse));
    // ~h = h => 0 = h
    CHECK(to_s(l3p).app1(Conn::Not, l3.elem("h")) == l3.elem("h"));

    FiniteAlgebra b2 = catalog_get("B2");
    FiniteAlgebra b2p = to_s_prime(b2);
    CHECK(b2p.tables.at(Conn::Fuse) == b2.tables.at(Conn::And));
}

TEST_CASE("doubling L3 reproduces the printed six-element tables") {
    FiniteAlgebra l3 = catalog_get("L3");
    FiniteAlgebra doubled = double_algebra(l3);
    FiniteAlgebra expected = catalog_get("L3star");
    CHECK(doubled.name == "L3*");
    CHECK(doubled.elems == expected.elems);
    CHECK(doubled.tables == expected.tables);
    CHECK(doubled.zero == expected.zero);
    CHECK(doubled.one == expected.one);

    // published spot checks: ~h => ~1 = h and 0 => ~0 = ~0
    CHECK(doubled.app(Conn::Imp, doubled.elem("n_h"), doubled.elem("n_1")) ==
          doubled.elem("h"));
    CHECK(doubled.app(Conn::Imp, doubled.elem("0"), doubled.elem("n_0")) ==
          doubled.elem("n_0"));
}

TEST_CASE("doubling the trivial algebra gives the two-element Boolean algebra") {
    FiniteAlgebra t1 = catalog_get("T1");
    FiniteAlgebra d = double_algebra(reduct(t1, {Conn::And, Conn::Or, Conn::Fuse, Conn::Imp},
                                            true));
    CHECK(d.size() == 2);
    CHECK(is_isomorphic(to_s(d), reduct(catalog_get("B2"),
                                        {Conn::And, Conn::Or, Conn::Imp, Conn::Not}, true)));
    CHECK(check_mv(d).ok());
}

TEST_CASE("doubling a two-element implicative lattice gives a four-element N3 chain") {
    SearchSpec spec;
    spec.size = 2;
    spec.cls = AlgebraClass::Implicative;
    auto models = collect_models(spec);
    REQUIRE(models.size() == 1);
    FiniteAlgebra d = double_algebra(models[0]);
    CHECK(d.size() == 4);
    CHECK(validate_s_algebra(d).ok());
    FiniteAlgebra weak = n3_weak_implication(to_s(d));
    CHECK(check_n3_lattice(n4_reduct(weak)).ok());
}

TEST_CASE("doubling rejects non-CIRL input") {
    CHECK_THROWS_AS(double_algebra(catalog_get("A4")), std::exception);
}

TEST_CASE("q -> q* transform") {
    QuasiEquation contraction = parse_quasiequation("x * x = x");
    StarredQuasiEquation st = star_quasieq(contraction);
    REQUIRE(st.starred.premises.size() == 1);
    CHECK(render(st.starred.premises[0]) == "x | ~x = x");
    CHECK(render(st.starred.conclusion) == "x * x = x");
    REQUIRE(st.equation_form.has_value());
    CHECK(render(*st.equation_form) == "(x | ~x) * (x | ~x) = x | ~x");

    QuasiEquation quasi = parse_quasiequation("x => y = 1 |- x * y = x");
    StarredQuasiEquation st2 = star_quasieq(quasi);
    CHECK(st2.starred.premises.size() == 3);  // original premise + one per variable
    CHECK(!st2.equation_form.has_value());

    CHECK_THROWS_AS(star_quasieq(parse_quasiequation("~x = x")), StarError);
    CHECK_THROWS_AS(star_quasieq(parse_quasiequation("x & 0 = 0")), StarError);
}

TEST_CASE("transfer instance: three-potency passes from L3 to its double") {
    FiniteAlgebra l3 = catalog_get("L3");
    QuasiEquation q = parse_quasiequation("x * x = x * (x * x)");
    StarredQuasiEquation st = star_quasieq(q);
    CHECK(satisfies_quasiequation(l3, q).satisfied);
    CHECK(satisfies_quasiequation(double_algebra(l3), st.starred).satisfied);
    REQUIRE(st.equation_form.has_value());
    CHECK(satisfies_equation(double_algebra(l3), *st.equation_form).satisfied);
}

TEST_CASE("strong implication on the four-element De Morgan witness") {
    FiniteAlgebra a4 = catalog_get("A4");
    FiniteAlgebra with_strong = n4_strong_implication(a4);
    int b = a4.elem("b"), n = a4.elem("n"), one = a4.elem("1");
    CHECK(with_strong.app(Conn::Imp, b, n) == n);   // (b->n) & (~n->~b) = n & 1
    CHECK(with_strong.app(Conn::Imp, one, one) == one);
    CHECK(with_strong.app(Conn::Imp, one, b) == a4.elem("0"));

    // Boolean: strong and weak implication coincide
    FiniteAlgebra b2 = catalog_get("B2");
    CHECK(n4_strong_implication(b2).tables.at(Conn::Imp) == b2.tables.at(Conn::WImp));
}

TEST_CASE("weak-implication recovery term round-trips on the De Morgan witness") {
    FiniteAlgebra a4 = catalog_get("A4");
    FiniteAlgebra strong = n4_strong_implication(a4);
    FiniteAlgebra recovered = spinks_weak_implication(strong);
    CHECK(recovered.tables.at(Conn::WImp) == a4.tables.at(Conn::WImp));

    FiniteAlgebra b2 = catalog_get("B2");
    CHECK(spinks_weak_implication(b2).tables.at(Conn::WImp) == b2.tables.at(Conn::WImp));
}

TEST_CASE("on doubled implicative lattices the short weak implication agrees") {
    for (int n = 1; n <= 3; ++n) {
        SearchSpec spec;
        spec.size = n;
        spec.cls = AlgebraClass::Implicative;
        for (const auto& il : collect_models(spec)) {
            FiniteAlgebra d = to_s(double_algebra(il));
            FiniteAlgebra full = spinks_weak_implication(d);
            FiniteAlgebra shortform = n3_weak_implication(d);
            INFO(il.name);
            CHECK(full.tables.at(Conn::WImp) == shortform.tables.at(Conn::WImp));
        }
    }
}

TEST_CASE("doubling embeds the original algebra as the upper copy") {
    for (int n = 1; n <= 3; ++n) {
        SearchSpec spec;
        spec.size = n;
        spec.cls = AlgebraClass::Cirl;
        for (const auto& A : collect_models(spec)) {
            FiniteAlgebra D = double_algebra(A);
            int base = A.size();
            for (int x = 0; x < base; ++x)
                for (int y = 0; y < base; ++y) {
                    for (Conn op : {Conn::And, Conn::Or, Conn::Fuse, Conn::Imp}) {
                        INFO(A.name << " " << op_token(op));
                        CHECK(D.app(op, base + x, base + y) == base + A.app(op, x, y));
                    }
                }
            // the upper copy is exactly the solution set of x = x | ~x
            FiniteAlgebra Ds = to_s(D);
            for (int x = 0; x < D.size(); ++x) {
                bool upper = x >= base;
                bool solves = D.join(x, Ds.app1(Conn::Not, x)) == x;
                CHECK(upper == solves);
            }
            // squares in the lower copy collapse to the new bottom
            for (int x = 0; x < base; ++x) {
                int nx = base - 1 - x;  // lower-copy index
                int sq = D.app(Conn::Fuse, nx, nx);
                CHECK(sq == *D.zero);
                CHECK(D.app(Conn::Fuse, nx, sq) == *D.zero);
            }
        }
    }
}

TEST_CASE("quasiequational validation agrees with the structural route") {
    FiniteAlgebra a8 = catalog_get("A8");
    ValidationReport direct = validate_s_algebra(a8);
    ValidationReport viaq = validate_s_algebra_via_quasiequations(a8);
    CHECK(direct.ok());
    CHECK(viaq.ok());

    // Goedel 3-chain with ~x := x => 0 fails the contraposition equation E(A5)
    FiniteAlgebra g3 = load_algebra(std::string(R"(algebra G3n
size 3
elements 0 m 1
signature & | => ~ 0 1
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
op =>
1 1 1
0 1 1
0 m 1
op ~
1 0 0
)"));
    ValidationReport rep = validate_s_algebra_via_quasiequations(g3);
    CHECK(!rep.ok());
    bool a5_failed = false;
    for (const auto& c : rep.checks)
        if (c.law == "E(A5)" && !c.passed) a5_failed = true;
    CHECK(a5_failed);

    CHECK(validate_s_algebra_via_quasiequations(to_s(catalog_get("B2"))).ok());
}

TEST_CASE("the weak view of the eight-element witness is not an N4-lattice") {
    FiniteAlgebra a8 = catalog_get("A8");
    FiniteAlgebra weak = n4_reduct(n3_weak_implication(a8));
    ValidationReport rep = check_n4_lattice(weak);
    CHECK(!rep.ok());
    const CheckResult* f = rep.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->law == "meet distributes over join");
}
