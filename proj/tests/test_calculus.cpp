#include <catch2/catch_amalgamated.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "nelson/calculus.hpp"
#include "nelson/mutation.hpp"
#include "nelson/catalog.hpp"
#include "nelson/proof_corpus.hpp"
#include "nelson/semantics.hpp"

using namespace nelson;

TEST_CASE("axiom matching") {
    // no identity axiom among S1..S15
    CHECK(!match_axiom(CalculusId::S_PRIME, parse("(q & r) => (q & r)")).has_value());

    auto a3 = match_axiom(CalculusId::S_NELSON, parse("~p => (p => 0)"));
    REQUIRE(a3.has_value());
    CHECK(a3->first == "A3");
    CHECK(a3->second.at("phi") == Formula::var("p"));

    auto s13 = match_axiom(CalculusId::S_PRIME, parse("0 => x"));
    REQUIRE(s13.has_value());
    CHECK(s13->first == "S13");
    CHECK(s13->second.at("phi") == Formula::var("x"));

    // the constant axiom of the Gamma calculus is the defined 1
    CHECK(match_axiom(CalculusId::S_NELSON, parse("~0")).has_value());

    auto n13 = match_axiom(CalculusId::N3, parse("~p -> (p -> q)"));
    REQUIRE(n13.has_value());
    CHECK(n13->first == "N13");
    CHECK(!match_axiom(CalculusId::N4, parse("~p -> (p -> q)")).has_value());
}

TEST_CASE("rule matching with inferred contexts") {
    Formula g1 = Formula::var("a"), p = Formula::var("p"), q = Formula::var("q");
    auto e = match_rule(CalculusId::S_NELSON, RuleSchemaId::E,
                        {imp(g1, p), imp(p, q)}, imp(g1, q));
    REQUIRE(e.has_value());
    CHECK(e->gamma == GammaList{g1});
    CHECK(e->sigma.at("phi") == p);
    CHECK(e->sigma.at("gam") == q);

    auto c = match_rule(CalculusId::S_NELSON, RuleSchemaId::C,
                        {parse("p => (p => (p => q))")}, parse("p => (p => q)"));
    REQUIRE(c.has_value());
    CHECK(c->gamma.empty());

    auto mp = match_rule(CalculusId::S_PRIME, RuleSchemaId::MP,
                         {parse("p"), parse("p => q")}, parse("q"));
    REQUIRE(mp.has_value());
    CHECK(mp->gamma.empty());

    // wrong arity, wrong shapes
    CHECK(!match_rule(CalculusId::S_PRIME, RuleSchemaId::MP, {parse("p")}, parse("q")));
    CHECK(!match_rule(CalculusId::S_NELSON, RuleSchemaId::E,
                      {parse("p => q"), parse("r => s")}, parse("p => s")));
    // the finite calculi admit modus ponens only
    CHECK(!match_rule(CalculusId::S_PRIME, RuleSchemaId::E,
                      {parse("p"), parse("p => q")}, parse("q")));
    // squared-arrow rule |l2
    auto l2 = match_rule(CalculusId::S_NELSON, RuleSchemaId::OrL2,
                         {parse("p => (p => s)"), parse("q => (q => s)")},
                         parse("(p | q) => ((p | q) => s)"));
    REQUIRE(l2.has_value());
}

TEST_CASE("modus ponens is the empty-context instance of rule E") {
    std::mt19937 rng(4242);
    auto rand_formula = [&](auto&& self, int depth) -> Formula {
        static const char* names[] = {"p", "q", "r"};
        if (depth == 0 || rng() % 3 == 0) return Formula::var(names[rng() % 3]);
        switch (rng() % 4) {
            case 0: return neg(self(self, depth - 1));
            case 1: return land(self(self, depth - 1), self(self, depth - 1));
            default: return imp(self(self, depth - 1), self(self, depth - 1));
        }
    };
    for (int i = 0; i < 200; ++i) {
        Formula a = rand_formula(rand_formula, 3), b = rand_formula(rand_formula, 3);
        auto mp = match_rule(CalculusId::S_NELSON, RuleSchemaId::MP, {a, imp(a, b)}, b);
        auto e = match_rule(CalculusId::S_NELSON, RuleSchemaId::E, {a, imp(a, b)}, b);
        REQUIRE(mp.has_value());
        REQUIRE(e.has_value());
        CHECK(e->gamma.empty());
    }
}

TEST_CASE("derivation checking, three-step script") {
    Derivation d;
    d.calculus = CalculusId::S_PRIME;
    d.assumptions = {parse("p")};
    d.steps = {
        {parse("p"), ByAssumption{}},
        {parse("p => (q => p)"), ByAxiom{"S3", std::nullopt}},
        {parse("q => p"), ByRule{RuleSchemaId::MP, {1, 2}}},
    };
    CHECK(check_derivation(d).accepted);

    // mutate the final step: no rule matches any more
    d.steps[2].formula = parse("q => q");
    Verdict v = check_derivation(d);
    CHECK(!v.accepted);
    CHECK(v.step == 3);
    CHECK(v.reason == "no rule match");
    CHECK(v.to_string() == "rejected at step 3: no rule match");
}

TEST_CASE("derivation rejections carry the earliest failing step") {
    Derivation d;
    d.calculus = CalculusId::S_PRIME;
    d.steps = {
        {parse("1"), ByAxiom{"S12", std::nullopt}},
        {parse("p"), ByRule{RuleSchemaId::MP, {1, 2}}},  // bad forward reference
        {parse("q"), ByAssumption{}},
    };
    Verdict v = check_derivation(d);
    CHECK(!v.accepted);
    CHECK(v.step == 2);
    CHECK(v.reason == "bad premise index");

    d.steps[1] = {parse("p"), ByAxiom{"S1", std::nullopt}};
    v = check_derivation(d);
    CHECK(v.step == 2);
    CHECK(v.reason == "no axiom match");

    // claimed axiom id is what gets verified: S13 matches, S14 does not
    Derivation d2;
    d2.calculus = CalculusId::S_PRIME;
    d2.steps = {{parse("0 => x"), ByAxiom{"S14", std::nullopt}}};
    CHECK(!check_derivation(d2).accepted);
    d2.steps[0].just = ByAxiom{"S13", std::nullopt};
    CHECK(check_derivation(d2).accepted);

    // an explicit substitution is verified exactly
    d2.steps[0].just = ByAxiom{"S13", Subst{{"phi", parse("x")}}};
    CHECK(check_derivation(d2).accepted);
    d2.steps[0].just = ByAxiom{"S13", Subst{{"phi", parse("y")}}};
    CHECK(!check_derivation(d2).accepted);
}

TEST_CASE("N3 derivations use the weak arrow") {
    Derivation d;
    d.calculus = CalculusId::N3;
    d.assumptions = {parse("~p"), parse("p")};
    d.steps = {
        {parse("~p"), ByAssumption{}},
        {parse("~p -> (p -> q)"), ByAxiom{"N13", std::nullopt}},
        {parse("p -> q"), ByRule{RuleSchemaId::MP, {1, 2}}},
        {parse("p"), ByAssumption{}},
        {parse("q"), ByRule{RuleSchemaId::MP, {4, 3}}},
    };
    CHECK(check_derivation(d).accepted);
    d.calculus = CalculusId::N4;  // N13 is not available there
    CHECK(!check_derivation(d).accepted);

    // formulas outside the weak language are rejected, not mangled
    Derivation d3;
    d3.calculus = CalculusId::N4;
    d3.steps = {{parse("p => p"), ByAxiom{"N1", std::nullopt}}};
    Verdict v = check_derivation(d3);
    CHECK(!v.accepted);
    CHECK(v.reason == "formula outside calculus language");
}

TEST_CASE("proof script parsing") {
    Derivation d = parse_proof_script(std::string(
        "# a comment\ncalculus S_PRIME\nassume p\nstep 1: p by assumption\n"
        "step 2: p => (q => p) by axiom S3\nstep 3: q => p by rule MP from 1,2\n"));
    CHECK(d.calculus == CalculusId::S_PRIME);
    CHECK(d.assumptions.size() == 1);
    CHECK(d.steps.size() == 3);
    CHECK(check_derivation(d).accepted);

    CHECK_THROWS_AS(parse_proof_script(std::string("step 1: p by assumption\n")), InputError);
    CHECK_THROWS_AS(parse_proof_script(std::string("calculus S_PRIME\nstep 2: p by assumption\n")),
                    InputError);
    CHECK_THROWS_AS(parse_proof_script(std::string("calculus X\nstep 1: p by assumption\n")),
                    InputError);
    CHECK_THROWS_AS(
        parse_proof_script(std::string("calculus S_PRIME\nstep 1: p by wizardry\n")),
        InputError);
}

// ---------------------------------------------------------------------------
// The bundled corpus: positive checks plus exhaustive single-token mutation

TEST_CASE("every corpus script is accepted") {
    for (const auto& script : proof_corpus()) {
        INFO(script.name);
        Derivation d = parse_proof_script(std::string(script.text));
        Verdict v = check_derivation(d);
        INFO(v.to_string());
        CHECK(v.accepted);
    }
}

TEST_CASE("the corpus exercises every rule, contexts 0..2 for Gamma rules") {
    std::set<std::pair<RuleSchemaId, int>> seen;
    for (const auto& script : proof_corpus()) {
        Derivation d = parse_proof_script(std::string(script.text));
        Signature sig = calculus_signature(d.calculus);
        std::vector<Formula> steps;
        for (const auto& st : d.steps) {
            Formula f = expand_defined(st.formula, sig);
            if (const auto* rj = std::get_if<ByRule>(&st.just)) {
                std::vector<Formula> prem;
                for (int ix : rj->premises) prem.push_back(steps[ix - 1]);
                auto m = match_rule(d.calculus, rj->rule, prem, f);
                REQUIRE(m.has_value());
                seen.insert({rj->rule, static_cast<int>(m->gamma.size())});
            }
            steps.push_back(f);
        }
    }
    for (const auto& info : rule_infos()) {
        INFO(info.name);
        if (info.id == RuleSchemaId::MP) {
            CHECK(seen.count({info.id, 0}));
        } else if (info.uses_gamma) {
            CHECK(seen.count({info.id, 0}));
            CHECK(seen.count({info.id, 1}));
            CHECK(seen.count({info.id, 2}));
        } else {
            CHECK(seen.count({info.id, 0}));
        }
    }
}

TEST_CASE("every single-token mutation of the corpus is rejected") {
    long long mutations = 0;
    for (const auto& script : proof_corpus()) {
        auto sweep = sweep_mutations(script.name, script.text);
        mutations += sweep.generated;
        for (const auto& d : sweep.accepted_descriptions) {
            INFO(d);
            CHECK(false);
        }
        CHECK(sweep.accepted == 0);
    }
    // sanity: the sweep actually produced a substantial battery
    CHECK(mutations > 500);
}

TEST_CASE("soundness hook: assumption-free derivations evaluate to 1") {
    for (const auto& script : proof_corpus()) {
        Derivation d = parse_proof_script(std::string(script.text));
        if (!d.assumptions.empty()) continue;
        REQUIRE(check_derivation(d).accepted);
        Formula conclusion = d.steps.back().formula;
        for (const char* key : {"A8", "L3", "L3star", "B2", "T1"}) {
            FiniteAlgebra A = catalog_get(key);
            INFO(script.name << " on " << key);
            CHECK(satisfies_equation(A, {conclusion, Formula::one()}).satisfied);
        }
    }
}

TEST_CASE("the shipped proof files mirror the bundled corpus") {
    for (const auto& script : proof_corpus()) {
        std::ifstream in(std::string(NELSON_DATA_DIR) + "/proofs/" + script.name + ".proof");
        REQUIRE(in.good());
        std::ostringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str() == script.text);
    }
}

TEST_CASE("randomly generated modus-ponens chains are accepted") {
    std::mt19937 rng(314159);
    auto rand_formula = [&](auto&& self, int depth) -> Formula {
        static const char* names[] = {"p", "q", "r", "s"};
        if (depth == 0 || rng() % 3 == 0) return Formula::var(names[rng() % 4]);
        switch (rng() % 5) {
            case 0: return Formula::zero();
            case 1: return land(self(self, depth - 1), self(self, depth - 1));
            case 2: return lor(self(self, depth - 1), self(self, depth - 1));
            case 3: return fuse(self(self, depth - 1), self(self, depth - 1));
            default: return imp(self(self, depth - 1), self(self, depth - 1));
        }
    };
    const auto& schemata = axioms(CalculusId::S_PRIME);
    for (int round = 0; round < 100; ++round) {
        Derivation d;
        d.calculus = CalculusId::S_PRIME;
        // seed with random axiom instances
        for (int k = 0; k < 4; ++k) {
            const AxiomSchema& ax = schemata[rng() % schemata.size()];
            Subst sigma;
            for (const auto& v : vars(ax.pattern))
                sigma.emplace(v, rand_formula(rand_formula, 2));
            d.steps.push_back({substitute(ax.pattern, sigma), ByAxiom{ax.id, sigma}});
        }
        // close under a few modus-ponens steps where shapes allow it
        for (int k = 0; k < 6; ++k) {
            int i = static_cast<int>(rng() % d.steps.size());
            const Formula& maj = d.steps[i].formula;
            if (maj.kind() != Conn::Imp) continue;
            // find (or insert) the antecedent as a minor premise
            int minor = -1;
            for (std::size_t m = 0; m < d.steps.size(); ++m)
                if (d.steps[m].formula == maj.left()) minor = static_cast<int>(m);
            if (minor < 0) continue;
            d.steps.push_back(
                {maj.right(), ByRule{RuleSchemaId::MP, {minor + 1, i + 1}}});
        }
        Verdict v = check_derivation(d);
        INFO("round " << round << ": " << v.to_string());
        CHECK(v.accepted);
    }
}
