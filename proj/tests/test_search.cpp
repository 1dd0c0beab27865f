#include <catch2/catch_amalgamated.hpp>

#include "nelson/catalog.hpp"
#include "nelson/search.hpp"
#include "nelson/semantics.hpp"

using namespace nelson;

namespace {

SearchSpec spec_of(int size, AlgebraClass cls) {
    SearchSpec s;
    s.size = size;
    s.cls = cls;
    return s;
}

// Brute-force baseline for tiny sizes: every bounded lattice order on labeled
// elements, deduped by the isomorphism oracle.
std::vector<FiniteAlgebra> naive_lattices(int n) {
    std::vector<FiniteAlgebra> out;
    int pairs = n * n;
    for (long long bits = 0; bits < (1LL << pairs); ++bits) {
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) leq[i][j] = bits & (1LL << (i * n + j));
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!leq[i][i] || !leq[0][i] || !leq[i][n - 1]) ok = false;
            for (int j = 0; j < n && ok; ++j) {
                if (leq[i][j] && leq[j][i] && i != j) ok = false;
                for (int k = 0; k < n && ok; ++k)
                    if (leq[i][j] && leq[j][k] && !leq[i][k]) ok = false;
            }
        }
        if (!ok) continue;
        auto bound = [&](int x, int y, bool lower, int& out_b) {
            int best = -1;
            for (int z = 0; z < n; ++z) {
                bool cand = lower ? (leq[z][x] && leq[z][y]) : (leq[x][z] && leq[y][z]);
                if (!cand) continue;
                if (best == -1 || (lower ? leq[best][z] : leq[z][best])) best = z;
            }
            if (best == -1) return false;
            for (int z = 0; z < n; ++z) {
                bool cand = lower ? (leq[z][x] && leq[z][y]) : (leq[x][z] && leq[y][z]);
                if (cand && !(lower ? leq[z][best] : leq[best][z])) return false;
            }
            out_b = best;
            return true;
        };
        FiniteAlgebra A;
        A.name = "naive";
        for (int i = 0; i < n; ++i) A.elems.push_back("e" + std::to_string(i));
        std::vector<int> meet(n * n), join(n * n);
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y) {
                int m, j;
                if (!bound(x, y, true, m) || !bound(x, y, false, j)) { ok = false; break; }
                meet[x * n + y] = m;
                join[x * n + y] = j;
            }
        if (!ok) continue;
        A.tables[Conn::And] = meet;
        A.tables[Conn::Or] = join;
        A.zero = 0;
        A.one = n - 1;
        bool fresh = true;
        for (const auto& B : out)
            if (is_isomorphic(A, B)) fresh = false;
        if (fresh) out.push_back(A);
    }
    return out;
}

} // namespace

TEST_CASE("bounded lattice counts at small sizes") {
    CHECK(count_models(spec_of(1, AlgebraClass::Lattice)).count == 1);
    CHECK(count_models(spec_of(2, AlgebraClass::Lattice)).count == 1);
    CHECK(count_models(spec_of(3, AlgebraClass::Lattice)).count == 1);
    CHECK(count_models(spec_of(4, AlgebraClass::Lattice)).count == 2);  // chain and diamond
    CHECK(count_models(spec_of(5, AlgebraClass::Lattice)).count == 5);
    CHECK(count_models(spec_of(6, AlgebraClass::Lattice)).count == 15);
}

TEST_CASE("completeness at tiny scale against the naive baseline") {
    for (int n = 1; n <= 4; ++n) {
        auto naive = naive_lattices(n);
        CHECK(count_models(spec_of(n, AlgebraClass::Lattice)).count ==
              static_cast<long long>(naive.size()));
    }
}

TEST_CASE("s-algebra counts: only the chain at sizes two and three") {
    CHECK(count_models(spec_of(2, AlgebraClass::SAlgebra)).count == 1);
    auto models = collect_models(spec_of(3, AlgebraClass::SAlgebra));
    REQUIRE(models.size() == 1);
    // ... and it is the three-element Lukasiewicz chain
    CHECK(is_isomorphic(models[0], to_s_prime(catalog_get("L3"))));
}

TEST_CASE("enumerated algebras pass their own class checks") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& A : collect_models(spec_of(n, AlgebraClass::Cirl))) {
            INFO(A.name);
            CHECK(check_cirl(A).ok());
        }
        for (const auto& A : collect_models(spec_of(n, AlgebraClass::SAlgebra))) {
            INFO(A.name);
            CHECK(validate_s_algebra(A).ok());
        }
        for (const auto& A : collect_models(spec_of(n, AlgebraClass::Implicative))) {
            INFO(A.name);
            CHECK(check_cirl(A).ok());
            CHECK(A.tables.at(Conn::Fuse) == A.tables.at(Conn::And));
        }
        for (const auto& A : collect_models(spec_of(n, AlgebraClass::N4))) {
            INFO(A.name);
            CHECK(check_n4_lattice(A).ok());
        }
        for (const auto& A : collect_models(spec_of(n, AlgebraClass::N3))) {
            INFO(A.name);
            CHECK(check_n3_lattice(A).ok());
        }
    }
}

TEST_CASE("no two yielded algebras are isomorphic (oracle check)") {
    for (AlgebraClass cls :
         {AlgebraClass::Lattice, AlgebraClass::Cirl, AlgebraClass::SAlgebra, AlgebraClass::N4}) {
        for (int n = 1; n <= 4; ++n) {
            auto models = collect_models(spec_of(n, cls));
            for (std::size_t i = 0; i < models.size(); ++i)
                for (std::size_t j = i + 1; j < models.size(); ++j) {
                    INFO(class_name(cls) << " size " << n);
                    CHECK(!is_isomorphic(models[i], models[j]));
                }
        }
    }
}

TEST_CASE("n4 enumeration is complete at tiny scale (direct table sweep)") {
    // all <&,|,->,~> algebras on the 1- and 2-element carriers, oracle-deduped
    for (int n = 1; n <= 2; ++n) {
        auto lattices = naive_lattices(n);
        std::vector<FiniteAlgebra> found;
        for (const auto& lat : lattices) {
            int cells = n * n;
            std::vector<int> wi(cells);
            long long total = 1;
            for (int i = 0; i < cells; ++i) total *= n;
            for (long long code = 0; code < total; ++code) {
                long long c = code;
                for (int i = 0; i < cells; ++i) { wi[i] = static_cast<int>(c % n); c /= n; }
                // all involutions
                std::vector<int> perm(n);
                for (int i = 0; i < n; ++i) perm[i] = i;
                std::vector<std::vector<int>> negs;
                do {
                    bool inv = true;
                    for (int i = 0; i < n; ++i)
                        if (perm[perm[i]] != i) inv = false;
                    if (inv) negs.push_back(perm);
                } while (std::next_permutation(perm.begin(), perm.end()));
                for (const auto& ng : negs) {
                    FiniteAlgebra A = lat;
                    A.zero.reset();
                    A.one.reset();
                    A.tables[Conn::WImp] = wi;
                    A.tables[Conn::Not] = ng;
                    if (!check_n4_lattice(A).ok()) continue;
                    bool fresh = true;
                    for (const auto& B : found)
                        if (is_isomorphic(A, B)) fresh = false;
                    if (fresh) found.push_back(A);
                }
            }
        }
        INFO("size " << n);
        CHECK(count_models(spec_of(n, AlgebraClass::N4)).count ==
              static_cast<long long>(found.size()));
    }
}

TEST_CASE("constraints: adding one never increases the count") {
    QuasiEquation distrib = parse_quasiequation("x & (y | z) = (x & y) | (x & z)");
    for (int n = 2; n <= 4; ++n) {
        SearchSpec plain = spec_of(n, AlgebraClass::Cirl);
        SearchSpec constrained = plain;
        constrained.require.push_back(distrib);
        long long all = count_models(plain).count;
        long long some = count_models(constrained).count;
        CHECK(some <= all);
    }
}

TEST_CASE("find_model scans sizes upward and respects constraints") {
    // a bounded lattice that is not distributive: first at size 5
    SearchSpec spec = spec_of(5, AlgebraClass::Lattice);
    spec.forbid.push_back(parse_quasiequation("x & (y | z) = (x & y) | (x & z)"));
    FindOutcome out = find_model(spec);
    REQUIRE(out.model.has_value());
    CHECK(out.model->size() == 5);
    CHECK(!check_distributive(*out.model).ok());
    CHECK(check_lattice(*out.model).ok());

    // no such thing at size <= 4
    SearchSpec small = spec;
    small.size = 4;
    CHECK(!find_model(small).model.has_value());
}

TEST_CASE("budget exhaustion is an explicit verdict") {
    SearchSpec spec = spec_of(6, AlgebraClass::SAlgebra);
    spec.budget = 50;
    CountResult res = count_models(spec);
    CHECK(res.stats.budget_exceeded);
    CHECK(res.stats.nodes > 50);
}

TEST_CASE("mv enumeration finds the chains") {
    // at size 4 the MV-algebras are the four-chain and the 2x2 product
    auto models = collect_models(spec_of(4, AlgebraClass::Mv));
    CHECK(models.size() == 2);
    for (const auto& A : models) {
        INFO(A.name);
        CHECK(check_mv(A).ok());
    }
}

TEST_CASE("equational laws hold on every enumerated three-potent CIRL") {
    // distribution of fusion over join, squares of joins, and the square
    // absorption laws, checked exhaustively
    for (int n = 1; n <= 4; ++n) {
        for (const auto& A : collect_models(spec_of(n, AlgebraClass::Cirl))) {
            auto fus = [&](int x, int y) { return A.app(Conn::Fuse, x, y); };
            auto sq = [&](int x) { return fus(x, x); };
            // fusion distributes over join in every CIRL
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z) {
                        INFO(A.name);
                        CHECK(fus(A.join(x, y), z) == A.join(fus(x, z), fus(y, z)));
                    }
            // the square laws need three-potency (the four-element MV chain
            // refutes them otherwise)
            if (!check_three_potent(A).ok()) continue;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    INFO(A.name);
                    int x2y2 = A.join(sq(x), sq(y));
                    CHECK(x2y2 == sq(x2y2));
                    CHECK(sq(A.join(x, sq(y))) == sq(A.join(x, y)));
                    CHECK(sq(A.join(x, y)) == A.join(sq(x), sq(y)));
                }
        }
    }
}

TEST_CASE("cirl enumeration is complete at tiny scale (direct table sweep)") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<FiniteAlgebra> found;
        for (const auto& lat : naive_lattices(n)) {
            int cells = n * n;
            long long total = 1;
            for (int i = 0; i < cells; ++i) total *= n;
            std::vector<int> fu(cells);
            for (long long code = 0; code < total; ++code) {
                long long c = code;
                for (int i = 0; i < cells; ++i) { fu[i] = static_cast<int>(c % n); c /= n; }
                FiniteAlgebra A = lat;
                A.zero.reset();
                A.tables[Conn::Fuse] = fu;
                // unit, commutative, associative, residuated
                bool ok = true;
                for (int x = 0; x < n && ok; ++x) {
                    if (fu[x * n + (n - 1)] != x || fu[(n - 1) * n + x] != x) ok = false;
                    for (int y = 0; y < n && ok; ++y) {
                        if (fu[x * n + y] != fu[y * n + x]) ok = false;
                        for (int z = 0; z < n && ok; ++z)
                            if (fu[fu[x * n + y] * n + z] != fu[x * n + fu[y * n + z]])
                                ok = false;
                    }
                }
                if (!ok) continue;
                std::vector<int> impl(cells);
                for (int x = 0; x < n && ok; ++x)
                    for (int z = 0; z < n && ok; ++z) {
                        int m = -1;
                        for (int y = 0; y < n; ++y)
                            if (A.leq(fu[x * n + y], z)) m = m < 0 ? y : A.join(m, y);
                        if (m < 0) { ok = false; break; }
                        impl[x * n + z] = m;
                        // the definition, both directions
                        for (int y = 0; y < n && ok; ++y)
                            if (A.leq(fu[x * n + y], z) != A.leq(y, m)) ok = false;
                    }
                if (!ok) continue;
                A.tables[Conn::Imp] = impl;
                A.one = n - 1;
                bool fresh = true;
                for (const auto& B : found)
                    if (is_isomorphic(A, B)) fresh = false;
                if (fresh) found.push_back(A);
            }
        }
        INFO("size " << n);
        CHECK(count_models(spec_of(n, AlgebraClass::Cirl)).count ==
              static_cast<long long>(found.size()));
    }
}

TEST_CASE("a non-distributive S-algebra exists within size 8") {
    SearchSpec spec = spec_of(8, AlgebraClass::SAlgebra);
    spec.forbid.push_back(parse_quasiequation("x & (y | z) = (x & y) | (x & z)"));
    FindOutcome out = find_model(spec);
    REQUIRE(out.model.has_value());
    CHECK(out.model->size() <= 8);
    CHECK(validate_s_algebra(*out.model).ok());
    CHECK(!check_distributive(*out.model).ok());
    // the eight-element bundled witness confirms nonemptiness independently
    FiniteAlgebra a8 = catalog_get("A8");
    CHECK(validate_s_algebra(a8).ok());
    CHECK(!check_distributive(a8).ok());
}

TEST_CASE("an S-algebra refuting (x => ~x) | (~x => x) = 1 exists within size 8") {
    QuasiEquation q = parse_quasiequation("(x => ~x) | (~x => x) = 1");
    SearchSpec spec = spec_of(8, AlgebraClass::SAlgebra);
    spec.forbid.push_back(q);
    FindOutcome out = find_model(spec);
    REQUIRE(out.model.has_value());
    CHECK(!satisfies_quasiequation(*out.model, q).satisfied);
    // the bundled witness qualifies too: x = c gives b | c = a, not 1
    FiniteAlgebra a8 = catalog_get("A8");
    Valuation nu{{"x", a8.elem("c")}};
    CHECK(eval(parse("(x => ~x) | (~x => x)"), nu, a8) == a8.elem("a"));
}

TEST_CASE("frozen class counts (independently computed)") {
    // cross-checked against a stand-alone brute-force enumerator before
    // freezing; guards the pruning logic against regressions
    CHECK(count_models(spec_of(4, AlgebraClass::Cirl)).count == 7);
    CHECK(count_models(spec_of(5, AlgebraClass::Cirl)).count == 26);
    CHECK(count_models(spec_of(6, AlgebraClass::Cirl)).count == 129);
    CHECK(count_models(spec_of(4, AlgebraClass::SAlgebra)).count == 2);
    CHECK(count_models(spec_of(5, AlgebraClass::SAlgebra)).count == 1);
    CHECK(count_models(spec_of(6, AlgebraClass::SAlgebra)).count == 4);
    CHECK(count_models(spec_of(4, AlgebraClass::Implicative)).count == 2);
    CHECK(count_models(spec_of(5, AlgebraClass::Implicative)).count == 3);
}

TEST_CASE("sizes below one are rejected") {
    CHECK_THROWS_AS(count_models(spec_of(0, AlgebraClass::Lattice)), std::invalid_argument);
    CHECK_THROWS_AS(count_models(spec_of(-3, AlgebraClass::SAlgebra)), std::invalid_argument);
}
