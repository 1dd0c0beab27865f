// Exhaustive, isomorph-free enumeration of small algebras: bounded lattice
// orders first, then fusion tables grown cell by cell under commutativity,
// integrality, monotonicity and associativity pruning, with the implication
// derived from residuation. N4/N3-lattices are generated through their
// twist-structure representation over implicative lattices and verified by
// the direct checkers. Deterministic order; explicit node budgets.
#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nelson/algebra.hpp"
#include "nelson/bridge.hpp"
#include "nelson/semantics.hpp"

namespace nelson {

enum class AlgebraClass { Lattice, Cirl, Cibrl, SAlgebra, Mv, Implicative, N4, N3 };

inline const char* class_name(AlgebraClass c) {
    switch (c) {
        case AlgebraClass::Lattice:     return "lattice";
        case AlgebraClass::Cirl:        return "cirl";
        case AlgebraClass::Cibrl:       return "cibrl";
        case AlgebraClass::SAlgebra:    return "s-algebra";
        case AlgebraClass::Mv:          return "mv";
        case AlgebraClass::Implicative: return "implicative";
        case AlgebraClass::N4:          return "n4";
        case AlgebraClass::N3:          return "n3";
    }
    return "?";
}

inline std::optional<AlgebraClass> class_from_name(const std::string& s) {
    for (AlgebraClass c : {AlgebraClass::Lattice, AlgebraClass::Cirl, AlgebraClass::Cibrl,
                           AlgebraClass::SAlgebra, AlgebraClass::Mv, AlgebraClass::Implicative,
                           AlgebraClass::N4, AlgebraClass::N3})
        if (s == class_name(c)) return c;
    return std::nullopt;
}

struct SearchSpec {
    int size = 2;                           // exact size for enumeration; bound for find_model
    AlgebraClass cls = AlgebraClass::SAlgebra;
    std::vector<QuasiEquation> require;     // must be satisfied
    std::vector<QuasiEquation> forbid;      // must be refuted
    long long budget = 500'000'000;         // deterministic node budget
};

struct SearchStats {
    long long nodes = 0;
    bool budget_exceeded = false;
};

struct BudgetExceeded {};
struct StopEnumeration {};

namespace detail {

struct NodeCounter {
    long long budget;
    long long nodes = 0;
    void tick() {
        if (++nodes > budget) throw BudgetExceeded{};
    }
};

using LeqMatrix = std::vector<std::vector<bool>>;

inline bool lattice_bounds_ok(const LeqMatrix& leq, int n, int& meet_out, int x, int y,
                              bool lower) {
    int best = -1;
    for (int z = 0; z < n; ++z) {
        bool cand = lower ? (leq[z][x] && leq[z][y]) : (leq[x][z] && leq[y][z]);
        if (!cand) continue;
        if (best == -1) best = z;
        else if (lower ? leq[best][z] : leq[z][best]) best = z;
    }
    if (best == -1) return false;
    for (int z = 0; z < n; ++z) {
        bool cand = lower ? (leq[z][x] && leq[z][y]) : (leq[x][z] && leq[y][z]);
        if (cand && !(lower ? leq[z][best] : leq[best][z])) return false;
    }
    meet_out = best;
    return true;
}

/// Bounded-lattice orders on 0..n-1 (0 bottom, n-1 top), topologically
/// labeled, one canonical representative per isomorphism class.
inline std::vector<LeqMatrix> lattice_orders(int n, NodeCounter& counter) {
    std::vector<LeqMatrix> out;
    if (n == 1) {
        out.push_back({{true}});
        return out;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) pairs.emplace_back(i, j);
    std::vector<int> mids;
    for (int i = 1; i < n - 1; ++i) mids.push_back(i);

    const long long total = 1LL << pairs.size();
    for (long long bits = 0; bits < total; ++bits) {
        counter.tick();
        LeqMatrix leq(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i) {
            leq[i][i] = true;
            leq[0][i] = true;
            leq[i][n - 1] = true;
        }
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (bits & (1LL << k)) leq[pairs[k].first][pairs[k].second] = true;
        bool ok = true;
        for (int k = 0; k < n && ok; ++k)
            for (int i = 0; i < n && ok; ++i)
                if (leq[i][k])
                    for (int j = 0; j < n; ++j)
                        if (leq[k][j] && !leq[i][j]) { ok = false; break; }
        if (!ok) continue;
        int dummy;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                if (!lattice_bounds_ok(leq, n, dummy, x, y, true) ||
                    !lattice_bounds_ok(leq, n, dummy, x, y, false))
                    ok = false;
        if (!ok) continue;

        // canonical: minimal order matrix among topologically-valid relabelings
        auto matrix_key = [&](const std::vector<int>& perm) {
            std::string key;
            key.reserve(static_cast<std::size_t>(n) * n);
            std::vector<int> inv(n);
            for (int i = 0; i < n; ++i) inv[perm[i]] = i;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) key += leq[inv[i]][inv[j]] ? '1' : '0';
            return key;
        };
        std::vector<int> ident(n);
        for (int i = 0; i < n; ++i) ident[i] = i;
        std::string cur = matrix_key(ident);
        bool minimal = true;
        std::vector<int> perm(mids.begin(), mids.end());
        while (minimal) {
            std::vector<int> full(n);
            full[0] = 0;
            full[n - 1] = n - 1;
            for (std::size_t k = 0; k < perm.size(); ++k) full[mids[k]] = perm[k];
            bool topo = true;
            for (int i = 0; i < n && topo; ++i)
                for (int j = 0; j < n && topo; ++j)
                    if (leq[i][j] && i != j && full[i] > full[j]) topo = false;
            if (topo && matrix_key(full) < cur) minimal = false;
            if (!std::next_permutation(perm.begin(), perm.end())) break;
        }
        if (minimal) out.push_back(std::move(leq));
    }
    return out;
}

inline FiniteAlgebra lattice_algebra(const LeqMatrix& leq, int n, const std::string& name,
                                     bool with_consts) {
    FiniteAlgebra A;
    A.name = name;
    for (int i = 0; i < n; ++i) A.elems.push_back("e" + std::to_string(i));
    std::vector<int> meet(static_cast<std::size_t>(n) * n), join(meet.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int m = 0, j = 0;
            lattice_bounds_ok(leq, n, m, x, y, true);
            lattice_bounds_ok(leq, n, j, x, y, false);
            meet[static_cast<std::size_t>(x) * n + y] = m;
            join[static_cast<std::size_t>(x) * n + y] = j;
        }
    A.tables[Conn::And] = std::move(meet);
    A.tables[Conn::Or] = std::move(join);
    if (with_consts) {
        A.zero = 0;
        A.one = n - 1;
    }
    return A;
}

/// Does the order admit an antitone involution? (necessary for the
/// involutive classes; used as a lattice-level prune)
inline bool self_dual(const LeqMatrix& leq, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (perm[perm[i]] != i) ok = false;
            for (int j = 0; j < n && ok; ++j)
                if (leq[i][j] != leq[perm[j]][perm[i]]) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Serialized minimal image over all relabelings; constants are part of the
/// image, so isomorphisms are forced to respect them.
inline std::string canonical_key(const FiniteAlgebra& A) {
    int n = A.size();
    std::vector<int> perm(n), inv(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::string best;
    do {
        for (int i = 0; i < n; ++i) inv[perm[i]] = i;
        std::string key;
        key.reserve(A.tables.size() * n * n + 8);
        key += A.zero ? static_cast<char>('a' + perm[*A.zero]) : '.';
        key += A.one ? static_cast<char>('a' + perm[*A.one]) : '.';
        for (const auto& [op, table] : A.tables) {
            key += op_token(op);
            if (op == Conn::Not) {
                for (int x = 0; x < n; ++x)
                    key += static_cast<char>('a' + perm[A.app1(op, inv[x])]);
            } else {
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        key += static_cast<char>('a' + perm[A.app(op, inv[x], inv[y])]);
            }
        }
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Depth-first growth of commutative integral monoid tables over a fixed
/// lattice, unit = top. Calls `done` for every completed residuated table.
class FuseSearch {
public:
    FuseSearch(const LeqMatrix& leq, const FiniteAlgebra& lat, NodeCounter& counter)
        : leq_(leq), lat_(lat), n_(lat.size()), counter_(counter),
          fuse_(static_cast<std::size_t>(n_) * n_, -1) {
        int top = n_ - 1;
        for (int x = 0; x < n_; ++x) {
            set_cell(top, x, x);
            set_cell(x, top, x);
        }
        for (int i = 0; i < n_ - 1; ++i)
            for (int j = i; j < n_ - 1; ++j) cells_.emplace_back(i, j);
        std::stable_sort(cells_.begin(), cells_.end(), [&](auto a, auto b) {
            return domain_size(a) < domain_size(b);
        });
    }

    void run(const std::function<void(const FiniteAlgebra&)>& done) {
        done_ = &done;
        dfs(0);
    }

private:
    const LeqMatrix& leq_;
    const FiniteAlgebra& lat_;
    int n_;
    NodeCounter& counter_;
    std::vector<int> fuse_;
    std::vector<std::pair<int, int>> cells_;
    const std::function<void(const FiniteAlgebra&)>* done_ = nullptr;

    int cell(int x, int y) const { return fuse_[static_cast<std::size_t>(x) * n_ + y]; }
    void set_cell(int x, int y, int v) { fuse_[static_cast<std::size_t>(x) * n_ + y] = v; }

    int domain_size(std::pair<int, int> c) const {
        int m = lat_.meet(c.first, c.second), k = 0;
        for (int z = 0; z < n_; ++z)
            if (leq_[z][m]) ++k;
        return k;
    }

    bool monotone_ok(int i, int j) const {
        int v = cell(i, j);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                int w = cell(a, b);
                if (w < 0) continue;
                if (leq_[a][i] && leq_[b][j] && !leq_[w][v]) return false;
                if (leq_[i][a] && leq_[j][b] && !leq_[v][w]) return false;
            }
        return true;
    }

    bool assoc_ok() const {
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                int xy = cell(x, y);
                if (xy < 0) continue;
                for (int z = 0; z < n_; ++z) {
                    int yz = cell(y, z);
                    if (yz < 0) continue;
                    int l = cell(xy, z), r = cell(x, yz);
                    if (l >= 0 && r >= 0 && l != r) return false;
                }
            }
        return true;
    }

    void dfs(std::size_t k) {
        if (k == cells_.size()) {
            complete();
            return;
        }
        auto [i, j] = cells_[k];
        int m = lat_.meet(i, j);
        for (int v = 0; v < n_; ++v) {
            if (!leq_[v][m]) continue;
            counter_.tick();
            set_cell(i, j, v);
            set_cell(j, i, v);
            if (monotone_ok(i, j) && assoc_ok()) dfs(k + 1);
            set_cell(i, j, -1);
            set_cell(j, i, -1);
        }
    }

    void complete() {
        // implication from residuation: x => z is the largest y with x*y <= z
        std::vector<int> impl(static_cast<std::size_t>(n_) * n_);
        for (int x = 0; x < n_; ++x)
            for (int z = 0; z < n_; ++z) {
                int m = -1;
                for (int y = 0; y < n_; ++y)
                    if (leq_[cell(x, y)][z]) m = (m == -1) ? y : lat_.join(m, y);
                if (m == -1 || !leq_[cell(x, m)][z]) return;  // not residuated
                impl[static_cast<std::size_t>(x) * n_ + z] = m;
            }
        FiniteAlgebra A = lat_;
        A.tables[Conn::Fuse] = fuse_;
        A.tables[Conn::Imp] = std::move(impl);
        A.one = n_ - 1;
        (*done_)(A);
    }
};

/// All subuniverses of the twist structure over an implicative lattice B:
/// carrier pairs (a, x) with the De Morgan twist operations.
struct Twist {
    const FiniteAlgebra& B;
    int b;
    Twist(const FiniteAlgebra& base) : B(base), b(base.size()) {}

    int id(int a, int x) const { return a * b + x; }
    int first(int p) const { return p / b; }
    int second(int p) const { return p % b; }

    int meet(int p, int q) const {
        return id(B.meet(first(p), first(q)), B.join(second(p), second(q)));
    }
    int join(int p, int q) const {
        return id(B.join(first(p), first(q)), B.meet(second(p), second(q)));
    }
    int wimp(int p, int q) const {
        return id(B.app(Conn::Imp, first(p), first(q)), B.meet(first(p), second(q)));
    }
    int flip(int p) const { return id(second(p), first(p)); }

    std::set<int> close(std::set<int> s) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> cur(s.begin(), s.end());
            for (int p : cur) {
                if (s.insert(flip(p)).second) changed = true;
                for (int q : cur) {
                    if (s.insert(meet(p, q)).second) changed = true;
                    if (s.insert(join(p, q)).second) changed = true;
                    if (s.insert(wimp(p, q)).second) changed = true;
                    if (s.insert(wimp(q, p)).second) changed = true;
                }
            }
        }
        return s;
    }
};

inline FiniteAlgebra twist_algebra(const Twist& tw, const std::set<int>& universe,
                                   const std::string& name) {
    std::vector<int> elems(universe.begin(), universe.end());
    int n = static_cast<int>(elems.size());
    auto index_of = [&](int p) {
        return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
    };
    FiniteAlgebra A;
    A.name = name;
    for (int i = 0; i < n; ++i)
        A.elems.push_back("p" + std::to_string(tw.first(elems[i])) + "_" +
                          std::to_string(tw.second(elems[i])));
    std::vector<int> meet(static_cast<std::size_t>(n) * n), join(meet.size()), wi(meet.size()),
        nn(n);
    for (int i = 0; i < n; ++i) {
        nn[i] = index_of(tw.flip(elems[i]));
        for (int j = 0; j < n; ++j) {
            meet[static_cast<std::size_t>(i) * n + j] = index_of(tw.meet(elems[i], elems[j]));
            join[static_cast<std::size_t>(i) * n + j] = index_of(tw.join(elems[i], elems[j]));
            wi[static_cast<std::size_t>(i) * n + j] = index_of(tw.wimp(elems[i], elems[j]));
        }
    }
    A.tables[Conn::And] = std::move(meet);
    A.tables[Conn::Or] = std::move(join);
    A.tables[Conn::WImp] = std::move(wi);
    A.tables[Conn::Not] = std::move(nn);
    return A;
}

} // namespace detail

/// Visits one canonical representative per isomorphism class of the given
/// class and exact size, in deterministic order, subject to the require /
/// forbid constraints. The visitor returns false to stop early. Exceeding
/// the node budget is reported in the stats, never silently truncated.
inline SearchStats enumerate_algebras(const SearchSpec& spec,
                                      const std::function<bool(const FiniteAlgebra&)>& visit) {
    if (spec.size < 1) throw std::invalid_argument("carrier size must be at least 1");
    SearchStats stats;
    detail::NodeCounter counter{spec.budget};
    int n = spec.size;
    bool stopped = false;

    // constraints mentioning only lattice vocabulary can run before tables
    auto lattice_only = [](const QuasiEquation& q) {
        auto ok = [](const Formula& f, auto&& self) -> bool {
            switch (f.kind()) {
                case Conn::Var:
                case Conn::Zero:
                case Conn::One: return true;
                case Conn::And:
                case Conn::Or: return self(f.left(), self) && self(f.right(), self);
                default: return false;
            }
        };
        for (const auto& e : q.premises)
            if (!ok(e.lhs, ok) || !ok(e.rhs, ok)) return false;
        return ok(q.conclusion.lhs, ok) && ok(q.conclusion.rhs, ok);
    };
    std::vector<QuasiEquation> lat_require, lat_forbid, full_require, full_forbid;
    for (const auto& q : spec.require)
        (lattice_only(q) ? lat_require : full_require).push_back(q);
    for (const auto& q : spec.forbid)
        (lattice_only(q) ? lat_forbid : full_forbid).push_back(q);

    std::set<std::string> seen;
    long long emitted = 0;
    auto emit = [&](const FiniteAlgebra& A) {
        for (const auto& q : full_require)
            if (!satisfies_quasiequation(A, q).satisfied) return;
        for (const auto& q : full_forbid)
            if (satisfies_quasiequation(A, q).satisfied) return;
        if (!seen.insert(detail::canonical_key(A)).second) return;
        FiniteAlgebra named = A;
        named.name = std::string(class_name(spec.cls)) + std::to_string(n) + "_" +
                     std::to_string(++emitted);
        if (!visit(named)) {
            stopped = true;
            throw StopEnumeration{};
        }
    };

    try {
        if (spec.cls == AlgebraClass::N4 || spec.cls == AlgebraClass::N3) {
            // twist-structure generation over implicative lattices of size <= n
            for (int b = 1; b <= n && !stopped; ++b) {
                SearchSpec base{b, AlgebraClass::Implicative, {}, {}, spec.budget};
                std::vector<FiniteAlgebra> bases;
                SearchStats sub = enumerate_algebras(base, [&](const FiniteAlgebra& B) {
                    bases.push_back(B);
                    return true;
                });
                counter.nodes += sub.nodes;
                if (sub.budget_exceeded) throw BudgetExceeded{};
                for (const auto& B : bases) {
                    if (stopped) break;
                    detail::Twist tw(B);
                    // subalgebra lattice by closing found universes one element
                    // at a time, starting from singleton closures
                    std::set<std::set<int>> found;
                    std::vector<std::set<int>> frontier;
                    for (int p = 0; p < tw.b * tw.b; ++p) {
                        counter.tick();
                        auto s = tw.close({p});
                        if (found.insert(s).second) frontier.push_back(s);
                    }
                    while (!frontier.empty()) {
                        std::vector<std::set<int>> next;
                        for (const auto& s : frontier)
                            for (int p = 0; p < tw.b * tw.b; ++p) {
                                if (s.count(p)) continue;
                                counter.tick();
                                auto t = s;
                                t.insert(p);
                                t = tw.close(std::move(t));
                                if (static_cast<int>(t.size()) <= n &&
                                    found.insert(t).second)
                                    next.push_back(t);
                            }
                        frontier = std::move(next);
                    }
                    for (const auto& s : found) {
                        if (stopped) break;
                        if (static_cast<int>(s.size()) != n) continue;
                        // the quotient must be all of B
                        std::set<int> firsts;
                        for (int p : s) firsts.insert(tw.first(p));
                        if (static_cast<int>(firsts.size()) != tw.b) continue;
                        FiniteAlgebra A = detail::twist_algebra(tw, s, "candidate");
                        ValidationReport rep = spec.cls == AlgebraClass::N3
                                                   ? check_n3_lattice(A)
                                                   : check_n4_lattice(A);
                        if (rep.ok()) emit(A);
                    }
                    if (stopped) break;
                }
            }
        } else {
            auto orders = detail::lattice_orders(n, counter);
            for (const auto& leq : orders) {
                FiniteAlgebra lat = detail::lattice_algebra(leq, n, "candidate", true);
                bool lat_ok = true;
                for (const auto& q : lat_require)
                    if (!satisfies_quasiequation(lat, q).satisfied) lat_ok = false;
                for (const auto& q : lat_forbid)
                    if (satisfies_quasiequation(lat, q).satisfied) lat_ok = false;
                if (!lat_ok) continue;

                switch (spec.cls) {
                    case AlgebraClass::Lattice:
                        emit(lat);
                        break;
                    case AlgebraClass::Implicative: {
                        // fusion = meet; implicative iff (&, =>) residuates
                        FiniteAlgebra A = lat;
                        A.tables[Conn::Fuse] = A.tables.at(Conn::And);
                        A.zero.reset();
                        A.one = n - 1;
                        std::vector<int> impl(static_cast<std::size_t>(n) * n);
                        bool ok = true;
                        for (int x = 0; x < n && ok; ++x)
                            for (int z = 0; z < n && ok; ++z) {
                                int m = -1;
                                for (int y = 0; y < n; ++y)
                                    if (lat.leq(lat.meet(x, y), z))
                                        m = (m == -1) ? y : lat.join(m, y);
                                if (!lat.leq(lat.meet(x, m), z)) ok = false;
                                else impl[static_cast<std::size_t>(x) * n + z] = m;
                            }
                        if (ok) {
                            A.tables[Conn::Imp] = std::move(impl);
                            emit(A);
                        }
                        break;
                    }
                    default: {
                        bool needs_involution = spec.cls == AlgebraClass::SAlgebra ||
                                                spec.cls == AlgebraClass::Mv;
                        if (needs_involution && !detail::self_dual(leq, n)) break;
                        detail::FuseSearch search(leq, lat, counter);
                        search.run([&](const FiniteAlgebra& A) {
                            if (spec.cls == AlgebraClass::Cirl) {
                                FiniteAlgebra C = A;
                                C.zero.reset();
                                emit(C);
                                return;
                            }
                            if (spec.cls == AlgebraClass::Cibrl) {
                                emit(A);
                                return;
                            }
                            // involutive classes: ~~x = x with ~x := x => 0
                            for (int x = 0; x < n; ++x) {
                                int nx = A.app(Conn::Imp, x, 0);
                                if (A.app(Conn::Imp, nx, 0) != x) return;
                            }
                            if (spec.cls == AlgebraClass::SAlgebra) {
                                for (int x = 0; x < n; ++x) {
                                    int x2 = A.app(Conn::Fuse, x, x);
                                    if (x2 != A.app(Conn::Fuse, x, x2)) return;
                                }
                            }
                            if (spec.cls == AlgebraClass::Mv) {
                                for (int x = 0; x < n; ++x)
                                    for (int y = 0; y < n; ++y)
                                        if (A.app(Conn::Fuse, x, A.app(Conn::Imp, x, y)) !=
                                            A.meet(x, y))
                                            return;
                                emit(A);
                                return;
                            }
                            emit(A);
                        });
                        break;
                    }
                }
            }
        }
    } catch (BudgetExceeded&) {
        stats.budget_exceeded = true;
    } catch (StopEnumeration&) {
        // visitor asked to stop
    }
    stats.nodes = counter.nodes;
    return stats;
}

struct CountResult {
    long long count = 0;
    SearchStats stats;
};

inline CountResult count_models(const SearchSpec& spec) {
    CountResult res;
    res.stats = enumerate_algebras(spec, [&](const FiniteAlgebra&) {
        ++res.count;
        return true;
    });
    return res;
}

inline std::vector<FiniteAlgebra> collect_models(const SearchSpec& spec,
                                                 SearchStats* stats_out = nullptr) {
    std::vector<FiniteAlgebra> out;
    SearchStats st = enumerate_algebras(spec, [&](const FiniteAlgebra& A) {
        out.push_back(A);
        return true;
    });
    if (stats_out) *stats_out = st;
    return out;
}

struct FindOutcome {
    std::optional<FiniteAlgebra> model;
    SearchStats stats;
};

/// First satisfying algebra scanning sizes 1..spec.size in canonical order.
inline FindOutcome find_model(const SearchSpec& spec) {
    FindOutcome out;
    for (int m = 1; m <= spec.size && !out.model; ++m) {
        SearchSpec sub = spec;
        sub.size = m;
        sub.budget = spec.budget - out.stats.nodes;
        SearchStats st = enumerate_algebras(sub, [&](const FiniteAlgebra& A) {
            out.model = A;
            return false;
        });
        out.stats.nodes += st.nodes;
        if (st.budget_exceeded) {
            out.stats.budget_exceeded = true;
            break;
        }
    }
    return out;
}

} // namespace nelson
