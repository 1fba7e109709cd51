#include "interlace/checks.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "interlace/bpoly.hpp"
#include "interlace/cwdp.hpp"
#include "interlace/kexpr.hpp"
#include "interlace/matroid.hpp"

namespace interlace {

namespace {

std::vector<VertexId> letter_names(std::size_t n) {
    std::vector<VertexId> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
    return names;
}

/// Graph for one loop/edge bit pattern: bits enumerate the pairs (i,j) with
/// i <= j in row-major order.
Graph graph_from_bits(std::size_t n, std::uint64_t bits) {
    SymBitMatrix m(n);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++bit)
            if ((bits >> bit) & 1) m.set(i, j, true);
    return Graph(letter_names(n), std::move(m));
}

std::uint64_t pattern_count(std::size_t n) { return std::uint64_t{1} << (n * (n + 1) / 2); }

void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& fn) {
    for (std::uint64_t bits = 0; bits < pattern_count(n); ++bits) fn(graph_from_bits(n, bits));
}

void for_each_loopfree_graph(std::size_t n, const std::function<void(const Graph&)>& fn) {
    std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        SymBitMatrix m(n);
        std::size_t bit = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++bit)
                if ((bits >> bit) & 1) m.set(i, j, true);
        fn(Graph(letter_names(n), std::move(m)));
    }
}

struct Tally {
    long long total = 0;
    long long failed = 0;
    std::string first;

    template <typename F>
    void check(bool cond, F&& witness) {
        ++total;
        if (!cond && failed++ == 0) first = witness();
    }
    void check_str(bool cond, const std::string& witness) {
        check(cond, [&] { return witness; });
    }
    bool passed() const { return failed == 0; }
};

CheckResult finish(const std::string& name, const Tally& t, const std::string& note,
                   std::chrono::steady_clock::time_point t0) {
    CheckResult r;
    r.name = name;
    r.passed = t.passed();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream d;
    d << t.total << " checks";
    if (!note.empty()) d << "; " << note;
    if (!t.passed()) d << "; " << t.failed << " FAILED, first: " << t.first;
    r.detail = d.str();
    return r;
}

MultiPoly U(int e = 1) { return MultiPoly::variable(Indeterminate::ordinary("u"), e); }
MultiPoly V(int e = 1) { return MultiPoly::variable(Indeterminate::ordinary("v"), e); }
MultiPoly X(const VertexId& a) { return MultiPoly::variable(Indeterminate::indexed("x", a)); }
MultiPoly Y(const VertexId& a) { return MultiPoly::variable(Indeterminate::indexed("y", a)); }

/// Independent static oracle for B_y0: plain subset enumeration.
MultiPoly by0_static(const Graph& g) {
    const std::size_t n = g.size();
    MultiPoly out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet a;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) a.insert(g.vertices()[i]);
        Graph sub = induced(g, a);
        std::size_t rk = graph_rank(sub);
        std::vector<std::pair<Indeterminate, int>> ps;
        for (const auto& v : a) ps.emplace_back(Indeterminate::indexed("x", v), 1);
        if (rk) ps.emplace_back(Indeterminate::ordinary("u"), int(rk));
        if (a.size() - rk) ps.emplace_back(Indeterminate::ordinary("v"), int(a.size() - rk));
        out += MultiPoly::monomial(1, ps);
    }
    return out;
}

std::string gdesc(const Graph& g) { return format_graph(g); }

/// All nine partial sums B_ij in a single enumeration pass.
std::array<std::array<MultiPoly, 3>, 3> bij_all(const Graph& g, const VertexId& a,
                                                const VertexId& b) {
    std::array<std::array<MultiPoly, 3>, 3> out;
    std::size_t ia = g.index_of(a), ib = g.index_of(b);
    const std::size_t n = g.size();
    long long total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (long long t = 0; t < total; ++t) {
        long long cfg = t;
        VertexSet A, B;
        int pa = 0, pb = 0;
        for (std::size_t i = 0; i < n; ++i) {
            int d = int(cfg % 3);
            cfg /= 3;
            if (d == 1) A.insert(g.vertices()[i]);
            if (d == 2) B.insert(g.vertices()[i]);
            if (i == ia) pa = d;
            if (i == ib) pb = d;
        }
        out[pa][pb] += configuration_monomial(g, A, B);
    }
    return out;
}

std::mt19937 seeded(std::uint32_t seed) { return std::mt19937(seed); }

// ---------------------------------------------------------------- suites --

CheckResult chk_rank_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto naive_rank = [](const SymBitMatrix& m) {
        std::size_t n = m.dim();
        std::vector<std::uint64_t> rows(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (m.at(i, j)) rows[i] |= std::uint64_t{1} << j;
        std::size_t best = 0;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            bool independent = true;
            for (std::uint64_t sub = s; sub && independent; sub = (sub - 1) & s) {
                std::uint64_t x = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if ((sub >> i) & 1) x ^= rows[i];
                if (x == 0) independent = false;
            }
            if (independent) best = std::max<std::size_t>(best, std::popcount(s));
        }
        return best;
    };
    for (std::size_t n = 0; n <= 5; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            t.check(g.adjacency().rank() == naive_rank(g.adjacency()),
                    [&] { return "rank oracle mismatch on\n" + gdesc(g); });
        });
    }
    auto rng = seeded(42);
    for (int i = 0; i < 2000; ++i) {
        Graph g = random_graph(6, rng);
        t.check(g.adjacency().rank() == naive_rank(g.adjacency()),
                [&] { return "rank oracle mismatch on\n" + gdesc(g); });
        // permutation invariance
        std::vector<std::size_t> perm(6);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        SymBitMatrix pm(6);
        for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t c = r; c < 6; ++c)
                if (g.adjacency().at(perm[r], perm[c])) pm.set(r, c, true);
        t.check(pm.rank() == g.adjacency().rank(),
                [&] { return "rank not permutation invariant on\n" + gdesc(g); });
        t.check(g.adjacency().rank() + g.adjacency().corank() == 6,
                [&] { return "rank + corank != n on\n" + gdesc(g); });
    }
    return finish("rank-oracle", t, "exhaustive n<=5, 2000 random n=6", t0);
}

CheckResult chk_oracle_small() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    for (std::size_t n = 0; n <= 4; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            MultiPoly brute = brute_force_B_serial(g);
            t.check(brute == brute_force_B(g),
                    [&] { return "parallel/serial brute force disagree on\n" + gdesc(g); });
            t.check(brute == recursive_B(g),
                    [&] { return "recursive_B != brute_force_B on\n" + gdesc(g); });
        });
    }
    return finish("oracle-small", t, "all loop/edge patterns n<=4", t0);
}

CheckResult chk_oracle_random() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto rng = seeded(1001);
    for (std::size_t n = 5; n <= 8; ++n) {
        for (int i = 0; i < 50; ++i) {
            Graph g = random_graph(n, rng);
            MultiPoly brute = brute_force_B(g);
            t.check(brute == recursive_B(g),
                    [&] { return "recursive_B != brute_force_B on\n" + gdesc(g); });
            if (i % 10 == 0)
                t.check(brute == brute_force_B_serial(g),
                        [&] { return "parallel/serial brute force disagree on\n" + gdesc(g); });
        }
    }
    return finish("oracle-random", t, "200 random graphs n=5..8", t0);
}

CheckResult chk_base_cases() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    Graph empty({}, SymBitMatrix(0));
    t.check_str(brute_force_B(empty) == MultiPoly(1), "B(empty) != 1");
    t.check_str(recursive_B(empty) == MultiPoly(1), "recursive B(empty) != 1");

    Graph a = Graph::from_edges({"a"}, {});
    MultiPoly expect_a = MultiPoly(1) + X("a") * V() + Y("a") * U();
    t.check_str(brute_force_B(a) == expect_a, "B(a) != 1 + x_a v + y_a u");
    t.check_str(recursive_B(a) == expect_a, "recursive B(a) mismatch");
    t.check_str(canonical_text(brute_force_B(a)) == "1 + x_a*v + y_a*u",
                "canonical text of B(a) is " + canonical_text(brute_force_B(a)));

    Graph al = Graph::from_edges({"a"}, {{"a", "a"}});
    MultiPoly expect_al = MultiPoly(1) + X("a") * U() + Y("a") * V();
    t.check_str(brute_force_B(al) == expect_al, "B(a^l) != 1 + x_a u + y_a v");
    t.check_str(recursive_B(al) == expect_al, "recursive B(a^l) mismatch");

    Graph ab = Graph::from_edges({"a", "b"}, {{"a", "b"}});
    MultiPoly up = MultiPoly::variable(Indeterminate::ordinary("u'"));
    MultiPoly vp = MultiPoly::variable(Indeterminate::ordinary("v'"));
    MultiPoly expect_q = up * up - MultiPoly(2) * up + MultiPoly(2) * vp;
    for (QMethod m : {QMethod::Substitution, QMethod::RecursionQ123, QMethod::RecursionQ3Prime})
        t.check_str(q_poly(ab, m) == expect_q, "q(a-b) != u'^2 - 2u' + 2v'");
    return finish("base-cases", t, "Lemma 6 constants and q(a-b)", t0);
}

CheckResult chk_lemma1() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto rng = seeded(7);

    auto all_subsets = [](const Graph& g) {
        std::vector<VertexSet> subsets;
        const auto& names = g.vertices();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << names.size()); ++m) {
            VertexSet s;
            for (std::size_t i = 0; i < names.size(); ++i)
                if ((m >> i) & 1) s.insert(names[i]);
            subsets.push_back(std::move(s));
        }
        return subsets;
    };
    auto sampled_subsets = [&](const Graph& g, int count) {
        std::vector<VertexSet> subsets{{}, VertexSet(g.vertices().begin(), g.vertices().end())};
        for (int i = 0; i < count; ++i) subsets.push_back(random_subset(g, rng));
        return subsets;
    };
    VertexSet inter;

    auto run = [&](const Graph& g, bool exhaustive_sets) {
        const auto& names = g.vertices();
        for (const auto& a : names) {
            t.check(same_graph(local_complement(local_complement(g, a), a), g),
                    [&] { return "(G^a)^a != G at " + a + " on\n" + gdesc(g); });
        }
        std::vector<VertexSet> sets = exhaustive_sets ? all_subsets(g) : sampled_subsets(g, 4);
        for (const auto& a : names) {
            for (const auto& b : names) {
                if (a >= b) continue;
                Graph gab = pivot(g, a, b);
                t.check(same_graph(gab, pivot(g, b, a)),
                        [&] { return "G^ab != G^ba at " + a + b + " on\n" + gdesc(g); });
                t.check(same_graph(pivot(gab, a, b), g),
                        [&] { return "(G^ab)^ab != G at " + a + b + " on\n" + gdesc(g); });
                for (const auto& x : sets) {
                    t.check(same_graph(pivot(toggle_loops(g, x), a, b), toggle_loops(gab, x)),
                            [&] { return "(GnabX)^ab != G^ab nab X on\n" + gdesc(g); });
                }
            }
        }
        // (2),(3): ordered pairs with b in N(G,a); h swaps a and b. The loop
        // toggle lands on a only when a and b have equal loop status (the
        // loop-free situation of [ABS04b]); with exactly one loop it lands on
        // b, and the unconditional nabla-a form fails.
        for (const auto& a : names) {
            for (const auto& b : neighbors(g, a)) {
                VertexSet tgt = (g.looped(a) == g.looped(b)) ? VertexSet{a} : VertexSet{b};
                Graph gab = pivot(g, a, b);
                std::map<VertexId, VertexId> swap{{a, b}, {b, a}};
                Graph inner = local_complement(local_complement(local_complement(g, a), b), a);
                t.check(same_graph(gab, renamed(toggle_loops(inner, tgt), swap)),
                        [&] { return "Lemma 1(2) h-form fails on\n" + gdesc(g); });
                t.check(same_graph(delete_vertices(gab, {a, b}), delete_vertices(inner, {a, b})),
                        [&] { return "Lemma 1(2) deleted form fails on\n" + gdesc(g); });
                Graph gab_b = local_complement(gab, b);
                Graph ga_b = local_complement(local_complement(g, a), b);
                t.check(same_graph(gab_b, renamed(toggle_loops(ga_b, tgt), swap)),
                        [&] { return "Lemma 1(3) h-form fails on\n" + gdesc(g); });
                t.check(
                    same_graph(delete_vertices(gab_b, {a, b}), delete_vertices(ga_b, {a, b})),
                    [&] { return "Lemma 1(3) deleted form fails on\n" + gdesc(g); });
            }
        }
        // (4) per-vertex and induced forms; (5) with a,b inside X
        for (const auto& x : sets) {
            for (const auto& a : names) {
                t.check(same_graph(local_complement(toggle_loops(g, x), a),
                                   toggle_loops(local_complement(g, a), x)),
                        [&] { return "(GnabX)^a != G^a nab X on\n" + gdesc(g); });
            }
            for (const auto& y : sets) {
                inter.clear();
                for (const auto& v : x)
                    if (y.count(v)) inter.insert(v);
                t.check(same_graph(induced(toggle_loops(g, x), y), toggle_loops(induced(g, y), inter)),
                        [&] { return "GnabX[Y] != G[Y] nab (X&Y) on\n" + gdesc(g); });
            }
            for (const auto& a : names) {
                if (!x.count(a)) continue;
                t.check(same_graph(local_complement(induced(g, x), a),
                                   induced(local_complement(g, a), x)),
                        [&] { return "G[X]^a != G^a[X] on\n" + gdesc(g); });
                for (const auto& b : names) {
                    if (b <= a || !x.count(b)) continue;
                    t.check(same_graph(pivot(induced(g, x), a, b), induced(pivot(g, a, b), x)),
                            [&] { return "G[X]^ab != G^ab[X] on\n" + gdesc(g); });
                }
            }
        }
    };

    for (std::size_t n = 1; n <= 4; ++n) for_each_graph(n, [&](const Graph& g) { run(g, true); });
    for_each_graph(5, [&](const Graph& g) { run(g, false); });
    for (int i = 0; i < 1000; ++i) {
        std::size_t n = 1 + (rng() % 10);
        run(random_graph(n, rng), false);
    }
    return finish("lemma1", t, "exhaustive n<=5, 1000 random n<=10", t0);
}

CheckResult chk_lemma2() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto run = [&](const Graph& g) {
        std::size_t rk = graph_rank(g);
        for (const auto& a : g.vertices()) {
            if (g.looped(a)) {
                Graph red = delete_vertex(local_complement(g, a), a);
                t.check(rk == 1 + graph_rank(red),
                        [&] { return "Lemma 2(1) fails at " + a + " on\n" + gdesc(g); });
            }
            for (const auto& b : g.vertices()) {
                if (a == b || !g.adjacent(a, b)) continue;
                Graph gab = pivot(g, a, b);
                if (!g.looped(a) && !g.looped(b)) {
                    t.check(rk == 2 + graph_rank(delete_vertices(gab, {a, b})),
                            [&] { return "Lemma 2(2) fails at " + a + b + " on\n" + gdesc(g); });
                    t.check(graph_rank(delete_vertex(g, a)) == graph_rank(delete_vertex(gab, a)),
                            [&] { return "Lemma 2(3) fails at " + a + b + " on\n" + gdesc(g); });
                }
                if (g.looped(a) && !g.looped(b)) {
                    Graph gb = local_complement(local_complement(g, a), b);
                    t.check(rk == 2 + graph_rank(delete_vertices(gb, {a, b})),
                            [&] { return "Lemma 2(4a) fails at " + a + b + " on\n" + gdesc(g); });
                    // Second equality, misprint corrected: the loop moves onto
                    // b and the looped endpoint is deleted. (As printed,
                    // 1+rk(G^ab-b) already fails on a^l with edges ab, ac.)
                    t.check(rk == 1 + graph_rank(delete_vertex(toggle_loops(gab, {b}), a)),
                            [&] { return "Lemma 2(4b) fails at " + a + b + " on\n" + gdesc(g); });
                }
            }
        }
    };
    for (std::size_t n = 1; n <= 5; ++n) for_each_graph(n, [&](const Graph& g) { run(g); });
    auto rng = seeded(8);
    for (int i = 0; i < 1000; ++i) run(random_graph(1 + (rng() % 10), rng));
    // Negative witness: the uncorrected print of 2(4b) fails on this graph.
    Graph w = Graph::from_edges({"a", "b", "c"}, {{"a", "a"}, {"a", "b"}, {"a", "c"}});
    t.check_str(graph_rank(w) != 1 + graph_rank(delete_vertex(pivot(w, "a", "b"), "b")),
                "printed form of 2(4b) unexpectedly holds on the witness graph");
    return finish("lemma2", t, "exhaustive n<=5, 1000 random n<=10; 2(4b) misprint corrected", t0);
}

CheckResult chk_counterexample14() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    Graph g = Graph::from_edges({"a", "b", "c", "d"}, {{"c", "a"}, {"a", "b"}, {"b", "d"}});
    Graph gab = pivot(g, "a", "b");
    Graph expected = Graph::from_edges({"a", "b", "c", "d"},
                                       {{"c", "a"}, {"a", "b"}, {"b", "d"}, {"c", "d"}});
    t.check_str(same_graph(gab, expected), "G^ab is not G augmented with c-d");

    MultiPoly lhs = brute_force_B(delete_vertex(g, "a")) -
                    brute_force_B(delete_vertices(g, {"a", "b"}));
    MultiPoly rhs = brute_force_B(delete_vertex(gab, "a")) -
                    brute_force_B(delete_vertices(gab, {"a", "b"}));
    t.check_str(lhs != rhs, "equality (*) unexpectedly holds for c-a-b-d");

    // The witness of the counter-example: the sole y_b y_c x_d monomial has
    // u-exponent 3 on the left and 2 on the right (its v-exponent is the
    // complementary corank).
    auto u_exponents_of_ybycxd = [&](const MultiPoly& p) {
        std::vector<int> exps;
        VarId yb = intern(Indeterminate::indexed("y", "b"));
        VarId yc = intern(Indeterminate::indexed("y", "c"));
        VarId xd = intern(Indeterminate::indexed("x", "d"));
        VarId u = intern(Indeterminate::ordinary("u"));
        for (const auto& [pp, c] : p.terms()) {
            bool has_yb = false, has_yc = false, has_xd = false, other = false;
            int uexp = 0;
            for (const auto& [id, e] : pp) {
                if (id == yb && e == 1)
                    has_yb = true;
                else if (id == yc && e == 1)
                    has_yc = true;
                else if (id == xd && e == 1)
                    has_xd = true;
                else if (id == u)
                    uexp = e;
                else if (var_info(id).kind == VarKind::VertexIndexed)
                    other = true;
            }
            if (has_yb && has_yc && has_xd && !other && c == 1) exps.push_back(uexp);
        }
        return exps;
    };
    auto left_exps = u_exponents_of_ybycxd(lhs);
    auto right_exps = u_exponents_of_ybycxd(rhs);
    t.check_str(left_exps == std::vector<int>{3},
                "left side does not carry y_b y_c x_d on u^3 alone");
    t.check_str(right_exps == std::vector<int>{2},
                "right side does not carry y_b y_c x_d on u^2 alone");
    t.check_str(graph_rank(Graph::from_edges({"b", "c", "d"},
                                             {{"c", "c"}, {"b", "b"}, {"d", "b"}})) == 3,
                "rk(c^l + (d-b^l)) != 3");
    t.check_str(graph_rank(Graph::from_edges({"b", "c", "d"},
                                             {{"c", "c"}, {"b", "b"}, {"d", "b"}, {"c", "d"}})) == 2,
                "rk(c^l-d-b^l) != 2");

    // The two sufficient conditions: (*) holds under u := 0 and under y := 0.
    Substitution u0;
    u0.set(Indeterminate::ordinary("u"), 0);
    t.check_str(substitute(lhs, u0) == substitute(rhs, u0), "(*) fails under u := 0");
    t.check_str(substitute(lhs, subst_sigma0()) == substitute(rhs, subst_sigma0()),
                "(*) fails under y := 0");
    return finish("counterexample14", t,
                  "(*) fails with witness y_b y_c x_d: u^3 left vs u^2 right; holds under u:=0 "
                  "and y:=0",
                  t0);
}

/// Ordered pairs a,b with a-b (adjacent, both unlooped); when all_pairs is
/// false, just both orders of the name-least such pair.
std::vector<std::pair<VertexId, VertexId>> plain_edges(const Graph& g, bool all_pairs) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& a : g.vertices()) {
        if (g.looped(a)) continue;
        for (const auto& b : neighbors(g, a)) {
            if (g.looped(b)) continue;
            if (!all_pairs) return {{a, b}, {b, a}};
            out.emplace_back(a, b);
        }
    }
    return out;
}

CheckResult chk_prop15() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto run = [&](const Graph& g, bool all_pairs) {
        for (const auto& [a, b] : plain_edges(g, all_pairs)) {
            MultiPoly lhs = brute_force_B(delete_vertex(g, a)) -
                            brute_force_B(delete_vertices(g, {a, b})) -
                            brute_force_B(delete_vertex(pivot(g, a, b), a)) +
                            brute_force_B(delete_vertices(pivot(g, a, b), {a, b}));
            Graph gb = local_complement(g, b);
            Graph gab_lc = local_complement(local_complement(g, a), b);
            MultiPoly rhs = Y(b) * U() *
                            (brute_force_B(delete_vertices(gb, {a, b})) -
                             brute_force_B(delete_vertices(gab_lc, {a, b})));
            t.check(lhs == rhs, [&] { return "Prop 15 fails at " + a + b + " on\n" + gdesc(g); });
        }
    };
    for (std::size_t n = 2; n <= 4; ++n) for_each_graph(n, [&](const Graph& g) { run(g, true); });
    for_each_graph(5, [&](const Graph& g) { run(g, false); });
    auto rng = seeded(15);
    for (int i = 0; i < 60; ++i) run(random_graph(5 + (rng() % 4), rng), false);
    return finish("prop15", t, "all pairs n<=4, least pair n=5 exhaustive, random n<=8", t0);
}

CheckResult chk_prop15a() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    for (std::size_t n = 0; n <= 5; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            MultiPoly b = brute_force_B(g);
            t.check(is_positive(b), [&] { return "B(G) not positive on\n" + gdesc(g); });
            for (const auto& a : g.vertices()) {
                t.check(is_positive(b - brute_force_B(delete_vertex(g, a))),
                        [&] { return "B(G)-B(G-a) not positive at " + a + " on\n" + gdesc(g); });
            }
        });
    }
    return finish("prop15a", t, "all graphs n<=5, every vertex", t0);
}

CheckResult chk_cor17() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto run = [&](const Graph& g, bool all_pairs) {
        for (const auto& [a, b] : plain_edges(g, all_pairs)) {
            Graph gab = pivot(g, a, b);
            MultiPoly lhs = by0_static(delete_vertex(g, a)) -
                            by0_static(delete_vertices(g, {a, b}));
            MultiPoly rhs = by0_static(delete_vertex(gab, a)) -
                            by0_static(delete_vertices(gab, {a, b}));
            t.check(lhs == rhs, [&] { return "Cor 17 fails at " + a + b + " on\n" + gdesc(g); });
        }
    };
    for (std::size_t n = 2; n <= 5; ++n) for_each_graph(n, [&](const Graph& g) { run(g, true); });
    auto rng = seeded(17);
    for (int i = 0; i < 100; ++i) run(random_graph(5 + (rng() % 4), rng), false);
    return finish("cor17", t, "all pairs n<=5 exhaustive, random n<=8", t0);
}

CheckResult chk_prop19() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto rng = seeded(19);
    for (std::size_t n = 0; n <= 4; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            MultiPoly base = b_xy(g, BxyMethod::Recursion);
            t.check(base == b_xy(g, BxyMethod::Substitution),
                    [&] { return "B_xy methods disagree on\n" + gdesc(g); });
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                VertexSet tset;
                for (std::size_t i = 0; i < n; ++i)
                    if ((m >> i) & 1) tset.insert(g.vertices()[i]);
                t.check(b_xy(toggle_loops(g, tset), BxyMethod::Recursion) == base,
                        [&] { return "B_xy(G nab T) != B_xy(G) on\n" + gdesc(g); });
            }
        });
    }
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(5 + (rng() % 3), rng);
        VertexSet tset = random_subset(g, rng);
        t.check(b_xy(toggle_loops(g, tset), BxyMethod::Recursion) == b_xy(g, BxyMethod::Recursion),
                [&] { return "B_xy(G nab T) != B_xy(G) on\n" + gdesc(g); });
    }
    return finish("prop19", t, "loop insensitivity; methods agree", t0);
}

CheckResult chk_claim8() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto run = [&](const Graph& g, bool all_pairs) {
        for (const auto& [a, b] : plain_edges(g, all_pairs)) {
            auto bij = bij_all(g, a, b);
            Graph gab = pivot(g, a, b);
            Graph ga = local_complement(g, a);
            Graph gb = local_complement(g, b);
            Graph ga_b = local_complement(ga, b);
            Graph gb_a = local_complement(gb, a);
            // Claim 7
            t.check(bij[0][0] == brute_force_B(delete_vertices(g, {a, b})),
                    [&] { return "Claim 7(1) fails on\n" + gdesc(g); });
            t.check(bij[1][1] ==
                        X(a) * X(b) * U(2) * brute_force_B(delete_vertices(gab, {a, b})),
                    [&] { return "Claim 7(2) fails on\n" + gdesc(g); });
            t.check(bij[2][0] == Y(a) * U() * brute_force_B(delete_vertices(ga, {a, b})),
                    [&] { return "Claim 7(3a) fails on\n" + gdesc(g); });
            t.check(bij[0][2] == Y(b) * U() * brute_force_B(delete_vertices(gb, {a, b})),
                    [&] { return "Claim 7(3b) fails on\n" + gdesc(g); });
            t.check(bij[1][2] ==
                        X(a) * Y(b) * U(2) * brute_force_B(delete_vertices(gb_a, {a, b})),
                    [&] { return "Claim 7(4a) fails on\n" + gdesc(g); });
            t.check(bij[2][1] ==
                        X(b) * Y(a) * U(2) * brute_force_B(delete_vertices(ga_b, {a, b})),
                    [&] { return "Claim 7(4b) fails on\n" + gdesc(g); });
            // Claim 8
            t.check(brute_force_B(delete_vertex(g, a)) == bij[0][0] + bij[0][1] + bij[0][2],
                    [&] { return "Claim 8(1) fails on\n" + gdesc(g); });
            t.check(brute_force_B(delete_vertex(g, b)) == bij[0][0] + bij[1][0] + bij[2][0],
                    [&] { return "Claim 8(2) fails on\n" + gdesc(g); });
            t.check(U() * Y(a) * brute_force_B(delete_vertex(ga, a)) ==
                        bij[2][0] + bij[2][1] + bij[2][2],
                    [&] { return "Claim 8(3) fails on\n" + gdesc(g); });
            t.check(U() * Y(b) * brute_force_B(delete_vertex(gb, b)) ==
                        bij[0][2] + bij[1][2] + bij[2][2],
                    [&] { return "Claim 8(4) fails on\n" + gdesc(g); });
            // Sum of all nine parts is B(G)
            MultiPoly sum;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) sum += bij[i][j];
            t.check(sum == brute_force_B(g), [&] { return "sum of B_ij != B on\n" + gdesc(g); });
        }
    };
    for (std::size_t n = 2; n <= 4; ++n) for_each_graph(n, [&](const Graph& g) { run(g, true); });
    for_each_graph(5, [&](const Graph& g) { run(g, false); });
    auto rng = seeded(78);
    for (int i = 0; i < 30; ++i) run(random_graph(5 + (rng() % 3), rng), false);
    return finish("claim8", t, "Claims 7 and 8 partial-sum identities", t0);
}

CheckResult chk_cor10() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto run = [&](const Graph& g, bool all_pairs) {
        for (const auto& [a, b] : plain_edges(g, all_pairs)) {
            Graph ga = local_complement(g, a);
            Graph gb = local_complement(g, b);
            Graph ga_b = local_complement(ga, b);
            Graph gb_a = local_complement(gb, a);
            // As derived from Claims 7 and 8 (two expressions for B_22): the
            // y_b side carries (G^b)^a and the y_a side (G^a)^b. The printed
            // corollary transposes the two pivoted graphs.
            MultiPoly lhs = Y(b) * (brute_force_B(delete_vertex(gb, b)) -
                                    brute_force_B(delete_vertices(gb, {a, b})) -
                                    X(a) * U() * brute_force_B(delete_vertices(gb_a, {a, b})));
            MultiPoly rhs = Y(a) * (brute_force_B(delete_vertex(ga, a)) -
                                    brute_force_B(delete_vertices(ga, {a, b})) -
                                    X(b) * U() * brute_force_B(delete_vertices(ga_b, {a, b})));
            t.check(lhs == rhs, [&] { return "Cor 10 fails at " + a + b + " on\n" + gdesc(g); });
        }
    };
    for (std::size_t n = 2; n <= 4; ++n) for_each_graph(n, [&](const Graph& g) { run(g, true); });
    for_each_graph(5, [&](const Graph& g) { run(g, false); });
    auto rng = seeded(10);
    for (int i = 0; i < 30; ++i) run(random_graph(5 + (rng() % 3), rng), false);
    return finish("cor10", t, "two expressions of B_22 agree", t0);
}

CheckResult chk_lemma4() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto rng = seeded(4);
    auto run = [&](const Graph& g, const std::vector<VertexSet>& tsets) {
        MultiPoly b = brute_force_B(g);
        t.check(theta_expand(specialize_B1(b)) == b,
                [&] { return "theta(B1(G)) != B(G) on\n" + gdesc(g); });
        for (const auto& tset : tsets) {
            t.check(brute_force_B(toggle_loops(g, tset)) == substitute(b, subst_mu(tset)),
                    [&] { return "B(G nab T) != mu(B(G)) on\n" + gdesc(g); });
            t.check(substitute(substitute(b, subst_mu(tset)), subst_mu(tset)) == b,
                    [&] { return "mu is not an involution on\n" + gdesc(g); });
        }
    };
    for (std::size_t n = 0; n <= 4; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            std::vector<VertexSet> tsets;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                VertexSet s;
                for (std::size_t i = 0; i < n; ++i)
                    if ((m >> i) & 1) s.insert(g.vertices()[i]);
                tsets.push_back(std::move(s));
            }
            run(g, tsets);
        });
    }
    for (int i = 0; i < 80; ++i) {
        Graph g = random_graph(5 + (rng() % 3), rng);
        run(g, {random_subset(g, rng), random_subset(g, rng)});
    }
    return finish("lemma4", t, "theta reconstruction and loop-toggle substitution", t0);
}

CheckResult chk_by0_rules() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto run = [&](const Graph& g, bool with_substitution) {
        MultiPoly oracle = by0_static(g);
        t.check(b_y0(g, By0Method::RecursionProp16) == oracle,
                [&] { return "Prop 16 recursion != static B_y0 on\n" + gdesc(g); });
        t.check(b_y0(g, By0Method::RecursionCor18) == oracle,
                [&] { return "Cor 18 recursion != static B_y0 on\n" + gdesc(g); });
        if (with_substitution)
            t.check(b_y0(g, By0Method::Substitution) == oracle,
                    [&] { return "sigma_0(B) != static B_y0 on\n" + gdesc(g); });
    };
    for (std::size_t n = 0; n <= 4; ++n) for_each_graph(n, [&](const Graph& g) { run(g, true); });
    for_each_graph(5, [&](const Graph& g) { run(g, false); });
    auto rng = seeded(16);
    for (int i = 0; i < 100; ++i) run(random_graph(5 + (rng() % 4), rng), i < 30);
    return finish("by0-rules", t, "Prop 16 vs Cor 18 vs substitution vs subset oracle", t0);
}

CheckResult chk_q_rules() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto run = [&](const Graph& g, bool with_substitution) {
        MultiPoly a = q_poly(g, QMethod::RecursionQ123);
        t.check(a == q_poly(g, QMethod::RecursionQ3Prime),
                [&] { return "(q3) and (q3') recursions disagree on\n" + gdesc(g); });
        if (with_substitution)
            t.check(a == q_poly(g, QMethod::Substitution),
                    [&] { return "q recursion != sigma(B) on\n" + gdesc(g); });
    };
    for (std::size_t n = 0; n <= 5; ++n) for_each_graph(n, [&](const Graph& g) { run(g, true); });
    auto rng = seeded(3);
    for (int i = 0; i < 100; ++i) run(random_graph(5 + (rng() % 4), rng), i < 40);
    // (q1): n isolated non-looped vertices
    for (std::size_t n = 0; n <= 6; ++n) {
        Graph g(letter_names(n), SymBitMatrix(n));
        MultiPoly vp = MultiPoly::variable(Indeterminate::ordinary("v'"));
        t.check(q_poly(g, QMethod::RecursionQ123) == vp.pow(int(n)),
                [&] { return "q of isolated vertices != v'^n at n=" + std::to_string(n); });
    }
    return finish("q-rules", t, "(q1)-(q3) vs (q3') vs substitution", t0);
}

CheckResult chk_bigq_rules() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto run = [&](const Graph& g, bool with_substitution) {
        MultiPoly rec = big_q_poly(g, BigQMethod::Recursion);
        if (with_substitution)
            t.check(rec == big_q_poly(g, BigQMethod::Substitution),
                    [&] { return "Q recursion != tau(B) on\n" + gdesc(g); });
        t.check(is_positive(rec), [&] { return "Q not positive on\n" + gdesc(g); });
        // Q(G*b - b) = Q(G^b - b): the local complement side has loops, so it
        // goes through tau(B).
        for (const auto& b : g.vertices()) {
            if (neighbors(g, b).empty()) continue;
            MultiPoly star = big_q_poly(delete_vertex(star_complement(g, b), b),
                                        BigQMethod::Recursion);
            MultiPoly lc = big_q_poly(delete_vertex(local_complement(g, b), b),
                                      BigQMethod::Substitution);
            t.check(star == lc,
                    [&] { return "Q(G*b-b) != Q(G^b-b) at " + b + " on\n" + gdesc(g); });
            break;  // one vertex per graph keeps the 3^n side affordable
        }
    };
    for (std::size_t n = 0; n <= 5; ++n)
        for_each_loopfree_graph(n, [&](const Graph& g) { run(g, n <= 5); });
    auto rng = seeded(41);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(6 + (rng() % 2), rng);
        run(toggle_loops(g, g.loops()), i < 20);  // strip loops
    }
    return finish("bigq-rules", t, "(Q1)-(Q3) vs tau(B) on loop-free graphs; positivity", t0);
}

CheckResult chk_i_rules() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto stable_count = [](const Graph& g) {
        // independent stable-set enumeration, sizes tallied
        std::map<int, long long> sizes;
        const std::size_t n = g.size();
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                for (std::size_t j = i + 1; j < n && ok; ++j)
                    if (((s >> i) & 1) && ((s >> j) & 1) && g.adjacency().at(i, j)) ok = false;
            if (ok) ++sizes[std::popcount(s)];
        }
        return sizes;
    };
    auto run = [&](const Graph& g, bool with_substitution) {
        MultiPoly direct = b_independence(g, BIMethod::Direct);
        t.check(direct == b_independence(g, BIMethod::RecursionI14),
                [&] { return "(I1)-(I4) != direct B_I on\n" + gdesc(g); });
        t.check(direct == b_independence(g, BIMethod::RecursionI56),
                [&] { return "(I5)/(I6) != direct B_I on\n" + gdesc(g); });
        if (with_substitution) {
            t.check(direct == b_independence(g, BIMethod::Substitution),
                    [&] { return "eta'(B) != direct B_I on\n" + gdesc(g); });
            t.check(substitute(b_xy(g, BxyMethod::Recursion), subst_eta()) ==
                        independence_classical(g),
                    [&] { return "eta(B_xy) != I on\n" + gdesc(g); });
        }
        // (I7) at every unlooped edge
        for (const auto& a : g.vertices()) {
            if (g.looped(a)) continue;
            for (const auto& b : neighbors(g, a)) {
                if (g.looped(b) || b < a) continue;
                t.check(b_independence_via_I7(g, a, b) == direct,
                        [&] { return "(I7) fails at " + a + b + " on\n" + gdesc(g); });
            }
        }
        // classical I against the enumeration tally
        auto sizes = stable_count(g);
        MultiPoly expected;
        for (auto [k, cnt] : sizes)
            expected += MultiPoly::constant(cnt) *
                        MultiPoly::variable(Indeterminate::ordinary("v"), k);
        t.check(independence_classical(g) == expected,
                [&] { return "I(G,v) != stable-set tally on\n" + gdesc(g); });
    };
    for (std::size_t n = 0; n <= 5; ++n) for_each_graph(n, [&](const Graph& g) { run(g, n <= 4); });
    auto rng = seeded(21);
    for (int i = 0; i < 80; ++i) run(random_graph(5 + (rng() % 4), rng), i < 20);
    return finish("i-rules", t, "I recursions, (I7), eta(B_xy) = I, stable-set tally", t0);
}

CheckResult chk_prop5() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    for (std::size_t n = 0; n <= 4; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            MultiPoly rho_b = substitute(brute_force_B(g), subst_rho());
            Graph back = reconstruct_graph(rho_b);
            t.check(same_graph(back, g),
                    [&] { return "Prop 5 round trip fails on\n" + gdesc(g); });
        });
    }
    return finish("prop5", t, "reconstruct(rho(B(G))) = G for all n<=4", t0);
}

CheckResult chk_prop19_2() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    for (std::size_t n = 0; n <= 4; ++n) {
        for_each_loopfree_graph(n, [&](const Graph& g) {
            MultiPoly rho = substitute(b_xy(g, BxyMethod::Recursion), subst_rho_xy());
            Graph back = reconstruct_loopfree(rho);
            t.check(same_graph(back, g),
                    [&] { return "Prop 19(2) round trip fails on\n" + gdesc(g); });
        });
    }
    return finish("prop19-2", t, "loop-free reconstruction from rho(B_xy) for all n<=4", t0);
}

CheckResult chk_pivot_choice() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    for (std::size_t n = 2; n <= 4; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            MultiPoly brute = brute_force_B(g);
            for (const auto& a : g.vertices()) {
                for (const auto& b : neighbors(g, a)) {
                    t.check(recursive_B_with_pair(g, a, b) == brute, [&] {
                        return "recursion depends on pivot pair " + a + b + " on\n" + gdesc(g);
                    });
                }
            }
        });
    }
    return finish("pivot-choice", t, "rule (3) at every valid ordered pair, n<=4", t0);
}

CheckResult chk_determinism() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto rng = seeded(99);
    for (int i = 0; i < 10; ++i) {
        Graph g = random_graph(6, rng);
        std::string s1 = canonical_text(brute_force_B(g));
        std::string s2 = canonical_text(brute_force_B(g));
        t.check(s1 == s2, [&] { return "brute force text not reproducible on\n" + gdesc(g); });
        t.check(canonical_text(recursive_B(g)) == s1,
                [&] { return "recursive text differs from brute text on\n" + gdesc(g); });
        t.check(parse_poly(s1) == brute_force_B(g),
                [&] { return "parse(canonical_text) round trip fails on\n" + gdesc(g); });
    }
    return finish("determinism", t, "byte-identical rendering across recomputation", t0);
}

KExprPtr random_kexpr(std::mt19937& rng, int constants, int k) {
    auto rnd_label = [&] { return 1 + int(rng() % k); };
    std::function<KExprPtr(int)> build = [&](int n) -> KExprPtr {
        KExprPtr node;
        if (n == 1) {
            auto c = std::make_shared<KExpr>();
            c->kind = KExpr::Kind::Const;
            c->label = rnd_label();
            c->looped = (rng() % 3) == 0;
            node = c;
        } else {
            int left = 1 + int(rng() % (n - 1));
            auto u = std::make_shared<KExpr>();
            u->kind = KExpr::Kind::Union;
            u->child = build(left);
            u->right = build(n - left);
            node = u;
        }
        int wraps = int(rng() % 3);
        for (int i = 0; i < wraps; ++i) {
            auto w = std::make_shared<KExpr>();
            w->label = rnd_label();
            w->label2 = rnd_label();
            if (w->label == w->label2) {
                w->kind = KExpr::Kind::Ren;  // ren(i,i,.) is a no-op but legal
            } else {
                w->kind = (rng() % 2) ? KExpr::Kind::Add : KExpr::Kind::Ren;
            }
            w->child = node;
            node = w;
        }
        return node;
    };
    return build(constants);
}

CheckResult chk_cwdp_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto rng = seeded(26);
    for (int i = 0; i < 100; ++i) {
        int k = 2 + int(rng() % 2);
        int constants = 1 + int(rng() % 12);
        KExprPtr e = random_kexpr(rng, constants, k);
        LabelledGraph lg = eval_kexpr(*e, k);
        MultiPoly full = b_independence(lg.graph, BIMethod::Direct);
        MultiPoly prev;
        for (int d = 0; d <= 4; ++d) {
            DpStats stats;
            MultiPoly dp = dp_bi_truncated(*e, k, d, &stats);
            t.check(dp == truncate(full, d), [&] {
                return "dp != truncated B_I for d=" + std::to_string(d) + " expr " +
                       format_kexpr(*e);
            });
            t.check(stats.max_table_entries <= (std::size_t{1} << k),
                    [&] { return "dp table exceeded 2^k entries for " + format_kexpr(*e); });
            if (d > 0)
                t.check(truncate(dp, d - 1) == prev,
                        [&] { return "dp not a refinement for " + format_kexpr(*e); });
            prev = dp;
        }
    }
    return finish("cwdp-oracle", t, "100 random k-expressions, k in {2,3}, d <= 4", t0);
}

CheckResult chk_cwdp_scaling() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    // Star S_{m-1} as a 2-expression: centre labelled 1, leaves labelled 2.
    auto star_expr = [](int leaves) {
        auto node = std::make_shared<KExpr>();
        node->kind = KExpr::Kind::Const;
        node->label = 2;
        KExprPtr acc = node;
        for (int i = 1; i < leaves; ++i) {
            auto leaf = std::make_shared<KExpr>();
            leaf->kind = KExpr::Kind::Const;
            leaf->label = 2;
            auto u = std::make_shared<KExpr>();
            u->kind = KExpr::Kind::Union;
            u->child = acc;
            u->right = leaf;
            acc = u;
        }
        auto centre = std::make_shared<KExpr>();
        centre->kind = KExpr::Kind::Const;
        centre->label = 1;
        auto u = std::make_shared<KExpr>();
        u->kind = KExpr::Kind::Union;
        u->child = acc;
        u->right = centre;
        auto add = std::make_shared<KExpr>();
        add->kind = KExpr::Kind::Add;
        add->label = 1;
        add->label2 = 2;
        add->child = u;
        return KExprPtr(add);
    };
    auto time_dp = [&](int constants) {
        KExprPtr e = star_expr(constants - 1);
        const int reps = 30;
        auto start = std::chrono::steady_clock::now();
        for (int r = 0; r < reps; ++r) {
            MultiPoly p = dp_bi_truncated(*e, 2, 2);
            if (p.is_zero()) throw std::logic_error("unexpected zero");
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        return std::max(secs, 1e-6);
    };
    double t10 = time_dp(10), t20 = time_dp(20), t40 = time_dp(40);
    double r1 = t20 / t10, r2 = t40 / t20;
    t.check_str(r1 < 50.0 && r2 < 50.0,
                "runtime ratios " + std::to_string(r1) + ", " + std::to_string(r2) + " exceed 50");
    std::ostringstream note;
    note << "10/20/40 constants: " << t10 << "s/" << t20 << "s/" << t40 << "s, ratios " << r1
         << ", " << r2 << " (brute force at 40 vertices would touch 3^40 > 10^19 configurations; "
                          "not attempted)";
    return finish("cwdp-scaling", t, note.str(), t0);
}

std::vector<std::pair<VertexId, VertexId>> edge_list(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j)
            if (g.adjacency().at(i, j)) edges.emplace_back(g.vertices()[i], g.vertices()[j]);
    return edges;
}

Matroid random_linear_matroid(std::mt19937& rng) {
    // Random GF(2) column vectors; bases = full-rank column subsets.
    std::size_t dim = 1 + rng() % 3;
    std::size_t m = dim + rng() % (7 - dim);
    std::vector<std::uint32_t> cols;
    for (std::size_t i = 0; i < m; ++i) cols.push_back(rng() % (1u << dim));
    auto subset_rank = [&](std::uint32_t mask) {
        std::vector<std::uint32_t> vs;
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1) vs.push_back(cols[i]);
        std::size_t r = 0;
        for (std::size_t bit = 0; bit < dim; ++bit) {
            std::uint32_t b = 1u << bit;
            std::size_t piv = vs.size();
            for (std::size_t i = r; i < vs.size(); ++i)
                if (vs[i] & b) {
                    piv = i;
                    break;
                }
            if (piv == vs.size()) continue;
            std::swap(vs[piv], vs[r]);
            for (std::size_t i = r + 1; i < vs.size(); ++i)
                if (vs[i] & b) vs[i] ^= vs[r];
            ++r;
        }
        return r;
    };
    std::uint32_t full = (1u << m) - 1;
    std::size_t r = subset_rank(full);
    std::vector<Element> ground;
    for (std::size_t i = 0; i < m; ++i) ground.push_back(std::to_string(i + 1));
    std::vector<ElementSet> bases;
    for (std::uint32_t mask = 0;; ++mask) {
        if (std::size_t(std::popcount(mask)) == r && subset_rank(mask) == r) {
            ElementSet b;
            for (std::size_t i = 0; i < m; ++i)
                if ((mask >> i) & 1) b.insert(ground[i]);
            bases.push_back(b);
        }
        if (mask == full) break;
    }
    return Matroid::from_bases(ground, bases);
}

CheckResult chk_matroid_partition() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto run = [&](const Matroid& m, const std::string& what) {
        const std::size_t n = m.ground_size();
        std::uint32_t full = (n == 0) ? 0 : (std::uint32_t{1} << n) - 1;
        // Interval cover count per subset.
        std::vector<int> covered(std::size_t{1} << n, 0);
        for (const auto& b : m.bases()) {
            auto act = m.activities(b);
            std::uint32_t bmask = 0, lo, freemask = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (b.count(m.ground()[i])) bmask |= 1u << i;
            lo = bmask;
            for (std::size_t i = 0; i < n; ++i) {
                if (act.internal.count(m.ground()[i])) {
                    lo &= ~(1u << i);
                    freemask |= 1u << i;
                }
                if (act.external.count(m.ground()[i])) freemask |= 1u << i;
            }
            for (std::uint32_t sub = 0;; sub = (sub - freemask) & freemask) {
                ++covered[lo | sub];
                if (sub == freemask) break;
            }
        }
        bool exact = true;
        for (std::uint32_t mask = 0; mask <= full && exact; ++mask)
            if (covered[mask] != 1) exact = false;
        t.check_str(exact, "activity intervals do not partition P(E) for " + what);
        // Decomposition invariants on every subset.
        for (std::uint32_t mask = 0;; ++mask) {
            ElementSet a;
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1) a.insert(m.ground()[i]);
            auto dec = m.activity_interval_decompose(a);
            std::size_t inter = 0;
            for (const auto& e : a)
                if (dec.basis.count(e)) ++inter;
            t.check(m.rank_subset(a) == inter,
                    [&] { return "r(A) != |A & B| in decomposition for " + what; });
            auto act = m.activities(dec.basis);
            bool c_ok = std::includes(act.internal.begin(), act.internal.end(), dec.c.begin(),
                                      dec.c.end());
            bool d_ok = std::includes(act.external.begin(), act.external.end(), dec.d.begin(),
                                      dec.d.end());
            t.check(c_ok && d_ok, [&] { return "C or D escapes the activity sets for " + what; });
            if (mask == full) break;
        }
    };
    for (std::size_t n = 0; n <= 4; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            run(Matroid::graphic(g, edge_list(g)), "graphic matroid of\n" + gdesc(g));
        });
    }
    auto rng = seeded(82);
    for (int i = 0; i < 50; ++i) run(random_linear_matroid(rng), "random matroid " + std::to_string(i));
    return finish("matroid-partition", t,
                  "Prop A.2 on graphic matroids (all graphs n<=4) and 50 random matroids", t0);
}

CheckResult chk_tutte() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    MultiPoly x = MultiPoly::variable(Indeterminate::ordinary("x"));
    MultiPoly y = MultiPoly::variable(Indeterminate::ordinary("y"));

    auto run = [&](const Matroid& m, const std::string& what) {
        MultiPoly r = rank_polynomial(m);
        MultiPoly t_shift = tutte_polynomial(m, TutteMethod::RankShift);
        MultiPoly t_act = tutte_polynomial(m, TutteMethod::Activities);
        MultiPoly t_tilde = multivariate_tutte(m);
        MultiPoly r_tilde = multivariate_rank_tilde(m);
        MultiPoly r_hat = rhat_polynomial(m);
        t.check(t_shift == t_act, [&] { return "T methods disagree for " + what; });
        t.check(substitute(t_tilde, subst_collapse_xy()) == t_shift,
                [&] { return "sigma(Ttilde) != T for " + what; });
        t.check(is_positive(t_tilde) && is_positive(t_shift),
                [&] { return "T or Ttilde not positive for " + what; });
        t.check(substitute(r_tilde, subst_collapse_xy()) == r,
                [&] { return "sigma(Rtilde) != R for " + what; });
        t.check(shift_minus(r_tilde) == t_tilde, [&] { return "Rtilde^- != Ttilde for " + what; });
        t.check(substitute(r_hat, subst_collapse_xy()) == r,
                [&] { return "sigma(Rhat) != R for " + what; });
    };

    // Sokal relation on graphic matroids: alpha(Z(G)) = (x-1)^k(G) (y-1)^|V| T(M).
    auto sokal = [&](const Graph& g) {
        auto edges = edge_list(g);
        if (edges.size() > 8) return;
        Matroid m = Matroid::graphic(g, edges);
        auto components = [&](std::uint32_t mask) {
            std::vector<std::size_t> parent(g.size());
            std::iota(parent.begin(), parent.end(), 0);
            std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
                while (parent[v] != v) v = parent[v] = parent[parent[v]];
                return v;
            };
            std::size_t comps = g.size();
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (!((mask >> i) & 1)) continue;
                auto ra = find(g.index_of(edges[i].first)), rb = find(g.index_of(edges[i].second));
                if (ra != rb) {
                    parent[ra] = rb;
                    --comps;
                }
            }
            return comps;
        };
        MultiPoly alpha_z;
        std::uint32_t full = edges.empty() ? 0 : (std::uint32_t{1} << edges.size()) - 1;
        for (std::uint32_t mask = 0;; ++mask) {
            alpha_z += ((x - 1) * (y - 1)).pow(int(components(mask))) *
                       (y - 1).pow(int(std::popcount(mask)));
            if (mask == full) break;
        }
        MultiPoly rhs = (x - 1).pow(int(components(full))) * (y - 1).pow(int(g.size())) *
                        tutte_polynomial(m, TutteMethod::RankShift);
        t.check(alpha_z == rhs, [&] { return "Sokal alpha(Z) relation fails on\n" + gdesc(g); });
    };

    for (std::size_t n = 0; n <= 4; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            Matroid m = Matroid::graphic(g, edge_list(g));
            run(m, "graphic matroid of\n" + gdesc(g));
        });
        for_each_graph(n, [&](const Graph& g) { sokal(g); });
    }
    auto rng = seeded(93);
    for (int i = 0; i < 30; ++i) run(random_linear_matroid(rng), "random matroid " + std::to_string(i));

    // K3 cycle matroid anchor.
    Graph k3 = Graph::from_edges({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
    Matroid mk3 = Matroid::graphic(k3, edge_list(k3));
    MultiPoly expected = x * x + x + y;
    t.check_str(tutte_polynomial(mk3, TutteMethod::RankShift) == expected,
                "T(K3 cycle matroid) != x^2 + x + y via rank shift");
    t.check_str(tutte_polynomial(mk3, TutteMethod::Activities) == expected,
                "T(K3 cycle matroid) != x^2 + x + y via activities");
    t.check_str(multivariate_tutte(mk3).term_count() == 3,
                "Ttilde(K3) does not have one monomial per basis");
    return finish("tutte", t, "T = R^- = sigma(Ttilde), Rhat/Rtilde collapses, Sokal, K3 anchor",
                  t0);
}

CheckResult chk_lemmaA1() {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    std::vector<Element> universe{"a", "b", "c", "d"};
    auto downset_oracle = [&](const SetFamily& s) -> std::optional<ElementSet> {
        ElementSet u;
        for (const auto& a : s.members)
            for (const auto& e : a) u.insert(e);
        if (s.members.size() != (std::size_t{1} << u.size())) return std::nullopt;
        for (const auto& a : s.members)
            if (!std::includes(u.begin(), u.end(), a.begin(), a.end())) return std::nullopt;
        return u;  // |S| = 2^|u| with all members inside u forces S = Sub(u)
    };
    auto run = [&](const SetFamily& s, const std::string& what) {
        auto oracle = downset_oracle(s);
        auto got = check_sub_form(s);
        MultiPoly shifted = shift_minus(enum_poly(s));
        t.check(got == oracle, [&] { return "check_sub_form disagrees with oracle for " + what; });
        t.check(is_positive(shifted) == oracle.has_value(),
                [&] { return "positivity test disagrees with Sub(B) form for " + what; });
        if (oracle) {
            MultiPoly xb = 1;
            for (const auto& e : *oracle)
                xb *= MultiPoly::variable(Indeterminate::indexed("x", e));
            t.check(shifted == xb, [&] { return "Enum(S)^- != x_B for " + what; });
            t.check(shift_plus(shifted) == enum_poly(s),
                    [&] { return "(Enum^-)^+ != Enum for " + what; });
        }
    };
    // All Sub(B) families over the universe.
    for (std::uint32_t bm = 0; bm < 16; ++bm) {
        ElementSet b;
        for (std::size_t i = 0; i < 4; ++i)
            if ((bm >> i) & 1) b.insert(universe[i]);
        SetFamily s{universe, {}};
        std::vector<Element> bv(b.begin(), b.end());
        for (std::uint32_t sub = 0; sub < (1u << bv.size()); ++sub) {
            ElementSet a;
            for (std::size_t i = 0; i < bv.size(); ++i)
                if ((sub >> i) & 1) a.insert(bv[i]);
            s.members.insert(a);
        }
        run(s, "Sub family " + std::to_string(bm));
    }
    auto rng = seeded(65);
    for (int i = 0; i < 500; ++i) {
        SetFamily s{universe, {}};
        while (s.members.empty()) {
            for (std::uint32_t mask = 0; mask < 16; ++mask) {
                if (rng() % 2) continue;
                ElementSet a;
                for (std::size_t j = 0; j < 4; ++j)
                    if ((mask >> j) & 1) a.insert(universe[j]);
                s.members.insert(a);
            }
        }
        run(s, "random family " + std::to_string(i));
    }
    return finish("lemmaA1", t, "all Sub(B) families and 500 random nonempty families", t0);
}

const std::vector<std::pair<std::string, CheckResult (*)()>>& registry() {
    static const std::vector<std::pair<std::string, CheckResult (*)()>> reg = {
        {"rank-oracle", chk_rank_oracle},
        {"oracle-small", chk_oracle_small},
        {"oracle-random", chk_oracle_random},
        {"base-cases", chk_base_cases},
        {"lemma1", chk_lemma1},
        {"lemma2", chk_lemma2},
        {"counterexample14", chk_counterexample14},
        {"prop15", chk_prop15},
        {"prop15a", chk_prop15a},
        {"cor17", chk_cor17},
        {"prop19", chk_prop19},
        {"claim8", chk_claim8},
        {"cor10", chk_cor10},
        {"lemma4", chk_lemma4},
        {"by0-rules", chk_by0_rules},
        {"q-rules", chk_q_rules},
        {"bigq-rules", chk_bigq_rules},
        {"i-rules", chk_i_rules},
        {"prop5", chk_prop5},
        {"prop19-2", chk_prop19_2},
        {"pivot-choice", chk_pivot_choice},
        {"determinism", chk_determinism},
        {"cwdp-oracle", chk_cwdp_oracle},
        {"cwdp-scaling", chk_cwdp_scaling},
        {"matroid-partition", chk_matroid_partition},
        {"tutte", chk_tutte},
        {"lemmaA1", chk_lemmaA1},
    };
    return reg;
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

CheckResult run_check(const std::string& name) {
    for (const auto& [n, fn] : registry())
        if (n == name) return fn();
    throw std::invalid_argument("unknown check suite '" + name + "'");
}

std::vector<Graph> all_graphs(std::size_t n) {
    std::vector<Graph> out;
    out.reserve(pattern_count(n));
    for_each_graph(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

Graph random_graph(std::size_t n, std::mt19937& rng) {
    SymBitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (rng() % 2) m.set(i, j, true);
    return Graph(letter_names(n), std::move(m));
}

VertexSet random_subset(const Graph& g, std::mt19937& rng) {
    VertexSet s;
    for (const auto& v : g.vertices())
        if (rng() % 2) s.insert(v);
    return s;
}

}  // namespace interlace
