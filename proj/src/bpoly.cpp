#include "interlace/bpoly.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace interlace {

namespace {

Indeterminate ord_u() { return Indeterminate::ordinary("u"); }
Indeterminate ord_v() { return Indeterminate::ordinary("v"); }
Indeterminate var_x(const VertexId& a) { return Indeterminate::indexed("x", a); }
Indeterminate var_y(const VertexId& a) { return Indeterminate::indexed("y", a); }

MultiPoly U(int e = 1) { return MultiPoly::variable(ord_u(), e); }
MultiPoly V(int e = 1) { return MultiPoly::variable(ord_v(), e); }
MultiPoly X(const VertexId& a) { return MultiPoly::variable(var_x(a)); }
MultiPoly Y(const VertexId& a) { return MultiPoly::variable(var_y(a)); }

/// Metavariables of the reduction rules: (z_c, w_c) = (x_c, y_c) for an
/// unlooped c and (y_c, x_c) for a looped one, read off the current graph.
std::pair<MultiPoly, MultiPoly> metavars(const Graph& g, const VertexId& c) {
    if (g.looped(c)) return {Y(c), X(c)};
    return {X(c), Y(c)};
}

std::vector<VertexId> sorted_names(const Graph& g) {
    std::vector<VertexId> names = g.vertices();
    std::sort(names.begin(), names.end());
    return names;
}

/// Rank of the toggled induced submatrix adj[sel,sel] with the diagonal
/// flipped on the positions of b_mask. Rows fit one 64-bit word (|sel| <= 64).
std::size_t rank_of_selection(const SymBitMatrix& adj, const std::vector<std::size_t>& sel,
                              std::uint64_t b_mask) {
    const std::size_t k = sel.size();
    std::uint64_t rows[64];
    for (std::size_t p = 0; p < k; ++p) {
        std::uint64_t r = 0;
        for (std::size_t q = 0; q < k; ++q)
            if (adj.at(sel[p], sel[q])) r |= std::uint64_t{1} << q;
        if ((b_mask >> p) & 1) r ^= std::uint64_t{1} << p;
        rows[p] = r;
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < k; ++col) {
        std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t piv = k;
        for (std::size_t i = rank; i < k; ++i)
            if (rows[i] & bit) {
                piv = i;
                break;
            }
        if (piv == k) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t i = rank + 1; i < k; ++i)
            if (rows[i] & bit) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

struct BruteVars {
    std::vector<VarId> xs, ys;
    VarId u, v;
};

BruteVars intern_vars(const Graph& g) {
    BruteVars bv;
    bv.u = intern(ord_u());
    bv.v = intern(ord_v());
    for (const auto& name : g.vertices()) {
        bv.xs.push_back(intern(var_x(name)));
        bv.ys.push_back(intern(var_y(name)));
    }
    return bv;
}

/// Adds m(G,A,B) for the configuration given by vertex-index masks.
void add_configuration(MultiPoly& out, const Graph& g, const BruteVars& bv, std::uint64_t mask_a,
                       std::uint64_t mask_b) {
    std::vector<std::size_t> sel;
    std::uint64_t local_b = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool in_a = (mask_a >> i) & 1, in_b = (mask_b >> i) & 1;
        if (in_a || in_b) {
            if (in_b) local_b |= std::uint64_t{1} << sel.size();
            sel.push_back(i);
        }
    }
    std::size_t rk = rank_of_selection(g.adjacency(), sel, local_b);
    std::size_t cr = sel.size() - rk;
    PowerProduct pp;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if ((mask_a >> i) & 1) pp.emplace_back(bv.xs[i], 1);
        if ((mask_b >> i) & 1) pp.emplace_back(bv.ys[i], 1);
    }
    if (rk > 0) pp.emplace_back(bv.u, static_cast<int>(rk));
    if (cr > 0) pp.emplace_back(bv.v, static_cast<int>(cr));
    std::sort(pp.begin(), pp.end());
    out.add_term(pp, 1);
}

void check_brute_size(const Graph& g) {
    if (g.size() > 36)
        throw std::invalid_argument("brute_force_B: 3^n enumeration infeasible for n = " +
                                    std::to_string(g.size()));
}

}  // namespace

MultiPoly brute_force_B_serial(const Graph& g) {
    check_brute_size(g);
    const std::size_t n = g.size();
    BruteVars bv = intern_vars(g);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    MultiPoly out;
    for (std::uint64_t mask_a = 0;; mask_a = (mask_a + 1)) {
        std::uint64_t comp = full & ~mask_a;
        for (std::uint64_t mask_b = 0;; mask_b = (mask_b - comp) & comp) {
            add_configuration(out, g, bv, mask_a, mask_b);
            if (mask_b == comp) break;
        }
        if (mask_a == full) break;
    }
    return out;
}

MultiPoly brute_force_B(const Graph& g) {
    check_brute_size(g);
    const std::size_t n = g.size();
    BruteVars bv = intern_vars(g);
    long long total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;

#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    std::vector<MultiPoly> parts(threads);
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
    {
#ifdef _OPENMP
        int tid = omp_get_thread_num();
#else
        int tid = 0;
#endif
        MultiPoly local;
        for (long long t = tid; t < total; t += threads) {
            long long cfg = t;
            std::uint64_t mask_a = 0, mask_b = 0;
            for (std::size_t i = 0; i < n; ++i) {
                int d = static_cast<int>(cfg % 3);
                cfg /= 3;
                if (d == 1) mask_a |= std::uint64_t{1} << i;
                if (d == 2) mask_b |= std::uint64_t{1} << i;
            }
            add_configuration(local, g, bv, mask_a, mask_b);
        }
        parts[tid] = std::move(local);
    }
    MultiPoly out;
    for (MultiPoly& p : parts) out += p;
    return out;
}

MultiPoly configuration_monomial(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (const auto& v : a)
        if (b.count(v))
            throw std::invalid_argument("configuration_monomial: A and B intersect at '" + v + "'");
    BruteVars bv = intern_vars(g);
    std::uint64_t mask_a = 0, mask_b = 0;
    for (const auto& v : a) mask_a |= std::uint64_t{1} << g.index_of(v);
    for (const auto& v : b) mask_b |= std::uint64_t{1} << g.index_of(v);
    MultiPoly out;
    add_configuration(out, g, bv, mask_a, mask_b);
    return out;
}

namespace {

std::string graph_key(const Graph& g) {
    std::string key;
    for (const auto& v : g.vertices()) {
        key += v;
        key += '\x1f';
    }
    key += '|';
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j) key += g.adjacency().at(i, j) ? '1' : '0';
    return key;
}

using Memo = std::unordered_map<std::string, MultiPoly>;

MultiPoly recursive_b_impl(const Graph& g, Memo& memo);

/// The adjacent-pair rule of the recursion, expanded at a fixed pair.
MultiPoly rule3(const Graph& g, const VertexId& a, const VertexId& b, Memo& memo) {
    auto [za, wa] = metavars(g, a);
    auto [zb, wb] = metavars(g, b);
    Graph gab = pivot(g, a, b);
    Graph ga_b = local_complement(local_complement(g, a), b);
    Graph gb = local_complement(g, b);
    MultiPoly head = zb * U(2) *
                     (za * recursive_b_impl(delete_vertices(gab, {a, b}), memo) +
                      wa * recursive_b_impl(delete_vertices(ga_b, {a, b}), memo));
    MultiPoly mid = wb * U() *
                    (recursive_b_impl(delete_vertex(gb, b), memo) -
                     recursive_b_impl(delete_vertices(gb, {a, b}), memo));
    MultiPoly tail = recursive_b_impl(delete_vertex(g, a), memo) +
                     recursive_b_impl(delete_vertex(g, b), memo) -
                     recursive_b_impl(delete_vertices(g, {a, b}), memo);
    return head + mid + tail;
}

MultiPoly recursive_b_impl(const Graph& g, Memo& memo) {
    if (g.size() == 0) return 1;
    std::string key = graph_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    MultiPoly result;
    std::vector<VertexId> names = sorted_names(g);
    const VertexId* isolated = nullptr;
    for (const auto& v : names) {
        if (neighbors(g, v).empty()) {
            isolated = &v;
            break;
        }
    }
    if (isolated) {
        auto [z, w] = metavars(g, *isolated);
        result = (MultiPoly(1) + z * V() + w * U()) *
                 recursive_b_impl(delete_vertex(g, *isolated), memo);
    } else {
        const VertexId& a = names.front();
        const VertexId b = *neighbors(g, a).begin();
        result = rule3(g, a, b, memo);
    }
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

MultiPoly recursive_B(const Graph& g) {
    Memo memo;
    return recursive_b_impl(g, memo);
}

MultiPoly recursive_B_with_pair(const Graph& g, const VertexId& a, const VertexId& b) {
    if (!neighbors(g, a).count(b))
        throw std::invalid_argument("recursive_B_with_pair: '" + b + "' is not a neighbour of '" +
                                    a + "'");
    Memo memo;
    return rule3(g, a, b, memo);
}

MultiPoly intermediate_Bij(const Graph& g, const VertexId& a, const VertexId& b, int i, int j) {
    if (a == b) throw std::invalid_argument("intermediate_Bij: vertices must be distinct");
    if (i < 0 || i > 2 || j < 0 || j > 2)
        throw std::invalid_argument("intermediate_Bij: places must be 0, 1 or 2");
    std::size_t ia = g.index_of(a), ib = g.index_of(b);
    check_brute_size(g);
    BruteVars bv = intern_vars(g);
    const std::size_t n = g.size();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    MultiPoly out;
    for (std::uint64_t mask_a = 0;; mask_a = mask_a + 1) {
        std::uint64_t comp = full & ~mask_a;
        for (std::uint64_t mask_b = 0;; mask_b = (mask_b - comp) & comp) {
            int place_a = ((mask_a >> ia) & 1) ? 1 : ((mask_b >> ia) & 1) ? 2 : 0;
            int place_b = ((mask_a >> ib) & 1) ? 1 : ((mask_b >> ib) & 1) ? 2 : 0;
            if (place_a == i && place_b == j) add_configuration(out, g, bv, mask_a, mask_b);
            if (mask_b == comp) break;
        }
        if (mask_a == full) break;
    }
    return out;
}

MultiPoly specialize_B1(const MultiPoly& b) { return substitute(b, subst_v1()); }

MultiPoly theta_expand(const MultiPoly& b1) {
    VarId u_id = intern(ord_u());
    VarId v_id = intern(ord_v());
    MultiPoly out;
    for (const auto& [pp, c] : b1.terms()) {
        int u_exp = 0, v_exp = 0;
        PowerProduct rest;
        for (const auto& [id, e] : pp) {
            if (id == u_id)
                u_exp = e;
            else if (id == v_id)
                v_exp = e;
            else
                rest.emplace_back(id, e);
        }
        int qd = quasi_degree(pp);
        int new_v = v_exp + qd - u_exp;
        if (new_v < 0)
            throw std::invalid_argument(
                "theta_expand: u-exponent exceeds quasi-degree in monomial " + monomial_text(pp));
        if (u_exp > 0) rest.emplace_back(u_id, u_exp);
        if (new_v > 0) rest.emplace_back(v_id, new_v);
        std::sort(rest.begin(), rest.end());
        out.add_term(rest, c);
    }
    return out;
}

Substitution subst_sigma0() {
    Substitution s;
    s.set_family("y", 0);
    return s;
}

Substitution subst_sigma_eq() {
    Substitution s;
    s.set_family("y", X(Substitution::kSelf));
    return s;
}

Substitution subst_q() {
    Substitution s;
    s.set(ord_u(), MultiPoly::variable(Indeterminate::ordinary("u'")) - 1);
    s.set(ord_v(), MultiPoly::variable(Indeterminate::ordinary("v'")) - 1);
    s.set_family("x", 1);
    s.set_family("y", 0);
    return s;
}

Substitution subst_big_q() {
    Substitution s;
    s.set(ord_u(), 1);
    s.set(ord_v(), MultiPoly::variable(Indeterminate::ordinary("v'")) - 2);
    s.set_family("x", 1);
    s.set_family("y", 1);
    return s;
}

Substitution subst_rho() {
    Substitution s;
    s.set(ord_v(), 1);
    s.set_family("y", 0);
    return s;
}

Substitution subst_rho_xy() {
    Substitution s;
    s.set(ord_v(), 1);
    return s;
}

Substitution subst_eta() {
    Substitution s;
    s.set(ord_u(), 0);
    s.set_family("x", 1);
    return s;
}

Substitution subst_eta_prime() {
    Substitution s;
    s.set(ord_u(), 0);
    return s;
}

Substitution subst_v1() {
    Substitution s;
    s.set(ord_v(), 1);
    return s;
}

Substitution subst_mu(const VertexSet& t) {
    Substitution s;
    std::set<std::string> verts(t.begin(), t.end());
    s.set_family("x", Y(Substitution::kSelf), verts);
    s.set_family("y", X(Substitution::kSelf), verts);
    return s;
}

Substitution subst_ones() {
    Substitution s;
    s.set_family("x", 1);
    s.set_family("y", 1);
    return s;
}

namespace {

/// Shared scaffolding for the specialized recursions: memo keyed on the
/// labelled graph, one memo per top-level call.
template <typename Rule>
MultiPoly memoized(const Graph& g, Memo& memo, Rule&& rule) {
    if (g.size() == 0) return 1;
    std::string key = graph_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    MultiPoly result = rule(g);
    memo.emplace(std::move(key), result);
    return result;
}

std::optional<VertexId> least_looped(const Graph& g) {
    for (const auto& v : sorted_names(g))
        if (g.looped(v)) return v;
    return std::nullopt;
}

std::optional<VertexId> least_isolated(const Graph& g) {
    for (const auto& v : sorted_names(g))
        if (neighbors(g, v).empty()) return v;
    return std::nullopt;
}

/// Name-least vertex with a neighbour, and its name-least neighbour.
std::optional<std::pair<VertexId, VertexId>> least_adjacent_pair(const Graph& g) {
    for (const auto& v : sorted_names(g)) {
        VertexSet nb = neighbors(g, v);
        if (!nb.empty()) return std::make_pair(v, *nb.begin());
    }
    return std::nullopt;
}

MultiPoly b_y0_rec(const Graph& g, bool cor18, Memo& memo) {
    return memoized(g, memo, [&](const Graph& g) {
        if (auto a = least_looped(g)) {
            // (3): B_y0(G) = x_a u B_y0(G^a - a) + B_y0(G - a), a a loop
            return X(*a) * U() *
                       b_y0_rec(delete_vertex(local_complement(g, *a), *a), cor18, memo) +
                   b_y0_rec(delete_vertex(g, *a), cor18, memo);
        }
        if (auto a = least_isolated(g)) {
            return (MultiPoly(1) + X(*a) * V()) * b_y0_rec(delete_vertex(g, *a), cor18, memo);
        }
        auto [a, b] = *least_adjacent_pair(g);
        Graph gab = pivot(g, a, b);
        if (cor18) {
            // (4'): (x_b x_a u^2 - 1) B_y0(G^ab-a-b) + B_y0(G-a) + B_y0(G^ab-b)
            return (X(b) * X(a) * U(2) - 1) * b_y0_rec(delete_vertices(gab, {a, b}), cor18, memo) +
                   b_y0_rec(delete_vertex(g, a), cor18, memo) +
                   b_y0_rec(delete_vertex(gab, b), cor18, memo);
        }
        // (4): x_b x_a u^2 B_y0(G^ab-a-b) + B_y0(G-a) + B_y0(G-b) - B_y0(G-a-b)
        return X(b) * X(a) * U(2) * b_y0_rec(delete_vertices(gab, {a, b}), cor18, memo) +
               b_y0_rec(delete_vertex(g, a), cor18, memo) +
               b_y0_rec(delete_vertex(g, b), cor18, memo) -
               b_y0_rec(delete_vertices(g, {a, b}), cor18, memo);
    });
}

MultiPoly b_xy_rec(const Graph& g, Memo& memo) {
    return memoized(g, memo, [&](const Graph& g) {
        if (auto a = least_isolated(g)) {
            return (MultiPoly(1) + X(*a) * (U() + V())) * b_xy_rec(delete_vertex(g, *a), memo);
        }
        auto [a, b] = *least_adjacent_pair(g);
        Graph gab = pivot(g, a, b);
        Graph ga_b = local_complement(local_complement(g, a), b);
        Graph gb = local_complement(g, b);
        return X(a) * X(b) * U(2) *
                   (b_xy_rec(delete_vertices(gab, {a, b}), memo) +
                    b_xy_rec(delete_vertices(ga_b, {a, b}), memo)) +
               X(b) * U() *
                   (b_xy_rec(delete_vertex(gb, b), memo) -
                    b_xy_rec(delete_vertices(gb, {a, b}), memo)) +
               b_xy_rec(delete_vertex(g, a), memo) + b_xy_rec(delete_vertex(g, b), memo) -
               b_xy_rec(delete_vertices(g, {a, b}), memo);
    });
}

MultiPoly UP() { return MultiPoly::variable(Indeterminate::ordinary("u'")); }
MultiPoly VP() { return MultiPoly::variable(Indeterminate::ordinary("v'")); }

MultiPoly q_rec(const Graph& g, bool q3prime, Memo& memo) {
    return memoized(g, memo, [&](const Graph& g) {
        if (auto a = least_looped(g)) {
            // (q2): (u'-1) q(G^a-a) + q(G-a), a a loop
            return (UP() - 1) * q_rec(delete_vertex(local_complement(g, *a), *a), q3prime, memo) +
                   q_rec(delete_vertex(g, *a), q3prime, memo);
        }
        if (auto pair = least_adjacent_pair(g)) {
            auto [a, b] = *pair;
            Graph gab = pivot(g, a, b);
            if (q3prime) {
                // (q3'): ((u'-1)^2 - 1) q(G^ab-a-b) + q(G-a) + q(G^ab-b)
                return ((UP() - 1).pow(2) - 1) * q_rec(delete_vertices(gab, {a, b}), q3prime, memo) +
                       q_rec(delete_vertex(g, a), q3prime, memo) +
                       q_rec(delete_vertex(gab, b), q3prime, memo);
            }
            // (q3): (u'-1)^2 q(G^ab-a-b) + q(G-a) + q(G-b) - q(G-a-b)
            return (UP() - 1).pow(2) * q_rec(delete_vertices(gab, {a, b}), q3prime, memo) +
                   q_rec(delete_vertex(g, a), q3prime, memo) +
                   q_rec(delete_vertex(g, b), q3prime, memo) -
                   q_rec(delete_vertices(g, {a, b}), q3prime, memo);
        }
        // (q1): isolated non-looped vertices only
        return VP().pow(static_cast<int>(g.size()));
    });
}

MultiPoly big_q_rec(const Graph& g, Memo& memo) {
    return memoized(g, memo, [&](const Graph& g) {
        if (auto a = least_isolated(g)) {
            // (Q2), with the isolated-vertex factor tau(1 + z_a v + w_a u) = v'
            return VP() * big_q_rec(delete_vertex(g, *a), memo);
        }
        // (Q3): Q(G-b) + Q(G*b-b) + Q(G^ab-a), a in N(G,b)
        auto [b, a] = *least_adjacent_pair(g);
        return big_q_rec(delete_vertex(g, b), memo) +
               big_q_rec(delete_vertex(star_complement(g, b), b), memo) +
               big_q_rec(delete_vertex(pivot(g, a, b), a), memo);
    });
}

MultiPoly bi_selected(const Graph& g, const VertexId& a) {
    return (g.looped(a) ? Y(a) : X(a)) * V();
}

MultiPoly bi_rec14(const Graph& g, Memo& memo) {
    return memoized(g, memo, [&](const Graph& g) {
        if (auto a = least_isolated(g)) {
            // (I2)/(I3)
            return (MultiPoly(1) + bi_selected(g, *a)) * bi_rec14(delete_vertex(g, *a), memo);
        }
        // (I4)
        auto [a, b] = *least_adjacent_pair(g);
        return bi_rec14(delete_vertex(g, a), memo) + bi_rec14(delete_vertex(g, b), memo) -
               bi_rec14(delete_vertices(g, {a, b}), memo);
    });
}

MultiPoly bi_rec56(const Graph& g, Memo& memo) {
    return memoized(g, memo, [&](const Graph& g) {
        // (I5)/(I6): B_I(G-a) + (x_a|y_a) v B_I(G-a-N(G,a))
        const VertexId a = sorted_names(g).front();
        VertexSet drop = neighbors(g, a);
        drop.insert(a);
        return bi_rec56(delete_vertex(g, a), memo) +
               bi_selected(g, a) * bi_rec56(delete_vertices(g, drop), memo);
    });
}

MultiPoly bi_direct(const Graph& g) {
    const std::size_t n = g.size();
    if (n > 62) throw std::invalid_argument("b_independence: graph too large");
    MultiPoly out;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 0;; ++s) {
        bool stable = true;
        for (std::size_t i = 0; i < n && stable; ++i) {
            if (!((s >> i) & 1)) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (((s >> j) & 1) && g.adjacency().at(i, j)) {
                    stable = false;
                    break;
                }
            }
        }
        if (stable) {
            std::vector<std::pair<Indeterminate, int>> ps;
            int size = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (!((s >> i) & 1)) continue;
                ++size;
                const VertexId& name = g.vertices()[i];
                ps.emplace_back(g.adjacency().at(i, i) ? var_y(name) : var_x(name), 1);
            }
            if (size > 0) ps.emplace_back(ord_v(), size);
            out += MultiPoly::monomial(1, ps);
        }
        if (s == full) break;
    }
    return out;
}

}  // namespace

MultiPoly b_y0(const Graph& g, By0Method m) {
    switch (m) {
        case By0Method::Substitution: return substitute(brute_force_B(g), subst_sigma0());
        case By0Method::RecursionProp16: {
            Memo memo;
            return b_y0_rec(g, false, memo);
        }
        case By0Method::RecursionCor18: {
            Memo memo;
            return b_y0_rec(g, true, memo);
        }
    }
    throw std::logic_error("b_y0: unreachable");
}

MultiPoly b_xy(const Graph& g, BxyMethod m) {
    if (m == BxyMethod::Substitution) return substitute(brute_force_B(g), subst_sigma_eq());
    Memo memo;
    return b_xy_rec(g, memo);
}

MultiPoly q_poly(const Graph& g, QMethod m) {
    if (m == QMethod::Substitution) return substitute(brute_force_B(g), subst_q());
    Memo memo;
    return q_rec(g, m == QMethod::RecursionQ3Prime, memo);
}

MultiPoly big_q_poly(const Graph& g, BigQMethod m) {
    if (m == BigQMethod::Substitution) return substitute(brute_force_B(g), subst_big_q());
    if (!g.loops().empty())
        throw std::invalid_argument("big_q_poly: the (Q1)-(Q3) recursion requires a loop-free graph");
    Memo memo;
    return big_q_rec(g, memo);
}

MultiPoly b_independence(const Graph& g, BIMethod m) {
    switch (m) {
        case BIMethod::Substitution: return substitute(brute_force_B(g), subst_eta_prime());
        case BIMethod::Direct: return bi_direct(g);
        case BIMethod::RecursionI14: {
            Memo memo;
            return bi_rec14(g, memo);
        }
        case BIMethod::RecursionI56: {
            Memo memo;
            return bi_rec56(g, memo);
        }
    }
    throw std::logic_error("b_independence: unreachable");
}

MultiPoly b_independence_via_I7(const Graph& g, const VertexId& a, const VertexId& b) {
    if (a == b || !g.adjacent(a, b) || g.looped(a) || g.looped(b))
        throw std::invalid_argument(
            "b_independence_via_I7: requires an edge between distinct unlooped vertices");
    VertexSet drop = neighbors(g, a);
    for (const auto& v : neighbors(g, b)) drop.insert(v);
    Memo memo;
    return bi_rec14(remove_edge(g, a, b), memo) -
           X(a) * X(b) * V(2) * bi_rec14(delete_vertices(g, drop), memo);
}

MultiPoly independence_classical(const Graph& g) {
    return substitute(b_independence(g, BIMethod::Direct), subst_ones());
}

namespace {

struct MonomialView {
    std::vector<std::pair<VertexId, int>> x_factors;  // tag "x" only
    int u_exp = 0;
    bool clean = true;  // no other indeterminates
};

MonomialView view_xu(const PowerProduct& pp) {
    MonomialView mv;
    for (const auto& [id, e] : pp) {
        const Indeterminate& v = var_info(id);
        if (v.kind == VarKind::Ordinary && v.tag == "u")
            mv.u_exp = e;
        else if (v.kind == VarKind::VertexIndexed && v.tag == "x")
            mv.x_factors.emplace_back(v.vertex, e);
        else
            mv.clean = false;
    }
    return mv;
}

[[noreturn]] void bad_reconstruct(const std::string& why) {
    throw std::invalid_argument("reconstruct: input not consistent with any graph (" + why + ")");
}

}  // namespace

Graph reconstruct_graph(const MultiPoly& rho_b) {
    std::map<VertexId, int> singleton_rank;
    std::map<std::pair<VertexId, VertexId>, int> pair_rank;
    for (const auto& [pp, c] : rho_b.terms()) {
        int qd = quasi_degree(pp);
        if (qd == 0 || qd > 2) continue;
        MonomialView mv = view_xu(pp);
        if (!mv.clean) bad_reconstruct("unexpected indeterminate in " + monomial_text(pp));
        if (c != 1) bad_reconstruct("coefficient of " + monomial_text(pp) + " is not 1");
        if (qd == 1) {
            if (mv.x_factors.size() != 1 || mv.x_factors[0].second != 1)
                bad_reconstruct("malformed singleton monomial " + monomial_text(pp));
            singleton_rank[mv.x_factors[0].first] = mv.u_exp;
        } else {
            if (mv.x_factors.size() != 2) bad_reconstruct("malformed pair monomial " + monomial_text(pp));
            auto key = std::minmax(mv.x_factors[0].first, mv.x_factors[1].first);
            pair_rank[{key.first, key.second}] = mv.u_exp;
        }
    }

    std::vector<VertexId> names;
    for (const auto& [v, rk] : singleton_rank) {
        if (rk > 1) bad_reconstruct("singleton rank of '" + v + "' exceeds 1");
        names.push_back(v);
    }
    for (const auto& [key, rk] : pair_rank) {
        if (!singleton_rank.count(key.first) || !singleton_rank.count(key.second))
            bad_reconstruct("pair monomial names a vertex with no singleton monomial");
    }
    Graph g(names, SymBitMatrix(names.size()));
    SymBitMatrix m(names.size());
    for (const auto& [v, rk] : singleton_rank)
        if (rk == 1) m.set(g.index_of(v), g.index_of(v), true);

    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            auto it = pair_rank.find({names[i], names[j]});
            if (it == pair_rank.end())
                bad_reconstruct("missing pair monomial for {" + names[i] + "," + names[j] + "}");
            int rk = it->second;
            int loops = singleton_rank[names[i]] + singleton_rank[names[j]];
            bool edge;
            if (loops == 0)
                edge = (rk == 2);  // else rk must be 0
            else if (loops == 1)
                edge = (rk == 2);  // else rk must be 1
            else
                edge = (rk == 1);  // else rk must be 2
            int expected_nonedge = (loops == 0) ? 0 : (loops == 1) ? 1 : 2;
            if (!edge && rk != expected_nonedge)
                bad_reconstruct("pair rank " + std::to_string(rk) + " impossible for {" +
                                names[i] + "," + names[j] + "}");
            if (edge) m.set(i, j, true);
        }
    }
    return Graph(names, std::move(m));
}

Graph reconstruct_loopfree(const MultiPoly& rho_bxy) {
    // Collect coefficients of x_a u^k (k = 0,1) and x_a x_b u^k (k = 0,1,2).
    std::map<VertexId, std::array<BigInt, 2>> singles;
    std::map<std::pair<VertexId, VertexId>, std::array<BigInt, 3>> pairs;
    for (const auto& [pp, c] : rho_bxy.terms()) {
        int qd = quasi_degree(pp);
        if (qd == 0 || qd > 2) continue;
        MonomialView mv = view_xu(pp);
        if (!mv.clean) bad_reconstruct("unexpected indeterminate in " + monomial_text(pp));
        if (qd == 1) {
            if (mv.u_exp > 1) bad_reconstruct("singleton u-exponent exceeds 1");
            singles[mv.x_factors[0].first][mv.u_exp] = c;
        } else if (mv.x_factors.size() == 2) {
            if (mv.u_exp > 2) bad_reconstruct("pair u-exponent exceeds 2");
            auto key = std::minmax(mv.x_factors[0].first, mv.x_factors[1].first);
            pairs[{key.first, key.second}][mv.u_exp] = c;
        } else {
            bad_reconstruct("malformed pair monomial " + monomial_text(pp));
        }
    }
    std::vector<VertexId> names;
    for (const auto& [v, cs] : singles) {
        if (cs[0] != 1 || cs[1] != 1)
            bad_reconstruct("singleton signature of '" + v + "' is not (1,1)");
        names.push_back(v);
    }
    for (const auto& [key, cs] : pairs) {
        if (!singles.count(key.first) || !singles.count(key.second))
            bad_reconstruct("pair monomial names a vertex with no singleton monomial");
    }
    Graph g(names, SymBitMatrix(names.size()));
    SymBitMatrix m(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            auto it = pairs.find({names[i], names[j]});
            if (it == pairs.end()) bad_reconstruct("missing pair monomials");
            const auto& cs = it->second;
            if (cs[0] == 0 && cs[1] == 1 && cs[2] == 3)
                m.set(i, j, true);
            else if (!(cs[0] == 1 && cs[1] == 2 && cs[2] == 1))
                bad_reconstruct("pair signature for {" + names[i] + "," + names[j] +
                                "} matches neither an edge nor a non-edge");
        }
    }
    return Graph(names, std::move(m));
}

}  // namespace interlace
