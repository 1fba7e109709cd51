#include "interlace/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "interlace/error.hpp"

namespace interlace {

namespace {

constexpr std::size_t kMaxGround = 20;  // subset enumerations are 2^|E|

Indeterminate ord_x() { return Indeterminate::ordinary("x"); }
Indeterminate ord_y() { return Indeterminate::ordinary("y"); }

/// Least element of s in ground order (the activity order).
const Element& ground_min(const std::vector<Element>& ground, const ElementSet& s) {
    for (const auto& e : ground)
        if (s.count(e)) return e;
    throw std::logic_error("ground_min: empty set");
}

}  // namespace

std::size_t Matroid::element_index(const Element& e) const {
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (ground_[i] == e) return i;
    throw std::invalid_argument("unknown matroid element '" + e + "'");
}

std::uint32_t Matroid::to_mask(const ElementSet& s) const {
    std::uint32_t m = 0;
    for (const auto& e : s) m |= std::uint32_t{1} << element_index(e);
    return m;
}

ElementSet Matroid::to_set(std::uint32_t mask) const {
    ElementSet out;
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if ((mask >> i) & 1) out.insert(ground_[i]);
    return out;
}

void Matroid::validate() const {
    if (ground_.size() > kMaxGround)
        throw std::invalid_argument("matroid ground set too large (max " +
                                    std::to_string(kMaxGround) + " elements)");
    std::set<Element> seen(ground_.begin(), ground_.end());
    if (seen.size() != ground_.size())
        throw std::invalid_argument("matroid ground set has duplicate elements");
    if (bases_.empty()) throw std::invalid_argument("matroid must have at least one basis");
    for (std::uint32_t b : bases_) {
        if (std::size_t(std::popcount(b)) != basis_size_)
            throw std::invalid_argument("matroid bases are not equicardinal");
    }
    std::set<std::uint32_t> bset(bases_.begin(), bases_.end());
    if (bset.size() != bases_.size())
        throw std::invalid_argument("matroid basis family has duplicates");
    // Exchange axiom: for bases B1 != B2 and e in B1-B2 there is f in B2-B1
    // with (B1-e)+f a basis.
    for (std::uint32_t b1 : bases_) {
        for (std::uint32_t b2 : bases_) {
            if (b1 == b2) continue;
            std::uint32_t only1 = b1 & ~b2, only2 = b2 & ~b1;
            for (std::size_t e = 0; e < ground_.size(); ++e) {
                if (!((only1 >> e) & 1)) continue;
                bool found = false;
                for (std::size_t f = 0; f < ground_.size() && !found; ++f) {
                    if (!((only2 >> f) & 1)) continue;
                    std::uint32_t cand = (b1 & ~(std::uint32_t{1} << e)) | (std::uint32_t{1} << f);
                    found = bset.count(cand) != 0;
                }
                if (!found)
                    throw std::invalid_argument(
                        "basis family violates the exchange axiom; not a matroid");
            }
        }
    }
}

Matroid Matroid::from_bases(std::vector<Element> ground, std::vector<ElementSet> bases) {
    Matroid m;
    m.ground_ = std::move(ground);
    if (m.ground_.size() > kMaxGround)
        throw std::invalid_argument("matroid ground set too large");
    for (const auto& b : bases) m.bases_.push_back(m.to_mask(b));
    std::sort(m.bases_.begin(), m.bases_.end());
    m.bases_.erase(std::unique(m.bases_.begin(), m.bases_.end()), m.bases_.end());
    m.basis_size_ = m.bases_.empty() ? 0 : std::size_t(std::popcount(m.bases_[0]));
    m.validate();
    m.cache_activities();
    return m;
}

Matroid Matroid::graphic(const Graph& g,
                         const std::vector<std::pair<VertexId, VertexId>>& edges) {
    if (edges.size() > kMaxGround) throw std::invalid_argument("too many edges for a matroid");
    std::vector<Element> ground;
    for (std::size_t i = 0; i < edges.size(); ++i) ground.push_back(std::to_string(i + 1));

    // Forest rank of the whole graph: |V| - number of components.
    auto forest_rank = [&](std::uint32_t mask) {
        std::vector<std::size_t> parent(g.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t rank = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!((mask >> i) & 1)) continue;
            std::size_t a = g.index_of(edges[i].first), b = g.index_of(edges[i].second);
            std::size_t ra = find(a), rb = find(b);
            if (ra != rb) {
                parent[ra] = rb;
                ++rank;
            }
        }
        return rank;
    };

    std::uint32_t full = (std::uint32_t{1} << edges.size()) - 1;
    std::size_t r = forest_rank(full);
    Matroid m;
    m.ground_ = std::move(ground);
    m.basis_size_ = r;
    for (std::uint32_t mask = 0;; ++mask) {
        if (std::size_t(std::popcount(mask)) == r && forest_rank(mask) == r)
            m.bases_.push_back(mask);
        if (mask == full) break;
    }
    m.validate();
    m.cache_activities();
    return m;
}

std::size_t Matroid::basis_index(std::uint32_t mask) const {
    auto it = std::lower_bound(bases_.begin(), bases_.end(), mask);
    if (it == bases_.end() || *it != mask)
        throw std::invalid_argument("not a basis of this matroid");
    return std::size_t(it - bases_.begin());
}

void Matroid::cache_activities() {
    internal_active_.assign(bases_.size(), 0);
    external_active_.assign(bases_.size(), 0);
    for (std::size_t bi = 0; bi < bases_.size(); ++bi) {
        ElementSet bset = to_set(bases_[bi]);
        for (const auto& x : bset) {
            if (ground_min(ground_, fundamental_cocycle(bset, x)) == x)
                internal_active_[bi] |= std::uint32_t{1} << element_index(x);
        }
        for (const auto& e : ground_) {
            if (bset.count(e)) continue;
            if (ground_min(ground_, fundamental_cycle(bset, e)) == e)
                external_active_[bi] |= std::uint32_t{1} << element_index(e);
        }
    }
}

std::vector<ElementSet> Matroid::bases() const {
    std::vector<ElementSet> out;
    out.reserve(bases_.size());
    for (std::uint32_t b : bases_) out.push_back(to_set(b));
    return out;
}

bool Matroid::is_basis(const ElementSet& b) const {
    return std::binary_search(bases_.begin(), bases_.end(), to_mask(b));
}

std::size_t Matroid::rank_subset(const ElementSet& a) const {
    std::uint32_t mask = to_mask(a);
    std::size_t best = 0;
    for (std::uint32_t b : bases_) best = std::max(best, std::size_t(std::popcount(b & mask)));
    return best;
}

std::size_t Matroid::nullity_subset(const ElementSet& a) const {
    return a.size() - rank_subset(a);
}

ElementSet Matroid::fundamental_cycle(const ElementSet& basis, const Element& e) const {
    std::uint32_t b = to_mask(basis);
    std::size_t ei = element_index(e);
    if ((b >> ei) & 1) throw std::invalid_argument("fundamental_cycle: element is in the basis");
    if (!is_basis(basis)) throw std::invalid_argument("fundamental_cycle: not a basis");
    ElementSet out{e};
    for (std::size_t f = 0; f < ground_.size(); ++f) {
        if (!((b >> f) & 1)) continue;
        std::uint32_t cand = (b & ~(std::uint32_t{1} << f)) | (std::uint32_t{1} << ei);
        if (std::binary_search(bases_.begin(), bases_.end(), cand)) out.insert(ground_[f]);
    }
    return out;
}

ElementSet Matroid::fundamental_cocycle(const ElementSet& basis, const Element& x) const {
    std::uint32_t b = to_mask(basis);
    std::size_t xi = element_index(x);
    if (!((b >> xi) & 1))
        throw std::invalid_argument("fundamental_cocycle: element is not in the basis");
    if (!is_basis(basis)) throw std::invalid_argument("fundamental_cocycle: not a basis");
    ElementSet out{x};
    for (std::size_t e = 0; e < ground_.size(); ++e) {
        if ((b >> e) & 1) continue;
        std::uint32_t cand = (b & ~(std::uint32_t{1} << xi)) | (std::uint32_t{1} << e);
        if (std::binary_search(bases_.begin(), bases_.end(), cand)) out.insert(ground_[e]);
    }
    return out;
}

Matroid::Activities Matroid::activities(const ElementSet& basis) const {
    std::size_t bi = basis_index(to_mask(basis));
    return {to_set(internal_active_[bi]), to_set(external_active_[bi])};
}

Matroid::Decomposition Matroid::activity_interval_decompose(const ElementSet& a) const {
    std::uint32_t amask = to_mask(a);
    std::optional<Decomposition> found;
    for (std::size_t bi = 0; bi < bases_.size(); ++bi) {
        std::uint32_t b = bases_[bi];
        std::uint32_t lo = b & ~internal_active_[bi];
        std::uint32_t hi = b | external_active_[bi];
        if ((amask & lo) == lo && (amask & ~hi) == 0) {
            if (found)
                throw std::runtime_error(
                    "activity intervals overlap; matroid integrity violated");
            found = Decomposition{to_set(b), to_set(b & ~amask), to_set(amask & ~b)};
        }
    }
    if (!found)
        throw std::runtime_error("no activity interval contains the subset; matroid integrity "
                                 "violated");
    return *found;
}

MultiPoly rank_polynomial(const Matroid& m) {
    const std::size_t n = m.ground_size();
    std::uint32_t full = (n == 0) ? 0 : (std::uint32_t{1} << n) - 1;
    MultiPoly out;
    std::size_t rM = m.rank();
    for (std::uint32_t mask = 0;; ++mask) {
        ElementSet a;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) a.insert(m.ground()[i]);
        std::size_t ra = m.rank_subset(a);
        out += MultiPoly::monomial(1, {{ord_x(), static_cast<int>(rM - ra)},
                                       {ord_y(), static_cast<int>(a.size() - ra)}});
        if (mask == full) break;
    }
    return out;
}

MultiPoly tutte_polynomial(const Matroid& m, TutteMethod method) {
    if (method == TutteMethod::RankShift) return shift_minus(rank_polynomial(m));
    MultiPoly out;
    for (const auto& b : m.bases()) {
        auto act = m.activities(b);
        out += MultiPoly::monomial(1, {{ord_x(), static_cast<int>(act.internal.size())},
                                       {ord_y(), static_cast<int>(act.external.size())}});
    }
    return out;
}

namespace {

MultiPoly indexed_set_monomial(const std::string& tag, const ElementSet& s) {
    std::vector<std::pair<Indeterminate, int>> ps;
    for (const auto& e : s) ps.emplace_back(Indeterminate::indexed(tag, e), 1);
    return MultiPoly::monomial(1, ps);
}

MultiPoly enum_subsets(const std::string& tag, const ElementSet& s) {
    // Enum(Sub(s)) = prod over e in s of (1 + x_e)
    MultiPoly out = 1;
    for (const auto& e : s)
        out *= MultiPoly(1) + MultiPoly::variable(Indeterminate::indexed(tag, e));
    return out;
}

}  // namespace

MultiPoly multivariate_tutte(const Matroid& m) {
    MultiPoly out;
    for (const auto& b : m.bases()) {
        auto act = m.activities(b);
        out += indexed_set_monomial("x", act.internal) * indexed_set_monomial("y", act.external);
    }
    return out;
}

MultiPoly multivariate_rank_tilde(const Matroid& m) {
    MultiPoly out;
    for (const auto& b : m.bases()) {
        auto act = m.activities(b);
        out += enum_subsets("x", act.internal) * enum_subsets("y", act.external);
    }
    return out;
}

MultiPoly rhat_polynomial(const Matroid& m) {
    const std::size_t n = m.ground_size();
    std::uint32_t full = (n == 0) ? 0 : (std::uint32_t{1} << n) - 1;
    MultiPoly out;
    for (std::uint32_t mask = 0;; ++mask) {
        // Z: greedy maximal independent subset of A in ground order
        // (lexicographically minimal); C: greedy completion of Z to a basis
        // inside E-A; D = A-Z.
        ElementSet z, a;
        for (std::size_t i = 0; i < n; ++i) {
            if (!((mask >> i) & 1)) continue;
            const Element& e = m.ground()[i];
            a.insert(e);
            z.insert(e);
            if (m.rank_subset(z) < z.size()) z.erase(e);
        }
        ElementSet zc = z, c;
        for (std::size_t i = 0; i < n && zc.size() < m.rank(); ++i) {
            if ((mask >> i) & 1) continue;
            const Element& e = m.ground()[i];
            zc.insert(e);
            if (m.rank_subset(zc) < zc.size())
                zc.erase(e);
            else
                c.insert(e);
        }
        ElementSet d;
        for (const auto& e : a)
            if (!z.count(e)) d.insert(e);
        out += indexed_set_monomial("x", c) * indexed_set_monomial("y", d);
        if (mask == full) break;
    }
    return out;
}

Substitution subst_collapse_xy() {
    Substitution s;
    s.set_family("x", MultiPoly::variable(ord_x()));
    s.set_family("y", MultiPoly::variable(ord_y()));
    return s;
}

MultiPoly enum_poly(const SetFamily& s) {
    MultiPoly out;
    for (const auto& a : s.members) out += indexed_set_monomial("x", a);
    return out;
}

std::optional<ElementSet> check_sub_form(const SetFamily& s) {
    MultiPoly shifted = shift_minus(enum_poly(s));
    if (shifted.term_count() != 1) return std::nullopt;
    const auto& [pp, c] = *shifted.terms().begin();
    if (c != 1) return std::nullopt;
    ElementSet b;
    for (const auto& [id, e] : pp) {
        const Indeterminate& v = var_info(id);
        if (e != 1 || v.kind != VarKind::VertexIndexed || v.tag != "x") return std::nullopt;
        b.insert(v.vertex);
    }
    return b;
}

Matroid parse_matroid(const std::string& text,
                      const std::function<std::string(const std::string&)>& load_file) {
    std::vector<Element> ground;
    std::vector<ElementSet> bases;
    bool saw_ground = false, saw_bases = false;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "groundset:") {
            saw_ground = true;
            std::string tok;
            while (ls >> tok) ground.push_back(tok);
        } else if (head == "groundset-from-graph:") {
            std::string path;
            if (!(ls >> path)) throw ParseError("missing graph path", lineno, 1);
            ParsedGraph pg = parse_graph_file(load_file(path));
            return Matroid::graphic(pg.graph, pg.edges_in_order);
        } else if (head == "bases:") {
            saw_bases = true;
            std::string rest;
            std::getline(ls, rest);
            ElementSet current;
            bool open = false;
            std::istringstream toks(rest);
            std::string tok;
            while (toks >> tok) {
                while (!tok.empty() && tok.front() == '{') {
                    if (open) throw ParseError("nested '{'", lineno, 1);
                    open = true;
                    tok.erase(tok.begin());
                }
                bool close = false;
                while (!tok.empty() && tok.back() == '}') {
                    close = true;
                    tok.pop_back();
                }
                if (!tok.empty()) {
                    if (!open) throw ParseError("element outside braces", lineno, 1);
                    current.insert(tok);
                }
                if (close) {
                    if (!open) throw ParseError("unmatched '}'", lineno, 1);
                    bases.push_back(current);
                    current.clear();
                    open = false;
                }
            }
            if (open) throw ParseError("unterminated basis", lineno, 1);
        } else {
            throw ParseError("unrecognized line head '" + head + "'", lineno, 1);
        }
    }
    if (!saw_ground) throw ParseError("missing groundset line", 1, 1);
    if (!saw_bases) throw ParseError("missing bases line", 1, 1);
    return Matroid::from_bases(std::move(ground), std::move(bases));
}

}  // namespace interlace
