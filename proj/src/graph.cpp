#include "interlace/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "interlace/error.hpp"

namespace interlace {

Graph::Graph(std::vector<VertexId> names, SymBitMatrix adj)
    : names_(std::move(names)), adj_(std::move(adj)) {
    if (adj_.dim() != names_.size())
        throw std::invalid_argument("Graph: adjacency dimension does not match vertex count");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("Graph: duplicate vertex name '" + names_[i] + "'");
    }
}

Graph Graph::from_edges(std::vector<VertexId> names,
                        const std::vector<std::pair<VertexId, VertexId>>& edges) {
    SymBitMatrix adj(names.size());
    Graph g(std::move(names), adj);
    SymBitMatrix m(g.size());
    for (const auto& [a, b] : edges) m.set(g.index_of(a), g.index_of(b), true);
    return Graph(g.vertices(), m);
}

std::size_t Graph::index_of(const VertexId& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw std::invalid_argument("unknown vertex '" + v + "'");
    return it->second;
}

bool Graph::adjacent(const VertexId& a, const VertexId& b) const {
    return adj_.at(index_of(a), index_of(b));
}

bool Graph::looped(const VertexId& a) const {
    std::size_t i = index_of(a);
    return adj_.at(i, i);
}

VertexSet Graph::loops() const {
    VertexSet out;
    for (std::size_t i = 0; i < size(); ++i)
        if (adj_.at(i, i)) out.insert(names_[i]);
    return out;
}

bool same_graph(const Graph& g, const Graph& h) {
    if (g.size() != h.size()) return false;
    for (const auto& v : g.vertices())
        if (!h.has_vertex(v)) return false;
    for (const auto& a : g.vertices()) {
        std::size_t i = g.index_of(a), hi = h.index_of(a);
        for (const auto& b : g.vertices()) {
            if (g.adjacency().at(i, g.index_of(b)) != h.adjacency().at(hi, h.index_of(b)))
                return false;
        }
    }
    return true;
}

namespace {

std::vector<std::size_t> indices_of(const Graph& g, const VertexSet& s) {
    std::vector<std::size_t> idx;
    idx.reserve(s.size());
    for (const auto& v : s) idx.push_back(g.index_of(v));
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace

Graph induced(const Graph& g, const VertexSet& keep) {
    std::vector<std::size_t> idx = indices_of(g, keep);
    std::vector<VertexId> names;
    names.reserve(idx.size());
    for (std::size_t i : idx) names.push_back(g.vertices()[i]);
    return Graph(std::move(names), g.adjacency().principal_submatrix(idx));
}

Graph delete_vertices(const Graph& g, const VertexSet& drop) {
    VertexSet keep;
    for (const auto& v : drop) g.index_of(v);  // validate
    for (const auto& v : g.vertices())
        if (!drop.count(v)) keep.insert(v);
    return induced(g, keep);
}

Graph delete_vertex(const Graph& g, const VertexId& a) { return delete_vertices(g, {a}); }

Graph toggle_loops(const Graph& g, const VertexSet& s) {
    SymBitMatrix m = g.adjacency();
    for (const auto& v : s) {
        std::size_t i = g.index_of(v);
        m.flip(i, i);
    }
    return Graph(g.vertices(), std::move(m));
}

Graph local_complement(const Graph& g, const VertexId& a) {
    std::size_t ia = g.index_of(a);
    std::vector<std::size_t> nb;
    for (std::size_t j = 0; j < g.size(); ++j)
        if (j != ia && g.adjacency().at(ia, j)) nb.push_back(j);
    SymBitMatrix m = g.adjacency();
    for (std::size_t p = 0; p < nb.size(); ++p)
        for (std::size_t q = p; q < nb.size(); ++q) m.flip(nb[p], nb[q]);
    return Graph(g.vertices(), std::move(m));
}

Graph pivot(const Graph& g, const VertexId& a, const VertexId& b) {
    if (a == b) throw std::invalid_argument("pivot: vertices must be distinct");
    std::size_t ia = g.index_of(a), ib = g.index_of(b);
    std::vector<bool> in_na(g.size(), false), in_nb(g.size(), false);
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (j != ia && g.adjacency().at(ia, j)) in_na[j] = true;
        if (j != ib && g.adjacency().at(ib, j)) in_nb[j] = true;
    }
    SymBitMatrix m = g.adjacency();
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i == ia || i == ib) continue;
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (j == ia || j == ib) continue;
            bool f = (in_na[i] && !in_nb[i] && in_nb[j]) || (in_na[j] && !in_nb[j] && in_nb[i]) ||
                     (in_nb[i] && !in_na[i] && in_na[j]) || (in_nb[j] && !in_na[j] && in_na[i]);
            if (f) m.flip(i, j);
        }
    }
    return Graph(g.vertices(), std::move(m));
}

Graph star_complement(const Graph& g, const VertexId& a) {
    return local_complement(toggle_loops(g, neighbors(g, a)), a);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<VertexId> names = g.vertices();
    for (const auto& v : h.vertices()) {
        if (g.has_vertex(v))
            throw std::invalid_argument("disjoint_union: vertex name collision '" + v + "'");
        names.push_back(v);
    }
    SymBitMatrix m(names.size());
    std::size_t off = g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j)
            if (g.adjacency().at(i, j)) m.set(i, j, true);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i; j < h.size(); ++j)
            if (h.adjacency().at(i, j)) m.set(off + i, off + j, true);
    return Graph(std::move(names), std::move(m));
}

Graph remove_edge(const Graph& g, const VertexId& a, const VertexId& b) {
    std::size_t ia = g.index_of(a), ib = g.index_of(b);
    if (!g.adjacency().at(ia, ib))
        throw std::invalid_argument("remove_edge: no edge between '" + a + "' and '" + b + "'");
    SymBitMatrix m = g.adjacency();
    m.set(ia, ib, false);
    return Graph(g.vertices(), std::move(m));
}

Graph renamed(const Graph& g, const std::map<VertexId, VertexId>& perm) {
    std::vector<VertexId> names = g.vertices();
    for (auto& v : names) {
        auto it = perm.find(v);
        if (it != perm.end()) v = it->second;
    }
    return Graph(std::move(names), g.adjacency());
}

VertexSet neighbors(const Graph& g, const VertexId& a) {
    std::size_t ia = g.index_of(a);
    VertexSet out;
    for (std::size_t j = 0; j < g.size(); ++j)
        if (j != ia && g.adjacency().at(ia, j)) out.insert(g.vertices()[j]);
    return out;
}

std::size_t graph_rank(const Graph& g) { return g.adjacency().rank(); }
std::size_t graph_corank(const Graph& g) { return g.adjacency().corank(); }

std::pair<bool, bool> loop_status_pair(const Graph& g, const VertexId& a, const VertexId& b) {
    if (!g.adjacent(a, b))
        throw std::invalid_argument("loop_status_pair: '" + a + "' and '" + b +
                                    "' are not adjacent");
    return {g.looped(a), g.looped(b)};
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

ParsedGraph parse_graph_file(const std::string& text) {
    std::vector<VertexId> names;
    std::vector<std::pair<VertexId, VertexId>> decls;
    bool saw_vertices = false;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "vertices:") {
            saw_vertices = true;
            for (std::size_t i = 1; i < toks.size(); ++i) names.push_back(toks[i]);
        } else if (head == "loops:") {
            if (!saw_vertices) throw ParseError("loops before vertices", lineno, 1);
            for (std::size_t i = 1; i < toks.size(); ++i) decls.emplace_back(toks[i], toks[i]);
        } else if (head == "edges:") {
            if (!saw_vertices) throw ParseError("edges before vertices", lineno, 1);
            for (std::size_t i = 1; i < toks.size(); ++i) {
                auto dash = toks[i].find('-');
                if (dash == std::string::npos || dash == 0 || dash + 1 == toks[i].size())
                    throw ParseError("malformed edge '" + toks[i] + "'", lineno, 1);
                decls.emplace_back(toks[i].substr(0, dash), toks[i].substr(dash + 1));
            }
        } else {
            throw ParseError("unrecognized line head '" + head + "'", lineno, 1);
        }
    }
    if (!saw_vertices) throw ParseError("missing vertices line", lineno ? lineno : 1, 1);

    SymBitMatrix probe(names.size());
    Graph base(names, probe);  // validates name uniqueness
    SymBitMatrix m(names.size());
    for (const auto& [a, b] : decls) {
        std::size_t ia, ib;
        try {
            ia = base.index_of(a);
            ib = base.index_of(b);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), 1, 1);
        }
        if (m.at(ia, ib))
            throw ParseError("duplicate edge '" + a + "-" + b + "'", 1, 1);
        m.set(ia, ib, true);
    }
    return {Graph(names, std::move(m)), std::move(decls)};
}

Graph parse_graph(const std::string& text) { return parse_graph_file(text).graph; }

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& v : g.vertices()) out << ' ' << v;
    out << '\n';
    VertexSet lp = g.loops();
    if (!lp.empty()) {
        out << "loops:";
        for (const auto& v : lp) out << ' ' << v;
        out << '\n';
    }
    std::vector<std::string> edges;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g.adjacency().at(i, j))
                edges.push_back(g.vertices()[i] + "-" + g.vertices()[j]);
    if (!edges.empty()) {
        out << "edges:";
        for (const auto& e : edges) out << ' ' << e;
        out << '\n';
    }
    return out.str();
}

}  // namespace interlace
