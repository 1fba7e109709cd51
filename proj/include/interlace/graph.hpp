#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "interlace/gf2.hpp"

namespace interlace {

/// Vertices are identified by name tokens that survive every graph operation;
/// deletion never renames survivors, so vertex-indexed indeterminates stay
/// aligned across recursive calls.
using VertexId = std::string;
using VertexSet = std::set<VertexId>;

/// A looped simple graph: an ordered vertex sequence plus a symmetric GF(2)
/// adjacency matrix whose diagonal encodes loops. Immutable value; operations
/// return new graphs.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<VertexId> names, SymBitMatrix adj);

    /// Builds from an edge list; a self pair (v,v) denotes a loop.
    static Graph from_edges(std::vector<VertexId> names,
                            const std::vector<std::pair<VertexId, VertexId>>& edges);

    std::size_t size() const { return names_.size(); }
    const std::vector<VertexId>& vertices() const { return names_; }
    const SymBitMatrix& adjacency() const { return adj_; }

    bool has_vertex(const VertexId& v) const { return index_.count(v) != 0; }
    std::size_t index_of(const VertexId& v) const;

    bool adjacent(const VertexId& a, const VertexId& b) const;
    bool looped(const VertexId& a) const;
    VertexSet loops() const;

    /// Structural equality (vertex order matters). Use same_graph() for
    /// order-insensitive comparison by names.
    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexId> names_;
    std::map<VertexId, std::size_t> index_;
    SymBitMatrix adj_;
};

/// True iff the two graphs have the same vertex names and agree on every
/// adjacency/loop bit, regardless of vertex storage order.
bool same_graph(const Graph& g, const Graph& h);

Graph induced(const Graph& g, const VertexSet& keep);
Graph delete_vertices(const Graph& g, const VertexSet& drop);
Graph delete_vertex(const Graph& g, const VertexId& a);

/// Toggles the loop bit on every vertex of s (the nabla operation).
Graph toggle_loops(const Graph& g, const VertexSet& s);

/// Local complementation at a: flips all entries among N(G,a), diagonal
/// included. A looped vertex is not a neighbour of itself.
Graph local_complement(const Graph& g, const VertexId& a);

/// Pivot on the distinct pair a,b: flips exactly the entries between the
/// neighbourhood classes of a and b that avoid a and b themselves. Does not
/// depend on loops of a,b or on their adjacency.
Graph pivot(const Graph& g, const VertexId& a, const VertexId& b);

/// G*a: toggles the non-loop edges of G[N(G,a)], loops restored.
Graph star_complement(const Graph& g, const VertexId& a);

/// Block-diagonal union; g's vertices precede h's. Throws on a name collision.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Removes the single edge a-b (vertices kept). a==b removes the loop on a.
Graph remove_edge(const Graph& g, const VertexId& a, const VertexId& b);

/// Applies a name permutation in place (vertex positions are kept).
Graph renamed(const Graph& g, const std::map<VertexId, VertexId>& perm);

VertexSet neighbors(const Graph& g, const VertexId& a);

std::size_t graph_rank(const Graph& g);
std::size_t graph_corank(const Graph& g);

/// Loop status of the endpoints of an adjacent pair, classifying a-b versus
/// a^l-b versus a^l-b^l; drives metavariable selection in the reduction rules.
std::pair<bool, bool> loop_status_pair(const Graph& g, const VertexId& a, const VertexId& b);

/// Line-oriented text format ('#' comments):
///   vertices: a b c d
///   loops: b d
///   edges: a-b b-c c-d
/// Duplicate edges are rejected; a loop may also be written as edge x-x.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

/// Same parse, but also returns the loop/edge declarations in file order
/// (needed to take the cycle matroid of a graph file, element order = file
/// order).
struct ParsedGraph {
    Graph graph;
    std::vector<std::pair<VertexId, VertexId>> edges_in_order;
};
ParsedGraph parse_graph_file(const std::string& text);

}  // namespace interlace
