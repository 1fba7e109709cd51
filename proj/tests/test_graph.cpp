#include <doctest.h>

#include "interlace/checks.hpp"
#include <stdexcept>

#include "interlace/error.hpp"
#include "interlace/graph.hpp"

using namespace interlace;

namespace {

Graph path_cabd() {
    return Graph::from_edges({"a", "b", "c", "d"}, {{"c", "a"}, {"a", "b"}, {"b", "d"}});
}

}  // namespace

TEST_SUITE("graph") {
    TEST_CASE("induced subgraph") {
        Graph g = path_cabd();
        VertexSet all(g.vertices().begin(), g.vertices().end());
        CHECK(induced(g, all) == g);
        CHECK(induced(g, {}).size() == 0);
        Graph sub = induced(g, {"b", "c", "d"});
        CHECK(sub.size() == 3);
        CHECK(sub.adjacent("b", "d"));
        CHECK(neighbors(sub, "c").empty());
        CHECK_FALSE(sub.adjacent("b", "c"));
    }

    TEST_CASE("delete vertices") {
        Graph g = path_cabd();
        CHECK(delete_vertices(g, {}) == g);
        Graph two = delete_vertices(g, {"a", "b"});
        CHECK(two.size() == 2);
        CHECK(neighbors(two, "c").empty());
        CHECK(neighbors(two, "d").empty());
        Graph a = Graph::from_edges({"a"}, {});
        CHECK(delete_vertex(a, "a").size() == 0);
        CHECK_THROWS_AS((void)delete_vertex(g, "z"), std::invalid_argument);
    }

    TEST_CASE("toggle loops") {
        Graph g = path_cabd();
        CHECK(toggle_loops(g, {}) == g);
        CHECK(toggle_loops(toggle_loops(g, {"a", "c"}), {"a", "c"}) == g);
        Graph a = Graph::from_edges({"a"}, {});
        CHECK(toggle_loops(a, {"a"}).looped("a"));
    }

    TEST_CASE("local complement") {
        Graph iso = Graph::from_edges({"a", "b"}, {{"a", "a"}});
        CHECK(local_complement(iso, "a") == iso);  // no neighbours
        Graph tri = Graph::from_edges({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
        Graph ta = local_complement(tri, "a");
        CHECK(ta.adjacent("a", "b"));
        CHECK(ta.adjacent("a", "c"));
        CHECK_FALSE(ta.adjacent("b", "c"));
        CHECK(ta.looped("b"));
        CHECK(ta.looped("c"));
        CHECK_FALSE(ta.looped("a"));
        CHECK(same_graph(local_complement(ta, "a"), tri));
    }

    TEST_CASE("pivot") {
        Graph g = path_cabd();
        Graph gab = pivot(g, "a", "b");
        CHECK(same_graph(gab, pivot(g, "b", "a")));
        CHECK(same_graph(pivot(gab, "a", "b"), g));
        // G^ab = G plus the edge c-d
        CHECK(gab.adjacent("c", "d"));
        CHECK(gab.adjacent("c", "a"));
        CHECK(gab.adjacent("a", "b"));
        CHECK(gab.adjacent("b", "d"));
        CHECK_FALSE(gab.adjacent("a", "d"));
        CHECK_THROWS_AS((void)pivot(g, "a", "a"), std::invalid_argument);
        CHECK_THROWS_AS((void)pivot(g, "a", "z"), std::invalid_argument);
    }

    TEST_CASE("star complement") {
        Graph iso = Graph::from_edges({"a"}, {});
        CHECK(star_complement(iso, "a") == iso);
        Graph tri = Graph::from_edges({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
        Graph sa = star_complement(tri, "a");
        CHECK(sa.adjacent("a", "b"));
        CHECK(sa.adjacent("a", "c"));
        CHECK_FALSE(sa.adjacent("b", "c"));
        CHECK(sa.loops().empty());
        // both composition orders agree on all graphs with <= 4 vertices
        for (std::size_t n = 1; n <= 4; ++n) {
            for (const Graph& g : all_graphs(n)) {
                for (const auto& v : g.vertices()) {
                    Graph left = local_complement(toggle_loops(g, neighbors(g, v)), v);
                    Graph right = toggle_loops(local_complement(g, v), neighbors(g, v));
                    CHECK(same_graph(left, right));
                }
            }
        }
    }

    TEST_CASE("disjoint union") {
        Graph g = Graph::from_edges({"a", "b"}, {{"a", "b"}});
        Graph empty({}, SymBitMatrix(0));
        CHECK(disjoint_union(g, empty) == g);
        Graph h = Graph::from_edges({"c"}, {{"c", "c"}});
        Graph u = disjoint_union(g, h);
        CHECK(u.size() == 3);
        CHECK(u.vertices()[0] == "a");
        CHECK(u.vertices()[2] == "c");
        CHECK(u.looped("c"));
        CHECK_FALSE(u.adjacent("a", "c"));
        CHECK_THROWS_AS((void)disjoint_union(g, g), std::invalid_argument);
        // rank additivity over the blocks
        std::mt19937 rng(11);
        for (int i = 0; i < 50; ++i) {
            Graph x = random_graph(3, rng);
            Graph y = random_graph(4, rng);
            std::map<VertexId, VertexId> shift{{"a", "p"}, {"b", "q"}, {"c", "r"}, {"d", "s"}};
            Graph ys = renamed(y, shift);
            CHECK(graph_rank(disjoint_union(x, ys)) == graph_rank(x) + graph_rank(y));
        }
    }

    TEST_CASE("neighbors") {
        Graph lonely = Graph::from_edges({"a"}, {{"a", "a"}});
        CHECK(neighbors(lonely, "a").empty());
        Graph g = path_cabd();
        CHECK(neighbors(g, "a") == VertexSet{"b", "c"});
        Graph e = Graph::from_edges({"a", "b"}, {{"a", "b"}});
        CHECK(neighbors(e, "a") == VertexSet{"b"});
    }

    TEST_CASE("graph rank anchors") {
        // rk(c^l + (d - b^l)) = 3 and rk(c^l - d - b^l) = 2
        Graph split = Graph::from_edges({"b", "c", "d"}, {{"c", "c"}, {"b", "b"}, {"d", "b"}});
        CHECK(graph_rank(split) == 3);
        Graph chain = Graph::from_edges({"b", "c", "d"},
                                        {{"c", "c"}, {"b", "b"}, {"d", "b"}, {"c", "d"}});
        CHECK(graph_rank(chain) == 2);
        CHECK(graph_rank(Graph({}, SymBitMatrix(0))) == 0);
        CHECK(graph_corank(Graph({}, SymBitMatrix(0))) == 0);
    }

    TEST_CASE("loop status pairs") {
        Graph g = Graph::from_edges({"a", "b", "c"}, {{"a", "a"}, {"a", "b"}});
        CHECK(loop_status_pair(g, "a", "b") == std::pair<bool, bool>{true, false});
        CHECK_THROWS_AS((void)loop_status_pair(g, "a", "c"), std::invalid_argument);
    }

    TEST_CASE("remove edge") {
        Graph g = Graph::from_edges({"a", "b"}, {{"a", "b"}});
        Graph cut = remove_edge(g, "a", "b");
        CHECK(cut.size() == 2);
        CHECK_FALSE(cut.adjacent("a", "b"));
        CHECK_THROWS_AS((void)remove_edge(cut, "a", "b"), std::invalid_argument);
    }

    TEST_CASE("text format round trip") {
        std::string text = "# a comment\nvertices: a b c d\nloops: b d\nedges: a-b b-c c-d\n";
        Graph g = parse_graph(text);
        CHECK(g.size() == 4);
        CHECK(g.looped("b"));
        CHECK(g.looped("d"));
        CHECK(g.adjacent("a", "b"));
        CHECK(parse_graph(format_graph(g)) == g);
    }

    TEST_CASE("loop written as self edge") {
        Graph g = parse_graph("vertices: a b\nedges: a-a a-b\n");
        CHECK(g.looped("a"));
        CHECK(g.adjacent("a", "b"));
    }

    TEST_CASE("format errors") {
        CHECK_THROWS_AS((void)parse_graph("vertices: a b\nedges: a-b a-b\n"), ParseError);
        CHECK_THROWS_AS((void)parse_graph("vertices: a b\nedges: a-z\n"), ParseError);
        CHECK_THROWS_AS((void)parse_graph("edges: a-b\n"), ParseError);
        CHECK_THROWS_AS((void)parse_graph("vertices: a a\n"), std::invalid_argument);
        CHECK_THROWS_AS((void)parse_graph("vertices: a b\nedges: ab\n"), ParseError);
        CHECK_THROWS_AS((void)parse_graph("verts: a\n"), ParseError);
    }

    TEST_CASE("edge order preserved for matroid use") {
        ParsedGraph pg = parse_graph_file("vertices: a b c\nloops: b\nedges: b-c a-b\n");
        REQUIRE(pg.edges_in_order.size() == 3);
        CHECK(pg.edges_in_order[0] == std::pair<VertexId, VertexId>{"b", "b"});
        CHECK(pg.edges_in_order[1] == std::pair<VertexId, VertexId>{"b", "c"});
        CHECK(pg.edges_in_order[2] == std::pair<VertexId, VertexId>{"a", "b"});
    }
}
