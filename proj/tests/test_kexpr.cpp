#include <doctest.h>

#include <stdexcept>

#include "interlace/error.hpp"
#include "interlace/kexpr.hpp"

using namespace interlace;

TEST_SUITE("kexpr") {
    TEST_CASE("constants") {
        KExprPtr e = parse_kexpr("1");
        CHECK(e->kind == KExpr::Kind::Const);
        CHECK(e->label == 1);
        CHECK_FALSE(e->looped);
        LabelledGraph lg = eval_kexpr(*e, 1);
        CHECK(lg.graph.size() == 1);
        CHECK(lg.graph.vertices()[0] == "v1");
        CHECK(lg.labels.at("v1") == 1);

        KExprPtr el = parse_kexpr("1l");
        CHECK(el->looped);
        CHECK(eval_kexpr(*el, 1).graph.looped("v1"));
    }

    TEST_CASE("add over a union") {
        KExprPtr e = parse_kexpr("add(1,2, (1 + 2))");
        CHECK(e->kind == KExpr::Kind::Add);
        LabelledGraph lg = eval_kexpr(*e, 2);
        CHECK(lg.graph.size() == 2);
        CHECK(lg.graph.adjacent("v1", "v2"));
        CHECK(lg.labels.at("v1") == 1);
        CHECK(lg.labels.at("v2") == 2);
    }

    TEST_CASE("K3 expression") {
        KExprPtr e = parse_kexpr("add(1,2, (ren(2,1, add(1,2, (1 + 2))) + 2))");
        CHECK(used_width(*e) == 2);
        LabelledGraph lg = eval_kexpr(*e, 2);
        CHECK(lg.graph.size() == 3);
        for (const auto& a : lg.graph.vertices())
            for (const auto& b : lg.graph.vertices())
                if (a != b) CHECK(lg.graph.adjacent(a, b));
    }

    TEST_CASE("complete graphs from iterated 2-expressions") {
        // build K_n by re-labelling the clique to 1 and joining a fresh 2
        std::string expr = "1";
        for (int i = 2; i <= 6; ++i) expr = "ren(2,1, add(1,2, (" + expr + " + 2)))";
        KExprPtr e = parse_kexpr(expr);
        CHECK(used_width(*e) == 2);
        LabelledGraph lg = eval_kexpr(*e, 2);
        CHECK(lg.graph.size() == 6);
        for (const auto& a : lg.graph.vertices())
            for (const auto& b : lg.graph.vertices())
                if (a != b) CHECK(lg.graph.adjacent(a, b));
    }

    TEST_CASE("width") {
        CHECK(used_width(*parse_kexpr("1")) == 1);
        CHECK(used_width(*parse_kexpr("ren(3,1, 3)")) == 3);
        CHECK(constant_count(*parse_kexpr("add(1,2, (1 + (2 + 1)))")) == 3);
    }

    TEST_CASE("add is idempotent") {
        KExprPtr once = parse_kexpr("add(1,2, (1 + 2))");
        KExprPtr twice = parse_kexpr("add(1,2, add(1,2, (1 + 2)))");
        CHECK(same_graph(eval_kexpr(*once, 2).graph, eval_kexpr(*twice, 2).graph));
    }

    TEST_CASE("loop variants evaluate to loop variants") {
        KExprPtr plain = parse_kexpr("add(1,2, (1 + 2))");
        KExprPtr looped = parse_kexpr("add(1,2, (1l + 2))");
        Graph g = eval_kexpr(*plain, 2).graph;
        Graph h = eval_kexpr(*looped, 2).graph;
        CHECK(same_graph(toggle_loops(g, {"v1"}), h));
    }

    TEST_CASE("ordered evaluation follows constant occurrence") {
        KExprPtr e = parse_kexpr("((2 + 1) + add(1,2, (1 + 2)))");
        LabelledGraph lg = eval_kexpr(*e, 2, true);
        REQUIRE(lg.order.has_value());
        CHECK(*lg.order == std::vector<VertexId>{"v1", "v2", "v3", "v4"});
    }

    TEST_CASE("comments and whitespace") {
        KExprPtr e = parse_kexpr("add(1,2,  # join labels\n ( 1 + 2 ) )");
        CHECK(eval_kexpr(*e, 2).graph.adjacent("v1", "v2"));
    }

    TEST_CASE("syntax errors carry positions") {
        CHECK_THROWS_AS((void)parse_kexpr("add(1,1, (1 + 2))"), ParseError);
        CHECK_THROWS_AS((void)parse_kexpr("add(1,2 (1 + 2))"), ParseError);
        CHECK_THROWS_AS((void)parse_kexpr("0"), ParseError);
        CHECK_THROWS_AS((void)parse_kexpr("(1 + 2"), ParseError);
        CHECK_THROWS_AS((void)parse_kexpr("1 1"), ParseError);
        CHECK_THROWS_AS((void)parse_kexpr(""), ParseError);
        try {
            (void)parse_kexpr("add(1,\n1, 1)");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }

    TEST_CASE("width violations") {
        KExprPtr e = parse_kexpr("add(1,2, (1 + 2))");
        CHECK_THROWS_AS((void)eval_kexpr(*e, 1), std::invalid_argument);
        KExprPtr c = parse_kexpr("3");
        CHECK_THROWS_AS((void)eval_kexpr(*c, 2), std::invalid_argument);
    }

    TEST_CASE("format round trip") {
        std::string src = "add(1,2,(ren(2,1,add(1,2,(1 + 2))) + 2l))";
        KExprPtr e = parse_kexpr(src);
        CHECK(format_kexpr(*e) == src);
        CHECK(same_graph(eval_kexpr(*parse_kexpr(format_kexpr(*e)), 2).graph,
                         eval_kexpr(*e, 2).graph));
    }
}
