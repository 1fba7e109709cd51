#include <doctest.h>

#include "interlace/bpoly.hpp"
#include "interlace/cwdp.hpp"

using namespace interlace;

namespace {

MultiPoly V(int e = 1) { return MultiPoly::variable(Indeterminate::ordinary("v"), e); }
MultiPoly X(const std::string& a) { return MultiPoly::variable(Indeterminate::indexed("x", a)); }
MultiPoly Y(const std::string& a) { return MultiPoly::variable(Indeterminate::indexed("y", a)); }

const char* kK3 = "add(1,2, (ren(2,1, add(1,2, (1 + 2))) + 2))";

}  // namespace

TEST_SUITE("cwdp") {
    TEST_CASE("single vertex") {
        KExprPtr e = parse_kexpr("1");
        CHECK(dp_bi_truncated(*e, 1, 1) == MultiPoly(1) + X("v1") * V());
        CHECK(dp_bi_truncated(*e, 1, 5) == MultiPoly(1) + X("v1") * V());
        KExprPtr el = parse_kexpr("1l");
        CHECK(dp_bi_truncated(*el, 1, 1) == MultiPoly(1) + Y("v1") * V());
    }

    TEST_CASE("d = 0 collapses to 1") {
        KExprPtr e = parse_kexpr(kK3);
        CHECK(dp_bi_truncated(*e, 2, 0) == MultiPoly(1));
    }

    TEST_CASE("K3 with independence substitution") {
        KExprPtr e = parse_kexpr(kK3);
        MultiPoly p = dp_bi_truncated(*e, 2, 3);
        CHECK(substitute(p, subst_ones()) == MultiPoly(1) + MultiPoly(3) * V());
    }

    TEST_CASE("agrees with the direct independence polynomial") {
        KExprPtr e = parse_kexpr("add(1,2, (add(1,2, (1 + 2)) + (1l + 2)))");
        LabelledGraph lg = eval_kexpr(*e, 2);
        MultiPoly full = b_independence(lg.graph, BIMethod::Direct);
        for (int d = 0; d <= 5; ++d) CHECK(dp_bi_truncated(*e, 2, d) == truncate(full, d));
    }

    TEST_CASE("table stays within 2^k entries and decodes to stable sets") {
        KExprPtr e = parse_kexpr(kK3);
        DpStats stats;
        DpTable table = dp_bi_table(*e, 2, 3, &stats);
        CHECK(stats.max_table_entries <= 4);
        LabelledGraph lg = eval_kexpr(*e, 2);
        for (const auto& [mask, poly] : table) {
            for (const auto& [pp, c] : poly.terms()) {
                // decode the selected vertex set from the monomial
                VertexSet sel;
                std::uint32_t labels = 0;
                for (const auto& [id, exp] : pp) {
                    const Indeterminate& var = var_info(id);
                    if (var.kind != VarKind::VertexIndexed) continue;
                    sel.insert(var.vertex);
                    labels |= std::uint32_t{1} << (lg.labels.at(var.vertex) - 1);
                }
                CHECK(labels == mask);
                for (const auto& a : sel)
                    for (const auto& b : sel)
                        if (a != b) CHECK_FALSE(lg.graph.adjacent(a, b));
            }
        }
    }

    TEST_CASE("ren merges colliding label sets") {
        KExprPtr e = parse_kexpr("ren(2,1, (1 + 2))");
        DpTable table = dp_bi_table(*e, 2, 2);
        REQUIRE(table.count(1) == 1);
        CHECK(table.at(1) == X("v1") * V() + X("v2") * V() + X("v1") * X("v2") * V(2));
        CHECK(table.count(2) == 0);
    }

    TEST_CASE("refinement in d") {
        KExprPtr e = parse_kexpr("add(1,2, ((1 + 1) + (2 + 2l)))");
        MultiPoly prev;
        for (int d = 0; d <= 4; ++d) {
            MultiPoly cur = dp_bi_truncated(*e, 2, d);
            if (d > 0) CHECK(truncate(cur, d - 1) == prev);
            prev = cur;
        }
    }

    TEST_CASE("width violation") {
        KExprPtr e = parse_kexpr("3");
        CHECK_THROWS_AS((void)dp_bi_truncated(*e, 2, 1), std::invalid_argument);
        CHECK_THROWS_AS((void)dp_bi_truncated(*e, 3, -1), std::invalid_argument);
    }
}
