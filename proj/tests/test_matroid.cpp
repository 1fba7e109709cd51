#include <doctest.h>

#include <stdexcept>

#include "interlace/error.hpp"
#include "interlace/matroid.hpp"

using namespace interlace;

namespace {

MultiPoly OX(int e = 1) { return MultiPoly::variable(Indeterminate::ordinary("x"), e); }
MultiPoly OY(int e = 1) { return MultiPoly::variable(Indeterminate::ordinary("y"), e); }
MultiPoly XI(const std::string& e) { return MultiPoly::variable(Indeterminate::indexed("x", e)); }
MultiPoly YI(const std::string& e) { return MultiPoly::variable(Indeterminate::indexed("y", e)); }

Matroid k3_matroid() {
    return Matroid::from_bases({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
}

}  // namespace

TEST_SUITE("matroid") {
    TEST_CASE("validation") {
        CHECK_THROWS_AS((void)Matroid::from_bases({"1", "2"}, {}), std::invalid_argument);
        CHECK_THROWS_AS((void)Matroid::from_bases({"1", "2"}, {{"1"}, {"1", "2"}}),
                        std::invalid_argument);
        // {1,2},{3,4} violates exchange in U(2,4)-like ground
        CHECK_THROWS_AS(
            (void)Matroid::from_bases({"1", "2", "3", "4"}, {{"1", "2"}, {"3", "4"}}),
            std::invalid_argument);
        CHECK_THROWS_AS((void)Matroid::from_bases({"1", "1"}, {{"1"}}), std::invalid_argument);
        // duplicates in the family collapse
        Matroid m = Matroid::from_bases({"1"}, {{"1"}, {"1"}});
        CHECK(m.bases().size() == 1);
    }

    TEST_CASE("rank of subsets") {
        Matroid m = k3_matroid();
        CHECK(m.rank_subset({}) == 0);
        CHECK(m.rank_subset({"1", "2", "3"}) == 2);
        CHECK(m.rank() == 2);
        CHECK(m.nullity_subset({"1", "2", "3"}) == 1);
        CHECK_THROWS_AS((void)m.rank_subset({"9"}), std::invalid_argument);
    }

    TEST_CASE("fundamental cycle and cocycle") {
        Matroid m = k3_matroid();
        CHECK(m.fundamental_cycle({"1", "2"}, "3") == ElementSet{"1", "2", "3"});
        CHECK(m.fundamental_cocycle({"1", "2"}, "1") == ElementSet{"1", "3"});
        CHECK_THROWS_AS((void)m.fundamental_cycle({"1", "2"}, "1"), std::invalid_argument);
        CHECK_THROWS_AS((void)m.fundamental_cocycle({"1", "2"}, "3"), std::invalid_argument);
        Matroid u12 = Matroid::from_bases({"1", "2"}, {{"1"}, {"2"}});
        CHECK(u12.fundamental_cycle({"1"}, "2") == ElementSet{"1", "2"});
        // a coloop's cocycle is just itself
        Matroid coloop = Matroid::from_bases({"1"}, {{"1"}});
        CHECK(coloop.fundamental_cocycle({"1"}, "1") == ElementSet{"1"});
    }

    TEST_CASE("activities on K3") {
        Matroid m = k3_matroid();
        auto a12 = m.activities({"1", "2"});
        CHECK(a12.internal == ElementSet{"1", "2"});
        CHECK(a12.external == ElementSet{});
        auto a13 = m.activities({"1", "3"});
        CHECK(a13.internal == ElementSet{"1"});
        CHECK(a13.external == ElementSet{});
        auto a23 = m.activities({"2", "3"});
        CHECK(a23.internal == ElementSet{});
        CHECK(a23.external == ElementSet{"1"});
        // interval sizes cover the powerset
        std::size_t covered = 0;
        for (const auto& b : m.bases()) {
            auto act = m.activities(b);
            covered += std::size_t{1} << (act.internal.size() + act.external.size());
        }
        CHECK(covered == 8);
    }

    TEST_CASE("decomposition") {
        Matroid m = k3_matroid();
        auto dec = m.activity_interval_decompose({"1", "2"});
        CHECK(dec.basis == ElementSet{"1", "2"});
        CHECK(dec.c == ElementSet{});
        CHECK(dec.d == ElementSet{});
        auto full = m.activity_interval_decompose({"1", "2", "3"});
        CHECK(full.d.size() == 1);
        CHECK(m.rank_subset({"1", "2", "3"}) == 2);
    }

    TEST_CASE("rank polynomial") {
        Matroid empty = Matroid::from_bases({}, {{}});
        CHECK(rank_polynomial(empty) == MultiPoly(1));
        Matroid coloop = Matroid::from_bases({"1"}, {{"1"}});
        CHECK(rank_polynomial(coloop) == OX() + MultiPoly(1));
        CHECK(shift_minus(rank_polynomial(k3_matroid())) == OX(2) + OX() + OY());
    }

    TEST_CASE("tutte polynomial") {
        Matroid coloop = Matroid::from_bases({"1"}, {{"1"}});
        CHECK(tutte_polynomial(coloop, TutteMethod::RankShift) == OX());
        Matroid loop = Matroid::from_bases({"1"}, {{}});
        CHECK(tutte_polynomial(loop, TutteMethod::RankShift) == OY());
        CHECK(tutte_polynomial(loop, TutteMethod::Activities) == OY());
        MultiPoly expect = OX(2) + OX() + OY();
        CHECK(tutte_polynomial(k3_matroid(), TutteMethod::RankShift) == expect);
        CHECK(tutte_polynomial(k3_matroid(), TutteMethod::Activities) == expect);
    }

    TEST_CASE("multivariate forms") {
        Matroid empty = Matroid::from_bases({}, {{}});
        CHECK(multivariate_tutte(empty) == MultiPoly(1));
        Matroid coloop = Matroid::from_bases({"1"}, {{"1"}});
        CHECK(multivariate_tutte(coloop) == XI("1"));
        CHECK(multivariate_rank_tilde(coloop) == MultiPoly(1) + XI("1"));
        Matroid m = k3_matroid();
        CHECK(multivariate_tutte(m).term_count() == 3);
        CHECK(substitute(multivariate_tutte(m), subst_collapse_xy()) ==
              tutte_polynomial(m, TutteMethod::RankShift));
        CHECK(substitute(multivariate_rank_tilde(m), subst_collapse_xy()) == rank_polynomial(m));
        CHECK(shift_minus(multivariate_rank_tilde(m)) == multivariate_tutte(m));
    }

    TEST_CASE("rhat") {
        Matroid coloop = Matroid::from_bases({"1"}, {{"1"}});
        CHECK(rhat_polynomial(coloop) == MultiPoly(1) + XI("1"));
        CHECK(substitute(rhat_polynomial(k3_matroid()), subst_collapse_xy()) ==
              rank_polynomial(k3_matroid()));
    }

    TEST_CASE("graphic matroid") {
        Graph k3 = Graph::from_edges({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
        Matroid m = Matroid::graphic(
            k3, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
        CHECK(m.bases().size() == 3);
        CHECK(m.rank() == 2);
        // a loop edge never appears in a basis
        Graph lg = Graph::from_edges({"a", "b"}, {{"a", "a"}, {"a", "b"}});
        Matroid lm = Matroid::graphic(lg, {{"a", "a"}, {"a", "b"}});
        CHECK(lm.rank() == 1);
        CHECK(lm.bases() == std::vector<ElementSet>{{"2"}});
        // K4 has 16 spanning trees
        Graph k4 = Graph::from_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"},
                                                            {"b", "c"}, {"b", "d"}, {"c", "d"}});
        Matroid m4 = Matroid::graphic(k4, {{"a", "b"}, {"a", "c"}, {"a", "d"},
                                           {"b", "c"}, {"b", "d"}, {"c", "d"}});
        CHECK(m4.bases().size() == 16);
    }

    TEST_CASE("enum poly and sub form") {
        SetFamily s{{"a", "b"}, {{}, {"a"}, {"b"}, {"a", "b"}}};
        CHECK(enum_poly(s) == MultiPoly(1) + XI("a") + XI("b") + XI("a") * XI("b"));
        CHECK(shift_minus(enum_poly(s)) == XI("a") * XI("b"));
        CHECK(check_sub_form(s) == ElementSet{"a", "b"});
        SetFamily just_empty{{"a"}, {{}}};
        CHECK(check_sub_form(just_empty) == ElementSet{});
        SetFamily singleton{{"a"}, {{"a"}}};
        CHECK_FALSE(is_positive(shift_minus(enum_poly(singleton))));
        CHECK(!check_sub_form(singleton).has_value());
        SetFamily none{{"a"}, {}};
        CHECK(!check_sub_form(none).has_value());
    }

    TEST_CASE("matroid text format") {
        auto no_loader = [](const std::string&) -> std::string {
            throw std::runtime_error("unexpected file access");
        };
        Matroid m = parse_matroid("# K3\ngroundset: 1 2 3\nbases: {1 2} {1 3} {2 3}\n", no_loader);
        CHECK(m.ground() == std::vector<Element>{"1", "2", "3"});
        CHECK(m.bases().size() == 3);

        auto loader = [](const std::string& path) -> std::string {
            CHECK(path == "tri.graph");
            return "vertices: a b c\nedges: a-b a-c b-c\n";
        };
        Matroid g = parse_matroid("groundset-from-graph: tri.graph\n", loader);
        CHECK(g.bases().size() == 3);

        CHECK_THROWS_AS((void)parse_matroid("bases: {1}\n", no_loader), ParseError);
        CHECK_THROWS_AS((void)parse_matroid("groundset: 1\n", no_loader), ParseError);
        CHECK_THROWS_AS((void)parse_matroid("groundset: 1\nbases: {1\n", no_loader), ParseError);
        CHECK_THROWS_AS((void)parse_matroid("groundset: 1\nbases: 1}\n", no_loader), ParseError);
    }

    TEST_CASE("ground order drives activities") {
        // same bases, reversed ground order flips which elements are active
        Matroid fwd = Matroid::from_bases({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
        Matroid rev = Matroid::from_bases({"3", "2", "1"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
        auto f = fwd.activities({"2", "3"});
        auto r = rev.activities({"2", "3"});
        CHECK(f.internal.empty());
        CHECK(r.internal == ElementSet{"2", "3"});
    }
}
