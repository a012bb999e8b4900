#include <catch2/catch_amalgamated.hpp>

#include "aspherical/corpus.hpp"
#include "aspherical/dsl.hpp"
#include "aspherical/search.hpp"
#include "test_util.hpp"

using namespace aspherical;
using testutil::cw;

namespace {

presentation l1_presentation() {
    family_instance ins = gen_family(family_id::L1, {.n = 4, .i = 3});
    return substitute(ins.eq, ins.subst);
}

}  // namespace

TEST_CASE("binary search") {
    SECTION("finds a certificate for the worked example") {
        presentation p = l1_presentation();
        search_outcome so = search_binary(p, p.env);
        REQUIRE(so.kind == search_kind::found);
        REQUIRE(so.report.has_value());
        CHECK(so.report->overall == outcome::certified);
        // re-verification from scratch, never trusting the search path
        star_graph g = build_star_graph(p);
        CHECK(verify(p, g, *so.weights, p.env).overall == outcome::certified);
    }
    SECTION("W1 forces both edges of a two-letter relator to zero") {
        presentation p = l1_presentation();
        star_graph g = build_star_graph(p);
        search_outcome so = search_binary(p, p.env, g);
        REQUIRE(so.kind == search_kind::found);
        for (int pr : g.relator_pairs[0]) CHECK((*so.weights)[static_cast<std::size_t>(pr)] == 0);
    }
    SECTION("a forced trivial zero-weight cycle exhausts the space") {
        presentation p;
        p.variables = {"x", "t"};
        p.relators.push_back(reduce(cw("x^2")));
        p.relators.push_back(reduce(cw("t^-1 x t x^-1")));
        CHECK(orientability_violation(p) == std::nullopt);
        search_outcome so = search_binary(p, p.env);
        CHECK(so.kind == search_kind::exhausted);
        CHECK(so.candidates_tried >= 1);
    }
}

TEST_CASE("lp search") {
    SECTION("certifies the worked example within a few rounds") {
        presentation p = l1_presentation();
        search_outcome so = search_lp(p, p.env);
        REQUIRE(so.kind == search_kind::found);
        CHECK(so.iterations <= 10);
        CHECK(so.report->overall == outcome::certified);
        star_graph g = build_star_graph(p);
        CHECK(verify(p, g, *so.weights, p.env).overall == outcome::certified);
    }
    SECTION("infeasible cut systems exhaust") {
        presentation p;
        p.variables = {"x", "t"};
        p.relators.push_back(reduce(cw("x^2")));
        p.relators.push_back(reduce(cw("t^-1 x t x^-1")));
        // the doubled relator pins its two pairs to zero (v = 2) while its
        // trivial cycle demands their sum reach 2
        search_outcome so = search_lp(p, p.env, 10);
        CHECK(so.kind == search_kind::exhausted);
    }
    SECTION("cap zero reports cap-reached") {
        presentation p = l1_presentation();
        search_outcome so = search_lp(p, p.env, 0);
        CHECK(so.kind == search_kind::cap_reached);
        CHECK(so.iterations == 0);
    }
    SECTION("deterministic outcomes") {
        presentation p = l1_presentation();
        search_outcome a = search_lp(p, p.env);
        search_outcome b = search_lp(p, p.env);
        REQUIRE(a.kind == b.kind);
        CHECK(a.weights->by_pair == b.weights->by_pair);
        CHECK(a.iterations == b.iterations);
    }
}
