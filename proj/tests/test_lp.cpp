#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "aspherical/corpus.hpp"
#include "aspherical/lp.hpp"

using namespace aspherical;

namespace {

bool satisfies(const lp_problem& prob, const std::vector<rational>& x) {
    for (const auto& row : prob.rows) {
        rational lhs = 0;
        for (const auto& [v, c] : row.terms) lhs += c * x[static_cast<std::size_t>(v)];
        switch (row.sense) {
            case lp_sense::le:
                if (lhs > row.rhs) return false;
                break;
            case lp_sense::ge:
                if (lhs < row.rhs) return false;
                break;
            case lp_sense::eq:
                if (lhs != row.rhs) return false;
                break;
        }
    }
    for (const auto& v : x)
        if (v < 0) return false;
    return true;
}

}  // namespace

TEST_CASE("simplex basics") {
    SECTION("maximize a single bounded variable") {
        lp_problem prob;
        prob.vars = 1;
        prob.rows.push_back({{{0, 1}}, lp_sense::le, 1});
        prob.objective = {1};
        auto sol = solve_lp(prob);
        REQUIRE(sol.status == lp_status::optimal);
        CHECK(sol.x[0] == 1);
        CHECK(sol.value == 1);
    }
    SECTION("W1 rows alone admit the zero solution") {
        family_instance ins = gen_family(family_id::L1, {.n = 4, .i = 3});
        presentation p = substitute(ins.eq, ins.subst);
        star_graph g = build_star_graph(p);
        lp_problem prob;
        prob.vars = static_cast<int>(g.pairs());
        for (const auto& rp : g.relator_pairs) {
            lp_row row;
            for (int pr : rp) row.terms.emplace_back(pr, rational(1));
            row.sense = lp_sense::le;
            row.rhs = rational(rp.size()) - 2;
            prob.rows.push_back(std::move(row));
        }
        prob.objective.assign(g.pairs(), 1);
        prob.maximize = false;
        auto sol = solve_lp(prob);
        REQUIRE(sol.status == lp_status::optimal);
        CHECK(sol.value == 0);
        for (const auto& v : sol.x) CHECK(v == 0);
    }
    SECTION("conflicting bounds are infeasible") {
        lp_problem prob;
        prob.vars = 1;
        prob.rows.push_back({{{0, 1}}, lp_sense::ge, 2});
        prob.rows.push_back({{{0, 1}}, lp_sense::le, 1});
        prob.objective = {1};
        CHECK(solve_lp(prob).status == lp_status::infeasible);
    }
    SECTION("unbounded objective is reported") {
        lp_problem prob;
        prob.vars = 1;
        prob.rows.push_back({{{0, 1}}, lp_sense::ge, 1});
        prob.objective = {1};
        CHECK(solve_lp(prob).status == lp_status::unbounded);
    }
    SECTION("fractional optimum stays exact") {
        // max x0 + x1 s.t. 2 x0 + x1 <= 1, x0 + 3 x1 <= 1 -> (2/5, 1/5)
        lp_problem prob;
        prob.vars = 2;
        prob.rows.push_back({{{0, 2}, {1, 1}}, lp_sense::le, 1});
        prob.rows.push_back({{{0, 1}, {1, 3}}, lp_sense::le, 1});
        prob.objective = {1, 1};
        auto sol = solve_lp(prob);
        REQUIRE(sol.status == lp_status::optimal);
        CHECK(sol.x[0] == rational(2, 5));
        CHECK(sol.x[1] == rational(1, 5));
        CHECK(sol.value == rational(3, 5));
    }
    SECTION("equality rows") {
        lp_problem prob;
        prob.vars = 2;
        prob.rows.push_back({{{0, 1}, {1, 1}}, lp_sense::eq, 3});
        prob.rows.push_back({{{0, 1}}, lp_sense::le, 1});
        prob.objective = {1, 0};
        auto sol = solve_lp(prob);
        REQUIRE(sol.status == lp_status::optimal);
        CHECK(sol.x[0] == 1);
        CHECK(sol.x[1] == 2);
    }
}

TEST_CASE("simplex solutions satisfy every row exactly") {
    std::mt19937 rng(4321);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> rhs(0, 6);
    std::uniform_int_distribution<int> sense(0, 2);
    int solved = 0;
    for (int round = 0; round < 120; ++round) {
        lp_problem prob;
        prob.vars = 3;
        for (int r = 0; r < 4; ++r) {
            lp_row row;
            for (int v = 0; v < 3; ++v) {
                int c = coeff(rng);
                if (c != 0) row.terms.emplace_back(v, rational(c));
            }
            row.sense = sense(rng) == 0 ? lp_sense::le : (sense(rng) == 1 ? lp_sense::ge : lp_sense::eq);
            row.rhs = rhs(rng);
            prob.rows.push_back(std::move(row));
        }
        // bound the box so nothing is unbounded
        for (int v = 0; v < 3; ++v) prob.rows.push_back({{{v, 1}}, lp_sense::le, 10});
        prob.objective = {rational(coeff(rng)), rational(coeff(rng)), rational(coeff(rng))};
        auto sol = solve_lp(prob);
        if (sol.status != lp_status::optimal) continue;
        ++solved;
        CHECK(satisfies(prob, sol.x));
    }
    CHECK(solved > 20);  // the generator must not degenerate into all-infeasible
}
