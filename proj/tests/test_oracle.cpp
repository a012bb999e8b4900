#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "aspherical/corpus.hpp"
#include "aspherical/dsl.hpp"
#include "walk_oracle.hpp"

using namespace aspherical;

// the oracle's memoized enumeration must agree with a dumb full enumeration
// on graphs small enough for the latter
TEST_CASE("walk oracle self-check against naive enumeration") {
    std::vector<presentation> ps;
    ps.push_back(parse_presentation_file("x^-1 g2 x g4\nt^-1 g1^-1 t x^-1\nunknown t x\nnontrivial g1 g2 g4\n"));
    ps.push_back(parse_presentation_file("x^-1 g1 x g2\nx^-1 g1 x g3\nunknown x\nnontrivial g1 g2 g3\n"));
    ps.push_back(parse_presentation_file("t^2 g1 t^-1 g2 t^-1 g3\nunknown t\nnontrivial g2 g3\n"));

    std::mt19937 rng(77);
    std::uniform_int_distribution<int> bit(0, 1);
    for (const auto& p : ps) {
        star_graph g = build_star_graph(p);
        for (int round = 0; round < 12; ++round) {
            weight_function th = uniform_weights(g, 0);
            for (auto& v : th.by_pair) v = bit(rng);
            auto fast = oracle::enumerate_walks(g, th, p.env, 6);
            auto slow = oracle::enumerate_walks_naive(g, th, p.env, 6);
            CHECK(fast.has_trivial == slow.has_trivial);
            CHECK(fast.has_unknown == slow.has_unknown);
            if (fast.has_trivial) CHECK(oracle::confirm_trivial_witness(g, th, p.env, fast.trivial_witness));
        }
    }
}

TEST_CASE("witness confirmation rejects malformed walks") {
    presentation p = parse_presentation_file("x^-1 g2 x g4\nt^-1 g1^-1 t x^-1\nunknown t x\nnontrivial g1 g2 g4\n");
    star_graph g = build_star_graph(p);
    weight_function th = uniform_weights(g, 0);
    CHECK_FALSE(oracle::confirm_trivial_witness(g, th, p.env, {}));
    // a single non-loop edge is not closed
    int non_loop = -1;
    for (const auto& e : g.edges)
        if (e.from != e.to) non_loop = e.id;
    REQUIRE(non_loop >= 0);
    CHECK_FALSE(oracle::confirm_trivial_witness(g, th, p.env, {non_loop}));
    // an edge followed by its twin backtracks
    CHECK_FALSE(oracle::confirm_trivial_witness(
        g, th, p.env, {non_loop, g.edges[static_cast<std::size_t>(non_loop)].twin()}));
}
