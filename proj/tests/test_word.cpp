#include <catch2/catch_amalgamated.hpp>

#include "aspherical/word.hpp"
#include "test_util.hpp"

using namespace aspherical;
using testutil::cw;
using testutil::env;
using testutil::w;

TEST_CASE("free reduction") {
    SECTION("t t^-1 cancels to the empty word") {
        CHECK(reduce(w("t t^-1")).empty());
    }
    SECTION("g3 g1 with g3 = g1^-1 cancels") {
        CHECK(reduce(w("g3 g1"), env("let g3 = g1^-1")).empty());
    }
    SECTION("substitution only, no cancellation") {
        word r = reduce(w("g1 t g2 t^-1 g3"), env("let g3 = g1^-1"));
        CHECK(r == w("g1 t g2 t^-1 g1^-1"));
        CHECK(r.size() == 5);
    }
    SECTION("the same word reduces fully across the seam when cyclic") {
        word r = reduce(cw("g1 t g2 t^-1 g3"), env("let g3 = g1^-1"));
        CHECK(r == reduce(cw("g2")));  // conjugation strips away entirely
    }
    SECTION("merging keeps symbolic powers") {
        CHECK(reduce(w("t t")) == w("t^2"));
        CHECK(reduce(w("g1^2 g1^-1")) == w("g1"));
    }
    SECTION("cyclic reduction works across the seam") {
        CHECK(reduce(cw("t^-1 g1 t")) == reduce(cw("g1")));
        CHECK(reduce(cw("t g1 t")) == reduce(cw("g1 t^2")));
    }
}

TEST_CASE("reduce properties") {
    testutil::word_gen gen(20240811);
    constraint_env e = env("let g3 = g1^-1\nnontrivial g1 g2");
    for (int it = 0; it < 300; ++it) {
        word a = gen.next(12, it % 2 == 0);
        word r = reduce(a, e);
        CHECK(reduce(r, e) == r);              // idempotent
        CHECK(r.size() <= a.size());           // length-non-increasing
        word aa = a;
        aa.cyclic = false;
        CHECK(reduce(concat(aa, invert(aa)), e).empty());  // w * w^-1 = 1
        CHECK(invert(invert(a)) == a);
    }
}

TEST_CASE("inversion") {
    CHECK(invert(w("g1 t")) == w("t^-1 g1^-1"));
    CHECK(invert(word{}).empty());
    // composing with the original reduces to the empty word
    word a = w("t^-1 g1^-1 t x^-1");
    CHECK(invert(a) == w("x t^-1 g1 t"));
    CHECK(reduce(concat(a, invert(a))).empty());
}

TEST_CASE("power expansion") {
    CHECK(expand_powers(w("t^3")) == w("t t t"));
    CHECK(expand_powers(w("t^-2 g1")) == w("t^-1 t^-1 g1"));
    CHECK(expand_powers(w("g1 t")) == w("g1 t"));
    SECTION("coefficient powers stay merged") {
        CHECK(expand_powers(w("g1^3")) == w("g1^3"));
    }
    SECTION("re-reducing an expansion recovers the reduced word") {
        testutil::word_gen gen(7);
        for (int it = 0; it < 200; ++it) {
            word a = gen.next(10, true);
            CHECK(reduce(expand_powers(a)) == reduce(a));
        }
    }
}

TEST_CASE("cyclic permutations") {
    SECTION("rotations start at each variable letter") {
        word a = expand_powers(cw("t^-1 g1^-1 t x^-1"));
        auto rots = cyclic_permutations(a);
        REQUIRE(rots.size() == 3);
        CHECK(rots[0].letters[0] == var_letter("t", -1));
        CHECK(rots[1].letters[0] == var_letter("t", 1));
        CHECK(rots[2].letters[0] == var_letter("x", -1));
    }
    SECTION("two variable letters give two rotations") {
        CHECK(cyclic_permutations(cw("x^-1 g2 x g4")).size() == 2);
    }
    SECTION("no variable letter is an error") {
        CHECK_THROWS_AS(cyclic_permutations(cw("g1 g2")), error);
    }
    SECTION("count equals the unit variable letters") {
        testutil::word_gen gen(99);
        for (int it = 0; it < 200; ++it) {
            word a = expand_powers(reduce(gen.next(10, true)));
            if (unit_variable_count(a) == 0) continue;
            CHECK(cyclic_permutations(a).size() == unit_variable_count(a));
        }
    }
}

TEST_CASE("canonical rotation is stable") {
    word a = cw("g1 t g2 t^-1");
    word b = cw("g2 t^-1 g1 t");
    CHECK(canonical_rotation(a) == canonical_rotation(b));
    CHECK(canonical_rotation(canonical_rotation(a)) == canonical_rotation(a));
}

TEST_CASE("label classification") {
    constraint_env e = env("let g3 = g1^-1\nnontrivial g1 g2 g3 g4");
    SECTION("powers of a nontrivial symbol") {
        auto c = classify_label(w("g1^-1 g1^-1"), e);
        CHECK(c.kind == label_kind::power_of_nontrivial);
        CHECK(c.symbol == "g1");
        CHECK(c.exponent == -2);
    }
    SECTION("forced trivial") {
        CHECK(classify_label(w("g3 g1"), e).kind == label_kind::trivial);
    }
    SECTION("unrelated product is unknown") {
        constraint_env e2 = env("nontrivial g2 g4");
        CHECK(classify_label(w("g2 g4"), e2).kind == label_kind::unknown);
    }
    SECTION("derivably nontrivial via an equality") {
        // g3 = g1^-1 and g3 != 1 certify g1 != 1
        constraint_env e3 = env("let g3 = g1^-1\nnontrivial g3");
        auto c = classify_label(w("g1"), e3);
        CHECK(c.kind == label_kind::power_of_nontrivial);
    }
    SECTION("conjugates classify cyclically") {
        auto c = classify_label(w("g2 g4 g2^-1"), env("nontrivial g4"), /*as_cyclic=*/true);
        CHECK(c.kind == label_kind::power_of_nontrivial);
        CHECK(c.symbol == "g4");
    }
}

TEST_CASE("shape validation") {
    SECTION("a valid alternating equation passes") {
        equation eq = make_equation(cw("g1 t g2 t^-1 g3 t g4 t^-1"),
                                    env("let g3 = g1^-1\nnontrivial g1 g2 g3 g4"), "t");
        CHECK(!validate_shape(eq, true).has_value());
    }
    SECTION("negative block is rejected when flagged") {
        equation eq;
        eq.rel = canonical_rotation(cw("g1 t g2 t^-1 g3 t^-1 g4 t"));
        eq.env = env("nontrivial g2 g4");
        eq.variable = "t";
        auto bad = validate_shape(eq, true);
        REQUIRE(bad.has_value());
        CHECK(bad->reason.find("g3") != std::string::npos);
        CHECK(!validate_shape(eq, false).has_value());
    }
    SECTION("the first violation is reported") {
        // both a negative block at g3 and an uncertified wrap coefficient;
        // the block comes first in cyclic order from the stored rotation
        equation eq;
        eq.rel = cw("g1 t g2 t^-1 g3 t^-1 g4");
        eq.env = env("nontrivial g1 g2 g3 g4");
        eq.variable = "t";
        auto bad = validate_shape(eq, true);
        REQUIRE(bad.has_value());
        CHECK(bad->reason.find("g3") != std::string::npos);
        auto bad2 = validate_shape(eq, false);  // the wrap product g4 g1 is uncertified
        REQUIRE(bad2.has_value());
        CHECK(bad2->reason.find("not certified") != std::string::npos);
    }
    SECTION("missing nontriviality fact is a violation") {
        equation eq;
        eq.rel = cw("g1 t g2 t^-1");
        eq.env = env("nontrivial g1");
        eq.variable = "t";
        auto bad = validate_shape(eq, true);
        REQUIRE(bad.has_value());
        CHECK(bad->reason.find("g2") != std::string::npos);
    }
    SECTION("trivial coefficient between opposite powers") {
        equation eq;
        eq.rel = cw("g1 t t^-1 g2");
        eq.env = env("nontrivial g1 g2");
        eq.variable = "t";
        auto bad = validate_shape(eq, true);
        REQUIRE(bad.has_value());
        CHECK(bad->reason.find("trivial") != std::string::npos);
    }
    SECTION("higher negative powers are not negative blocks") {
        equation eq = make_equation(cw("g1 t^2 g2 t^-2 g3 t g4 t^-1"),
                                    env("let g3 = g1^-1\nnontrivial g1 g2 g3 g4"), "t");
        CHECK(!validate_shape(eq, true).has_value());
    }
}

TEST_CASE("environment invariants") {
    SECTION("equality targets may not themselves rewrite") {
        constraint_env e;
        e.alphabet = {"a", "b", "c"};
        e.equalities["a"] = {"b", 1};
        e.equalities["b"] = {"c", 1};
        CHECK_THROWS_AS(e.check(), env_error);
    }
    SECTION("self equality is a cycle") {
        constraint_env e;
        e.alphabet = {"a"};
        e.equalities["a"] = {"a", -1};
        CHECK_THROWS_AS(e.check(), env_error);
    }
}
