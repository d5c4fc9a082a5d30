#include <doctest.h>

#include "aleph/expr.hpp"
#include "aleph/textio.hpp"
#include "gen.hpp"

using namespace aleph;
using namespace aleph::expr;
using cardinal::AssumptionMode;

TEST_CASE("ordinal expression grammar") {
    auto o = parse_ordinal("w^w + w*2 + 3");
    REQUIRE(o.terms().size() == 3);
    CHECK(render_ordinal(o) == "w^w + w*2 + 3");

    CHECK(render_ordinal(parse_ordinal("1 + w")) == "w");
    CHECK(render_ordinal(parse_ordinal("(w+1)*2")) == "w*2 + 1");
    CHECK(render_ordinal(parse_ordinal("2^w")) == "w");
    CHECK(render_ordinal(parse_ordinal("0")) == "0");
    CHECK(render_ordinal(parse_ordinal("w^(w+1)")) == "w^(w + 1)");
    CHECK(render_ordinal(parse_ordinal("  w ^ 2\t* 3 + 1 ")) == "w^2*3 + 1");
    CHECK(parse_ordinal("ω + 1") == parse_ordinal("w + 1"));

    // ^ binds tighter than * binds tighter than +, all left-associative.
    CHECK(parse_ordinal("w^w^w") == parse_ordinal("(w^w)^w"));
    CHECK(parse_ordinal("w+w*2") == parse_ordinal("w + (w*2)"));
    CHECK(parse_ordinal("w*2+1") == parse_ordinal("(w*2) + 1"));
}

TEST_CASE("ordinal parse errors carry offsets") {
    try {
        parse_ordinal("w +");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
        CHECK(e.expected() == "integer, 'w', or '('");
    }
    CHECK_THROWS_AS(parse_ordinal(""), ParseError);
    CHECK_THROWS_AS(parse_ordinal("w 2"), ParseError);
    CHECK_THROWS_AS(parse_ordinal("(w"), ParseError);
    CHECK_THROWS_AS(parse_ordinal("wx"), ParseError);
}

TEST_CASE("ordinal round trips") {
    gen::Rng rng(137);
    for (int t = 0; t < 2000; ++t) {
        auto o = gen::random_ordinal(rng, 3);
        CHECK(parse_ordinal(render_ordinal(o)) == o);
    }
}

TEST_CASE("cardinal expression grammar") {
    auto mode = AssumptionMode::ch;
    CHECK(render_cardinal(parse_cardinal("2^aleph(0)", mode)) == "aleph(1)");
    CHECK(render_cardinal(parse_cardinal("aleph(0) + 17", AssumptionMode::base)) == "aleph(0)");
    CHECK(render_cardinal(parse_cardinal("cmp(beth(1), aleph(1))", AssumptionMode::base)) ==
          "undetermined");
    CHECK(render_cardinal(parse_cardinal("cmp(beth(1), aleph(1))", mode)) == "equal");
    CHECK(render_cardinal(parse_cardinal("3 * aleph(2)", AssumptionMode::base)) == "aleph(2)");
    CHECK(render_cardinal(parse_cardinal("2^2^aleph(0)", AssumptionMode::base)) == "beth(2)");
    CHECK(render_cardinal(parse_cardinal("2^(aleph(0) + 5)", AssumptionMode::base)) == "beth(1)");
    CHECK(render_cardinal(parse_cardinal("2^3", AssumptionMode::base)) == "8");
    CHECK(render_cardinal(parse_cardinal("beth(0)", AssumptionMode::base)) == "aleph(0)");

    CHECK_THROWS_AS(parse_cardinal("3^aleph(0)", mode), ParseError);
    CHECK_THROWS_AS(parse_cardinal("cmp(1)", mode), ParseError);
    CHECK_THROWS_AS(parse_cardinal("aleph(-1)", mode), ParseError);
    CHECK_THROWS_AS(parse_cardinal("aleph(0) +", mode), ParseError);
}

TEST_CASE("cardinal round trips") {
    gen::Rng rng(139);
    for (int t = 0; t < 2000; ++t) {
        cardinal::Cardinal c = [&]() {
            switch (gen::pick(rng, 0, 2)) {
                case 0: return cardinal::Cardinal::finite(Int(gen::pick(rng, 0, 1000000)));
                case 1: return cardinal::Cardinal::aleph(gen::pick(rng, 0, 40));
                default: return cardinal::Cardinal::beth(gen::pick(rng, 0, 40));
            }
        }();
        auto parsed = parse_cardinal(render_cardinal(c), AssumptionMode::base);
        CHECK(std::get<cardinal::Cardinal>(parsed) == c);
    }
}

TEST_CASE("set, map, and relation literals") {
    auto s = textio::parse_set("{3, 1, foo, 2, foo}");
    CHECK(textio::render_set(s) == "{1,2,3,foo}");
    CHECK(textio::render_set(textio::parse_set("{}")) == "{}");

    auto m = textio::parse_map("{1->2, 0->1}");
    CHECK(textio::render_map(m) == "{0->1, 1->2}");
    CHECK(textio::render_map(textio::parse_map("{}")) == "{}");

    auto r = textio::parse_relation("[(a,b),(a,a)]");
    CHECK(textio::render_relation(r) == "[(a,a),(a,b)]");

    CHECK_THROWS_AS(textio::parse_set("{1,"), ParseError);
    CHECK_THROWS_AS(textio::parse_map("{1=>2}"), ParseError);
    CHECK_THROWS_AS(textio::parse_relation("[(1 2)]"), ParseError);
}

TEST_CASE("ring spec strings") {
    CHECK(textio::parse_ring("Z").str() == "Z");
    CHECK(textio::parse_ring("Q").str() == "Q");
    CHECK(textio::parse_ring("Z/6").str() == "Z/6");
    CHECK(textio::parse_ring("GF(5)").str() == "GF(5)");
    CHECK_THROWS_AS(textio::parse_ring("R"), ParseError);
    CHECK_THROWS_AS(textio::parse_ring("GF(6)"), Error);
}

TEST_CASE("polynomial literals") {
    auto q = ringpoly::Ring::rationals();
    auto z = ringpoly::Ring::integers();
    CHECK(textio::render_polynomial(textio::parse_polynomial("x^2 - 2x + 1", q)) ==
          "x^2 - 2x + 1");
    CHECK(textio::render_polynomial(textio::parse_polynomial("2x", z)) == "2x");
    CHECK(textio::render_polynomial(textio::parse_polynomial("0", z)) == "0");
    CHECK(textio::render_polynomial(textio::parse_polynomial("1/2x^3 + 3/4", q)) ==
          "1/2x^3 + 3/4");
    CHECK(textio::render_polynomial(textio::parse_polynomial("x + x + 1", z)) == "2x + 1");
    CHECK(textio::render_polynomial(textio::parse_polynomial("-x", z)) == "-x");
    CHECK(textio::render_polynomial(textio::parse_polynomial("5*x^2", z)) == "5x^2");
    CHECK_THROWS_AS(textio::parse_polynomial("x +", z), ParseError);
    CHECK_THROWS_AS(textio::parse_polynomial("1/0", q), ParseError);

    gen::Rng rng(149);
    for (int t = 0; t < 500; ++t) {
        std::vector<Rat> cs;
        for (int i = 0, d = static_cast<int>(gen::pick(rng, 0, 6)); i <= d; ++i)
            cs.emplace_back(Int(gen::pick(rng, -9, 9)), Int(gen::pick(rng, 1, 9)));
        ringpoly::Polynomial p(q, std::move(cs));
        CHECK(textio::parse_polynomial(textio::render_polynomial(p), q) == p);
    }
}

TEST_CASE("series rendering") {
    auto q = ringpoly::Ring::rationals();
    auto s = ringpoly::TruncatedSeries(q, 4, {Rat(1), Rat(2), Rat(0), Rat(4, 3)});
    CHECK(textio::render_series(s) == "1 + 2x + 4/3x^3 + O(x^4)");
    auto zero = ringpoly::TruncatedSeries(q, 3, {Rat(0), Rat(0), Rat(0)});
    CHECK(textio::render_series(zero) == "0 + O(x^3)");
}

TEST_CASE("matrix JSON") {
    auto m = textio::parse_int_matrix("[[2,4],[6,8]]");
    CHECK(m == Mat<Int>{{2, 4}, {6, 8}});
    CHECK(textio::render_int_matrix(m) == "[[2,4],[6,8]]");
    CHECK(textio::parse_int_matrix("[[\"123456789012345678901\"]]")(0, 0) ==
          Int("123456789012345678901"));
    CHECK(textio::parse_rat_matrix("[[\"1/2\",3]]")(0, 1) == Rat(3));
    CHECK_THROWS_AS(textio::parse_int_matrix("[[1],[2,3]]"), ParseError);
    CHECK_THROWS_AS(textio::parse_int_matrix("nope"), ParseError);
    CHECK(textio::render_int_matrix(Mat<Int>(0, 0)) == "[]");
}
