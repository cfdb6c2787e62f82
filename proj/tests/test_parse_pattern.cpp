#include "doctest.h"
#include "shirshov/parse.hpp"
#include "shirshov/pattern.hpp"
#include "support/generators.hpp"

using namespace shirshov;

TEST_CASE("word parser errors carry offsets") {
    const auto sig = Signature::l_algebra({"x", "y"});
    CHECK_THROWS_AS(parse_word("x>y<x", sig), ParseError);
    CHECK_THROWS_AS(parse_word("x>", sig), ParseError);
    CHECK_THROWS_AS(parse_word("(x>y", sig), ParseError);
    try {
        parse_word("x>(y<q)", sig);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse_context("x>y", sig), ParseError);
    CHECK_THROWS_AS(parse_context("*>*", sig), ParseError);
    CHECK(format(parse_word(" ( x > ( y < x ) ) ", sig), sig) == "x>(y<x)");
}

TEST_CASE("patterns match with spines, longest first") {
    const auto sig = Signature::l_algebra({"x", "y"});
    const Pattern p = parse_pattern("lchain(<, ($a > $b), $v*)", sig);
    const Term t = parse_word("((x>y)<x)<y", sig);
    const auto matches = match_pattern(p, t, MatchEnv{});
    REQUIRE(matches.size() == 1);
    CHECK(instantiate(p, matches[0]) == t);
    const auto& spine = std::get<std::vector<Term>>(matches[0].values[*p.find_var("v")]);
    CHECK(spine.size() == 2);

    const Pattern q = parse_pattern("rchain(>, $v*, $t)", sig);
    const Term r = parse_word("x>(y>(x<y))", sig);
    const auto all = match_pattern(q, r, MatchEnv{});
    REQUIRE(all.size() == 3);
    CHECK(std::get<std::vector<Term>>(all[0].values[*q.find_var("v")]).size() == 2);
    CHECK(std::get<std::vector<Term>>(all[2].values[*q.find_var("v")]).empty());
    for (const auto& b : all) CHECK(instantiate(q, b) == r);
    CHECK(match_pattern(q, r, MatchEnv{{}, 1}).size() == 2);
}

TEST_CASE("guards restrict matches") {
    const auto sig = Signature::l_algebra({"x", "y"});
    auto rule = [&](const char* s) { return parse_rule(s, sig, Field::rationals(), "G"); };
    const Rule r = rule("r: $a > $b -> $b where notgen($a), notin($b, y), nottop($a, <), maxsize($a, 2)");
    auto matches = [&](const char* w) { return match_first(r.lhs, parse_word(w, sig), MatchEnv{}).has_value(); };
    CHECK(matches("(x>y)>x"));
    CHECK_FALSE(matches("x>x"));
    CHECK_FALSE(matches("(x>y)>y"));
    CHECK_FALSE(matches("(x<y)>x"));
    CHECK_FALSE(matches("(x>(y>x))>x"));
    CHECK(format_rule(r, sig) == "r: $a>$b -> $b where notgen($a), nottop($a, <), maxsize($a, 2), notin($b, y)");
    CHECK_THROWS_AS(rule("r: $a > $a -> $a"), ParseError);
    CHECK_THROWS_AS(rule("r: $a > $b -> $c"), ParseError);
    CHECK_THROWS_AS(rule("r: $a > $b"), ParseError);
    CHECK_THROWS_AS(rule("r: $a > $b -> $a where frob($a)"), ParseError);
}

TEST_CASE("property: ground patterns match exactly their word") {
    testing::Rng rng(51);
    const auto sig = Signature::l_algebra({"x", "y"});
    for (int i = 0; i < 300; ++i) {
        const Term u = testing::random_word(rng, sig, testing::uniform(rng, 1, 6));
        const Term v = testing::random_word(rng, sig, testing::uniform(rng, 1, 6));
        const Pattern p = Pattern::ground(u);
        CHECK(match_first(p, u, MatchEnv{}).has_value());
        CHECK(match_first(p, v, MatchEnv{}).has_value() == (u == v));
        CHECK(p.ground_term() == u);
    }
}

TEST_CASE("property: every match of a variable pattern reinstantiates to the word") {
    testing::Rng rng(52);
    const auto sig = Signature::l_algebra({"x", "y"});
    const Pattern pats[] = {parse_pattern("($a > $b) < $c", sig), parse_pattern("$a < rchain(>, $v*, ($p < $q))", sig),
                            parse_pattern("x > lchain(<, (x < $u), $v*)", sig)};
    for (int i = 0; i < 400; ++i) {
        const Term u = testing::random_word(rng, sig, testing::uniform(rng, 2, 7));
        for (const auto& p : pats)
            for (const auto& b : match_pattern(p, u, MatchEnv{})) CHECK(instantiate(p, b) == u);
    }
}

TEST_CASE("polynomial and rule text") {
    const auto sig = Signature::l_algebra({"x"});
    const Rule r = parse_rule("F: x > x -> 2/3 * x<x - x", sig, Field::rationals(), "S");
    CHECK(r.name == "F");
    CHECK(r.group == "S");
    CHECK(r.lhs.is_ground());
    REQUIRE(r.rhs.size() == 2);
    CHECK(format_rule(r, sig) == "F: x>x -> 2/3 * x<x - x");
    const Rule z = parse_rule("Z: x > x -> 0", sig, Field::rationals(), "S");
    CHECK(z.rhs.empty());
}
