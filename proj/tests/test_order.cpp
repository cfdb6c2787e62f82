#include <algorithm>

#include "doctest.h"
#include "shirshov/normal_words.hpp"
#include "shirshov/order.hpp"
#include "shirshov/parse.hpp"
#include "support/generators.hpp"

using namespace shirshov;

namespace {

std::vector<Term> words_upto(const Signature& sig, std::uint32_t leaves) {
    std::vector<Term> out;
    for (std::uint32_t k = 1; k <= leaves; ++k) {
        auto level = enumerate_words(sig, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// A total preorder is a strict total order iff sorting yields a list whose
// every pair compares LT: this checks totality, antisymmetry and transitivity.
void check_strict_total(const std::vector<Term>& words, const Order& order) {
    auto sorted = words;
    std::sort(sorted.begin(), sorted.end(), [&](const Term& a, const Term& b) { return order.less(a, b); });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        REQUIRE(order.compare(sorted[i], sorted[i]) == 0);
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (order.compare(sorted[i], sorted[j]) >= 0 || order.compare(sorted[j], sorted[i]) <= 0) {
                FAIL("not a strict total order at a pair of words");
            }
        }
    }
}

}  // namespace

TEST_CASE("both orders are strict total orders on words with at most 4 leaves over 2 generators") {
    const auto sig = Signature::l_algebra({"x", "y"});
    const auto words = words_upto(sig, 4);
    check_strict_total(words, Order(OrderKind::WeightGeneral, sig));
    check_strict_total(words, Order(OrderKind::WeightL, sig));
}

TEST_CASE("order examples") {
    const auto sig = Signature::l_algebra({"x", "y"});
    const Order L(OrderKind::WeightL, sig);
    CHECK(L.compare(parse_word("x>y", sig), parse_word("x<y", sig)) < 0);
    CHECK(L.compare(parse_word("x", sig), parse_word("y", sig)) < 0);
    CHECK(L.compare(parse_word("y<y", sig), parse_word("x>(x>x)", sig)) < 0);
    // The entanglement rule is oriented left to right.
    CHECK(L.greater(parse_word("(x>y)<x", sig), parse_word("x>(y<x)", sig)));
    CHECK(to_string(L.compare(parse_word("x", sig), parse_word("x", sig))) == "EQ");

    Signature swapped = sig;
    swapped.set_generator_order({"y", "x"});
    CHECK(Order(OrderKind::WeightL, swapped).compare(parse_word("x", swapped), parse_word("y", swapped)) > 0);
    swapped.set_operation_order({"<", ">"});
    CHECK(Order(OrderKind::WeightL, swapped).compare(parse_word("x>x", swapped), parse_word("x<x", swapped)) > 0);

    const Signature unary({"x"}, {{"f", 1}, {">", 2}}, Mode::OmegaFree);
    CHECK_THROWS_AS(Order(OrderKind::WeightL, unary), SignatureError);
}

TEST_CASE("general order: nodes count before leaves") {
    const Signature sig({"x"}, {{"f", 1}, {"g", 2}}, Mode::OmegaFree);
    const Order G(OrderKind::WeightGeneral, sig);
    CHECK(G.less(parse_word("g(x,x)", sig), parse_word("f(g(x,x))", sig)));
    CHECK(G.less(parse_word("f(f(x))", sig), parse_word("g(x,x)", sig)));
    CHECK(G.less(parse_word("f(g(x,x))", sig), parse_word("g(f(x),x)", sig)));
}

TEST_CASE("property: subterm property of the general order") {
    testing::Rng rng(21);
    const auto sig = Signature::l_algebra({"x", "y"});
    const Order G(OrderKind::WeightGeneral, sig);
    for (int i = 0; i < 500; ++i) {
        const Term u = testing::random_word(rng, sig, testing::uniform(rng, 1, 8));
        for (const auto& o : occurrences(u))
            if (!o.path.empty()) CHECK(G.less(o.subterm, u));
    }
}

TEST_CASE("property: monomiality of the general order under raw plugging") {
    testing::Rng rng(22);
    const auto sig = Signature::l_algebra({"x", "y"});
    const Order G(OrderKind::WeightGeneral, sig);
    int trials = 0;
    while (trials < 1000) {
        Term u = testing::random_word(rng, sig, testing::uniform(rng, 1, 5));
        Term v = testing::random_word(rng, sig, testing::uniform(rng, 1, 5));
        if (u == v) continue;
        if (G.less(u, v)) std::swap(u, v);
        const Context c = testing::random_context(rng, sig, testing::uniform(rng, 1, 5));
        CHECK(G.greater(plug(c, u), plug(c, v)));
        ++trials;
    }
}

TEST_CASE("property: ordering (1) is monomial on normal words under bracketed plugging") {
    testing::Rng rng(23);
    const auto sig = Signature::l_algebra({"x", "y"});
    const Order L(OrderKind::WeightL, sig);
    int trials = 0;
    while (trials < 1000) {
        Term u = testing::random_normal(rng, sig, testing::uniform(rng, 1, 5));
        Term v = testing::random_normal(rng, sig, testing::uniform(rng, 1, 5));
        if (u == v) continue;
        if (L.less(u, v)) std::swap(u, v);
        const Context c = testing::random_context(rng, sig, testing::uniform(rng, 1, 5));
        CHECK(L.greater(lalg::bracket(plug(c, u)), lalg::bracket(plug(c, v))));
        ++trials;
    }
}

TEST_CASE("the descending chain under the leaf-weight key with unary operations") {
    const Signature sig = remark_signature();
    CHECK(format(remark_chain(1)[0], sig) == "delta(x)");
    const auto two = remark_chain(2);
    CHECK(format(two[1], sig) == "zeta(delta(x))");
    CHECK(compare_leaf_weight(two[0], two[1], sig) > 0);
    for (std::size_t k : {10u, 50u}) {
        const auto chain = remark_chain(k);
        REQUIRE(chain.size() == k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) CHECK(compare_leaf_weight(chain[i], chain[j], sig) > 0);
    }
    // The general order is well-founded: it sees the chain as ascending.
    const auto chain = remark_chain(5);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(compare_general(chain[i], chain[i + 1], sig) < 0);
}
