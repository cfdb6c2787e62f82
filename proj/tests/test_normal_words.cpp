#include <set>

#include "doctest.h"
#include "shirshov/normal_words.hpp"
#include "shirshov/order.hpp"
#include "shirshov/parse.hpp"
#include "support/generators.hpp"

using namespace shirshov;

namespace {

// C(3n - 2, n - 1) / n, the closed form of the one-generator counts.
std::uint64_t closed_form(std::uint64_t n) {
    std::uint64_t c = 1;
    for (std::uint64_t k = 1; k <= n - 1; ++k) c = c * (3 * n - 2 - (n - 1) + k) / k;
    return c / n;
}

}  // namespace

TEST_CASE("normal words over one generator") {
    const auto sig = Signature::l_algebra({"x"});
    const std::uint64_t expected[] = {1, 2, 7, 30, 143, 728};
    for (std::uint32_t n = 1; n <= 6; ++n) {
        const auto words = lalg::enumerate_normal(sig, n);
        CHECK(words.size() == expected[n - 1]);
        CHECK(words.size() == closed_form(n));
        const Order L(OrderKind::WeightL, sig);
        for (std::size_t i = 0; i + 1 < words.size(); ++i) CHECK(L.less(words[i], words[i + 1]));
        for (const auto& w : words) CHECK(lalg::is_normal(w));
    }
}

TEST_CASE("normal words over m generators scale by m^n") {
    for (std::uint32_t m = 2; m <= 3; ++m) {
        std::vector<std::string> gens = {"x", "y", "z"};
        gens.resize(m);
        const auto sig = Signature::l_algebra(gens);
        std::uint64_t power = 1;
        for (std::uint32_t n = 1; n <= 4; ++n) {
            power *= m;
            CHECK(lalg::enumerate_normal(sig, n).size() == power * closed_form(n));
        }
    }
}

TEST_CASE("bracket examples") {
    const auto sig = Signature::l_algebra({"x", "y", "z", "w"});
    auto br = [&](const char* s) { return format(lalg::bracket(parse_word(s, sig)), sig); };
    CHECK(br("(x>y)<z") == "x>(y<z)");
    CHECK(br("((x>y)<z)<w") == "x>((y<z)<w)");
    CHECK(br("(x>(y>z))<w") == "x>(y>(z<w))");
    CHECK(br("x<(y<z)") == "x<(y<z)");
    CHECK(lalg::is_normal(parse_word("(x<y)<z", sig)));
    CHECK_FALSE(lalg::is_normal(parse_word("x<((y>z)<w)", sig)));
}

TEST_CASE("property: bracket preserves leaves and is idempotent") {
    testing::Rng rng(41);
    const auto sig = Signature::l_algebra({"x", "y"});
    for (int i = 0; i < 500; ++i) {
        const Term u = testing::random_word(rng, sig, testing::uniform(rng, 1, 9));
        const Term b = lalg::bracket(u);
        CHECK(lalg::is_normal(b));
        CHECK(lalg::bracket(b) == b);
        std::multiset<Symbol> lu, lb;
        for_each_subterm(u, [&](const Path&, const Term& t) { if (t.is_generator()) lu.insert(t.symbol()); return true; });
        for_each_subterm(b, [&](const Path&, const Term& t) { if (t.is_generator()) lb.insert(t.symbol()); return true; });
        CHECK(lu == lb);
    }
}

TEST_CASE("nmul agrees with bracket on all normal pairs up to 7 leaves") {
    const auto sig = Signature::l_algebra({"x"});
    std::vector<std::vector<Term>> normal(7);
    for (std::uint32_t n = 1; n <= 6; ++n) normal[n] = lalg::enumerate_normal(sig, n);
    std::size_t pairs = 0;
    for (std::uint32_t a = 1; a <= 6; ++a)
        for (std::uint32_t b = 1; a + b <= 7; ++b)
            for (const auto& u : normal[a])
                for (const auto& v : normal[b])
                    for (Symbol op : {kSucc, kPrec}) {
                        REQUIRE(lalg::nmul(u, op, v) == lalg::bracket(Term::apply(op, u, v)));
                        ++pairs;
                    }
    CHECK(pairs > 0);
}

TEST_CASE("bracket normal forms do not depend on the rewrite order (all words up to 5 leaves)") {
    const auto sig = Signature::l_algebra({"x", "y"});
    for (std::uint32_t n = 1; n <= 5; ++n)
        for (const auto& u : enumerate_words(sig, n)) {
            const auto forms = testing::all_entanglement_normal_forms(u);
            REQUIRE(forms.size() == 1);
            REQUIRE(*forms.begin() == lalg::bracket(u));
        }
}
