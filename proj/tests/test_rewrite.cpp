#include <map>

#include "doctest.h"
#include "shirshov/lalg.hpp"
#include "shirshov/parse.hpp"
#include "shirshov/rewrite.hpp"
#include "support/generators.hpp"

using namespace shirshov;

namespace {

Polynomial poly(const Theory& th, const char* text) {
    return parse_polynomial(text, th.signature(), th.order(), th.field());
}

std::string nf(const Theory& th, const char* text) {
    return format(normal_form(poly(th, text), th, th.fuel()).poly, th.signature());
}

// Reduces by choosing a random support word and a random redex among all
// rules and positions, ignoring the deterministic strategy.
Polynomial random_reduce(const Polynomial& start, Rewriter& rw, testing::Rng& rng) {
    const Theory& th = rw.theory();
    MatchEnv env{[&](const Term& t, std::uint64_t mask) { return rw.is_irreducible(t, mask); }, UINT32_MAX};
    Polynomial f = start;
    while (true) {
        std::vector<std::pair<std::size_t, Redex>> redexes;
        for (std::size_t k = 0; k < f.terms().size(); ++k) {
            const Term& u = f.terms()[k].word;
            for (const auto& o : occurrences(u))
                for (std::uint32_t id = 0; id < th.rules().size(); ++id)
                    for (const auto& b : match_pattern(th.rule(id).lhs, o.subterm, env))
                        redexes.push_back({k, Redex{o.path, id, b}});
        }
        if (redexes.empty()) return f;
        const auto& [k, r] = redexes[testing::uniform(rng, 0, static_cast<std::uint32_t>(redexes.size() - 1))];
        const Monomial m = f.terms()[k];
        const Polynomial out = Polynomial(std::vector<Monomial>{{m.word, m.coeff}}, th.order());
        f = add(subtract(f, out, th.order()), scale(m.coeff, rw.replacement(m.word, r)), th.order());
    }
}

}  // namespace

TEST_CASE("normal form examples") {
    const auto l = lalg::l_identity_theory({"x"});
    CHECK(nf(l, "(x>x)<x") == "x>(x<x)");
    CHECK(nf(l, "x") == "x");
    CHECK(nf(l, "((x>x)<x)<x - x>((x<x)<x)") == "0");
    const auto d = lalg::dialgebra_theory({"x"});
    CHECK(nf(d, "x<(x<x)") == "x<(x>x)");
    CHECK(nf(d, "(x<x)>x") == "x>(x>x)");
    CHECK(nf(d, "x<(x>(x<x))") == "x<(x>(x>x))");
}

TEST_CASE("traced and memoized reduction agree and the trace descends strictly") {
    testing::Rng rng(61);
    for (const auto& th : {lalg::l_identity_theory({"x", "y"}), lalg::dialgebra_theory({"x", "y"})}) {
        Rewriter rw(th);
        for (int i = 0; i < 150; ++i) {
            std::vector<Monomial> terms;
            for (std::uint32_t k = 0; k < 3; ++k)
                terms.push_back({testing::random_word(rng, th.signature(), testing::uniform(rng, 1, 6)),
                                 Scalar(static_cast<long>(testing::uniform(rng, 1, 3)))});
            const Polynomial f = th.ambient(Polynomial(std::move(terms), th.order()));
            ReductionTrace tr;
            const auto traced = rw.normal_form(f, th.fuel(), &tr);
            const auto fast = rw.normal_form(f, th.fuel());
            CHECK(traced.poly == fast.poly);
            for (std::size_t s = 0; s + 1 < tr.steps.size(); ++s)
                CHECK(th.order().greater(tr.steps[s].word, tr.steps[s + 1].word));
            for (const auto& m : traced.poly.terms()) CHECK(rw.is_irreducible(m.word));
        }
    }
}

TEST_CASE("property: random redex choice reaches the same normal form on the bases") {
    testing::Rng rng(62);
    for (const auto& th : {lalg::l_identity_theory({"x"}), lalg::dialgebra_theory({"x"})}) {
        Rewriter rw(th);
        for (std::uint32_t n = 1; n <= 5; ++n)
            for (const auto& u : enumerate_words(th.signature(), n)) {
                const Polynomial f = th.ambient(Polynomial::word(u));
                REQUIRE(random_reduce(f, rw, rng) == rw.normal_form(f).poly);
            }
    }
}

TEST_CASE("fuel exhaustion is reported, not hidden") {
    const auto d = lalg::dialgebra_theory({"x"});
    const auto res = normal_form(poly(d, "((x<x)<x)<x"), d, 1);
    CHECK(res.status == ReductionStatus::FuelExhausted);
    CHECK(normal_form(poly(d, "((x<x)<x)<x"), d, 100).status == ReductionStatus::NormalForm);
}

TEST_CASE("theories reject unoriented rules and guard cycles") {
    Theory th(Signature::l_algebra({"x"}), OrderKind::WeightL);
    const auto& sig = th.signature();
    CHECK_THROWS_AS(th.add_rule(parse_rule("bad: x -> x>x", sig, th.field(), "A")), OrientationError);
    // Schemas are checked per instance: this one fails as soon as it is instantiated.
    th.add_rule(parse_rule("grow: $a > $b -> $a > ($b > $b)", sig, th.field(), "A"));
    CHECK_THROWS_AS(instantiate_schemas(th, 3), OrientationError);
    th = Theory(Signature::l_algebra({"x"}), OrderKind::WeightL);
    th.add_group("B");
    th.add_rule(parse_rule("a: $u > x -> $u where irr($u, B)", sig, th.field(), "A"));
    CHECK_THROWS_AS(th.add_rule(parse_rule("b: $u < x -> $u where irr($u, A)", sig, th.field(), "B")), TheoryError);
    CHECK(th.rules().size() == 1);
    CHECK_THROWS_AS(th.add_rule(parse_rule("d: $u < x -> $u where irr($u, A)", sig, th.field(), "A")), TheoryError);
    CHECK_THROWS_AS(th.add_rule(parse_rule("c: $u < x -> $u where irr($u, Nope)", sig, th.field(), "C")), TheoryError);
}

TEST_CASE("irreducible words and dimensions") {
    const auto l = lalg::l_identity_theory({"x"});
    std::vector<std::string> two;
    for (const auto& w : irr_enumerate(l, 2)) two.push_back(format(w, l.signature()));
    CHECK(two == std::vector<std::string>{"x>x", "x<x"});
    CHECK(irr_enumerate(l, 1).size() == 1);
    CHECK(dims(l, 6) == std::vector<std::uint64_t>{1, 2, 7, 30, 143, 728});
    CHECK(dims(lalg::dialgebra_theory({"x", "y"}), 4) == std::vector<std::uint64_t>{2, 8, 24, 64});
}

TEST_CASE("quotient oracle examples") {
    const auto l = lalg::l_identity_theory({"x"});
    CHECK(quotient_dims_oracle(l, 3) == std::vector<std::uint64_t>{1, 2, 7});
    Theory empty(Signature::binary_pair({"x", "y"}), OrderKind::WeightL);
    CHECK(quotient_dims_oracle(empty, 3) == std::vector<std::uint64_t>{2, 8, 64});
    const auto idem = lalg::from_structure_constants(lalg::StructureConstants::one_dim("x", Scalar(1), Scalar(1)));
    CHECK(quotient_dims_oracle(idem, 3) == std::vector<std::uint64_t>{1, 0, 0});
    CHECK(dims(idem, 3) == std::vector<std::uint64_t>{1, 0, 0});
}

TEST_CASE("ground instantiation of the entanglement schema") {
    const auto l = lalg::l_identity_theory({"x"});
    const auto inst = instantiate_schemas(l, 4);
    CHECK(inst.size() == 7);
    for (const auto& g : inst) {
        CHECK(g.poly.leading_coeff().is_one());
        CHECK(g.poly.size() == 2);
        CHECK(measures(g.poly.leading_word()).leaves <= 4);
    }
    CHECK(instantiate_schemas(l, 3).size() == 1);
}
