#include "doctest.h"
#include "shirshov/gsb.hpp"
#include "shirshov/lalg.hpp"
#include "shirshov/parse.hpp"
#include "shirshov/report.hpp"
#include "support/generators.hpp"

using namespace shirshov;

namespace {

Theory toy() {
    Theory th(Signature::binary_pair({"x"}), OrderKind::WeightL);
    th.add_rule(parse_rule("g1: x > x -> x", th.signature(), th.field(), "main"));
    th.add_rule(parse_rule("g2: (x > x) < x -> x", th.signature(), th.field(), "main"));
    return th;
}

std::string fmt(const Polynomial& f, const Theory& th) { return format(f, th.signature()); }
std::string fmt(const Term& t, const Theory& th) { return format(t, th.signature()); }

}  // namespace

TEST_CASE("inclusion compositions of the toy set") {
    const Theory th = toy();
    const auto inst = instantiate_schemas(th, 5);
    REQUIRE(inst.size() == 2);
    auto comps = inclusion_compositions(inst, th);
    REQUIRE(comps.size() == 3);
    Rewriter rw(th);
    int nontrivial = 0;
    for (auto& c : comps) {
        const Verdict v = is_trivial(c, rw, th.fuel());
        if (c.f == c.g && c.path.empty()) {
            CHECK(c.composition.is_zero());
            CHECK(v == Verdict::Trivial);
        } else {
            CHECK(fmt(c.w, th) == "(x>x)<x");
            CHECK(fmt(c.composition, th) == "x<x - x");
            CHECK(v == Verdict::NonTrivial);
            CHECK(fmt(c.normal_form, th) == "x<x - x");
            ++nontrivial;
        }
    }
    CHECK(nontrivial == 1);
    CHECK(check_gsb(th, 5, 3, th.fuel()).counts.nontrivial == 1);
}

TEST_CASE("a single entanglement instance only overlaps itself at the root") {
    const auto th = lalg::l_identity_theory({"x"});
    const auto inst = instantiate_schemas(th, 3);
    const auto comps = inclusion_compositions(inst, th);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].composition.is_zero());
}

TEST_CASE("right multiplication compositions") {
    const auto th = lalg::from_structure_constants(lalg::StructureConstants::one_dim("x", Scalar(1), Scalar(1)));
    const auto inst = instantiate_schemas(th, 5);
    const auto comps = rightmul_compositions(inst, th, 1);
    REQUIRE(comps.size() == 1);
    CHECK(fmt(comps[0].composition, th) == "x>(x<x) - x<x");
    CHECK(fmt(comps[0].w, th) == "(x>x)<x");
    CHECK(rightmul_compositions(inst, th, 3).size() == 1 + 2 + 7);
    CHECK_THROWS_AS(rightmul_compositions(inst, lalg::l_identity_theory({"x"}), 3), TheoryError);

    Theory prec_only(Signature::l_algebra({"x"}), OrderKind::WeightL);
    prec_only.add_rule(parse_rule("p: x < x -> x", prec_only.signature(), prec_only.field(), "main"));
    CHECK(rightmul_compositions(instantiate_schemas(prec_only, 3), prec_only, 3).empty());
}

TEST_CASE("property: inclusion ambiguities reconstruct") {
    const auto th = lalg::dialgebra_theory({"x", "y"});
    const auto inst = instantiate_schemas(th, 5);
    for (const auto& c : inclusion_compositions(inst, th)) {
        const Term& f = inst[c.f].poly.leading_word();
        const Term& g = inst[c.g].poly.leading_word();
        CHECK(c.w == f);
        REQUIRE(plug(Context::at(c.w, c.path), g) == f);
    }
}

TEST_CASE("the built-in bases verify and their dimensions match the oracle") {
    struct Case {
        Theory th;
        std::uint32_t bound;
        std::uint32_t oracle_size;
    };
    const auto x = lalg::StructureConstants::one_dim("x", Scalar(1), Scalar(1));
    const auto y = lalg::StructureConstants::one_dim("y", Scalar(1), Scalar(1));
    std::vector<Case> cases = {{lalg::l_identity_theory({"x"}), 6, 5},
                               {lalg::l_identity_theory({"x", "y"}), 5, 4},
                               {lalg::dialgebra_theory({"x"}), 6, 5},
                               {lalg::dialgebra_theory({"x", "y"}), 5, 4},
                               {lalg::free_product_theory(x, y, 2), 5, 4}};
    for (const auto& c : cases) {
        const auto rep = check_gsb(c.th, c.bound, 3, c.th.fuel());
        CHECK(rep.counts.nontrivial == 0);
        CHECK(rep.counts.fuel_exhausted == 0);
        CHECK(rep.counts.checked == rep.counts.trivial);
        CHECK(rep.verified());
        CHECK(dims(c.th, c.oracle_size) == quotient_dims_oracle(c.th, c.oracle_size));
    }
}

TEST_CASE("completion of the toy set adds exactly x<x - x") {
    const auto res = complete(toy(), 5, 3, 10, kDefaultFuel);
    CHECK_FALSE(res.budget_exceeded);
    REQUIRE(res.log.size() == 1);
    CHECK(res.log[0].rule_name == "c1");
    CHECK(fmt(res.log[0].poly, res.theory) == "x<x - x");
    CHECK(res.theory.rule(res.theory.rules().size() - 1).group == "completion");
    CHECK(res.final_report.verified());
    CHECK(complete(res.theory, 5, 3, 10, kDefaultFuel).log.empty());

    const auto over = complete(toy(), 5, 3, 0, kDefaultFuel);
    CHECK(over.budget_exceeded);
    CHECK(over.log.empty());
}

TEST_CASE("completion leaves bases and empty theories alone") {
    CHECK(complete(lalg::l_identity_theory({"x"}), 5, 3, 10, kDefaultFuel).log.empty());
    Theory empty(Signature::l_algebra({"x"}), OrderKind::WeightL);
    const auto res = complete(empty, 5, 3, 10, kDefaultFuel);
    CHECK(res.log.empty());
    CHECK(res.theory.rules().empty());
}

TEST_CASE("reports are deterministic") {
    const Theory th = toy();
    const auto a = gsb_report_json(check_gsb(th, 5, 3, th.fuel()), th, "0");
    const auto b = gsb_report_json(check_gsb(th, 5, 3, th.fuel()), th, "0");
    CHECK(a == b);
    CHECK(a.find("\"nontrivial\": 1") != std::string::npos);
    CHECK(a.find("\"normal_form\": \"x<x - x\"") != std::string::npos);
}

TEST_CASE("property: random ground theories complete and agree with the oracle") {
    testing::Rng rng(71);
    std::size_t added = 0;
    for (int i = 0; i < 200; ++i) {
        const Theory th = testing::random_ground_theory(rng);
        const auto res = complete(th, 5, 3, 50, kDefaultFuel);
        REQUIRE_FALSE(res.budget_exceeded);
        REQUIRE_FALSE(res.fuel_exhausted);
        REQUIRE(res.final_report.verified());
        REQUIRE(dims(res.theory, 4) == quotient_dims_oracle(res.theory, 4));
        added += res.log.size();
    }
    CHECK(added > 0);
}
