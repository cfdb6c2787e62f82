#include "doctest.h"
#include "shirshov/parse.hpp"
#include "shirshov/polynomial.hpp"
#include "support/generators.hpp"

using namespace shirshov;

TEST_CASE("rational scalars are exact and canonical") {
    const Scalar a = Scalar::parse("6/4", Field::rationals());
    CHECK(a.str() == "3/2");
    CHECK((a * a.inverse()).is_one());
    CHECK((a - a).is_zero());
    CHECK((-a).is_negative());
    CHECK(Scalar(mpq_class(1, 3)) + Scalar(mpq_class(2, 3)) == Scalar(1));
    CHECK_THROWS(Scalar(0).inverse());
}

TEST_CASE("prime field scalars reduce modulo p") {
    const Field f7 = Field::prime(7);
    CHECK(f7.str() == "Fp(7)");
    CHECK(Scalar(10, f7) == Scalar(3, f7));
    CHECK(Scalar(-1, f7) == Scalar(6, f7));
    CHECK(Scalar::parse("1/3", f7) == Scalar(5, f7));
    CHECK((Scalar(3, f7) * Scalar(3, f7).inverse()).is_one());
    CHECK_THROWS(Field::prime(8));
    CHECK_THROWS(Scalar(1, f7) + Scalar(1, Field::prime(5)));
    // Rational literals are promoted into the prime field.
    CHECK(Scalar(1, f7) + Scalar(13) == Scalar(0, f7));
}

TEST_CASE("polynomials keep terms sorted descending and drop zeros") {
    const auto sig = Signature::l_algebra({"x"});
    const Order L(OrderKind::WeightL, sig);
    const Polynomial f = parse_polynomial("x - 2 * x>x + x<x + 2 * x>x - x<x", sig, L, Field::rationals());
    REQUIRE(f.size() == 1);
    CHECK(format(f, sig) == "x");
    const Polynomial g = parse_polynomial("x + 1/2 * x<x - 3 * x>x", sig, L, Field::rationals());
    CHECK(format(g, sig) == "1/2 * x<x - 3 * x>x + x");
    CHECK(g.leading_word() == parse_word("x<x", sig));
    CHECK(g.leading_coeff() == Scalar(mpq_class(1, 2)));
    CHECK(format(monic(g), sig) == "x<x - 6 * x>x + 2 * x");
    CHECK(parse_polynomial("0", sig, L, Field::rationals()).is_zero());
    CHECK(format(Polynomial{}, sig) == "0");
}

TEST_CASE("contexts extend linearly and bracket in L-algebra mode") {
    const auto sig = Signature::l_algebra({"x"});
    const Order L(OrderKind::WeightL, sig);
    const Polynomial f = parse_polynomial("x>x - x", sig, L, Field::rationals());
    const Context c = parse_context("* < x", sig);
    CHECK(format(apply_context(c, f, L, Mode::OmegaFree), sig) == "(x>x)<x - x<x");
    CHECK(format(apply_context(c, f, L, Mode::LAlgebra), sig) == "x>(x<x) - x<x");
}

TEST_CASE("property: polynomial arithmetic is a vector space") {
    testing::Rng rng(31);
    const auto sig = Signature::l_algebra({"x", "y"});
    const Order L(OrderKind::WeightL, sig);
    auto random_poly = [&] {
        std::vector<Monomial> terms;
        const auto n = testing::uniform(rng, 0, 4);
        for (std::uint32_t i = 0; i < n; ++i)
            terms.push_back({testing::random_word(rng, sig, testing::uniform(rng, 1, 3)),
                             Scalar(static_cast<long>(testing::uniform(rng, 0, 6)) - 3)});
        return Polynomial(std::move(terms), L);
    };
    for (int i = 0; i < 300; ++i) {
        const Polynomial f = random_poly(), g = random_poly(), h = random_poly();
        CHECK(add(f, g, L) == add(g, f, L));
        CHECK(add(add(f, g, L), h, L) == add(f, add(g, h, L), L));
        CHECK(subtract(f, f, L).is_zero());
        CHECK(subtract(add(f, g, L), g, L) == f);
        CHECK(scale(Scalar(0), f).is_zero());
        CHECK(add(f, f, L) == scale(Scalar(2), f));
        for (std::size_t k = 0; k + 1 < f.terms().size(); ++k) CHECK(L.greater(f.terms()[k].word, f.terms()[k + 1].word));
        for (const auto& m : f.terms()) CHECK(!m.coeff.is_zero());
        if (!f.is_zero()) {
            CHECK(monic(f).leading_coeff().is_one());
            CHECK(leading(f).word == f.leading_word());
        }
    }
}
