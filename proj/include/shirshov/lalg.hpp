#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shirshov/normal_words.hpp"
#include "shirshov/polynomial.hpp"
#include "shirshov/scalar.hpp"
#include "shirshov/theory.hpp"

/// Builders for the concrete L-algebra theories.
namespace shirshov::lalg {

/// A finite-dimensional L-algebra on a basis: succ[i][j] and prec[i][j]
/// are the coefficient vectors of x_i>x_j and x_i<x_j.
struct StructureConstants {
    std::vector<std::string> basis;
    std::vector<std::vector<std::vector<Scalar>>> succ;
    std::vector<std::vector<std::vector<Scalar>>> prec;

    /// All products zero.
    static StructureConstants zero(std::vector<std::string> basis, Field field = Field::rationals());
    /// The one-dimensional algebra x>x = alpha x, x<x = beta x.
    static StructureConstants one_dim(const std::string& name, const Scalar& alpha, const Scalar& beta);

    std::size_t dim() const { return basis.size(); }
};

/// A triple (i, j, l), zero-based, where (x_i>x_j)<x_l != x_i>(x_j<x_l).
std::optional<std::array<std::size_t, 3>> entanglement_failure(const StructureConstants& sc);

class EntanglementError : public TheoryError {
public:
    EntanglementError(std::size_t i, std::size_t j, std::size_t l);
    /// One-based indices of the failing triple.
    std::array<std::size_t, 3> triple() const { return triple_; }

private:
    std::array<std::size_t, 3> triple_;
};

/// 2 d^2 ground rules x_i>x_j -> {x_i>x_j}, x_i<x_j -> {x_i<x_j}.
Theory from_structure_constants(const StructureConstants& sc, Field field = Field::rationals());

/// The entanglement identity as a schema over the free Omega-algebra.
Theory l_identity_theory(std::vector<std::string> generators);

/// Families F1-F4 of the free dialgebra plus the chain family F5, with
/// F5 instances generated for chain lengths 1..family_bound.
Theory dialgebra_theory(std::vector<std::string> generators, std::uint32_t family_bound = kDefaultFamilyBound);

struct LodayForm {
    std::size_t m = 0;
    std::vector<Symbol> letters;
    std::size_t n = 0;
    friend bool operator==(const LodayForm&, const LodayForm&) = default;
};

/// x_{-m}>(...>(x_0<(x_1>(...>(x_{n-1}>x_n))))) decomposed, or nullopt.
std::optional<LodayForm> loday_form(const Term& u);

/// The free product of A and B: both tables (groups S1, S2) and the
/// correction families F1, F2 (group F).
Theory free_product_theory(const StructureConstants& a, const StructureConstants& b,
                           std::uint32_t family_bound = kDefaultFamilyBound, Field field = Field::rationals());

/// Closed-form irreducibility for the free product; `in_x[g]` tells
/// whether generator g belongs to the first algebra.
bool fp_irr_characterization(const Term& u, const std::vector<bool>& in_x);

/// A embedded into an L-algebra generated by two extra generators:
/// tables (F1, F2), the encodings a<(b<(...<b)) -> x_i (F3) and the
/// correction family F4.
Theory embed_two_gen_theory(const StructureConstants& a, std::uint32_t family_bound = kDefaultFamilyBound,
                            const std::array<std::string, 2>& extra = {"a", "b"}, Field field = Field::rationals());

/// a<(b<(...(b<b))) with i copies of b, i >= 1.
Term encode_generator(std::size_t i, Symbol a, Symbol b);

/// One (F1, F5(n)) composition whose ambiguity nests an F1 left side in the
/// tail of an F5(n) left side, all letters the first generator.
struct ChainSuccessorCheck {
    std::uint32_t n = 0;
    Polynomial composition;
    /// Reduced with chain rules of length at most n.
    Polynomial reduced;
    /// The F5(n+1) instance it should equal up to sign.
    Polynomial expected;
    bool matches = false;
    /// n reaches the family bound, so F5(n+1) lies outside the instantiated rules.
    bool at_boundary = false;
};

/// Needs rules named F1 and F5 as built by dialgebra_theory.
ChainSuccessorCheck check_chain_successor(const Theory& dialgebra, std::uint32_t n);

}  // namespace shirshov::lalg
