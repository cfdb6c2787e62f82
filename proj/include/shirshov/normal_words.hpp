#pragma once

#include <cstdint>
#include <vector>

#include "shirshov/signature.hpp"
#include "shirshov/term.hpp"

/// Normal words of the free L-algebra over the binary pair {>, <}.
namespace shirshov::lalg {

/// True iff u contains no subterm of the shape (a>b)<c.
bool is_normal(const Term& u);

/// [u]: the unique normal word equal to u in the free L-algebra.
Term bracket(const Term& u);

/// [u op v] for normal u and v: u>v unchanged, and u<v pushed down the
/// right >-spine of u until its left factor is no longer >-rooted.
Term nmul(const Term& u, Symbol op, const Term& v);

/// All normal words with `leaves` leaves over the signature's generators,
/// ascending under ordering (1).
std::vector<Term> enumerate_normal(const Signature& sig, std::uint32_t leaves);

}  // namespace shirshov::lalg
