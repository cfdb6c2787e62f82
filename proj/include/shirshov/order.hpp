#pragma once

#include <compare>
#include <string>
#include <vector>

#include "shirshov/signature.hpp"
#include "shirshov/term.hpp"

namespace shirshov {

enum class OrderKind {
    /// Weight tuple (|u|_Omega + |u|_X, |u|_X, op, children...): monomial on any signature.
    WeightGeneral,
    /// Weight tuple (|u|_X, op, left, right): ordering (1) on the binary pair.
    WeightL,
};

std::string to_string(OrderKind kind);
OrderKind parse_order_kind(const std::string& text);

/// Compares by the general weight ordering; precedences come from `sig`.
std::strong_ordering compare_general(const Term& u, const Term& v, const Signature& sig);

/// Compares by ordering (1). Throws SignatureError unless the signature's
/// operations are exactly the binary pair {>, <}.
std::strong_ordering compare_L(const Term& u, const Term& v, const Signature& sig);

/// The ordering-(1) key (|u|_X, op, children...) applied to an arbitrary
/// signature, with generators placed below operations when a leaf meets a
/// node of equal leaf count. Test-only: it is not well-founded once unary
/// operations are present.
std::strong_ordering compare_leaf_weight(const Term& u, const Term& v, const Signature& sig);

/// A monomial ordering bound to a signature. Cheap to copy.
class Order {
public:
    Order(OrderKind kind, const Signature& sig);

    OrderKind kind() const { return kind_; }

    std::strong_ordering compare(const Term& u, const Term& v) const;
    bool less(const Term& u, const Term& v) const { return compare(u, v) < 0; }
    bool greater(const Term& u, const Term& v) const { return compare(u, v) > 0; }

private:
    OrderKind kind_;
    std::vector<std::uint32_t> generator_rank_;
    std::vector<std::uint32_t> operation_rank_;
};

/// Descending comparator, for containers keyed by words with the leading word first.
struct Descending {
    const Order* order;
    bool operator()(const Term& a, const Term& b) const { return order->greater(a, b); }
};

/// The signature of the ill-founded example: one generator x and unary
/// operations zeta < delta.
Signature remark_signature();

/// delta(x), zeta(delta(x)), zeta(zeta(delta(x))), ... : the first k
/// members of an infinite chain that descends under compare_leaf_weight.
std::vector<Term> remark_chain(std::size_t k);

std::string to_string(std::strong_ordering c);

}  // namespace shirshov
