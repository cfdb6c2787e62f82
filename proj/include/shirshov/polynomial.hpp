#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shirshov/order.hpp"
#include "shirshov/scalar.hpp"
#include "shirshov/term.hpp"

namespace shirshov {

struct Monomial {
    Term word;
    Scalar coeff;
};

/// A finite sum of words with nonzero exact coefficients, stored in
/// descending order under the monomial order it was built with. The zero
/// polynomial has no terms.
class Polynomial {
public:
    Polynomial() = default;
    /// Sorts, merges equal words and drops zero coefficients.
    Polynomial(std::vector<Monomial> terms, const Order& order);
    static Polynomial word(const Term& w, Field field = Field::rationals());
    /// Adopts terms that are already strictly descending with nonzero coefficients.
    static Polynomial from_descending(std::vector<Monomial> terms);

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// The order-maximal word. Throws std::domain_error on zero.
    const Term& leading_word() const;
    const Scalar& leading_coeff() const;

    /// Coefficient of w, zero if absent.
    Scalar coeff(const Term& w, Field field) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    std::vector<Monomial> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g, const Order& order);
Polynomial subtract(const Polynomial& f, const Polynomial& g, const Order& order);
Polynomial scale(const Scalar& alpha, const Polynomial& f);

struct Leading {
    Term word;
    Scalar coeff;
};

Leading leading(const Polynomial& f);
/// f divided by its leading coefficient.
Polynomial monic(const Polynomial& f);

/// The linear extension of plugging: sum of alpha * c|_w. In L-algebra mode
/// each plugged word is replaced by its normal form [c|_w].
Polynomial apply_context(const Context& c, const Polynomial& f, const Order& order, Mode mode);

/// f with every word replaced by transform(word), recollected under `order`.
Polynomial map_words(const Polynomial& f, const Order& order, Term (*transform)(const Term&));

/// `c1 * w1 + c2 * w2 - ...` with coefficient 1 omitted; "0" for zero.
std::string format(const Polynomial& f, const Signature& sig);

}  // namespace shirshov
