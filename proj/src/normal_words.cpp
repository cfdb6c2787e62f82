#include "shirshov/normal_words.hpp"

#include <algorithm>
#include <stdexcept>

#include "shirshov/order.hpp"

namespace shirshov::lalg {

bool is_normal(const Term& u) {
    if (!u.is_operation()) return true;
    if (u.is_rooted_at(kPrec) && u.child(0).is_rooted_at(kSucc)) return false;
    return is_normal(u.child(0)) && is_normal(u.child(1));
}

Term nmul(const Term& u, Symbol op, const Term& v) {
    if (op == kPrec && u.is_rooted_at(kSucc))
        return Term::apply(kSucc, u.child(0), nmul(u.child(1), kPrec, v));
    return Term::apply(op, u, v);
}

Term bracket(const Term& u) {
    if (!u.is_operation()) return u;
    if (u.arity() != 2 || u.symbol() > kPrec) throw std::invalid_argument("bracket needs a word over {>, <}");
    Term left = bracket(u.child(0));
    Term right = bracket(u.child(1));
    if (left.same_node(u.child(0)) && right.same_node(u.child(1)) &&
        !(u.symbol() == kPrec && left.is_rooted_at(kSucc)))
        return u;
    return nmul(left, u.symbol(), right);
}

std::vector<Term> enumerate_normal(const Signature& sig, std::uint32_t leaves) {
    if (!sig.is_binary_pair()) throw SignatureError("normal words live over the binary pair {>, <}");
    std::vector<std::vector<Term>> by_size(leaves + 1);
    for (std::uint32_t n = 1; n <= leaves; ++n) {
        auto& level = by_size[n];
        if (n == 1) {
            for (Symbol g = 0; g < sig.generator_count(); ++g) level.push_back(Term::generator(g));
            continue;
        }
        for (std::uint32_t k = 1; k < n; ++k) {
            for (const auto& left : by_size[k]) {
                for (const auto& right : by_size[n - k]) {
                    level.push_back(Term::apply(kSucc, left, right));
                    if (!left.is_rooted_at(kSucc)) level.push_back(Term::apply(kPrec, left, right));
                }
            }
        }
    }
    auto out = std::move(by_size[leaves]);
    const Order order(OrderKind::WeightL, sig);
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order.less(a, b); });
    return out;
}

}  // namespace shirshov::lalg
