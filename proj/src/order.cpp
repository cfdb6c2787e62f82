#include "shirshov/order.hpp"

#include <stdexcept>

namespace shirshov {

std::string to_string(OrderKind kind) {
    return kind == OrderKind::WeightGeneral ? "weight-general" : "weight-L";
}

OrderKind parse_order_kind(const std::string& text) {
    if (text == "weight-general") return OrderKind::WeightGeneral;
    if (text == "weight-L") return OrderKind::WeightL;
    throw std::invalid_argument("unknown order kind '" + text + "' (expected weight-general or weight-L)");
}

std::string to_string(std::strong_ordering c) {
    if (c < 0) return "LT";
    if (c > 0) return "GT";
    return "EQ";
}

namespace {

struct Ranks {
    const std::vector<std::uint32_t>& gen;
    const std::vector<std::uint32_t>& op;
};

std::strong_ordering compare_children(const Term& u, const Term& v, const Ranks& r,
                                       std::strong_ordering (*cmp)(const Term&, const Term&, const Ranks&)) {
    // Equal operation symbols imply equal arity.
    for (std::size_t i = 0; i < u.arity(); ++i) {
        auto c = cmp(u.child(i), v.child(i), r);
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering general(const Term& u, const Term& v, const Ranks& r) {
    if (u.same_node(v)) return std::strong_ordering::equal;
    const auto wu = u.leaf_count() + u.node_count();
    const auto wv = v.leaf_count() + v.node_count();
    if (auto c = wu <=> wv; c != 0) return c;
    if (auto c = u.leaf_count() <=> v.leaf_count(); c != 0) return c;
    // Equal total weight: a leaf (weight 1) can only meet another leaf.
    if (u.is_generator()) return r.gen[u.symbol()] <=> r.gen[v.symbol()];
    if (auto c = r.op[u.symbol()] <=> r.op[v.symbol()]; c != 0) return c;
    return compare_children(u, v, r, general);
}

std::strong_ordering leaf_weight(const Term& u, const Term& v, const Ranks& r) {
    if (u.same_node(v)) return std::strong_ordering::equal;
    if (auto c = u.leaf_count() <=> v.leaf_count(); c != 0) return c;
    if (u.is_generator() && v.is_generator()) return r.gen[u.symbol()] <=> r.gen[v.symbol()];
    if (u.is_generator()) return std::strong_ordering::less;
    if (v.is_generator()) return std::strong_ordering::greater;
    if (auto c = r.op[u.symbol()] <=> r.op[v.symbol()]; c != 0) return c;
    return compare_children(u, v, r, leaf_weight);
}

std::vector<std::uint32_t> gen_ranks(const Signature& sig) {
    std::vector<std::uint32_t> out(sig.generator_count());
    for (Symbol g = 0; g < out.size(); ++g) out[g] = sig.generator_rank(g);
    return out;
}

std::vector<std::uint32_t> op_ranks(const Signature& sig) {
    std::vector<std::uint32_t> out(sig.operation_count());
    for (Symbol op = 0; op < out.size(); ++op) out[op] = sig.operation_rank(op);
    return out;
}

}  // namespace

std::strong_ordering compare_general(const Term& u, const Term& v, const Signature& sig) {
    return Order(OrderKind::WeightGeneral, sig).compare(u, v);
}

std::strong_ordering compare_L(const Term& u, const Term& v, const Signature& sig) {
    return Order(OrderKind::WeightL, sig).compare(u, v);
}

std::strong_ordering compare_leaf_weight(const Term& u, const Term& v, const Signature& sig) {
    const auto g = gen_ranks(sig);
    const auto o = op_ranks(sig);
    return leaf_weight(u, v, Ranks{g, o});
}

Order::Order(OrderKind kind, const Signature& sig)
    : kind_(kind), generator_rank_(gen_ranks(sig)), operation_rank_(op_ranks(sig)) {
    if (kind_ == OrderKind::WeightL && !sig.is_binary_pair())
        throw SignatureError("ordering weight-L is defined only for the binary pair {>, <}");
}

std::strong_ordering Order::compare(const Term& u, const Term& v) const {
    const Ranks r{generator_rank_, operation_rank_};
    return kind_ == OrderKind::WeightGeneral ? general(u, v, r) : leaf_weight(u, v, r);
}

Signature remark_signature() {
    Signature sig({"x"}, {{"zeta", 1}, {"delta", 1}}, Mode::OmegaFree);
    return sig;
}

std::vector<Term> remark_chain(std::size_t k) {
    const Symbol zeta = 0, delta = 1;
    std::vector<Term> chain;
    chain.reserve(k);
    if (k == 0) return chain;
    chain.push_back(Term::apply(delta, std::vector<Term>{Term::generator(0)}));
    while (chain.size() < k) chain.push_back(Term::apply(zeta, std::vector<Term>{chain.back()}));
    return chain;
}

}  // namespace shirshov
