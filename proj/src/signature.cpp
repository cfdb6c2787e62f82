#include "shirshov/signature.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace shirshov {

bool is_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

namespace {

bool is_infix_symbol(const std::string& s) {
    return s.size() == 1 && std::string("><^&|.~@#%").find(s[0]) != std::string::npos;
}

const std::set<std::string> kReserved = {"lchain", "rchain"};

}  // namespace

Signature::Signature(std::vector<std::string> generators, std::vector<Operation> operations, Mode mode)
    : generators_(std::move(generators)), operations_(std::move(operations)), mode_(mode) {
    if (generators_.empty()) throw SignatureError("signature needs at least one generator");
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (!is_identifier(g)) throw SignatureError("generator name '" + g + "' is not an identifier");
        if (kReserved.count(g)) throw SignatureError("'" + g + "' is reserved");
        if (!seen.insert(g).second) throw SignatureError("duplicate symbol '" + g + "'");
    }
    for (const auto& op : operations_) {
        if (op.arity < 1) throw SignatureError("operation '" + op.symbol + "' must have arity >= 1");
        if (!is_identifier(op.symbol) && !is_infix_symbol(op.symbol))
            throw SignatureError("operation symbol '" + op.symbol + "' is neither an identifier nor an infix symbol");
        if (is_infix_symbol(op.symbol) && op.arity != 2)
            throw SignatureError("infix operation '" + op.symbol + "' must be binary");
        if (kReserved.count(op.symbol)) throw SignatureError("'" + op.symbol + "' is reserved");
        if (!seen.insert(op.symbol).second) throw SignatureError("duplicate symbol '" + op.symbol + "'");
    }
    if (mode_ == Mode::LAlgebra && !is_binary_pair())
        throw SignatureError("L-algebra mode requires exactly the operations >/2 and </2");
    generator_rank_.resize(generators_.size());
    for (std::size_t i = 0; i < generators_.size(); ++i) generator_rank_[i] = static_cast<std::uint32_t>(i);
    operation_rank_.resize(operations_.size());
    for (std::size_t i = 0; i < operations_.size(); ++i) operation_rank_[i] = static_cast<std::uint32_t>(i);
}

Signature Signature::l_algebra(std::vector<std::string> generators) {
    return Signature(std::move(generators), {{">", 2}, {"<", 2}}, Mode::LAlgebra);
}

Signature Signature::binary_pair(std::vector<std::string> generators) {
    return Signature(std::move(generators), {{">", 2}, {"<", 2}}, Mode::OmegaFree);
}

std::optional<Symbol> Signature::find_generator(const std::string& name) const {
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end()) return std::nullopt;
    return static_cast<Symbol>(it - generators_.begin());
}

std::optional<Symbol> Signature::find_operation(const std::string& symbol) const {
    for (std::size_t i = 0; i < operations_.size(); ++i)
        if (operations_[i].symbol == symbol) return static_cast<Symbol>(i);
    return std::nullopt;
}

bool Signature::is_infix(Symbol op) const { return is_infix_symbol(operations_.at(op).symbol); }

bool Signature::is_binary_pair() const {
    return operations_.size() == 2 && operations_[0].symbol == ">" && operations_[0].arity == 2 &&
           operations_[1].symbol == "<" && operations_[1].arity == 2;
}

bool Signature::is_finitary() const {
    return std::all_of(operations_.begin(), operations_.end(), [](const Operation& op) { return op.arity >= 2; });
}

namespace {

template <class Names, class Lookup>
std::vector<std::uint32_t> ranks_from(const std::vector<std::string>& ascending, std::size_t count,
                                      Lookup lookup, const char* what) {
    if (ascending.size() != count)
        throw SignatureError(std::string(what) + " precedence must list every declared symbol exactly once");
    std::vector<std::uint32_t> rank(count, UINT32_MAX);
    for (std::size_t i = 0; i < ascending.size(); ++i) {
        auto sym = lookup(ascending[i]);
        if (!sym) throw SignatureError(std::string("unknown ") + what + " '" + ascending[i] + "' in precedence");
        if (rank[*sym] != UINT32_MAX) throw SignatureError("'" + ascending[i] + "' listed twice in precedence");
        rank[*sym] = static_cast<std::uint32_t>(i);
    }
    return rank;
}

}  // namespace

void Signature::set_generator_order(const std::vector<std::string>& ascending) {
    generator_rank_ = ranks_from<void>(ascending, generators_.size(),
                                       [this](const std::string& s) { return find_generator(s); }, "generator");
}

void Signature::set_operation_order(const std::vector<std::string>& ascending) {
    operation_rank_ = ranks_from<void>(ascending, operations_.size(),
                                       [this](const std::string& s) { return find_operation(s); }, "operation");
}

}  // namespace shirshov
