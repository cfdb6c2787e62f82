#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shirshov {

using Symbol = std::uint32_t;

/// Ambient algebra: the free Omega-algebra k(X,Omega), or the free
/// L-algebra L(X) whose carrier is the set of normal words.
enum class Mode { OmegaFree, LAlgebra };

struct Operation {
    std::string symbol;
    std::uint32_t arity = 2;
    friend bool operator==(const Operation&, const Operation&) = default;
};

/// In the L-signature the succ operation is symbol 0 and prec is symbol 1.
inline constexpr Symbol kSucc = 0;
inline constexpr Symbol kPrec = 1;

/// Generators X and operations Omega, each with a precedence rank used by
/// the monomial orderings. Ranks default to declaration order.
class Signature {
public:
    Signature() = default;
    Signature(std::vector<std::string> generators, std::vector<Operation> operations, Mode mode);

    /// The binary pair {>, <} with > preceding <, in LAlgebra mode.
    static Signature l_algebra(std::vector<std::string> generators);
    /// Same operations over the free Omega-algebra (used for the L-identity itself).
    static Signature binary_pair(std::vector<std::string> generators);

    Mode mode() const { return mode_; }

    std::size_t generator_count() const { return generators_.size(); }
    std::size_t operation_count() const { return operations_.size(); }

    const std::string& generator_name(Symbol g) const { return generators_.at(g); }
    const Operation& operation(Symbol op) const { return operations_.at(op); }
    std::uint32_t arity(Symbol op) const { return operations_.at(op).arity; }
    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<Operation>& operations() const { return operations_; }

    std::optional<Symbol> find_generator(const std::string& name) const;
    std::optional<Symbol> find_operation(const std::string& symbol) const;

    /// Operations spelled with punctuation are written infix and must be binary.
    bool is_infix(Symbol op) const;
    /// Exactly the operations [>/2, </2].
    bool is_binary_pair() const;
    /// Every operation has arity at least two, so each leaf count has finitely many words.
    bool is_finitary() const;

    std::uint32_t generator_rank(Symbol g) const { return generator_rank_[g]; }
    std::uint32_t operation_rank(Symbol op) const { return operation_rank_[op]; }

    /// Reorders precedence; names are listed from smallest to largest and
    /// must be a permutation of the declared ones.
    void set_generator_order(const std::vector<std::string>& ascending);
    void set_operation_order(const std::vector<std::string>& ascending);

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<std::string> generators_;
    std::vector<Operation> operations_;
    Mode mode_ = Mode::OmegaFree;
    std::vector<std::uint32_t> generator_rank_;
    std::vector<std::uint32_t> operation_rank_;
};

class SignatureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_identifier(const std::string& name);

}  // namespace shirshov
