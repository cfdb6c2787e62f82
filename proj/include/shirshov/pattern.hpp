#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "shirshov/signature.hpp"
#include "shirshov/term.hpp"

namespace shirshov {

enum class GuardKind { IsIrr, NotGenerator, NotInSet, NotTopOp, MaxSize };

/// A side condition on the value bound to a metavariable. For spine
/// metavariables it applies to every element of the spine.
struct Guard {
    GuardKind kind = GuardKind::NotGenerator;
    /// IsIrr: names of the rule groups whose union the value must be irreducible for.
    std::vector<std::string> groups;
    /// IsIrr: the same groups as a bit mask, filled in when a theory adopts the rule.
    std::uint64_t group_mask = 0;
    /// NotInSet: excluded generators. NotTopOp: the excluded root operation.
    std::vector<Symbol> symbols;
    /// MaxSize: largest admissible leaf count.
    std::uint32_t max_size = 0;

    friend bool operator==(const Guard&, const Guard&) = default;
};

struct MetaVar {
    std::string name;
    bool spine = false;
    /// Spines only: fewest elements a match may absorb.
    std::uint32_t min_length = 0;
    std::vector<Guard> guards;

    friend bool operator==(const MetaVar&, const MetaVar&) = default;
};

enum class PatternKind : std::uint8_t { Generator, Operation, Var, LSpine, RSpine };

/// Tree of a rule pattern. Var, LSpine and RSpine nodes refer to
/// metavariables by index into the owning Pattern's table.
///
///   LSpine(op, core, v*)  stands for  (((core op v1) op v2) ... op vk)
///   RSpine(op, v*, tail)  stands for  v1 op (v2 op (... op (vk op tail)))
class PatternTree {
public:
    static PatternTree generator(Symbol g);
    static PatternTree apply(Symbol op, std::vector<PatternTree> children);
    static PatternTree var(std::uint32_t index);
    static PatternTree lspine(Symbol op, PatternTree core, std::uint32_t var);
    static PatternTree rspine(Symbol op, std::uint32_t var, PatternTree tail);
    /// A ground pattern matching exactly this word.
    static PatternTree from_term(const Term& t);

    PatternKind kind() const { return node_->kind; }
    /// Generator or operation symbol.
    Symbol symbol() const { return node_->symbol; }
    /// Metavariable index of Var and spine nodes.
    std::uint32_t var() const { return node_->var; }
    std::span<const PatternTree> children() const { return node_->children; }
    const PatternTree& child(std::size_t i) const { return node_->children[i]; }

    friend bool operator==(const PatternTree& a, const PatternTree& b);

private:
    struct Node {
        PatternKind kind;
        Symbol symbol;
        std::uint32_t var;
        std::vector<PatternTree> children;
    };
    explicit PatternTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// A linear pattern: a tree plus its metavariable table; every metavariable
/// occurs exactly once in the tree.
class Pattern {
public:
    /// Throws std::invalid_argument on a repeated or unused metavariable.
    Pattern(PatternTree tree, std::vector<MetaVar> vars);
    static Pattern ground(const Term& t);

    const PatternTree& tree() const { return tree_; }
    const std::vector<MetaVar>& vars() const { return vars_; }
    std::vector<MetaVar>& mutable_vars() { return vars_; }
    bool is_ground() const { return vars_.empty(); }
    /// The word of a ground pattern.
    Term ground_term() const;
    std::optional<std::uint32_t> find_var(const std::string& name) const;

    /// Root operation every match must have, if one is forced.
    std::optional<Symbol> root_operation() const;

private:
    PatternTree tree_;
    std::vector<MetaVar> vars_;
};

/// Value of one metavariable: a word, or the element list of a spine.
using BoundValue = std::variant<std::monostate, Term, std::vector<Term>>;

struct Binding {
    std::vector<BoundValue> values;

    friend bool operator==(const Binding&, const Binding&) = default;
};

/// What a match needs from its surroundings.
struct MatchEnv {
    /// Irreducibility of a word modulo the union of the rule groups in the mask.
    std::function<bool(const Term&, std::uint64_t)> irreducible;
    /// Longest spine a match may absorb.
    std::uint32_t max_spine = UINT32_MAX;
};

/// Reports every binding b with instantiate(p, b) = t whose guards hold,
/// longest spines first; stops when on_match returns false.
void match_each(const Pattern& p, const Term& t, const MatchEnv& env,
                const std::function<bool(const Binding&)>& on_match);
std::vector<Binding> match_pattern(const Pattern& p, const Term& t, const MatchEnv& env);
std::optional<Binding> match_first(const Pattern& p, const Term& t, const MatchEnv& env);

/// Builds the word; throws std::invalid_argument on an unbound metavariable.
Term instantiate(const PatternTree& p, const Binding& b);
inline Term instantiate(const Pattern& p, const Binding& b) { return instantiate(p.tree(), b); }

bool guard_holds(const Guard& g, const Term& t, const MatchEnv& env);

std::string format(const PatternTree& p, std::span<const MetaVar> vars, const Signature& sig);
std::string format(const Pattern& p, const Signature& sig);
std::string format(const Binding& b, std::span<const MetaVar> vars, const Signature& sig);
std::string format(const Guard& g, const MetaVar& v, const Signature& sig);

}  // namespace shirshov
