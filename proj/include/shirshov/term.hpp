#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "shirshov/signature.hpp"

namespace shirshov {

enum class NodeKind : std::uint8_t { Generator, Operation, Hole };

/// An immutable Omega-word: leaves are generators, internal nodes are
/// operations applied to as many children as their arity. A word may also
/// contain hole leaves, which is how star-contexts are represented.
///
/// Terms share structure and cache their leaf count, node count and hash,
/// so copies are cheap and safe to hand across threads.
class Term {
public:
    static Term generator(Symbol g);
    static Term apply(Symbol op, std::vector<Term> children);
    static Term apply(Symbol op, Term left, Term right);
    static Term hole();

    NodeKind kind() const { return node_->kind; }
    bool is_generator() const { return node_->kind == NodeKind::Generator; }
    bool is_operation() const { return node_->kind == NodeKind::Operation; }
    bool is_hole() const { return node_->kind == NodeKind::Hole; }
    /// True for an operation node with the given symbol.
    bool is_rooted_at(Symbol op) const { return is_operation() && node_->symbol == op; }

    Symbol symbol() const { return node_->symbol; }
    std::span<const Term> children() const { return node_->children; }
    const Term& child(std::size_t i) const { return node_->children[i]; }
    std::size_t arity() const { return node_->children.size(); }

    /// |u|_X: generator leaves (holes are not counted).
    std::uint32_t leaf_count() const { return node_->leaves; }
    /// |u|_Omega: operation nodes.
    std::uint32_t node_count() const { return node_->nodes; }
    std::uint32_t hole_count() const { return node_->holes; }
    std::size_t hash() const { return node_->hash; }

    bool same_node(const Term& other) const { return node_ == other.node_; }

    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node {
        NodeKind kind;
        Symbol symbol;
        std::uint32_t leaves;
        std::uint32_t nodes;
        std::uint32_t holes;
        std::size_t hash;
        std::vector<Term> children;
    };

    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Structural total order, independent of any signature precedence; used
/// only for containers that need some deterministic key order.
bool structural_less(const Term& a, const Term& b);

struct Measures {
    std::uint32_t leaves = 0;
    std::uint32_t nodes = 0;
    friend bool operator==(const Measures&, const Measures&) = default;
};

Measures measures(const Term& u);

/// Child indices from the root down to a subterm.
using Path = std::vector<std::uint8_t>;

const Term& subterm_at(const Term& u, const Path& path);
/// u with the subterm at `path` replaced by t.
Term replace_at(const Term& u, const Path& path, const Term& t);

/// A star-word: a term with exactly one hole.
class Context {
public:
    /// The bare hole.
    Context();
    /// Throws std::invalid_argument unless `tree` has exactly one hole.
    explicit Context(Term tree);
    /// The context obtained by cutting `u` at `path`.
    static Context at(const Term& u, const Path& path);

    const Term& tree() const { return tree_; }
    bool is_identity() const { return tree_.is_hole(); }
    /// Path of the hole.
    Path hole_path() const;

    friend bool operator==(const Context&, const Context&) = default;

private:
    Term tree_;
};

/// u|_t: the hole replaced by t.
Term plug(const Context& c, const Term& t);

struct Occurrence {
    Context context;
    Term subterm;
    Path path;
};

/// Every decomposition u = c|_s in preorder, the root (hole, u) first.
std::vector<Occurrence> occurrences(const Term& u);

/// Calls fn(path, subterm) for every subterm in preorder; stops early when
/// fn returns false. Returns false iff stopped early.
bool for_each_subterm(const Term& u, const std::function<bool(const Path&, const Term&)>& fn);

/// Prints with infix operations parenthesized everywhere except at the
/// top level, e.g. `x>(y<z)`; prefix operations as `f(a,b)`; holes as `*`.
std::string format(const Term& u, const Signature& sig);

/// All words (no holes) with exactly `leaves` generator leaves, in a
/// deterministic enumeration order. Requires a finitary signature.
std::vector<Term> enumerate_words(const Signature& sig, std::uint32_t leaves);

/// Validates generator and operation symbols against the signature.
void check_well_formed(const Term& u, const Signature& sig);

}  // namespace shirshov
