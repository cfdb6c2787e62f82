#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "shirshov/order.hpp"
#include "shirshov/pattern.hpp"
#include "shirshov/polynomial.hpp"
#include "shirshov/scalar.hpp"
#include "shirshov/signature.hpp"

namespace shirshov {

/// One summand coeff * tree of a rule's right side.
struct RhsTerm {
    Scalar coeff;
    PatternTree tree;
};

/// An oriented rule lhs -> sum of rhs terms. Ground rules have a ground
/// left side; schemas carry metavariables, spines and guards.
struct Rule {
    std::string name;
    std::string group;
    Pattern lhs;
    std::vector<RhsTerm> rhs;
};

class TheoryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rule instance whose right side is not below its left side.
class OrientationError : public TheoryError {
public:
    using TheoryError::TheoryError;
};

inline constexpr std::uint32_t kDefaultFamilyBound = 3;
inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

/// Signature, monomial order, coefficient field and rules. Rules are
/// grouped; irreducibility guards name groups, and the group dependency
/// graph must be acyclic.
class Theory {
public:
    Theory(Signature sig, OrderKind order, Field field = Field::rationals());

    const Signature& signature() const { return sig_; }
    Mode mode() const { return sig_.mode(); }
    const Order& order() const { return order_; }
    Field field() const { return field_; }

    std::uint32_t family_bound() const { return family_bound_; }
    void set_family_bound(std::uint32_t bound) { family_bound_ = bound; }
    std::uint64_t fuel() const { return fuel_; }
    void set_fuel(std::uint64_t fuel) { fuel_ = fuel; }

    /// Declares a group if it is new; returns its index.
    std::uint32_t add_group(const std::string& name);
    const std::vector<std::string>& groups() const { return groups_; }
    std::optional<std::uint32_t> find_group(const std::string& name) const;
    std::uint64_t all_groups_mask() const;

    /// Resolves guard groups, checks stratification and, for ground rules,
    /// orientation. Returns the rule id.
    std::uint32_t add_rule(Rule rule);
    /// A ground rule from a nonzero polynomial, made monic and oriented by
    /// its leading word.
    std::uint32_t add_ground_rule(const std::string& name, const std::string& group, const Polynomial& f);

    const std::vector<Rule>& rules() const { return rules_; }
    const Rule& rule(std::uint32_t id) const { return rules_.at(id); }
    std::optional<std::uint32_t> find_rule(const std::string& name) const;
    std::uint32_t group_of(std::uint32_t id) const { return rule_group_[id]; }
    bool is_ground(std::uint32_t id) const { return rules_[id].lhs.is_ground(); }
    /// The monic polynomial lhs - rhs of a ground rule.
    const Polynomial& ground_polynomial(std::uint32_t id) const;

    /// Ground rules whose left side is exactly w, ascending by id.
    const std::vector<std::uint32_t>* ground_rules_at(const Term& w) const;
    /// Schemas that may match a word with this root (nullopt for generators), ascending by id.
    std::vector<std::uint32_t> schemas_for_root(std::optional<Symbol> root) const;
    const std::vector<std::uint32_t>& schema_ids() const { return schema_ids_; }

    /// The polynomial lhs - sum rhs of a binding of rule `id`; in L-algebra
    /// mode each word is bracketed. Throws OrientationError unless every
    /// right word is below the left word.
    Polynomial instance_polynomial(std::uint32_t id, const Binding& b) const;

    /// Words of the ambient algebra: bracketed in L-algebra mode.
    Term ambient(const Term& w) const;
    Polynomial ambient(const Polynomial& f) const;

private:
    void check_stratified() const;

    Signature sig_;
    Order order_;
    Field field_;
    std::uint32_t family_bound_ = kDefaultFamilyBound;
    std::uint64_t fuel_ = kDefaultFuel;
    std::vector<std::string> groups_;
    std::vector<Rule> rules_;
    std::vector<std::uint32_t> rule_group_;
    std::vector<Polynomial> ground_poly_;
    std::unordered_map<Term, std::vector<std::uint32_t>, TermHash> ground_index_;
    std::vector<std::uint32_t> schema_ids_;
};

/// `name: lhs -> rhs where guard, ...`
std::string format_rule(const Rule& r, const Signature& sig);
/// `c1 * t1 + c2 * t2`, or `0` when empty.
std::string format_rhs(const std::vector<RhsTerm>& rhs, std::span<const MetaVar> vars, const Signature& sig);

}  // namespace shirshov
