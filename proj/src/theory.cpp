#include "shirshov/theory.hpp"

#include <algorithm>
#include <functional>

#include "shirshov/normal_words.hpp"

namespace shirshov {

Theory::Theory(Signature sig, OrderKind order, Field field)
    : sig_(std::move(sig)), order_(order, sig_), field_(field) {}

std::uint32_t Theory::add_group(const std::string& name) {
    if (auto g = find_group(name)) return *g;
    if (!is_identifier(name)) throw TheoryError("invalid group name '" + name + "'");
    if (groups_.size() == 64) throw TheoryError("at most 64 rule groups are supported");
    groups_.push_back(name);
    return static_cast<std::uint32_t>(groups_.size() - 1);
}

std::optional<std::uint32_t> Theory::find_group(const std::string& name) const {
    for (std::size_t i = 0; i < groups_.size(); ++i)
        if (groups_[i] == name) return static_cast<std::uint32_t>(i);
    return std::nullopt;
}

std::uint64_t Theory::all_groups_mask() const {
    return groups_.size() == 64 ? ~0ULL : (1ULL << groups_.size()) - 1;
}

std::optional<std::uint32_t> Theory::find_rule(const std::string& name) const {
    for (std::size_t i = 0; i < rules_.size(); ++i)
        if (rules_[i].name == name) return static_cast<std::uint32_t>(i);
    return std::nullopt;
}

const Polynomial& Theory::ground_polynomial(std::uint32_t id) const {
    if (!is_ground(id)) throw std::logic_error("rule '" + rules_.at(id).name + "' is a schema");
    return ground_poly_[id];
}

const std::vector<std::uint32_t>* Theory::ground_rules_at(const Term& w) const {
    auto it = ground_index_.find(w);
    return it == ground_index_.end() ? nullptr : &it->second;
}

std::vector<std::uint32_t> Theory::schemas_for_root(std::optional<Symbol> root) const {
    std::vector<std::uint32_t> out;
    for (auto id : schema_ids_) {
        auto forced = rules_[id].lhs.root_operation();
        if (!forced || (root && *forced == *root)) out.push_back(id);
    }
    return out;
}

Term Theory::ambient(const Term& w) const { return mode() == Mode::LAlgebra ? lalg::bracket(w) : w; }

Polynomial Theory::ambient(const Polynomial& f) const {
    if (mode() != Mode::LAlgebra) return f;
    std::vector<Monomial> terms;
    terms.reserve(f.size());
    for (const auto& m : f.terms()) terms.push_back({lalg::bracket(m.word), m.coeff});
    return Polynomial(std::move(terms), order_);
}

Polynomial Theory::instance_polynomial(std::uint32_t id, const Binding& b) const {
    const Rule& r = rules_.at(id);
    const Term lhs = instantiate(r.lhs, b);
    std::vector<Monomial> terms;
    terms.reserve(r.rhs.size() + 1);
    terms.push_back({lhs, Scalar(1, field_)});
    for (const auto& t : r.rhs) {
        Term w = ambient(instantiate(t.tree, b));
        if (!order_.less(w, lhs))
            throw OrientationError("rule '" + r.name + "': right word " + format(w, sig_) +
                                   " is not below left word " + format(lhs, sig_));
        terms.push_back({std::move(w), -t.coeff});
    }
    return Polynomial(std::move(terms), order_);
}

std::uint32_t Theory::add_rule(Rule rule) {
    if (rule.name.empty()) throw TheoryError("rule without a name");
    if (find_rule(rule.name)) throw TheoryError("duplicate rule name '" + rule.name + "'");
    const std::uint32_t group = add_group(rule.group.empty() ? "main" : rule.group);
    rule.group = groups_[group];
    for (auto& v : rule.lhs.mutable_vars()) {
        for (auto& g : v.guards) {
            if (g.kind != GuardKind::IsIrr) continue;
            g.group_mask = 0;
            for (const auto& name : g.groups) {
                auto idx = find_group(name);
                if (!idx) throw TheoryError("rule '" + rule.name + "': unknown group '" + name + "'");
                g.group_mask |= 1ULL << *idx;
            }
        }
    }
    for (auto& t : rule.rhs) t.coeff = Scalar(t.coeff.value(), field_);

    const auto id = static_cast<std::uint32_t>(rules_.size());
    Polynomial poly;
    if (rule.lhs.is_ground()) {
        const Term lhs = rule.lhs.ground_term();
        check_well_formed(lhs, sig_);
        if (mode() == Mode::LAlgebra && !lalg::is_normal(lhs))
            throw TheoryError("rule '" + rule.name + "': left side " + format(lhs, sig_) + " is not a normal word");
        rules_.push_back(rule);
        rule_group_.push_back(group);
        try {
            poly = instance_polynomial(id, Binding{});
        } catch (...) {
            rules_.pop_back();
            rule_group_.pop_back();
            throw;
        }
        ground_index_[lhs].push_back(id);
    } else {
        rules_.push_back(std::move(rule));
        rule_group_.push_back(group);
        schema_ids_.push_back(id);
    }
    ground_poly_.push_back(std::move(poly));
    try {
        check_stratified();
    } catch (...) {
        if (!rules_.back().lhs.is_ground()) schema_ids_.pop_back();
        else ground_index_[rules_.back().lhs.ground_term()].pop_back();
        rules_.pop_back();
        rule_group_.pop_back();
        ground_poly_.pop_back();
        throw;
    }
    return id;
}

std::uint32_t Theory::add_ground_rule(const std::string& name, const std::string& group, const Polynomial& f) {
    if (f.is_zero()) throw TheoryError("rule '" + name + "' is the zero polynomial");
    const Polynomial m = monic(ambient(f));
    std::vector<RhsTerm> rhs;
    for (std::size_t i = 1; i < m.terms().size(); ++i)
        rhs.push_back({-m.terms()[i].coeff, PatternTree::from_term(m.terms()[i].word)});
    return add_rule(Rule{name, group, Pattern::ground(m.leading_word()), std::move(rhs)});
}

void Theory::check_stratified() const {
    const std::size_t n = groups_.size();
    std::vector<std::uint64_t> deps(n, 0);
    for (std::size_t id = 0; id < rules_.size(); ++id)
        for (const auto& v : rules_[id].lhs.vars())
            for (const auto& g : v.guards)
                if (g.kind == GuardKind::IsIrr) deps[rule_group_[id]] |= g.group_mask;
    // 0 = unvisited, 1 = on stack, 2 = done.
    std::vector<int> state(n, 0);
    std::function<void(std::size_t)> visit = [&](std::size_t g) {
        state[g] = 1;
        for (std::size_t h = 0; h < n; ++h) {
            if (!(deps[g] >> h & 1)) continue;
            if (state[h] == 1)
                throw TheoryError("irreducibility guards form a cycle through group '" + groups_[h] + "'");
            if (state[h] == 0) visit(h);
        }
        state[g] = 2;
    };
    for (std::size_t g = 0; g < n; ++g)
        if (state[g] == 0) visit(g);
}

std::string format_rhs(const std::vector<RhsTerm>& rhs, std::span<const MetaVar> vars, const Signature& sig) {
    if (rhs.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        Scalar c = rhs[i].coeff;
        const bool negative = c.is_negative();
        if (negative) c = -c;
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (!c.is_one()) out += c.str() + " * ";
        out += format(rhs[i].tree, vars, sig);
    }
    return out;
}

std::string format_rule(const Rule& r, const Signature& sig) {
    const auto& vars = r.lhs.vars();
    std::string out = r.name + ": " + format(r.lhs, sig) + " -> " + format_rhs(r.rhs, vars, sig);
    std::vector<std::string> guards;
    for (const auto& v : vars) {
        if (v.spine && v.min_length > 0) guards.push_back("len($" + v.name + "*) >= " + std::to_string(v.min_length));
        for (const auto& g : v.guards) guards.push_back(format(g, v, sig));
    }
    for (std::size_t i = 0; i < guards.size(); ++i) out += (i == 0 ? " where " : ", ") + guards[i];
    return out;
}

}  // namespace shirshov
