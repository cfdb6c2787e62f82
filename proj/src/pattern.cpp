#include "shirshov/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace shirshov {

namespace {

// Non-owning callable reference for the matcher's continuations.
class Continuation {
public:
    template <class F>
    Continuation(F& f) : obj_(&f), call_([](void* o) { return (*static_cast<F*>(o))(); }) {}
    bool operator()() const { return call_(obj_); }

private:
    void* obj_;
    bool (*call_)(void*);
};

}  // namespace

PatternTree PatternTree::generator(Symbol g) {
    return PatternTree(std::make_shared<const Node>(Node{PatternKind::Generator, g, 0, {}}));
}

PatternTree PatternTree::apply(Symbol op, std::vector<PatternTree> children) {
    if (children.empty()) throw std::invalid_argument("operation node needs at least one child");
    return PatternTree(std::make_shared<const Node>(Node{PatternKind::Operation, op, 0, std::move(children)}));
}

PatternTree PatternTree::var(std::uint32_t index) {
    return PatternTree(std::make_shared<const Node>(Node{PatternKind::Var, 0, index, {}}));
}

PatternTree PatternTree::lspine(Symbol op, PatternTree core, std::uint32_t var) {
    return PatternTree(std::make_shared<const Node>(Node{PatternKind::LSpine, op, var, {std::move(core)}}));
}

PatternTree PatternTree::rspine(Symbol op, std::uint32_t var, PatternTree tail) {
    return PatternTree(std::make_shared<const Node>(Node{PatternKind::RSpine, op, var, {std::move(tail)}}));
}

PatternTree PatternTree::from_term(const Term& t) {
    if (t.is_generator()) return generator(t.symbol());
    if (t.is_hole()) throw std::invalid_argument("a pattern cannot contain a hole");
    std::vector<PatternTree> children;
    children.reserve(t.arity());
    for (const auto& c : t.children()) children.push_back(from_term(c));
    return apply(t.symbol(), std::move(children));
}

bool operator==(const PatternTree& a, const PatternTree& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.kind != y.kind || x.symbol != y.symbol || x.var != y.var || x.children.size() != y.children.size())
        return false;
    for (std::size_t i = 0; i < x.children.size(); ++i)
        if (!(x.children[i] == y.children[i])) return false;
    return true;
}

namespace {

void count_vars(const PatternTree& p, std::vector<int>& seen) {
    switch (p.kind()) {
        case PatternKind::Generator:
            return;
        case PatternKind::Var:
        case PatternKind::LSpine:
        case PatternKind::RSpine:
            if (p.var() >= seen.size()) throw std::invalid_argument("metavariable index out of range");
            ++seen[p.var()];
            break;
        case PatternKind::Operation:
            break;
    }
    for (const auto& c : p.children()) count_vars(c, seen);
}

bool ground_of(const PatternTree& p, std::optional<Term>& out) {
    if (p.kind() == PatternKind::Generator) {
        out = Term::generator(p.symbol());
        return true;
    }
    if (p.kind() != PatternKind::Operation) return false;
    std::vector<Term> children;
    for (const auto& c : p.children()) {
        std::optional<Term> t;
        if (!ground_of(c, t)) return false;
        children.push_back(*t);
    }
    out = Term::apply(p.symbol(), std::move(children));
    return true;
}

}  // namespace

Pattern::Pattern(PatternTree tree, std::vector<MetaVar> vars) : tree_(std::move(tree)), vars_(std::move(vars)) {
    std::vector<int> seen(vars_.size(), 0);
    count_vars(tree_, seen);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (seen[i] > 1) throw std::invalid_argument("metavariable $" + vars_[i].name + " occurs more than once");
        if (seen[i] == 0) throw std::invalid_argument("metavariable $" + vars_[i].name + " does not occur");
    }
}

Pattern Pattern::ground(const Term& t) { return Pattern(PatternTree::from_term(t), {}); }

Term Pattern::ground_term() const {
    std::optional<Term> t;
    if (!ground_of(tree_, t)) throw std::logic_error("pattern is not ground");
    return *t;
}

std::optional<std::uint32_t> Pattern::find_var(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return static_cast<std::uint32_t>(i);
    return std::nullopt;
}

std::optional<Symbol> Pattern::root_operation() const {
    switch (tree_.kind()) {
        case PatternKind::Operation:
            return tree_.symbol();
        case PatternKind::LSpine:
        case PatternKind::RSpine:
            if (vars_[tree_.var()].min_length > 0) return tree_.symbol();
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

bool guard_holds(const Guard& g, const Term& t, const MatchEnv& env) {
    switch (g.kind) {
        case GuardKind::IsIrr:
            if (!env.irreducible) throw std::logic_error("irreducibility guard needs an environment");
            return env.irreducible(t, g.group_mask);
        case GuardKind::NotGenerator:
            return !t.is_generator();
        case GuardKind::NotInSet:
            return !(t.is_generator() &&
                     std::find(g.symbols.begin(), g.symbols.end(), t.symbol()) != g.symbols.end());
        case GuardKind::NotTopOp:
            return !t.is_rooted_at(g.symbols.at(0));
        case GuardKind::MaxSize:
            return t.leaf_count() <= g.max_size;
    }
    return false;
}

namespace {

struct Matcher {
    const Pattern& pattern;
    const MatchEnv& env;
    Binding binding;

    bool admissible(const MetaVar& v, const Term& t) const {
        for (const auto& g : v.guards)
            if (!guard_holds(g, t, env)) return false;
        return true;
    }

    // Returns false once the continuation asked to stop.
    bool match(const PatternTree& p, const Term& t, Continuation k) {
        switch (p.kind()) {
            case PatternKind::Generator:
                if (t.is_generator() && t.symbol() == p.symbol()) return k();
                return true;
            case PatternKind::Operation:
                if (!t.is_operation() || t.symbol() != p.symbol() || t.arity() != p.children().size()) return true;
                return match_children(p, t, 0, k);
            case PatternKind::Var: {
                const auto& v = pattern.vars()[p.var()];
                if (!admissible(v, t)) return true;
                binding.values[p.var()] = t;
                const bool go_on = k();
                binding.values[p.var()] = std::monostate{};
                return go_on;
            }
            case PatternKind::LSpine:
                return match_spine(p, t, k, /*left=*/true);
            case PatternKind::RSpine:
                return match_spine(p, t, k, /*left=*/false);
        }
        return true;
    }

    bool match_children(const PatternTree& p, const Term& t, std::size_t i, Continuation k) {
        if (i == p.children().size()) return k();
        auto next = [&] { return match_children(p, t, i + 1, k); };
        return match(p.child(i), t.child(i), Continuation(next));
    }

    bool match_spine(const PatternTree& p, const Term& t, Continuation k, bool left) {
        const auto& v = pattern.vars()[p.var()];
        const Symbol op = p.symbol();
        // Peel as many op nodes as possible; peeled[i] is the element absorbed at depth i.
        std::vector<const Term*> peeled;
        std::vector<const Term*> rest{&t};
        const Term* cur = &t;
        while (cur->is_rooted_at(op)) {
            peeled.push_back(left ? &cur->child(1) : &cur->child(0));
            cur = left ? &cur->child(0) : &cur->child(1);
            rest.push_back(cur);
        }
        const std::size_t longest = std::min<std::size_t>(peeled.size(), env.max_spine);
        for (std::size_t len = longest + 1; len-- > v.min_length;) {
            bool ok = true;
            for (std::size_t i = 0; i < len && ok; ++i) ok = admissible(v, *peeled[i]);
            if (!ok) continue;
            std::vector<Term> elems;
            elems.reserve(len);
            // Spine order: v1 is nearest the core (left) or outermost (right).
            if (left) {
                for (std::size_t i = len; i-- > 0;) elems.push_back(*peeled[i]);
            } else {
                for (std::size_t i = 0; i < len; ++i) elems.push_back(*peeled[i]);
            }
            binding.values[p.var()] = std::move(elems);
            const bool go_on = match(p.child(0), *rest[len], k);
            binding.values[p.var()] = std::monostate{};
            if (!go_on) return false;
        }
        return true;
    }
};

}  // namespace

void match_each(const Pattern& p, const Term& t, const MatchEnv& env,
                const std::function<bool(const Binding&)>& on_match) {
    Matcher m{p, env, Binding{std::vector<BoundValue>(p.vars().size())}};
    auto done = [&] { return on_match(m.binding); };
    m.match(p.tree(), t, Continuation(done));
}

std::vector<Binding> match_pattern(const Pattern& p, const Term& t, const MatchEnv& env) {
    std::vector<Binding> out;
    match_each(p, t, env, [&](const Binding& b) {
        out.push_back(b);
        return true;
    });
    return out;
}

std::optional<Binding> match_first(const Pattern& p, const Term& t, const MatchEnv& env) {
    std::optional<Binding> out;
    match_each(p, t, env, [&](const Binding& b) {
        out = b;
        return false;
    });
    return out;
}

Term instantiate(const PatternTree& p, const Binding& b) {
    auto bound = [&](std::uint32_t v) -> const BoundValue& {
        if (v >= b.values.size() || std::holds_alternative<std::monostate>(b.values[v]))
            throw std::invalid_argument("metavariable without binding");
        return b.values[v];
    };
    switch (p.kind()) {
        case PatternKind::Generator:
            return Term::generator(p.symbol());
        case PatternKind::Operation: {
            std::vector<Term> children;
            children.reserve(p.children().size());
            for (const auto& c : p.children()) children.push_back(instantiate(c, b));
            return Term::apply(p.symbol(), std::move(children));
        }
        case PatternKind::Var: {
            const auto& v = bound(p.var());
            if (!std::holds_alternative<Term>(v)) throw std::invalid_argument("spine list bound to a plain metavariable");
            return std::get<Term>(v);
        }
        case PatternKind::LSpine:
        case PatternKind::RSpine: {
            const auto& v = bound(p.var());
            if (!std::holds_alternative<std::vector<Term>>(v))
                throw std::invalid_argument("word bound to a spine metavariable");
            const auto& elems = std::get<std::vector<Term>>(v);
            Term acc = instantiate(p.child(0), b);
            if (p.kind() == PatternKind::LSpine) {
                for (const auto& e : elems) acc = Term::apply(p.symbol(), acc, e);
            } else {
                for (auto it = elems.rbegin(); it != elems.rend(); ++it) acc = Term::apply(p.symbol(), *it, acc);
            }
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

void format_into(const PatternTree& p, std::span<const MetaVar> vars, const Signature& sig, bool top,
                 std::string& out) {
    const auto& op_sym = [&](Symbol op) -> const std::string& { return sig.operation(op).symbol; };
    switch (p.kind()) {
        case PatternKind::Generator:
            out += sig.generator_name(p.symbol());
            return;
        case PatternKind::Var:
            out += "$" + vars[p.var()].name;
            return;
        case PatternKind::LSpine:
            out += "lchain(" + op_sym(p.symbol()) + ", ";
            format_into(p.child(0), vars, sig, true, out);
            out += ", $" + vars[p.var()].name + "*)";
            return;
        case PatternKind::RSpine:
            out += "rchain(" + op_sym(p.symbol()) + ", $" + vars[p.var()].name + "*, ";
            format_into(p.child(0), vars, sig, true, out);
            out += ")";
            return;
        case PatternKind::Operation:
            break;
    }
    if (sig.is_infix(p.symbol()) && p.children().size() == 2) {
        if (!top) out += '(';
        format_into(p.child(0), vars, sig, false, out);
        out += op_sym(p.symbol());
        format_into(p.child(1), vars, sig, false, out);
        if (!top) out += ')';
        return;
    }
    out += op_sym(p.symbol()) + "(";
    for (std::size_t i = 0; i < p.children().size(); ++i) {
        if (i) out += ',';
        format_into(p.child(i), vars, sig, true, out);
    }
    out += ')';
}

}  // namespace

std::string format(const PatternTree& p, std::span<const MetaVar> vars, const Signature& sig) {
    std::string out;
    format_into(p, vars, sig, true, out);
    return out;
}

std::string format(const Pattern& p, const Signature& sig) { return format(p.tree(), p.vars(), sig); }

std::string format(const Binding& b, std::span<const MetaVar> vars, const Signature& sig) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < b.values.size() && i < vars.size(); ++i) {
        const auto& v = b.values[i];
        if (std::holds_alternative<std::monostate>(v)) continue;
        if (!first) out += ", ";
        first = false;
        out += "$" + vars[i].name;
        if (const auto* t = std::get_if<Term>(&v)) {
            out += "=" + format(*t, sig);
        } else {
            out += "*=[";
            const auto& elems = std::get<std::vector<Term>>(v);
            for (std::size_t j = 0; j < elems.size(); ++j) {
                if (j) out += ", ";
                out += format(elems[j], sig);
            }
            out += "]";
        }
    }
    return out + "}";
}

std::string format(const Guard& g, const MetaVar& v, const Signature& sig) {
    const std::string var = "$" + v.name + (v.spine ? "*" : "");
    switch (g.kind) {
        case GuardKind::IsIrr: {
            std::string out = "irr(" + var;
            for (const auto& grp : g.groups) out += ", " + grp;
            return out + ")";
        }
        case GuardKind::NotGenerator:
            return "notgen(" + var + ")";
        case GuardKind::NotInSet: {
            std::string out = "notin(" + var;
            for (auto s : g.symbols) out += ", " + sig.generator_name(s);
            return out + ")";
        }
        case GuardKind::NotTopOp:
            return "nottop(" + var + ", " + sig.operation(g.symbols.at(0)).symbol + ")";
        case GuardKind::MaxSize:
            return "maxsize(" + var + ", " + std::to_string(g.max_size) + ")";
    }
    return {};
}

}  // namespace shirshov
