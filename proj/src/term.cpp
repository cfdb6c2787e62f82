#include "shirshov/term.hpp"

#include <stdexcept>

namespace shirshov {

namespace {

constexpr std::size_t kGeneratorSeed = 0x9e3779b97f4a7c15ULL;
constexpr std::size_t kOperationSeed = 0xc2b2ae3d27d4eb4fULL;
constexpr std::size_t kHoleHash = 0x165667b19e3779f9ULL;

std::size_t mix(std::size_t h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

Term Term::generator(Symbol g) {
    return Term(std::make_shared<const Node>(
        Node{NodeKind::Generator, g, 1, 0, 0, mix(kGeneratorSeed, g), {}}));
}

Term Term::hole() {
    static const Term instance(std::make_shared<const Node>(Node{NodeKind::Hole, 0, 0, 0, 1, kHoleHash, {}}));
    return instance;
}

Term Term::apply(Symbol op, std::vector<Term> children) {
    if (children.empty()) throw std::invalid_argument("operation node needs at least one child");
    std::uint32_t leaves = 0, nodes = 1, holes = 0;
    std::size_t h = mix(kOperationSeed, op);
    for (const auto& c : children) {
        leaves += c.leaf_count();
        nodes += c.node_count();
        holes += c.hole_count();
        h = mix(h, c.hash());
    }
    return Term(std::make_shared<const Node>(
        Node{NodeKind::Operation, op, leaves, nodes, holes, h, std::move(children)}));
}

Term Term::apply(Symbol op, Term left, Term right) {
    std::vector<Term> children;
    children.reserve(2);
    children.push_back(std::move(left));
    children.push_back(std::move(right));
    return apply(op, std::move(children));
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.hash != y.hash || x.kind != y.kind || x.symbol != y.symbol || x.leaves != y.leaves ||
        x.nodes != y.nodes || x.children.size() != y.children.size())
        return false;
    for (std::size_t i = 0; i < x.children.size(); ++i)
        if (!(x.children[i] == y.children[i])) return false;
    return true;
}

bool structural_less(const Term& a, const Term& b) {
    if (a.same_node(b)) return false;
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    if (a.symbol() != b.symbol()) return a.symbol() < b.symbol();
    if (a.arity() != b.arity()) return a.arity() < b.arity();
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (structural_less(a.child(i), b.child(i))) return true;
        if (structural_less(b.child(i), a.child(i))) return false;
    }
    return false;
}

Measures measures(const Term& u) { return {u.leaf_count(), u.node_count()}; }

const Term& subterm_at(const Term& u, const Path& path) {
    const Term* t = &u;
    for (auto i : path) {
        if (i >= t->arity()) throw std::out_of_range("path leaves the term");
        t = &t->child(i);
    }
    return *t;
}

namespace {

Term replace_from(const Term& u, const Path& path, std::size_t depth, const Term& t) {
    if (depth == path.size()) return t;
    const std::size_t i = path[depth];
    if (i >= u.arity()) throw std::out_of_range("path leaves the term");
    std::vector<Term> children(u.children().begin(), u.children().end());
    children[i] = replace_from(u.child(i), path, depth + 1, t);
    return Term::apply(u.symbol(), std::move(children));
}

bool find_hole(const Term& u, Path& path) {
    if (u.is_hole()) return true;
    for (std::size_t i = 0; i < u.arity(); ++i) {
        if (u.child(i).hole_count() == 0) continue;
        path.push_back(static_cast<std::uint8_t>(i));
        if (find_hole(u.child(i), path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

Term replace_at(const Term& u, const Path& path, const Term& t) { return replace_from(u, path, 0, t); }

Context::Context() : tree_(Term::hole()) {}

Context::Context(Term tree) : tree_(std::move(tree)) {
    if (tree_.hole_count() != 1) throw std::invalid_argument("a context must contain exactly one hole");
}

Context Context::at(const Term& u, const Path& path) { return Context(replace_at(u, path, Term::hole())); }

Path Context::hole_path() const {
    Path path;
    find_hole(tree_, path);
    return path;
}

Term plug(const Context& c, const Term& t) {
    if (c.is_identity()) return t;
    return replace_at(c.tree(), c.hole_path(), t);
}

namespace {

bool walk(const Term& u, Path& path, const std::function<bool(const Path&, const Term&)>& fn) {
    if (!fn(path, u)) return false;
    for (std::size_t i = 0; i < u.arity(); ++i) {
        path.push_back(static_cast<std::uint8_t>(i));
        if (!walk(u.child(i), path, fn)) return false;
        path.pop_back();
    }
    return true;
}

}  // namespace

bool for_each_subterm(const Term& u, const std::function<bool(const Path&, const Term&)>& fn) {
    Path path;
    return walk(u, path, fn);
}

std::vector<Occurrence> occurrences(const Term& u) {
    std::vector<Occurrence> out;
    for_each_subterm(u, [&](const Path& p, const Term& s) {
        out.push_back({Context::at(u, p), s, p});
        return true;
    });
    return out;
}

namespace {

void format_into(const Term& u, const Signature& sig, bool top, std::string& out) {
    switch (u.kind()) {
        case NodeKind::Hole:
            out += '*';
            return;
        case NodeKind::Generator:
            out += sig.generator_name(u.symbol());
            return;
        case NodeKind::Operation:
            break;
    }
    if (sig.is_infix(u.symbol()) && u.arity() == 2) {
        if (!top) out += '(';
        format_into(u.child(0), sig, false, out);
        out += sig.operation(u.symbol()).symbol;
        format_into(u.child(1), sig, false, out);
        if (!top) out += ')';
        return;
    }
    out += sig.operation(u.symbol()).symbol;
    out += '(';
    for (std::size_t i = 0; i < u.arity(); ++i) {
        if (i) out += ',';
        format_into(u.child(i), sig, true, out);
    }
    out += ')';
}

// Compositions of `total` into `parts` positive summands.
void compositions(std::uint32_t total, std::uint32_t parts, std::vector<std::uint32_t>& cur,
                  std::vector<std::vector<std::uint32_t>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::uint32_t first = 1; first + (parts - 1) <= total; ++first) {
        cur.push_back(first);
        compositions(total - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::string format(const Term& u, const Signature& sig) {
    std::string out;
    format_into(u, sig, true, out);
    return out;
}

std::vector<Term> enumerate_words(const Signature& sig, std::uint32_t leaves) {
    if (!sig.is_finitary())
        throw std::invalid_argument("word enumeration needs every operation to have arity >= 2");
    std::vector<std::vector<Term>> by_size(leaves + 1);
    for (std::uint32_t n = 1; n <= leaves; ++n) {
        auto& level = by_size[n];
        if (n == 1) {
            for (Symbol g = 0; g < sig.generator_count(); ++g) level.push_back(Term::generator(g));
            continue;
        }
        for (Symbol op = 0; op < sig.operation_count(); ++op) {
            const std::uint32_t k = sig.arity(op);
            if (k > n) continue;
            std::vector<std::vector<std::uint32_t>> splits;
            std::vector<std::uint32_t> cur;
            compositions(n, k, cur, splits);
            for (const auto& split : splits) {
                // Cartesian product over child sizes.
                std::vector<std::size_t> idx(k, 0);
                bool empty = false;
                for (std::uint32_t i = 0; i < k; ++i)
                    if (by_size[split[i]].empty()) empty = true;
                if (empty) continue;
                while (true) {
                    std::vector<Term> children;
                    children.reserve(k);
                    for (std::uint32_t i = 0; i < k; ++i) children.push_back(by_size[split[i]][idx[i]]);
                    level.push_back(Term::apply(op, std::move(children)));
                    int pos = static_cast<int>(k) - 1;
                    while (pos >= 0 && ++idx[pos] == by_size[split[pos]].size()) {
                        idx[pos] = 0;
                        --pos;
                    }
                    if (pos < 0) break;
                }
            }
        }
    }
    return by_size[leaves];
}

void check_well_formed(const Term& u, const Signature& sig) {
    for_each_subterm(u, [&](const Path&, const Term& s) {
        if (s.is_generator() && s.symbol() >= sig.generator_count())
            throw std::invalid_argument("generator index out of range");
        if (s.is_operation()) {
            if (s.symbol() >= sig.operation_count()) throw std::invalid_argument("operation index out of range");
            if (s.arity() != sig.arity(s.symbol())) throw std::invalid_argument("arity mismatch");
        }
        return true;
    });
}

}  // namespace shirshov
