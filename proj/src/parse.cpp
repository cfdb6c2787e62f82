#include "shirshov/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "shirshov/normal_words.hpp"

namespace shirshov {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"), position_(position) {}

ParseError::ParseError(const std::string& message) : std::runtime_error(message), position_(0) {}

namespace {

constexpr std::string_view kInfixChars = "><^&|.~@#%";

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Ast {
    enum class Kind { Generator, Operation, Var, Hole, LChain, RChain };
    Kind kind;
    Symbol symbol = 0;
    std::string name;
    bool spine = false;
    std::vector<Ast> children;
    std::size_t pos = 0;
};

class Parser {
public:
    Parser(std::string_view text, std::size_t base, const Signature& sig, bool allow_hole, bool allow_vars)
        : s_(text), base_(base), sig_(sig), allow_hole_(allow_hole), allow_vars_(allow_vars) {}

    Ast parse_all() {
        Ast t = expr();
        skip_ws();
        if (i_ != s_.size()) {
            if (infix_at(i_)) fail("nested infix operations must be parenthesized", i_);
            fail("unexpected '" + std::string(1, s_[i_]) + "'", i_);
        }
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, base_ + at); }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool accept(char c) {
        skip_ws();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (i_ >= s_.size()) fail(std::string("expected '") + c + "' before end of input", i_);
            fail(std::string("expected '") + c + "', found '" + s_[i_] + "'", i_);
        }
    }

    bool infix_at(std::size_t at) const { return at < s_.size() && kInfixChars.find(s_[at]) != std::string_view::npos; }

    std::string read_infix() {
        const std::size_t start = i_;
        while (infix_at(i_)) ++i_;
        return std::string(s_.substr(start, i_ - start));
    }

    std::string read_ident() {
        skip_ws();
        const std::size_t start = i_;
        if (i_ >= s_.size() || !is_ident_start(s_[i_])) fail("expected an identifier", i_);
        while (i_ < s_.size() && is_ident_char(s_[i_])) ++i_;
        return std::string(s_.substr(start, i_ - start));
    }

    Symbol binary_op(const std::string& symbol, std::size_t at) const {
        auto op = sig_.find_operation(symbol);
        if (!op) fail("unknown operation '" + symbol + "'", at);
        if (sig_.arity(*op) != 2) fail("operation '" + symbol + "' is not binary", at);
        return *op;
    }

    Ast expr() {
        Ast left = primary();
        skip_ws();
        if (!infix_at(i_)) return left;
        const std::size_t at = i_;
        const std::string symbol = read_infix();
        const Symbol op = binary_op(symbol, at);
        if (!sig_.is_infix(op)) fail("operation '" + symbol + "' is written prefix", at);
        Ast right = primary();
        Ast node{Ast::Kind::Operation, op, {}, false, {}, base_ + at};
        node.children.push_back(std::move(left));
        node.children.push_back(std::move(right));
        return node;
    }

    Ast var(bool spine_expected) {
        skip_ws();
        const std::size_t at = i_;
        expect('$');
        if (!allow_vars_) fail("metavariables are not allowed here", at);
        Ast v{Ast::Kind::Var, 0, read_ident(), false, {}, base_ + at};
        if (i_ < s_.size() && s_[i_] == '*') {
            ++i_;
            v.spine = true;
        }
        if (v.spine != spine_expected)
            fail(spine_expected ? "chains take a spine metavariable `$" + v.name + "*`"
                                : "spine metavariable `$" + v.name + "*` outside a chain",
                 at);
        return v;
    }

    Symbol chain_op() {
        skip_ws();
        const std::size_t at = i_;
        std::string symbol = infix_at(i_) ? read_infix() : read_ident();
        return binary_op(symbol, at);
    }

    Ast primary() {
        skip_ws();
        const std::size_t at = i_;
        if (i_ >= s_.size()) fail("unexpected end of input", i_);
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            Ast inner = expr();
            expect(')');
            return inner;
        }
        if (c == '$') return var(false);
        if (c == '*') {
            if (!allow_hole_) fail("a hole `*` is not allowed here", at);
            ++i_;
            return Ast{Ast::Kind::Hole, 0, {}, false, {}, base_ + at};
        }
        if (!is_ident_start(c)) fail("unexpected '" + std::string(1, c) + "'", at);
        const std::string name = read_ident();
        skip_ws();
        const bool call = i_ < s_.size() && s_[i_] == '(';
        if (call && (name == "lchain" || name == "rchain")) {
            if (!allow_vars_) fail(name + " is only allowed in patterns", at);
            ++i_;
            const Symbol op = chain_op();
            expect(',');
            Ast node{name == "lchain" ? Ast::Kind::LChain : Ast::Kind::RChain, op, {}, false, {}, base_ + at};
            if (node.kind == Ast::Kind::LChain) {
                node.children.push_back(expr());
                expect(',');
                node.children.push_back(var(true));
            } else {
                node.children.push_back(var(true));
                expect(',');
                node.children.push_back(expr());
            }
            expect(')');
            return node;
        }
        if (call) {
            auto op = sig_.find_operation(name);
            if (!op) fail("unknown operation '" + name + "'", at);
            ++i_;
            Ast node{Ast::Kind::Operation, *op, {}, false, {}, base_ + at};
            node.children.push_back(expr());
            while (accept(',')) node.children.push_back(expr());
            expect(')');
            if (node.children.size() != sig_.arity(*op))
                fail("operation '" + name + "' takes " + std::to_string(sig_.arity(*op)) + " arguments, got " +
                         std::to_string(node.children.size()),
                     at);
            return node;
        }
        auto g = sig_.find_generator(name);
        if (!g) fail("unknown generator '" + name + "'", at);
        return Ast{Ast::Kind::Generator, *g, {}, false, {}, base_ + at};
    }

    std::string_view s_;
    std::size_t base_;
    std::size_t i_ = 0;
    const Signature& sig_;
    bool allow_hole_;
    bool allow_vars_;
};

Term to_term(const Ast& a) {
    switch (a.kind) {
        case Ast::Kind::Generator:
            return Term::generator(a.symbol);
        case Ast::Kind::Hole:
            return Term::hole();
        case Ast::Kind::Operation: {
            std::vector<Term> children;
            for (const auto& c : a.children) children.push_back(to_term(c));
            return Term::apply(a.symbol, std::move(children));
        }
        default:
            throw ParseError("metavariables are not allowed in a word", a.pos);
    }
}

class TreeBuilder {
public:
    TreeBuilder(std::vector<MetaVar>& vars, bool declare, std::size_t base)
        : vars_(vars), declare_(declare), base_(base) {}

    PatternTree build(const Ast& a) {
        switch (a.kind) {
            case Ast::Kind::Generator:
                return PatternTree::generator(a.symbol);
            case Ast::Kind::Hole:
                throw ParseError("a pattern cannot contain a hole", a.pos);
            case Ast::Kind::Operation: {
                std::vector<PatternTree> children;
                for (const auto& c : a.children) children.push_back(build(c));
                return PatternTree::apply(a.symbol, std::move(children));
            }
            case Ast::Kind::Var:
                return PatternTree::var(resolve(a));
            case Ast::Kind::LChain: {
                PatternTree core = build(a.children[0]);
                return PatternTree::lspine(a.symbol, std::move(core), resolve(a.children[1]));
            }
            case Ast::Kind::RChain: {
                const auto v = resolve(a.children[0]);
                return PatternTree::rspine(a.symbol, v, build(a.children[1]));
            }
        }
        throw std::logic_error("unreachable");
    }

private:
    std::uint32_t resolve(const Ast& v) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].name != v.name) continue;
            if (declare_) throw ParseError("repeated metavariable $" + v.name, base_ + v.pos);
            if (vars_[i].spine != v.spine)
                throw ParseError("metavariable $" + v.name + " used with the wrong kind", base_ + v.pos);
            return static_cast<std::uint32_t>(i);
        }
        if (!declare_) throw ParseError("metavariable $" + v.name + " does not occur on the left side", base_ + v.pos);
        vars_.push_back(MetaVar{v.name, v.spine, 0, {}});
        return static_cast<std::uint32_t>(vars_.size() - 1);
    }

    std::vector<MetaVar>& vars_;
    bool declare_;
    std::size_t base_;
};

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    if (offset) *offset += b;
    return s.substr(b, e - b);
}

struct SignedChunk {
    bool negative;
    std::string_view text;
    std::size_t pos;
};

// Splits `a + b - c` at top-level signs; a single leading `-` is allowed.
std::vector<SignedChunk> split_sum(std::string_view s, std::size_t base) {
    std::vector<SignedChunk> out;
    int depth = 0;
    bool negative = false;
    bool leading_sign = false;
    std::size_t start = 0;
    auto push = [&](std::size_t end) {
        std::size_t off = start;
        auto chunk = trim(s.substr(start, end - start), &off);
        if (chunk.empty()) return false;
        out.push_back({negative, chunk, base + off});
        return true;
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth != 0 || (c != '+' && c != '-')) continue;
        if (!push(i)) {
            if (!out.empty() || leading_sign || c == '+') throw ParseError("missing term before sign", base + i);
            leading_sign = true;
        }
        negative = c == '-';
        start = i + 1;
    }
    if (!push(s.size())) throw ParseError("missing term", base + s.size());
    return out;
}

struct CoeffTerm {
    Scalar coeff;
    std::string_view text;
    std::size_t pos;
};

CoeffTerm split_coefficient(const SignedChunk& chunk, Field field) {
    std::string_view t = chunk.text;
    std::size_t pos = chunk.pos;
    Scalar coeff(1, field);
    std::size_t k = 0;
    while (k < t.size() && (std::isdigit(static_cast<unsigned char>(t[k])) || t[k] == '/')) ++k;
    if (k > 0) {
        std::size_t star = k;
        while (star < t.size() && std::isspace(static_cast<unsigned char>(t[star]))) ++star;
        if (star >= t.size() || t[star] != '*') throw ParseError("expected '*' after coefficient", pos + star);
        try {
            coeff = Scalar::parse(std::string(t.substr(0, k)), field);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), pos);
        }
        std::size_t off = pos + star + 1;
        t = trim(t.substr(star + 1), &off);
        pos = off;
    }
    if (chunk.negative) coeff = -coeff;
    return {coeff, t, pos};
}

bool is_zero_literal(std::string_view s) { return trim(s) == "0"; }

}  // namespace

Term parse_word(std::string_view text, const Signature& sig) {
    return to_term(Parser(text, 0, sig, false, false).parse_all());
}

Context parse_context(std::string_view text, const Signature& sig) {
    Term t = to_term(Parser(text, 0, sig, true, false).parse_all());
    if (t.hole_count() != 1)
        throw ParseError("a context needs exactly one hole, found " + std::to_string(t.hole_count()), 0);
    return Context(t);
}

PatternTree parse_pattern_tree(std::string_view text, const Signature& sig, std::vector<MetaVar>& vars,
                               bool declare) {
    return TreeBuilder(vars, declare, 0).build(Parser(text, 0, sig, false, true).parse_all());
}

Pattern parse_pattern(std::string_view text, const Signature& sig) {
    std::vector<MetaVar> vars;
    PatternTree tree = parse_pattern_tree(text, sig, vars, true);
    return Pattern(std::move(tree), std::move(vars));
}

Polynomial parse_polynomial(std::string_view text, const Signature& sig, const Order& order, Field field) {
    if (is_zero_literal(text)) return {};
    std::vector<Monomial> terms;
    for (const auto& chunk : split_sum(text, 0)) {
        auto ct = split_coefficient(chunk, field);
        Term w = to_term(Parser(ct.text, ct.pos, sig, false, false).parse_all());
        terms.push_back({std::move(w), ct.coeff});
    }
    if (terms.empty()) throw ParseError("empty polynomial", 0);
    return Polynomial(std::move(terms), order);
}

namespace {

std::vector<RhsTerm> parse_rhs_at(std::string_view text, std::size_t base, const Signature& sig,
                                  std::vector<MetaVar>& vars, Field field) {
    std::vector<RhsTerm> out;
    if (is_zero_literal(text)) return out;
    for (const auto& chunk : split_sum(text, base)) {
        auto ct = split_coefficient(chunk, field);
        PatternTree tree = TreeBuilder(vars, false, 0).build(Parser(ct.text, ct.pos, sig, false, true).parse_all());
        if (!ct.coeff.is_zero()) out.push_back({ct.coeff, std::move(tree)});
    }
    if (out.empty() && !text.empty()) throw ParseError("empty right side", base);
    return out;
}

std::vector<std::string_view> split_top_commas(std::string_view s) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

void parse_guard(std::string_view text, std::size_t pos, const Signature& sig, std::vector<MetaVar>& vars) {
    std::size_t off = pos;
    text = trim(text, &off);
    const auto open = text.find('(');
    const auto close = text.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw ParseError("malformed guard '" + std::string(text) + "'", off);
    const std::string name(trim(text.substr(0, open)));
    const auto tail = trim(text.substr(close + 1));
    std::vector<std::string> args;
    for (auto a : split_top_commas(text.substr(open + 1, close - open - 1))) args.emplace_back(trim(a));
    if (args.empty() || args[0].size() < 2 || args[0][0] != '$')
        throw ParseError("guard '" + name + "' needs a metavariable as first argument", off);

    std::string vname = args[0].substr(1);
    bool spine = false;
    if (vname.back() == '*') {
        spine = true;
        vname.pop_back();
    }
    MetaVar* var = nullptr;
    for (auto& v : vars)
        if (v.name == vname) var = &v;
    if (!var) throw ParseError("guard on unknown metavariable $" + vname, off);
    if (var->spine != spine) throw ParseError("metavariable $" + vname + " used with the wrong kind", off);

    auto want_args = [&](std::size_t n) {
        if (args.size() != n) throw ParseError("guard '" + name + "' takes " + std::to_string(n) + " arguments", off);
    };
    auto parse_count = [&](const std::string& s) -> std::uint32_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("expected a number, found '" + s + "'", off);
        return static_cast<std::uint32_t>(std::stoul(s));
    };
    if (name != "len" && !tail.empty()) throw ParseError("unexpected text after guard", off);

    Guard g;
    if (name == "len") {
        if (!spine) throw ParseError("len() applies to spine metavariables", off);
        want_args(1);
        if (tail.substr(0, 2) != ">=") throw ParseError("expected `len($v*) >= n`", off);
        var->min_length = parse_count(std::string(trim(tail.substr(2))));
        return;
    } else if (name == "irr") {
        if (args.size() < 2) throw ParseError("irr() needs at least one group", off);
        g.kind = GuardKind::IsIrr;
        g.groups.assign(args.begin() + 1, args.end());
    } else if (name == "notgen") {
        want_args(1);
        g.kind = GuardKind::NotGenerator;
    } else if (name == "notin") {
        g.kind = GuardKind::NotInSet;
        for (std::size_t k = 1; k < args.size(); ++k) {
            auto s = sig.find_generator(args[k]);
            if (!s) throw ParseError("unknown generator '" + args[k] + "'", off);
            g.symbols.push_back(*s);
        }
    } else if (name == "nottop") {
        want_args(2);
        g.kind = GuardKind::NotTopOp;
        auto op = sig.find_operation(args[1]);
        if (!op) throw ParseError("unknown operation '" + args[1] + "'", off);
        g.symbols.push_back(*op);
    } else if (name == "maxsize") {
        want_args(2);
        g.kind = GuardKind::MaxSize;
        g.max_size = parse_count(args[1]);
    } else {
        throw ParseError("unknown guard '" + name + "'", off);
    }
    var->guards.push_back(std::move(g));
}

}  // namespace

std::vector<RhsTerm> parse_rhs(std::string_view text, const Signature& sig, std::vector<MetaVar>& vars, Field field) {
    return parse_rhs_at(text, 0, sig, vars, field);
}

Rule parse_rule(std::string_view line, const Signature& sig, Field field, const std::string& group) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected `name: lhs -> rhs`", 0);
    const std::string name(trim(line.substr(0, colon)));
    if (name.empty() || !std::all_of(name.begin(), name.end(), is_ident_char))
        throw ParseError("invalid rule name '" + name + "'", 0);
    const auto arrow = line.find("->", colon);
    if (arrow == std::string_view::npos) throw ParseError("expected `->`", colon + 1);

    std::string_view right = line.substr(arrow + 2);
    std::string_view guards;
    std::size_t guards_pos = 0;
    for (std::size_t k = right.size(); k-- > 0;) {
        if (right.substr(k, 5) != "where") continue;
        const bool left_ok = k == 0 || std::isspace(static_cast<unsigned char>(right[k - 1]));
        const bool right_ok = k + 5 < right.size() && std::isspace(static_cast<unsigned char>(right[k + 5]));
        if (left_ok && right_ok) {
            guards = right.substr(k + 5);
            guards_pos = arrow + 2 + k + 5;
            right = right.substr(0, k);
            break;
        }
    }

    std::vector<MetaVar> vars;
    std::size_t lhs_off = colon + 1;
    const auto lhs_text = trim(line.substr(colon + 1, arrow - colon - 1), &lhs_off);
    if (lhs_text.empty()) throw ParseError("empty left side", lhs_off);
    PatternTree lhs = TreeBuilder(vars, true, 0).build(Parser(lhs_text, lhs_off, sig, false, true).parse_all());
    std::size_t rhs_off = arrow + 2;
    const auto rhs_text = trim(right, &rhs_off);
    if (rhs_text.empty()) throw ParseError("empty right side", rhs_off);
    auto rhs = parse_rhs_at(rhs_text, rhs_off, sig, vars, field);
    if (!guards.empty()) {
        std::size_t g_off = guards_pos;
        for (auto g : split_top_commas(guards)) {
            parse_guard(g, g_off, sig, vars);
            g_off += g.size() + 1;
        }
    }
    return Rule{name, group, Pattern(std::move(lhs), std::move(vars)), std::move(rhs)};
}

}  // namespace shirshov
