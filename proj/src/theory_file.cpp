#include "shirshov/theory_file.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace shirshov {

namespace {

const std::set<std::string, std::less<>> kSectionKinds = {"signature", "order", "options", "algebra", "builtin", "rules"};

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_at(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        if (comma == std::string_view::npos) comma = s.size();
        auto item = trim(s.substr(start, comma - start));
        if (!item.empty()) out.emplace_back(item);
        start = comma + 1;
    }
    return out;
}

template <class Int>
Int parse_uint(const FileEntry& e) {
    Int v = 0;
    const char* end = e.value.data() + e.value.size();
    auto [p, ec] = std::from_chars(e.value.data(), end, v);
    if (ec != std::errc{} || p != end) fail_at(e.line, "'" + e.key + "' needs a non-negative integer, got '" + e.value + "'");
    return v;
}

Field parse_field(const FileEntry& e) {
    if (e.value == "Q") return Field::rationals();
    if (e.value.starts_with("Fp(") && e.value.ends_with(")")) {
        FileEntry inner{e.key, e.value.substr(3, e.value.size() - 4), e.line};
        try {
            return Field::prime(parse_uint<std::uint32_t>(inner));
        } catch (const std::invalid_argument& ex) {
            fail_at(e.line, ex.what());
        }
    }
    fail_at(e.line, "field must be Q or Fp(p), got '" + e.value + "'");
}

void check_keys(const FileSection& s, std::initializer_list<std::string_view> allowed) {
    for (const auto& e : s.entries) {
        bool ok = false;
        for (auto a : allowed) ok = ok || e.key == a;
        if (!ok) fail_at(e.line, "unknown key '" + e.key + "' in [" + s.kind + "]");
    }
}

const FileEntry* get(const FileSection* s, std::string_view key) {
    if (!s) return nullptr;
    for (const auto& e : s->entries)
        if (e.key == key) return &e;
    return nullptr;
}

struct Options {
    Field field = Field::rationals();
    std::uint32_t family_bound = kDefaultFamilyBound;
    std::uint64_t fuel = kDefaultFuel;
};

Options read_options(const FileSection* s) {
    Options o;
    if (!s) return o;
    check_keys(*s, {"field", "family_bound", "fuel"});
    if (auto e = get(s, "field")) o.field = parse_field(*e);
    if (auto e = get(s, "family_bound")) o.family_bound = parse_uint<std::uint32_t>(*e);
    if (auto e = get(s, "fuel")) o.fuel = parse_uint<std::uint64_t>(*e);
    return o;
}

std::vector<Operation> parse_ops(const FileEntry& e) {
    std::vector<Operation> ops;
    for (const auto& item : split_list(e.value)) {
        Operation op;
        const auto slash = item.rfind('/');
        if (slash == std::string::npos || slash == 0) {
            op.symbol = item;
        } else {
            op.symbol = std::string(trim(std::string_view(item).substr(0, slash)));
            FileEntry arity{e.key, std::string(trim(std::string_view(item).substr(slash + 1))), e.line};
            op.arity = parse_uint<std::uint32_t>(arity);
        }
        ops.push_back(std::move(op));
    }
    return ops;
}

Signature read_signature(const FileSection& s, const FileSection* order) {
    check_keys(s, {"mode", "generators", "ops"});
    const FileEntry* mode = get(&s, "mode");
    if (!mode) fail_at(s.line, "[signature] needs 'mode'");
    const FileEntry* gens = get(&s, "generators");
    if (!gens) fail_at(s.line, "[signature] needs 'generators'");
    const FileEntry* ops = get(&s, "ops");
    Signature sig;
    if (mode->value == "L") {
        sig = Signature::l_algebra(split_list(gens->value));
        if (ops && Signature(sig.generators(), parse_ops(*ops), Mode::OmegaFree).operations() != sig.operations())
            fail_at(ops->line, "L-algebra mode has exactly the operations >/2 and </2");
    } else if (mode->value == "free") {
        if (!ops) fail_at(s.line, "free mode needs 'ops'");
        sig = Signature(split_list(gens->value), parse_ops(*ops), Mode::OmegaFree);
    } else {
        fail_at(mode->line, "mode must be L or free, got '" + mode->value + "'");
    }
    if (order) {
        if (auto e = get(order, "generators")) sig.set_generator_order(split_list(e->value));
        if (auto e = get(order, "ops")) sig.set_operation_order(split_list(e->value));
    }
    return sig;
}

const FileSection& algebra_named(const TheoryFile& file, const FileEntry& ref) {
    for (const auto& s : file.sections)
        if (s.kind == "algebra" && s.name == ref.value) return s;
    fail_at(ref.line, "no [algebra " + ref.value + "] block");
}

Theory build_builtin(const TheoryFile& file, const FileSection& b, const Options& opt) {
    const FileEntry* name = get(&b, "name");
    if (!name) fail_at(b.line, "[builtin] needs 'name'");
    auto need = [&](std::string_view key) -> const FileEntry& {
        const FileEntry* e = get(&b, key);
        if (!e) fail_at(b.line, "builtin '" + name->value + "' needs '" + std::string(key) + "'");
        return *e;
    };
    auto rationals_only = [&] {
        if (!opt.field.is_rational()) fail_at(name->line, "builtin '" + name->value + "' is defined over Q only");
    };
    if (name->value == "l_identity" || name->value == "dialgebra") {
        check_keys(b, {"name", "generators"});
        rationals_only();
        const FileEntry* g = get(&b, "generators");
        std::vector<std::string> gens = g ? split_list(g->value) : std::vector<std::string>{"x"};
        return name->value == "l_identity" ? lalg::l_identity_theory(gens)
                                           : lalg::dialgebra_theory(gens, opt.family_bound);
    }
    if (name->value == "structure_constants") {
        check_keys(b, {"name", "algebra"});
        return lalg::from_structure_constants(parse_algebra(algebra_named(file, need("algebra")), opt.field),
                                              opt.field);
    }
    if (name->value == "free_product") {
        check_keys(b, {"name", "left", "right"});
        return lalg::free_product_theory(parse_algebra(algebra_named(file, need("left")), opt.field),
                                         parse_algebra(algebra_named(file, need("right")), opt.field),
                                         opt.family_bound, opt.field);
    }
    if (name->value == "embed_two_gen") {
        check_keys(b, {"name", "algebra", "extra"});
        std::array<std::string, 2> extra = {"a", "b"};
        if (auto e = get(&b, "extra")) {
            auto names = split_list(e->value);
            if (names.size() != 2) fail_at(e->line, "'extra' names exactly two generators");
            extra = {names[0], names[1]};
        }
        return lalg::embed_two_gen_theory(parse_algebra(algebra_named(file, need("algebra")), opt.field),
                                          opt.family_bound, extra, opt.field);
    }
    fail_at(name->line, "unknown builtin '" + name->value + "'");
}

void add_rules(Theory& th, const FileSection& s) {
    std::string group = "main";
    for (const auto& e : s.entries) {
        if (!e.key.empty()) {
            if (e.key != "group") fail_at(e.line, "unknown key '" + e.key + "' in [rules]");
            group = e.value;
            continue;
        }
        Rule r = [&] {
            try {
                return parse_rule(e.value, th.signature(), th.field(), group);
            } catch (const ParseError& ex) {
                throw ParseError("line " + std::to_string(e.line) + ": " + ex.what());
            } catch (const SignatureError& ex) {
                throw ParseError("line " + std::to_string(e.line) + ": " + ex.what());
            }
        }();
        try {
            th.add_rule(std::move(r));
        } catch (const OrientationError& ex) {
            throw OrientationError("line " + std::to_string(e.line) + ": " + ex.what());
        } catch (const TheoryError& ex) {
            throw TheoryError("line " + std::to_string(e.line) + ": " + ex.what());
        }
    }
}

}  // namespace

const FileSection* TheoryFile::find(std::string_view kind) const {
    for (const auto& s : sections)
        if (s.kind == kind) return &s;
    return nullptr;
}

void TheoryFile::append_rules(const std::string& group, const std::vector<std::string>& lines) {
    FileSection* rules = nullptr;
    for (auto& s : sections)
        if (s.kind == "rules") rules = &s;
    if (!rules) {
        sections.push_back(FileSection{"rules", "", {}, 0});
        rules = &sections.back();
    }
    rules->entries.push_back(FileEntry{"group", group, 0});
    for (const auto& l : lines) rules->entries.push_back(FileEntry{"", l, 0});
}

TheoryFile parse_theory_file(std::string_view text) {
    TheoryFile file;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::set<std::string> seen_sections;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const auto line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("line " + std::to_string(line_no) + ": " + msg);
        };
        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section header");
            const auto inner = trim(line.substr(1, line.size() - 2));
            const auto sp = inner.find_first_of(" \t");
            FileSection s;
            s.kind = std::string(inner.substr(0, sp));
            s.name = sp == std::string_view::npos ? "" : std::string(trim(inner.substr(sp)));
            s.line = line_no;
            if (!kSectionKinds.contains(s.kind)) fail("unknown section [" + s.kind + "]");
            if ((s.kind == "algebra") == s.name.empty())
                fail(s.kind == "algebra" ? "[algebra] needs a name" : "[" + s.kind + "] takes no name");
            if (!is_identifier(s.name) && !s.name.empty()) fail("algebra name '" + s.name + "' is not an identifier");
            if (!seen_sections.insert(s.kind + " " + s.name).second) fail("duplicate section [" + s.kind + "]");
            file.sections.push_back(std::move(s));
            continue;
        }
        if (file.sections.empty()) fail("entry outside of any section");
        FileSection& s = file.sections.back();
        const auto eq = line.find('=');
        const bool group_line = eq != std::string_view::npos && trim(line.substr(0, eq)) == "group";
        if (s.kind == "rules" && !group_line) {
            s.entries.push_back(FileEntry{"", std::string(line), line_no});
            continue;
        }
        if (eq == std::string_view::npos) fail("expected 'key = value'");
        FileEntry e{std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))), line_no};
        if (e.key.empty()) fail("empty key");
        if (s.kind != "rules")
            for (const auto& prev : s.entries)
                if (prev.key == e.key) fail("duplicate key '" + e.key + "'");
        s.entries.push_back(std::move(e));
    }
    return file;
}

std::string write_theory_file(const TheoryFile& file) {
    std::string out;
    for (std::size_t i = 0; i < file.sections.size(); ++i) {
        const auto& s = file.sections[i];
        if (i > 0) out += '\n';
        out += "[" + s.kind + (s.name.empty() ? "" : " " + s.name) + "]\n";
        for (const auto& e : s.entries) out += (e.key.empty() ? e.value : e.key + " = " + e.value) + "\n";
    }
    return out;
}

std::uint64_t theory_hash(const TheoryFile& file) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : write_theory_file(file)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

lalg::StructureConstants parse_algebra(const FileSection& s, Field field) {
    const FileEntry* basis = get(&s, "basis");
    if (!basis) fail_at(s.line, "[algebra " + s.name + "] needs 'basis'");
    lalg::StructureConstants sc = lalg::StructureConstants::zero(split_list(basis->value), field);
    const Signature sig = [&] {
        try {
            return Signature(sc.basis, {}, Mode::OmegaFree);
        } catch (const SignatureError& ex) {
            fail_at(basis->line, ex.what());
        }
    }();
    const Order order(OrderKind::WeightGeneral, sig);
    const std::size_t d = sc.dim();
    for (const auto& e : s.entries) {
        if (e.key == "basis") continue;
        auto table = e.key.starts_with("succ[") ? &sc.succ : e.key.starts_with("prec[") ? &sc.prec : nullptr;
        if (!table) fail_at(e.line, "unknown key '" + e.key + "' in [algebra " + s.name + "]");
        std::size_t i = 0, j = 0;
        char tail = 0;
        if (std::sscanf(e.key.c_str() + 4, "[%zu][%zu]%c", &i, &j, &tail) != 2 || i < 1 || j < 1 || i > d || j > d)
            fail_at(e.line, "expected succ[i][j] or prec[i][j] with 1 <= i, j <= " + std::to_string(d));
        Polynomial p;
        try {
            p = parse_polynomial(e.value, sig, order, field);
        } catch (const ParseError& ex) {
            fail_at(e.line, ex.what());
        }
        auto& coeffs = (*table)[i - 1][j - 1];
        for (const auto& m : p.terms()) {
            if (!m.word.is_generator()) fail_at(e.line, "structure constants must be linear in the basis");
            coeffs[m.word.symbol()] = m.coeff;
        }
    }
    return sc;
}

Theory build_theory(const TheoryFile& file) {
    const Options opt = read_options(file.find("options"));
    const FileSection* builtin = file.find("builtin");
    const FileSection* sig_section = file.find("signature");
    const FileSection* order_section = file.find("order");

    std::optional<Theory> th;
    if (builtin) {
        if (sig_section) fail_at(sig_section->line, "[signature] conflicts with [builtin]");
        if (order_section) fail_at(order_section->line, "[order] conflicts with [builtin]");
        th.emplace(build_builtin(file, *builtin, opt));
    } else {
        if (!sig_section) throw ParseError("theory needs a [signature] or a [builtin] section");
        if (order_section) check_keys(*order_section, {"kind", "generators", "ops"});
        Signature sig = [&] {
            try {
                return read_signature(*sig_section, order_section);
            } catch (const SignatureError& ex) {
                fail_at(sig_section->line, ex.what());
            }
        }();
        OrderKind kind = sig.mode() == Mode::LAlgebra ? OrderKind::WeightL : OrderKind::WeightGeneral;
        if (auto e = get(order_section, "kind")) {
            try {
                kind = parse_order_kind(e->value);
            } catch (const std::exception& ex) {
                fail_at(e->line, ex.what());
            }
        }
        try {
            th.emplace(std::move(sig), kind, opt.field);
        } catch (const SignatureError& ex) {
            fail_at(order_section ? order_section->line : sig_section->line, ex.what());
        }
    }
    for (const auto& s : file.sections)
        if (s.kind == "algebra") parse_algebra(s, opt.field);
    th->set_family_bound(opt.family_bound);
    th->set_fuel(opt.fuel);
    if (const FileSection* rules = file.find("rules")) add_rules(*th, *rules);
    return std::move(*th);
}

TheoryFile read_theory_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_theory_file(buf.str());
}

}  // namespace shirshov
