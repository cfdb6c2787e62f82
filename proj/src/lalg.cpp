#include "shirshov/lalg.hpp"

#include <set>

#include "shirshov/parse.hpp"
#include "shirshov/rewrite.hpp"

namespace shirshov::lalg {

namespace {

using Table = std::vector<std::vector<std::vector<Scalar>>>;

std::vector<Scalar> combine(const Table& outer, const std::vector<Scalar>& coeffs, std::size_t fixed, bool fixed_left,
                            Field field) {
    std::vector<Scalar> out(coeffs.size(), Scalar(0, field));
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (coeffs[t].is_zero()) continue;
        const auto& v = fixed_left ? outer[fixed][t] : outer[t][fixed];
        for (std::size_t s = 0; s < v.size(); ++s) out[s] += coeffs[t] * v[s];
    }
    return out;
}

void check_shape(const StructureConstants& sc) {
    const std::size_t d = sc.dim();
    if (d == 0) throw TheoryError("an algebra needs a nonempty basis");
    auto ok = [d](const Table& t) {
        if (t.size() != d) return false;
        for (const auto& row : t) {
            if (row.size() != d) return false;
            for (const auto& v : row)
                if (v.size() != d) return false;
        }
        return true;
    };
    if (!ok(sc.succ) || !ok(sc.prec)) throw TheoryError("structure constant tables must be d x d x d");
}

Field field_of(const StructureConstants& sc) { return sc.succ[0][0][0].field(); }

// `c1 * w1 + c2 * w2`, with `{}` standing for each basis word in `shape`.
std::string linear_text(const std::vector<Scalar>& v, const std::vector<std::string>& basis,
                        const std::string& shape = "{}") {
    std::string out;
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t].is_zero()) continue;
        Scalar c = v[t];
        const bool negative = c.is_negative();
        if (negative) c = -c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (!c.is_one()) out += c.str() + " * ";
        std::string word = shape;
        word.replace(word.find("{}"), 2, basis[t]);
        out += word;
    }
    return out.empty() ? "0" : out;
}

void require_entangled(const StructureConstants& sc) {
    check_shape(sc);
    if (auto bad = entanglement_failure(sc)) throw EntanglementError((*bad)[0] + 1, (*bad)[1] + 1, (*bad)[2] + 1);
}

void add_table_rules(Theory& th, const StructureConstants& sc, const std::string& group, const std::string& prefix) {
    const auto& basis = sc.basis;
    for (std::size_t i = 0; i < sc.dim(); ++i) {
        for (std::size_t j = 0; j < sc.dim(); ++j) {
            const std::string idx = std::to_string(i + 1) + "_" + std::to_string(j + 1);
            th.add_rule(parse_rule(prefix + "succ_" + idx + ": " + basis[i] + " > " + basis[j] + " -> " +
                                       linear_text(sc.succ[i][j], basis),
                                   th.signature(), th.field(), group));
            th.add_rule(parse_rule(prefix + "prec_" + idx + ": " + basis[i] + " < " + basis[j] + " -> " +
                                       linear_text(sc.prec[i][j], basis),
                                   th.signature(), th.field(), group));
        }
    }
}

// x_i > lchain(<, (x_j < $u), $v*) -> {x_i > x_j} with x_j replaced in the chain.
void add_correction_family(Theory& th, const StructureConstants& sc, const std::string& name,
                           const std::string& group, const std::string& guard_groups) {
    const auto& basis = sc.basis;
    std::string own;
    for (const auto& x : basis) own += ", " + x;
    for (std::size_t i = 0; i < sc.dim(); ++i) {
        for (std::size_t j = 0; j < sc.dim(); ++j) {
            const std::string line = name + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + ": " +
                                     basis[i] + " > lchain(<, (" + basis[j] + " < $u), $v*) -> " +
                                     linear_text(sc.succ[i][j], basis, "lchain(<, ({} < $u), $v*)") +
                                     " where irr($u, " + guard_groups + "), notin($u" + own + "), irr($v*, " +
                                     guard_groups + ")";
            th.add_rule(parse_rule(line, th.signature(), th.field(), group));
        }
    }
}

}  // namespace

StructureConstants StructureConstants::zero(std::vector<std::string> basis, Field field) {
    const std::size_t d = basis.size();
    const Table t(d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d, Scalar(0, field))));
    return StructureConstants{std::move(basis), t, t};
}

StructureConstants StructureConstants::one_dim(const std::string& name, const Scalar& alpha, const Scalar& beta) {
    auto sc = zero({name}, alpha.field());
    sc.succ[0][0][0] = alpha;
    sc.prec[0][0][0] = beta;
    return sc;
}

std::optional<std::array<std::size_t, 3>> entanglement_failure(const StructureConstants& sc) {
    check_shape(sc);
    const Field field = field_of(sc);
    const std::size_t d = sc.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t l = 0; l < d; ++l) {
                // (x_i>x_j)<x_l against x_i>(x_j<x_l).
                const auto left = combine(sc.prec, sc.succ[i][j], l, false, field);
                const auto right = combine(sc.succ, sc.prec[j][l], i, true, field);
                if (left != right) return std::array<std::size_t, 3>{i, j, l};
            }
        }
    }
    return std::nullopt;
}

EntanglementError::EntanglementError(std::size_t i, std::size_t j, std::size_t l)
    : TheoryError("structure constants violate (x_i>x_j)<x_l = x_i>(x_j<x_l) at (i, j, l) = (" + std::to_string(i) +
                  ", " + std::to_string(j) + ", " + std::to_string(l) + ")"),
      triple_{i, j, l} {}

Theory from_structure_constants(const StructureConstants& sc, Field field) {
    require_entangled(sc);
    Theory th(Signature::l_algebra(sc.basis), OrderKind::WeightL, field);
    add_table_rules(th, sc, "S", "");
    return th;
}

Theory l_identity_theory(std::vector<std::string> generators) {
    Theory th(Signature::binary_pair(std::move(generators)), OrderKind::WeightL);
    th.add_rule(parse_rule("L: ($x > $y) < $z -> $x > ($y < $z)", th.signature(), th.field(), "L"));
    return th;
}

Theory dialgebra_theory(std::vector<std::string> generators, std::uint32_t family_bound) {
    Theory th(Signature::l_algebra(std::move(generators)), OrderKind::WeightL);
    th.set_family_bound(family_bound);
    for (const char* line : {
             "F1: $a < ($b < $c) -> $a < ($b > $c)",
             "F2: ($a < $b) > $c -> $a > ($b > $c)",
             "F3: ($a < $b) < $c -> $a < ($b > $c)",
             "F4: ($a > $b) > $c -> $a > ($b > $c)",
             "F5: $a < rchain(>, $v*, ($p < $q)) -> $a < rchain(>, $v*, ($p > $q)) where len($v*) >= 1",
         })
        th.add_rule(parse_rule(line, th.signature(), th.field(), "S"));
    return th;
}

std::optional<LodayForm> loday_form(const Term& u) {
    LodayForm out;
    const Term* cur = &u;
    while (cur->is_rooted_at(kSucc) && cur->child(0).is_generator()) {
        out.letters.push_back(cur->child(0).symbol());
        ++out.m;
        cur = &cur->child(1);
    }
    if (cur->is_generator()) {
        out.letters.push_back(cur->symbol());
        return out;
    }
    if (!cur->is_rooted_at(kPrec) || !cur->child(0).is_generator()) return std::nullopt;
    out.letters.push_back(cur->child(0).symbol());
    cur = &cur->child(1);
    while (cur->is_rooted_at(kSucc) && cur->child(0).is_generator()) {
        out.letters.push_back(cur->child(0).symbol());
        ++out.n;
        cur = &cur->child(1);
    }
    if (!cur->is_generator()) return std::nullopt;
    out.letters.push_back(cur->symbol());
    ++out.n;
    return out;
}

Theory free_product_theory(const StructureConstants& a, const StructureConstants& b, std::uint32_t family_bound,
                           Field field) {
    require_entangled(a);
    require_entangled(b);
    std::vector<std::string> gens = a.basis;
    gens.insert(gens.end(), b.basis.begin(), b.basis.end());
    if (std::set<std::string>(gens.begin(), gens.end()).size() != gens.size())
        throw TheoryError("the two algebras must have disjoint basis names");
    Theory th(Signature::l_algebra(gens), OrderKind::WeightL, field);
    th.set_family_bound(family_bound);
    add_table_rules(th, a, "S1", "S1_");
    add_table_rules(th, b, "S2", "S2_");
    add_correction_family(th, a, "F1", "F", "S1, S2");
    add_correction_family(th, b, "F2", "F", "S1, S2");
    return th;
}

bool fp_irr_characterization(const Term& u, const std::vector<bool>& in_x) {
    if (u.is_generator()) return true;
    const Term& p = u.child(0);
    const Term& q = u.child(1);
    if (u.leaf_count() == 2) return in_x[p.symbol()] != in_x[q.symbol()];
    if (!fp_irr_characterization(p, in_x) || !fp_irr_characterization(q, in_x)) return false;
    if (u.is_rooted_at(kPrec)) return !p.is_rooted_at(kSucc);
    if (p.leaf_count() >= 2) return true;
    // u = z > q: excluded when q = ((z' < w1) < ...) < wn with z' on the side of z.
    const Term* r = &q;
    while (r->is_rooted_at(kPrec)) {
        if (r->child(0).is_generator()) return in_x[r->child(0).symbol()] != in_x[p.symbol()];
        r = &r->child(0);
    }
    return true;
}

Term encode_generator(std::size_t i, Symbol a, Symbol b) {
    if (i == 0) throw std::invalid_argument("generator encodings start at 1");
    Term chain = Term::generator(b);
    for (std::size_t k = 1; k < i; ++k) chain = Term::apply(kPrec, Term::generator(b), chain);
    return Term::apply(kPrec, Term::generator(a), chain);
}

Theory embed_two_gen_theory(const StructureConstants& a, std::uint32_t family_bound,
                            const std::array<std::string, 2>& extra, Field field) {
    require_entangled(a);
    std::vector<std::string> gens = a.basis;
    gens.push_back(extra[0]);
    gens.push_back(extra[1]);
    if (std::set<std::string>(gens.begin(), gens.end()).size() != gens.size())
        throw TheoryError("the extra generators must differ from the basis names");
    Theory th(Signature::l_algebra(gens), OrderKind::WeightL, field);
    th.set_family_bound(family_bound);
    const auto& basis = a.basis;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const std::string idx = std::to_string(i + 1) + "_" + std::to_string(j + 1);
            th.add_rule(parse_rule("F1_" + idx + ": " + basis[i] + " > " + basis[j] + " -> " +
                                       linear_text(a.succ[i][j], basis),
                                   th.signature(), th.field(), "F1"));
        }
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const std::string idx = std::to_string(i + 1) + "_" + std::to_string(j + 1);
            th.add_rule(parse_rule("F2_" + idx + ": " + basis[i] + " < " + basis[j] + " -> " +
                                       linear_text(a.prec[i][j], basis),
                                   th.signature(), th.field(), "F2"));
        }
    }
    const Symbol sa = static_cast<Symbol>(a.dim());
    for (std::size_t i = 1; i <= a.dim(); ++i) {
        const Term lhs = encode_generator(i, sa, sa + 1);
        th.add_rule(parse_rule("F3_" + std::to_string(i) + ": " + format(lhs, th.signature()) + " -> " + basis[i - 1],
                               th.signature(), th.field(), "F3"));
    }
    add_correction_family(th, a, "F4", "F4", "F1, F2, F3");
    return th;
}

ChainSuccessorCheck check_chain_successor(const Theory& th, std::uint32_t n) {
    const auto f1 = th.find_rule("F1");
    const auto f5 = th.find_rule("F5");
    if (!f1 || !f5) throw TheoryError("the chain check needs rules F1 and F5");
    const Pattern& chain = th.rule(*f5).lhs;
    const Term x = Term::generator(0);
    const Term xx = Term::apply(kPrec, x, x);

    auto chain_binding = [&](std::uint32_t len, const Term& q) {
        Binding b{std::vector<BoundValue>(chain.vars().size())};
        for (std::size_t k = 0; k < chain.vars().size(); ++k) {
            const auto& v = chain.vars()[k];
            if (v.spine) b.values[k] = std::vector<Term>(len, x);
            else b.values[k] = v.name == "q" ? q : x;
        }
        return b;
    };
    const Binding b5 = chain_binding(n, xx);
    const Term w = instantiate(chain, b5);
    const Polynomial p5 = th.instance_polynomial(*f5, b5);

    const Pattern& inner = th.rule(*f1).lhs;
    const Binding b1{std::vector<BoundValue>(inner.vars().size(), x)};
    const Polynomial p1 = th.instance_polynomial(*f1, b1);

    Path path(n + 1, 1);
    if (!(subterm_at(w, path) == p1.leading_word())) throw std::logic_error("chain tail is not the F1 left side");
    ChainSuccessorCheck out;
    out.n = n;
    out.composition = subtract(p5, apply_context(Context::at(w, path), p1, th.order(), th.mode()), th.order());
    Rewriter rw(th, n);
    out.reduced = rw.normal_form(out.composition).poly;
    out.expected = th.instance_polynomial(*f5, chain_binding(n + 1, x));
    out.matches = out.reduced == out.expected || out.reduced == scale(Scalar(-1, th.field()), out.expected);
    out.at_boundary = n >= th.family_bound();
    return out;
}

}  // namespace shirshov::lalg
