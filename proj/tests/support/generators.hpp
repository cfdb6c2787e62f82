#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <random>
#include <vector>

#include "shirshov/lalg.hpp"
#include "shirshov/normal_words.hpp"
#include "shirshov/polynomial.hpp"
#include "shirshov/signature.hpp"
#include "shirshov/term.hpp"
#include "shirshov/theory.hpp"

// Hand-rolled generators shared by the property tests and the acceptance binary.
namespace shirshov::testing {

using Rng = std::mt19937_64;

inline std::uint32_t uniform(Rng& rng, std::uint32_t lo, std::uint32_t hi) {
    return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

/// A uniformly shaped random word with exactly `leaves` leaves over a signature of binary operations.
inline Term random_word(Rng& rng, const Signature& sig, std::uint32_t leaves) {
    if (leaves == 1) return Term::generator(uniform(rng, 0, static_cast<std::uint32_t>(sig.generator_count() - 1)));
    const std::uint32_t left = uniform(rng, 1, leaves - 1);
    const Symbol op = uniform(rng, 0, static_cast<std::uint32_t>(sig.operation_count() - 1));
    return Term::apply(op, random_word(rng, sig, left), random_word(rng, sig, leaves - left));
}

inline Term random_normal(Rng& rng, const Signature& sig, std::uint32_t leaves) {
    return lalg::bracket(random_word(rng, sig, leaves));
}

/// Cuts a random subterm out of a random word.
inline Context random_context(Rng& rng, const Signature& sig, std::uint32_t leaves) {
    const Term host = random_word(rng, sig, leaves);
    std::vector<Path> paths;
    for_each_subterm(host, [&](const Path& p, const Term&) {
        paths.push_back(p);
        return true;
    });
    return Context(replace_at(host, paths[uniform(rng, 0, static_cast<std::uint32_t>(paths.size() - 1))], Term::hole()));
}

/// Up to three ground rules over the binary pair in the free algebra; each
/// polynomial is a word with 2..4 leaves plus up to two smaller words.
inline Theory random_ground_theory(Rng& rng) {
    const std::uint32_t gens = uniform(rng, 1, 2);
    std::vector<std::string> names = {"x", "y"};
    names.resize(gens);
    Theory th(Signature::binary_pair(names), OrderKind::WeightL);
    const std::uint32_t rules = uniform(rng, 1, 3);
    for (std::uint32_t r = 0; r < rules; ++r) {
        const std::uint32_t leaves = uniform(rng, 2, 4);
        std::vector<Monomial> terms{{random_word(rng, th.signature(), leaves), Scalar(1)}};
        const std::uint32_t tail = uniform(rng, 0, 2);
        for (std::uint32_t t = 0; t < tail; ++t) {
            const long c = static_cast<long>(uniform(rng, 1, 3)) * (uniform(rng, 0, 1) ? 1 : -1);
            terms.push_back({random_word(rng, th.signature(), uniform(rng, 1, leaves - 1)), Scalar(c)});
        }
        const Polynomial f(std::move(terms), th.order());
        if (f.is_zero()) continue;
        th.add_ground_rule("r" + std::to_string(r + 1), "main", f);
    }
    return th;
}

/// x_{-m}>(...>(x_0<(x_1>(...>x_n)))) from its decomposition.
inline Term loday_word(const lalg::LodayForm& f) {
    const auto& a = f.letters;
    const std::size_t mid = f.m;
    Term t = Term::generator(a.back());
    for (std::size_t k = a.size() - 1; k-- > mid + 1;) t = Term::apply(kSucc, Term::generator(a[k]), t);
    if (f.n > 0) t = Term::apply(kPrec, Term::generator(a[mid]), t);
    for (std::size_t k = mid; k-- > 0;) t = Term::apply(kSucc, Term::generator(a[k]), t);
    return t;
}

/// Every Loday-shaped word with `leaves` leaves over g generators.
inline std::vector<Term> loday_words(std::uint32_t leaves, std::uint32_t g) {
    std::vector<Term> out;
    std::vector<Symbol> letters(leaves, 0);
    while (true) {
        for (std::size_t m = 0; m < leaves; ++m) out.push_back(loday_word({m, letters, leaves - 1 - m}));
        std::size_t k = 0;
        while (k < leaves && ++letters[k] == g) letters[k++] = 0;
        if (k == leaves) break;
    }
    return out;
}

using TermSet = std::set<Term, decltype(&structural_less)>;

/// Every normal form reachable by rewriting (a>b)<c -> a>(b<c) at any
/// redex, by exhaustive search over all rewrite orders.
inline TermSet all_entanglement_normal_forms(const Term& u) {
    TermSet out(&structural_less), seen(&structural_less);
    std::function<void(const Term&)> visit = [&](const Term& t) {
        if (!seen.insert(t).second) return;
        bool reducible = false;
        for (const auto& o : occurrences(t)) {
            const Term& s = o.subterm;
            if (!s.is_rooted_at(kPrec) || !s.child(0).is_rooted_at(kSucc)) continue;
            reducible = true;
            const Term& ab = s.child(0);
            visit(plug(o.context, Term::apply(kSucc, ab.child(0), Term::apply(kPrec, ab.child(1), s.child(1)))));
        }
        if (!reducible) out.insert(t);
    };
    visit(u);
    return out;
}

}  // namespace shirshov::testing
