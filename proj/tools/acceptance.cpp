// Runs the acceptance checks and prints one PASS/FAIL line for each.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "shirshov/gsb.hpp"
#include "shirshov/lalg.hpp"
#include "shirshov/order.hpp"
#include "shirshov/rewrite.hpp"
#include "shirshov/theory_file.hpp"
#include "support/generators.hpp"

using namespace shirshov;

namespace {

const std::string kDir = SHIRSHOV_THEORY_DIR;

Theory load(const char* name) { return build_theory(read_theory_file(kDir + "/" + name)); }

std::uint64_t closed_form(std::uint64_t n) {
    std::uint64_t c = 1;
    for (std::uint64_t k = 1; k <= n - 1; ++k) c = c * (2 * n - 1 + k) / k;
    return c / n;
}

lalg::StructureConstants max_table() {
    auto sc = lalg::StructureConstants::zero({"x1", "x2"});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            sc.succ[i][j][std::max(i, j)] = Scalar(1);
            sc.prec[i][j][std::max(i, j)] = Scalar(1);
        }
    return sc;
}

bool verified(const Theory& th, std::uint32_t bound, std::uint32_t v_bound) {
    const auto rep = check_gsb(th, bound, v_bound, th.fuel());
    return rep.counts.nontrivial == 0 && rep.counts.fuel_exhausted == 0;
}

bool l_identity_basis() {
    const Theory th = load("l_identity.theory");
    const auto rep = check_gsb(th, 6, 3, th.fuel());
    return rep.verified() && rep.counts.right_mul == 0 && rep.counts.inclusion > 0;
}

bool free_dimensions() {
    const Theory one = load("l_identity.theory");
    const Theory two = load("l_identity_2gen.theory");
    const std::vector<std::uint64_t> expected = {1, 2, 7, 30, 143, 728};
    const auto d1 = dims(one, 6);
    if (d1 != expected) return false;
    for (std::uint64_t n = 1; n <= 6; ++n)
        if (d1[n - 1] != closed_form(n)) return false;
    const auto d2 = dims(two, 4);
    for (std::uint32_t n = 1; n <= 4; ++n)
        if (d2[n - 1] != (1ull << n) * d1[n - 1]) return false;
    return true;
}

bool oracle_equivalence() {
    const Theory l = load("l_identity.theory");
    const Theory d = load("dialgebra.theory");
    const Theory e = load("eml_d2.theory");
    return dims(l, 5) == quotient_dims_oracle(l, 5) && dims(d, 5) == quotient_dims_oracle(d, 5) &&
           dims(e, 4) == quotient_dims_oracle(e, 4);
}

bool dialgebra_basis() {
    const Theory th = load("dialgebra.theory");
    if (th.family_bound() != 3 || !verified(th, 6, 3)) return false;
    for (std::uint32_t n : {1u, 2u}) {
        const auto c = lalg::check_chain_successor(th, n);
        if (!c.matches || c.at_boundary) return false;
    }
    return true;
}

bool loday_basis() {
    for (const char* name : {"dialgebra.theory", "dialgebra_2gen.theory"}) {
        const Theory th = load(name);
        const auto g = static_cast<std::uint32_t>(th.signature().generator_count());
        std::uint64_t power = 1;
        for (std::uint32_t l = 1; l <= 6; ++l) {
            power *= g;
            auto irr = irr_enumerate(th, l);
            auto shapes = testing::loday_words(l, g);
            if (irr.size() != l * power || shapes.size() != l * power) return false;
            std::sort(irr.begin(), irr.end(), structural_less);
            std::sort(shapes.begin(), shapes.end(), structural_less);
            if (irr != shapes) return false;
        }
    }
    return true;
}

bool free_product_basis() {
    const Theory th = load("free_product.theory");
    if (th.family_bound() != 2 || !verified(th, 5, 3)) return false;
    Rewriter rw(th);
    const std::vector<bool> in_x = {true, false};
    for (std::uint32_t n = 1; n <= 5; ++n)
        for (const auto& w : lalg::enumerate_normal(th.signature(), n))
            if (lalg::fp_irr_characterization(w, in_x) != rw.is_irreducible(w)) return false;
    return true;
}

bool embedding() {
    const auto sc = max_table();
    if (lalg::entanglement_failure(sc)) return false;
    const Theory th = load("embed_two_gen.theory");
    if (!verified(th, 5, 3)) return false;
    const auto& sig = th.signature();
    const Symbol a = *sig.find_generator("a"), b = *sig.find_generator("b");
    Rewriter rw(th);
    auto reduces_to = [&](const Term& t, std::size_t basis) {
        const Term x = Term::generator(*sig.find_generator(sc.basis[basis]));
        return rw.normal_form(th.ambient(Polynomial::word(t))).poly == Polynomial::word(x);
    };
    for (std::size_t i = 0; i < 2; ++i) {
        if (!reduces_to(lalg::encode_generator(i + 1, a, b), i)) return false;
        for (std::size_t j = 0; j < 2; ++j)
            for (Symbol op : {kSucc, kPrec})
                if (!reduces_to(Term::apply(op, lalg::encode_generator(i + 1, a, b), lalg::encode_generator(j + 1, a, b)),
                                std::max(i, j)))
                    return false;
    }
    return true;
}

bool monomiality() {
    testing::Rng rng(2024);
    const auto sig = Signature::l_algebra({"x", "y"});
    const Order general(OrderKind::WeightGeneral, sig);
    const Order L(OrderKind::WeightL, sig);
    for (int trials = 0; trials < 1000;) {
        Term u = testing::random_word(rng, sig, testing::uniform(rng, 1, 5));
        Term v = testing::random_word(rng, sig, testing::uniform(rng, 1, 5));
        if (u == v) continue;
        if (general.less(u, v)) std::swap(u, v);
        const Context c = testing::random_context(rng, sig, testing::uniform(rng, 1, 5));
        if (!general.greater(plug(c, u), plug(c, v))) return false;
        ++trials;
    }
    for (int trials = 0; trials < 1000;) {
        Term u = testing::random_normal(rng, sig, testing::uniform(rng, 1, 5));
        Term v = testing::random_normal(rng, sig, testing::uniform(rng, 1, 5));
        if (u == v) continue;
        if (L.less(u, v)) std::swap(u, v);
        const Context c = testing::random_context(rng, sig, testing::uniform(rng, 1, 5));
        if (!L.greater(lalg::bracket(plug(c, u)), lalg::bracket(plug(c, v)))) return false;
        ++trials;
    }
    return true;
}

bool descending_chain() {
    const auto chain = remark_chain(50);
    const Signature sig = remark_signature();
    if (chain.size() != 50) return false;
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i + 1; j < chain.size(); ++j)
            if (compare_leaf_weight(chain[i], chain[j], sig) <= 0) return false;
    return true;
}

bool completion() {
    const Theory toy = load("toy.theory");
    if (verified(toy, 5, 3)) return false;
    const auto res = complete(toy, 5, 3, 10, toy.fuel());
    if (res.budget_exceeded || res.log.size() != 1 || !res.final_report.verified()) return false;
    if (format(res.log[0].poly, toy.signature()) != "x<x - x") return false;
    testing::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const Theory th = testing::random_ground_theory(rng);
        const auto r = complete(th, 5, 3, 50, th.fuel());
        if (r.budget_exceeded || r.fuel_exhausted || !r.final_report.verified()) return false;
        if (dims(r.theory, 4) != quotient_dims_oracle(r.theory, 4)) return false;
    }
    return true;
}

bool bracket_confluence() {
    const auto sig = Signature::l_algebra({"x", "y"});
    for (std::uint32_t n = 1; n <= 5; ++n)
        for (const auto& u : enumerate_words(sig, n)) {
            const auto forms = testing::all_entanglement_normal_forms(u);
            if (forms.size() != 1 || *forms.begin() != lalg::bracket(u)) return false;
        }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool()> run;
    };
    const Criterion criteria[] = {
        {"entanglement identity is a GS basis (bound 6, v_bound 3)", l_identity_basis},
        {"free L-algebra dimensions 1 2 7 30 143 728, and 2^n times over two generators", free_dimensions},
        {"Irr dimensions equal the quotient oracle (L, dialgebra, structure constants d=2)", oracle_equivalence},
        {"dialgebra families are a GS basis; (F1, F5(n)) yields F5(n+1) for n = 1, 2", dialgebra_basis},
        {"dialgebra Irr equals the Loday-shaped words, l * g^l of them", loday_basis},
        {"free product of idempotent algebras is a GS basis; closed-form Irr agrees", free_product_basis},
        {"two-generator embedding is a GS basis and a homomorphism on the basis", embedding},
        {"both orders are monomial (1000 random trials each)", monomiality},
        {"unary leaf-weight chain of length 50 strictly descends", descending_chain},
        {"toy set completes by x<x - x; 200 random ground theories complete and match the oracle", completion},
        {"bracket normal forms are independent of rewrite order up to 5 leaves", bracket_confluence},
    };
    int failed = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d  %s  (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", index, c.name, secs,
                    error.empty() ? "" : "  error: ", error.c_str());
        std::fflush(stdout);
        failed += !ok;
    }
    return failed == 0 ? 0 : 1;
}
