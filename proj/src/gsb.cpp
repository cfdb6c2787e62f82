#include "shirshov/gsb.hpp"

#include <algorithm>
#include <unordered_map>

#include "shirshov/normal_words.hpp"

namespace shirshov {

std::string to_string(CompositionKind kind) { return kind == CompositionKind::Inclusion ? "inclusion" : "right-mul"; }

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Trivial:
            return "trivial";
        case Verdict::NonTrivial:
            return "non-trivial";
        case Verdict::FuelExhausted:
            return "fuel-exhausted";
    }
    return {};
}

namespace {

using Sink = std::function<void(CompositionReport&&)>;

void each_inclusion(const std::vector<GroundInstance>& rules, const Theory& th, const Sink& sink) {
    std::unordered_map<Term, std::vector<std::uint32_t>, TermHash> by_lead;
    for (std::uint32_t k = 0; k < rules.size(); ++k) by_lead[rules[k].poly.leading_word()].push_back(k);
    for (std::uint32_t f = 0; f < rules.size(); ++f) {
        const Polynomial& pf = rules[f].poly;
        const Term& w = pf.leading_word();
        for_each_subterm(w, [&](const Path& path, const Term& s) {
            auto it = by_lead.find(s);
            if (it == by_lead.end()) return true;
            const Context c = Context::at(w, path);
            for (auto g : it->second) {
                CompositionReport r;
                r.w = w;
                r.f = f;
                r.g = g;
                r.path = path;
                if (f == g && path.empty()) {
                    r.composition = Polynomial{};
                } else {
                    r.composition = subtract(pf, apply_context(c, rules[g].poly, th.order(), th.mode()), th.order());
                }
                sink(std::move(r));
            }
            return true;
        });
    }
}

std::vector<Term> normal_words_upto(const Theory& th, std::uint32_t v_bound) {
    std::vector<Term> out;
    for (std::uint32_t k = 1; k <= v_bound; ++k) {
        auto level = ambient_words(th, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

void each_rightmul(const std::vector<GroundInstance>& rules, const Theory& th, std::uint32_t v_bound,
                   const Sink& sink) {
    if (th.mode() != Mode::LAlgebra) throw TheoryError("right-multiplication compositions exist only for L-algebras");
    const auto vs = normal_words_upto(th, v_bound);
    for (std::uint32_t f = 0; f < rules.size(); ++f) {
        const Polynomial& pf = rules[f].poly;
        if (!pf.leading_word().is_rooted_at(kSucc)) continue;
        for (const auto& v : vs) {
            std::vector<Monomial> terms;
            terms.reserve(pf.size());
            for (const auto& m : pf.terms()) terms.push_back({lalg::nmul(m.word, kPrec, v), m.coeff});
            CompositionReport r;
            r.kind = CompositionKind::RightMul;
            r.w = Term::apply(kPrec, pf.leading_word(), v);
            r.f = f;
            r.g = f;
            r.v = v;
            r.composition = Polynomial(std::move(terms), th.order());
            sink(std::move(r));
        }
    }
}

}  // namespace

std::vector<CompositionReport> inclusion_compositions(const std::vector<GroundInstance>& rules, const Theory& th) {
    std::vector<CompositionReport> out;
    each_inclusion(rules, th, [&](CompositionReport&& r) { out.push_back(std::move(r)); });
    return out;
}

std::vector<CompositionReport> rightmul_compositions(const std::vector<GroundInstance>& rules, const Theory& th,
                                                     std::uint32_t v_bound) {
    std::vector<CompositionReport> out;
    each_rightmul(rules, th, v_bound, [&](CompositionReport&& r) { out.push_back(std::move(r)); });
    return out;
}

Verdict is_trivial(CompositionReport& report, Rewriter& rw, std::uint64_t fuel, ReductionTrace* trace) {
    if (report.composition.is_zero() && !trace) {
        report.normal_form = Polynomial{};
        report.verdict = Verdict::Trivial;
        return report.verdict;
    }
    auto res = rw.normal_form(report.composition, fuel, trace);
    report.normal_form = std::move(res.poly);
    if (res.status == ReductionStatus::FuelExhausted) report.verdict = Verdict::FuelExhausted;
    else report.verdict = report.normal_form.is_zero() ? Verdict::Trivial : Verdict::NonTrivial;
    return report.verdict;
}

std::string GsbReport::verdict() const {
    const std::string at = "(bound " + std::to_string(bound) + ", v_bound " + std::to_string(v_bound) + ")";
    if (counts.fuel_exhausted > 0) return "fuel exhausted at " + at;
    if (counts.nontrivial > 0) return "not a GS basis at " + at;
    return "GS basis verified at " + at;
}

GsbReport check_gsb(const Theory& th, std::uint32_t bound, std::uint32_t v_bound, std::uint64_t fuel) {
    GsbReport rep;
    rep.bound = bound;
    rep.v_bound = v_bound;
    rep.instances = instantiate_schemas(th, bound);
    Rewriter rw(th);
    auto consume = [&](CompositionReport&& r) {
        ++rep.counts.checked;
        ++(r.kind == CompositionKind::Inclusion ? rep.counts.inclusion : rep.counts.right_mul);
        switch (is_trivial(r, rw, fuel)) {
            case Verdict::Trivial:
                ++rep.counts.trivial;
                return;
            case Verdict::NonTrivial:
                ++rep.counts.nontrivial;
                break;
            case Verdict::FuelExhausted:
                ++rep.counts.fuel_exhausted;
                break;
        }
        rep.witnesses.push_back(std::move(r));
    };
    each_inclusion(rep.instances, th, consume);
    if (th.mode() == Mode::LAlgebra) each_rightmul(rep.instances, th, v_bound, consume);

    const Order& order = th.order();
    std::stable_sort(rep.witnesses.begin(), rep.witnesses.end(),
                     [&](const CompositionReport& a, const CompositionReport& b) {
                         if (auto c = order.compare(a.w, b.w); c != 0) return c < 0;
                         if (a.f != b.f) return a.f < b.f;
                         if (a.g != b.g) return a.g < b.g;
                         return a.path < b.path;
                     });
    return rep;
}

CompletionResult complete(const Theory& th, std::uint32_t bound, std::uint32_t v_bound, std::size_t max_rules,
                          std::uint64_t fuel) {
    CompletionResult out{th, {}, false, false, {}};
    std::size_t next_name = 1;
    auto fresh_name = [&] {
        while (out.theory.find_rule("c" + std::to_string(next_name))) ++next_name;
        return "c" + std::to_string(next_name++);
    };
    while (true) {
        out.final_report = check_gsb(out.theory, bound, v_bound, fuel);
        if (out.final_report.counts.fuel_exhausted > 0) {
            out.fuel_exhausted = true;
            return out;
        }
        if (out.final_report.verified()) return out;
        for (const auto& wit : out.final_report.witnesses) {
            Rewriter rw(out.theory);
            auto res = rw.normal_form(wit.normal_form, fuel);
            if (res.status == ReductionStatus::FuelExhausted) {
                out.fuel_exhausted = true;
                return out;
            }
            if (res.poly.is_zero()) continue;
            if (out.log.size() >= max_rules) {
                out.budget_exceeded = true;
                return out;
            }
            const std::string name = fresh_name();
            const Polynomial m = monic(res.poly);
            out.theory.add_ground_rule(name, "completion", m);
            out.log.push_back(CompletionStep{name, m, wit.kind, wit.w});
        }
    }
}

std::string format_instance(const GroundInstance& inst, const Theory& th) {
    const Rule& r = th.rule(inst.rule);
    std::string out = r.name;
    if (!r.lhs.is_ground()) out += format(inst.binding, r.lhs.vars(), th.signature());
    return out;
}

}  // namespace shirshov
