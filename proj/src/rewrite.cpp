#include "shirshov/rewrite.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "shirshov/normal_words.hpp"

namespace shirshov {

namespace {

constexpr std::size_t kCacheLimit = 4'000'000;

}  // namespace

Rewriter::Rewriter(const Theory& th, std::uint32_t max_spine)
    : th_(th), max_spine_(max_spine), all_mask_(th.all_groups_mask()), env_{nullptr, max_spine} {
    env_.irreducible = [this](const Term& t, std::uint64_t mask) { return is_irreducible(t, mask); };
    for (Symbol op = 0; op < th.signature().operation_count(); ++op) schemas_by_root_.push_back(th.schemas_for_root(op));
    schemas_at_leaf_ = th.schemas_for_root(std::nullopt);
}

bool Rewriter::is_irreducible(const Term& u, std::uint64_t mask) {
    const auto key = std::make_pair(u, mask);
    if (auto it = irreducible_.find(key); it != irreducible_.end()) return it->second;
    bool result = true;
    for (const auto& c : u.children()) {
        if (!is_irreducible(c, mask)) {
            result = false;
            break;
        }
    }
    if (result) result = !match_root(u, mask).has_value();
    if (irreducible_.size() >= kCacheLimit) irreducible_.clear();
    irreducible_.emplace(key, result);
    return result;
}

std::optional<std::pair<std::uint32_t, Binding>> Rewriter::match_root(const Term& t, std::uint64_t mask) {
    static const std::vector<std::uint32_t> kNone;
    const auto* ground = th_.ground_rules_at(t);
    const auto& g = ground ? *ground : kNone;
    const auto& schemas = t.is_operation() ? schemas_by_root_[t.symbol()] : schemas_at_leaf_;
    std::size_t i = 0, j = 0;
    while (i < g.size() || j < schemas.size()) {
        const bool take_ground = j == schemas.size() || (i < g.size() && g[i] < schemas[j]);
        const std::uint32_t id = take_ground ? g[i++] : schemas[j++];
        if (!(mask >> th_.group_of(id) & 1)) continue;
        if (take_ground) return std::make_pair(id, Binding{});
        if (auto b = match_first(th_.rule(id).lhs, t, env_)) return std::make_pair(id, std::move(*b));
    }
    return std::nullopt;
}

bool Rewriter::find_in(const Term& t, Path& path, Redex& out) {
    if (is_irreducible(t, all_mask_)) return false;
    if (auto m = match_root(t, all_mask_)) {
        out = Redex{path, m->first, std::move(m->second)};
        return true;
    }
    for (std::size_t k = 0; k < t.arity(); ++k) {
        path.push_back(static_cast<std::uint8_t>(k));
        if (find_in(t.child(k), path, out)) return true;
        path.pop_back();
    }
    return false;
}

std::optional<Redex> Rewriter::find_redex(const Term& u) {
    Path path;
    Redex r;
    if (find_in(u, path, r)) return r;
    return std::nullopt;
}

Polynomial Rewriter::replacement(const Term& u, const Redex& r) {
    std::vector<Monomial> terms;
    auto place = [&](const Term& sub, const Scalar& c) {
        Term w = th_.ambient(r.path.empty() ? sub : replace_at(u, r.path, sub));
        if (!th_.order().less(w, u))
            throw OrientationError("rule '" + th_.rule(r.rule).name + "' rewrites " + format(u, th_.signature()) +
                                   " to the word " + format(w, th_.signature()) + ", which is not smaller");
        terms.push_back({std::move(w), c});
    };
    if (th_.is_ground(r.rule)) {
        const auto& p = th_.ground_polynomial(r.rule).terms();
        for (std::size_t k = 1; k < p.size(); ++k) place(p[k].word, -p[k].coeff);
    } else {
        for (const auto& t : th_.rule(r.rule).rhs) place(instantiate(t.tree, r.binding), t.coeff);
    }
    return Polynomial(std::move(terms), th_.order());
}

std::optional<std::pair<Polynomial, TraceStep>> Rewriter::reduce_once(const Polynomial& f) {
    for (const auto& m : f.terms()) {
        auto r = find_redex(m.word);
        if (!r) continue;
        Polynomial repl = replacement(m.word, *r);
        Polynomial out = add(subtract(f, scale(m.coeff, Polynomial::word(m.word, th_.field())), th_.order()),
                             scale(m.coeff, repl), th_.order());
        TraceStep step{m.word, m.coeff, r->path, r->rule, std::move(r->binding)};
        return std::make_pair(std::move(out), std::move(step));
    }
    return std::nullopt;
}

NormalFormResult Rewriter::normal_form(const Polynomial& f, std::uint64_t fuel, ReductionTrace* trace) {
    Polynomial g = f;
    if (th_.mode() == Mode::LAlgebra &&
        std::any_of(f.terms().begin(), f.terms().end(), [](const Monomial& m) { return !lalg::is_normal(m.word); }))
        g = th_.ambient(f);
    if (trace) return traced(g, fuel, *trace);
    return memoized(g, fuel);
}

NormalFormResult Rewriter::traced(const Polynomial& f, std::uint64_t fuel, ReductionTrace& trace) {
    const Order& order = th_.order();
    std::map<Term, Scalar, Descending> work(Descending{&order});
    for (const auto& m : f.terms()) work.emplace(m.word, m.coeff);
    std::vector<Monomial> done;
    NormalFormResult res;
    while (!work.empty()) {
        auto top = work.begin();
        auto r = find_redex(top->first);
        if (!r) {
            // Every later word is smaller, so this one is final.
            done.push_back({top->first, top->second});
            work.erase(top);
            continue;
        }
        if (res.steps == fuel) {
            res.status = ReductionStatus::FuelExhausted;
            for (auto& [w, c] : work) done.push_back({w, c});
            trace.status = res.status;
            res.poly = Polynomial(std::move(done), order);
            return res;
        }
        ++res.steps;
        const Term u = top->first;
        const Scalar alpha = top->second;
        const Polynomial repl = replacement(u, *r);
        work.erase(top);
        for (const auto& m : repl.terms()) {
            auto [it, inserted] = work.emplace(m.word, alpha * m.coeff);
            if (!inserted) {
                it->second += alpha * m.coeff;
                if (it->second.is_zero()) work.erase(it);
            }
        }
        trace.steps.push_back(TraceStep{u, alpha, r->path, r->rule, std::move(r->binding)});
    }
    trace.status = ReductionStatus::NormalForm;
    res.poly = Polynomial::from_descending(std::move(done));
    return res;
}

NormalFormResult Rewriter::memoized(const Polynomial& f, std::uint64_t fuel) {
    const Order& order = th_.order();
    NormalFormResult res;

    struct Frame {
        Term word;
        Polynomial repl;
        std::size_t next = 0;
        Polynomial acc;
    };

    // Normal form of one word; false when fuel ran out.
    auto word_nf = [&](const Term& root) -> bool {
        if (nf_cache_.count(root)) return true;
        std::vector<Frame> stack;
        stack.push_back(Frame{root, {}, 0, {}});
        bool expanded = false;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (!expanded) {
                auto r = find_redex(fr.word);
                if (!r) {
                    Polynomial self = Polynomial::word(fr.word, th_.field());
                    const Term w = fr.word;
                    stack.pop_back();
                    if (nf_cache_.size() >= kCacheLimit) nf_cache_.clear();
                    nf_cache_.emplace(w, std::move(self));
                    expanded = true;
                    continue;
                }
                if (res.steps == fuel) return false;
                ++res.steps;
                fr.repl = replacement(fr.word, *r);
            }
            // Fold in finished children, then descend into the next unfinished one.
            expanded = true;
            bool descended = false;
            while (fr.next < fr.repl.size()) {
                const auto& m = fr.repl.terms()[fr.next];
                auto it = nf_cache_.find(m.word);
                if (it == nf_cache_.end()) {
                    stack.push_back(Frame{m.word, {}, 0, {}});
                    expanded = false;
                    descended = true;
                    break;
                }
                fr.acc = add(fr.acc, scale(m.coeff, it->second), order);
                ++fr.next;
            }
            if (descended) continue;
            const Term w = fr.word;
            Polynomial acc = std::move(fr.acc);
            stack.pop_back();
            if (nf_cache_.size() >= kCacheLimit) nf_cache_.clear();
            nf_cache_.emplace(w, std::move(acc));
        }
        return true;
    };

    Polynomial out;
    bool exhausted = false;
    for (const auto& m : f.terms()) {
        if (!exhausted && !word_nf(m.word)) exhausted = true;
        auto it = nf_cache_.find(m.word);
        if (it != nf_cache_.end()) {
            out = add(out, scale(m.coeff, it->second), order);
        } else {
            out = add(out, Polynomial::from_descending({m}), order);
        }
    }
    res.poly = std::move(out);
    if (exhausted) res.status = ReductionStatus::FuelExhausted;
    return res;
}

NormalFormResult normal_form(const Polynomial& f, const Theory& th, std::uint64_t fuel, ReductionTrace* trace) {
    Rewriter rw(th);
    return rw.normal_form(f, fuel, trace);
}

bool is_irreducible(const Term& u, const Theory& th) {
    Rewriter rw(th);
    return rw.is_irreducible(th.ambient(u));
}

std::vector<Term> ambient_words(const Theory& th, std::uint32_t leaves) {
    std::vector<Term> out = th.mode() == Mode::LAlgebra ? lalg::enumerate_normal(th.signature(), leaves)
                                                        : enumerate_words(th.signature(), leaves);
    const Order& order = th.order();
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order.less(a, b); });
    return out;
}

std::vector<Term> irr_enumerate(const Theory& th, std::uint32_t size) {
    Rewriter rw(th);
    std::vector<Term> out;
    for (auto& w : ambient_words(th, size))
        if (rw.is_irreducible(w)) out.push_back(std::move(w));
    return out;
}

std::vector<std::uint64_t> dims(const Theory& th, std::uint32_t max_size) {
    Rewriter rw(th);
    std::vector<std::uint64_t> out;
    for (std::uint32_t k = 1; k <= max_size; ++k) {
        std::uint64_t n = 0;
        for (const auto& w : ambient_words(th, k))
            if (rw.is_irreducible(w)) ++n;
        out.push_back(n);
    }
    return out;
}

std::vector<GroundInstance> instantiate_schemas(const Theory& th, std::uint32_t bound) {
    Rewriter rw(th);
    MatchEnv env{[&rw](const Term& t, std::uint64_t mask) { return rw.is_irreducible(t, mask); },
                 th.family_bound()};
    std::vector<std::vector<Term>> words;
    for (std::uint32_t k = 1; k <= bound; ++k) words.push_back(ambient_words(th, k));

    std::vector<GroundInstance> out;
    std::unordered_map<Term, std::vector<std::size_t>, TermHash> by_lead;
    auto keep = [&](GroundInstance inst) {
        auto& same = by_lead[inst.poly.leading_word()];
        for (auto idx : same)
            if (out[idx].poly == inst.poly) return;
        same.push_back(out.size());
        out.push_back(std::move(inst));
    };
    for (std::uint32_t id = 0; id < th.rules().size(); ++id) {
        if (th.is_ground(id)) {
            keep(GroundInstance{id, Binding{}, th.ground_polynomial(id)});
            continue;
        }
        const Pattern& lhs = th.rule(id).lhs;
        const auto root = lhs.root_operation();
        for (const auto& level : words) {
            for (const auto& w : level) {
                if (root && !w.is_rooted_at(*root)) continue;
                match_each(lhs, w, env, [&](const Binding& b) {
                    keep(GroundInstance{id, b, th.instance_polynomial(id, b)});
                    return true;
                });
            }
        }
    }
    return out;
}

namespace {

using Row = std::vector<std::pair<std::uint32_t, Scalar>>;

// Sparse rows kept in echelon form with the largest column as pivot.
class Echelon {
public:
    std::size_t rank() const { return pivots_.size(); }

    void insert(Row row) {
        while (!row.empty()) {
            const auto col = row.back().first;
            auto it = pivots_.find(col);
            if (it == pivots_.end()) {
                const Scalar inv = row.back().second.inverse();
                for (auto& [c, v] : row) v *= inv;
                pivots_.emplace(col, std::move(row));
                return;
            }
            row = combine(row, it->second, row.back().second);
        }
    }

private:
    // a - factor * b; both sorted by column.
    static Row combine(const Row& a, const Row& b, const Scalar& factor) {
        Row out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.push_back({b[j].first, -(factor * b[j].second)});
                ++j;
            } else {
                Scalar v = a[i].second - factor * b[j].second;
                if (!v.is_zero()) out.push_back({a[i].first, std::move(v)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::unordered_map<std::uint32_t, Row> pivots_;
};

}  // namespace

std::vector<std::uint64_t> quotient_dims_oracle(const Theory& th, std::uint32_t max_size) {
    const Signature& sig = th.signature();
    if (!sig.is_finitary()) throw std::invalid_argument("the quotient oracle needs every arity to be at least two");
    const bool l_mode = th.mode() == Mode::LAlgebra;
    Rewriter rw(th);
    MatchEnv env{[&rw](const Term& t, std::uint64_t mask) { return rw.is_irreducible(t, mask); }, UINT32_MAX};

    std::vector<std::vector<Term>> words(max_size + 1);
    std::unordered_map<Term, std::uint32_t, TermHash> column;
    std::vector<std::uint64_t> words_upto(max_size + 1, 0);
    for (std::uint32_t k = 1; k <= max_size; ++k) {
        words[k] = enumerate_words(sig, k);
        for (const auto& w : words[k]) column.emplace(w, static_cast<std::uint32_t>(column.size()));
        words_upto[k] = column.size();
    }

    // Relations bucketed by the largest leaf count in their support.
    std::vector<std::vector<Row>> buckets(max_size + 1);
    auto emit = [&](const Term& w, const Path& path, const std::vector<std::pair<Term, Scalar>>& summands) {
        std::map<std::uint32_t, Scalar> acc;
        std::uint32_t size = 0;
        for (const auto& [t, c] : summands) {
            Term full = path.empty() ? t : replace_at(w, path, t);
            auto it = column.find(full);
            if (it == column.end()) return;
            size = std::max(size, full.leaf_count());
            auto [a, inserted] = acc.emplace(it->second, c);
            if (!inserted) a->second += c;
        }
        Row row;
        for (auto& [col, c] : acc)
            if (!c.is_zero()) row.push_back({col, c});
        if (!row.empty()) buckets[size].push_back(std::move(row));
    };

    const Scalar one(1, th.field());
    for (std::uint32_t k = 1; k <= max_size; ++k) {
        for (const auto& w : words[k]) {
            for_each_subterm(w, [&](const Path& path, const Term& t) {
                if (l_mode && t.is_rooted_at(kPrec) && t.child(0).is_rooted_at(kSucc)) {
                    const Term& ab = t.child(0);
                    emit(w, path,
                         {{t, one},
                          {Term::apply(kSucc, ab.child(0), Term::apply(kPrec, ab.child(1), t.child(1))), -one}});
                }
                if (l_mode && !lalg::is_normal(t)) return true;
                for (std::uint32_t id = 0; id < th.rules().size(); ++id) {
                    if (th.is_ground(id)) {
                        if (!(th.rule(id).lhs.ground_term() == t)) continue;
                        std::vector<std::pair<Term, Scalar>> s;
                        for (const auto& m : th.ground_polynomial(id).terms()) s.push_back({m.word, m.coeff});
                        emit(w, path, s);
                        continue;
                    }
                    const Rule& r = th.rule(id);
                    match_each(r.lhs, t, env, [&](const Binding& b) {
                        std::vector<std::pair<Term, Scalar>> s{{t, one}};
                        for (const auto& rt : r.rhs) s.push_back({instantiate(rt.tree, b), -rt.coeff});
                        emit(w, path, s);
                        return true;
                    });
                }
                return true;
            });
        }
    }

    Echelon ech;
    std::vector<std::uint64_t> out;
    std::uint64_t previous_codim = 0;
    for (std::uint32_t k = 1; k <= max_size; ++k) {
        for (auto& row : buckets[k]) ech.insert(std::move(row));
        const std::uint64_t codim = words_upto[k] - ech.rank();
        out.push_back(codim - previous_codim);
        previous_codim = codim;
    }
    return out;
}

}  // namespace shirshov
