#include "shirshov/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "shirshov/normal_words.hpp"

namespace shirshov {

Polynomial::Polynomial(std::vector<Monomial> terms, const Order& order) {
    std::sort(terms.begin(), terms.end(),
              [&](const Monomial& a, const Monomial& b) { return order.greater(a.word, b.word); });
    for (auto& m : terms) {
        if (!terms_.empty() && terms_.back().word == m.word) {
            terms_.back().coeff += m.coeff;
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
            continue;
        }
        if (!m.coeff.is_zero()) terms_.push_back(std::move(m));
    }
}

Polynomial Polynomial::word(const Term& w, Field field) {
    Polynomial p;
    p.terms_.push_back({w, Scalar(1, field)});
    return p;
}

Polynomial Polynomial::from_descending(std::vector<Monomial> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
}

const Term& Polynomial::leading_word() const {
    if (terms_.empty()) throw std::domain_error("the zero polynomial has no leading word");
    return terms_.front().word;
}

const Scalar& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("the zero polynomial has no leading coefficient");
    return terms_.front().coeff;
}

Scalar Polynomial::coeff(const Term& w, Field field) const {
    for (const auto& m : terms_)
        if (m.word == w) return m.coeff;
    return Scalar(0, field);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].word == b.terms_[i].word) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
}

namespace {

// Merge of two descending term lists.
Polynomial merge(const Polynomial& f, const Polynomial& g, const Scalar* g_factor, const Order& order) {
    std::vector<Monomial> out;
    out.reserve(f.size() + g.size());
    auto a = f.terms().begin(), ae = f.terms().end();
    auto b = g.terms().begin(), be = g.terms().end();
    auto g_coeff = [&](const Monomial& m) { return g_factor ? m.coeff * *g_factor : m.coeff; };
    while (a != ae || b != be) {
        if (b == be) {
            out.push_back(*a++);
            continue;
        }
        if (a == ae) {
            out.push_back({b->word, g_coeff(*b)});
            ++b;
            continue;
        }
        const auto c = order.compare(a->word, b->word);
        if (c > 0) {
            out.push_back(*a++);
        } else if (c < 0) {
            out.push_back({b->word, g_coeff(*b)});
            ++b;
        } else {
            Scalar s = a->coeff + g_coeff(*b);
            if (!s.is_zero()) out.push_back({a->word, std::move(s)});
            ++a;
            ++b;
        }
    }
    return Polynomial::from_descending(std::move(out));
}

}  // namespace

Polynomial add(const Polynomial& f, const Polynomial& g, const Order& order) {
    return merge(f, g, nullptr, order);
}

Polynomial subtract(const Polynomial& f, const Polynomial& g, const Order& order) {
    if (g.is_zero()) return f;
    const Scalar minus_one(-1, g.leading_coeff().field());
    return merge(f, g, &minus_one, order);
}

Polynomial scale(const Scalar& alpha, const Polynomial& f) {
    if (alpha.is_zero()) return {};
    std::vector<Monomial> out;
    out.reserve(f.size());
    for (const auto& m : f.terms()) out.push_back({m.word, m.coeff * alpha});
    return Polynomial::from_descending(std::move(out));
}

Leading leading(const Polynomial& f) { return {f.leading_word(), f.leading_coeff()}; }

Polynomial monic(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("the zero polynomial cannot be made monic");
    if (f.leading_coeff().is_one()) return f;
    return scale(f.leading_coeff().inverse(), f);
}

Polynomial apply_context(const Context& c, const Polynomial& f, const Order& order, Mode mode) {
    if (c.is_identity()) return f;
    const Path hole = c.hole_path();
    std::vector<Monomial> out;
    out.reserve(f.size());
    for (const auto& m : f.terms()) {
        Term w = replace_at(c.tree(), hole, m.word);
        if (mode == Mode::LAlgebra) w = lalg::bracket(w);
        out.push_back({std::move(w), m.coeff});
    }
    return Polynomial(std::move(out), order);
}

Polynomial map_words(const Polynomial& f, const Order& order, Term (*transform)(const Term&)) {
    std::vector<Monomial> out;
    out.reserve(f.size());
    for (const auto& m : f.terms()) out.push_back({transform(m.word), m.coeff});
    return Polynomial(std::move(out), order);
}

std::string format(const Polynomial& f, const Signature& sig) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& m : f.terms()) {
        Scalar c = m.coeff;
        const bool negative = c.is_negative();
        if (negative) c = -c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (!c.is_one()) out += c.str() + " * ";
        out += format(m.word, sig);
        first = false;
    }
    return out;
}

}  // namespace shirshov
