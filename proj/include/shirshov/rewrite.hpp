#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "shirshov/pattern.hpp"
#include "shirshov/polynomial.hpp"
#include "shirshov/theory.hpp"

namespace shirshov {

/// An occurrence of a rule's left side inside a word.
struct Redex {
    Path path;
    std::uint32_t rule = 0;
    Binding binding;
};

struct TraceStep {
    Term word;
    Scalar coeff;
    Path path;
    std::uint32_t rule = 0;
    Binding binding;
};

enum class ReductionStatus { NormalForm, FuelExhausted };

struct ReductionTrace {
    std::vector<TraceStep> steps;
    ReductionStatus status = ReductionStatus::NormalForm;
};

struct NormalFormResult {
    Polynomial poly;
    ReductionStatus status = ReductionStatus::NormalForm;
    std::uint64_t steps = 0;
};

/// A ground instance of a rule: the rule id, its binding (empty for
/// ground rules) and the monic polynomial lhs - rhs.
struct GroundInstance {
    std::uint32_t rule = 0;
    Binding binding;
    Polynomial poly;
};

/// Reduction modulo a theory. Strategy: the greatest reducible support
/// word, its first redex in preorder, the first matching rule by id.
/// Caches irreducibility and per-word normal forms, so one Rewriter
/// should serve many reductions against an unchanging theory.
class Rewriter {
public:
    /// `max_spine` caps the spine length of every schema match.
    explicit Rewriter(const Theory& th, std::uint32_t max_spine = UINT32_MAX);
    Rewriter(const Rewriter&) = delete;
    Rewriter& operator=(const Rewriter&) = delete;

    const Theory& theory() const { return th_; }

    /// No subterm matches a rule of the groups in `mask`.
    bool is_irreducible(const Term& u, std::uint64_t mask);
    bool is_irreducible(const Term& u) { return is_irreducible(u, th_.all_groups_mask()); }

    /// First rule (by id) in `mask` whose left side matches t at the root.
    std::optional<std::pair<std::uint32_t, Binding>> match_root(const Term& t, std::uint64_t mask);
    std::optional<Redex> find_redex(const Term& u);

    /// The words replacing u at a redex, bracketed in L-algebra mode.
    /// Throws OrientationError unless every word is below u.
    Polynomial replacement(const Term& u, const Redex& r);

    /// One step on the greatest reducible support word of f.
    std::optional<std::pair<Polynomial, TraceStep>> reduce_once(const Polynomial& f);

    /// Reduces until no redex remains or `fuel` steps have been spent. With
    /// a trace, steps are recorded one polynomial at a time; without, per-word
    /// normal forms are memoized. Both give the same result.
    NormalFormResult normal_form(const Polynomial& f, std::uint64_t fuel, ReductionTrace* trace = nullptr);
    NormalFormResult normal_form(const Polynomial& f) { return normal_form(f, th_.fuel()); }

private:
    struct MaskedTermHash {
        std::size_t operator()(const std::pair<Term, std::uint64_t>& k) const {
            return k.first.hash() ^ (k.second * 0x9e3779b97f4a7c15ULL);
        }
    };

    bool find_in(const Term& t, Path& path, Redex& out);
    NormalFormResult traced(const Polynomial& f, std::uint64_t fuel, ReductionTrace& trace);
    NormalFormResult memoized(const Polynomial& f, std::uint64_t fuel);

    const Theory& th_;
    std::uint32_t max_spine_;
    std::uint64_t all_mask_;
    MatchEnv env_;
    std::vector<std::vector<std::uint32_t>> schemas_by_root_;
    std::vector<std::uint32_t> schemas_at_leaf_;
    std::unordered_map<std::pair<Term, std::uint64_t>, bool, MaskedTermHash> irreducible_;
    std::unordered_map<Term, Polynomial, TermHash> nf_cache_;
};

/// Reduces f (bracketed first in L-algebra mode) with a fresh Rewriter.
NormalFormResult normal_form(const Polynomial& f, const Theory& th, std::uint64_t fuel,
                             ReductionTrace* trace = nullptr);
bool is_irreducible(const Term& u, const Theory& th);

/// Words of the ambient algebra with exactly `leaves` leaves: normal words
/// in L-algebra mode, all Omega-words otherwise. Ascending under the order.
std::vector<Term> ambient_words(const Theory& th, std::uint32_t leaves);

/// Irreducible words with exactly `size` leaves, ascending.
std::vector<Term> irr_enumerate(const Theory& th, std::uint32_t size);
/// Entry k-1 is the number of irreducible words with k leaves.
std::vector<std::uint64_t> dims(const Theory& th, std::uint32_t max_size);

/// Every schema instance whose left word has at most `bound` leaves, spines
/// capped at the theory's family bound, plus all ground rules; identical
/// polynomials are kept once. Order: by rule, then left word ascending.
std::vector<GroundInstance> instantiate_schemas(const Theory& th, std::uint32_t bound);

/// Dimensions of the quotient per leaf count, computed by exact row
/// reduction of the relation space among all Omega-words with at most
/// max_size leaves; in L-algebra mode the entanglement relations are
/// added. Requires a finitary signature.
std::vector<std::uint64_t> quotient_dims_oracle(const Theory& th, std::uint32_t max_size);

}  // namespace shirshov
