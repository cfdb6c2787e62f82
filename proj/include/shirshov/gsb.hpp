#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shirshov/polynomial.hpp"
#include "shirshov/rewrite.hpp"
#include "shirshov/theory.hpp"

namespace shirshov {

inline constexpr std::uint32_t kDefaultVBound = 3;

enum class CompositionKind { Inclusion, RightMul };
enum class Verdict { Trivial, NonTrivial, FuelExhausted };

std::string to_string(CompositionKind kind);
std::string to_string(Verdict verdict);

/// One critical situation between ground instances f and g (indices into
/// the instance list). Inclusion: f's leading word carries g's leading
/// word at `path`, and the composition is f - context|_g. Right
/// multiplication: f's leading word is >-rooted and the composition is
/// f<v in the free L-algebra (g == f).
struct CompositionReport {
    CompositionKind kind = CompositionKind::Inclusion;
    /// The ambiguity: f's leading word, or the raw word (f's leading word)<v.
    Term w = Term::hole();
    std::uint32_t f = 0;
    std::uint32_t g = 0;
    Path path;
    std::optional<Term> v;
    Polynomial composition;
    Polynomial normal_form;
    Verdict verdict = Verdict::Trivial;
};

/// Inclusion compositions among the instances, root self-overlaps included
/// (they are zero). Order: by f, then preorder position, then g.
std::vector<CompositionReport> inclusion_compositions(const std::vector<GroundInstance>& rules, const Theory& th);
/// f<v for every >-rooted leading word and every normal v with at most
/// v_bound leaves. Throws in Omega-free mode.
std::vector<CompositionReport> rightmul_compositions(const std::vector<GroundInstance>& rules, const Theory& th,
                                                     std::uint32_t v_bound);

/// Reduces the composition, filling in its normal form and verdict.
Verdict is_trivial(CompositionReport& report, Rewriter& rw, std::uint64_t fuel,
                   ReductionTrace* trace = nullptr);

struct CompositionCounts {
    std::uint64_t inclusion = 0;
    std::uint64_t right_mul = 0;
    std::uint64_t checked = 0;
    std::uint64_t trivial = 0;
    std::uint64_t nontrivial = 0;
    std::uint64_t fuel_exhausted = 0;
};

struct GsbReport {
    std::uint32_t bound = 0;
    std::uint32_t v_bound = 0;
    std::vector<GroundInstance> instances;
    CompositionCounts counts;
    /// Non-trivial and fuel-exhausted compositions, sorted by ambiguity
    /// word, rule indices and position.
    std::vector<CompositionReport> witnesses;

    bool verified() const { return counts.nontrivial == 0 && counts.fuel_exhausted == 0; }
    std::string verdict() const;
};

/// Instantiates at `bound`, enumerates both composition kinds (right
/// multiplication only in L-algebra mode) and reduces each against the
/// full schema rule set.
GsbReport check_gsb(const Theory& th, std::uint32_t bound, std::uint32_t v_bound, std::uint64_t fuel);

struct CompletionStep {
    std::string rule_name;
    Polynomial poly;
    /// The composition it resolves.
    CompositionKind kind = CompositionKind::Inclusion;
    Term w = Term::hole();
};

struct CompletionResult {
    Theory theory;
    std::vector<CompletionStep> log;
    bool budget_exceeded = false;
    bool fuel_exhausted = false;
    /// The last check, against the final theory.
    GsbReport final_report;
};

/// Adds the monic normal form of each non-trivial composition as a ground
/// rule of group "completion" until check_gsb passes or more than
/// max_rules rules would be needed. No inter-reduction.
CompletionResult complete(const Theory& th, std::uint32_t bound, std::uint32_t v_bound, std::size_t max_rules,
                          std::uint64_t fuel);

std::string format_instance(const GroundInstance& inst, const Theory& th);

}  // namespace shirshov
