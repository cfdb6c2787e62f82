#pragma once

#include <string>

#include "shirshov/gsb.hpp"
#include "shirshov/rewrite.hpp"

namespace shirshov {

/// { theory_hash, bound, v_bound, rules_instantiated, counts, compositions, verdict },
/// compositions holding the non-trivial and fuel-exhausted witnesses.
std::string gsb_report_json(const GsbReport& rep, const Theory& th, const std::string& theory_hash);

/// Human-readable summary: counts, one block per witness, verdict line.
std::string gsb_report_text(const GsbReport& rep, const Theory& th);

std::string format_step(const TraceStep& step, const Theory& th);

}  // namespace shirshov
