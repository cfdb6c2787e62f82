#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shirshov/pattern.hpp"
#include "shirshov/polynomial.hpp"
#include "shirshov/theory.hpp"

namespace shirshov {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    /// An error with no meaningful offset, such as a file-level problem.
    explicit ParseError(const std::string& message);
    /// Zero-based offset into the parsed text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Term grammar:
//   expr    := primary [infix primary]
//   primary := generator | op(expr, ...) | (expr) | $var | * (contexts only)
//            | lchain(infix, expr, $var*) | rchain(infix, $var*, expr)
// An infix operand that is itself infix must be parenthesized; the
// outermost parentheses may be omitted.

Term parse_word(std::string_view text, const Signature& sig);
/// A word with exactly one hole `*`.
Context parse_context(std::string_view text, const Signature& sig);
/// A linear pattern; metavariables get no guards.
Pattern parse_pattern(std::string_view text, const Signature& sig);

/// Parses a pattern tree against a metavariable table. With `declare`
/// set, unseen metavariables are appended and repeats are errors;
/// otherwise every metavariable must already be in the table.
PatternTree parse_pattern_tree(std::string_view text, const Signature& sig, std::vector<MetaVar>& vars,
                               bool declare);

/// `c1 * w1 + c2 * w2 - w3`, with rational literals `p/q`; `0` is zero.
Polynomial parse_polynomial(std::string_view text, const Signature& sig, const Order& order, Field field);
/// A right side over the metavariables of a left side.
std::vector<RhsTerm> parse_rhs(std::string_view text, const Signature& sig, std::vector<MetaVar>& vars, Field field);

/// `name: lhs -> rhs [where guard, ...]`. Guards: irr($u, G1, ...),
/// notgen($u), notin($u, x, ...), nottop($u, op), maxsize($u, n),
/// len($v*) >= n.
Rule parse_rule(std::string_view line, const Signature& sig, Field field, const std::string& group);

}  // namespace shirshov
