#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "shirshov/lalg.hpp"
#include "shirshov/parse.hpp"
#include "shirshov/theory.hpp"

// Theory files are INI-like:
//
//   [signature]              mode = L | free, generators = x, y, ops = >/2, d/1
//   [order]                  kind = weight-L | weight-general, generators = ..., ops = ...
//   [options]                field = Q | Fp(p), family_bound = n, fuel = n
//   [algebra A]              basis = x1, x2, succ[1][2] = 2*x1 - x2, prec[i][j] = ...
//   [builtin]                name = l_identity | dialgebra | free_product | embed_two_gen
//                                   | structure_constants, plus generators/algebra/left/right/extra
//   [rules]                  group = G, then `name: lhs -> rhs where ...` lines
//
// Lines starting with '#' are comments. With a builtin, the signature and
// order come from the builtin and [signature]/[order] must be absent.
namespace shirshov {

struct FileEntry {
    /// Empty for rule lines of [rules].
    std::string key;
    std::string value;
    std::size_t line = 0;
};

struct FileSection {
    std::string kind;
    /// The block name of [algebra NAME].
    std::string name;
    std::vector<FileEntry> entries;
    std::size_t line = 0;
};

struct TheoryFile {
    std::vector<FileSection> sections;

    const FileSection* find(std::string_view kind) const;
    /// Appends rule lines under `group = name` to the [rules] section, creating it if needed.
    void append_rules(const std::string& group, const std::vector<std::string>& lines);
};

/// Splits into sections and entries; structure only, keys are checked by build_theory.
TheoryFile parse_theory_file(std::string_view text);
/// Canonical text: sections in file order, `key = value`, no comments.
std::string write_theory_file(const TheoryFile& file);
/// FNV-1a 64 of the canonical text.
std::uint64_t theory_hash(const TheoryFile& file);
std::string hash_hex(std::uint64_t h);

/// Throws ParseError (with a line number in the message) on malformed
/// input and TheoryError on semantically invalid theories.
Theory build_theory(const TheoryFile& file);
lalg::StructureConstants parse_algebra(const FileSection& section, Field field);

TheoryFile read_theory_file(const std::filesystem::path& path);

}  // namespace shirshov
