#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "jrl/algebra.hpp"

namespace jrl {

// Line-oriented text formats, 0-based indices, `#` starts a comment:
//
//   ring <name> <order>          group <name> <order>
//   zero <i>                     identity <i>
//   one <i>                      mul
//   add                          <order rows of order indices>
//   <order rows of order indices>
//   mul
//   <order rows of order indices>
//
// Parsed tables are then run through validate_ring / validate_group, so
// callers see either ParseError (with line) or the validation error kind.

FiniteRing parse_ring_text(std::string_view text);
FiniteGroup parse_group_text(std::string_view text);
FiniteRing parse_ring_file(const std::filesystem::path& path);
FiniteGroup parse_group_file(const std::filesystem::path& path);

/// Either structure, dispatched on the header keyword.
std::variant<FiniteRing, FiniteGroup> parse_structure_file(const std::filesystem::path& path);

std::string emit_ring_text(const FiniteRing& ring);
std::string emit_group_text(const FiniteGroup& group);

}  // namespace jrl
