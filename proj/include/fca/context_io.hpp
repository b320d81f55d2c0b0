#pragma once

#include <string>
#include <string_view>

#include "fca/context.hpp"

namespace fca {

/// Parses a Burmeister .cxt document:
///   line 1 "B", line 2 blank, line 3 object count, line 4 attribute count,
///   line 5 blank, then object names, attribute names, and one incidence row
///   per object made of 'X' (incident) and '.' characters.
/// Throws ParseError with the offending line number.
FormalContext parse_cxt(std::string_view text);

/// Serializes to the exact .cxt layout above, LF line ends, trailing newline.
/// parse_cxt(write_cxt(ctx)) == ctx.
std::string write_cxt(const FormalContext& ctx);

/// Parses a binary table CSV: header row of attribute names (first cell is a
/// corner label and is ignored), one row per object whose first cell is the
/// object name. Cells accept {0,1} as well as {., X}.
FormalContext parse_context_csv(std::string_view text);

/// CSV form with 0/1 cells and an empty corner cell.
std::string write_context_csv(const FormalContext& ctx);

}  // namespace fca
