#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fca {

/// Parses RFC-4180 style CSV: comma separated, double-quote quoting with ""
/// escapes, LF or CRLF record ends. Returns one vector of cells per record;
/// a trailing newline does not produce an empty record.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Quotes a cell when it contains a comma, quote, or newline.
std::string csv_escape(std::string_view cell);

}  // namespace fca
