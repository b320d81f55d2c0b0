#include "fca/context_io.hpp"

#include <charconv>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fca/csv.hpp"
#include "fca/errors.hpp"

namespace fca {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = nl + 1;
  }
  return lines;
}

std::size_t parse_count(const std::string& line, std::size_t line_no, const char* what) {
  std::size_t value = 0;
  const char* begin = line.data();
  const char* end = begin + line.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || line.empty())
    throw ParseError(std::string("invalid ") + what + " \"" + line + "\"", line_no);
  return value;
}

const std::string& line_at(const std::vector<std::string>& lines, std::size_t index) {
  if (index >= lines.size()) throw ParseError("truncated input", lines.size() + 1);
  return lines[index];
}

std::vector<std::string> read_names(const std::vector<std::string>& lines, std::size_t first,
                                    std::size_t count, const char* kind) {
  std::vector<std::string> names;
  names.reserve(count);
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < count; ++i) {
    const std::string& name = line_at(lines, first + i);
    if (!seen.insert(name).second)
      throw ParseError(std::string("duplicate ") + kind + " name \"" + name + "\"", first + i + 1);
    names.push_back(name);
  }
  return names;
}

}  // namespace

FormalContext parse_cxt(std::string_view text) {
  const std::vector<std::string> lines = split_lines(text);

  if (line_at(lines, 0) != "B") throw ParseError("expected format header \"B\"", 1);
  if (!line_at(lines, 1).empty()) throw ParseError("expected blank line", 2);
  const std::size_t n_objects = parse_count(line_at(lines, 2), 3, "object count");
  const std::size_t n_attributes = parse_count(line_at(lines, 3), 4, "attribute count");
  if (!line_at(lines, 4).empty()) throw ParseError("expected blank line", 5);

  std::vector<std::string> object_names = read_names(lines, 5, n_objects, "object");
  std::vector<std::string> attribute_names =
      read_names(lines, 5 + n_objects, n_attributes, "attribute");

  std::vector<AttributeSet> rows;
  rows.reserve(n_objects);
  const std::size_t first_row = 5 + n_objects + n_attributes;
  for (std::size_t i = 0; i < n_objects; ++i) {
    const std::size_t line_no = first_row + i + 1;
    const std::string& line = line_at(lines, first_row + i);
    if (line.size() != n_attributes)
      throw ParseError("row has " + std::to_string(line.size()) + " cells, expected " +
                           std::to_string(n_attributes),
                       line_no);
    AttributeSet row = AttributeSet::empty(n_attributes);
    for (std::size_t j = 0; j < n_attributes; ++j) {
      const char c = line[j];
      if (c == 'X')
        row.set(j);
      else if (c != '.')
        throw ParseError(std::string("illegal cell character '") + c + "'", line_no);
    }
    rows.push_back(std::move(row));
  }

  for (std::size_t i = first_row + n_objects; i < lines.size(); ++i) {
    if (!lines[i].empty()) throw ParseError("unexpected trailing content", i + 1);
  }

  return FormalContext::from_rows(std::move(object_names), std::move(attribute_names),
                                  std::move(rows));
}

std::string write_cxt(const FormalContext& ctx) {
  std::string out = "B\n\n";
  out += std::to_string(ctx.object_count());
  out += '\n';
  out += std::to_string(ctx.attribute_count());
  out += "\n\n";
  for (const auto& name : ctx.object_names()) {
    out += name;
    out += '\n';
  }
  for (const auto& name : ctx.attribute_names()) {
    out += name;
    out += '\n';
  }
  for (std::size_t i = 0; i < ctx.object_count(); ++i) {
    for (std::size_t j = 0; j < ctx.attribute_count(); ++j)
      out += ctx.incident(i, j) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

FormalContext parse_context_csv(std::string_view text) {
  const auto records = parse_csv(text);
  if (records.empty()) throw ParseError("empty document", 1);

  const auto& header = records[0];
  if (header.empty()) throw ParseError("empty header row", 1);
  std::vector<std::string> attribute_names(header.begin() + 1, header.end());
  {
    std::unordered_set<std::string_view> seen;
    for (std::size_t j = 0; j < attribute_names.size(); ++j)
      if (!seen.insert(attribute_names[j]).second)
        throw ParseError("duplicate attribute name \"" + attribute_names[j] + "\"", 1);
  }

  const std::size_t m = attribute_names.size();
  std::vector<std::string> object_names;
  std::vector<AttributeSet> rows;
  std::unordered_set<std::string> seen_objects;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& record = records[r];
    const std::size_t line_no = r + 1;
    if (record.size() != m + 1)
      throw ParseError("row has " + std::to_string(record.size()) + " cells, expected " +
                           std::to_string(m + 1),
                       line_no);
    object_names.push_back(record[0]);
    if (!seen_objects.insert(record[0]).second)
      throw ParseError("duplicate object name \"" + record[0] + "\"", line_no);
    AttributeSet row = AttributeSet::empty(m);
    for (std::size_t j = 0; j < m; ++j) {
      const std::string& cell = record[j + 1];
      if (cell == "1" || cell == "X")
        row.set(j);
      else if (cell != "0" && cell != ".")
        throw ParseError("invalid cell \"" + cell + "\" at row \"" + record[0] + "\", column \"" +
                             attribute_names[j] + "\"",
                         line_no);
    }
    rows.push_back(std::move(row));
  }

  return FormalContext::from_rows(std::move(object_names), std::move(attribute_names),
                                  std::move(rows));
}

std::string write_context_csv(const FormalContext& ctx) {
  std::string out;
  for (const auto& name : ctx.attribute_names()) {
    out += ',';
    out += csv_escape(name);
  }
  out += '\n';
  for (std::size_t i = 0; i < ctx.object_count(); ++i) {
    out += csv_escape(ctx.object_names()[i]);
    for (std::size_t j = 0; j < ctx.attribute_count(); ++j)
      out += ctx.incident(i, j) ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

}  // namespace fca
