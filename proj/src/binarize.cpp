#include "fca/binarize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "fca/csv.hpp"
#include "fca/errors.hpp"

namespace fca {

namespace {

constexpr const char* kNumericCategories[] = {"HIGH", "LOW", "NAN"};
constexpr const char* kLatitudeCategories[] = {"S", "TROPICAL", "N", "NAN"};
constexpr const char* kLongitudeCategories[] = {"WEST", "EAST", "NAN"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_missing_token(std::string_view cell) {
  return cell.empty() || cell == "NA" || cell == "NaN" || cell == "-999" || cell == "-999.0";
}

double parse_number(std::string_view cell, std::size_t line, const std::string& column) {
  // std::from_chars<double> is incomplete in some standard libraries; strtod
  // via a bounded copy keeps this portable.
  std::string buf(cell);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty() || !std::isfinite(v))
    throw ParseError("unparseable numeric cell \"" + buf + "\" in column \"" + column + "\"",
                     line);
  return v;
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace

std::string_view to_string(ColumnRole role) {
  switch (role) {
    case ColumnRole::numeric: return "numeric";
    case ColumnRole::latitude: return "latitude";
    case ColumnRole::longitude: return "longitude";
  }
  return "numeric";
}

ColumnRole role_from_string(std::string_view s) {
  if (s == "numeric") return ColumnRole::numeric;
  if (s == "latitude") return ColumnRole::latitude;
  if (s == "longitude") return ColumnRole::longitude;
  throw std::invalid_argument("unknown column role \"" + std::string(s) + "\"");
}

RoleConfig parse_role_config(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid role config JSON: ") + e.what(), 1);
  }
  RoleConfig config;
  if (j.contains("id_column")) config.id_column = j["id_column"].get<std::string>();
  if (j.contains("label_column")) config.label_column = j["label_column"].get<std::string>();
  if (j.contains("positive_value")) config.positive_value = j["positive_value"].get<std::string>();
  if (!j.contains("columns") || !j["columns"].is_array())
    throw std::invalid_argument("role config must list \"columns\"");
  for (const auto& entry : j["columns"]) {
    config.columns.emplace_back(entry.at("name").get<std::string>(),
                                role_from_string(entry.at("role").get<std::string>()));
  }
  return config;
}

std::string role_config_to_json(const RoleConfig& config) {
  nlohmann::json j;
  if (config.id_column) j["id_column"] = *config.id_column;
  if (config.label_column) j["label_column"] = *config.label_column;
  if (config.positive_value) j["positive_value"] = *config.positive_value;
  auto& columns = j["columns"] = nlohmann::json::array();
  for (const auto& [name, role] : config.columns)
    columns.push_back({{"name", name}, {"role", std::string(to_string(role))}});
  return j.dump(2) + "\n";
}

TraitCsv parse_trait_csv(std::string_view text, const RoleConfig& config) {
  const auto records = parse_csv(text);
  if (records.empty()) throw ParseError("empty document", 1);
  const auto& header = records[0];

  std::unordered_map<std::string_view, std::size_t> column_index;
  for (std::size_t i = 0; i < header.size(); ++i) column_index.emplace(header[i], i);

  const auto locate = [&](const std::string& name) {
    auto it = column_index.find(name);
    if (it == column_index.end())
      throw std::invalid_argument("column \"" + name + "\" not present in CSV header");
    return it->second;
  };

  const std::size_t id_index = config.id_column ? locate(*config.id_column) : 0;
  std::optional<std::size_t> label_index;
  if (config.label_column) label_index = locate(*config.label_column);

  TraitCsv out;
  out.table.columns.reserve(config.columns.size());
  std::vector<std::size_t> source_indices;
  for (const auto& [name, role] : config.columns) {
    source_indices.push_back(locate(name));
    out.table.columns.push_back(TraitColumn{name, role, {}});
  }

  std::unordered_set<std::string> seen_ids;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& record = records[r];
    const std::size_t line = r + 1;
    if (record.size() != header.size())
      throw ParseError("row has " + std::to_string(record.size()) + " cells, expected " +
                           std::to_string(header.size()),
                       line);
    out.table.object_ids.push_back(record[id_index]);
    if (!seen_ids.insert(record[id_index]).second)
      throw ParseError("duplicate object id \"" + record[id_index] + "\"", line);
    if (label_index) out.labels.push_back(record[*label_index]);
    for (std::size_t c = 0; c < source_indices.size(); ++c) {
      const std::string_view cell = trim(record[source_indices[c]]);
      auto& column = out.table.columns[c];
      if (is_missing_token(cell))
        column.values.push_back(std::nullopt);
      else
        column.values.push_back(parse_number(cell, line, column.name));
    }
  }
  return out;
}

std::vector<std::string> ColumnRule::categories() const {
  switch (role) {
    case ColumnRole::numeric:
      return {std::begin(kNumericCategories), std::end(kNumericCategories)};
    case ColumnRole::latitude:
      return {std::begin(kLatitudeCategories), std::end(kLatitudeCategories)};
    case ColumnRole::longitude:
      return {std::begin(kLongitudeCategories), std::end(kLongitudeCategories)};
  }
  return {};
}

std::vector<std::string> ColumnRule::attribute_names() const {
  std::vector<std::string> names;
  for (const auto& category : categories()) names.push_back(column + "=" + category);
  return names;
}

std::vector<std::string> BinarizationSchema::attribute_names() const {
  std::vector<std::string> names;
  for (const auto& rule : columns) {
    auto per_column = rule.attribute_names();
    names.insert(names.end(), per_column.begin(), per_column.end());
  }
  return names;
}

BinarizationSchema infer_schema(const TraitTable& table) {
  BinarizationSchema schema;
  schema.columns.reserve(table.columns.size());
  for (const auto& column : table.columns) {
    if (column.values.size() != table.object_ids.size())
      throw std::invalid_argument("column \"" + column.name + "\" has " +
                                  std::to_string(column.values.size()) + " values for " +
                                  std::to_string(table.object_ids.size()) + " objects");
    ColumnRule rule;
    rule.column = column.name;
    rule.role = column.role;
    std::vector<double> present;
    for (const auto& v : column.values)
      if (v) present.push_back(*v);
    if (present.empty())
      throw std::invalid_argument("column \"" + column.name +
                                  "\" has no non-missing values; it would binarize to NAN only");

    switch (column.role) {
      case ColumnRole::numeric:
        rule.median = median_of(std::move(present));
        break;
      case ColumnRole::latitude:
        for (double v : present)
          if (!(v >= -90.0 && v <= 90.0))
            throw std::invalid_argument("latitude " + std::to_string(v) + " in column \"" +
                                        column.name + "\" outside [-90, 90]");
        break;
      case ColumnRole::longitude:
        for (double v : present)
          if (!(v >= -180.0 && v <= 180.0))
            throw std::invalid_argument("longitude " + std::to_string(v) + " in column \"" +
                                        column.name + "\" outside [-180, 180]");
        break;
    }
    schema.columns.push_back(std::move(rule));
  }
  return schema;
}

namespace {

/// Category slot for a value under a rule; the NAN slot is always last.
std::size_t category_of(const ColumnRule& rule, const std::optional<double>& value,
                        const std::string& object_id) {
  switch (rule.role) {
    case ColumnRole::numeric:
      if (!value) return 2;                     // NAN
      return *value > rule.median ? 0 : 1;      // HIGH : LOW (ties go LOW)
    case ColumnRole::latitude: {
      if (!value) return 3;
      const double v = *value;
      if (!(v >= -90.0 && v <= 90.0))
        throw std::invalid_argument("latitude " + std::to_string(v) + " for object \"" +
                                    object_id + "\" in column \"" + rule.column +
                                    "\" outside [-90, 90]");
      if (v < rule.lat_edge_south) return 0;  // S
      if (v < rule.lat_edge_north) return 1;  // TROPICAL
      return 2;                               // N
    }
    case ColumnRole::longitude: {
      if (!value) return 2;
      const double v = *value;
      if (!(v >= -180.0 && v <= 180.0))
        throw std::invalid_argument("longitude " + std::to_string(v) + " for object \"" +
                                    object_id + "\" in column \"" + rule.column +
                                    "\" outside [-180, 180]");
      return v < rule.lon_split ? 0 : 1;  // WEST : EAST
    }
  }
  return 0;
}

}  // namespace

FormalContext apply_schema(const TraitTable& table, const BinarizationSchema& schema) {
  if (schema.columns.size() != table.columns.size())
    throw std::invalid_argument("schema has " + std::to_string(schema.columns.size()) +
                                " columns, table has " + std::to_string(table.columns.size()));
  for (std::size_t c = 0; c < schema.columns.size(); ++c) {
    if (schema.columns[c].column != table.columns[c].name)
      throw std::invalid_argument("schema column \"" + schema.columns[c].column +
                                  "\" does not match table column \"" + table.columns[c].name +
                                  "\"");
    if (schema.columns[c].role != table.columns[c].role)
      throw std::invalid_argument("role mismatch for column \"" + schema.columns[c].column +
                                  "\"");
    if (table.columns[c].values.size() != table.object_ids.size())
      throw std::invalid_argument("column \"" + table.columns[c].name +
                                  "\" has a value count different from the object count");
  }

  std::vector<std::string> attribute_names = schema.attribute_names();
  std::vector<std::size_t> column_offsets;
  std::size_t offset = 0;
  for (const auto& rule : schema.columns) {
    column_offsets.push_back(offset);
    offset += rule.categories().size();
  }

  const std::size_t n = table.object_ids.size();
  std::vector<AttributeSet> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    AttributeSet row = AttributeSet::empty(attribute_names.size());
    for (std::size_t c = 0; c < schema.columns.size(); ++c) {
      const std::size_t slot =
          category_of(schema.columns[c], table.columns[c].values[i], table.object_ids[i]);
      row.set(column_offsets[c] + slot);
    }
    rows.push_back(std::move(row));
  }
  return FormalContext::from_rows(table.object_ids, std::move(attribute_names), std::move(rows));
}

std::string schema_to_json(const BinarizationSchema& schema) {
  nlohmann::json j;
  auto& columns = j["columns"] = nlohmann::json::array();
  for (const auto& rule : schema.columns) {
    nlohmann::json entry;
    entry["name"] = rule.column;
    entry["role"] = std::string(to_string(rule.role));
    switch (rule.role) {
      case ColumnRole::numeric:
        entry["median"] = rule.median;
        break;
      case ColumnRole::latitude:
        entry["bin_edges"] = {rule.lat_edge_south, rule.lat_edge_north};
        break;
      case ColumnRole::longitude:
        entry["split"] = rule.lon_split;
        break;
    }
    entry["categories"] = rule.categories();
    entry["attributes"] = rule.attribute_names();
    columns.push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

BinarizationSchema schema_from_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid schema JSON: ") + e.what(), 1);
  }
  if (!j.contains("columns") || !j["columns"].is_array())
    throw std::invalid_argument("schema must list \"columns\"");
  BinarizationSchema schema;
  for (const auto& entry : j["columns"]) {
    ColumnRule rule;
    rule.column = entry.at("name").get<std::string>();
    rule.role = role_from_string(entry.at("role").get<std::string>());
    switch (rule.role) {
      case ColumnRole::numeric:
        rule.median = entry.at("median").get<double>();
        break;
      case ColumnRole::latitude:
        rule.lat_edge_south = entry.at("bin_edges").at(0).get<double>();
        rule.lat_edge_north = entry.at("bin_edges").at(1).get<double>();
        break;
      case ColumnRole::longitude:
        rule.lon_split = entry.at("split").get<double>();
        break;
    }
    schema.columns.push_back(std::move(rule));
  }
  return schema;
}

RoleConfig default_rodent_roles() {
  RoleConfig config;
  config.id_column = "MSW05_Binomial";
  config.columns = {
      {"X26.1_GR_Area_km2", ColumnRole::numeric},
      {"X23.1_SexualMaturityAge_d", ColumnRole::numeric},
      {"X27.2_HuPopDen_Mean_n.km2", ColumnRole::numeric},
      {"logNeoBM", ColumnRole::numeric},
      {"X15.1_LitterSize", ColumnRole::numeric},
      {"X5.1_AdultBodyMass_g", ColumnRole::numeric},
      {"X9.1_GestationLen_d", ColumnRole::numeric},
      {"X25.1_WeaningAge_d", ColumnRole::numeric},
      {"X13.1_AdultHeadBodyLen_mm", ColumnRole::numeric},
      {"SpeciesDensity", ColumnRole::numeric},
      {"X30.2_PET_Mean_mm", ColumnRole::numeric},
      {"X26.2_GR_MaxLat_dd", ColumnRole::latitude},
      {"X16.1_LittersPerYear", ColumnRole::numeric},
      {"X26.5_GR_MaxLong_dd", ColumnRole::longitude},
      {"X26.3_GR_MinLat_dd", ColumnRole::latitude},
  };
  return config;
}

}  // namespace fca
