#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fca/context.hpp"

namespace fca {

enum class ColumnRole { numeric, latitude, longitude };

std::string_view to_string(ColumnRole role);
ColumnRole role_from_string(std::string_view s);

/// One source column of a trait table; `values` has one slot per object,
/// std::nullopt marking a missing measurement.
struct TraitColumn {
  std::string name;
  ColumnRole role = ColumnRole::numeric;
  std::vector<std::optional<double>> values;
};

struct TraitTable {
  std::vector<std::string> object_ids;
  std::vector<TraitColumn> columns;
};

/// Declares which CSV columns to use and what each one means. Roles are
/// always explicit; nothing is inferred from column names.
struct RoleConfig {
  std::optional<std::string> id_column;     // default: first CSV column
  std::optional<std::string> label_column;  // class label, when present
  std::optional<std::string> positive_value;
  std::vector<std::pair<std::string, ColumnRole>> columns;  // source order
};

/// Reads a role config JSON document:
///   {"id_column": ..., "label_column": ..., "positive_value": ...,
///    "columns": [{"name": ..., "role": "numeric|latitude|longitude"}, ...]}
RoleConfig parse_role_config(std::string_view json_text);
std::string role_config_to_json(const RoleConfig& config);

struct TraitCsv {
  TraitTable table;
  std::vector<std::string> labels;  // raw label cells; empty when no label column
};

/// Parses a trait CSV under a role config. Missing-value tokens: the empty
/// cell, "NA", "NaN", "-999", "-999.0". Throws ParseError for unparseable
/// numeric cells and std::invalid_argument for columns the CSV lacks.
TraitCsv parse_trait_csv(std::string_view text, const RoleConfig& config);

/// Discretization rule for one source column. Numeric columns carry the
/// median threshold; latitude columns the two inner bin edges; longitude
/// columns the east/west split. Thresholds are stored in the schema file so
/// the identical discretization can be reapplied to new data (or edited).
struct ColumnRule {
  std::string column;
  ColumnRole role = ColumnRole::numeric;
  double median = 0.0;
  double lat_edge_south = -30.0;  // [-90, south) ; [south, north) ; [north, 90]
  double lat_edge_north = 30.0;
  double lon_split = -25.0;  // < split -> WEST, >= split -> EAST

  std::vector<std::string> categories() const;
  std::vector<std::string> attribute_names() const;  // "COLUMN=CATEGORY"
};

struct BinarizationSchema {
  std::vector<ColumnRule> columns;

  std::vector<std::string> attribute_names() const;
};

/// Computes per-column rules: medians over non-missing values for numeric
/// columns, fixed geographic bins otherwise. Validates value ranges and
/// rejects all-missing numeric columns.
BinarizationSchema infer_schema(const TraitTable& table);

/// Applies a schema, producing a context whose attributes are the schema's
/// generated columns in source-column order then category order. Every
/// object sets exactly one bit per source column.
FormalContext apply_schema(const TraitTable& table, const BinarizationSchema& schema);

std::string schema_to_json(const BinarizationSchema& schema);
BinarizationSchema schema_from_json(std::string_view json_text);

/// Role config for the fifteen-column rodent trait layout (PanTHERIA-style
/// life-history features plus geographic range latitudes/longitude).
RoleConfig default_rodent_roles();

}  // namespace fca
