#pragma once

// Shared fixtures for the test suites: the 3x3 worked example used across
// the suites, set-building helpers, and seeded random generators.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>

#include "fca/binarize.hpp"
#include "fca/bitset.hpp"
#include "fca/context.hpp"
#include "fca/context_io.hpp"
#include "fca/contrast.hpp"

namespace fixtures {

// Objects o1,o2,o3; attributes a,b,c; o1 -> {a,b}, o2 -> {b,c}, o3 -> {b}.
inline std::string k1_text() {
  return "B\n\n3\n3\n\no1\no2\no3\na\nb\nc\nXX.\n.XX\n.X.\n";
}

inline fca::FormalContext make_k1() { return fca::parse_cxt(k1_text()); }

inline fca::ObjectSet objects(const fca::FormalContext& ctx,
                              std::initializer_list<std::size_t> indices) {
  fca::ObjectSet s = ctx.empty_objects();
  for (std::size_t i : indices) s.set(i);
  return s;
}

inline fca::AttributeSet attributes(const fca::FormalContext& ctx,
                                    std::initializer_list<std::size_t> indices) {
  fca::AttributeSet s = ctx.empty_attributes();
  for (std::size_t i : indices) s.set(i);
  return s;
}

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename Set>
Set random_subset(std::mt19937_64& rng, const Set& universe_template, double density = 0.5) {
  Set s = universe_template;
  for (std::size_t i = 0; i < s.dimension(); ++i) s.reset(i);
  for (std::size_t i = 0; i < s.dimension(); ++i)
    if (uniform01(rng) < density) s.set(i);
  return s;
}

// A labeled 12-object trait CSV engineered so that, after median
// binarization, the intent {F1=HIGH, F2=HIGH} is a positive-class concept
// whose pattern never occurs among negatives, while {F1=LOW, F3=HIGH} is a
// concept of both classes. Medians: F1 -> 1, F2 -> 5, F3 -> 5, so value 9
// binarizes HIGH and value 1 binarizes LOW everywhere.
inline std::string contrast_csv_text() {
  return "species,label,F1,F2,F3\n"
         "p1,1,9,9,9\n"
         "p2,1,9,9,9\n"
         "p3,1,9,9,1\n"
         "p4,1,9,9,1\n"
         "p5,1,1,1,9\n"
         "p6,1,1,9,9\n"
         "n1,0,1,9,9\n"
         "n2,0,1,1,9\n"
         "n3,0,1,1,1\n"
         "n4,0,1,1,1\n"
         "n5,0,1,1,1\n"
         "n6,0,1,1,1\n";
}

inline fca::RoleConfig contrast_roles() {
  fca::RoleConfig config;
  config.id_column = "species";
  config.label_column = "label";
  config.positive_value = "1";
  config.columns = {{"F1", fca::ColumnRole::numeric},
                    {"F2", fca::ColumnRole::numeric},
                    {"F3", fca::ColumnRole::numeric}};
  return config;
}

inline fca::LabeledDataset contrast_dataset() {
  return fca::make_labeled_dataset(fca::parse_trait_csv(contrast_csv_text(), contrast_roles()),
                                   "1");
}

// Random trait tables for pipeline property tests: a mix of roles, missing
// values sprinkled in, at least one non-missing value per column.
inline fca::TraitTable random_trait_table(std::mt19937_64& rng, std::size_t n_objects,
                                          std::size_t n_columns, double missing_rate) {
  fca::TraitTable table;
  for (std::size_t i = 0; i < n_objects; ++i) table.object_ids.push_back("s" + std::to_string(i));
  for (std::size_t c = 0; c < n_columns; ++c) {
    fca::TraitColumn column;
    column.name = "T" + std::to_string(c);
    const double role_draw = uniform01(rng);
    column.role = role_draw < 0.7   ? fca::ColumnRole::numeric
                  : role_draw < 0.85 ? fca::ColumnRole::latitude
                                     : fca::ColumnRole::longitude;
    for (std::size_t i = 0; i < n_objects; ++i) {
      if (i > 0 && uniform01(rng) < missing_rate) {
        column.values.push_back(std::nullopt);
        continue;
      }
      double v = 0.0;
      switch (column.role) {
        case fca::ColumnRole::numeric: v = uniform01(rng) * 200.0 - 100.0; break;
        case fca::ColumnRole::latitude: v = uniform01(rng) * 180.0 - 90.0; break;
        case fca::ColumnRole::longitude: v = uniform01(rng) * 360.0 - 180.0; break;
      }
      column.values.push_back(v);
    }
    table.columns.push_back(std::move(column));
  }
  return table;
}

}  // namespace fixtures
