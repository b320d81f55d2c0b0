#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fca/binarize.hpp"
#include "fca/context.hpp"
#include "fca/mining.hpp"

namespace fca {

enum class ClassLabel { positive, negative };

/// Trait table plus one immutable class label per object.
struct LabeledDataset {
  TraitTable table;
  std::vector<ClassLabel> labels;
};

/// Maps raw label cells onto classes: a cell equal to `positive_value` is
/// positive, anything else negative. Throws when the CSV carried no labels.
LabeledDataset make_labeled_dataset(TraitCsv csv, std::string_view positive_value);

/// Binarizes the whole table under one shared schema, then partitions the
/// rows by class. Both contexts carry the identical attribute list. Throws
/// std::invalid_argument when either class is empty.
std::pair<FormalContext, FormalContext> split_by_label(const LabeledDataset& dataset,
                                                       const BinarizationSchema& schema);

/// Keeps exactly the positive concepts whose intent does not occur as the
/// intent of any negative concept. Intents are compared across contexts;
/// extents are not comparable and are ignored. Canonical order preserved.
std::vector<Concept> contrast_reduce(std::span<const Concept> positive,
                                     std::span<const Concept> negative);

/// 100 * |union of extents| / |objects|. Throws for an empty context.
double coverage_percent(const FormalContext& ctx, std::span<const Concept> concepts);

/// True when the concept's intent contains an attribute generated from a
/// missing measurement (name ending in "=NAN").
bool is_missing_data_concept(const FormalContext& ctx, const Concept& c);

struct ContrastReport {
  BinarizationSchema schema;
  FormalContext positive_context;
  std::size_t positive_concept_count = 0;
  std::size_t negative_concept_count = 0;
  std::vector<Concept> reduced;  // canonical order
  std::size_t removed_count = 0;
  double iceberg_threshold = 0.0;
  std::vector<Concept> iceberg;             // subset of reduced, order preserved
  std::vector<bool> iceberg_missing_data;   // parallel to iceberg
  double iceberg_coverage_percent = 0.0;    // positive objects covered by the iceberg set
  double missing_data_coverage_percent = 0.0;  // covered by its missing-data subset
};

/// End-to-end positive/negative analysis: schema inference over the full
/// dataset, class split, concept mining of both contexts, intent-level
/// reduction of the positive set, iceberg filtering at `min_support`
/// (relative to the positive context), flags and coverage. Errors from a
/// stage are rethrown as StageError tagged with the stage name; capacity
/// errors propagate unchanged.
ContrastReport run_pipeline(const LabeledDataset& dataset, double min_support,
                            const MiningOptions& mining = {});

struct Provenance {
  std::string input_sha256;
  std::string tool_version;
};

/// Serializes the full report (concepts in the JSONL object form) plus a
/// provenance block. Deterministic for identical inputs.
std::string report_to_json(const ContrastReport& report, const Provenance& provenance);

}  // namespace fca
