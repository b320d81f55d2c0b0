#include "fca/contrast.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

#include <json.hpp>

#include "fca/errors.hpp"
#include "fca/lattice.hpp"

namespace fca {

LabeledDataset make_labeled_dataset(TraitCsv csv, std::string_view positive_value) {
  if (csv.labels.size() != csv.table.object_ids.size())
    throw std::invalid_argument("dataset has no label column");
  LabeledDataset ds;
  ds.labels.reserve(csv.labels.size());
  for (const auto& raw : csv.labels)
    ds.labels.push_back(raw == positive_value ? ClassLabel::positive : ClassLabel::negative);
  ds.table = std::move(csv.table);
  return ds;
}

std::pair<FormalContext, FormalContext> split_by_label(const LabeledDataset& dataset,
                                                       const BinarizationSchema& schema) {
  if (dataset.labels.size() != dataset.table.object_ids.size())
    throw std::invalid_argument("every object needs a label");
  const FormalContext full = apply_schema(dataset.table, schema);

  std::vector<std::string> pos_names, neg_names;
  std::vector<AttributeSet> pos_rows, neg_rows;
  for (std::size_t i = 0; i < dataset.labels.size(); ++i) {
    if (dataset.labels[i] == ClassLabel::positive) {
      pos_names.push_back(full.object_names()[i]);
      pos_rows.push_back(full.row(i));
    } else {
      neg_names.push_back(full.object_names()[i]);
      neg_rows.push_back(full.row(i));
    }
  }
  if (pos_names.empty()) throw std::invalid_argument("empty positive class");
  if (neg_names.empty()) throw std::invalid_argument("empty negative class");

  auto attribute_names = full.attribute_names();
  return {FormalContext::from_rows(std::move(pos_names), attribute_names, std::move(pos_rows)),
          FormalContext::from_rows(std::move(neg_names), std::move(attribute_names),
                                   std::move(neg_rows))};
}

std::vector<Concept> contrast_reduce(std::span<const Concept> positive,
                                     std::span<const Concept> negative) {
  std::unordered_set<AttributeSet, IndexSetHash<AttributeTag>> negative_intents;
  for (const Concept& c : negative) {
    if (!positive.empty() && c.intent.dimension() != positive.front().intent.dimension())
      throw std::invalid_argument("positive and negative concepts use different attribute sets");
    negative_intents.insert(c.intent);
  }
  std::vector<Concept> kept;
  for (const Concept& c : positive)
    if (!negative_intents.contains(c.intent)) kept.push_back(c);
  return kept;
}

double coverage_percent(const FormalContext& ctx, std::span<const Concept> concepts) {
  if (ctx.object_count() == 0)
    throw std::invalid_argument("coverage undefined for an empty context");
  ObjectSet covered = ctx.empty_objects();
  for (const Concept& c : concepts) {
    if (c.extent.dimension() != ctx.object_count())
      throw std::invalid_argument("concept does not belong to this context");
    covered.unite_with(c.extent);
  }
  return 100.0 * static_cast<double>(covered.count()) / static_cast<double>(ctx.object_count());
}

bool is_missing_data_concept(const FormalContext& ctx, const Concept& c) {
  if (c.intent.dimension() != ctx.attribute_count())
    throw std::invalid_argument("concept does not belong to this context");
  bool found = false;
  c.intent.for_each([&](std::size_t j) {
    const std::string& name = ctx.attribute_names()[j];
    if (name.size() >= 4 && name.compare(name.size() - 4, 4, "=NAN") == 0) found = true;
  });
  return found;
}

namespace {

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const CapacityError&) {
    throw;  // keeps its type so callers can map it to the capacity exit code
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

}  // namespace

ContrastReport run_pipeline(const LabeledDataset& dataset, double min_support,
                            const MiningOptions& mining) {
  if (!(min_support >= 0.0 && min_support <= 100.0))
    throw std::invalid_argument("min_support must lie in [0, 100]");

  ContrastReport report;
  report.iceberg_threshold = min_support;
  report.schema = stage("infer-schema", [&] { return infer_schema(dataset.table); });

  auto [positive_ctx, negative_ctx] =
      stage("split", [&] { return split_by_label(dataset, report.schema); });

  // The two minings are independent; MiningOptions already parallelizes
  // inside each call, which covers the available cores.
  std::vector<Concept> positive =
      stage("mine-positive", [&] { return enumerate_concepts(positive_ctx, mining); });
  std::vector<Concept> negative =
      stage("mine-negative", [&] { return enumerate_concepts(negative_ctx, mining); });
  report.positive_concept_count = positive.size();
  report.negative_concept_count = negative.size();

  report.reduced = stage("contrast-reduce", [&] { return contrast_reduce(positive, negative); });
  report.removed_count = positive.size() - report.reduced.size();

  report.iceberg = stage("iceberg", [&] { return iceberg(report.reduced, min_support); });

  std::vector<Concept> missing_subset;
  for (const Concept& c : report.iceberg) {
    const bool missing = is_missing_data_concept(positive_ctx, c);
    report.iceberg_missing_data.push_back(missing);
    if (missing) missing_subset.push_back(c);
  }
  report.iceberg_coverage_percent =
      stage("coverage", [&] { return coverage_percent(positive_ctx, report.iceberg); });
  report.missing_data_coverage_percent =
      stage("coverage", [&] { return coverage_percent(positive_ctx, missing_subset); });

  report.positive_context = std::move(positive_ctx);
  return report;
}

namespace {

nlohmann::json concept_json(const FormalContext& ctx, const Concept& c) {
  nlohmann::json j;
  auto& extent = j["extent"] = nlohmann::json::array();
  c.extent.for_each([&](std::size_t i) { extent.push_back(ctx.object_names()[i]); });
  auto& intent = j["intent"] = nlohmann::json::array();
  c.intent.for_each([&](std::size_t i) { intent.push_back(ctx.attribute_names()[i]); });
  j["support"] = c.support_percent;
  return j;
}

}  // namespace

std::string report_to_json(const ContrastReport& report, const Provenance& provenance) {
  nlohmann::json j;
  j["positive_concept_count"] = report.positive_concept_count;
  j["negative_concept_count"] = report.negative_concept_count;
  j["removed_count"] = report.removed_count;
  j["reduced_concept_count"] = report.reduced.size();
  j["iceberg_threshold"] = report.iceberg_threshold;

  auto& reduced = j["reduced_concepts"] = nlohmann::json::array();
  for (const Concept& c : report.reduced)
    reduced.push_back(concept_json(report.positive_context, c));

  auto& ice = j["iceberg_concepts"] = nlohmann::json::array();
  for (std::size_t i = 0; i < report.iceberg.size(); ++i) {
    nlohmann::json entry = concept_json(report.positive_context, report.iceberg[i]);
    entry["is_missing_data"] = static_cast<bool>(report.iceberg_missing_data[i]);
    ice.push_back(std::move(entry));
  }

  j["iceberg_coverage_percent"] = report.iceberg_coverage_percent;
  j["missing_data_coverage_percent"] = report.missing_data_coverage_percent;

  j["provenance"] = {
      {"input_sha256", provenance.input_sha256},
      {"tool_version", provenance.tool_version},
      {"min_support", report.iceberg_threshold},
      {"schema", nlohmann::json::parse(schema_to_json(report.schema))},
  };
  return j.dump(2) + "\n";
}

}  // namespace fca
