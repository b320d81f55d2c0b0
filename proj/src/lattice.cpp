#include "fca/lattice.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "fca/bitset.hpp"

namespace fca {

namespace {

void require_same_context(const FormalContext& ctx, const Concept& c) {
  if (c.extent.dimension() != ctx.object_count() ||
      c.intent.dimension() != ctx.attribute_count())
    throw std::invalid_argument("concept does not belong to this context");
}

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

bool order_leq(const Concept& c1, const Concept& c2) {
  if (c1.extent.dimension() != c2.extent.dimension() ||
      c1.intent.dimension() != c2.intent.dimension())
    throw std::invalid_argument("concepts come from different contexts");
  const bool by_extent = c1.extent.is_subset_of(c2.extent);
  const bool by_intent = c2.intent.is_subset_of(c1.intent);
  if (by_extent != by_intent)
    throw std::invalid_argument("extent and intent orders disagree; concepts come from different contexts");
  return by_extent;
}

ConceptLattice build_cover_diagram(const FormalContext& ctx, std::vector<Concept> concepts) {
  for (const Concept& c : concepts) require_same_context(ctx, c);
  std::sort(concepts.begin(), concepts.end(), concept_less);

  const std::size_t n = concepts.size();
  std::vector<Bitset> strict_up(n, Bitset(n));
  std::vector<Bitset> strict_down(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (concepts[i].extent.is_subset_of(concepts[j].extent)) {
        strict_up[i].set(j);
        strict_down[j].set(i);
      }
    }
  }

  ConceptLattice lattice;
  lattice.covers.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    strict_up[i].for_each([&](std::size_t j) {
      if (!strict_up[i].intersects(strict_down[j]))
        lattice.covers.push_back(CoverEdge{i, j});
    });
  }

  std::size_t maximal = ConceptLattice::npos, minimal = ConceptLattice::npos;
  std::size_t maximal_count = 0, minimal_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (strict_up[i].none()) {
      maximal = i;
      ++maximal_count;
    }
    if (strict_down[i].none()) {
      minimal = i;
      ++minimal_count;
    }
  }
  lattice.top_index = maximal_count == 1 ? maximal : ConceptLattice::npos;
  lattice.bottom_index = minimal_count == 1 ? minimal : ConceptLattice::npos;
  lattice.concepts = std::move(concepts);
  return lattice;
}

ConceptLattice build_lattice(const FormalContext& ctx, std::vector<Concept> concepts) {
  if (concepts.empty())
    throw std::invalid_argument("incomplete concept set: a context always has at least one concept");

  std::unordered_set<AttributeSet, IndexSetHash<AttributeTag>> intents;
  std::unordered_set<ObjectSet, IndexSetHash<ObjectTag>> extents;
  for (const Concept& c : concepts) {
    require_same_context(ctx, c);
    if (!(ctx.derive(c.extent) == c.intent) || !(ctx.derive(c.intent) == c.extent))
      throw std::invalid_argument("element is not a formal concept of this context");
    if (!intents.insert(c.intent).second)
      throw std::invalid_argument("duplicated concept set");
    extents.insert(c.extent);
  }

  // Completeness: the top and every attribute concept must be present, and
  // pairwise meets must not leave the set. Every concept is a meet of
  // attribute concepts, so together these imply the set is all of B(K).
  if (!extents.contains(ctx.full_objects()))
    throw std::invalid_argument("incomplete concept set: top concept missing");
  for (std::size_t j = 0; j < ctx.attribute_count(); ++j) {
    AttributeSet single = ctx.empty_attributes();
    single.set(j);
    if (!intents.contains(ctx.close(single)))
      throw std::invalid_argument("incomplete concept set: attribute concept missing");
  }
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    for (std::size_t k = i + 1; k < concepts.size(); ++k) {
      ObjectSet common = concepts[i].extent;
      common.intersect_with(concepts[k].extent);
      if (!extents.contains(common))
        throw std::invalid_argument("incomplete concept set: meet closure fails");
    }
  }

  return build_cover_diagram(ctx, std::move(concepts));
}

Concept meet(const FormalContext& ctx, std::span<const Concept> cs) {
  if (cs.empty()) throw std::invalid_argument("meet of an empty concept collection");
  for (const Concept& c : cs) require_same_context(ctx, c);
  ObjectSet extent = cs.front().extent;
  AttributeSet intent_union = cs.front().intent;
  for (std::size_t i = 1; i < cs.size(); ++i) {
    extent.intersect_with(cs[i].extent);
    intent_union.unite_with(cs[i].intent);
  }
  return make_concept(ctx, std::move(extent), ctx.close(intent_union));
}

Concept join(const FormalContext& ctx, std::span<const Concept> cs) {
  if (cs.empty()) throw std::invalid_argument("join of an empty concept collection");
  for (const Concept& c : cs) require_same_context(ctx, c);
  ObjectSet extent_union = cs.front().extent;
  AttributeSet intent = cs.front().intent;
  for (std::size_t i = 1; i < cs.size(); ++i) {
    extent_union.unite_with(cs[i].extent);
    intent.intersect_with(cs[i].intent);
  }
  return make_concept(ctx, ctx.close(extent_union), std::move(intent));
}

std::vector<Concept> iceberg(std::span<const Concept> concepts, double min_support) {
  if (!(min_support >= 0.0 && min_support <= 100.0))
    throw std::invalid_argument("min_support must lie in [0, 100]");
  std::vector<Concept> kept;
  for (const Concept& c : concepts) {
    const double scaled_support = 100.0 * static_cast<double>(c.extent.count());
    if (scaled_support >= min_support * static_cast<double>(c.extent.dimension()))
      kept.push_back(c);
  }
  return kept;
}

std::string export_dot(const FormalContext& ctx, const ConceptLattice& lattice,
                       const DotOptions& options) {
  for (const Concept& c : lattice.concepts) require_same_context(ctx, c);
  std::string out = "digraph \"" + dot_escape(options.graph_name) + "\" {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.concepts.size(); ++i) {
    const Concept& c = lattice.concepts[i];
    std::string label = "{";
    bool first = true;
    c.intent.for_each([&](std::size_t j) {
      if (!first) label += ", ";
      label += dot_escape(ctx.attribute_names()[j]);
      first = false;
    });
    label += "}";
    if (options.show_support) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", c.support_percent);
      label += "\\n";  // DOT line-break escape
      label += buf;
      label += "%";
    }
    out += "  c" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (const CoverEdge& e : lattice.covers)
    out += "  c" + std::to_string(e.child) + " -> c" + std::to_string(e.parent) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace fca
