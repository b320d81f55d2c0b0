#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fca/context.hpp"
#include "fca/mining.hpp"

namespace fca {

/// A covering pair of the Hasse diagram: `parent` is the immediately more
/// general concept above `child`.
struct CoverEdge {
  std::size_t child;
  std::size_t parent;

  friend bool operator==(const CoverEdge&, const CoverEdge&) = default;
};

/// Concept set indexed in canonical order together with the transitive
/// reduction of its order relation. Immutable once built.
struct ConceptLattice {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::vector<Concept> concepts;
  std::vector<CoverEdge> covers;  // sorted by (child, parent)
  std::size_t top_index = npos;
  std::size_t bottom_index = npos;  // npos when a filtered subset has no unique minimum
};

/// c1 is at most as general as c2: extent(c1) subset of extent(c2),
/// equivalently intent(c1) superset of intent(c2).
bool order_leq(const Concept& c1, const Concept& c2);

/// Builds the lattice of a complete concept set. Validates the input: every
/// element must be a distinct formal concept of `ctx`, the attribute concepts
/// and the top must be present, and pairwise meets must stay inside the set;
/// throws std::invalid_argument when the set is incomplete or duplicated.
ConceptLattice build_lattice(const FormalContext& ctx, std::vector<Concept> concepts);

/// Cover diagram of the order restricted to an arbitrary concept subset
/// (e.g. an iceberg selection). No completeness validation; bottom_index is
/// npos when the subset has no unique minimum.
ConceptLattice build_cover_diagram(const FormalContext& ctx, std::vector<Concept> concepts);

/// Largest concept below every element: (intersection of extents, closure of
/// the union of intents). Throws on an empty collection.
Concept meet(const FormalContext& ctx, std::span<const Concept> cs);

/// Smallest concept above every element: (closure of the union of extents,
/// intersection of intents). Throws on an empty collection.
Concept join(const FormalContext& ctx, std::span<const Concept> cs);

/// Concepts with support >= min_support (inclusive), canonical order
/// preserved. min_support must lie in [0, 100]. The comparison is evaluated
/// as 100*|extent| >= min_support*|U| to keep integer-derived thresholds
/// exact.
std::vector<Concept> iceberg(std::span<const Concept> concepts, double min_support);

struct DotOptions {
  bool show_support = true;
  std::string graph_name = "lattice";
};

/// Deterministic DOT rendering: one node per concept labeled with its intent
/// (and support), edges from the more specific to the more general concept,
/// rankdir=BT so generic concepts sit above specific ones.
std::string export_dot(const FormalContext& ctx, const ConceptLattice& lattice,
                       const DotOptions& options = {});

}  // namespace fca
