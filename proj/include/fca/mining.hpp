#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "fca/context.hpp"

namespace fca {

/// A formal concept: a pair (extent, intent) with extent* = intent and
/// intent* = extent. Support is cached at construction as a percentage of
/// the context's object count.
struct Concept {
  ObjectSet extent;
  AttributeSet intent;
  double support_percent = 0.0;

  friend bool operator==(const Concept& a, const Concept& b) {
    return a.extent == b.extent && a.intent == b.intent;
  }
};

/// Canonical concept order: shortlex on the intent index sequence (fewer
/// attributes first, ties broken lexicographically). Puts the top concept
/// first and the bottom concept last.
inline bool concept_less(const Concept& a, const Concept& b) {
  return a.intent.shortlex_less(b.intent);
}

struct MiningOptions {
  /// Worker threads for the closed-set search. 0 = one per hardware thread.
  unsigned threads = 0;
  /// Abort with CapacityError when the concept count exceeds this limit.
  std::size_t max_concepts = std::numeric_limits<std::size_t>::max();
};

/// Enumerates all formal concepts of the context in canonical order using a
/// closed-set traversal with a canonicity test (no powerset materialization).
/// Deterministic for a given context regardless of thread count.
std::vector<Concept> enumerate_concepts(const FormalContext& ctx, const MiningOptions& options = {});

/// Verification oracle: closes every attribute subset and keeps the
/// fixpoints. Requires attribute_count <= 25. Same canonical order as
/// enumerate_concepts.
std::vector<Concept> brute_force_concepts(const FormalContext& ctx);

/// |extent| / |objects| * 100. Throws std::invalid_argument for an empty
/// context or a concept of mismatched dimensions.
double support_percent(const FormalContext& ctx, const Concept& c);

/// Builds a concept with the given extent/intent and cached support.
Concept make_concept(const FormalContext& ctx, ObjectSet extent, AttributeSet intent);

/// One JSON object per line: {"extent": [names...], "intent": [names...],
/// "support": percent}. Names in index order.
void write_concepts_jsonl(const FormalContext& ctx, std::span<const Concept> concepts,
                          std::ostream& out);

std::string concept_to_json_line(const FormalContext& ctx, const Concept& c);

}  // namespace fca
