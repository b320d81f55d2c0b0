#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fca/bitset.hpp"

namespace fca {

/// A formal context: objects, attributes, and a binary incidence relation.
/// The incidence is stored both row-wise (one attribute set per object) and
/// column-wise (one object set per attribute) so that derivations in either
/// direction run on contiguous bit vectors. Immutable after construction.
class FormalContext {
 public:
  FormalContext() = default;

  /// Builds a context from per-object attribute rows. Validates that names
  /// are pairwise distinct and that every row has one bit slot per attribute.
  /// Throws std::invalid_argument on violation.
  static FormalContext from_rows(std::vector<std::string> object_names,
                                 std::vector<std::string> attribute_names,
                                 std::vector<AttributeSet> rows);

  std::size_t object_count() const { return object_names_.size(); }
  std::size_t attribute_count() const { return attribute_names_.size(); }

  const std::vector<std::string>& object_names() const { return object_names_; }
  const std::vector<std::string>& attribute_names() const { return attribute_names_; }

  const AttributeSet& row(std::size_t object) const { return rows_[object]; }
  const ObjectSet& column(std::size_t attribute) const { return cols_[attribute]; }

  bool incident(std::size_t object, std::size_t attribute) const {
    return rows_[object].test(attribute);
  }

  std::size_t incidence_count() const;

  ObjectSet empty_objects() const { return ObjectSet::empty(object_count()); }
  ObjectSet full_objects() const { return ObjectSet::full(object_count()); }
  AttributeSet empty_attributes() const { return AttributeSet::empty(attribute_count()); }
  AttributeSet full_attributes() const { return AttributeSet::full(attribute_count()); }

  /// A* — the attributes shared by every object in A. The empty object set
  /// derives to the full attribute set.
  AttributeSet derive(const ObjectSet& objects) const;

  /// B* — the objects that have every attribute in B. The empty attribute
  /// set derives to the full object set.
  ObjectSet derive(const AttributeSet& attributes) const;

  /// B** — the smallest closed attribute set containing B.
  AttributeSet close(const AttributeSet& attributes) const;

  /// A** — the smallest closed object set containing A.
  ObjectSet close(const ObjectSet& objects) const;

  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.object_names_ == b.object_names_ &&
           a.attribute_names_ == b.attribute_names_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<std::string> object_names_;
  std::vector<std::string> attribute_names_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> cols_;
};

}  // namespace fca
