#include "fca/context.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace fca {

namespace {

void require_unique(const std::vector<std::string>& names, const char* kind) {
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second)
      throw std::invalid_argument(std::string("duplicate ") + kind + " name: \"" + name + "\"");
  }
}

}  // namespace

FormalContext FormalContext::from_rows(std::vector<std::string> object_names,
                                       std::vector<std::string> attribute_names,
                                       std::vector<AttributeSet> rows) {
  if (rows.size() != object_names.size())
    throw std::invalid_argument("row count does not match object count");
  require_unique(object_names, "object");
  require_unique(attribute_names, "attribute");

  FormalContext ctx;
  ctx.object_names_ = std::move(object_names);
  ctx.attribute_names_ = std::move(attribute_names);

  const std::size_t m = ctx.attribute_names_.size();
  for (const auto& r : rows) {
    if (r.dimension() != m)
      throw std::invalid_argument("row dimension does not match attribute count");
  }
  ctx.rows_ = std::move(rows);

  const std::size_t n = ctx.object_names_.size();
  ctx.cols_.assign(m, ObjectSet::empty(n));
  for (std::size_t i = 0; i < n; ++i)
    ctx.rows_[i].for_each([&](std::size_t j) { ctx.cols_[j].set(i); });
  return ctx;
}

std::size_t FormalContext::incidence_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

AttributeSet FormalContext::derive(const ObjectSet& objects) const {
  if (objects.dimension() != object_count())
    throw std::invalid_argument("object set dimension does not match context");
  AttributeSet common = full_attributes();
  objects.for_each([&](std::size_t i) { common.intersect_with(rows_[i]); });
  return common;
}

ObjectSet FormalContext::derive(const AttributeSet& attributes) const {
  if (attributes.dimension() != attribute_count())
    throw std::invalid_argument("attribute set dimension does not match context");
  ObjectSet common = full_objects();
  attributes.for_each([&](std::size_t j) { common.intersect_with(cols_[j]); });
  return common;
}

AttributeSet FormalContext::close(const AttributeSet& attributes) const {
  return derive(derive(attributes));
}

ObjectSet FormalContext::close(const ObjectSet& objects) const {
  return derive(derive(objects));
}

}  // namespace fca
