#include "fca/generate.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace fca {

FormalContext random_context(std::size_t objects, std::size_t attributes, double density,
                             std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0))
    throw std::invalid_argument("density must lie in [0, 1]");

  std::mt19937_64 rng(seed);
  const auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1) with 53 bits
  };

  std::vector<std::string> object_names, attribute_names;
  object_names.reserve(objects);
  attribute_names.reserve(attributes);
  for (std::size_t i = 0; i < objects; ++i) object_names.push_back("o" + std::to_string(i + 1));
  for (std::size_t j = 0; j < attributes; ++j)
    attribute_names.push_back("a" + std::to_string(j + 1));

  std::vector<AttributeSet> rows;
  rows.reserve(objects);
  for (std::size_t i = 0; i < objects; ++i) {
    AttributeSet row = AttributeSet::empty(attributes);
    for (std::size_t j = 0; j < attributes; ++j)
      if (uniform() < density) row.set(j);
    rows.push_back(std::move(row));
  }
  return FormalContext::from_rows(std::move(object_names), std::move(attribute_names),
                                  std::move(rows));
}

}  // namespace fca
