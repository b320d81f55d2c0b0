#pragma once

#include <cstdint>

#include "fca/context.hpp"

namespace fca {

/// Seeded random context for benchmarks and property tests. Objects are
/// named "o1".."oN", attributes "a1".."aM"; each cell is incident with
/// probability `density`. Identical (seed, shape, density) always produce
/// the identical context: mt19937_64 with an explicit uniform-double mapping,
/// independent of standard-library distribution implementations.
FormalContext random_context(std::size_t objects, std::size_t attributes, double density,
                             std::uint64_t seed);

}  // namespace fca
