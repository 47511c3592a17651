#pragma once

// Seeded random instances for the property suites.

#include <cstddef>
#include <random>
#include <string>

#include "noisygen/closure.hpp"

namespace noisygen::instances {

struct Limits {
  std::size_t max_languages = 4;
  std::size_t max_blocks = 3;
  std::size_t max_exceptions = 6;
  ColumnIndex block_columns = 5;      // blocks drawn from columns 0..4
  ColumnIndex exception_columns = 6;  // exceptions drawn from columns 0..5
  std::uint64_t exception_rows = 5;   // and rows 0..4
};

/// A small limit set for exhaustive cross-checks against the window oracle.
inline Limits tiny_limits() { return Limits{2, 2, 3, 3, 4, 3}; }

SymbolicLanguage random_language(std::mt19937_64& rng, const Limits& limits);

/// Between 1 and max_languages languages with distinct denotations, named L1, L2, ...
Collection random_collection(std::mt19937_64& rng, const Limits& limits, std::string name);

/// Up to `max_size` distinct elements from columns [0, columns) and rows [0, rows).
SampleSet random_sample(std::mt19937_64& rng, std::size_t max_size, ColumnIndex columns,
                        std::uint64_t rows);

/// Uniform in [lo, hi].
std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi);

}  // namespace noisygen::instances
