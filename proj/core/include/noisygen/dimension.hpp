#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "noisygen/closure.hpp"

namespace noisygen {

enum class DimensionVerdict { Exact, AtLeast, NoWitness };

/// Outcome of a noisy-closure-dimension search.
///
/// Exact(n): a qualifying set of size n exists in the pool and none of size
/// n+1 does. AtLeast(b): a qualifying set of size b (the budget) exists and
/// larger ones were not ruled out. NoWitness: not even the empty set
/// qualifies. A set S qualifies when C(S,i) is nonempty and its closure is
/// finite.
struct DimensionReport {
  DimensionVerdict verdict = DimensionVerdict::NoWitness;
  std::size_t value = 0;
  SampleSet witness;
  std::vector<Element> searched_pool;
  std::size_t max_size_searched = 0;

  /// Settle time used by the closure generator: the value, or 0 for NoWitness.
  std::optional<std::size_t> certified_value() const;
};

/// Candidate elements for an explicit collection: every exception of every
/// language, the `depth` smallest non-exception elements of each block, and
/// the `depth` smallest elements lying in no language. Ascending by id.
std::vector<Element> candidate_pool(const Collection& collection, std::size_t depth);

/// NC_i of an explicit collection, searched over candidate_pool(depth).
/// The witness is the lexicographically smallest qualifying set (by id) of
/// the reported size.
DimensionReport nc_dimension(const Collection& collection, NoiseLevel level, std::size_t max_size,
                             std::size_t pool_depth);

/// NC_i of the column family: Exact(0) at level 0, AtLeast(max_size) above.
DimensionReport nc_dimension_columns(NoiseLevel level, std::size_t max_size);

inline constexpr std::size_t kDefaultDimensionBudget = 12;
inline std::size_t default_pool_depth(NoiseLevel level) { return level + 2; }

/// Dispatches on the collection kind; pool depth defaults to level + 2.
DimensionReport noisy_closure_dimension(const Collection& collection, NoiseLevel level,
                                        std::size_t max_size = kDefaultDimensionBudget,
                                        std::optional<std::size_t> pool_depth = std::nullopt);

/// Whether S qualifies: C(S,i) nonempty and the closure finite.
bool qualifies(const Collection& collection, const SampleSet& sample, NoiseLevel level);

std::string to_string(DimensionVerdict verdict);

/// "Exact 4", "AtLeast 20", "NoWitness".
std::string verdict_line(const DimensionReport& report);

}  // namespace noisygen
