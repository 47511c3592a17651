#pragma once

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

#include "noisygen/collection.hpp"

namespace noisygen {

/// A finite observed set S.
using SampleSet = ElementSet;
using NoiseLevel = std::size_t;

/// |S \ L|
std::size_t misses(const SetDescriptor& language, const SampleSet& sample);

/// Consistency for the column family. The union of columns x is consistent
/// with S at level i iff the hits of S outside x number at most i.
class ColumnConsistency {
 public:
  ColumnConsistency(const SampleSet& sample, NoiseLevel level);

  bool admits(const ColumnSet& union_columns) const;

  const std::map<ColumnIndex, std::size_t>& hits() const noexcept { return hits_; }
  NoiseLevel level() const noexcept { return level_; }
  std::size_t total_hits() const noexcept { return total_; }

 private:
  std::map<ColumnIndex, std::size_t> hits_;
  std::size_t total_ = 0;
  NoiseLevel level_ = 0;
};

/// C(S,i): indices into the collection's languages for an explicit
/// collection, or the column predicate for the column family.
using ConsistentSet = std::variant<std::vector<std::size_t>, ColumnConsistency>;

ConsistentSet consistent_set(const Collection& collection, const SampleSet& sample, NoiseLevel level);

/// Explicit collections only.
std::vector<std::size_t> consistent_indices(const Collection& collection, const SampleSet& sample,
                                            NoiseLevel level);

/// Whether C(a, level_a) is a subset of C(b, level_b). For the column family
/// this is decided over all unions restricted to the columns a and b touch.
bool consistent_subset(const Collection& collection, const SampleSet& a, NoiseLevel level_a,
                       const SampleSet& b, NoiseLevel level_b);

class ClosureResult {
 public:
  static ClosureResult empty_consistent() { return ClosureResult(true, {}); }
  static ClosureResult of(SetDescriptor value) { return ClosureResult(false, std::move(value)); }

  /// C(S,i) was empty; the closure is then the empty set.
  bool is_empty_consistent() const noexcept { return empty_consistent_; }

  const SetDescriptor& set() const noexcept { return value_; }
  bool is_finite() const noexcept { return value_.is_finite(); }

  bool operator==(const ClosureResult&) const = default;

 private:
  ClosureResult(bool empty_consistent, SetDescriptor value)
      : empty_consistent_(empty_consistent), value_(std::move(value)) {}

  bool empty_consistent_ = false;
  SetDescriptor value_;
};

/// The noisy closure: intersection of all languages consistent with S at `level`.
ClosureResult noisy_closure(const Collection& collection, const SampleSet& sample, NoiseLevel level);

/// Closed form for the column family: the union of the columns S hits at
/// least level+1 times. Never empty-consistent.
ClosureResult column_closure(const SampleSet& sample, NoiseLevel level);

/// S u closure. Throws Error when the closure is infinite.
SampleSet saturate(const Collection& collection, const SampleSet& sample, NoiseLevel level);

}  // namespace noisygen
