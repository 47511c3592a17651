#include "noisygen/closure.hpp"

#include <algorithm>

#include "noisygen/error.hpp"

namespace noisygen {

std::size_t misses(const SetDescriptor& language, const SampleSet& sample) {
  return static_cast<std::size_t>(
      std::count_if(sample.begin(), sample.end(), [&](Element e) { return !language.contains(e); }));
}

ColumnConsistency::ColumnConsistency(const SampleSet& sample, NoiseLevel level)
    : total_(sample.size()), level_(level) {
  for (const Element e : sample) ++hits_[e.column()];
}

bool ColumnConsistency::admits(const ColumnSet& union_columns) const {
  if (union_columns.empty()) return false;
  std::size_t outside = 0;
  for (const auto& [column, count] : hits_) {
    if (!union_columns.contains(column)) outside += count;
  }
  return outside <= level_;
}

std::vector<std::size_t> consistent_indices(const Collection& collection, const SampleSet& sample,
                                            NoiseLevel level) {
  if (collection.is_columns()) throw Error("consistent_indices requires an explicit collection");
  std::vector<std::size_t> out;
  const auto languages = collection.languages();
  for (std::size_t i = 0; i < languages.size(); ++i) {
    if (misses(languages[i].language, sample) <= level) out.push_back(i);
  }
  return out;
}

ConsistentSet consistent_set(const Collection& collection, const SampleSet& sample, NoiseLevel level) {
  if (collection.is_columns()) return ColumnConsistency(sample, level);
  return consistent_indices(collection, sample, level);
}

bool consistent_subset(const Collection& collection, const SampleSet& a, NoiseLevel level_a,
                       const SampleSet& b, NoiseLevel level_b) {
  if (!collection.is_columns()) {
    const auto lhs = consistent_indices(collection, a, level_a);
    const auto rhs = consistent_indices(collection, b, level_b);
    return std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
  }

  // Consistency of a union only depends on which touched columns it holds,
  // and an untouched column can always be added to keep it nonempty.
  ColumnSet touched;
  for (const Element e : a) touched.insert(e.column());
  for (const Element e : b) touched.insert(e.column());
  const std::vector<ColumnIndex> columns(touched.begin(), touched.end());
  if (columns.size() > 24) throw Error("consistent_subset: too many touched columns");

  ColumnIndex spare = 0;
  while (touched.contains(spare)) ++spare;

  const ColumnConsistency ca(a, level_a);
  const ColumnConsistency cb(b, level_b);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << columns.size()); ++mask) {
    ColumnSet x{spare};
    for (std::size_t bit = 0; bit < columns.size(); ++bit) {
      if (mask & (std::uint64_t{1} << bit)) x.insert(columns[bit]);
    }
    if (ca.admits(x) && !cb.admits(x)) return false;
  }
  return true;
}

ClosureResult column_closure(const SampleSet& sample, NoiseLevel level) {
  const ColumnConsistency consistency(sample, level);
  ColumnSet blocks;
  for (const auto& [column, count] : consistency.hits()) {
    if (count >= level + 1) blocks.insert(column);
  }
  return ClosureResult::of(SetDescriptor::symbolic(std::move(blocks), {}, {}));
}

ClosureResult noisy_closure(const Collection& collection, const SampleSet& sample, NoiseLevel level) {
  if (collection.is_columns()) return column_closure(sample, level);

  const auto consistent = consistent_indices(collection, sample, level);
  if (consistent.empty()) return ClosureResult::empty_consistent();
  const auto languages = collection.languages();
  SetDescriptor acc = languages[consistent.front()].language.as_set();
  for (std::size_t k = 1; k < consistent.size(); ++k) {
    acc = intersect(acc, languages[consistent[k]].language.as_set());
  }
  return ClosureResult::of(std::move(acc));
}

SampleSet saturate(const Collection& collection, const SampleSet& sample, NoiseLevel level) {
  const auto closure = noisy_closure(collection, sample, level);
  if (!closure.is_finite()) throw Error("saturation requires finite closure");
  SampleSet out = sample;
  out.insert(closure.set().adds().begin(), closure.set().adds().end());
  return out;
}

}  // namespace noisygen
