#pragma once

// Brute-force references for the closure and dimension operators. They only
// ask languages for membership of individual elements; no symbolic
// intersection is involved. Finiteness of a closure is judged by probing the
// tails (c, 64..71) of columns 0..63: a closure holding such a tail is taken to
// be infinite. Exceptions in desk-scale instances never reach that far.

#include <cstdint>
#include <optional>
#include <vector>

#include "noisygen/closure.hpp"

namespace noisygen::oracle {

inline constexpr ColumnIndex kProbeColumns = 64;
inline constexpr std::uint64_t kProbeRowBegin = 64;
inline constexpr std::uint64_t kProbeRows = 8;

/// Largest |S| over subsets of the window ids [0, max_id] such that some
/// language misses at most `level` elements of S and the intersection of those
/// languages is finite. Exhaustive depth-first search, using only that removing
/// an element never breaks qualification to prune. Stops once `cap` is
/// reached. nullopt when not even the empty set qualifies.
std::optional<std::size_t> window_dimension(const std::vector<SetDescriptor>& languages,
                                            NoiseLevel level, std::uint64_t max_id,
                                            std::size_t cap = 64);

std::vector<SetDescriptor> languages_of(const Collection& collection);

/// Members of the noisy closure among ids [0, max_id], from membership alone.
/// `empty_consistent` is set when no language is consistent.
struct WindowClosure {
  ElementSet members;
  bool empty_consistent = false;
  bool infinite = false;
};

WindowClosure window_closure(const std::vector<SetDescriptor>& languages, const SampleSet& sample,
                             NoiseLevel level, std::uint64_t max_id);

/// The column family restricted to the 2^m - 1 nonempty unions of columns
/// 0..m-1, written out as explicit languages.
std::vector<SetDescriptor> column_unions(std::size_t m);

/// Members of `set` among ids [0, max_id].
ElementSet window_members(const SetDescriptor& set, std::uint64_t max_id);

}  // namespace noisygen::oracle
