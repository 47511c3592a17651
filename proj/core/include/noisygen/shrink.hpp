#pragma once

#include <string>

#include "noisygen/closure.hpp"

namespace noisygen {

enum class ShrinkBranch { Direct, Constructed };

struct ShrinkResult {
  ShrinkBranch branch = ShrinkBranch::Direct;
  SampleSet set;
};

/// Turns a qualifying set of size k^2 at level i >= 2 into a set of size at
/// most k that qualifies at level i-1.
///
/// S is split by id order into k consecutive parts of size k. If some part
/// already qualifies at level i-1 the first such part is returned. Otherwise
/// each part contributes the smallest element of its level i-1 closure not
/// already picked, reading an empty consistent family as the whole universe.
/// The constructed set A satisfies C(S,i) <= C(A,1).
///
/// Throws Error when |S| is not a positive perfect square, level < 2, or S
/// does not qualify at `level`.
ShrinkResult shrink_witness(const Collection& collection, NoiseLevel level, const SampleSet& sample);

std::string to_string(ShrinkBranch branch);

}  // namespace noisygen
