#include "noisygen/shrink.hpp"

#include <vector>

#include "noisygen/error.hpp"

namespace noisygen {

namespace {

std::size_t exact_sqrt(std::size_t n) {
  std::size_t k = 0;
  while ((k + 1) * (k + 1) <= n) ++k;
  return k * k == n ? k : 0;
}

}  // namespace

ShrinkResult shrink_witness(const Collection& collection, NoiseLevel level, const SampleSet& sample) {
  if (level < 2) throw Error("shrink_witness requires noise level >= 2");
  const std::size_t k = exact_sqrt(sample.size());
  if (k == 0) throw Error("shrink_witness: |S| = " + std::to_string(sample.size()) +
                          " is not a positive perfect square");

  const auto closure = noisy_closure(collection, sample, level);
  if (closure.is_empty_consistent()) throw Error("shrink_witness: no language is consistent with S");
  if (!closure.is_finite()) throw Error("shrink_witness: closure of S is infinite");

  std::vector<SampleSet> parts(k);
  std::size_t position = 0;
  for (const Element e : sample) parts[position++ / k].insert(e);

  std::vector<ClosureResult> part_closures;
  part_closures.reserve(k);
  for (const auto& part : parts) {
    part_closures.push_back(noisy_closure(collection, part, level - 1));
    const auto& c = part_closures.back();
    if (!c.is_empty_consistent() && c.is_finite()) return {ShrinkBranch::Direct, part};
  }

  // An empty consistent family intersects to the whole universe, so any
  // unpicked element serves for that part.
  SampleSet picked;
  for (const auto& part_closure : part_closures) {
    if (part_closure.is_empty_consistent()) {
      picked.insert(smallest_element_excluding(picked));
      continue;
    }
    const auto x = smallest_member_excluding(part_closure.set(), picked);
    if (!x) throw Error("shrink_witness: infinite closure exhausted");
    picked.insert(*x);
  }
  return {ShrinkBranch::Constructed, std::move(picked)};
}

std::string to_string(ShrinkBranch branch) {
  return branch == ShrinkBranch::Direct ? "direct" : "constructed";
}

}  // namespace noisygen
