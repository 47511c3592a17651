#include "instances.hpp"

#include <algorithm>

#include "noisygen/enumeration.hpp"

namespace noisygen::instances {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(draw_below(rng, hi - lo + 1));
}

SymbolicLanguage random_language(std::mt19937_64& rng, const Limits& limits) {
  ColumnSet blocks;
  const std::size_t n_blocks = uniform(rng, 1, limits.max_blocks);
  while (blocks.size() < std::min<std::size_t>(n_blocks, limits.block_columns)) {
    blocks.insert(draw_below(rng, limits.block_columns));
  }
  ElementSet adds;
  ElementSet removes;
  const std::size_t n_exceptions = uniform(rng, 0, limits.max_exceptions);
  for (std::size_t j = 0; j < n_exceptions; ++j) {
    const Element e =
        Element::at(draw_below(rng, limits.exception_columns), draw_below(rng, limits.exception_rows));
    (blocks.contains(e.column()) ? removes : adds).insert(e);
  }
  return SymbolicLanguage::canonicalize(std::move(blocks), std::move(adds), std::move(removes));
}

Collection random_collection(std::mt19937_64& rng, const Limits& limits, std::string name) {
  const std::size_t target = uniform(rng, 1, limits.max_languages);
  std::vector<NamedLanguage> languages;
  // Duplicate denotations are redrawn a bounded number of times.
  for (std::size_t attempt = 0; languages.size() < target && attempt < 8 * target; ++attempt) {
    SymbolicLanguage candidate = random_language(rng, limits);
    const bool seen = std::any_of(languages.begin(), languages.end(),
                                  [&](const NamedLanguage& l) { return l.language == candidate; });
    if (!seen) {
      languages.push_back({"L" + std::to_string(languages.size() + 1), std::move(candidate)});
    }
  }
  return Collection::explicit_family(std::move(name), std::move(languages));
}

SampleSet random_sample(std::mt19937_64& rng, std::size_t max_size, ColumnIndex columns,
                        std::uint64_t rows) {
  const std::size_t size = std::min<std::size_t>(uniform(rng, 0, max_size), columns * rows);
  SampleSet sample;
  while (sample.size() < size) sample.insert(Element::at(draw_below(rng, columns), draw_below(rng, rows)));
  return sample;
}

}  // namespace noisygen::instances
