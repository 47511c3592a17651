#include "noisygen/dimension.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

#include "noisygen/error.hpp"

namespace noisygen {

std::optional<std::size_t> DimensionReport::certified_value() const {
  switch (verdict) {
    case DimensionVerdict::Exact:
      return value;
    case DimensionVerdict::NoWitness:
      return 0;
    case DimensionVerdict::AtLeast:
      break;
  }
  return std::nullopt;
}

std::vector<Element> candidate_pool(const Collection& collection, std::size_t depth) {
  if (collection.is_columns()) throw Error("candidate_pool requires an explicit collection");
  ElementSet pool;
  ColumnSet blocks;
  for (const auto& named : collection.languages()) {
    pool.insert(named.language.adds().begin(), named.language.adds().end());
    pool.insert(named.language.removes().begin(), named.language.removes().end());
    blocks.insert(named.language.blocks().begin(), named.language.blocks().end());
  }
  const ElementSet exceptions = pool;

  for (const ColumnIndex c : blocks) {
    std::size_t taken = 0;
    for (std::uint64_t k = 0; taken < depth; ++k) {
      const Element e = Element::at(c, k);
      if (exceptions.contains(e)) continue;
      pool.insert(e);
      ++taken;
    }
  }

  const auto in_some_language = [&](Element e) {
    for (const auto& named : collection.languages()) {
      if (named.language.contains(e)) return true;
    }
    return false;
  };
  std::size_t outside = 0;
  for (std::uint64_t id = 0; outside < depth; ++id) {
    const Element e = Element::from_id(id);
    if (pool.contains(e) || in_some_language(e)) continue;
    pool.insert(e);
    ++outside;
  }
  return {pool.begin(), pool.end()};
}

namespace {

using Mask = std::uint32_t;
constexpr std::size_t kMaxLanguages = 16;

// Qualification of S depends only on how many of its elements carry each
// membership pattern (the set of languages containing the element), and it is
// closed under removing elements. S qualifies iff some nonempty family F of
// languages with finite intersection has every member missing at most `level`
// elements of S. The search below maximizes |S| over count vectors.
class PatternSearch {
 public:
  PatternSearch(const Collection& collection, NoiseLevel level, const std::vector<Element>& pool)
      : level_(level), languages_(collection.size()) {
    if (languages_ > kMaxLanguages) {
      throw Error("dimension search supports at most 16 languages");
    }
    const auto langs = collection.languages();
    for (const Element e : pool) {
      Mask mask = 0;
      for (std::size_t l = 0; l < languages_; ++l) {
        if (langs[l].language.contains(e)) mask |= Mask{1} << l;
      }
      element_masks_.push_back(mask);
      auto [it, inserted] = pattern_slot_.try_emplace(mask, patterns_.size());
      if (inserted) patterns_.push_back(mask);
    }

    // Families with finite intersection, minus those dominated by a finite subfamily.
    const Mask all = (Mask{1} << languages_) - 1;
    std::vector<std::optional<SetDescriptor>> meet(std::size_t{all} + 1);
    std::vector<bool> finite(std::size_t{all} + 1, false);
    for (Mask family = 1; family <= all; ++family) {
      const auto low = static_cast<std::size_t>(std::countr_zero(family));
      const Mask rest = family & (family - 1);
      const SetDescriptor& language = langs[low].language.as_set();
      meet[family] = rest == 0 ? language : intersect(*meet[rest], language);
      finite[family] = meet[family]->is_finite();
      if (!finite[family]) continue;
      bool dominated = false;
      for (Mask sub = family; sub != 0; sub &= sub - 1) {
        const Mask without = family & ~(sub & -sub);
        if (without != 0 && finite[without]) {
          dominated = true;
          break;
        }
      }
      if (!dominated) families_.push_back(family);
    }
  }

  std::size_t pattern_count() const noexcept { return patterns_.size(); }
  std::size_t slot_of(std::size_t pool_index) const {
    return pattern_slot_.at(element_masks_[pool_index]);
  }

  /// Largest total over count vectors lo <= n <= hi that qualify.
  std::optional<std::size_t> max_total(const std::vector<std::size_t>& lo,
                                       const std::vector<std::size_t>& hi) const {
    std::optional<std::size_t> best;
    for (const Mask family : families_) {
      const auto total = max_for_family(family, lo, hi);
      if (total && (!best || *total > *best)) best = total;
    }
    return best;
  }

 private:
  struct Group {
    Mask missed_by;
    std::size_t lo;
    std::size_t hi;
  };

  std::optional<std::size_t> max_for_family(Mask family, const std::vector<std::size_t>& lo,
                                            const std::vector<std::size_t>& hi) const {
    std::size_t free_total = 0;
    std::map<Mask, Group> grouped;
    for (std::size_t p = 0; p < patterns_.size(); ++p) {
      const Mask missed = family & ~patterns_[p];
      if (missed == 0) {
        free_total += hi[p];
        continue;
      }
      auto& g = grouped.try_emplace(missed, Group{missed, 0, 0}).first->second;
      g.lo += lo[p];
      g.hi += hi[p];
    }
    std::vector<Group> groups;
    for (const auto& [mask, g] : grouped) {
      if (g.hi > 0) groups.push_back(g);
    }
    std::array<std::size_t, kMaxLanguages> budget{};
    for (std::size_t l = 0; l < languages_; ++l) budget[l] = level_;

    std::optional<std::size_t> best;
    search(groups, 0, budget, 0, best);
    if (!best) return std::nullopt;
    return free_total + *best;
  }

  void search(const std::vector<Group>& groups, std::size_t at,
              std::array<std::size_t, kMaxLanguages>& budget, std::size_t total,
              std::optional<std::size_t>& best) const {
    if (at == groups.size()) {
      if (!best || total > *best) best = total;
      return;
    }
    const Group& g = groups[at];
    std::size_t cap = g.hi;
    for (std::size_t l = 0; l < languages_; ++l) {
      if (g.missed_by & (Mask{1} << l)) cap = std::min(cap, budget[l]);
    }
    if (cap < g.lo) return;
    for (std::size_t n = cap + 1; n-- > g.lo;) {
      for (std::size_t l = 0; l < languages_; ++l) {
        if (g.missed_by & (Mask{1} << l)) budget[l] -= n;
      }
      search(groups, at + 1, budget, total + n, best);
      for (std::size_t l = 0; l < languages_; ++l) {
        if (g.missed_by & (Mask{1} << l)) budget[l] += n;
      }
    }
  }

  NoiseLevel level_;
  std::size_t languages_;
  std::vector<Mask> element_masks_;
  std::vector<Mask> patterns_;
  std::map<Mask, std::size_t> pattern_slot_;
  std::vector<Mask> families_;
};

}  // namespace

DimensionReport nc_dimension(const Collection& collection, NoiseLevel level, std::size_t max_size,
                             std::size_t pool_depth) {
  if (collection.is_columns()) throw Error("nc_dimension requires an explicit collection");
  if (pool_depth == 0) throw Error("pool depth must be at least 1");

  DimensionReport report;
  report.searched_pool = candidate_pool(collection, pool_depth);
  report.max_size_searched = max_size;
  const auto& pool = report.searched_pool;

  const PatternSearch search(collection, level, pool);
  std::vector<std::size_t> available(search.pattern_count(), 0);
  for (std::size_t k = 0; k < pool.size(); ++k) ++available[search.slot_of(k)];

  const auto best = search.max_total(std::vector<std::size_t>(available.size(), 0), available);
  if (!best) return report;

  const std::size_t target = std::min(*best, max_size);
  report.verdict = *best > max_size ? DimensionVerdict::AtLeast : DimensionVerdict::Exact;
  report.value = target;

  // Lexicographically smallest witness: take each element in id order when a
  // qualifying completion of the target size still exists.
  std::vector<std::size_t> chosen(available.size(), 0);
  std::vector<std::size_t> remaining = available;
  std::size_t chosen_total = 0;
  for (std::size_t k = 0; k < pool.size() && chosen_total < target; ++k) {
    const std::size_t p = search.slot_of(k);
    std::vector<std::size_t> lo = chosen;
    std::vector<std::size_t> hi(available.size());
    for (std::size_t q = 0; q < hi.size(); ++q) hi[q] = chosen[q] + remaining[q];
    ++lo[p];
    const auto reachable = search.max_total(lo, hi);
    if (reachable && *reachable >= target) {
      ++chosen[p];
      ++chosen_total;
      report.witness.insert(pool[k]);
    }
    --remaining[p];
  }
  return report;
}

DimensionReport nc_dimension_columns(NoiseLevel level, std::size_t max_size) {
  DimensionReport report;
  report.max_size_searched = max_size;
  if (level == 0) {
    report.verdict = DimensionVerdict::Exact;
    report.value = 0;
    return report;
  }
  // `level` hits in each column keep every column out of the closure, so the
  // closure stays empty at any size.
  report.verdict = DimensionVerdict::AtLeast;
  report.value = max_size;
  for (ColumnIndex c = 0; report.witness.size() < max_size; ++c) {
    for (std::uint64_t k = 0; k < level && report.witness.size() < max_size; ++k) {
      report.witness.insert(Element::at(c, k));
    }
  }
  return report;
}

DimensionReport noisy_closure_dimension(const Collection& collection, NoiseLevel level,
                                        std::size_t max_size, std::optional<std::size_t> pool_depth) {
  if (collection.is_columns()) return nc_dimension_columns(level, max_size);
  return nc_dimension(collection, level, max_size, pool_depth.value_or(default_pool_depth(level)));
}

bool qualifies(const Collection& collection, const SampleSet& sample, NoiseLevel level) {
  const auto closure = noisy_closure(collection, sample, level);
  return !closure.is_empty_consistent() && closure.is_finite();
}

std::string to_string(DimensionVerdict verdict) {
  switch (verdict) {
    case DimensionVerdict::Exact:
      return "Exact";
    case DimensionVerdict::AtLeast:
      return "AtLeast";
    case DimensionVerdict::NoWitness:
      return "NoWitness";
  }
  return "?";
}

std::string verdict_line(const DimensionReport& report) {
  if (report.verdict == DimensionVerdict::NoWitness) return "NoWitness";
  return to_string(report.verdict) + " " + std::to_string(report.value);
}

}  // namespace noisygen
