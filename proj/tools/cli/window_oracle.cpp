#include "window_oracle.hpp"

#include <algorithm>

#include "noisygen/error.hpp"

namespace noisygen::oracle {
namespace {

using Mask = std::uint32_t;
constexpr std::size_t kMaxLanguages = 32;

Mask membership_mask(const std::vector<SetDescriptor>& languages, Element e) {
  Mask mask = 0;
  for (std::size_t l = 0; l < languages.size(); ++l) {
    if (languages[l].contains(e)) mask |= Mask{1} << l;
  }
  return mask;
}

// For each probe column, the languages holding the whole probed tail.
std::vector<Mask> tail_masks(const std::vector<SetDescriptor>& languages) {
  std::vector<Mask> masks;
  for (ColumnIndex c = 0; c < kProbeColumns; ++c) {
    Mask mask = ~Mask{0};
    for (std::uint64_t k = kProbeRowBegin; k < kProbeRowBegin + kProbeRows; ++k) {
      mask &= membership_mask(languages, Element::at(c, k));
    }
    masks.push_back(mask);
  }
  return masks;
}

class Search {
 public:
  Search(const std::vector<SetDescriptor>& languages, NoiseLevel level, std::uint64_t max_id,
         std::size_t cap)
      : level_(level), cap_(cap), tails_(tail_masks(languages)), misses_(languages.size(), 0) {
    all_ = languages.size() == kMaxLanguages ? ~Mask{0} : (Mask{1} << languages.size()) - 1;
    for (std::uint64_t id = 0; id <= max_id; ++id) {
      masks_.push_back(membership_mask(languages, Element::from_id(id)));
    }
  }

  bool qualifies() const {
    Mask consistent = 0;
    for (std::size_t l = 0; l < misses_.size(); ++l) {
      if (misses_[l] <= level_) consistent |= Mask{1} << l;
    }
    if (consistent == 0) return false;
    return std::none_of(tails_.begin(), tails_.end(),
                        [&](Mask tail) { return (tail & consistent) == consistent; });
  }

  void run(std::size_t start, std::size_t size) {
    best_ = std::max(best_, size);
    for (std::size_t e = start; e < masks_.size() && best_ < cap_; ++e) {
      const Mask missed = all_ & ~masks_[e];
      bump(missed, +1);
      if (qualifies()) run(e + 1, size + 1);
      bump(missed, -1);
    }
  }

  std::size_t best() const { return best_; }

 private:
  void bump(Mask missed, int delta) {
    for (std::size_t l = 0; l < misses_.size(); ++l) {
      if (missed & (Mask{1} << l)) misses_[l] = static_cast<std::size_t>(static_cast<long>(misses_[l]) + delta);
    }
  }

  NoiseLevel level_;
  std::size_t cap_;
  std::vector<Mask> tails_;
  std::vector<Mask> masks_;
  std::vector<std::size_t> misses_;
  Mask all_ = 0;
  std::size_t best_ = 0;
};

}  // namespace

std::optional<std::size_t> window_dimension(const std::vector<SetDescriptor>& languages,
                                            NoiseLevel level, std::uint64_t max_id, std::size_t cap) {
  if (languages.empty() || languages.size() > kMaxLanguages) {
    throw Error("window oracle handles 1 to 32 languages");
  }
  Search search(languages, level, max_id, cap);
  if (!search.qualifies()) return std::nullopt;
  search.run(0, 0);
  return search.best();
}

std::vector<SetDescriptor> languages_of(const Collection& collection) {
  std::vector<SetDescriptor> out;
  for (const auto& named : collection.languages()) out.push_back(named.language.as_set());
  return out;
}

WindowClosure window_closure(const std::vector<SetDescriptor>& languages, const SampleSet& sample,
                             NoiseLevel level, std::uint64_t max_id) {
  std::vector<const SetDescriptor*> consistent;
  for (const auto& language : languages) {
    const auto missed = static_cast<std::size_t>(std::count_if(
        sample.begin(), sample.end(), [&](Element e) { return !language.contains(e); }));
    if (missed <= level) consistent.push_back(&language);
  }
  WindowClosure out;
  if (consistent.empty()) {
    out.empty_consistent = true;
    return out;
  }
  const auto in_all = [&](Element e) {
    return std::all_of(consistent.begin(), consistent.end(),
                       [&](const SetDescriptor* l) { return l->contains(e); });
  };
  for (std::uint64_t id = 0; id <= max_id; ++id) {
    const Element e = Element::from_id(id);
    if (in_all(e)) out.members.insert(e);
  }
  for (ColumnIndex c = 0; c < kProbeColumns && !out.infinite; ++c) {
    bool whole_tail = true;
    for (std::uint64_t k = kProbeRowBegin; k < kProbeRowBegin + kProbeRows && whole_tail; ++k) {
      whole_tail = in_all(Element::at(c, k));
    }
    out.infinite = whole_tail;
  }
  return out;
}

std::vector<SetDescriptor> column_unions(std::size_t m) {
  if (m == 0 || m > 16) throw Error("column_unions handles 1 to 16 columns");
  std::vector<SetDescriptor> out;
  for (std::uint32_t subset = 1; subset < (1u << m); ++subset) {
    ColumnSet blocks;
    for (std::size_t c = 0; c < m; ++c) {
      if (subset & (1u << c)) blocks.insert(c);
    }
    out.push_back(SetDescriptor::symbolic(std::move(blocks), {}, {}));
  }
  return out;
}

ElementSet window_members(const SetDescriptor& set, std::uint64_t max_id) {
  ElementSet out;
  for (std::uint64_t id = 0; id <= max_id; ++id) {
    const Element e = Element::from_id(id);
    if (set.contains(e)) out.insert(e);
  }
  return out;
}

}  // namespace noisygen::oracle
