#pragma once

// Symbolic subsets of the universe: a finite union of columns
// B_c = {(c,k) : k in N} together with finitely many added and removed
// elements. The denoted set is (U_{c in blocks} B_c  u  adds) \ removes.
//
// Canonical form: every add lies outside the blocks, every remove lies inside
// them. Two canonical values are equal iff they denote the same set, so
// operator== is set equality.

#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "noisygen/universe.hpp"

namespace noisygen {

class SetDescriptor {
 public:
  /// The empty set.
  SetDescriptor() = default;

  static SetDescriptor finite(ElementSet members);

  /// Canonicalizes. `blocks` may be empty, giving a finite set.
  static SetDescriptor symbolic(ColumnSet blocks, ElementSet adds, ElementSet removes);

  bool is_finite() const noexcept { return blocks_.empty(); }
  bool empty() const noexcept { return blocks_.empty() && adds_.empty(); }

  /// Number of members of a finite descriptor; nullopt when infinite.
  std::optional<std::size_t> finite_size() const noexcept;

  bool contains(Element e) const;

  const ColumnSet& blocks() const noexcept { return blocks_; }
  const ElementSet& adds() const noexcept { return adds_; }
  const ElementSet& removes() const noexcept { return removes_; }

  bool operator==(const SetDescriptor&) const = default;

 private:
  ColumnSet blocks_;
  ElementSet adds_;
  ElementSet removes_;
};

/// An infinite language: a SetDescriptor with at least one block.
class SymbolicLanguage {
 public:
  /// Throws Error("finite language not permitted") when `blocks` is empty.
  /// An element that is both added and removed is dropped from the adds;
  /// the removal survives only if its column is a block.
  static SymbolicLanguage canonicalize(ColumnSet blocks, ElementSet adds = {},
                                       ElementSet removes = {});

  const SetDescriptor& as_set() const noexcept { return set_; }
  operator const SetDescriptor&() const noexcept { return set_; }  // NOLINT

  const ColumnSet& blocks() const noexcept { return set_.blocks(); }
  const ElementSet& adds() const noexcept { return set_.adds(); }
  const ElementSet& removes() const noexcept { return set_.removes(); }

  bool contains(Element e) const { return set_.contains(e); }

  bool operator==(const SymbolicLanguage&) const = default;

 private:
  explicit SymbolicLanguage(SetDescriptor set) : set_(std::move(set)) {}

  SetDescriptor set_;
};

inline bool member(const SetDescriptor& set, Element e) { return set.contains(e); }
inline bool member(const SymbolicLanguage& language, Element e) { return language.contains(e); }

SetDescriptor intersect(const SetDescriptor& a, const SetDescriptor& b);

/// Yields the members of a descriptor in ascending id order.
class MemberCursor {
 public:
  explicit MemberCursor(SetDescriptor set);

  std::optional<Element> next();

 private:
  struct Head {
    std::uint64_t id;
    ColumnIndex column;
    std::uint64_t index;
    bool operator>(const Head& other) const { return id > other.id; }
  };

  SetDescriptor set_;
  std::priority_queue<Head, std::vector<Head>, std::greater<>> heads_;
  ElementSet::const_iterator next_add_;
};

/// The `n` smallest members by id (fewer if the set is finite and smaller).
std::vector<Element> enumerate_canonical(const SetDescriptor& set, std::size_t n);

/// Smallest member of `set` outside `excluded`, if any.
std::optional<Element> smallest_member_excluding(const SetDescriptor& set,
                                                 const ElementSet& excluded);

/// Smallest universe element outside `excluded`.
Element smallest_element_excluding(const ElementSet& excluded);

/// "blocks{0,1} add{(2,0)} remove{(0,3)}"; finite sets print as "{...}".
std::string describe(const SetDescriptor& set);

}  // namespace noisygen
