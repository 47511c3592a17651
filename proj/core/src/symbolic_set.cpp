#include "noisygen/symbolic_set.hpp"

#include <algorithm>
#include <iterator>

#include "noisygen/error.hpp"

namespace noisygen {

SetDescriptor SetDescriptor::finite(ElementSet members) {
  SetDescriptor out;
  out.adds_ = std::move(members);
  return out;
}

SetDescriptor SetDescriptor::symbolic(ColumnSet blocks, ElementSet adds, ElementSet removes) {
  SetDescriptor out;
  out.blocks_ = std::move(blocks);
  for (const Element e : adds) {
    if (removes.contains(e)) continue;
    if (!out.blocks_.contains(e.column())) out.adds_.insert(e);
  }
  for (const Element e : removes) {
    if (out.blocks_.contains(e.column())) out.removes_.insert(e);
  }
  return out;
}

std::optional<std::size_t> SetDescriptor::finite_size() const noexcept {
  if (!is_finite()) return std::nullopt;
  return adds_.size();
}

bool SetDescriptor::contains(Element e) const {
  if (blocks_.contains(e.column())) return !removes_.contains(e);
  return adds_.contains(e);
}

SymbolicLanguage SymbolicLanguage::canonicalize(ColumnSet blocks, ElementSet adds,
                                                ElementSet removes) {
  if (blocks.empty()) throw Error("finite language not permitted");
  return SymbolicLanguage(
      SetDescriptor::symbolic(std::move(blocks), std::move(adds), std::move(removes)));
}

SetDescriptor intersect(const SetDescriptor& a, const SetDescriptor& b) {
  ColumnSet blocks;
  std::set_intersection(a.blocks().begin(), a.blocks().end(), b.blocks().begin(),
                        b.blocks().end(), std::inserter(blocks, blocks.end()));

  // Members of the intersection outside the common blocks are either adds of
  // a (then they must be in b) or adds of b (then they must be in a).
  ElementSet adds;
  for (const Element e : a.adds()) {
    if (b.contains(e)) adds.insert(e);
  }
  for (const Element e : b.adds()) {
    if (a.contains(e)) adds.insert(e);
  }

  ElementSet removes;
  for (const ElementSet* source : {&a.removes(), &b.removes()}) {
    for (const Element e : *source) {
      if (blocks.contains(e.column())) removes.insert(e);
    }
  }
  return SetDescriptor::symbolic(std::move(blocks), std::move(adds), std::move(removes));
}

MemberCursor::MemberCursor(SetDescriptor set) : set_(std::move(set)) {
  next_add_ = set_.adds().begin();
  for (const ColumnIndex c : set_.blocks()) {
    heads_.push(Head{Element::at(c, 0).id(), c, 0});
  }
}

std::optional<Element> MemberCursor::next() {
  for (;;) {
    const bool have_add = next_add_ != set_.adds().end();
    if (heads_.empty() && !have_add) return std::nullopt;

    if (have_add && (heads_.empty() || next_add_->id() < heads_.top().id)) {
      return *next_add_++;
    }
    const Head head = heads_.top();
    heads_.pop();
    heads_.push(Head{Element::at(head.column, head.index + 1).id(), head.column, head.index + 1});
    const Element e = Element::at(head.column, head.index);
    if (!set_.removes().contains(e)) return e;
  }
}

std::vector<Element> enumerate_canonical(const SetDescriptor& set, std::size_t n) {
  std::vector<Element> out;
  MemberCursor cursor(set);
  while (out.size() < n) {
    const auto e = cursor.next();
    if (!e) break;
    out.push_back(*e);
  }
  return out;
}

std::optional<Element> smallest_member_excluding(const SetDescriptor& set,
                                                 const ElementSet& excluded) {
  MemberCursor cursor(set);
  while (const auto e = cursor.next()) {
    if (!excluded.contains(*e)) return e;
  }
  return std::nullopt;
}

Element smallest_element_excluding(const ElementSet& excluded) {
  std::uint64_t id = 0;
  for (const Element e : excluded) {
    if (e.id() != id) break;
    ++id;
  }
  return Element::from_id(id);
}

std::string describe(const SetDescriptor& set) {
  if (set.is_finite()) return to_string(set.adds());
  std::string out = "blocks" + to_string(set.blocks());
  if (!set.adds().empty()) out += " add" + to_string(set.adds());
  if (!set.removes().empty()) out += " remove" + to_string(set.removes());
  return out;
}

}  // namespace noisygen
