#pragma once

// The countable universe N x N, encoded as nonnegative integers with the
// Cantor pairing function. Ids give the canonical total order used for
// enumeration and every tie-break in the library.

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace noisygen {

using ColumnIndex = std::uint64_t;

class Element {
 public:
  constexpr Element() = default;

  /// The element (column, index); its id is (c+k)(c+k+1)/2 + k.
  static constexpr Element at(std::uint64_t column, std::uint64_t index) {
    const std::uint64_t s = column + index;
    return Element(column, index, s * (s + 1) / 2 + index);
  }

  static Element from_id(std::uint64_t id);

  constexpr std::uint64_t column() const noexcept { return column_; }
  constexpr std::uint64_t index() const noexcept { return index_; }
  constexpr std::uint64_t id() const noexcept { return id_; }

  friend constexpr bool operator==(Element a, Element b) noexcept { return a.id_ == b.id_; }
  friend constexpr std::strong_ordering operator<=>(Element a, Element b) noexcept {
    return a.id_ <=> b.id_;
  }

 private:
  constexpr Element(std::uint64_t column, std::uint64_t index, std::uint64_t id)
      : column_(column), index_(index), id_(id) {}

  std::uint64_t column_ = 0;
  std::uint64_t index_ = 0;
  std::uint64_t id_ = 0;
};

/// Ordered by id.
using ElementSet = std::set<Element>;
using ColumnSet = std::set<ColumnIndex>;

constexpr Element encode_element(std::uint64_t column, std::uint64_t index) {
  return Element::at(column, index);
}

inline Element decode_element(std::uint64_t id) { return Element::from_id(id); }

constexpr ColumnIndex column_of(Element e) noexcept { return e.column(); }

/// "(c,k)"
std::string to_string(Element e);

/// Strict inverse of to_string: no whitespace, decimal digits only.
std::optional<Element> parse_element(std::string_view token);

/// "{(c,k),(c,k)}" in id order.
std::string to_string(const ElementSet& elements);

/// "{c,c}" ascending.
std::string to_string(const ColumnSet& columns);

}  // namespace noisygen
