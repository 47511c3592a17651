#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "noisygen/symbolic_set.hpp"

namespace noisygen {

struct NamedLanguage {
  std::string name;
  SymbolicLanguage language;

  bool operator==(const NamedLanguage&) const = default;
};

/// Either an explicit, finite list of named languages, or the column family:
/// every nonempty union of columns. The column family stores nothing; the
/// closure and dimension operators use closed forms for it.
class Collection {
 public:
  enum class Kind { Explicit, Columns };

  /// Throws Error when `languages` is empty, names repeat, or two languages
  /// denote the same set.
  static Collection explicit_family(std::string name, std::vector<NamedLanguage> languages);
  static Collection column_family(std::string name);

  const std::string& name() const noexcept { return name_; }
  Kind kind() const noexcept { return kind_; }
  bool is_columns() const noexcept { return kind_ == Kind::Columns; }

  /// Empty for the column family.
  std::span<const NamedLanguage> languages() const noexcept { return languages_; }
  std::size_t size() const noexcept { return languages_.size(); }

  std::optional<std::size_t> find(std::string_view language_name) const;

  /// Whether `language` is a member of the collection (by denotation).
  bool contains(const SymbolicLanguage& language) const;

  bool operator==(const Collection&) const = default;

 private:
  Collection(std::string name, Kind kind, std::vector<NamedLanguage> languages)
      : name_(std::move(name)), kind_(kind), languages_(std::move(languages)) {}

  std::string name_;
  Kind kind_ = Kind::Explicit;
  std::vector<NamedLanguage> languages_;
};

/// Line-oriented collection format:
///
///   collection <name>
///   family explicit|columns
///   language <name>
///   blocks <c> <c> ...
///   add (<c>,<k>) ...        optional
///   remove (<c>,<k>) ...     optional
///   end
///
/// `#` starts a comment; blank lines are ignored. Throws ParseError.
Collection parse_collection(std::string_view text);

/// Inverse of parse_collection for canonical values: lists ascending, one
/// space between tokens, no blank lines, trailing newline.
std::string serialize_collection(const Collection& collection);

Collection load_collection(const std::string& path);

}  // namespace noisygen
