#include "noisygen/collection.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "noisygen/error.hpp"

namespace noisygen {

Collection Collection::explicit_family(std::string name, std::vector<NamedLanguage> languages) {
  if (languages.empty()) throw Error("explicit collection '" + name + "' has no languages");
  std::set<std::string> names;
  for (std::size_t i = 0; i < languages.size(); ++i) {
    if (!names.insert(languages[i].name).second) {
      throw Error("duplicate language name '" + languages[i].name + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (languages[j].language == languages[i].language) {
        throw Error("languages '" + languages[j].name + "' and '" + languages[i].name +
                    "' denote the same set");
      }
    }
  }
  return Collection(std::move(name), Kind::Explicit, std::move(languages));
}

Collection Collection::column_family(std::string name) {
  return Collection(std::move(name), Kind::Columns, {});
}

std::optional<std::size_t> Collection::find(std::string_view language_name) const {
  for (std::size_t i = 0; i < languages_.size(); ++i) {
    if (languages_[i].name == language_name) return i;
  }
  return std::nullopt;
}

bool Collection::contains(const SymbolicLanguage& language) const {
  if (is_columns()) return language.adds().empty() && language.removes().empty();
  for (const auto& named : languages_) {
    if (named.language == language) return true;
  }
  return false;
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

struct LanguageDraft {
  std::string name;
  std::size_t line = 0;
  std::optional<ColumnSet> blocks;
  ElementSet adds;
  ElementSet removes;
};

ElementSet parse_elements(std::span<const std::string_view> tokens, std::size_t line) {
  ElementSet out;
  for (const auto token : tokens) {
    const auto e = parse_element(token);
    if (!e) throw ParseError(line, "malformed element '" + std::string(token) + "'");
    out.insert(*e);
  }
  return out;
}

}  // namespace

Collection parse_collection(std::string_view text) {
  std::optional<std::string> collection_name;
  std::optional<Collection::Kind> kind;
  std::vector<NamedLanguage> languages;
  std::optional<LanguageDraft> open;
  std::set<std::string> seen_names;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const auto keyword = tokens.front();
    const std::span<const std::string_view> args(tokens.begin() + 1, tokens.end());

    if (!collection_name) {
      if (keyword != "collection" || args.size() != 1) {
        throw ParseError(line_no, "expected 'collection <name>'");
      }
      collection_name = std::string(args[0]);
      continue;
    }
    if (!kind) {
      if (keyword != "family" || args.size() != 1) {
        throw ParseError(line_no, "expected 'family explicit' or 'family columns'");
      }
      if (args[0] == "explicit") {
        kind = Collection::Kind::Explicit;
      } else if (args[0] == "columns") {
        kind = Collection::Kind::Columns;
      } else {
        throw ParseError(line_no, "unknown family '" + std::string(args[0]) + "'");
      }
      continue;
    }
    if (*kind == Collection::Kind::Columns) {
      throw ParseError(line_no, "family columns takes no language bodies");
    }

    if (!open) {
      if (keyword != "language" || args.size() != 1) {
        throw ParseError(line_no, "expected 'language <name>'");
      }
      std::string name(args[0]);
      if (!seen_names.insert(name).second) {
        throw ParseError(line_no, "duplicate language name '" + name + "'");
      }
      open = LanguageDraft{std::move(name), line_no, std::nullopt, {}, {}};
      continue;
    }

    if (keyword == "blocks") {
      if (open->blocks) throw ParseError(line_no, "repeated 'blocks' line");
      ColumnSet blocks;
      for (const auto token : args) {
        ColumnIndex c = 0;
        const auto* end = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(token.data(), end, c);
        if (ec != std::errc{} || ptr != end) {
          throw ParseError(line_no, "malformed column '" + std::string(token) + "'");
        }
        blocks.insert(c);
      }
      open->blocks = std::move(blocks);
    } else if (keyword == "add") {
      open->adds.merge(parse_elements(args, line_no));
    } else if (keyword == "remove") {
      open->removes.merge(parse_elements(args, line_no));
    } else if (keyword == "end") {
      if (!args.empty()) throw ParseError(line_no, "'end' takes no arguments");
      if (!open->blocks) throw ParseError(line_no, "language '" + open->name + "' has no 'blocks' line");
      if (open->blocks->empty()) {
        throw ParseError(line_no, "language '" + open->name + "': finite language not permitted");
      }
      languages.push_back(NamedLanguage{
          open->name, SymbolicLanguage::canonicalize(std::move(*open->blocks), std::move(open->adds),
                                                     std::move(open->removes))});
      open.reset();
    } else {
      throw ParseError(line_no, "unexpected '" + std::string(keyword) + "' inside language body");
    }
  }

  if (open) throw ParseError(line_no, "language '" + open->name + "' is missing 'end'");
  if (!collection_name) throw ParseError(0, "missing 'collection' header");
  if (!kind) throw ParseError(0, "missing 'family' line");
  if (*kind == Collection::Kind::Columns) return Collection::column_family(*collection_name);
  try {
    return Collection::explicit_family(*collection_name, std::move(languages));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

std::string serialize_collection(const Collection& collection) {
  std::ostringstream out;
  out << "collection " << collection.name() << '\n';
  if (collection.is_columns()) {
    out << "family columns\n";
    return out.str();
  }
  out << "family explicit\n";
  for (const auto& [name, language] : collection.languages()) {
    out << "language " << name << '\n';
    out << "blocks";
    for (const ColumnIndex c : language.blocks()) out << ' ' << c;
    out << '\n';
    if (!language.adds().empty()) {
      out << "add";
      for (const Element e : language.adds()) out << ' ' << to_string(e);
      out << '\n';
    }
    if (!language.removes().empty()) {
      out << "remove";
      for (const Element e : language.removes()) out << ' ' << to_string(e);
      out << '\n';
    }
    out << "end\n";
  }
  return out.str();
}

Collection load_collection(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open collection file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_collection(buffer.str());
}

}  // namespace noisygen
